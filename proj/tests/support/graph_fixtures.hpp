#pragma once

#include "npls/graph/family.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace npls::testing
{
    /// G1: six nodes, costs 5,4,4,2,1,0, seven cost-decreasing edges, sink 5.
    auto g1_graph() -> graph::CostedDigraph;

    /// Chain n-1 -> ... -> 0 with cost = node id.
    auto chain_graph(std::uint64_t n) -> graph::CostedDigraph;

    /// Random conforming digraph with distinct costs and no self-loops.
    auto random_dag(std::mt19937_64 & rng, std::uint64_t n) -> graph::CostedDigraph;

    /// Nodes with no edge to a distinct node, by scanning every edge.
    auto brute_force_sinks(const graph::CostedDigraph & g) -> std::vector<std::uint64_t>;
}
