#pragma once

#include "npls/search/pls.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace npls::graph
{
    enum class GraphErrc
    {
        cost_condition_violated,
        cardinality_bound_violated,
        rank_violation,
        totality_violated,
        malformed,
    };

    auto to_string(GraphErrc code) -> std::string;

    class GraphError : public std::runtime_error
    {
    public:
        GraphError(GraphErrc code, const std::string & message);

        auto code() const noexcept -> GraphErrc { return code_; }

    private:
        GraphErrc code_;
    };

    using Edge = std::pair<std::uint64_t, std::uint64_t>;

    /// Directed graph on nodes 0..n_nodes-1 with a cost per node. Conforming
    /// graphs only have edges to strictly cheaper nodes, plus self-loops.
    struct CostedDigraph
    {
        std::uint64_t n_nodes = 0;
        std::set<Edge> edges;
        std::vector<std::uint64_t> cost;

        auto has_edge(std::uint64_t s, std::uint64_t t) const -> bool { return edges.contains({s, t}); }
        auto successors(std::uint64_t s) const -> std::vector<std::uint64_t>;

        auto operator==(const CostedDigraph &) const -> bool = default;
    };

    /// Throws malformed if the cost vector or an edge does not fit n_nodes.
    void check_shape(const CostedDigraph & g);

    /// First edge (s,t), s != t, with cost(s) <= cost(t).
    auto cost_condition_counterexample(const CostedDigraph & g) -> std::optional<Edge>;

    /// Cheapest strictly cheaper successor (smallest id on ties).
    auto steepest_successor(const CostedDigraph & g, std::uint64_t s) -> std::optional<std::uint64_t>;

    auto is_sink(const CostedDigraph & g, std::uint64_t s) -> bool;

    /// Follows steepest cost-decreasing edges from start to a node without an
    /// edge to a distinct node.
    auto find_sink(const CostedDigraph & g, std::uint64_t start) -> std::uint64_t;

    /// A cycle through at least two distinct nodes, if any.
    auto nontrivial_cycle(const CostedDigraph & g) -> std::optional<std::vector<std::uint64_t>>;

    /// The PLS of g: feasible = nodes, neighbourhood = cost-decreasing edges.
    /// p_bound defaults to the largest such out-degree (at least 1).
    auto pls_from_digraph(const CostedDigraph & g, std::uint64_t start, std::optional<std::uint64_t> p_bound = std::nullopt)
        -> search::PredicatePls;

    /// Bits needed for ids 0..count-1, at least 1.
    auto id_bits(std::uint64_t count) -> unsigned;
}
