#pragma once

#include "npls/graph/digraph.hpp"
#include "npls/search/npls.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace npls::graph
{
    /// One search problem of a nested family. At rank > 0 each node without a
    /// self-loop is backed by a child problem of lower rank, and every solution
    /// of that child is mapped to an out-edge of the node.
    struct GraphProblem
    {
        CostedDigraph graph;
        std::uint64_t rank = 0;
        std::map<std::uint64_t, std::uint64_t> children;
        std::map<std::pair<std::uint64_t, std::uint64_t>, std::uint64_t> solution_to_edge;

        auto operator==(const GraphProblem &) const -> bool = default;
    };

    /// Problems are shared: several nodes may point at the same child.
    struct NestedGraphFamily
    {
        std::vector<GraphProblem> problems;
        std::uint64_t top = 0;

        auto operator==(const NestedGraphFamily &) const -> bool = default;
    };

    /// Solutions of a problem: at rank 0 the nodes without a cost-decreasing
    /// successor, above rank 0 the nodes with a self-loop.
    auto problem_solutions(const GraphProblem & p) -> std::vector<std::uint64_t>;

    /// Throws GraphError for the first broken invariant: shape, cost
    /// condition, totality, child rank, or solution_to_edge coverage.
    void check_family(const NestedGraphFamily & f);

    /// Point layout: a source is a problem id; a target packs (problem, node)
    /// as (problem << node_bits) | node.
    struct FamilyLayout
    {
        unsigned problem_bits = 1;
        unsigned node_bits = 1;

        auto d() const -> unsigned { return problem_bits + node_bits; }
        auto pack(std::uint64_t problem, std::uint64_t node) const -> search::PointId
        {
            return search::PointId{(problem << node_bits) | node};
        }
        auto problem_of(search::PointId t) const -> std::uint64_t { return t.bits >> node_bits; }
        auto node_of(search::PointId t) const -> std::uint64_t { return t.bits & ((std::uint64_t{1} << node_bits) - 1); }
    };

    auto layout_of(const NestedGraphFamily & f) -> FamilyLayout;

    /// The nPLS of a family. With checked = false the family invariants are
    /// not enforced, so broken families can be handed to the verifier.
    auto npls_from_family(const NestedGraphFamily & f, bool checked = true) -> search::NplsInstance;

    /// Single-problem, rank-0 family.
    auto family_from_digraph(const CostedDigraph & g) -> NestedGraphFamily;

    /// Seeded random family. Ranks 0..max_rank-1 each get a pool of
    /// max(1, max_width/2) problems; the top problem has rank max_rank and
    /// exactly max_width nodes. Output is bit-exact for a given seed.
    auto generate_family(std::uint64_t seed, std::uint64_t max_rank, std::uint64_t max_width) -> NestedGraphFamily;

    inline constexpr std::uint64_t max_generated_rank = 4;
    inline constexpr std::uint64_t max_generated_width = 16;
}
