#include "npls/graph/family.hpp"

#include <algorithm>
#include <memory>

namespace npls::graph
{
    using search::PointId;

    namespace
    {
        auto where(std::uint64_t problem, std::uint64_t node) -> std::string
        {
            return "problem " + std::to_string(problem) + " node " + std::to_string(node);
        }
    }

    auto problem_solutions(const GraphProblem & p) -> std::vector<std::uint64_t>
    {
        std::vector<std::uint64_t> result;
        for (std::uint64_t v = 0; v < p.graph.n_nodes; ++v) {
            bool solved = p.rank == 0 ? ! steepest_successor(p.graph, v).has_value() : p.graph.has_edge(v, v);
            if (solved)
                result.push_back(v);
        }
        return result;
    }

    void check_family(const NestedGraphFamily & f)
    {
        if (f.problems.empty())
            throw GraphError(GraphErrc::malformed, "family has no problems");
        if (f.top >= f.problems.size())
            throw GraphError(GraphErrc::malformed, "top problem " + std::to_string(f.top) + " out of range");

        for (std::uint64_t p = 0; p < f.problems.size(); ++p) {
            auto & prob = f.problems[p];
            auto & g = prob.graph;
            check_shape(g);
            if (g.n_nodes == 0)
                throw GraphError(GraphErrc::malformed, "problem " + std::to_string(p) + " has no nodes");
            if (auto bad = cost_condition_counterexample(g))
                throw GraphError(GraphErrc::cost_condition_violated,
                    "problem " + std::to_string(p) + " edge (" + std::to_string(bad->first) + ", "
                        + std::to_string(bad->second) + ") does not decrease cost");
            for (std::uint64_t v = 0; v < g.n_nodes; ++v)
                if (g.successors(v).empty())
                    throw GraphError(GraphErrc::totality_violated, where(p, v) + " has no out-edge");

            if (prob.rank == 0)
                continue;

            for (std::uint64_t v = 0; v < g.n_nodes; ++v) {
                if (g.has_edge(v, v))
                    continue;
                auto child = prob.children.find(v);
                if (child == prob.children.end())
                    throw GraphError(GraphErrc::totality_violated, where(p, v) + " has neither self-loop nor child");
                if (child->second >= f.problems.size())
                    throw GraphError(GraphErrc::malformed, where(p, v) + " names a missing child problem");
                auto & sub = f.problems[child->second];
                if (! (sub.rank < prob.rank))
                    throw GraphError(GraphErrc::rank_violation,
                        where(p, v) + ": child problem " + std::to_string(child->second) + " has rank "
                            + std::to_string(sub.rank) + ", not below " + std::to_string(prob.rank));
                for (auto z : problem_solutions(sub)) {
                    auto mapped = prob.solution_to_edge.find({v, z});
                    if (mapped == prob.solution_to_edge.end())
                        throw GraphError(GraphErrc::totality_violated,
                            where(p, v) + ": child solution " + std::to_string(z) + " has no mapped edge");
                    if (! g.has_edge(v, mapped->second) || mapped->second == v)
                        throw GraphError(GraphErrc::totality_violated,
                            where(p, v) + ": child solution " + std::to_string(z) + " maps to non-edge "
                                + std::to_string(mapped->second));
                }
            }
        }
    }

    auto layout_of(const NestedGraphFamily & f) -> FamilyLayout
    {
        std::uint64_t widest = 1;
        for (auto & p : f.problems)
            widest = std::max(widest, p.graph.n_nodes);
        return FamilyLayout{id_bits(f.problems.size()), id_bits(widest)};
    }

    auto npls_from_family(const NestedGraphFamily & f, bool checked) -> search::NplsInstance
    {
        if (checked)
            check_family(f);
        if (f.problems.empty())
            throw GraphError(GraphErrc::malformed, "family has no problems");

        auto fam = std::make_shared<const NestedGraphFamily>(f);
        auto layout = layout_of(f);

        auto is_source = [fam](PointId s) { return s.bits < fam->problems.size(); };
        auto is_target = [fam, layout, is_source](PointId s, PointId t) {
            if (! is_source(s) || t.bits >> layout.d() != 0)
                return false;
            return layout.problem_of(t) == s.bits && layout.node_of(t) < fam->problems[s.bits].graph.n_nodes;
        };
        auto step0 = [fam, layout](PointId s, PointId y) {
            auto & g = fam->problems[s.bits].graph;
            auto next = steepest_successor(g, layout.node_of(y));
            return next ? layout.pack(s.bits, *next) : y;
        };

        search::NplsInstance inst;
        inst.d_bound = search::Polynomial::constant(layout.d());
        inst.sources = [is_source](std::uint64_t, PointId s) { return is_source(s); };
        inst.targets = [is_target](std::uint64_t, PointId s, PointId t) { return is_target(s, t); };
        inst.neighbor = [fam, layout, is_target, step0](std::uint64_t, PointId s, PointId y, PointId z) {
            if (! is_target(s, y) || ! is_target(s, z))
                return false;
            auto & prob = fam->problems[s.bits];
            if (prob.rank == 0)
                return step0(s, y) == z;
            return prob.graph.has_edge(layout.node_of(y), layout.node_of(z));
        };
        inst.rank0_neighbor = [fam, is_target, step0](std::uint64_t, PointId s, PointId y) {
            if (! is_target(s, y))
                throw search::SearchError(search::SearchErrc::partial_function_undefined,
                    "rank-0 neighbour of non-target " + std::to_string(y.bits) + " in row " + std::to_string(s.bits));
            if (fam->problems[s.bits].rank != 0)
                throw search::SearchError(search::SearchErrc::partial_function_undefined,
                    "rank-0 neighbour requested in row " + std::to_string(s.bits) + " of positive rank");
            return step0(s, y);
        };
        inst.initial_source = [top = f.top](std::uint64_t) { return PointId{top}; };
        inst.initial_target = [layout](std::uint64_t, PointId s) { return layout.pack(s.bits, 0); };
        inst.cost = [fam, layout](std::uint64_t, PointId t) -> std::uint64_t {
            auto p = layout.problem_of(t);
            if (t.bits >> layout.d() != 0 || p >= fam->problems.size())
                return 0;
            auto & g = fam->problems[p].graph;
            auto v = layout.node_of(t);
            return v < g.n_nodes ? g.cost[v] : 0;
        };
        inst.gen_source = [fam, layout, is_target](std::uint64_t, PointId s, PointId y) {
            if (! is_target(s, y))
                return s;
            auto & prob = fam->problems[s.bits];
            auto v = layout.node_of(y);
            if (prob.graph.has_edge(v, v))
                return s;
            auto child = prob.children.find(v);
            return child == prob.children.end() ? s : PointId{child->second};
        };
        inst.extract = [fam, layout, is_target](std::uint64_t, PointId s, PointId y, PointId z) {
            if (! is_target(s, y))
                return y;
            auto & prob = fam->problems[s.bits];
            auto mapped = prob.solution_to_edge.find({layout.node_of(y), layout.node_of(z)});
            return mapped == prob.solution_to_edge.end() ? y : layout.pack(s.bits, mapped->second);
        };
        inst.rank = [fam](std::uint64_t, PointId s) -> std::uint64_t {
            return s.bits < fam->problems.size() ? fam->problems[s.bits].rank : 0;
        };
        return inst;
    }

    auto family_from_digraph(const CostedDigraph & g) -> NestedGraphFamily
    {
        NestedGraphFamily f;
        f.problems.push_back(GraphProblem{g, 0, {}, {}});
        f.top = 0;
        return f;
    }
}
