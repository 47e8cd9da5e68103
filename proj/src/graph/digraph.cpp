#include "npls/graph/digraph.hpp"

#include <algorithm>
#include <functional>

namespace npls::graph
{
    auto to_string(GraphErrc code) -> std::string
    {
        switch (code) {
        case GraphErrc::cost_condition_violated: return "CostConditionViolated";
        case GraphErrc::cardinality_bound_violated: return "CardinalityBoundViolated";
        case GraphErrc::rank_violation: return "RankViolation";
        case GraphErrc::totality_violated: return "TotalityViolated";
        case GraphErrc::malformed: return "MalformedGraph";
        }
        return "GraphError";
    }

    GraphError::GraphError(GraphErrc code, const std::string & message) :
        std::runtime_error(to_string(code) + ": " + message),
        code_(code)
    {
    }

    auto CostedDigraph::successors(std::uint64_t s) const -> std::vector<std::uint64_t>
    {
        std::vector<std::uint64_t> result;
        for (auto it = edges.lower_bound({s, 0}); it != edges.end() && it->first == s; ++it)
            result.push_back(it->second);
        return result;
    }

    void check_shape(const CostedDigraph & g)
    {
        if (g.cost.size() != g.n_nodes)
            throw GraphError(GraphErrc::malformed,
                "cost vector has " + std::to_string(g.cost.size()) + " entries for " + std::to_string(g.n_nodes)
                    + " nodes");
        for (auto [s, t] : g.edges)
            if (s >= g.n_nodes || t >= g.n_nodes)
                throw GraphError(GraphErrc::malformed,
                    "edge (" + std::to_string(s) + ", " + std::to_string(t) + ") leaves the node range");
    }

    auto cost_condition_counterexample(const CostedDigraph & g) -> std::optional<Edge>
    {
        for (auto [s, t] : g.edges)
            if (s != t && ! (g.cost.at(s) > g.cost.at(t)))
                return Edge{s, t};
        return std::nullopt;
    }

    auto steepest_successor(const CostedDigraph & g, std::uint64_t s) -> std::optional<std::uint64_t>
    {
        std::optional<std::uint64_t> best;
        for (auto t : g.successors(s)) {
            if (t == s || ! (g.cost[t] < g.cost[s]))
                continue;
            if (! best || g.cost[t] < g.cost[*best])
                best = t;
        }
        return best;
    }

    auto is_sink(const CostedDigraph & g, std::uint64_t s) -> bool
    {
        for (auto t : g.successors(s))
            if (t != s)
                return false;
        return true;
    }

    auto find_sink(const CostedDigraph & g, std::uint64_t start) -> std::uint64_t
    {
        check_shape(g);
        if (start >= g.n_nodes)
            throw GraphError(GraphErrc::malformed, "start node " + std::to_string(start) + " out of range");
        if (auto bad = cost_condition_counterexample(g))
            throw GraphError(GraphErrc::cost_condition_violated,
                "edge (" + std::to_string(bad->first) + ", " + std::to_string(bad->second) + ") does not decrease cost");

        auto v = start;
        while (auto next = steepest_successor(g, v))
            v = *next;
        return v;
    }

    auto nontrivial_cycle(const CostedDigraph & g) -> std::optional<std::vector<std::uint64_t>>
    {
        enum class Mark { fresh, open, done };
        std::vector<Mark> mark(g.n_nodes, Mark::fresh);
        std::vector<std::uint64_t> stack;
        std::optional<std::vector<std::uint64_t>> found;

        std::function<bool(std::uint64_t)> visit = [&](std::uint64_t v) {
            mark[v] = Mark::open;
            stack.push_back(v);
            for (auto t : g.successors(v)) {
                if (t == v)
                    continue;
                if (mark[t] == Mark::open) {
                    auto from = std::find(stack.begin(), stack.end(), t);
                    found = std::vector<std::uint64_t>(from, stack.end());
                    return true;
                }
                if (mark[t] == Mark::fresh && visit(t))
                    return true;
            }
            stack.pop_back();
            mark[v] = Mark::done;
            return false;
        };

        for (std::uint64_t v = 0; v < g.n_nodes; ++v)
            if (mark[v] == Mark::fresh && visit(v))
                break;
        return found;
    }

    auto pls_from_digraph(const CostedDigraph & g, std::uint64_t start, std::optional<std::uint64_t> p_bound)
        -> search::PredicatePls
    {
        using search::PointId;
        check_shape(g);
        if (start >= g.n_nodes)
            throw GraphError(GraphErrc::malformed, "start node " + std::to_string(start) + " out of range");

        std::uint64_t widest = 1;
        std::uint64_t widest_node = 0;
        for (std::uint64_t s = 0; s < g.n_nodes; ++s) {
            std::uint64_t degree = 0;
            for (auto t : g.successors(s))
                if (t != s && g.cost[t] < g.cost[s])
                    ++degree;
            if (degree > widest) {
                widest = degree;
                widest_node = s;
            }
        }
        auto p = p_bound.value_or(widest);
        if (widest > p)
            throw GraphError(GraphErrc::cardinality_bound_violated,
                "node " + std::to_string(widest_node) + " has " + std::to_string(widest) + " neighbours, bound is "
                    + std::to_string(p));

        search::PredicatePls inst;
        inst.d_bound = search::Polynomial::constant(id_bits(g.n_nodes));
        inst.feasible = [n = g.n_nodes](std::uint64_t, PointId s) { return s.bits < n; };
        inst.initial = [start](std::uint64_t) { return PointId{start}; };
        inst.neighbor_rel = [g](std::uint64_t, PointId s, PointId t) {
            return s.bits < g.n_nodes && t.bits < g.n_nodes && g.has_edge(s.bits, t.bits)
                && g.cost[s.bits] > g.cost[t.bits];
        };
        inst.cost = [g](std::uint64_t, PointId s) -> std::uint64_t { return s.bits < g.n_nodes ? g.cost[s.bits] : 0; };
        inst.p_bound = search::Polynomial::constant(p);
        return inst;
    }

    auto id_bits(std::uint64_t count) -> unsigned
    {
        return count <= 2 ? 1 : search::bit_length(count - 1);
    }
}
