#pragma once

#include "npls/search/trace.hpp"
#include "npls/search/types.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>

namespace npls::search
{
    /// A PLS problem with a neighbourhood function. Solutions are the feasible
    /// fixed points of `neighbor`.
    struct PlsInstance
    {
        Polynomial d_bound;
        std::function<bool(std::uint64_t x, PointId s)> feasible;
        std::function<PointId(std::uint64_t x)> initial;
        std::function<PointId(std::uint64_t x, PointId s)> neighbor;
        std::function<std::uint64_t(std::uint64_t x, PointId s)> cost;
    };

    /// The neighbourhood-predicate variant, where every feasible point has at
    /// most p(|x|) feasible neighbours and solutions are local minima.
    struct PredicatePls
    {
        Polynomial d_bound;
        std::function<bool(std::uint64_t x, PointId s)> feasible;
        std::function<PointId(std::uint64_t x)> initial;
        std::function<bool(std::uint64_t x, PointId s, PointId t)> neighbor_rel;
        std::function<std::uint64_t(std::uint64_t x, PointId s)> cost;
        Polynomial p_bound;
    };

    /// Default step budget 2^(d(|x|)+2), saturating.
    auto default_step_budget(const Polynomial & d_bound, std::uint64_t x) -> std::uint64_t;

    /// Walks the cost-descending orbit of initial(x) to a fixed point of the
    /// neighbourhood function. Every visited point gets one trace record.
    auto solve_pls(const PlsInstance & inst, std::uint64_t x, std::optional<std::uint64_t> max_steps = std::nullopt)
        -> std::pair<PointId, SearchTrace>;

    /// Feasible neighbours of s, found by enumerating the d-bit space.
    auto neighbor_set(const PredicatePls & inst, std::uint64_t x, PointId s) -> std::vector<PointId>;

    /// True iff no feasible neighbour of s is cheaper than s. Throws
    /// cardinality_bound_violated if s has more than p(|x|) neighbours.
    auto local_minimum_check(const PredicatePls & inst, std::uint64_t x, PointId s) -> bool;

    /// Replaces the neighbourhood predicate by N' with N'(s,s) marking exactly
    /// the solutions: N'(s,t) <=> (s != t && N(s,t)) || (s == t && s is a local minimum).
    auto derive_self_loop_predicate(const PredicatePls & inst) -> PredicatePls;

    /// Function form of a predicate PLS by steepest descent: the cheapest strictly
    /// cheaper neighbour (smallest id on ties), or s itself at a local minimum.
    auto steepest_descent_pls(const PredicatePls & inst) -> PlsInstance;
}
