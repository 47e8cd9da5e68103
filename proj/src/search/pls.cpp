#include "npls/search/pls.hpp"

#include <limits>
#include <string>

namespace npls::search
{
    namespace
    {
        constexpr unsigned max_enumeration_bits = 24;

        auto describe(PointId p) -> std::string
        {
            return std::to_string(p.bits);
        }
    }

    auto default_step_budget(const Polynomial & d_bound, std::uint64_t x) -> std::uint64_t
    {
        auto d = d_bound.at_length_of(x);
        if (d + 2 >= 64)
            return std::numeric_limits<std::uint64_t>::max();
        return std::uint64_t{1} << (d + 2);
    }

    auto solve_pls(const PlsInstance & inst, std::uint64_t x, std::optional<std::uint64_t> max_steps)
        -> std::pair<PointId, SearchTrace>
    {
        auto budget = max_steps.value_or(default_step_budget(inst.d_bound, x));
        if (budget == 0)
            throw SearchError(SearchErrc::invariant_violation, "max_steps must be positive");

        SearchTrace trace;
        const auto start = inst.initial(x);
        auto s = start;
        if (! inst.feasible(x, s))
            throw SearchError(SearchErrc::invariant_violation, "initial point " + describe(s) + " is not feasible");

        auto action = StepAction::init_target;
        while (true) {
            if (trace.steps.size() >= budget)
                throw SearchError(SearchErrc::step_budget_exceeded,
                    "no fixed point after " + std::to_string(budget) + " steps");

            auto cost = inst.cost(x, s);
            auto next = inst.neighbor(x, s);
            if (next == s) {
                trace.steps.push_back({start, s, 0, cost, StepAction::solved, 0});
                return {s, std::move(trace)};
            }
            trace.steps.push_back({start, s, 0, cost, action, 0});

            if (! inst.feasible(x, next))
                throw SearchError(SearchErrc::invariant_violation,
                    "neighbour " + describe(next) + " of " + describe(s) + " left the feasible set");
            if (! (inst.cost(x, next) < cost))
                throw SearchError(SearchErrc::invariant_violation,
                    "neighbour " + describe(next) + " of " + describe(s) + " does not decrease cost");

            s = next;
            action = StepAction::rank0_step;
        }
    }

    auto neighbor_set(const PredicatePls & inst, std::uint64_t x, PointId s) -> std::vector<PointId>
    {
        auto domain = enumerable_domain(inst.d_bound.at_length_of(x), max_enumeration_bits);
        auto bound = inst.p_bound.at_length_of(x);
        std::vector<PointId> result;
        for (std::uint64_t t = 0; t < domain; ++t) {
            PointId candidate{t};
            if (inst.neighbor_rel(x, s, candidate) && inst.feasible(x, candidate)) {
                result.push_back(candidate);
                if (result.size() > bound)
                    throw SearchError(SearchErrc::cardinality_bound_violated,
                        "point " + describe(s) + " has more than " + std::to_string(bound) + " neighbours");
            }
        }
        return result;
    }

    auto local_minimum_check(const PredicatePls & inst, std::uint64_t x, PointId s) -> bool
    {
        auto cost = inst.cost(x, s);
        for (auto t : neighbor_set(inst, x, s))
            if (inst.cost(x, t) < cost)
                return false;
        return true;
    }

    auto derive_self_loop_predicate(const PredicatePls & inst) -> PredicatePls
    {
        auto result = inst;
        result.neighbor_rel = [inst](std::uint64_t x, PointId s, PointId t) {
            if (s != t)
                return inst.neighbor_rel(x, s, t);
            return local_minimum_check(inst, x, s);
        };
        return result;
    }

    auto steepest_descent_pls(const PredicatePls & inst) -> PlsInstance
    {
        PlsInstance result;
        result.d_bound = inst.d_bound;
        result.feasible = inst.feasible;
        result.initial = inst.initial;
        result.cost = inst.cost;
        result.neighbor = [inst](std::uint64_t x, PointId s) {
            auto best = s;
            auto best_cost = inst.cost(x, s);
            for (auto t : neighbor_set(inst, x, s)) {
                auto c = inst.cost(x, t);
                if (c < best_cost) {
                    best = t;
                    best_cost = c;
                }
            }
            return best;
        };
        return result;
    }
}
