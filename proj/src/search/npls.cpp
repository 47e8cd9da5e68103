#include "npls/search/npls.hpp"

#include <limits>
#include <string>

namespace npls::search
{
    namespace
    {
        auto describe(PointId p) -> std::string
        {
            return std::to_string(p.bits);
        }

        class NestedSolver
        {
        public:
            NestedSolver(const NplsInstance & inst, std::uint64_t x, std::uint64_t budget) :
                inst_(inst),
                x_(x),
                budget_(budget)
            {
            }

            auto solve_row(PointId s, unsigned level, StepAction arrival) -> PointId
            {
                const auto rank = inst_.rank(x_, s);
                auto y = inst_.initial_target(x_, s);
                if (! inst_.targets(x_, s, y))
                    throw SearchError(SearchErrc::invariant_violation,
                        "initial target " + describe(y) + " of source " + describe(s) + " is not a target");

                auto action = arrival;
                while (true) {
                    check_budget();
                    const auto cost = inst_.cost(x_, y);

                    if (rank == 0) {
                        auto z = inst_.rank0_neighbor(x_, s, y);
                        if (z == y) {
                            record(s, y, rank, cost, StepAction::solved, level);
                            return y;
                        }
                        record(s, y, rank, cost, action, level);
                        if (! inst_.targets(x_, s, z))
                            throw SearchError(SearchErrc::rank0_self_loop_missing,
                                "rank-0 step from " + describe(y) + " left the targets of source " + describe(s));
                        if (! (inst_.cost(x_, z) < cost))
                            throw SearchError(SearchErrc::cost_violation,
                                "rank-0 step " + describe(y) + " -> " + describe(z) + " in row " + describe(s)
                                    + " does not decrease cost");
                        y = z;
                        action = StepAction::rank0_step;
                        continue;
                    }

                    if (inst_.neighbor(x_, s, y, y)) {
                        record(s, y, rank, cost, StepAction::solved, level);
                        return y;
                    }
                    record(s, y, rank, cost, action, level);

                    auto child = inst_.gen_source(x_, s, y);
                    if (! inst_.sources(x_, child))
                        throw SearchError(SearchErrc::invariant_violation,
                            "generated source " + describe(child) + " of (" + describe(s) + ", " + describe(y)
                                + ") is not a source");
                    if (! (inst_.rank(x_, child) < rank))
                        throw SearchError(SearchErrc::rank_violation,
                            "generated source " + describe(child) + " does not have smaller rank than "
                                + describe(s));

                    auto z = solve_row(child, level + 1, StepAction::descend);
                    auto u = inst_.extract(x_, s, y, z);
                    if (! inst_.neighbor(x_, s, y, u))
                        throw SearchError(SearchErrc::invariant_violation,
                            "extracted result " + describe(u) + " is not a neighbour of " + describe(y) + " in row "
                                + describe(s));
                    if (! (inst_.cost(x_, u) < cost))
                        throw SearchError(SearchErrc::cost_violation,
                            "extracted result " + describe(u) + " does not decrease the cost of " + describe(y));
                    y = u;
                    action = StepAction::extract;
                }
            }

            auto take_trace() -> SearchTrace { return std::move(trace_); }

        private:
            void check_budget() const
            {
                if (trace_.steps.size() >= budget_)
                    throw SearchError(SearchErrc::step_budget_exceeded,
                        "no solution after " + std::to_string(budget_) + " steps");
            }

            void record(PointId s, PointId y, std::uint64_t rank, std::uint64_t cost, StepAction action, unsigned level)
            {
                trace_.steps.push_back({s, y, rank, cost, action, level});
            }

            const NplsInstance & inst_;
            std::uint64_t x_;
            std::uint64_t budget_;
            SearchTrace trace_;
        };
    }

    auto is_solution(const NplsInstance & inst, std::uint64_t x, PointId y) -> bool
    {
        return inst.neighbor(x, inst.initial_source(x), y, y);
    }

    auto solve_npls_from(const NplsInstance & inst, std::uint64_t x, PointId s, std::optional<std::uint64_t> max_steps)
        -> std::pair<PointId, SearchTrace>
    {
        auto budget = max_steps.value_or(default_step_budget(inst.d_bound, x));
        if (budget == 0)
            throw SearchError(SearchErrc::invariant_violation, "max_steps must be positive");
        if (! inst.sources(x, s))
            throw SearchError(SearchErrc::invariant_violation, "start " + describe(s) + " is not a source");

        NestedSolver solver(inst, x, budget);
        auto y = solver.solve_row(s, 0, StepAction::init_target);
        if (! inst.neighbor(x, s, y, y))
            throw SearchError(SearchErrc::invariant_violation, "returned target " + describe(y) + " is not a solution");
        return {y, solver.take_trace()};
    }

    auto solve_npls(const NplsInstance & inst, std::uint64_t x, std::optional<std::uint64_t> max_steps)
        -> std::pair<PointId, SearchTrace>
    {
        return solve_npls_from(inst, x, inst.initial_source(x), max_steps);
    }

    auto brute_force_npls(const NplsInstance & inst, std::uint64_t x, PointId s) -> PointId
    {
        auto domain = enumerable_domain(inst.d_bound.at_length_of(x), max_oracle_bits);
        if (! inst.sources(x, s))
            throw SearchError(SearchErrc::invariant_violation, describe(s) + " is not a source");

        std::optional<PointId> best;
        std::uint64_t best_cost = std::numeric_limits<std::uint64_t>::max();
        for (std::uint64_t t = 0; t < domain; ++t) {
            PointId y{t};
            if (! inst.targets(x, s, y))
                continue;
            auto c = inst.cost(x, y);
            if (! best || c < best_cost) {
                best = y;
                best_cost = c;
            }
        }
        if (! best)
            throw SearchError(SearchErrc::empty_target_space, "source " + describe(s) + " has no targets");
        return *best;
    }

    auto rank0_row_pls(const NplsInstance & inst, PointId s) -> PlsInstance
    {
        PlsInstance result;
        result.d_bound = inst.d_bound;
        result.feasible = [inst, s](std::uint64_t x, PointId t) { return inst.targets(x, s, t); };
        result.initial = [inst, s](std::uint64_t x) { return inst.initial_target(x, s); };
        result.neighbor = [inst, s](std::uint64_t x, PointId t) { return inst.rank0_neighbor(x, s, t); };
        result.cost = inst.cost;
        return result;
    }

    auto nested_from_pls(const PlsInstance & pls) -> NplsInstance
    {
        NplsInstance inst;
        inst.d_bound = pls.d_bound;
        inst.sources = [](std::uint64_t, PointId s) { return s.bits == 0; };
        inst.targets = [pls](std::uint64_t x, PointId s, PointId y) { return s.bits == 0 && pls.feasible(x, y); };
        inst.neighbor = [pls](std::uint64_t x, PointId s, PointId y, PointId z) {
            return s.bits == 0 && pls.feasible(x, y) && pls.feasible(x, z) && pls.neighbor(x, y) == z;
        };
        inst.rank0_neighbor = [pls](std::uint64_t x, PointId, PointId y) { return pls.neighbor(x, y); };
        inst.initial_source = [](std::uint64_t) { return PointId{0}; };
        inst.initial_target = [pls](std::uint64_t x, PointId) { return pls.initial(x); };
        inst.cost = pls.cost;
        inst.gen_source = [](std::uint64_t, PointId s, PointId) { return s; };
        inst.extract = [](std::uint64_t, PointId, PointId y, PointId) { return y; };
        inst.rank = [](std::uint64_t, PointId) -> std::uint64_t { return 0; };
        return inst;
    }
}
