#include "search_oracles.hpp"

#include "npls/search/npls.hpp"

#include <gtest/gtest.h>

using namespace npls::search;
using npls::testing::chain_pls;
using npls::testing::rank_zero_npls;
using npls::testing::reference_nested_walk;
using npls::testing::two_row_npls;

namespace
{
    auto visits(const SearchTrace & trace)
    {
        std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
        for (auto & step : trace.steps)
            out.emplace_back(step.source.bits, step.target.bits);
        return out;
    }

    auto expect_code(SearchErrc code, const std::function<void()> & fn)
    {
        try {
            fn();
            ADD_FAILURE() << "expected " << to_string(code);
        }
        catch (const SearchError & e) {
            EXPECT_EQ(e.code(), code) << e.what();
        }
    }
}

TEST(SolveNpls, TwoRowInstanceMatchesReferenceWalk)
{
    auto inst = two_row_npls();
    auto [y, trace] = solve_npls(inst, 0);
    EXPECT_EQ(y, PointId{3});
    EXPECT_TRUE(is_solution(inst, 0, y));
    EXPECT_EQ(visits(trace), reference_nested_walk(inst, 0));

    std::vector<TraceStep> expected{
        {PointId{0}, PointId{7}, 1, 7, StepAction::init_target, 0},
        {PointId{1}, PointId{6}, 0, 6, StepAction::descend, 1},
        {PointId{1}, PointId{5}, 0, 5, StepAction::rank0_step, 1},
        {PointId{1}, PointId{4}, 0, 4, StepAction::solved, 1},
        {PointId{0}, PointId{3}, 1, 3, StepAction::solved, 0},
    };
    EXPECT_EQ(trace.steps, expected);
    EXPECT_EQ(trace.row_targets(PointId{0}), (std::vector<PointId>{PointId{7}, PointId{3}}));
    EXPECT_EQ(trace.row_targets(PointId{1}, 1).size(), 3u);
}

TEST(SolveNpls, RankZeroCollapsesToPls)
{
    auto pls = chain_pls(8);
    auto [p, pls_trace] = solve_pls(pls, 0);
    auto [y, npls_trace] = solve_npls(rank_zero_npls(pls), 0);
    EXPECT_EQ(p, y);
    EXPECT_EQ(pls_trace.targets(), npls_trace.targets());
    ASSERT_EQ(pls_trace.step_count(), npls_trace.step_count());
    for (std::size_t i = 0; i < pls_trace.step_count(); ++i)
        EXPECT_EQ(pls_trace.steps[i].action, npls_trace.steps[i].action);
}

TEST(SolveNpls, RankViolationOnFlatDescent)
{
    auto inst = two_row_npls();
    inst.rank = [](std::uint64_t, PointId) -> std::uint64_t { return 1; };
    expect_code(SearchErrc::rank_violation, [&] { solve_npls(inst, 0); });
}

TEST(SolveNpls, CostViolationOnExtract)
{
    auto inst = two_row_npls();
    inst.cost = [](std::uint64_t, PointId t) -> std::uint64_t { return t.bits == 3 ? 9 : t.bits; };
    expect_code(SearchErrc::cost_violation, [&] { solve_npls(inst, 0); });
}

TEST(SolveNpls, RankZeroRowLeavingTargets)
{
    auto inst = two_row_npls();
    inst.rank0_neighbor = [](std::uint64_t, PointId, PointId y) { return PointId{y.bits == 6 ? 2u : y.bits}; };
    expect_code(SearchErrc::rank0_self_loop_missing, [&] { solve_npls(inst, 0); });
}

TEST(SolveNpls, BudgetExceeded)
{
    expect_code(SearchErrc::step_budget_exceeded, [&] { solve_npls(two_row_npls(), 0, 4); });
    EXPECT_NO_THROW(solve_npls(two_row_npls(), 0, 5));
}

TEST(SolveNpls, ExtractOutsideNeighbourhood)
{
    auto inst = two_row_npls();
    inst.extract = [](std::uint64_t, PointId, PointId, PointId) { return PointId{7}; };
    expect_code(SearchErrc::invariant_violation, [&] { solve_npls(inst, 0); });
}

TEST(SolveNpls, StartFromNonSource)
{
    expect_code(SearchErrc::invariant_violation, [&] { solve_npls_from(two_row_npls(), 0, PointId{5}); });
}

TEST(BruteForceNpls, MinimalCostTarget)
{
    auto inst = two_row_npls();
    EXPECT_EQ(brute_force_npls(inst, 0, PointId{0}), PointId{3});
    EXPECT_EQ(brute_force_npls(inst, 0, PointId{1}), PointId{4});
    EXPECT_TRUE(inst.neighbor(0, PointId{1}, PointId{4}, PointId{4}));
}

TEST(BruteForceNpls, SingletonTargetSpace)
{
    auto inst = two_row_npls();
    inst.targets = [](std::uint64_t, PointId s, PointId t) { return s.bits == 0 && t.bits == 7; };
    EXPECT_EQ(brute_force_npls(inst, 0, PointId{0}), PointId{7});
}

TEST(BruteForceNpls, Errors)
{
    auto inst = two_row_npls();
    expect_code(SearchErrc::invariant_violation, [&] { brute_force_npls(inst, 0, PointId{4}); });
    inst.targets = [](std::uint64_t, PointId, PointId) { return false; };
    expect_code(SearchErrc::empty_target_space, [&] { brute_force_npls(inst, 0, PointId{0}); });
    inst.d_bound = Polynomial::constant(40);
    expect_code(SearchErrc::domain_too_large, [&] { brute_force_npls(inst, 0, PointId{0}); });
}

TEST(Rank0RowPls, FollowsRowChain)
{
    auto pls = rank0_row_pls(two_row_npls(), PointId{1});
    auto [p, trace] = solve_pls(pls, 0);
    EXPECT_EQ(p, PointId{4});
    EXPECT_EQ(trace.step_count(), 3u);
}
