#include "search_oracles.hpp"

#include "npls/search/pls.hpp"

#include <gtest/gtest.h>

using namespace npls::search;
using npls::testing::chain_pls;

namespace
{
    auto predicate_from_edges(std::uint64_t n, std::vector<std::pair<std::uint64_t, std::uint64_t>> edges,
        std::vector<std::uint64_t> cost, std::uint64_t p) -> PredicatePls
    {
        PredicatePls inst;
        inst.d_bound = Polynomial::constant(bit_length(n - 1));
        inst.feasible = [n](std::uint64_t, PointId s) { return s.bits < n; };
        inst.initial = [](std::uint64_t) { return PointId{0}; };
        inst.neighbor_rel = [edges](std::uint64_t, PointId s, PointId t) {
            for (auto [a, b] : edges)
                if (a == s.bits && b == t.bits)
                    return true;
            return false;
        };
        inst.cost = [cost](std::uint64_t, PointId s) { return cost.at(s.bits); };
        inst.p_bound = Polynomial::constant(p);
        return inst;
    }
}

TEST(Polynomial, EvaluatesAtBinaryLength)
{
    Polynomial p({1, 2, 3});
    EXPECT_EQ(p.evaluate(2), 1u + 4u + 12u);
    EXPECT_EQ(p.at_length_of(5), p.evaluate(3));
    EXPECT_EQ(Polynomial({4, 0, 0}), Polynomial::constant(4));
    EXPECT_EQ(Polynomial({1, 1}).evaluate(~std::uint64_t{0}), ~std::uint64_t{0});
}

TEST(Polynomial, BitLength)
{
    EXPECT_EQ(bit_length(0), 0u);
    EXPECT_EQ(bit_length(1), 1u);
    EXPECT_EQ(bit_length(7), 3u);
    EXPECT_EQ(bit_length(8), 4u);
}

TEST(SolvePls, DescendingChainTakesEightSteps)
{
    auto [s, trace] = solve_pls(chain_pls(8), 0);
    EXPECT_EQ(s, PointId{0});
    ASSERT_EQ(trace.step_count(), 8u);
    for (std::size_t i = 0; i < 8; ++i) {
        EXPECT_EQ(trace.steps[i].target.bits, 7 - i);
        EXPECT_EQ(trace.steps[i].source, PointId{7});
    }
    EXPECT_EQ(trace.steps.front().action, StepAction::init_target);
    EXPECT_EQ(trace.steps[1].action, StepAction::rank0_step);
    EXPECT_EQ(trace.steps.back().action, StepAction::solved);
}

TEST(SolvePls, FixedPointStartIsOneStep)
{
    auto inst = chain_pls(8);
    inst.initial = [](std::uint64_t) { return PointId{0}; };
    auto [s, trace] = solve_pls(inst, 0);
    EXPECT_EQ(s, PointId{0});
    EXPECT_EQ(trace.step_count(), 1u);
}

TEST(SolvePls, BudgetExceeded)
{
    try {
        solve_pls(chain_pls(8), 0, 3);
        FAIL() << "expected budget error";
    }
    catch (const SearchError & e) {
        EXPECT_EQ(e.code(), SearchErrc::step_budget_exceeded);
    }
}

TEST(SolvePls, CycleIsCaughtAsInvariantViolation)
{
    auto inst = chain_pls(4);
    inst.neighbor = [](std::uint64_t, PointId s) { return PointId{(s.bits + 1) % 4}; };
    try {
        solve_pls(inst, 0);
        FAIL();
    }
    catch (const SearchError & e) {
        EXPECT_EQ(e.code(), SearchErrc::invariant_violation);
    }
}

TEST(SolvePls, LeavingFeasibleSetIsCaught)
{
    auto inst = chain_pls(4);
    inst.feasible = [](std::uint64_t, PointId s) { return s.bits >= 2 && s.bits < 4; };
    EXPECT_THROW(solve_pls(inst, 0), SearchError);
}

TEST(SolvePls, ZeroBudgetRejected)
{
    EXPECT_THROW(solve_pls(chain_pls(2), 0, 0), SearchError);
}

TEST(LocalMinimum, EmptyNeighbourhoodIsMinimum)
{
    auto inst = predicate_from_edges(3, {}, {3, 2, 1}, 1);
    EXPECT_TRUE(local_minimum_check(inst, 0, PointId{0}));
}

TEST(LocalMinimum, CheaperNeighbourDisqualifies)
{
    auto inst = predicate_from_edges(3, {{0, 1}, {1, 2}}, {3, 2, 1}, 1);
    EXPECT_FALSE(local_minimum_check(inst, 0, PointId{0}));
    EXPECT_TRUE(local_minimum_check(inst, 0, PointId{2}));
}

TEST(LocalMinimum, CardinalityBound)
{
    auto inst = predicate_from_edges(4, {{0, 1}, {0, 2}, {0, 3}}, {3, 2, 1, 0}, 2);
    try {
        local_minimum_check(inst, 0, PointId{0});
        FAIL();
    }
    catch (const SearchError & e) {
        EXPECT_EQ(e.code(), SearchErrc::cardinality_bound_violated);
    }
}

TEST(SelfLoopPredicate, MarksExactlyLocalMinima)
{
    auto inst = predicate_from_edges(3, {{0, 1}, {1, 2}}, {3, 2, 1}, 1);
    auto primed = derive_self_loop_predicate(inst);
    EXPECT_TRUE(primed.neighbor_rel(0, PointId{2}, PointId{2}));
    EXPECT_FALSE(primed.neighbor_rel(0, PointId{0}, PointId{0}));
    EXPECT_TRUE(primed.neighbor_rel(0, PointId{0}, PointId{1}));
    EXPECT_FALSE(primed.neighbor_rel(0, PointId{0}, PointId{2}));
}

TEST(SteepestDescent, PicksCheapestNeighbour)
{
    auto inst = predicate_from_edges(4, {{0, 1}, {0, 2}, {2, 3}}, {5, 1, 2, 0}, 2);
    auto pls = steepest_descent_pls(inst);
    EXPECT_EQ(pls.neighbor(0, PointId{0}), PointId{1});
    EXPECT_EQ(pls.neighbor(0, PointId{1}), PointId{1});
    auto [s, trace] = solve_pls(pls, 0);
    EXPECT_EQ(s, PointId{1});
    EXPECT_EQ(trace.step_count(), 2u);
}

TEST(DefaultBudget, IsTwoToDPlusTwo)
{
    EXPECT_EQ(default_step_budget(Polynomial::constant(3), 0), 32u);
    EXPECT_EQ(default_step_budget(Polynomial::constant(70), 0), ~std::uint64_t{0});
}
