#include "extract_oracles.hpp"
#include "proof_fixtures.hpp"

#include "npls/extract/error.hpp"
#include "npls/extract/npls_compiler.hpp"
#include "npls/extract/pls_compiler.hpp"
#include "npls/extract/witness.hpp"
#include "npls/proof/generate.hpp"
#include "npls/search/verify.hpp"

#include <gtest/gtest.h>

using namespace npls;
using namespace npls::extract;
using proof::NodePath;

namespace
{
    auto nested(proof::Derivation d) { return make_context(std::move(d), proof::Mode::npls); }

    auto sources_of(const ExtractionContext & ctx)
    {
        std::vector<NodePath> out;
        for (auto & p : ctx.tree().paths())
            if (npls_sources(ctx, p))
                out.push_back(p);
        return out;
    }

    auto targets_of(const ExtractionContext & ctx, const NodePath & sigma)
    {
        std::vector<NodePath> out;
        for (auto & p : ctx.tree().paths())
            if (npls_targets(ctx, sigma, p))
                out.push_back(p);
        return out;
    }
}

TEST(NplsCompiler, D3Sources)
{
    auto ctx = nested(npls::testing::d3());
    EXPECT_TRUE(source_condition(*ctx, {}));
    EXPECT_TRUE(source_condition(*ctx, {0}));
    EXPECT_TRUE(source_condition(*ctx, {1}));
    EXPECT_FALSE(source_condition(*ctx, {1, 0}));
    EXPECT_EQ(sources_of(*ctx), (std::vector<NodePath>{{}, {0}, {1}}));
}

TEST(NplsCompiler, D3Targets)
{
    auto ctx = nested(npls::testing::d3());
    EXPECT_EQ(targets_of(*ctx, {}), (std::vector<NodePath>{{1}, {2}, {2, 1}}));
    EXPECT_EQ(targets_of(*ctx, {0}), (std::vector<NodePath>{{0}, {1}}));
    EXPECT_EQ(targets_of(*ctx, {1}), (std::vector<NodePath>{{1}}));
    EXPECT_FALSE(npls_targets(*ctx, {2}, {2}));
}

TEST(NplsCompiler, D3Costs)
{
    auto ctx = nested(npls::testing::d3());
    EXPECT_EQ(ctx->d_max(), 4u);
    EXPECT_EQ(npls_cost(*ctx, {2}), 3u);
    EXPECT_EQ(npls_cost(*ctx, {2, 1}), 2u);
    EXPECT_EQ(npls_cost(*ctx, {1}), 0u);
}

TEST(NplsCompiler, D3Neighbourhood)
{
    auto ctx = nested(npls::testing::d3());
    EXPECT_TRUE(npls_neighbor_rel(*ctx, {}, {2}, {2, 1}));
    EXPECT_FALSE(npls_neighbor_rel(*ctx, {}, {2, 1}, {2}));
    EXPECT_FALSE(npls_neighbor_rel(*ctx, {}, {2}, {2}));
    EXPECT_TRUE(npls_neighbor_rel(*ctx, {}, {2}, {1}));
    EXPECT_TRUE(npls_neighbor_rel(*ctx, {}, {1}, {1}));
    EXPECT_FALSE(npls_neighbor_rel(*ctx, {}, {1}, {2}));
}

TEST(NplsCompiler, D3GeneratedSources)
{
    auto ctx = nested(npls::testing::d3());
    EXPECT_EQ(npls_gen_source(*ctx, {}, {2}), (NodePath{0}));
    EXPECT_EQ(npls_gen_source(*ctx, {}, {2, 1}), (NodePath{1}));
    EXPECT_EQ(npls_gen_source(*ctx, {}, {1}), NodePath{});
    EXPECT_LT(ctx->kb({0}), ctx->kb({}));
    EXPECT_LT(ctx->kb({1}), ctx->kb({}));
}

TEST(NplsCompiler, D3Extraction)
{
    auto ctx = nested(npls::testing::d3());
    EXPECT_EQ(npls_extract(*ctx, {}, {2}, {0}), (NodePath{2, 1}));
    EXPECT_EQ(npls_extract(*ctx, {}, {2, 1}, {1}), (NodePath{1}));
    EXPECT_EQ(npls_extract(*ctx, {}, {2}, {1}), (NodePath{1}));
    try {
        npls_extract(*ctx, {}, {2}, {2, 1});
        FAIL();
    }
    catch (const ExtractError & e) {
        EXPECT_EQ(e.code(), ExtractErrc::not_a_solution);
    }
}

TEST(NplsCompiler, RankZeroStep)
{
    auto ctx = nested(npls::testing::d3());
    EXPECT_EQ(npls_rank0_step(*ctx, {1}, {1}), (NodePath{1}));
    try {
        npls_rank0_step(*ctx, {}, {2});
        FAIL();
    }
    catch (const ExtractError & e) {
        EXPECT_EQ(e.code(), ExtractErrc::unreachable);
        EXPECT_EQ(e.path(), (NodePath{2}));
    }
}

TEST(NplsCompiler, D3RightmostGoal)
{
    auto ctx = nested(npls::testing::d3());
    EXPECT_EQ(rightmost_goal(*ctx, {}), (NodePath{2}));
    EXPECT_EQ(rightmost_goal(*ctx, {2, 1}), (NodePath{2, 1}));
}

TEST(BuildNpls, D3SatisfiesAllConditions)
{
    auto ctx = nested(npls::testing::d3());
    auto report = search::verify_npls_conditions(build_npls(ctx), ctx->x());
    EXPECT_TRUE(report.all_passed()) << report.render();
}

TEST(BuildNpls, D3Trace)
{
    auto ctx = nested(npls::testing::d3());
    auto report = extract_witness_npls(ctx);
    EXPECT_EQ(report.witness, 2u);
    EXPECT_TRUE(report.verified);
    EXPECT_EQ(report.solution_node, (NodePath{1}));

    std::vector<std::pair<NodePath, NodePath>> rows;
    for (auto & step : report.trace.steps)
        rows.emplace_back(ctx->path_of(step.source), ctx->path_of(step.target));
    std::vector<std::pair<NodePath, NodePath>> expected{
        {{}, {2}}, {{0}, {0}}, {{}, {2, 1}}, {{1}, {1}}, {{}, {1}}};
    EXPECT_EQ(rows, expected);

    std::vector<NodePath> top;
    for (auto t : report.trace.row_targets(ctx->point_of({})))
        top.push_back(ctx->path_of(t));
    EXPECT_EQ(top, (std::vector<NodePath>{{2}, {2, 1}, {1}}));
}

TEST(BuildNpls, ModeGate)
{
    try {
        nested(npls::testing::d2());
        FAIL();
    }
    catch (const ExtractError & e) {
        EXPECT_EQ(e.code(), ExtractErrc::mode_error);
    }
}

TEST(ExtractWitnessNpls, TemplateD3AcrossX)
{
    for (std::uint64_t x = 0; x <= 7; ++x) {
        auto d = proof::substitute_numeral(npls::testing::t_d3(), x);
        auto report = extract_witness_npls(nested(d));
        EXPECT_TRUE(report.verified) << x;
        EXPECT_EQ(report.witness, x + 2) << x;
        EXPECT_TRUE(npls::testing::end_formula_witnesses(d).contains(report.witness));
    }
}

TEST(ExtractWitnessNpls, RandomDerivations)
{
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        auto d = proof::random_derivation(seed, {proof::Mode::npls, 10, 500});
        auto ctx = nested(d);
        auto report = extract_witness_npls(ctx);
        EXPECT_TRUE(report.verified) << seed;
        EXPECT_TRUE(npls::testing::end_formula_witnesses(d).contains(report.witness)) << seed;
        EXPECT_EQ(ctx->principal(report.solution_node), ctx->end_formula());
    }
}

TEST(BuildNpls, SmallRandomDerivationsSatisfyAllConditions)
{
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        auto ctx = nested(proof::random_derivation(seed, {proof::Mode::npls, 6, 60}));
        auto report = search::verify_npls_conditions(build_npls(ctx), ctx->x());
        EXPECT_TRUE(report.all_passed()) << seed << "\n" << report.render();
    }
}

TEST(NplsCompiler, VanishingPointCoherence)
{
    for (std::uint64_t seed = 1; seed <= 15; ++seed) {
        auto ctx = nested(proof::random_derivation(seed, {proof::Mode::npls, 10, 300}));
        auto & d = ctx->derivation();
        for (auto & p : ctx->tree().paths()) {
            if (! ctx->is_sb1(p) && ! ctx->is_sb2(p))
                continue;
            auto & a = ctx->principal(p);
            auto lambda = proof::vanishing_point(d, p, a);
            if (lambda.is_root()) {
                EXPECT_EQ(a, ctx->end_formula());
                continue;
            }
            auto & cut = ctx->rule(lambda.parent());
            ASSERT_EQ(cut.kind, proof::RuleKind::cut) << proof::to_string(p);
            if (ctx->is_left_upper(lambda))
                EXPECT_EQ(a, proof::left_cut_formula(cut.cut_formula, lambda.last()));
            else
                EXPECT_EQ(a, cut.cut_formula);
        }
    }
}
