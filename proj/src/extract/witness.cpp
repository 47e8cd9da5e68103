#include "npls/extract/witness.hpp"

#include "npls/extract/error.hpp"
#include "npls/extract/npls_compiler.hpp"
#include "npls/extract/pls_compiler.hpp"
#include "npls/search/npls.hpp"
#include "npls/search/pls.hpp"

namespace npls::extract
{
    auto witnesses_end_formula(const ExtractionContext & ctx, std::uint64_t n) -> bool
    {
        auto & e = ctx.end_formula();
        if (! (n < ctx.derivation().value(e.bound)))
            return false;
        return proof::eval_literal(proof::sb1_instance(e, proof::Term::num(n)), ctx.derivation().env());
    }

    namespace
    {
        auto report_at(const ExtractionContext & ctx, const proof::NodePath & goal, search::SearchTrace trace)
            -> WitnessReport
        {
            if (! ctx.is_sb1(goal))
                throw ExtractError(ExtractErrc::not_a_solution, "solution is not an Sb1 node", goal);
            WitnessReport report;
            report.witness = ctx.witness_value(goal);
            report.solution_node = goal;
            report.verified = witnesses_end_formula(ctx, report.witness);
            report.trace = std::move(trace);
            return report;
        }
    }

    auto extract_witness_pls(ContextPtr ctx, std::optional<std::uint64_t> max_steps) -> WitnessReport
    {
        auto inst = build_pls(ctx);
        auto [sigma, trace] = search::solve_pls(inst, ctx->x(), max_steps);
        return report_at(*ctx, rightmost_goal(*ctx, ctx->path_of(sigma)), std::move(trace));
    }

    auto extract_witness_npls(ContextPtr ctx, std::optional<std::uint64_t> max_steps) -> WitnessReport
    {
        auto inst = build_npls(ctx);
        auto [tau, trace] = search::solve_npls(inst, ctx->x(), max_steps);
        return report_at(*ctx, ctx->path_of(tau), std::move(trace));
    }
}
