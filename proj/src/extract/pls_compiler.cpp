#include "npls/extract/pls_compiler.hpp"

#include "npls/extract/error.hpp"

namespace npls::extract
{
    using proof::NodePath;

    auto target_condition(const ExtractionContext & ctx, const NodePath & sigma) -> bool
    {
        return ctx.no_true_literal(sigma);
    }

    auto rightmost_goal(const ExtractionContext & ctx, const NodePath & sigma) -> NodePath
    {
        const bool nested = ctx.mode() == proof::Mode::npls;
        auto tau = sigma;
        while (true) {
            if (ctx.is_true_sb1(tau) || (nested && ctx.is_sb2(tau)))
                return tau;
            auto & children = ctx.tree().children(tau);
            if (children.empty())
                throw ExtractError(ExtractErrc::goal_not_found,
                    "rightmost walk from " + proof::to_string(sigma) + " reached a leaf", tau);
            tau = children.back();
        }
    }

    auto pls_feasible(const ExtractionContext & ctx, const NodePath & sigma) -> bool
    {
        return sigma.is_root() || (ctx.is_left_upper(sigma) && target_condition(ctx, sigma));
    }

    auto pls_neighbor(const ExtractionContext & ctx, const NodePath & sigma) -> NodePath
    {
        auto tau = rightmost_goal(ctx, sigma);
        auto & a = ctx.principal(tau);
        auto lambda = proof::vanishing_point(ctx.derivation(), tau, a);
        if (lambda.is_root())
            return sigma;

        auto kappa = lambda.parent().child(ctx.witness_value(tau));
        if (! ctx.tree().contains(kappa) || ! (ctx.kb(kappa) < ctx.kb(sigma)))
            throw ExtractError(ExtractErrc::kb_violation,
                "left upper " + proof::to_string(kappa) + " does not precede " + proof::to_string(sigma), tau);
        return kappa;
    }

    auto build_pls(ContextPtr ctx) -> search::PlsInstance
    {
        if (ctx->mode() != proof::Mode::pls)
            throw ExtractError(ExtractErrc::mode_error, "the PLS compiler needs a pls-mode context");

        search::PlsInstance inst;
        inst.d_bound = search::Polynomial::constant(ctx->point_bits());
        inst.feasible = [ctx](std::uint64_t, search::PointId p) {
            return ctx->is_node(p) && pls_feasible(*ctx, ctx->path_of(p));
        };
        inst.initial = [ctx](std::uint64_t) { return ctx->point_of({}); };
        inst.neighbor = [ctx](std::uint64_t, search::PointId p) {
            if (! ctx->is_node(p) || ! pls_feasible(*ctx, ctx->path_of(p)))
                return p;
            return ctx->point_of(pls_neighbor(*ctx, ctx->path_of(p)));
        };
        inst.cost = [ctx](std::uint64_t, search::PointId p) -> std::uint64_t {
            return ctx->is_node(p) ? ctx->kb(ctx->path_of(p)) : 0;
        };
        return inst;
    }
}
