#include "npls/extract/npls_compiler.hpp"

#include "npls/extract/error.hpp"
#include "npls/extract/pls_compiler.hpp"

namespace npls::extract
{
    using proof::NodePath;

    auto source_condition(const ExtractionContext & ctx, const NodePath & sigma) -> bool
    {
        for (std::size_t k = 0; k < sigma.length(); ++k)
            if (ctx.is_true_sb1(sigma.prefix(k)))
                return false;
        return true;
    }

    auto npls_sources(const ExtractionContext & ctx, const NodePath & sigma) -> bool
    {
        if (sigma.is_root())
            return true;
        return ctx.is_left_upper(sigma) && source_condition(ctx, sigma) && target_condition(ctx, sigma);
    }

    namespace
    {
        auto on_right_branch(const ExtractionContext & ctx, const NodePath & sigma, const NodePath & tau) -> bool
        {
            if (! sigma.is_prefix_of(tau))
                return false;
            for (auto k = sigma.length() + 1; k <= tau.length(); ++k)
                if (ctx.is_left_upper(tau.prefix(k)))
                    return false;
            return true;
        }
    }

    auto npls_targets(const ExtractionContext & ctx, const NodePath & sigma, const NodePath & tau) -> bool
    {
        if (! npls_sources(ctx, sigma) || ! target_condition(ctx, tau))
            return false;
        if (ctx.is_sb2(tau))
            return on_right_branch(ctx, sigma, tau);
        if (ctx.is_true_sb1(tau))
            return proof::count(ctx.sequent(sigma), ctx.principal(tau)) > 0;
        return false;
    }

    auto npls_cost(const ExtractionContext & ctx, const NodePath & tau) -> std::uint64_t
    {
        return ctx.is_sb2(tau) ? ctx.d_max() - tau.length() : 0;
    }

    auto npls_neighbor_rel(const ExtractionContext & ctx, const NodePath & sigma, const NodePath & tau,
        const NodePath & rho) -> bool
    {
        if (! npls_targets(ctx, sigma, tau) || ! npls_targets(ctx, sigma, rho))
            return false;
        if (ctx.is_sb2(tau))
            return ! ctx.is_sb2(rho) || tau.is_proper_prefix_of(rho);
        return tau == rho;
    }

    auto npls_gen_source(const ExtractionContext & ctx, const NodePath & sigma, const NodePath & tau) -> NodePath
    {
        if (! ctx.is_sb2(tau) || ! npls_targets(ctx, sigma, tau))
            return sigma;

        auto lambda = proof::vanishing_point(ctx.derivation(), tau, ctx.principal(tau));
        if (lambda.is_root())
            throw ExtractError(ExtractErrc::end_formula_principal, "class-2 principal persists to the end-sequent", tau);

        auto kappa = lambda.parent().child(ctx.witness_value(tau));
        if (! ctx.tree().contains(kappa) || ! (ctx.kb(kappa) < ctx.kb(sigma)))
            throw ExtractError(ExtractErrc::kb_violation,
                "left upper " + proof::to_string(kappa) + " does not precede " + proof::to_string(sigma), tau);
        return kappa;
    }

    auto npls_extract(const ExtractionContext & ctx, const NodePath & sigma, const NodePath & tau, const NodePath & rho)
        -> NodePath
    {
        if (! ctx.is_sb2(tau))
            return tau;

        auto kappa = npls_gen_source(ctx, sigma, tau);
        if (! npls_neighbor_rel(ctx, kappa, rho, rho))
            throw ExtractError(ExtractErrc::not_a_solution,
                proof::to_string(rho) + " does not solve " + proof::to_string(kappa), rho);

        auto & p = ctx.principal(rho);
        if (proof::count(ctx.sequent(kappa), p) <= proof::count(ctx.sequent(kappa.parent()), p))
            return rho;

        auto branch = tau.child(ctx.witness_value(rho));
        if (! ctx.tree().contains(branch))
            throw ExtractError(ExtractErrc::goal_not_found, "witness selects a missing branch " + proof::to_string(branch),
                tau);
        return rightmost_goal(ctx, branch);
    }

    auto npls_rank0_step(const ExtractionContext & ctx, const NodePath & sigma, const NodePath & tau) -> NodePath
    {
        if (ctx.is_sb2(tau))
            throw ExtractError(ExtractErrc::unreachable,
                "class-2 target at rank-0 source " + proof::to_string(sigma), tau);
        return tau;
    }

    auto build_npls(ContextPtr ctx) -> search::NplsInstance
    {
        if (ctx->mode() != proof::Mode::npls)
            throw ExtractError(ExtractErrc::mode_error, "the nPLS compiler needs an npls-mode context");

        using search::PointId;
        auto node = [ctx](PointId p) -> const NodePath & { return ctx->path_of(p); };
        auto valid = [ctx](std::initializer_list<PointId> ps) {
            for (auto p : ps)
                if (! ctx->is_node(p))
                    return false;
            return true;
        };

        search::NplsInstance inst;
        inst.d_bound = search::Polynomial::constant(ctx->point_bits());
        inst.sources = [=](std::uint64_t, PointId s) { return valid({s}) && npls_sources(*ctx, node(s)); };
        inst.targets = [=](std::uint64_t, PointId s, PointId t) {
            return valid({s, t}) && npls_targets(*ctx, node(s), node(t));
        };
        inst.neighbor = [=](std::uint64_t, PointId s, PointId y, PointId z) {
            return valid({s, y, z}) && npls_neighbor_rel(*ctx, node(s), node(y), node(z));
        };
        inst.rank0_neighbor = [=](std::uint64_t, PointId s, PointId y) {
            return valid({s, y}) ? ctx->point_of(npls_rank0_step(*ctx, node(s), node(y))) : y;
        };
        inst.initial_source = [ctx](std::uint64_t) { return ctx->point_of({}); };
        inst.initial_target = [=](std::uint64_t, PointId s) {
            return valid({s}) ? ctx->point_of(rightmost_goal(*ctx, node(s))) : s;
        };
        inst.cost = [=](std::uint64_t, PointId t) -> std::uint64_t { return valid({t}) ? npls_cost(*ctx, node(t)) : 0; };
        inst.gen_source = [=](std::uint64_t, PointId s, PointId y) {
            return valid({s, y}) ? ctx->point_of(npls_gen_source(*ctx, node(s), node(y))) : s;
        };
        inst.extract = [=](std::uint64_t, PointId s, PointId y, PointId z) {
            return valid({s, y, z}) ? ctx->point_of(npls_extract(*ctx, node(s), node(y), node(z))) : y;
        };
        inst.rank = [=](std::uint64_t, PointId s) -> std::uint64_t { return valid({s}) ? ctx->kb(node(s)) : 0; };
        return inst;
    }
}
