#pragma once

#include "npls/extract/context.hpp"
#include "npls/search/npls.hpp"

namespace npls::extract
{
    /// No proper prefix of sigma is an Sb1 node with a true auxiliary formula.
    auto source_condition(const ExtractionContext & ctx, const proof::NodePath & sigma) -> bool;

    auto npls_sources(const ExtractionContext & ctx, const proof::NodePath & sigma) -> bool;
    auto npls_targets(const ExtractionContext & ctx, const proof::NodePath & sigma, const proof::NodePath & tau) -> bool;
    auto npls_cost(const ExtractionContext & ctx, const proof::NodePath & tau) -> std::uint64_t;
    auto npls_neighbor_rel(const ExtractionContext & ctx, const proof::NodePath & sigma, const proof::NodePath & tau,
        const proof::NodePath & rho) -> bool;
    auto npls_gen_source(const ExtractionContext & ctx, const proof::NodePath & sigma, const proof::NodePath & tau)
        -> proof::NodePath;
    auto npls_extract(const ExtractionContext & ctx, const proof::NodePath & sigma, const proof::NodePath & tau,
        const proof::NodePath & rho) -> proof::NodePath;
    auto npls_rank0_step(const ExtractionContext & ctx, const proof::NodePath & sigma, const proof::NodePath & tau)
        -> proof::NodePath;

    auto build_npls(ContextPtr ctx) -> search::NplsInstance;
}
