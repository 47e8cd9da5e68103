#pragma once

#include "npls/extract/context.hpp"
#include "npls/search/trace.hpp"

#include <cstdint>
#include <optional>

namespace npls::extract
{
    struct WitnessReport
    {
        std::uint64_t witness = 0;
        proof::NodePath solution_node;
        /// The end-formula's matrix holds at the witness.
        bool verified = false;
        search::SearchTrace trace;
    };

    /// Truth of R(x, n) for the end-formula E y<t. R(x, y); false when n >= t.
    auto witnesses_end_formula(const ExtractionContext & ctx, std::uint64_t n) -> bool;

    auto extract_witness_pls(ContextPtr ctx, std::optional<std::uint64_t> max_steps = std::nullopt) -> WitnessReport;
    auto extract_witness_npls(ContextPtr ctx, std::optional<std::uint64_t> max_steps = std::nullopt) -> WitnessReport;
}
