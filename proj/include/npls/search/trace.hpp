#pragma once

#include "npls/search/types.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace npls::search
{
    /// How a target was reached in its row. The visit that confirms the row's
    /// fixed point is recorded as `solved` instead of its arrival kind.
    enum class StepAction
    {
        init_target,
        rank0_step,
        descend,
        extract,
        solved,
    };

    auto to_string(StepAction action) -> std::string;

    /// One visit of a target inside the search row of `source`.
    struct TraceStep
    {
        PointId source;
        PointId target;
        std::uint64_t rank = 0;
        std::uint64_t cost = 0;
        StepAction action = StepAction::init_target;
        /// Nesting level of the row; the top row is 0, a descent adds 1.
        unsigned level = 0;

        auto operator==(const TraceStep &) const -> bool = default;
    };

    struct SearchTrace
    {
        std::vector<TraceStep> steps;

        auto step_count() const -> std::size_t { return steps.size(); }

        /// Targets visited in order, across all rows.
        auto targets() const -> std::vector<PointId>;

        /// Targets visited in the row at the given nesting level whose source is `source`.
        auto row_targets(PointId source, unsigned level = 0) const -> std::vector<PointId>;
    };
}
