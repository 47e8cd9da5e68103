#include "npls/search/trace.hpp"

namespace npls::search
{
    auto to_string(StepAction action) -> std::string
    {
        switch (action) {
        case StepAction::init_target: return "init-target";
        case StepAction::rank0_step: return "rank0-step";
        case StepAction::descend: return "descend";
        case StepAction::extract: return "extract";
        case StepAction::solved: return "solved";
        }
        return "unknown";
    }

    auto SearchTrace::targets() const -> std::vector<PointId>
    {
        std::vector<PointId> result;
        result.reserve(steps.size());
        for (auto & step : steps)
            result.push_back(step.target);
        return result;
    }

    auto SearchTrace::row_targets(PointId source, unsigned level) const -> std::vector<PointId>
    {
        std::vector<PointId> result;
        for (auto & step : steps)
            if (step.source == source && step.level == level)
                result.push_back(step.target);
        return result;
    }
}
