#include "npls/extract/error.hpp"

namespace npls::extract
{
    auto to_string(ExtractErrc code) -> std::string
    {
        switch (code) {
        case ExtractErrc::goal_not_found: return "GoalNotFound";
        case ExtractErrc::kb_violation: return "KBViolation";
        case ExtractErrc::end_formula_principal: return "EndFormulaPrincipal";
        case ExtractErrc::not_a_solution: return "NotASolution";
        case ExtractErrc::unreachable: return "Unreachable";
        case ExtractErrc::mode_error: return "ModeError";
        case ExtractErrc::validation_failed: return "ValidationFailed";
        }
        return "ExtractError";
    }

    namespace
    {
        auto compose(ExtractErrc code, const std::string & message, const std::optional<proof::NodePath> & path)
            -> std::string
        {
            auto text = to_string(code);
            if (path)
                text += " at " + proof::to_string(*path);
            return text + ": " + message;
        }
    }

    ExtractError::ExtractError(ExtractErrc code, const std::string & message, std::optional<proof::NodePath> path) :
        std::runtime_error(compose(code, message, path)),
        code_(code),
        path_(std::move(path))
    {
    }
}
