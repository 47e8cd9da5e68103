#pragma once

#include "npls/proof/path.hpp"

#include <optional>
#include <stdexcept>
#include <string>

namespace npls::extract
{
    enum class ExtractErrc
    {
        goal_not_found,
        kb_violation,
        end_formula_principal,
        not_a_solution,
        unreachable,
        mode_error,
        validation_failed,
    };

    auto to_string(ExtractErrc code) -> std::string;

    /// Raised when the input derivation breaks an invariant the compilers rely
    /// on. `path` names the offending node when there is one.
    class ExtractError : public std::runtime_error
    {
    public:
        ExtractError(ExtractErrc code, const std::string & message, std::optional<proof::NodePath> path = std::nullopt);

        auto code() const noexcept -> ExtractErrc { return code_; }
        auto path() const -> const std::optional<proof::NodePath> & { return path_; }

    private:
        ExtractErrc code_;
        std::optional<proof::NodePath> path_;
    };
}
