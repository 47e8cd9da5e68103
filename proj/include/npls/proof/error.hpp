#pragma once

#include <stdexcept>
#include <string>

namespace npls::proof
{
    enum class KernelErrc
    {
        open_term,
        value_overflow,
        bad_arity,
        no_such_node,
        leaf_node,
        formula_absent,
        validation_failed,
        mode_error,
    };

    auto to_string(KernelErrc code) -> std::string;

    class KernelError : public std::runtime_error
    {
    public:
        KernelError(KernelErrc code, const std::string & message);

        auto code() const noexcept -> KernelErrc { return code_; }

    private:
        KernelErrc code_;
    };
}
