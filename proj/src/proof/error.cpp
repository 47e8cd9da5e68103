#include "npls/proof/error.hpp"

namespace npls::proof
{
    auto to_string(KernelErrc code) -> std::string
    {
        switch (code) {
        case KernelErrc::open_term: return "OpenTerm";
        case KernelErrc::value_overflow: return "ValueOverflow";
        case KernelErrc::bad_arity: return "BadArity";
        case KernelErrc::no_such_node: return "NoSuchNode";
        case KernelErrc::leaf_node: return "LeafNode";
        case KernelErrc::formula_absent: return "FormulaAbsent";
        case KernelErrc::validation_failed: return "ValidationFailed";
        case KernelErrc::mode_error: return "ModeError";
        }
        return "KernelError";
    }

    KernelError::KernelError(KernelErrc code, const std::string & message) :
        std::runtime_error(to_string(code) + ": " + message),
        code_(code)
    {
    }
}
