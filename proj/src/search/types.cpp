#include "npls/search/types.hpp"

#include <bit>
#include <limits>

namespace npls::search
{
    auto bit_length(std::uint64_t v) -> unsigned
    {
        return static_cast<unsigned>(std::bit_width(v));
    }

    Polynomial::Polynomial(std::vector<std::uint64_t> coefficients) :
        coefficients_(std::move(coefficients))
    {
        while (! coefficients_.empty() && coefficients_.back() == 0)
            coefficients_.pop_back();
    }

    auto Polynomial::constant(std::uint64_t c) -> Polynomial
    {
        return Polynomial{{c}};
    }

    auto Polynomial::evaluate(std::uint64_t n) const -> std::uint64_t
    {
        constexpr auto max = std::numeric_limits<std::uint64_t>::max();
        // Horner, saturating
        std::uint64_t acc = 0;
        for (auto c = coefficients_.rbegin(); c != coefficients_.rend(); ++c) {
            std::uint64_t product;
            if (__builtin_mul_overflow(acc, n, &product))
                return max;
            if (__builtin_add_overflow(product, *c, &acc))
                return max;
        }
        return acc;
    }

    auto Polynomial::at_length_of(std::uint64_t x) const -> std::uint64_t
    {
        return evaluate(bit_length(x));
    }

    auto to_string(SearchErrc code) -> std::string
    {
        switch (code) {
        case SearchErrc::step_budget_exceeded: return "StepBudgetExceeded";
        case SearchErrc::invariant_violation: return "InvariantViolation";
        case SearchErrc::rank_violation: return "RankViolation";
        case SearchErrc::cost_violation: return "CostViolation";
        case SearchErrc::rank0_self_loop_missing: return "Rank0SelfLoopMissing";
        case SearchErrc::cardinality_bound_violated: return "CardinalityBoundViolated";
        case SearchErrc::empty_target_space: return "EmptyTargetSpace";
        case SearchErrc::domain_too_large: return "DomainTooLarge";
        case SearchErrc::partial_function_undefined: return "PartialFunctionUndefined";
        }
        return "SearchError";
    }

    SearchError::SearchError(SearchErrc code, const std::string & message) :
        std::runtime_error(to_string(code) + ": " + message),
        code_(code)
    {
    }

    auto enumerable_domain(std::uint64_t d, unsigned max_bits) -> std::uint64_t
    {
        if (d > max_bits)
            throw SearchError(SearchErrc::domain_too_large,
                "d = " + std::to_string(d) + " bits exceeds the enumeration limit of " + std::to_string(max_bits));
        return std::uint64_t{1} << d;
    }
}
