#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace npls::search
{
    /// A point of a search space: a natural number that must fit in the
    /// instance's d-bound of bits.
    struct PointId
    {
        std::uint64_t bits = 0;

        auto operator<=>(const PointId &) const = default;
    };

    /// Binary length |v|, with |0| = 0.
    auto bit_length(std::uint64_t v) -> unsigned;

    /// Polynomial in |x| with non-negative integer coefficients, lowest degree first.
    class Polynomial
    {
    public:
        Polynomial() = default;
        explicit Polynomial(std::vector<std::uint64_t> coefficients);

        static auto constant(std::uint64_t c) -> Polynomial;

        /// Evaluates at n directly; saturates at UINT64_MAX.
        auto evaluate(std::uint64_t n) const -> std::uint64_t;

        /// Evaluates at |x|.
        auto at_length_of(std::uint64_t x) const -> std::uint64_t;

        auto coefficients() const -> const std::vector<std::uint64_t> & { return coefficients_; }

        auto operator==(const Polynomial &) const -> bool = default;

    private:
        std::vector<std::uint64_t> coefficients_;
    };

    enum class SearchErrc
    {
        step_budget_exceeded,
        invariant_violation,
        rank_violation,
        cost_violation,
        rank0_self_loop_missing,
        cardinality_bound_violated,
        empty_target_space,
        domain_too_large,
        partial_function_undefined,
    };

    auto to_string(SearchErrc code) -> std::string;

    class SearchError : public std::runtime_error
    {
    public:
        SearchError(SearchErrc code, const std::string & message);

        auto code() const noexcept -> SearchErrc { return code_; }

    private:
        SearchErrc code_;
    };

    /// Number of points 2^d of a d-bit space, or throws domain_too_large when
    /// d exceeds max_bits.
    auto enumerable_domain(std::uint64_t d, unsigned max_bits) -> std::uint64_t;
}
