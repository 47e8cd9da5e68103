#pragma once

#include "npls/search/npls.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace npls::search
{
    /// The checkable conditions an nPLS instance must satisfy.
    enum class Condition
    {
        point_size,        ///< sources, targets and every function output fit in d(|x|) bits
        generated_source,  ///< y in T(s) implies gen_source(s,y) in S
        neighbor_domain,   ///< N(s,y,z) implies s in S and y,z in T(s)
        rank_zero,         ///< at rank 0, N(s,y,z) <=> rank0_neighbor(s,y) = z for y in T(s)
        rank_descent,      ///< at rank > 0, N(s,y,y) or rank(gen_source(s,y)) < rank(s)
        extraction,        ///< at rank > 0, N(gen_source(s,y),z,z) implies N(s,y,extract(s,y,z))
        initial_source,    ///< i(x) in S
        initial_target,    ///< t(x,s) in T(s) for every source s
        cost_descent,      ///< N(s,y,z) implies y = z or cost(y) > cost(z)
    };

    inline constexpr std::array all_conditions{
        Condition::point_size,
        Condition::generated_source,
        Condition::neighbor_domain,
        Condition::rank_zero,
        Condition::rank_descent,
        Condition::extraction,
        Condition::initial_source,
        Condition::initial_target,
        Condition::cost_descent,
    };

    auto to_string(Condition condition) -> std::string;

    struct ConditionResult
    {
        Condition condition;
        bool passed = true;
        /// First failing tuple in lexicographic enumeration order, e.g. (s, y, z).
        std::vector<std::uint64_t> counterexample;
        std::string message;
    };

    struct ConditionReport
    {
        std::vector<ConditionResult> results;

        auto all_passed() const -> bool;
        auto result(Condition condition) const -> const ConditionResult &;
        auto render() const -> std::string;
    };

    /// Exhaustive check of every condition over the 2^d(|x|) point space. Throws
    /// domain_too_large beyond max_bits. Exceptions raised by instance components
    /// count as failures of the condition being checked.
    auto verify_npls_conditions(const NplsInstance & inst, std::uint64_t x, unsigned max_bits = 10) -> ConditionReport;
}
