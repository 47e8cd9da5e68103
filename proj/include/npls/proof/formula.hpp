#pragma once

#include "npls/proof/term.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace npls::proof
{
    /// lhs = rhs, or its negation.
    struct Literal
    {
        bool negated = false;
        Term lhs;
        Term rhs;

        auto operator==(const Literal &) const -> bool = default;
    };

    auto negate(Literal l) -> Literal;
    auto substitute(const Literal & l, const std::string & name, const Term & replacement) -> Literal;
    auto eval_literal(const Literal & l, const Environment & env) -> bool;
    auto eval_literal(const Literal & l, std::uint64_t x) -> bool;
    auto is_closed(const Literal & l) -> bool;
    auto to_string(const Literal & l) -> std::string;

    /// A literal (class 0), E v<bound. body (class 1), or
    /// E v<bound. A inner_v<inner_bound. body (class 2).
    /// Equality is alpha-equivalence: bound variable names do not matter.
    struct Formula
    {
        enum class Kind
        {
            literal,
            ex,
            ex_all,
        };

        Kind kind = Kind::literal;
        Literal body;
        std::string var;
        Term bound;
        std::string inner_var;
        Term inner_bound;

        static auto lit(Literal l) -> Formula;
        static auto ex(std::string v, Term bound, Literal body) -> Formula;
        static auto ex_all(std::string v, Term bound, std::string inner, Term inner_bound, Literal body) -> Formula;

        auto operator==(const Formula & other) const -> bool;
    };

    auto sigma_class(const Formula & f) -> unsigned;

    /// Canonical renaming of bound variables, used for equality.
    auto normalized(const Formula & f) -> Formula;

    /// Substitution for a free variable; binders shadow it.
    auto substitute(const Formula & f, const std::string & name, const Term & replacement) -> Formula;

    auto is_closed(const Formula & f) -> bool;

    /// Largest quantifier range that formula_truth will scan.
    inline constexpr std::uint64_t max_scanned_range = std::uint64_t{1} << 20;

    /// Truth by scanning the bounded quantifiers; throws value_overflow past max_scanned_range.
    auto formula_truth(const Formula & f, const Environment & env = {}) -> bool;

    /// L(s) for a class-1 formula E v<t. L(v).
    auto sb1_instance(const Formula & f, const Term & witness) -> Literal;

    /// L(t, n) for a class-2 formula E v<s0 A w<s1. L(v, w).
    auto sb2_instance(const Formula & f, const Term & witness, std::uint64_t n) -> Literal;

    /// The n-th left cut formula not-B(n) of a cut on E v<s0. B(v): a negated
    /// literal for class 1, E w<s1. not-L(n, w) for class 2.
    auto left_cut_formula(const Formula & cut, std::uint64_t n) -> Formula;

    auto to_string(const Formula & f) -> std::string;

    using Sequent = std::vector<Formula>;

    /// Number of occurrences of f in s.
    auto count(const Sequent & s, const Formula & f) -> std::size_t;

    /// Multiset containment: every formula of lower occurs in upper at least as often.
    auto contains(const Sequent & upper, const Sequent & lower) -> bool;

    /// Multiset difference upper - lower; only meaningful when contains(upper, lower).
    auto difference(const Sequent & upper, const Sequent & lower) -> Sequent;

    auto to_string(const Sequent & s) -> std::string;
}
