#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace npls::proof
{
    enum class Op
    {
        add,
        mul,
        monus,
        len,
        smash,
        div2,
        cond,
    };

    auto to_string(Op op) -> std::string;
    auto parse_op(const std::string & name) -> std::optional<Op>;
    auto arity(Op op) -> std::size_t;

    /// Arithmetic term: numeral, variable, or an operation applied to arguments.
    struct Term
    {
        enum class Kind
        {
            numeral,
            variable,
            apply,
        };

        Kind kind = Kind::numeral;
        std::uint64_t value = 0;
        std::string name;
        Op op = Op::add;
        std::vector<Term> args;

        static auto num(std::uint64_t n) -> Term;
        static auto var(std::string name) -> Term;
        /// Throws bad_arity if the argument count does not fit op.
        static auto apply(Op op, std::vector<Term> args) -> Term;

        auto operator==(const Term &) const -> bool = default;
    };

    using Environment = std::map<std::string, std::uint64_t>;

    /// Values must fit in value_bits bits (at most 64).
    inline constexpr unsigned default_value_bits = 64;

    /// Throws open_term for unbound variables and value_overflow past the cap.
    auto eval(const Term & t, const Environment & env = {}, unsigned value_bits = default_value_bits) -> std::uint64_t;

    /// Value with the parameter x bound.
    auto eval_term(const Term & t, std::uint64_t x) -> std::uint64_t;

    auto free_variables(const Term & t) -> std::vector<std::string>;
    auto is_closed(const Term & t) -> bool;

    /// Replaces every occurrence of the variable `name`.
    auto substitute(const Term & t, const std::string & name, const Term & replacement) -> Term;

    auto to_string(const Term & t) -> std::string;

    /// Binary length |n|, with |0| = 0.
    auto binary_length(std::uint64_t n) -> std::uint64_t;

    /// The reserved name of the substitution parameter.
    inline const std::string parameter_name = "x";
}
