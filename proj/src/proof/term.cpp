#include "npls/proof/term.hpp"

#include "npls/proof/error.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace npls::proof
{
    auto to_string(Op op) -> std::string
    {
        switch (op) {
        case Op::add: return "add";
        case Op::mul: return "mul";
        case Op::monus: return "monus";
        case Op::len: return "len";
        case Op::smash: return "smash";
        case Op::div2: return "div2";
        case Op::cond: return "cond";
        }
        return "?";
    }

    auto parse_op(const std::string & name) -> std::optional<Op>
    {
        for (auto op : {Op::add, Op::mul, Op::monus, Op::len, Op::smash, Op::div2, Op::cond})
            if (to_string(op) == name)
                return op;
        return std::nullopt;
    }

    auto arity(Op op) -> std::size_t
    {
        switch (op) {
        case Op::len:
        case Op::div2: return 1;
        case Op::cond: return 3;
        default: return 2;
        }
    }

    auto Term::num(std::uint64_t n) -> Term
    {
        Term t;
        t.kind = Kind::numeral;
        t.value = n;
        return t;
    }

    auto Term::var(std::string name) -> Term
    {
        Term t;
        t.kind = Kind::variable;
        t.name = std::move(name);
        return t;
    }

    auto Term::apply(Op op, std::vector<Term> args) -> Term
    {
        if (args.size() != arity(op))
            throw KernelError(KernelErrc::bad_arity,
                to_string(op) + " takes " + std::to_string(arity(op)) + " arguments, got " + std::to_string(args.size()));
        Term t;
        t.kind = Kind::apply;
        t.op = op;
        t.args = std::move(args);
        return t;
    }

    auto binary_length(std::uint64_t n) -> std::uint64_t
    {
        return std::bit_width(n);
    }

    namespace
    {
        auto checked(std::uint64_t v, unsigned value_bits, const Term & t) -> std::uint64_t
        {
            if (value_bits < 64 && (v >> value_bits) != 0)
                throw KernelError(KernelErrc::value_overflow,
                    "value of " + to_string(t) + " exceeds " + std::to_string(value_bits) + " bits");
            return v;
        }

        [[noreturn]] void overflow(const Term & t)
        {
            throw KernelError(KernelErrc::value_overflow, "value of " + to_string(t) + " exceeds 64 bits");
        }
    }

    auto eval(const Term & t, const Environment & env, unsigned value_bits) -> std::uint64_t
    {
        switch (t.kind) {
        case Term::Kind::numeral: return checked(t.value, value_bits, t);
        case Term::Kind::variable: {
            auto it = env.find(t.name);
            if (it == env.end())
                throw KernelError(KernelErrc::open_term, "variable " + t.name + " is unbound");
            return checked(it->second, value_bits, t);
        }
        case Term::Kind::apply: break;
        }

        if (t.args.size() != arity(t.op))
            throw KernelError(KernelErrc::bad_arity, to_string(t.op) + " applied to " + std::to_string(t.args.size())
                    + " arguments");

        auto arg = [&](std::size_t i) { return eval(t.args[i], env, value_bits); };
        std::uint64_t result = 0;
        switch (t.op) {
        case Op::add:
            if (__builtin_add_overflow(arg(0), arg(1), &result))
                overflow(t);
            break;
        case Op::mul:
            if (__builtin_mul_overflow(arg(0), arg(1), &result))
                overflow(t);
            break;
        case Op::monus: {
            auto a = arg(0), b = arg(1);
            result = a > b ? a - b : 0;
            break;
        }
        case Op::len: result = binary_length(arg(0)); break;
        case Op::smash: {
            auto exponent = binary_length(arg(0)) * binary_length(arg(1));
            if (exponent >= 64)
                overflow(t);
            result = std::uint64_t{1} << exponent;
            break;
        }
        case Op::div2: result = arg(0) / 2; break;
        case Op::cond: result = arg(0) > 0 ? arg(1) : arg(2); break;
        }
        return checked(result, value_bits, t);
    }

    auto eval_term(const Term & t, std::uint64_t x) -> std::uint64_t
    {
        return eval(t, Environment{{parameter_name, x}});
    }

    namespace
    {
        void collect(const Term & t, std::set<std::string> & out)
        {
            if (t.kind == Term::Kind::variable)
                out.insert(t.name);
            for (auto & a : t.args)
                collect(a, out);
        }
    }

    auto free_variables(const Term & t) -> std::vector<std::string>
    {
        std::set<std::string> names;
        collect(t, names);
        return {names.begin(), names.end()};
    }

    auto is_closed(const Term & t) -> bool
    {
        if (t.kind == Term::Kind::variable)
            return false;
        return std::all_of(t.args.begin(), t.args.end(), [](const Term & a) { return is_closed(a); });
    }

    auto substitute(const Term & t, const std::string & name, const Term & replacement) -> Term
    {
        if (t.kind == Term::Kind::variable)
            return t.name == name ? replacement : t;
        if (t.kind == Term::Kind::numeral)
            return t;
        Term result = t;
        for (auto & a : result.args)
            a = substitute(a, name, replacement);
        return result;
    }

    auto to_string(const Term & t) -> std::string
    {
        switch (t.kind) {
        case Term::Kind::numeral: return std::to_string(t.value);
        case Term::Kind::variable: return t.name;
        case Term::Kind::apply: break;
        }
        auto infix = [&](const char * sym) {
            return "(" + to_string(t.args[0]) + sym + to_string(t.args[1]) + ")";
        };
        switch (t.op) {
        case Op::add: return infix("+");
        case Op::mul: return infix("*");
        case Op::monus: return infix("-.");
        case Op::smash: return infix("#");
        default: break;
        }
        std::string out = to_string(t.op) + "(";
        for (std::size_t i = 0; i < t.args.size(); ++i)
            out += (i ? ", " : "") + to_string(t.args[i]);
        return out + ")";
    }
}
