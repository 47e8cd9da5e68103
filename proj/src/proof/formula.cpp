#include "npls/proof/formula.hpp"

#include "npls/proof/error.hpp"

namespace npls::proof
{
    auto negate(Literal l) -> Literal
    {
        l.negated = ! l.negated;
        return l;
    }

    auto substitute(const Literal & l, const std::string & name, const Term & replacement) -> Literal
    {
        return Literal{l.negated, substitute(l.lhs, name, replacement), substitute(l.rhs, name, replacement)};
    }

    auto eval_literal(const Literal & l, const Environment & env) -> bool
    {
        return (eval(l.lhs, env) == eval(l.rhs, env)) != l.negated;
    }

    auto eval_literal(const Literal & l, std::uint64_t x) -> bool
    {
        return eval_literal(l, Environment{{parameter_name, x}});
    }

    auto is_closed(const Literal & l) -> bool
    {
        return is_closed(l.lhs) && is_closed(l.rhs);
    }

    auto to_string(const Literal & l) -> std::string
    {
        auto eq = to_string(l.lhs) + " = " + to_string(l.rhs);
        return l.negated ? "!(" + eq + ")" : eq;
    }

    auto Formula::lit(Literal l) -> Formula
    {
        Formula f;
        f.kind = Kind::literal;
        f.body = std::move(l);
        return f;
    }

    auto Formula::ex(std::string v, Term bound, Literal body) -> Formula
    {
        Formula f;
        f.kind = Kind::ex;
        f.var = std::move(v);
        f.bound = std::move(bound);
        f.body = std::move(body);
        return f;
    }

    auto Formula::ex_all(std::string v, Term bound, std::string inner, Term inner_bound, Literal body) -> Formula
    {
        Formula f;
        f.kind = Kind::ex_all;
        f.var = std::move(v);
        f.bound = std::move(bound);
        f.inner_var = std::move(inner);
        f.inner_bound = std::move(inner_bound);
        f.body = std::move(body);
        return f;
    }

    auto sigma_class(const Formula & f) -> unsigned
    {
        switch (f.kind) {
        case Formula::Kind::literal: return 0;
        case Formula::Kind::ex: return 1;
        case Formula::Kind::ex_all: return 2;
        }
        return 0;
    }

    namespace
    {
        const std::string outer_slot = "#0";
        const std::string inner_slot = "#1";
    }

    auto normalized(const Formula & f) -> Formula
    {
        switch (f.kind) {
        case Formula::Kind::literal: return f;
        case Formula::Kind::ex:
            return Formula::ex(outer_slot, f.bound, substitute(f.body, f.var, Term::var(outer_slot)));
        case Formula::Kind::ex_all: {
            // rename the inner binder first so an inner name equal to the outer one stays shadowed
            auto body = substitute(f.body, f.inner_var, Term::var(inner_slot));
            auto inner_bound = substitute(f.inner_bound, f.var, Term::var(outer_slot));
            if (f.inner_var != f.var)
                body = substitute(body, f.var, Term::var(outer_slot));
            return Formula::ex_all(outer_slot, f.bound, inner_slot, inner_bound, body);
        }
        }
        return f;
    }

    auto Formula::operator==(const Formula & other) const -> bool
    {
        if (kind != other.kind)
            return false;
        auto a = normalized(*this);
        auto b = normalized(other);
        return a.body == b.body && a.bound == b.bound && a.inner_bound == b.inner_bound;
    }

    auto substitute(const Formula & f, const std::string & name, const Term & replacement) -> Formula
    {
        Formula result = f;
        switch (f.kind) {
        case Formula::Kind::literal: result.body = substitute(f.body, name, replacement); break;
        case Formula::Kind::ex:
            result.bound = substitute(f.bound, name, replacement);
            if (name != f.var)
                result.body = substitute(f.body, name, replacement);
            break;
        case Formula::Kind::ex_all:
            result.bound = substitute(f.bound, name, replacement);
            if (name != f.var) {
                result.inner_bound = substitute(f.inner_bound, name, replacement);
                if (name != f.inner_var)
                    result.body = substitute(f.body, name, replacement);
            }
            break;
        }
        return result;
    }

    auto is_closed(const Formula & f) -> bool
    {
        auto n = normalized(f);
        Environment probe;
        for (auto & v : free_variables(n.bound))
            probe[v] = 0;
        for (auto & v : free_variables(n.inner_bound))
            if (v != outer_slot)
                probe[v] = 0;
        for (auto & v : free_variables(n.body.lhs))
            if (v != outer_slot && v != inner_slot)
                probe[v] = 0;
        for (auto & v : free_variables(n.body.rhs))
            if (v != outer_slot && v != inner_slot)
                probe[v] = 0;
        return probe.empty();
    }

    namespace
    {
        auto range(const Term & bound, const Environment & env) -> std::uint64_t
        {
            auto n = eval(bound, env);
            if (n > max_scanned_range)
                throw KernelError(KernelErrc::value_overflow,
                    "quantifier range " + std::to_string(n) + " too large to scan");
            return n;
        }
    }

    auto formula_truth(const Formula & f, const Environment & env) -> bool
    {
        switch (f.kind) {
        case Formula::Kind::literal: return eval_literal(f.body, env);
        case Formula::Kind::ex: {
            auto n = range(f.bound, env);
            for (std::uint64_t v = 0; v < n; ++v) {
                auto inner = env;
                inner[f.var] = v;
                if (eval_literal(f.body, inner))
                    return true;
            }
            return false;
        }
        case Formula::Kind::ex_all: {
            auto n = range(f.bound, env);
            for (std::uint64_t v = 0; v < n; ++v) {
                auto outer = env;
                outer[f.var] = v;
                auto m = range(f.inner_bound, outer);
                bool all = true;
                for (std::uint64_t w = 0; w < m && all; ++w) {
                    auto inner = outer;
                    inner[f.inner_var] = w;
                    all = eval_literal(f.body, inner);
                }
                if (all)
                    return true;
            }
            return false;
        }
        }
        return false;
    }

    auto sb1_instance(const Formula & f, const Term & witness) -> Literal
    {
        return substitute(f.body, f.var, witness);
    }

    auto sb2_instance(const Formula & f, const Term & witness, std::uint64_t n) -> Literal
    {
        auto body = f.body;
        if (f.inner_var != f.var)
            body = substitute(body, f.var, witness);
        return substitute(body, f.inner_var, Term::num(n));
    }

    auto left_cut_formula(const Formula & cut, std::uint64_t n) -> Formula
    {
        if (cut.kind == Formula::Kind::ex)
            return Formula::lit(negate(substitute(cut.body, cut.var, Term::num(n))));
        auto body = cut.body;
        if (cut.inner_var != cut.var)
            body = substitute(body, cut.var, Term::num(n));
        return Formula::ex(cut.inner_var, substitute(cut.inner_bound, cut.var, Term::num(n)), negate(body));
    }

    auto to_string(const Formula & f) -> std::string
    {
        switch (f.kind) {
        case Formula::Kind::literal: return to_string(f.body);
        case Formula::Kind::ex: return "E " + f.var + "<" + to_string(f.bound) + ". " + to_string(f.body);
        case Formula::Kind::ex_all:
            return "E " + f.var + "<" + to_string(f.bound) + " A " + f.inner_var + "<" + to_string(f.inner_bound) + ". "
                + to_string(f.body);
        }
        return "?";
    }

    auto count(const Sequent & s, const Formula & f) -> std::size_t
    {
        std::size_t n = 0;
        for (auto & g : s)
            n += g == f;
        return n;
    }

    auto contains(const Sequent & upper, const Sequent & lower) -> bool
    {
        for (auto & f : lower)
            if (count(upper, f) < count(lower, f))
                return false;
        return true;
    }

    auto difference(const Sequent & upper, const Sequent & lower) -> Sequent
    {
        Sequent rest = upper;
        for (auto & f : lower)
            for (auto it = rest.begin(); it != rest.end(); ++it)
                if (*it == f) {
                    rest.erase(it);
                    break;
                }
        return rest;
    }

    auto to_string(const Sequent & s) -> std::string
    {
        std::string out;
        for (std::size_t i = 0; i < s.size(); ++i)
            out += (i ? ", " : "") + to_string(s[i]);
        return out;
    }
}
