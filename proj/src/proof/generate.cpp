#include "npls/proof/generate.hpp"

#include <random>

namespace npls::proof
{
    namespace
    {
        class Builder
        {
        public:
            Builder(std::uint64_t seed, const RandomDerivationOptions & options) :
                rng_(seed),
                options_(options)
            {
            }

            auto run() -> std::optional<Derivation>
            {
                auto end_formula = true_end_formula();
                build(NodePath{}, Sequent{end_formula}, true);
                if (d_.nodes.size() > options_.max_nodes)
                    return std::nullopt;
                return std::move(d_);
            }

        private:
            auto below(std::uint64_t n) -> std::uint64_t { return rng_() % n; }
            auto chance(std::uint64_t num, std::uint64_t den) -> bool { return below(den) < num; }

            auto small_op(const Term & a, const Term & b) -> Term
            {
                static constexpr Op ops[] = {Op::add, Op::mul, Op::monus};
                return Term::apply(ops[below(3)], {a, b});
            }

            auto class1(const std::string & v) -> Formula
            {
                Literal body{chance(1, 4), small_op(Term::var(v), Term::num(below(4))), Term::num(below(7))};
                return Formula::ex(v, Term::num(1 + below(4)), body);
            }

            auto class2() -> Formula
            {
                auto z = Term::var("z"), y = Term::var("y");
                Term lhs;
                switch (below(3)) {
                case 0: lhs = Term::apply(Op::mul, {z, y}); break;
                case 1: lhs = Term::apply(Op::add, {z, y}); break;
                default: lhs = Term::apply(Op::monus, {y, z}); break;
                }
                Term rhs;
                switch (below(3)) {
                case 0: rhs = y; break;
                case 1: rhs = Term::num(below(4)); break;
                default: rhs = Term::apply(Op::add, {y, Term::num(below(3))}); break;
                }
                Literal body{chance(1, 4), lhs, rhs};
                return Formula::ex_all("z", Term::num(1 + below(3)), "y", Term::num(1 + below(3)), body);
            }

            auto true_end_formula() -> Formula
            {
                for (;;) {
                    auto f = class1("y");
                    if (formula_truth(f))
                        return f;
                }
            }

            static auto truth(const Formula & f) -> bool { return formula_truth(f); }

            /// Witness values < bound making the instance true.
            static auto true_witnesses(const Formula & f) -> std::vector<std::uint64_t>
            {
                std::vector<std::uint64_t> out;
                auto s0 = eval(f.bound);
                for (std::uint64_t w = 0; w < s0; ++w) {
                    if (f.kind == Formula::Kind::ex) {
                        if (eval_literal(sb1_instance(f, Term::num(w)), Environment{}))
                            out.push_back(w);
                        continue;
                    }
                    Environment env{{f.var, w}};
                    auto s1 = eval(f.inner_bound, env);
                    bool all = true;
                    for (std::uint64_t n = 0; n < s1 && all; ++n)
                        all = eval_literal(sb2_instance(f, Term::num(w), n), Environment{});
                    if (all)
                        out.push_back(w);
                }
                return out;
            }

            auto pick_witness(const Formula & f, bool prefer_true) -> std::uint64_t
            {
                auto good = true_witnesses(f);
                if (! good.empty() && (prefer_true || chance(1, 2)))
                    return good[below(good.size())];
                return below(eval(f.bound));
            }

            void leaf(const NodePath & p, const Sequent & gamma, std::size_t literal)
            {
                d_.nodes[p] = DerivationNode{gamma, Rule::initial(literal)};
            }

            auto true_literal(const Sequent & gamma) -> std::optional<std::size_t>
            {
                for (std::size_t i = 0; i < gamma.size(); ++i)
                    if (gamma[i].kind == Formula::Kind::literal && truth(gamma[i]))
                        return i;
                return std::nullopt;
            }

            auto indices_of(const Sequent & gamma, Formula::Kind kind, bool only_true) -> std::vector<std::size_t>
            {
                std::vector<std::size_t> out;
                for (std::size_t i = 0; i < gamma.size(); ++i)
                    if (gamma[i].kind == kind && (! only_true || truth(gamma[i])))
                        out.push_back(i);
                return out;
            }

            void apply_sb1(const NodePath & p, const Sequent & gamma, std::size_t i, bool prefer_true, bool closing)
            {
                auto & f = gamma[i];
                auto w = Term::num(pick_witness(f, prefer_true));
                d_.nodes[p] = DerivationNode{gamma, Rule::sb1(i, w)};
                auto upper = gamma;
                upper.push_back(Formula::lit(sb1_instance(f, w)));
                build(p.child(0), upper, false, closing);
            }

            void apply_sb2(const NodePath & p, const Sequent & gamma, std::size_t i, bool prefer_true, bool closing)
            {
                auto & f = gamma[i];
                auto t = pick_witness(f, prefer_true);
                auto w = Term::num(t);
                d_.nodes[p] = DerivationNode{gamma, Rule::sb2(i, w)};
                auto s1 = eval(f.inner_bound, Environment{{f.var, t}});
                for (std::uint64_t n = 0; n < s1; ++n) {
                    auto upper = gamma;
                    upper.push_back(Formula::lit(sb2_instance(f, w, n)));
                    build(p.child(n), upper, false, closing);
                }
            }

            /// A cut formula none of whose upper additions already occur in gamma.
            auto fresh_cut(const Sequent & gamma) -> std::optional<Formula>
            {
                for (int attempt = 0; attempt < 20; ++attempt) {
                    auto c = options_.mode == Mode::pls ? class1("z") : class2();
                    bool fresh = count(gamma, c) == 0;
                    auto s0 = eval(c.bound);
                    for (std::uint64_t n = 0; n < s0 && fresh; ++n)
                        fresh = count(gamma, left_cut_formula(c, n)) == 0;
                    if (fresh)
                        return c;
                }
                return std::nullopt;
            }

            auto apply_cut(const NodePath & p, const Sequent & gamma) -> bool
            {
                auto c = fresh_cut(gamma);
                if (! c)
                    return false;
                d_.nodes[p] = DerivationNode{gamma, Rule::cut(*c)};
                auto s0 = eval(c->bound);
                for (std::uint64_t n = 0; n <= s0; ++n) {
                    auto upper = gamma;
                    upper.push_back(n < s0 ? left_cut_formula(*c, n) : *c);
                    build(p.child(n), upper, false);
                }
                return true;
            }

            /// Shortest proof: a true literal, else a true class-1 or class-2 formula witnessed.
            void close(const NodePath & p, const Sequent & gamma)
            {
                if (auto i = true_literal(gamma)) {
                    leaf(p, gamma, *i);
                    return;
                }
                auto ones = indices_of(gamma, Formula::Kind::ex, true);
                if (! ones.empty()) {
                    apply_sb1(p, gamma, ones.back(), true, true);
                    return;
                }
                auto twos = indices_of(gamma, Formula::Kind::ex_all, true);
                apply_sb2(p, gamma, twos.at(twos.size() - 1), true, true);
            }

            void build(const NodePath & p, const Sequent & gamma, bool root, bool closing = false)
            {
                if (closing || p.length() + 3 > options_.max_depth || d_.nodes.size() * 3 > options_.max_nodes) {
                    close(p, gamma);
                    return;
                }
                if (root && apply_cut(p, gamma))
                    return;

                // Working on the newest formula first keeps the end-formula for last,
                // so solutions sit in left uppers and searches have to descend.
                auto & newest = gamma.back();
                if (chance(3, 4)) {
                    if (newest.kind == Formula::Kind::ex) {
                        apply_sb1(p, gamma, gamma.size() - 1, chance(1, 2), false);
                        return;
                    }
                    if (newest.kind == Formula::Kind::ex_all) {
                        apply_sb2(p, gamma, gamma.size() - 1, chance(1, 3), false);
                        return;
                    }
                }

                if (newest.kind == Formula::Kind::literal && ! truth(newest) && chance(1, 2) && apply_cut(p, gamma))
                    return;

                auto lit = true_literal(gamma);
                auto ones = indices_of(gamma, Formula::Kind::ex, false);
                auto twos = indices_of(gamma, Formula::Kind::ex_all, false);
                for (;;) {
                    switch (below(5)) {
                    case 0:
                        if (lit) {
                            leaf(p, gamma, *lit);
                            return;
                        }
                        break;
                    case 1:
                    case 2:
                        if (! ones.empty()) {
                            auto i = ones[below(ones.size())];
                            apply_sb1(p, gamma, i, i == 0 ? chance(1, 3) : chance(2, 3), false);
                            return;
                        }
                        break;
                    case 3:
                        if (! twos.empty()) {
                            apply_sb2(p, gamma, twos[below(twos.size())], chance(1, 2), false);
                            return;
                        }
                        break;
                    default:
                        if (apply_cut(p, gamma))
                            return;
                        break;
                    }
                }
            }

            std::mt19937_64 rng_;
            RandomDerivationOptions options_;
            Derivation d_;
        };
    }

    auto random_derivation(std::uint64_t seed, const RandomDerivationOptions & options) -> Derivation
    {
        for (std::uint64_t attempt = 0;; ++attempt) {
            if (auto d = Builder(seed * 7919 + attempt, options).run())
                return std::move(*d);
        }
    }
}
