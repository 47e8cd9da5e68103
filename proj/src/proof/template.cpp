#include "npls/proof/template.hpp"

#include <functional>

namespace npls::proof
{
    auto explicit_child(TemplateNode node) -> TemplateChild
    {
        TemplateChild c;
        c.node = std::make_shared<const TemplateNode>(std::move(node));
        return c;
    }

    auto family_child(std::string index, Term bound, TemplateNode body) -> TemplateChild
    {
        TemplateChild c;
        c.node = std::make_shared<const TemplateNode>(std::move(body));
        c.is_family = true;
        c.index = std::move(index);
        c.bound = std::move(bound);
        return c;
    }

    namespace
    {
        using Bindings = std::vector<std::pair<std::string, Term>>;

        auto bind(Term t, const Bindings & b) -> Term
        {
            for (auto it = b.rbegin(); it != b.rend(); ++it)
                t = substitute(t, it->first, it->second);
            return t;
        }

        auto bind(Formula f, const Bindings & b) -> Formula
        {
            for (auto it = b.rbegin(); it != b.rend(); ++it)
                f = substitute(f, it->first, it->second);
            return f;
        }

        class Expander
        {
        public:
            Expander(std::uint64_t x, Derivation & out) : out_(out) { out_.end_x = x; }

            void expand(const TemplateNode & node, const NodePath & at, const Bindings & b)
            {
                DerivationNode dn;
                for (auto & f : node.sequent)
                    dn.sequent.push_back(bind(f, b));
                dn.rule = node.rule;
                dn.rule.witness = bind(node.rule.witness, b);
                dn.rule.cut_formula = bind(node.rule.cut_formula, b);
                out_.nodes[at] = std::move(dn);

                std::uint64_t position = 0;
                for (auto & child : node.children) {
                    if (! child.is_family) {
                        expand(*child.node, at.child(position++), b);
                        continue;
                    }
                    auto count = eval(bind(child.bound, b));
                    for (std::uint64_t k = 0; k < count; ++k, ++position) {
                        auto inner = b;
                        inner.emplace_back(child.index, Term::num(position));
                        expand(*child.node, at.child(position), inner);
                    }
                }
            }

        private:
            Derivation & out_;
        };
    }

    auto expand_template(const DerivationTemplate & tpl, std::uint64_t x) -> Derivation
    {
        Derivation d;
        d.depth_bound = tpl.depth_bound;
        Expander(x, d).expand(tpl.root, NodePath{}, Bindings{{parameter_name, Term::num(x)}});
        return d;
    }

    auto substitute_numeral(const DerivationTemplate & tpl, std::uint64_t x) -> Derivation
    {
        auto d = expand_template(tpl, x);
        auto report = validate(d);
        if (! report.ok())
            throw KernelError(KernelErrc::validation_failed,
                "template expansion at x = " + std::to_string(x) + " is invalid\n" + report.render());
        return d;
    }

    auto template_of(const Derivation & d) -> DerivationTemplate
    {
        NodeTree tree(d);
        std::function<TemplateNode(const NodePath &)> build = [&](const NodePath & p) {
            auto & dn = d.at(p);
            TemplateNode node{dn.sequent, dn.rule, {}};
            for (auto & c : tree.children(p))
                node.children.push_back(explicit_child(build(c)));
            return node;
        };
        DerivationTemplate tpl;
        tpl.depth_bound = d.depth_bound;
        if (d.has(NodePath{}))
            tpl.root = build(NodePath{});
        return tpl;
    }
}
