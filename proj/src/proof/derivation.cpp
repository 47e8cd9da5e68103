#include "npls/proof/derivation.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace npls::proof
{
    auto to_string(RuleKind kind) -> std::string
    {
        switch (kind) {
        case RuleKind::initial: return "initial";
        case RuleKind::sb1: return "sb1";
        case RuleKind::sb2: return "sb2";
        case RuleKind::cut: return "cut";
        }
        return "?";
    }

    auto to_string(Mode mode) -> std::string
    {
        switch (mode) {
        case Mode::any: return "any";
        case Mode::pls: return "pls";
        case Mode::npls: return "npls";
        }
        return "?";
    }

    auto Rule::initial(std::size_t literal) -> Rule
    {
        Rule r;
        r.kind = RuleKind::initial;
        r.index = literal;
        return r;
    }

    auto Rule::sb1(std::size_t principal, Term witness) -> Rule
    {
        Rule r;
        r.kind = RuleKind::sb1;
        r.index = principal;
        r.witness = std::move(witness);
        return r;
    }

    auto Rule::sb2(std::size_t principal, Term witness) -> Rule
    {
        Rule r = sb1(principal, std::move(witness));
        r.kind = RuleKind::sb2;
        return r;
    }

    auto Rule::cut(Formula formula) -> Rule
    {
        Rule r;
        r.kind = RuleKind::cut;
        r.cut_formula = std::move(formula);
        return r;
    }

    auto Rule::operator==(const Rule & other) const -> bool
    {
        if (kind != other.kind)
            return false;
        switch (kind) {
        case RuleKind::initial: return index == other.index;
        case RuleKind::sb1:
        case RuleKind::sb2: return index == other.index && witness == other.witness;
        case RuleKind::cut: return cut_formula == other.cut_formula;
        }
        return false;
    }

    auto Derivation::at(const NodePath & p) const -> const DerivationNode &
    {
        auto it = nodes.find(p);
        if (it == nodes.end())
            throw KernelError(KernelErrc::no_such_node, "no node " + to_string(p));
        return it->second;
    }

    NodeTree::NodeTree(const Derivation & d)
    {
        if (! d.has(NodePath{}))
            return;

        std::map<NodePath, std::vector<NodePath>> kids;
        for (auto & [p, node] : d.nodes)
            if (! p.is_root())
                kids[p.parent()].push_back(p);

        std::size_t post = 0;
        std::vector<std::size_t> kb_by_pre;
        std::function<void(const NodePath &)> visit = [&](const NodePath & p) {
            auto pre = paths_.size();
            index_[p] = pre;
            paths_.push_back(p);
            children_.emplace_back();
            kb_by_pre.push_back(0);
            max_depth_ = std::max(max_depth_, p.length());
            auto found = kids.find(p);
            if (found != kids.end()) {
                // map order already sorts siblings by child number
                for (auto & c : found->second) {
                    children_[pre].push_back(c);
                    visit(c);
                }
            }
            kb_by_pre[pre] = post++;
        };
        visit(NodePath{});
        kb_ = std::move(kb_by_pre);
    }

    auto NodeTree::preorder_index(const NodePath & p) const -> std::size_t
    {
        auto it = index_.find(p);
        if (it == index_.end())
            throw KernelError(KernelErrc::no_such_node, "no node " + to_string(p));
        return it->second;
    }

    auto NodeTree::kb(const NodePath & p) const -> std::size_t
    {
        return kb_[preorder_index(p)];
    }

    auto NodeTree::children(const NodePath & p) const -> const std::vector<NodePath> &
    {
        return children_[preorder_index(p)];
    }

    auto ValidationReport::has_structural_issues() const -> bool
    {
        return std::any_of(issues.begin(), issues.end(), [](const ValidationIssue & i) { return ! i.mode_violation; });
    }

    auto ValidationReport::render() const -> std::string
    {
        std::ostringstream out;
        for (auto & i : issues)
            out << to_string(i.path) << ": " << i.message << '\n';
        return out.str();
    }

    namespace
    {
        constexpr std::uint64_t max_arity = std::uint64_t{1} << 16;

        class Validator
        {
        public:
            Validator(const Derivation & d, Mode mode) : d_(d), mode_(mode), tree_(d) {}

            auto run() -> ValidationReport
            {
                if (! d_.has(NodePath{})) {
                    issue(NodePath{}, "derivation has no root node");
                    return std::move(report_);
                }
                for (auto & [p, node] : d_.nodes)
                    if (! tree_.contains(p))
                        issue(p, "orphan node: parent " + to_string(p.parent()) + " is missing");
                for (auto & p : tree_.paths())
                    check_node(p, d_.at(p));
                return std::move(report_);
            }

        private:
            void issue(const NodePath & p, std::string message, bool mode_violation = false)
            {
                report_.issues.push_back({p, std::move(message), mode_violation});
            }

            void check_node(const NodePath & p, const DerivationNode & node)
            {
                if (d_.depth_bound && p.length() > *d_.depth_bound)
                    issue(p, "depth " + std::to_string(p.length()) + " exceeds bound " + std::to_string(*d_.depth_bound));

                for (auto & f : node.sequent)
                    check_formula(p, f, "sequent formula");

                try {
                    check_rule(p, node);
                }
                catch (const KernelError & e) {
                    issue(p, e.what());
                }
            }

            void check_formula(const NodePath & p, const Formula & f, const std::string & role)
            {
                if (! closed(f))
                    issue(p, role + " is not closed: " + to_string(f));
                if (mode_ == Mode::pls && sigma_class(f) > 1)
                    issue(p, role + " has class 2 in pls mode: " + to_string(f), true);
            }

            auto closed(const Formula & f) const -> bool
            {
                return is_closed(substitute(f, parameter_name, Term::num(d_.end_x)));
            }

            auto closed(const Term & t) const -> bool
            {
                return is_closed(substitute(t, parameter_name, Term::num(d_.end_x)));
            }

            auto principal(const NodePath & p, const DerivationNode & node, unsigned cls) -> const Formula *
            {
                if (node.rule.index >= node.sequent.size()) {
                    issue(p, "principal index " + std::to_string(node.rule.index) + " out of range");
                    return nullptr;
                }
                auto & f = node.sequent[node.rule.index];
                if (sigma_class(f) != cls) {
                    issue(p, "principal formula has class " + std::to_string(sigma_class(f)) + ", rule needs class "
                            + std::to_string(cls) + ": " + to_string(f));
                    return nullptr;
                }
                return &f;
            }

            /// Children must be exactly 0..arity-1; reports gaps and extras.
            void check_arity(const NodePath & p, std::uint64_t arity)
            {
                auto & kids = tree_.children(p);
                if (arity > max_arity) {
                    issue(p, "rule needs " + std::to_string(arity) + " upper sequents, more than supported");
                    return;
                }
                std::vector<bool> seen(arity, false);
                for (auto & c : kids) {
                    if (c.last() < arity)
                        seen[c.last()] = true;
                    else
                        issue(p, "unexpected upper sequent " + to_string(c) + ": " + to_string(d_.at(p).rule.kind)
                                + " needs " + std::to_string(arity));
                }
                for (std::uint64_t n = 0; n < arity; ++n)
                    if (! seen[n])
                        issue(p, "missing upper sequent " + std::to_string(n) + " of " + std::to_string(arity));
            }

            /// Upper sequent must contain the lower one and add exactly `added`.
            void check_upper(const NodePath & p, std::uint64_t n, const Formula & added, const std::string & what)
            {
                auto c = p.child(n);
                if (! d_.has(c))
                    return;
                auto & lower = d_.at(p).sequent;
                auto & upper = d_.at(c).sequent;
                if (! contains(upper, lower)) {
                    issue(c, "upper sequent does not contain its lower sequent");
                    return;
                }
                auto extra = difference(upper, lower);
                if (extra.size() != 1 || ! (extra[0] == added))
                    issue(c, "upper sequent must add exactly " + what + " " + to_string(added) + ", adds ["
                            + to_string(extra) + "]");
            }

            void check_rule(const NodePath & p, const DerivationNode & node)
            {
                auto & rule = node.rule;
                switch (rule.kind) {
                case RuleKind::initial: {
                    if (! tree_.children(p).empty())
                        issue(p, "initial sequent has upper sequents");
                    if (rule.index >= node.sequent.size()) {
                        issue(p, "initial literal index " + std::to_string(rule.index) + " out of range");
                        return;
                    }
                    auto & f = node.sequent[rule.index];
                    if (f.kind != Formula::Kind::literal) {
                        issue(p, "initial formula is not a literal: " + to_string(f));
                        return;
                    }
                    if (closed(f) && ! eval_literal(f.body, d_.env()))
                        issue(p, "initial literal is false: " + to_string(f));
                    return;
                }
                case RuleKind::sb1: {
                    auto f = principal(p, node, 1);
                    if (! closed(rule.witness)) {
                        issue(p, "witnessing term is not closed: " + to_string(rule.witness));
                        return;
                    }
                    check_arity(p, 1);
                    if (! f || ! closed(*f))
                        return;
                    auto s = d_.value(rule.witness), t = d_.value(f->bound);
                    if (! (s < t))
                        issue(p, "witness value " + std::to_string(s) + " is not below bound " + std::to_string(t));
                    check_upper(p, 0, Formula::lit(sb1_instance(*f, rule.witness)), "auxiliary");
                    return;
                }
                case RuleKind::sb2: {
                    auto f = principal(p, node, 2);
                    if (! closed(rule.witness)) {
                        issue(p, "witnessing term is not closed: " + to_string(rule.witness));
                        return;
                    }
                    if (! f || ! closed(*f)) {
                        check_arity(p, tree_.children(p).size());
                        return;
                    }
                    auto t = d_.value(rule.witness), s0 = d_.value(f->bound);
                    if (! (t < s0))
                        issue(p, "witness value " + std::to_string(t) + " is not below bound " + std::to_string(s0));
                    auto env = d_.env();
                    env[f->var] = t;
                    auto s1 = eval(f->inner_bound, env);
                    check_arity(p, s1);
                    for (std::uint64_t n = 0; n < s1; ++n)
                        check_upper(p, n, Formula::lit(sb2_instance(*f, rule.witness, n)), "auxiliary");
                    return;
                }
                case RuleKind::cut: {
                    auto & c = rule.cut_formula;
                    if (c.kind == Formula::Kind::literal) {
                        issue(p, "cut formula must be existential: " + to_string(c));
                        return;
                    }
                    if (! closed(c)) {
                        issue(p, "cut formula is not closed: " + to_string(c));
                        return;
                    }
                    if (mode_ == Mode::pls && sigma_class(c) != 1)
                        issue(p, "cut formula has class 2 in pls mode", true);
                    if (mode_ == Mode::npls && sigma_class(c) != 2)
                        issue(p, "cut formula has class 1 in npls mode", true);
                    auto s0 = d_.value(c.bound);
                    check_arity(p, s0 + 1);
                    for (std::uint64_t n = 0; n < s0; ++n)
                        check_upper(p, n, left_cut_formula(c, n), "left cut formula");
                    check_upper(p, s0, c, "right cut formula");
                    return;
                }
                }
            }

            const Derivation & d_;
            Mode mode_;
            NodeTree tree_;
            ValidationReport report_;
        };
    }

    auto validate(const Derivation & d, Mode mode) -> ValidationReport
    {
        return Validator(d, mode).run();
    }

    void require_valid(const Derivation & d, Mode mode)
    {
        auto report = validate(d, mode);
        if (report.ok())
            return;
        if (report.has_structural_issues())
            throw KernelError(KernelErrc::validation_failed, "\n" + report.render());
        throw KernelError(KernelErrc::mode_error, "derivation does not fit " + to_string(mode) + " mode\n" + report.render());
    }

    auto kb_index(const Derivation & d, const NodePath & p) -> std::size_t
    {
        return NodeTree(d).kb(p);
    }

    auto rightmost_child(const Derivation & d, const NodePath & p) -> NodePath
    {
        NodeTree tree(d);
        auto & kids = tree.children(p);
        if (kids.empty())
            throw KernelError(KernelErrc::leaf_node, to_string(p) + " is a leaf");
        return kids.back();
    }

    auto vanishing_point(const Derivation & d, const NodePath & tau, const Formula & a) -> NodePath
    {
        if (count(d.at(tau).sequent, a) == 0)
            throw KernelError(KernelErrc::formula_absent, to_string(a) + " is not in the sequent at " + to_string(tau));
        auto lambda = tau;
        while (! lambda.is_root() && count(d.at(lambda.parent()).sequent, a) > 0)
            lambda = lambda.parent();
        return lambda;
    }
}
