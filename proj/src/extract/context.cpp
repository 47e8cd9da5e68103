#include "npls/extract/context.hpp"

#include "npls/extract/error.hpp"

namespace npls::extract
{
    using proof::NodePath;

    namespace
    {
        void check_derivation(const proof::Derivation & d, proof::Mode mode)
        {
            if (mode == proof::Mode::any)
                throw ExtractError(ExtractErrc::mode_error, "extraction needs pls or npls mode");

            auto report = proof::validate(d, mode);
            for (auto & issue : report.issues)
                if (! issue.mode_violation)
                    throw ExtractError(ExtractErrc::validation_failed, issue.message, issue.path);
            if (! report.ok())
                throw ExtractError(ExtractErrc::mode_error, report.issues.front().message, report.issues.front().path);

            auto & root = d.at({}).sequent;
            if (root.size() != 1 || proof::sigma_class(root.front()) != 1)
                throw ExtractError(ExtractErrc::validation_failed,
                    "end-sequent must be a single class-1 formula, got " + proof::to_string(root), NodePath{});
        }

        auto checked(proof::Derivation d, proof::Mode mode) -> proof::Derivation
        {
            check_derivation(d, mode);
            return d;
        }
    }

    ExtractionContext::ExtractionContext(proof::Derivation d, proof::Mode mode) :
        d_(checked(std::move(d), mode)),
        mode_(mode),
        tree_(d_)
    {
        d_max_ = tree_.max_depth() + 1;
        point_bits_ = std::max<std::uint64_t>(1, search::bit_length(tree_.size() - 1));

        const auto env = d_.env();
        facts_.resize(tree_.size());
        for (std::size_t i = 0; i < tree_.size(); ++i) {
            auto & p = tree_.path(i);
            auto & node = d_.at(p);
            auto & f = facts_[i];
            for (auto & formula : node.sequent)
                if (formula.kind == proof::Formula::Kind::literal && proof::eval_literal(formula.body, env))
                    f.no_true_literal = false;
            if (node.rule.kind == proof::RuleKind::sb1) {
                auto aux = proof::sb1_instance(node.sequent.at(node.rule.index), node.rule.witness);
                f.true_sb1 = proof::eval_literal(aux, env);
            }
            if (! p.is_root()) {
                auto & parent = d_.at(p.parent()).rule;
                f.left_upper = parent.kind == proof::RuleKind::cut && p.last() < d_.value(parent.cut_formula.bound);
            }
        }
    }

    auto ExtractionContext::point_of(const NodePath & p) const -> search::PointId
    {
        return search::PointId{tree_.preorder_index(p)};
    }

    auto ExtractionContext::path_of(search::PointId p) const -> const NodePath &
    {
        if (! is_node(p))
            throw proof::KernelError(proof::KernelErrc::no_such_node, "no node with index " + std::to_string(p.bits));
        return tree_.path(p.bits);
    }

    auto ExtractionContext::principal(const NodePath & p) const -> const proof::Formula &
    {
        auto & node = d_.at(p);
        if (node.rule.kind != proof::RuleKind::sb1 && node.rule.kind != proof::RuleKind::sb2)
            throw ExtractError(ExtractErrc::goal_not_found, "node has no principal formula", p);
        return node.sequent.at(node.rule.index);
    }

    auto ExtractionContext::witness_value(const NodePath & p) const -> std::uint64_t
    {
        principal(p);
        return d_.value(d_.at(p).rule.witness);
    }

    auto ExtractionContext::facts(const NodePath & p) const -> const NodeFacts &
    {
        return facts_[tree_.preorder_index(p)];
    }

    auto make_context(proof::Derivation d, proof::Mode mode) -> ContextPtr
    {
        return std::make_shared<const ExtractionContext>(std::move(d), mode);
    }
}
