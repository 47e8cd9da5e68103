#pragma once

#include "npls/proof/derivation.hpp"
#include "npls/search/types.hpp"

#include <cstdint>
#include <memory>
#include <vector>

namespace npls::extract
{
    /// A validated derivation prepared for one of the two compilers, with the
    /// per-node facts both of them consult. Points of the compiled search
    /// problems are pre-order node indices.
    class ExtractionContext
    {
    public:
        /// Throws ExtractError(validation_failed) for invalid derivations or an
        /// end-sequent that is not a single class-1 formula, and
        /// ExtractError(mode_error) when only the formula classes break `mode`.
        ExtractionContext(proof::Derivation d, proof::Mode mode);

        auto derivation() const -> const proof::Derivation & { return d_; }
        auto tree() const -> const proof::NodeTree & { return tree_; }
        auto mode() const -> proof::Mode { return mode_; }
        /// Largest node depth plus one.
        auto d_max() const -> std::uint64_t { return d_max_; }
        auto end_formula() const -> const proof::Formula & { return d_.at({}).sequent.front(); }
        auto x() const -> std::uint64_t { return d_.end_x; }

        /// Bits per point: the binary length of the largest pre-order index, at least 1.
        auto point_bits() const -> std::uint64_t { return point_bits_; }
        auto point_of(const proof::NodePath & p) const -> search::PointId;
        auto is_node(search::PointId p) const -> bool { return p.bits < tree_.size(); }
        auto path_of(search::PointId p) const -> const proof::NodePath &;

        auto sequent(const proof::NodePath & p) const -> const proof::Sequent & { return d_.at(p).sequent; }
        auto rule(const proof::NodePath & p) const -> const proof::Rule & { return d_.at(p).rule; }
        auto is_sb1(const proof::NodePath & p) const -> bool { return rule(p).kind == proof::RuleKind::sb1; }
        auto is_sb2(const proof::NodePath & p) const -> bool { return rule(p).kind == proof::RuleKind::sb2; }
        /// An Sb1 node whose auxiliary literal L(witness) is true.
        auto is_true_sb1(const proof::NodePath & p) const -> bool { return facts(p).true_sb1; }
        /// Principal formula of an Sb1 or Sb2 node.
        auto principal(const proof::NodePath & p) const -> const proof::Formula &;
        auto witness_value(const proof::NodePath & p) const -> std::uint64_t;
        /// A child of a cut other than its right upper.
        auto is_left_upper(const proof::NodePath & p) const -> bool { return facts(p).left_upper; }
        /// No literal of the sequent is true.
        auto no_true_literal(const proof::NodePath & p) const -> bool { return facts(p).no_true_literal; }
        auto kb(const proof::NodePath & p) const -> std::size_t { return tree_.kb(p); }

    private:
        struct NodeFacts
        {
            bool true_sb1 = false;
            bool left_upper = false;
            bool no_true_literal = true;
        };

        auto facts(const proof::NodePath & p) const -> const NodeFacts &;

        proof::Derivation d_;
        proof::Mode mode_;
        proof::NodeTree tree_;
        std::uint64_t d_max_ = 0;
        std::uint64_t point_bits_ = 1;
        std::vector<NodeFacts> facts_;
    };

    using ContextPtr = std::shared_ptr<const ExtractionContext>;

    auto make_context(proof::Derivation d, proof::Mode mode) -> ContextPtr;
}
