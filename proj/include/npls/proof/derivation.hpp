#pragma once

#include "npls/proof/error.hpp"
#include "npls/proof/formula.hpp"
#include "npls/proof/path.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace npls::proof
{
    enum class RuleKind
    {
        initial,
        sb1,
        sb2,
        cut,
    };

    auto to_string(RuleKind kind) -> std::string;

    /// Initial: `index` names a true literal of the sequent.
    /// Sb1/Sb2: `index` names the principal formula, `witness` the witnessing term.
    /// Cut: `cut_formula` is the right cut formula E v<s0. B(v).
    struct Rule
    {
        RuleKind kind = RuleKind::initial;
        std::size_t index = 0;
        Term witness;
        Formula cut_formula;

        static auto initial(std::size_t literal) -> Rule;
        static auto sb1(std::size_t principal, Term witness) -> Rule;
        static auto sb2(std::size_t principal, Term witness) -> Rule;
        static auto cut(Formula formula) -> Rule;

        auto operator==(const Rule & other) const -> bool;
    };

    struct DerivationNode
    {
        Sequent sequent;
        Rule rule;

        auto operator==(const DerivationNode &) const -> bool = default;
    };

    /// A derivation tree keyed by node address. Terms may still mention the
    /// parameter x, which evaluates to end_x.
    struct Derivation
    {
        std::uint64_t end_x = 0;
        std::map<NodePath, DerivationNode> nodes;
        std::optional<std::uint64_t> depth_bound;

        auto at(const NodePath & p) const -> const DerivationNode &;
        auto has(const NodePath & p) const -> bool { return nodes.contains(p); }
        auto env() const -> Environment { return Environment{{parameter_name, end_x}}; }
        auto value(const Term & t) const -> std::uint64_t { return eval(t, env()); }

        auto operator==(const Derivation &) const -> bool = default;
    };

    /// Shape of a derivation: nodes reachable from the root through present
    /// parents, in pre-order, with post-order (Kleene-Brouwer) indices.
    class NodeTree
    {
    public:
        explicit NodeTree(const Derivation & d);

        auto size() const -> std::size_t { return paths_.size(); }
        /// Pre-order listing; children in increasing child number.
        auto paths() const -> const std::vector<NodePath> & { return paths_; }
        auto path(std::size_t preorder) const -> const NodePath & { return paths_.at(preorder); }
        auto contains(const NodePath & p) const -> bool { return index_.contains(p); }
        auto preorder_index(const NodePath & p) const -> std::size_t;
        auto kb(const NodePath & p) const -> std::size_t;
        auto children(const NodePath & p) const -> const std::vector<NodePath> &;
        auto max_depth() const -> std::size_t { return max_depth_; }

    private:
        std::vector<NodePath> paths_;
        std::map<NodePath, std::size_t> index_;
        std::vector<std::vector<NodePath>> children_;
        std::vector<std::size_t> kb_;
        std::size_t max_depth_ = 0;
    };

    enum class Mode
    {
        any,
        pls,
        npls,
    };

    auto to_string(Mode mode) -> std::string;

    struct ValidationIssue
    {
        NodePath path;
        std::string message;
        /// The node is well-formed but uses a formula class the mode forbids.
        bool mode_violation = false;
    };

    struct ValidationReport
    {
        std::vector<ValidationIssue> issues;

        auto ok() const -> bool { return issues.empty(); }
        auto has_structural_issues() const -> bool;
        /// One "path: message" line per issue.
        auto render() const -> std::string;
    };

    /// Checks every rule instance, the containment of each lower sequent in its
    /// uppers, closedness, the depth bound and, for pls/npls, the formula classes.
    auto validate(const Derivation & d, Mode mode = Mode::any) -> ValidationReport;

    /// Throws validation_failed on structural issues, mode_error when only the mode is violated.
    void require_valid(const Derivation & d, Mode mode);

    auto kb_index(const Derivation & d, const NodePath & p) -> std::size_t;

    /// Child with the largest child number; throws leaf_node.
    auto rightmost_child(const Derivation & d, const NodePath & p) -> NodePath;

    /// Lowest node on the path to tau whose sequent still contains a: the root
    /// if a persists to the end-sequent. Throws formula_absent if a is not in Seq_tau.
    auto vanishing_point(const Derivation & d, const NodePath & tau, const Formula & a) -> NodePath;
}
