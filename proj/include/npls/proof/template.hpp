#pragma once

#include "npls/proof/derivation.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace npls::proof
{
    struct TemplateNode;

    /// Either one explicit upper sequent, or a family: `body` replicated
    /// value(bound) times with `index` bound to each child position it fills.
    struct TemplateChild
    {
        std::shared_ptr<const TemplateNode> node;
        bool is_family = false;
        std::string index;
        Term bound;
    };

    /// A derivation schema in the parameter x. Terms may mention x and the
    /// index variables of enclosing families.
    struct TemplateNode
    {
        Sequent sequent;
        Rule rule;
        std::vector<TemplateChild> children;
    };

    struct DerivationTemplate
    {
        TemplateNode root;
        std::optional<std::uint64_t> depth_bound;
    };

    auto explicit_child(TemplateNode node) -> TemplateChild;
    auto family_child(std::string index, Term bound, TemplateNode body) -> TemplateChild;

    /// Expands families and replaces x by the numeral x. Throws
    /// validation_failed if the expansion is not a valid derivation.
    auto substitute_numeral(const DerivationTemplate & tpl, std::uint64_t x) -> Derivation;

    /// Expansion without the validity check.
    auto expand_template(const DerivationTemplate & tpl, std::uint64_t x) -> Derivation;

    /// Template with one explicit child per upper sequent and no families.
    auto template_of(const Derivation & d) -> DerivationTemplate;
}
