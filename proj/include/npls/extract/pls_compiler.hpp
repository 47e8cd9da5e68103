#pragma once

#include "npls/extract/context.hpp"
#include "npls/search/pls.hpp"

namespace npls::extract
{
    /// No closed literal of Seq_sigma is true.
    auto target_condition(const ExtractionContext & ctx, const proof::NodePath & sigma) -> bool;

    /// The first node on the rightmost-child walk from sigma that is an Sb1 node
    /// with a true auxiliary formula or, in npls mode, any Sb2 node. Throws
    /// goal_not_found when the walk reaches a leaf.
    auto rightmost_goal(const ExtractionContext & ctx, const proof::NodePath & sigma) -> proof::NodePath;

    /// f(x, sigma): sigma itself when the goal above it witnesses the
    /// end-formula, otherwise the left upper of the cut that introduced the
    /// goal's principal formula, selected by the goal's witness.
    auto pls_neighbor(const ExtractionContext & ctx, const proof::NodePath & sigma) -> proof::NodePath;

    /// The root, or a left upper of a cut that satisfies target_condition.
    auto pls_feasible(const ExtractionContext & ctx, const proof::NodePath & sigma) -> bool;

    /// PLS over pre-order indices: start at the root, cost = post-order index.
    auto build_pls(ContextPtr ctx) -> search::PlsInstance;
}
