#include "extract_oracles.hpp"

#include <algorithm>
#include <stdexcept>

namespace npls::testing
{
    using proof::NodePath;

    namespace
    {
        auto aux_true(const proof::Derivation & d, const proof::DerivationNode & n) -> bool
        {
            auto aux = proof::sb1_instance(n.sequent.at(n.rule.index), n.rule.witness);
            return proof::eval_literal(aux, d.env());
        }

        auto has_formula(const proof::Sequent & s, const proof::Formula & f) -> bool
        {
            return std::any_of(s.begin(), s.end(), [&](auto & g) { return g == f; });
        }
    }

    auto end_formula_witnesses(const proof::Derivation & d) -> std::set<std::uint64_t>
    {
        std::set<std::uint64_t> out;
        auto & e = d.nodes.at({}).sequent.front();
        for (auto & [p, n] : d.nodes)
            if (n.rule.kind == proof::RuleKind::sb1 && n.sequent.at(n.rule.index) == e && aux_true(d, n))
                out.insert(d.value(n.rule.witness));
        return out;
    }

    auto reference_pls_path(const proof::Derivation & d) -> std::vector<NodePath>
    {
        std::vector<NodePath> path{NodePath{}};
        while (path.size() <= d.nodes.size()) {
            auto tau = path.back();
            while (d.nodes.at(tau).rule.kind != proof::RuleKind::sb1 || ! aux_true(d, d.nodes.at(tau))) {
                std::optional<NodePath> last;
                for (auto & [p, _] : d.nodes)
                    if (! p.is_root() && p.parent() == tau && (! last || p.last() > last->last()))
                        last = p;
                if (! last)
                    throw std::logic_error("walk reached a leaf");
                tau = *last;
            }
            auto & a = d.nodes.at(tau).sequent.at(d.nodes.at(tau).rule.index);

            std::optional<std::size_t> missing;
            for (std::size_t k = 0; k < tau.length(); ++k)
                if (! has_formula(d.nodes.at(tau.prefix(k)).sequent, a))
                    missing = k;
            NodePath next = path.back();
            if (missing)
                next = tau.prefix(*missing).child(d.value(d.nodes.at(tau).rule.witness));
            if (next == path.back())
                return path;
            path.push_back(next);
        }
        throw std::logic_error("walk does not terminate");
    }
}
