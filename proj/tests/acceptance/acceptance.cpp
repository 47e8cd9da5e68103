// Prints one PASS/FAIL line per acceptance criterion; exits non-zero if any fails.

#include "extract_oracles.hpp"
#include "graph_fixtures.hpp"
#include "proof_fixtures.hpp"
#include "search_oracles.hpp"
#include "tree_oracles.hpp"

#include "npls/extract/npls_compiler.hpp"
#include "npls/extract/pls_compiler.hpp"
#include "npls/extract/witness.hpp"
#include "npls/graph/family.hpp"
#include "npls/proof/generate.hpp"
#include "npls/search/verify.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

using namespace npls;
using proof::NodePath;
using search::PointId;

namespace
{
    using Clock = std::chrono::steady_clock;

    struct Outcome
    {
        bool pass = true;
        std::string detail;
        std::vector<std::string> failures;

        void require(bool ok, const std::string & what)
        {
            if (! ok) {
                pass = false;
                if (failures.size() < 5)
                    failures.push_back(what);
            }
        }
    };

    auto seconds_since(Clock::time_point start) -> double
    {
        return std::chrono::duration<double>(Clock::now() - start).count();
    }

    auto fmt(double s) -> std::string
    {
        std::ostringstream out;
        out << std::fixed << std::setprecision(2) << s << " s";
        return out.str();
    }

    struct CorpusEntry
    {
        std::string name;
        search::NplsInstance inst;
        std::uint64_t x = 0;
    };

    auto nested_corpus() -> std::vector<CorpusEntry>
    {
        std::vector<CorpusEntry> corpus;
        for (std::uint64_t seed = 1; seed <= 20; ++seed)
            corpus.push_back({"family seed " + std::to_string(seed),
                graph::npls_from_family(graph::generate_family(seed, 3, 8)), 0});
        auto ctx = extract::make_context(npls::testing::d3(), proof::Mode::npls);
        corpus.push_back({"D3", extract::build_npls(ctx), ctx->x()});
        return corpus;
    }

    auto conformance() -> Outcome
    {
        Outcome o;
        auto start = Clock::now();
        auto corpus = nested_corpus();
        for (auto & entry : corpus) {
            try {
                auto report = search::verify_npls_conditions(entry.inst, entry.x);
                o.require(report.all_passed(), entry.name + ":\n" + report.render());
            }
            catch (const std::exception & e) {
                o.require(false, entry.name + ": " + e.what());
            }
        }
        auto elapsed = seconds_since(start);
        o.require(elapsed < 10.0, "runtime " + fmt(elapsed) + " exceeds 10 s");
        o.detail = std::to_string(corpus.size()) + " instances, all nine condition groups checked, " + fmt(elapsed);
        return o;
    }

    auto totality() -> Outcome
    {
        Outcome o;
        auto start = Clock::now();
        auto corpus = nested_corpus();
        std::size_t rows = 0;
        for (auto & entry : corpus) {
            try {
                auto [y, trace] = search::solve_npls(entry.inst, entry.x);
                auto top = entry.inst.initial_source(entry.x);
                o.require(entry.inst.neighbor(entry.x, top, y, y), entry.name + ": output is not a self-loop");
                std::set<PointId> sources;
                for (auto & step : trace.steps)
                    sources.insert(step.source);
                for (auto s : sources) {
                    auto z = search::brute_force_npls(entry.inst, entry.x, s);
                    o.require(entry.inst.neighbor(entry.x, s, z, z),
                        entry.name + ": brute force found no solution in row " + std::to_string(s.bits));
                    ++rows;
                }
            }
            catch (const std::exception & e) {
                o.require(false, entry.name + ": " + e.what());
            }
        }
        auto elapsed = seconds_since(start);
        o.require(elapsed < 10.0, "runtime " + fmt(elapsed) + " exceeds 10 s");
        o.detail = std::to_string(corpus.size()) + " instances solved, " + std::to_string(rows)
                 + " visited rows confirmed by brute force, " + fmt(elapsed);
        return o;
    }

    void check_depth_and_size(Outcome & o, const std::string & name, const proof::Derivation & d)
    {
        proof::NodeTree tree(d);
        o.require(tree.max_depth() <= 10, name + ": depth " + std::to_string(tree.max_depth()) + " > 10");
        o.require(tree.size() <= 500, name + ": " + std::to_string(tree.size()) + " nodes > 500");
    }

    auto nested_soundness() -> Outcome
    {
        Outcome o;
        std::size_t cases = 0, descents = 0;
        auto check = [&](const std::string & name, const proof::Derivation & d) {
            try {
                auto ctx = extract::make_context(d, proof::Mode::npls);
                auto report = extract::extract_witness_npls(ctx);
                auto scan = npls::testing::end_formula_witnesses(d);
                o.require(report.verified, name + ": witness " + std::to_string(report.witness) + " not verified");
                o.require(scan.contains(report.witness), name + ": witness not found by the Sb1 scan");
                for (auto & step : report.trace.steps)
                    descents += step.action == search::StepAction::descend;
                ++cases;
            }
            catch (const std::exception & e) {
                o.require(false, name + ": " + e.what());
            }
        };
        for (std::uint64_t x = 0; x <= 7; ++x)
            check("T-D3 at x=" + std::to_string(x), proof::substitute_numeral(npls::testing::t_d3(), x));
        for (std::uint64_t seed = 1; seed <= 12; ++seed) {
            auto d = proof::random_derivation(seed, {proof::Mode::npls, 10, 500});
            auto name = "random class-2 cut derivation seed " + std::to_string(seed);
            check_depth_and_size(o, name, d);
            check(name, d);
        }
        o.detail = std::to_string(cases) + " derivations verified and matched by the Sb1 scan (" + std::to_string(descents)
                 + " row descents)";
        return o;
    }

    auto plain_soundness() -> Outcome
    {
        Outcome o;
        std::size_t cases = 0, longest = 0;
        auto check = [&](const std::string & name, const proof::Derivation & d) {
            try {
                auto ctx = extract::make_context(d, proof::Mode::pls);
                auto report = extract::extract_witness_pls(ctx);
                o.require(report.verified, name + ": witness not verified");
                auto & steps = report.trace.steps;
                for (std::size_t i = 1; i < steps.size(); ++i)
                    o.require(ctx->kb(ctx->path_of(steps[i].target)) < ctx->kb(ctx->path_of(steps[i - 1].target)),
                        name + ": kb does not decrease at step " + std::to_string(i));
                o.require(! steps.empty() && steps.back().action == search::StepAction::solved,
                    name + ": trace does not end in the self-loop");
                o.require(steps.size() <= ctx->tree().size(), name + ": trace longer than the tree");
                longest = std::max(longest, steps.size());
                ++cases;
            }
            catch (const std::exception & e) {
                o.require(false, name + ": " + e.what());
            }
        };
        check("D1", npls::testing::d1());
        check("D2", npls::testing::d2());
        for (std::uint64_t seed = 1; seed <= 12; ++seed) {
            auto d = proof::random_derivation(seed, {proof::Mode::pls, 10, 500});
            check("random class-1 cut derivation seed " + std::to_string(seed), d);
        }
        o.detail = std::to_string(cases) + " derivations verified, kb strictly decreasing, longest trace "
                 + std::to_string(longest);
        return o;
    }

    auto kb_correctness() -> Outcome
    {
        Outcome o;
        auto start = Clock::now();
        std::size_t trees = 0, pairs = 0;
        auto check = [&](const std::string & name, const proof::Derivation & d) {
            proof::NodeTree tree(d);
            std::map<NodePath, std::size_t> index;
            for (auto & a : tree.paths())
                index[a] = proof::kb_index(d, a);
            for (auto & a : tree.paths())
                for (auto & b : tree.paths()) {
                    o.require(npls::testing::kb_precedes(a, b) == (index[a] < index[b]),
                        name + ": " + proof::to_string(a) + " vs " + proof::to_string(b));
                    ++pairs;
                }
            ++trees;
        };
        check("D1", npls::testing::d1());
        check("D2", npls::testing::d2());
        check("D3", npls::testing::d3());
        for (std::uint64_t x = 0; x <= 7; ++x)
            check("T-D3 at x=" + std::to_string(x), proof::substitute_numeral(npls::testing::t_d3(), x));
        check("complete binary tree", npls::testing::shape(npls::testing::complete_binary_tree(3)));
        std::mt19937_64 rng(2024);
        for (int i = 0; i < 50; ++i)
            check("random tree " + std::to_string(i), npls::testing::shape(npls::testing::random_tree(rng, 200)));
        auto elapsed = seconds_since(start);
        o.require(elapsed < 5.0, "runtime " + fmt(elapsed) + " exceeds 5 s");
        o.detail = std::to_string(trees) + " trees, " + std::to_string(pairs) + " ordered pairs, " + fmt(elapsed);
        return o;
    }

    auto rank_zero_collapse() -> Outcome
    {
        Outcome o;
        std::size_t instances = 0;
        auto compare = [&](const std::string & name, const search::NplsInstance & nested, const search::PlsInstance & pls,
                           std::uint64_t x) {
            try {
                auto [y, nested_trace] = search::solve_npls(nested, x);
                auto [p, pls_trace] = search::solve_pls(pls, x);
                o.require(nested_trace.targets() == pls_trace.targets(), name + ": sequences differ");
                o.require(y == p, name + ": results differ");
                ++instances;
            }
            catch (const std::exception & e) {
                o.require(false, name + ": " + e.what());
            }
        };
        for (std::uint64_t n : {1, 2, 5, 17})
            compare("chain " + std::to_string(n), npls::testing::rank_zero_npls(npls::testing::chain_pls(n)),
                npls::testing::chain_pls(n), 0);
        auto g1 = search::steepest_descent_pls(graph::pls_from_digraph(npls::testing::g1_graph(), 0));
        compare("G1", npls::testing::rank_zero_npls(g1), g1, 0);
        for (std::uint64_t seed = 1; seed <= 10; ++seed) {
            auto f = graph::generate_family(seed, 0, 8);
            auto nested = graph::npls_from_family(f);
            compare("rank-0 family seed " + std::to_string(seed), nested, search::rank0_row_pls(nested, PointId{f.top}), 0);
        }
        for (auto & d : {npls::testing::d1(), npls::testing::d2()}) {
            auto pls = extract::build_pls(extract::make_context(d, proof::Mode::pls));
            compare("compiled derivation", npls::testing::rank_zero_npls(pls), pls, d.end_x);
        }
        o.detail = std::to_string(instances) + " rank-0 instances match solve_pls step for step";
        return o;
    }

    struct Mutation
    {
        std::string description;
        proof::Derivation derivation;
        NodePath expected;
    };

    auto mutations() -> std::vector<Mutation>
    {
        using proof::Formula;
        using proof::Literal;
        using proof::Term;
        std::vector<Mutation> out;
        auto add = [&](std::string what, proof::Derivation base, NodePath at,
                       const std::function<void(proof::Derivation &)> & edit) {
            edit(base);
            out.push_back({std::move(what), std::move(base), std::move(at)});
        };
        auto d2 = npls::testing::d2();
        auto d3 = npls::testing::d3();

        add("D2 initial names a false literal", d2, {1, 0}, [](auto & d) { d.nodes[{1, 0}].rule.index = 1; });
        add("D2 initial names a quantified formula", d2, {0}, [](auto & d) { d.nodes[{0}].rule.index = 0; });
        add("D3 initial names a false literal", d3, {2, 1, 0}, [](auto & d) { d.nodes[{2, 1, 0}].rule.index = 2; });
        add("D3 initial names a quantified formula", d3, {0, 0}, [](auto & d) { d.nodes[{0, 0}].rule.index = 1; });

        add("D2 cut bound raised", d2, {}, [](auto & d) { d.nodes[{}].rule.cut_formula.bound = Term::num(3); });
        add("D3 cut bound lowered", d3, {}, [](auto & d) { d.nodes[{}].rule.cut_formula.bound = Term::num(1); });
        add("D2 cut premise removed", d2, {}, [](auto & d) { d.nodes.erase(NodePath{0}); });
        add("D3 Sb2 premise removed", d3, {2, 1}, [](auto & d) { d.nodes.erase(NodePath{2, 1, 1}); });

        add("D2 Sb1 witness at bound", d2, {1}, [](auto & d) { d.nodes[{1}].rule.witness = Term::num(3); });
        add("D2 Sb1 witness beyond bound", d2, {2}, [](auto & d) { d.nodes[{2}].rule.witness = Term::num(5); });
        add("D3 Sb2 witness at bound", d3, {2}, [](auto & d) { d.nodes[{2}].rule.witness = Term::num(2); });
        add("D3 Sb1 witness at bound", d3, {0}, [](auto & d) { d.nodes[{0}].rule.witness = Term::num(2); });

        add("D2 upper drops the end-formula", d2, {2, 0},
            [](auto & d) { d.nodes[{2, 0}].sequent.erase(d.nodes[{2, 0}].sequent.begin()); });
        add("D3 upper drops a left cut formula", d3, {1, 0},
            [](auto & d) { d.nodes[{1, 0}].sequent.erase(d.nodes[{1, 0}].sequent.begin() + 1); });
        add("D3 upper replaces the cut formula", d3, {2, 1, 0}, [](auto & d) {
            d.nodes[{2, 1, 0}].sequent[1] = Formula::lit(Literal{false, Term::num(0), Term::num(0)});
        });
        add("D2 left upper adds the wrong formula", d2, {1}, [](auto & d) {
            d.nodes[{1}].sequent[1] = Formula::lit(Literal{true, Term::apply(proof::Op::add, {Term::num(0), Term::num(1)}),
                Term::num(2)});
        });
        return out;
    }

    auto mutation_robustness() -> Outcome
    {
        Outcome o;
        auto all = mutations();
        std::size_t rejected = 0;
        for (auto & m : all) {
            auto report = proof::validate(m.derivation);
            bool named = false;
            for (auto & issue : report.issues)
                named = named || issue.path == m.expected;
            o.require(! report.ok() && named, m.description + ": expected an issue at " + proof::to_string(m.expected)
                                                  + ", got:\n" + report.render());
            rejected += ! report.ok() && named;
        }
        o.detail = std::to_string(rejected) + "/" + std::to_string(all.size())
                 + " single-field mutations rejected at the offending path";
        return o;
    }
}

int main()
{
    struct Criterion
    {
        const char * id;
        const char * title;
        std::function<Outcome()> run;
    };
    std::vector<Criterion> criteria{
        {"AC1", "condition conformance", conformance},
        {"AC2", "solver totality", totality},
        {"AC3", "nested witness extraction", nested_soundness},
        {"AC4", "plain witness extraction", plain_soundness},
        {"AC5", "Kleene-Brouwer index", kb_correctness},
        {"AC6", "rank-zero collapse", rank_zero_collapse},
        {"AC7", "mutation robustness", mutation_robustness},
    };

    bool all = true;
    for (auto & c : criteria) {
        Outcome o;
        try {
            o = c.run();
        }
        catch (const std::exception & e) {
            o.pass = false;
            o.detail = std::string("aborted: ") + e.what();
        }
        all = all && o.pass;
        std::cout << c.id << " " << (o.pass ? "PASS" : "FAIL") << " " << c.title << ": " << o.detail << '\n';
        for (auto & f : o.failures)
            std::cout << "    " << f << '\n';
    }
    return all ? 0 : 1;
}
