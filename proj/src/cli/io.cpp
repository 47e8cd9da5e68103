#include "npls/cli/io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace npls::cli
{
    using Json = nlohmann::ordered_json;
    using namespace proof;

    namespace
    {
        auto dump(const Json & j) -> std::string
        {
            return j.dump(2) + "\n";
        }

        auto load(const std::string & text) -> Json
        {
            try {
                return Json::parse(text);
            }
            catch (const Json::exception & e) {
                throw ParseError(std::string("invalid JSON: ") + e.what());
            }
        }

        auto field(const Json & j, const char * key) -> const Json &
        {
            if (! j.is_object() || ! j.contains(key))
                throw ParseError(std::string("missing field \"") + key + "\" in " + j.dump());
            return j.at(key);
        }

        auto natural(const Json & j) -> std::uint64_t
        {
            if (! j.is_number_unsigned())
                throw ParseError("expected a natural number, got " + j.dump());
            return j.get<std::uint64_t>();
        }

        auto text(const Json & j) -> std::string
        {
            if (! j.is_string())
                throw ParseError("expected a string, got " + j.dump());
            return j.get<std::string>();
        }

        auto array(const Json & j) -> const Json &
        {
            if (! j.is_array())
                throw ParseError("expected an array, got " + j.dump());
            return j;
        }

        auto term_json(const Term & t) -> Json
        {
            switch (t.kind) {
            case Term::Kind::numeral: return Json{{"num", t.value}};
            case Term::Kind::variable: return Json{{"var", t.name}};
            case Term::Kind::apply: {
                Json args = Json::array();
                for (auto & a : t.args)
                    args.push_back(term_json(a));
                return Json{{"op", to_string(t.op)}, {"args", args}};
            }
            }
            return {};
        }

        auto term_of(const Json & j) -> Term
        {
            if (j.is_object() && j.contains("num"))
                return Term::num(natural(j.at("num")));
            if (j.is_object() && j.contains("var"))
                return Term::var(text(j.at("var")));
            auto name = text(field(j, "op"));
            auto op = parse_op(name);
            if (! op)
                throw ParseError("unknown operator \"" + name + "\"");
            std::vector<Term> args;
            for (auto & a : array(field(j, "args")))
                args.push_back(term_of(a));
            try {
                return Term::apply(*op, std::move(args));
            }
            catch (const KernelError & e) {
                throw ParseError(e.what());
            }
        }

        auto literal_json(const Literal & l) -> Json
        {
            return Json{{"neg", l.negated}, {"lhs", term_json(l.lhs)}, {"rhs", term_json(l.rhs)}};
        }

        auto literal_of(const Json & j) -> Literal
        {
            auto & neg = field(j, "neg");
            if (! neg.is_boolean())
                throw ParseError("\"neg\" must be a boolean");
            return Literal{neg.get<bool>(), term_of(field(j, "lhs")), term_of(field(j, "rhs"))};
        }

        auto formula_json(const Formula & f) -> Json
        {
            switch (f.kind) {
            case Formula::Kind::literal: return literal_json(f.body);
            case Formula::Kind::ex:
                return Json{{"ex", {{"v", f.var}, {"bound", term_json(f.bound)}, {"body", literal_json(f.body)}}}};
            case Formula::Kind::ex_all: {
                Json all{{"v", f.inner_var}, {"bound", term_json(f.inner_bound)}, {"body", literal_json(f.body)}};
                return Json{{"ex", {{"v", f.var}, {"bound", term_json(f.bound)}, {"all", all}}}};
            }
            }
            return {};
        }

        auto formula_of(const Json & j) -> Formula
        {
            if (! j.is_object() || ! j.contains("ex"))
                return Formula::lit(literal_of(j));
            auto & ex = j.at("ex");
            auto v = text(field(ex, "v"));
            auto bound = term_of(field(ex, "bound"));
            if (ex.contains("all")) {
                auto & all = ex.at("all");
                return Formula::ex_all(v, bound, text(field(all, "v")), term_of(field(all, "bound")),
                    literal_of(field(all, "body")));
            }
            return Formula::ex(v, bound, literal_of(field(ex, "body")));
        }

        auto rule_json(const Rule & r) -> Json
        {
            switch (r.kind) {
            case RuleKind::initial: return Json{{"kind", "initial"}, {"literal", r.index}};
            case RuleKind::sb1:
            case RuleKind::sb2:
                return Json{{"kind", to_string(r.kind)}, {"principal", r.index}, {"witness", term_json(r.witness)}};
            case RuleKind::cut: return Json{{"kind", "cut"}, {"formula", formula_json(r.cut_formula)}};
            }
            return {};
        }

        auto rule_of(const Json & j) -> Rule
        {
            auto kind = text(field(j, "kind"));
            if (kind == "initial")
                return Rule::initial(natural(field(j, "literal")));
            if (kind == "sb1")
                return Rule::sb1(natural(field(j, "principal")), term_of(field(j, "witness")));
            if (kind == "sb2")
                return Rule::sb2(natural(field(j, "principal")), term_of(field(j, "witness")));
            if (kind == "cut")
                return Rule::cut(formula_of(field(j, "formula")));
            throw ParseError("unknown rule kind \"" + kind + "\"");
        }

        auto sequent_json(const Sequent & s) -> Json
        {
            Json out = Json::array();
            for (auto & f : s)
                out.push_back(formula_json(f));
            return out;
        }

        auto sequent_of(const Json & j) -> Sequent
        {
            Sequent out;
            for (auto & f : array(j))
                out.push_back(formula_of(f));
            return out;
        }

        auto template_node_json(const TemplateNode & n) -> Json
        {
            Json children = Json::array();
            for (auto & c : n.children) {
                if (c.is_family)
                    children.push_back(Json{{"family",
                        {{"index", c.index}, {"bound", term_json(c.bound)}, {"body", template_node_json(*c.node)}}}});
                else
                    children.push_back(template_node_json(*c.node));
            }
            Json out{{"sequent", sequent_json(n.sequent)}, {"rule", rule_json(n.rule)}};
            if (! children.empty())
                out["children"] = children;
            return out;
        }

        auto template_node_of(const Json & j) -> TemplateNode
        {
            TemplateNode n{sequent_of(field(j, "sequent")), rule_of(field(j, "rule")), {}};
            if (j.contains("children")) {
                for (auto & c : array(j.at("children"))) {
                    if (c.is_object() && c.contains("family")) {
                        auto & f = c.at("family");
                        n.children.push_back(
                            family_child(text(field(f, "index")), term_of(field(f, "bound")), template_node_of(field(f, "body"))));
                    }
                    else {
                        n.children.push_back(explicit_child(template_node_of(c)));
                    }
                }
            }
            return n;
        }

        auto digraph_json(const graph::CostedDigraph & g) -> Json
        {
            Json edges = Json::array();
            for (auto & [s, t] : g.edges)
                edges.push_back(Json::array({s, t}));
            return Json{{"nodes", g.n_nodes}, {"edges", edges}, {"cost", g.cost}};
        }

        auto pair_of(const Json & j, std::size_t size) -> std::vector<std::uint64_t>
        {
            if (! j.is_array() || j.size() != size)
                throw ParseError("expected an array of " + std::to_string(size) + " naturals, got " + j.dump());
            std::vector<std::uint64_t> out;
            for (auto & v : j)
                out.push_back(natural(v));
            return out;
        }

        auto digraph_of(const Json & j) -> graph::CostedDigraph
        {
            graph::CostedDigraph g;
            g.n_nodes = natural(field(j, "nodes"));
            for (auto & e : array(field(j, "edges"))) {
                auto st = pair_of(e, 2);
                g.edges.insert({st[0], st[1]});
            }
            for (auto & c : array(field(j, "cost")))
                g.cost.push_back(natural(c));
            try {
                graph::check_shape(g);
            }
            catch (const graph::GraphError & e) {
                throw ParseError(e.what());
            }
            return g;
        }

        auto family_json(const graph::NestedGraphFamily & f) -> Json
        {
            Json problems = Json::array();
            for (auto & p : f.problems) {
                Json children = Json::array();
                for (auto & [node, child] : p.children)
                    children.push_back(Json::array({node, child}));
                Json mapping = Json::array();
                for (auto & [key, target] : p.solution_to_edge)
                    mapping.push_back(Json::array({key.first, key.second, target}));
                problems.push_back(Json{{"rank", p.rank}, {"graph", digraph_json(p.graph)}, {"children", children},
                    {"solution_to_edge", mapping}});
            }
            return Json{{"top", f.top}, {"problems", problems}};
        }

        auto family_of(const Json & j) -> graph::NestedGraphFamily
        {
            graph::NestedGraphFamily f;
            f.top = natural(field(j, "top"));
            for (auto & pj : array(field(j, "problems"))) {
                graph::GraphProblem p;
                p.rank = natural(field(pj, "rank"));
                p.graph = digraph_of(field(pj, "graph"));
                for (auto & c : array(field(pj, "children"))) {
                    auto nc = pair_of(c, 2);
                    p.children[nc[0]] = nc[1];
                }
                for (auto & m : array(field(pj, "solution_to_edge"))) {
                    auto v = pair_of(m, 3);
                    p.solution_to_edge[{v[0], v[1]}] = v[2];
                }
                f.problems.push_back(std::move(p));
            }
            return f;
        }

        auto derivation_json(const Derivation & d) -> Json
        {
            Json nodes = Json::array();
            for (auto & [p, n] : d.nodes)
                nodes.push_back(Json{{"path", p.entries}, {"rule", rule_json(n.rule)}, {"sequent", sequent_json(n.sequent)}});
            Json out{{"end_x", d.end_x}, {"nodes", nodes}};
            if (d.depth_bound)
                out["depth_bound"] = *d.depth_bound;
            return out;
        }

        auto derivation_of(const Json & j) -> Derivation
        {
            Derivation d;
            d.end_x = natural(field(j, "end_x"));
            if (j.contains("depth_bound"))
                d.depth_bound = natural(j.at("depth_bound"));
            for (auto & nj : array(field(j, "nodes"))) {
                std::vector<std::uint64_t> entries;
                for (auto & e : array(field(nj, "path")))
                    entries.push_back(natural(e));
                NodePath p(std::move(entries));
                if (d.nodes.contains(p))
                    throw ParseError("duplicate node " + to_string(p));
                d.nodes[p] = DerivationNode{sequent_of(field(nj, "sequent")), rule_of(field(nj, "rule"))};
            }
            if (! d.nodes.contains(NodePath{}))
                throw ParseError("derivation has no root node");
            return d;
        }

        auto template_json(const DerivationTemplate & t) -> Json
        {
            Json out{{"root", template_node_json(t.root)}};
            if (t.depth_bound)
                out["depth_bound"] = *t.depth_bound;
            return out;
        }

        auto template_of_json(const Json & j) -> DerivationTemplate
        {
            DerivationTemplate t;
            t.root = template_node_of(field(j, "root"));
            if (j.contains("depth_bound"))
                t.depth_bound = natural(j.at("depth_bound"));
            return t;
        }

        /// Wraps nlohmann type errors raised while walking a document.
        template <typename F>
        auto guarded(F && fn) -> decltype(fn())
        {
            try {
                return fn();
            }
            catch (const Json::exception & e) {
                throw ParseError(e.what());
            }
        }
    }

    auto term_to_json(const Term & t) -> std::string { return dump(term_json(t)); }
    auto parse_term(const std::string & s) -> Term
    {
        return guarded([&] { return term_of(load(s)); });
    }

    auto formula_to_json(const Formula & f) -> std::string { return dump(formula_json(f)); }
    auto parse_formula(const std::string & s) -> Formula
    {
        return guarded([&] { return formula_of(load(s)); });
    }

    auto derivation_to_json(const Derivation & d) -> std::string { return dump(derivation_json(d)); }
    auto parse_derivation(const std::string & s) -> Derivation
    {
        return guarded([&] { return derivation_of(load(s)); });
    }

    auto template_to_json(const DerivationTemplate & t) -> std::string { return dump(template_json(t)); }
    auto parse_template(const std::string & s) -> DerivationTemplate
    {
        return guarded([&] { return template_of_json(load(s)); });
    }

    auto digraph_to_json(const graph::CostedDigraph & g) -> std::string { return dump(digraph_json(g)); }
    auto parse_digraph(const std::string & s) -> graph::CostedDigraph
    {
        return guarded([&] { return digraph_of(load(s)); });
    }

    auto family_to_json(const graph::NestedGraphFamily & f) -> std::string { return dump(family_json(f)); }
    auto parse_family(const std::string & s) -> graph::NestedGraphFamily
    {
        return guarded([&] { return family_of(load(s)); });
    }

    auto parse_document(const std::string & s) -> Document
    {
        return guarded([&]() -> Document {
            auto j = load(s);
            if (! j.is_object())
                throw ParseError("top-level value must be an object");
            if (j.contains("root"))
                return template_of_json(j);
            if (j.contains("problems"))
                return family_of(j);
            if (j.contains("edges"))
                return digraph_of(j);
            if (j.contains("nodes") && j.contains("end_x"))
                return derivation_of(j);
            throw ParseError("unrecognised document: expected a derivation, template, digraph or family");
        });
    }

    auto read_file(const std::string & path) -> std::string
    {
        std::ifstream in(path, std::ios::binary);
        if (! in)
            throw ParseError("cannot open " + path);
        std::ostringstream out;
        out << in.rdbuf();
        return out.str();
    }

    void write_file(const std::string & path, const std::string & contents)
    {
        std::ofstream out(path, std::ios::binary);
        if (! out)
            throw ParseError("cannot write " + path);
        out << contents;
        if (! out)
            throw ParseError("write failed for " + path);
    }
}
