#pragma once

#include "npls/graph/family.hpp"
#include "npls/proof/template.hpp"

#include <stdexcept>
#include <string>
#include <variant>

namespace npls::cli
{
    /// Malformed or unreadable input.
    class ParseError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    auto term_to_json(const proof::Term & t) -> std::string;
    auto parse_term(const std::string & text) -> proof::Term;
    auto formula_to_json(const proof::Formula & f) -> std::string;
    auto parse_formula(const std::string & text) -> proof::Formula;

    auto derivation_to_json(const proof::Derivation & d) -> std::string;
    auto parse_derivation(const std::string & text) -> proof::Derivation;

    auto template_to_json(const proof::DerivationTemplate & t) -> std::string;
    auto parse_template(const std::string & text) -> proof::DerivationTemplate;

    auto digraph_to_json(const graph::CostedDigraph & g) -> std::string;
    auto parse_digraph(const std::string & text) -> graph::CostedDigraph;

    auto family_to_json(const graph::NestedGraphFamily & f) -> std::string;
    auto parse_family(const std::string & text) -> graph::NestedGraphFamily;

    using Document = std::variant<proof::Derivation, proof::DerivationTemplate, graph::CostedDigraph, graph::NestedGraphFamily>;

    /// Parses any of the four file kinds, told apart by their top-level keys.
    auto parse_document(const std::string & text) -> Document;

    auto read_file(const std::string & path) -> std::string;
    void write_file(const std::string & path, const std::string & contents);
}
