#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace npls::proof
{
    /// Tree address: the root is the empty sequence, child n of p is p*<n>.
    struct NodePath
    {
        std::vector<std::uint64_t> entries;

        NodePath() = default;
        NodePath(std::initializer_list<std::uint64_t> e) : entries(e) {}
        explicit NodePath(std::vector<std::uint64_t> e) : entries(std::move(e)) {}

        auto length() const -> std::size_t { return entries.size(); }
        auto is_root() const -> bool { return entries.empty(); }
        auto operator[](std::size_t k) const -> std::uint64_t { return entries.at(k); }
        auto last() const -> std::uint64_t { return entries.back(); }

        auto parent() const -> NodePath;
        auto child(std::uint64_t n) const -> NodePath;
        auto concat(const NodePath & tail) const -> NodePath;
        /// The first k entries.
        auto prefix(std::size_t k) const -> NodePath;

        /// Initial segment, including equality.
        auto is_prefix_of(const NodePath & other) const -> bool;
        auto is_proper_prefix_of(const NodePath & other) const -> bool;

        auto operator<=>(const NodePath &) const = default;
    };

    /// "<1,0>", root "<>".
    auto to_string(const NodePath & p) -> std::string;

    /// Kleene-Brouwer order: a <KB b iff a properly extends b, or a is smaller
    /// at the first entry where they differ.
    auto kb_less(const NodePath & a, const NodePath & b) -> bool;
}
