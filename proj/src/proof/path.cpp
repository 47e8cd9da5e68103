#include "npls/proof/path.hpp"

#include <algorithm>
#include <stdexcept>

namespace npls::proof
{
    auto NodePath::parent() const -> NodePath
    {
        if (entries.empty())
            throw std::logic_error("root has no parent");
        return NodePath(std::vector<std::uint64_t>(entries.begin(), entries.end() - 1));
    }

    auto NodePath::child(std::uint64_t n) const -> NodePath
    {
        auto e = entries;
        e.push_back(n);
        return NodePath(std::move(e));
    }

    auto NodePath::concat(const NodePath & tail) const -> NodePath
    {
        auto e = entries;
        e.insert(e.end(), tail.entries.begin(), tail.entries.end());
        return NodePath(std::move(e));
    }

    auto NodePath::prefix(std::size_t k) const -> NodePath
    {
        return NodePath(std::vector<std::uint64_t>(entries.begin(), entries.begin() + std::min(k, entries.size())));
    }

    auto NodePath::is_prefix_of(const NodePath & other) const -> bool
    {
        return entries.size() <= other.entries.size()
            && std::equal(entries.begin(), entries.end(), other.entries.begin());
    }

    auto NodePath::is_proper_prefix_of(const NodePath & other) const -> bool
    {
        return entries.size() < other.entries.size() && is_prefix_of(other);
    }

    auto to_string(const NodePath & p) -> std::string
    {
        std::string out = "<";
        for (std::size_t i = 0; i < p.entries.size(); ++i)
            out += (i ? "," : "") + std::to_string(p.entries[i]);
        return out + ">";
    }

    auto kb_less(const NodePath & a, const NodePath & b) -> bool
    {
        auto common = std::min(a.length(), b.length());
        for (std::size_t k = 0; k < common; ++k)
            if (a[k] != b[k])
                return a[k] < b[k];
        return a.length() > b.length();
    }
}
