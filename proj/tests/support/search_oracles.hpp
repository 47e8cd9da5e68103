#pragma once

#include "npls/search/npls.hpp"
#include "npls/search/pls.hpp"

#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace npls::testing
{
    using search::NplsInstance;
    using search::PlsInstance;
    using search::PointId;

    /// F = {0..n-1}, cost = id, neighbour = max(s-1, 0), start at n-1.
    auto chain_pls(std::uint64_t n) -> PlsInstance;

    /// Eight-point two-row instance: source 0 (rank 1) over targets {7, 3},
    /// source 1 (rank 0) over the chain 6 -> 5 -> 4.
    auto two_row_npls() -> NplsInstance;

    /// Every component of a rank-zero instance built from a PLS, one source 0.
    auto rank_zero_npls(const PlsInstance & pls) -> NplsInstance;

    /// Literal recursive transcription of the nested search. Returns the
    /// (source, target) visits in order.
    auto reference_nested_walk(const NplsInstance & inst, std::uint64_t x)
        -> std::vector<std::pair<std::uint64_t, std::uint64_t>>;

    /// Names of the conditions violated, found by evaluating each condition's
    /// quantifier structure directly over the point space.
    auto naive_condition_failures(const NplsInstance & inst, std::uint64_t x) -> std::set<std::string>;
}
