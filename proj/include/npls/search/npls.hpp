#pragma once

#include "npls/search/pls.hpp"
#include "npls/search/trace.hpp"
#include "npls/search/types.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>

namespace npls::search
{
    /// A nested PLS problem. Each source s opens a search row over its targets
    /// T(s); the neighbourhood of a target y in a row of positive rank is found by
    /// solving the lower-rank row gen_source(s,y) and mapping its solution back
    /// with extract. Rows of rank zero step with the plain function rank0_neighbor.
    ///
    /// All components are total over PointId except rank0_neighbor, which is
    /// only defined at rank zero. Points outside the d-bound answer false.
    struct NplsInstance
    {
        Polynomial d_bound;
        std::function<bool(std::uint64_t x, PointId s)> sources;
        std::function<bool(std::uint64_t x, PointId s, PointId t)> targets;
        std::function<bool(std::uint64_t x, PointId s, PointId y, PointId z)> neighbor;
        std::function<PointId(std::uint64_t x, PointId s, PointId y)> rank0_neighbor;
        std::function<PointId(std::uint64_t x)> initial_source;
        std::function<PointId(std::uint64_t x, PointId s)> initial_target;
        std::function<std::uint64_t(std::uint64_t x, PointId t)> cost;
        std::function<PointId(std::uint64_t x, PointId s, PointId y)> gen_source;
        std::function<PointId(std::uint64_t x, PointId s, PointId y, PointId z)> extract;
        std::function<std::uint64_t(std::uint64_t x, PointId s)> rank;
    };

    /// y solves the instance iff N(x, i(x), y, y).
    auto is_solution(const NplsInstance & inst, std::uint64_t x, PointId y) -> bool;

    /// Nested rank-descending search from initial_source(x). Returns y with
    /// N(x, i(x), y, y). The step budget counts target visits over all rows.
    auto solve_npls(const NplsInstance & inst, std::uint64_t x, std::optional<std::uint64_t> max_steps = std::nullopt)
        -> std::pair<PointId, SearchTrace>;

    /// Same search started from an arbitrary source s.
    auto solve_npls_from(const NplsInstance & inst, std::uint64_t x, PointId s,
        std::optional<std::uint64_t> max_steps = std::nullopt) -> std::pair<PointId, SearchTrace>;

    /// Oracle: a minimal-cost target of s found by enumerating the d-bit space
    /// (smallest id on ties).
    auto brute_force_npls(const NplsInstance & inst, std::uint64_t x, PointId s) -> PointId;

    /// The PLS run by a rank-zero row: feasible = T(s), start = t(x,s),
    /// neighbour = rank0_neighbor(x,s,.).
    auto rank0_row_pls(const NplsInstance & inst, PointId s) -> PlsInstance;

    /// A PLS read as an nPLS with the single source 0 of rank zero: targets are
    /// the feasible points and N(0,y,z) holds iff z = neighbor(y).
    auto nested_from_pls(const PlsInstance & pls) -> NplsInstance;

    /// Largest d accepted by the enumerating oracles and the condition verifier.
    inline constexpr unsigned max_oracle_bits = 16;
}
