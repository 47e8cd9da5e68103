#pragma once

#include "npls/proof/derivation.hpp"

#include <cstdint>

namespace npls::proof
{
    struct RandomDerivationOptions
    {
        /// pls: class-1 cuts over literals; npls: class-2 cuts. The root is always a cut.
        Mode mode = Mode::npls;
        std::size_t max_depth = 10;
        std::size_t max_nodes = 500;
    };

    /// A valid closed derivation of a true class-1 end-formula, built so every
    /// sequent keeps a true formula. Deterministic in seed.
    auto random_derivation(std::uint64_t seed, const RandomDerivationOptions & options = {}) -> Derivation;
}
