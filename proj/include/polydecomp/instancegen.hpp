#pragma once

#include "polydecomp/decompose.hpp"
#include "polydecomp/poly.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace polydecomp {

/// A polynomial set with a known decomposition: fs[i](x) = h_i(Q x), where
/// each h_i is a sum of block polynomials in disjoint variable groups.
struct PlantedInstance {
    std::vector<Polynomial> fs;
    RatMatrix Q;
    std::vector<std::size_t> planted_blocks; // in variable order
    /// block_polys[j][i]: part of h_i on block j, in the block's local variables.
    std::vector<std::vector<Polynomial>> block_polys;
    std::uint64_t seed = 0;
};

/// Deterministic in `seed`. Requires sum(block_sizes) == n, m >= 1 and
/// max_degree >= 3. Each block receives one dense form of degree in
/// [3, max_degree] in a randomly chosen polynomial, plus sparse random terms
/// (each monomial kept with probability 1/2, coefficients in {-5..5} \ {0})
/// in every polynomial. Constants live only in the first block. Q has entries
/// in {-3..3} and is resampled until invertible.
PlantedInstance generate(std::uint64_t seed, std::size_t n, std::size_t m,
                         std::span<const std::size_t> block_sizes, std::uint32_t max_degree);

/// The planted decomposition packaged as a result (P = Q^{-1}), suitable for
/// verify_decomposition.
DecompositionResult planted_result(const PlantedInstance &inst);

inline constexpr std::size_t brute_force_max_dim = 6;

/// Independent center-dimension oracle: every entry of H X - X^T H for every
/// monomial, no deduplication, rank by plain Gaussian elimination.
/// Throws InvalidArgument for n > brute_force_max_dim.
std::size_t brute_force_center_dim(std::span<const Polynomial> fs);

/// True iff `fine` can be grouped into parts whose sums are exactly `coarse`.
bool is_refinement(std::vector<std::size_t> fine, std::vector<std::size_t> coarse);

} // namespace polydecomp
