#pragma once

#include "polydecomp/center.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace polydecomp {

/// Complete set of orthogonal idempotents: e_i^2 = e_i, e_i e_j = 0 for
/// i != j, and sum e_i = I.
struct IdempotentSet {
    std::size_t n = 0;
    std::vector<RatMatrix> eps;

    std::size_t size() const noexcept { return eps.size(); }
    bool is_trivial() const noexcept { return eps.size() <= 1; }
    static IdempotentSet trivial(std::size_t n) { return {n, {RatMatrix::identity(n)}}; }
};

inline constexpr int default_max_tries = 8;

/// Spectral splitting of the center. A random element g = sum c_k X_k
/// (c_k drawn from {-9..9} \ {0}) is restricted to the range of the current
/// idempotent e; its minimal polynomial is split into pairwise coprime
/// factors and the CRT projectors e * p_i(g) replace e. Each piece is then
/// refined the same way. A piece whose corner algebra eZe is one-dimensional
/// is primitive; otherwise it is kept after max_tries unsplittable draws.
/// Every returned set is checked exactly before it is returned.
IdempotentSet find_idempotents(const CenterBasis &z, std::uint64_t seed,
                               int max_tries = default_max_tries);

/// The matrix identities alone (no center membership).
bool satisfies_idempotent_identities(const IdempotentSet &set);

/// Matrix identities plus membership of every element in the center of fs.
bool verify_complete(const IdempotentSet &set, std::span<const Polynomial> fs);

/// Ranks of the idempotents, sorted ascending.
std::vector<std::size_t> rank_profile(const IdempotentSet &set);

} // namespace polydecomp
