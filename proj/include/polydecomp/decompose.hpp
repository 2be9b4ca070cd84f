#pragma once

#include "polydecomp/center.hpp"
#include "polydecomp/idempotent.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace polydecomp {

/// Half-open range [begin, end) of transformed variable positions.
struct BlockRange {
    std::size_t begin = 0;
    std::size_t end = 0;
    std::size_t size() const noexcept { return end - begin; }
    friend bool operator==(const BlockRange &, const BlockRange &) = default;
};

struct DecompositionNode {
    /// Positions in the final transformed coordinates y (ascending, contiguous).
    std::vector<std::size_t> variable_indices;
    /// This node's polynomials in variable_indices.size() local variables.
    /// For a leaf these are in the final coordinates.
    std::vector<Polynomial> polys;
    std::size_t center_dim = 0;
    /// Idempotents used to split this node (empty for a leaf).
    IdempotentSet idempotents;
    /// Change of variables applied at this node (identity for a leaf).
    RatMatrix local_transform;
    std::vector<DecompositionNode> children;

    bool is_leaf() const noexcept { return children.empty(); }
};

struct DecompositionResult {
    /// Overall change of variables x = P y.
    RatMatrix P;
    DecompositionNode tree;
    bool diagonalizable = false;
    std::uint64_t seed = 0;
    int max_tries = default_max_tries;
};

enum class Verdict {
    Decomposed,        // at least two blocks
    ScalarCenter,      // one block, center of dimension 1: certified indecomposable
    NoSplitFound,      // one block, no nontrivial idempotent found within the try budget
};

std::string describe(Verdict v);
Verdict verdict(const DecompositionResult &r);

/// Columns of each idempotent's column space, scaled to primitive integer
/// vectors, concatenated in set order. Checks P^{-1} e_j P = E_j exactly.
RatMatrix change_of_variables(const IdempotentSet &set);

/// Contiguous block ranges sized by the ranks of the idempotents, in set order.
std::vector<BlockRange> block_ranges(const IdempotentSet &set);

/// Substitutes x = P y into each polynomial and splits the result by blocks.
/// Result[j][i] is the part of polynomial i living on block j, in the block's
/// local variables. Constant terms go to the first block. Throws
/// MixedMonomial if a term straddles blocks.
std::vector<std::vector<Polynomial>> separate(std::span<const Polynomial> polys, const RatMatrix &P,
                                              std::span<const BlockRange> blocks);

/// Center, idempotents, change of variables, then recursion on every block
/// with its polynomials re-expressed in fresh local variables.
DecompositionResult decompose_recursive(std::span<const Polynomial> fs, std::uint64_t seed,
                                        int max_tries = default_max_tries);

struct VerifyOutcome {
    bool ok = true;
    std::string reason;
    explicit operator bool() const noexcept { return ok; }
};

/// Independent end-to-end certificate: recomputes f_i(Py), re-splits by leaf
/// variable sets and compares exactly with the leaves; re-checks P
/// invertibility and the idempotent identities at every level.
VerifyOutcome verify_decomposition(std::span<const Polynomial> fs, const DecompositionResult &r);

std::vector<const DecompositionNode *> leaves(const DecompositionNode &root);
/// Leaf block sizes, sorted ascending.
std::vector<std::size_t> leaf_sizes(const DecompositionNode &root);
/// Every internal node's idempotent set, in pre-order.
std::vector<IdempotentSet> all_idempotent_sets(const DecompositionNode &root);

/// Sum over leaves of the leaf's i-th polynomial, embedded in n variables.
Polynomial reassemble(const DecompositionNode &root, std::size_t i, std::size_t n);

} // namespace polydecomp
