#pragma once

#include "polydecomp/ratmatrix.hpp"
#include "polydecomp/unipoly.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace polydecomp {

struct RrefResult {
    RatMatrix reduced;
    std::vector<std::size_t> pivots; // strictly increasing column indices
};

/// Exact reduced row echelon form. Elimination runs fraction-free on
/// integer-scaled rows (content removed after each step); rows are
/// normalized to unit pivots at the end.
RrefResult rref(const RatMatrix &m);

std::size_t rank(const RatMatrix &m);

/// Basis of {v : Mv = 0}. Vector k has its k-th free column set to 1 and the
/// other free columns set to 0.
std::vector<RatVector> nullspace_basis(const RatMatrix &m);

/// Throws SingularMatrix when rank < n.
RatMatrix invert(const RatMatrix &m);

Rational determinant(const RatMatrix &m);

/// Some x with Ax = b, or nullopt when inconsistent.
std::optional<RatVector> solve(const RatMatrix &a, const RatVector &b);

/// Least-degree monic annihilator, from the first linear dependency among
/// I, M, M^2, ...
UniPoly minimal_polynomial(const RatMatrix &m);

/// Columns of M at the pivot positions of rref(M), in order.
std::vector<RatVector> column_space_basis(const RatMatrix &m);

/// Rank of the matrix whose rows are the given vectors.
std::size_t span_rank(const std::vector<RatVector> &vectors);

/// True iff both families span the same subspace.
bool same_span(const std::vector<RatVector> &a, const std::vector<RatVector> &b);

/// Row-major flattening of each matrix.
std::vector<RatVector> flatten_all(const std::vector<RatMatrix> &ms);

} // namespace polydecomp
