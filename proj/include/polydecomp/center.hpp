#pragma once

#include "polydecomp/poly.hpp"
#include "polydecomp/ratmatrix.hpp"

#include <optional>
#include <span>
#include <vector>

namespace polydecomp {

/// Basis of the center { X : (H_f X)^T = H_f X for every f } of a polynomial
/// set, as linearly independent n x n rational matrices.
struct CenterBasis {
    std::size_t n = 0;
    std::vector<RatMatrix> basis;

    std::size_t dim() const noexcept { return basis.size(); }
    /// sum_k coeffs[k] * basis[k]
    RatMatrix combine(std::span<const Rational> coeffs) const;
};

/// Solves H_i X - X^T H_i = 0 for all inputs. Only strictly-upper entries are
/// used (the difference is antisymmetric), one equation per monomial, with
/// duplicate equations removed. The basis is the canonical nullspace basis in
/// row-major unknown order X11, X12, ..., Xnn.
CenterBasis center_basis(std::span<const Polynomial> fs);

/// (XY + YX) / 2
RatMatrix jordan_product(const RatMatrix &x, const RatMatrix &y);

/// Direct check of (H_f X)^T == H_f X as a polynomial-matrix identity.
bool membership_check(const RatMatrix &x, std::span<const Polynomial> fs);

/// Basis of the intersection of the centers of each group.
CenterBasis intersect_centers(std::span<const std::vector<Polynomial>> groups);

/// True iff the two bases span the same matrix subspace.
bool same_center(const CenterBasis &a, const CenterBasis &b);

/// Coordinates of X in the basis, or nullopt when X is outside the span.
std::optional<RatVector> coordinates_in(const CenterBasis &z, const RatMatrix &x);

} // namespace polydecomp
