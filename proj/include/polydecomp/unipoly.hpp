#pragma once

#include "polydecomp/ratmatrix.hpp"

#include <string>
#include <vector>

namespace polydecomp {

/// Univariate polynomial over the rationals, coefficients lowest degree first.
/// The zero polynomial has no coefficients; otherwise the leading one is nonzero.
class UniPoly {
  public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs);
    static UniPoly constant(const Rational &c);
    /// t - root
    static UniPoly linear_root(const Rational &root);
    static UniPoly monomial(std::size_t degree, const Rational &c = 1);

    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    const Rational &leading() const { return coeffs_.back(); }
    const std::vector<Rational> &coeffs() const noexcept { return coeffs_; }
    Rational coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }

    UniPoly monic() const;
    UniPoly derivative() const;
    Rational evaluate(const Rational &t) const;
    RatMatrix evaluate(const RatMatrix &m) const;

    friend bool operator==(const UniPoly &, const UniPoly &) = default;

  private:
    void trim();
    std::vector<Rational> coeffs_;
};

UniPoly operator+(const UniPoly &a, const UniPoly &b);
UniPoly operator-(const UniPoly &a, const UniPoly &b);
UniPoly operator*(const UniPoly &a, const UniPoly &b);
UniPoly operator*(const Rational &c, const UniPoly &a);

struct DivMod {
    UniPoly quotient;
    UniPoly remainder;
};
DivMod divmod(const UniPoly &a, const UniPoly &b);
UniPoly operator%(const UniPoly &a, const UniPoly &b);

std::string to_string(const UniPoly &p, const std::string &var = "t");

/// Monic gcd; gcd(0, 0) is rejected.
UniPoly unipoly_gcd(const UniPoly &a, const UniPoly &b);

struct ExtendedGcd {
    UniPoly gcd; // monic
    UniPoly u;
    UniPoly v; // u*a + v*b == gcd
};
ExtendedGcd extended_gcd(const UniPoly &a, const UniPoly &b);

/// m / gcd(m, m'), made monic.
UniPoly squarefree_part(const UniPoly &m);

/// Splits the squarefree part of a monic `m` into pairwise coprime monic
/// factors: one linear factor per rational root (ascending), then the
/// rational-root-free residual if it is nonconstant.
std::vector<UniPoly> coprime_split(const UniPoly &m);

/// All rational roots of a nonzero polynomial, ascending, without multiplicity.
std::vector<Rational> rational_roots(const UniPoly &p);

} // namespace polydecomp
