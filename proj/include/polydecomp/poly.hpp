#pragma once

#include "polydecomp/ratmatrix.hpp"

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace polydecomp {

/// Exponent vector of length equal to the ambient variable count.
class Monomial {
  public:
    Monomial() = default;
    explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
    explicit Monomial(std::vector<std::uint32_t> exps);

    static Monomial variable(std::size_t nvars, std::size_t i);

    std::size_t nvars() const noexcept { return exps_.size(); }
    std::uint32_t degree() const noexcept { return degree_; }
    std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
    const std::vector<std::uint32_t> &exponents() const noexcept { return exps_; }
    bool is_constant() const noexcept { return degree_ == 0; }

    Monomial operator*(const Monomial &other) const;

    friend bool operator==(const Monomial &a, const Monomial &b) { return a.exps_ == b.exps_; }

  private:
    std::vector<std::uint32_t> exps_;
    std::uint32_t degree_ = 0;
};

/// Graded-lex descending: higher total degree first, then the larger
/// exponent vector with the first variable most significant.
struct GrlexGreater {
    bool operator()(const Monomial &a, const Monomial &b) const;
};

/// Exact multivariate polynomial over the rationals. No stored coefficient is
/// zero; iteration over terms() is in grlex-descending order.
class Polynomial {
  public:
    using TermMap = std::map<Monomial, Rational, GrlexGreater>;

    Polynomial() = default;
    explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

    static Polynomial constant(std::size_t nvars, const Rational &c);
    static Polynomial variable(std::size_t nvars, std::size_t i);
    static Polynomial term(const Monomial &m, const Rational &c);

    std::size_t nvars() const noexcept { return nvars_; }
    const TermMap &terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    /// -1 for the zero polynomial.
    int total_degree() const noexcept;
    Rational coefficient(const Monomial &m) const;
    Rational constant_term() const;

    /// Adds c * m, dropping the term if the coefficient cancels to zero.
    void add_term(const Monomial &m, const Rational &c);

    Polynomial &operator+=(const Polynomial &q);
    Polynomial &operator-=(const Polynomial &q);
    Polynomial &operator*=(const Rational &c);
    Polynomial operator-() const;

    friend bool operator==(const Polynomial &a, const Polynomial &b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

  private:
    std::size_t nvars_ = 0;
    TermMap terms_;
};

Polynomial operator+(Polynomial p, const Polynomial &q);
Polynomial operator-(Polynomial p, const Polynomial &q);
Polynomial operator*(const Polynomial &p, const Polynomial &q);
Polynomial operator*(Polynomial p, const Rational &c);
Polynomial operator*(const Rational &c, Polynomial p);
Polynomial pow(const Polynomial &p, std::uint32_t e);

/// Throws InvalidArgument unless names are nonempty, distinct identifiers.
void validate_variable_names(std::span<const std::string> vars);

/// Parses text in the polynomial grammar: `+`/`-` separated terms, each a
/// `*`-separated product of integer or `a/b` coefficients and `var` or
/// `var^k` factors. Whitespace is ignored.
Polynomial parse_polynomial(std::string_view text, std::span<const std::string> vars);

/// Deterministic text form, terms in grlex-descending order, `a/b`
/// coefficients in lowest terms. The zero polynomial renders as "0".
std::string render_canonical(const Polynomial &p, std::span<const std::string> vars);

/// x1, x2, ... (or another prefix) for quick labelling.
std::vector<std::string> default_variable_names(std::size_t n, const std::string &prefix = "x");

Polynomial partial_derivative(const Polynomial &p, std::size_t i);

/// Matrix of polynomials, row-major.
class PolyMatrix {
  public:
    PolyMatrix() = default;
    PolyMatrix(std::size_t rows, std::size_t cols, std::size_t nvars);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    Polynomial &operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Polynomial &operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    bool is_zero() const;
    bool is_symmetric() const;
    PolyMatrix transpose() const;

    friend bool operator==(const PolyMatrix &, const PolyMatrix &) = default;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Polynomial> data_;
};

PolyMatrix operator*(const PolyMatrix &a, const RatMatrix &b);
PolyMatrix operator*(const RatMatrix &a, const PolyMatrix &b);
PolyMatrix operator-(const PolyMatrix &a, const PolyMatrix &b);

PolyMatrix hessian(const Polynomial &p);

/// p(Py): each x_i is replaced by sum_j P(i,j) y_j and the result expanded.
Polynomial substitute_linear(const Polynomial &p, const RatMatrix &P);

/// Keeps the listed variables (in order) as the new ambient variables.
/// Throws InvalidArgument if a term involves a variable not listed.
Polynomial restrict_variables(const Polynomial &p, std::span<const std::size_t> keep);

/// Inverse of restrict_variables: variable k of p becomes variable positions[k].
Polynomial embed_variables(const Polynomial &p, std::size_t nvars,
                           std::span<const std::size_t> positions);

} // namespace polydecomp
