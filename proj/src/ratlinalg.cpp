#include "polydecomp/ratlinalg.hpp"

#include "polydecomp/errors.hpp"

#include <utility>

namespace polydecomp {

namespace {

using IntRow = std::vector<Integer>;

IntRow integer_row(const RatMatrix &m, std::size_t i) {
    const std::size_t cols = m.cols();
    const auto first = m.entries().begin() + static_cast<std::ptrdiff_t>(i * cols);
    Integer den = common_denominator(first, first + static_cast<std::ptrdiff_t>(cols));
    IntRow row(cols);
    for (std::size_t j = 0; j < cols; ++j)
        row[j] = Integer(m(i, j) * den);
    return row;
}

void remove_content(IntRow &row) {
    Integer g = 0;
    for (const auto &x : row) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1)
            return;
    }
    if (g > 1)
        for (auto &x : row)
            mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

} // namespace

RrefResult rref(const RatMatrix &m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<IntRow> a;
    a.reserve(rows);
    for (std::size_t i = 0; i < rows; ++i) {
        a.push_back(integer_row(m, i));
        remove_content(a.back());
    }

    std::vector<std::size_t> pivots;
    std::size_t prow = 0;
    for (std::size_t col = 0; col < cols && prow < rows; ++col) {
        std::size_t sel = prow;
        while (sel < rows && a[sel][col] == 0)
            ++sel;
        if (sel == rows)
            continue;
        std::swap(a[prow], a[sel]);
        const Integer p = a[prow][col];
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == prow || a[r][col] == 0)
                continue;
            const Integer f = a[r][col];
            // Rows above carry earlier pivots, so scale the whole row.
            for (std::size_t j = 0; j < cols; ++j)
                a[r][j] = a[r][j] * p - a[prow][j] * f;
            remove_content(a[r]);
        }
        pivots.push_back(col);
        ++prow;
    }

    RatMatrix out(rows, cols);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        const Integer &p = a[r][pivots[r]];
        for (std::size_t j = 0; j < cols; ++j)
            if (a[r][j] != 0)
                out(r, j) = make_rational(a[r][j], p);
    }
    return {std::move(out), std::move(pivots)};
}

std::size_t rank(const RatMatrix &m) { return rref(m).pivots.size(); }

std::vector<RatVector> nullspace_basis(const RatMatrix &m) {
    const auto [r, pivots] = rref(m);
    const std::size_t cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (auto p : pivots)
        is_pivot[p] = true;
    std::vector<RatVector> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f])
            continue;
        RatVector v(cols);
        v[f] = 1;
        for (std::size_t k = 0; k < pivots.size(); ++k)
            v[pivots[k]] = -r(k, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

RatMatrix invert(const RatMatrix &m) {
    if (!m.is_square())
        throw DimensionMismatch("invert needs a square matrix");
    const std::size_t n = m.rows();
    RatMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    const auto [r, pivots] = rref(aug);
    if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1))
        throw SingularMatrix("matrix is singular");
    RatMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            inv(i, j) = r(i, n + j);
    return inv;
}

Rational determinant(const RatMatrix &m) {
    if (!m.is_square())
        throw DimensionMismatch("determinant needs a square matrix");
    RatMatrix a = m;
    const std::size_t n = a.rows();
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && sgn(a(p, c)) == 0)
            ++p;
        if (p == n)
            return 0;
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j)
                std::swap(a(p, j), a(c, j));
            det = -det;
        }
        det *= a(c, c);
        for (std::size_t r = c + 1; r < n; ++r) {
            if (sgn(a(r, c)) == 0)
                continue;
            Rational f = a(r, c) / a(c, c);
            for (std::size_t j = c; j < n; ++j)
                a(r, j) -= f * a(c, j);
        }
    }
    return det;
}

std::optional<RatVector> solve(const RatMatrix &a, const RatVector &b) {
    if (b.size() != a.rows())
        throw DimensionMismatch("solve: right-hand side length");
    RatMatrix aug(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j)
            aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    const auto [r, pivots] = rref(aug);
    if (!pivots.empty() && pivots.back() == a.cols())
        return std::nullopt;
    RatVector x(a.cols());
    for (std::size_t k = 0; k < pivots.size(); ++k)
        x[pivots[k]] = r(k, a.cols());
    return x;
}

UniPoly minimal_polynomial(const RatMatrix &m) {
    if (!m.is_square())
        throw DimensionMismatch("minimal_polynomial needs a square matrix");
    const std::size_t n = m.rows();
    if (n == 0)
        return UniPoly::constant(1);
    std::vector<RatVector> powers{RatMatrix::identity(n).entries()};
    RatMatrix current = RatMatrix::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        current = current * m;
        powers.push_back(current.entries());
        const auto kernel = nullspace_basis(RatMatrix::from_columns(powers, n * n));
        if (kernel.empty())
            continue;
        // The lower powers are independent, so the kernel is one-dimensional
        // with a nonzero coefficient on the newest power.
        const RatVector &v = kernel.front();
        const Rational lead = v.back();
        std::vector<Rational> coeffs(v.size());
        for (std::size_t j = 0; j < v.size(); ++j)
            coeffs[j] = v[j] / lead;
        return UniPoly(std::move(coeffs));
    }
    throw InternalInvariantViolation("no annihilating polynomial of degree <= n");
}

std::vector<RatVector> column_space_basis(const RatMatrix &m) {
    std::vector<RatVector> basis;
    for (auto p : rref(m).pivots)
        basis.push_back(m.column(p));
    return basis;
}

std::size_t span_rank(const std::vector<RatVector> &vectors) {
    if (vectors.empty())
        return 0;
    const std::size_t len = vectors.front().size();
    std::vector<Rational> data;
    data.reserve(vectors.size() * len);
    for (const auto &v : vectors) {
        if (v.size() != len)
            throw DimensionMismatch("span_rank: vector length mismatch");
        data.insert(data.end(), v.begin(), v.end());
    }
    return rank(RatMatrix(vectors.size(), len, std::move(data)));
}

bool same_span(const std::vector<RatVector> &a, const std::vector<RatVector> &b) {
    std::vector<RatVector> both = a;
    both.insert(both.end(), b.begin(), b.end());
    const std::size_t r = span_rank(both);
    return span_rank(a) == r && span_rank(b) == r;
}

std::vector<RatVector> flatten_all(const std::vector<RatMatrix> &ms) {
    std::vector<RatVector> out;
    out.reserve(ms.size());
    for (const auto &m : ms)
        out.push_back(m.entries());
    return out;
}

} // namespace polydecomp
