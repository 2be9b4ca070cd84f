#include "polydecomp/center.hpp"

#include "polydecomp/errors.hpp"
#include "polydecomp/ratlinalg.hpp"

#include <map>
#include <set>

namespace polydecomp {

namespace {

std::size_t common_dimension(std::span<const Polynomial> fs) {
    if (fs.empty())
        throw EmptyInput("center of an empty polynomial set");
    const std::size_t n = fs.front().nvars();
    for (const auto &f : fs)
        if (f.nvars() != n)
            throw DimensionMismatch("polynomials have different variable counts");
    if (n == 0)
        throw InvalidArgument("polynomials must have at least one variable");
    return n;
}

CenterBasis from_nullspace(std::size_t n, const std::vector<RatVector> &kernel) {
    CenterBasis z{n, {}};
    for (const auto &v : kernel)
        z.basis.emplace_back(n, n, v);
    return z;
}

// Scale so the first nonzero entry is 1.
void normalize_row(RatVector &row) {
    for (const auto &x : row)
        if (sgn(x) != 0) {
            const Rational lead = x;
            for (auto &y : row)
                y /= lead;
            return;
        }
}

} // namespace

RatMatrix CenterBasis::combine(std::span<const Rational> coeffs) const {
    if (coeffs.size() != basis.size())
        throw DimensionMismatch("coefficient count does not match center dimension");
    RatMatrix x(n, n);
    for (std::size_t k = 0; k < basis.size(); ++k)
        if (sgn(coeffs[k]) != 0)
            x += basis[k] * coeffs[k];
    return x;
}

CenterBasis center_basis(std::span<const Polynomial> fs) {
    const std::size_t n = common_dimension(fs);
    const std::size_t unknowns = n * n;
    auto var = [n](std::size_t row, std::size_t col) { return row * n + col; };

    std::set<RatVector> equations;
    for (const auto &f : fs) {
        const PolyMatrix h = hessian(f);
        // Entry (r,c) of H X - X^T H is
        //   sum_k H(r,k) X(k,c) - sum_k X(k,r) H(k,c).
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = r + 1; c < n; ++c) {
                std::map<Monomial, RatVector, GrlexGreater> rows;
                auto row_for = [&](const Monomial &m) -> RatVector & {
                    auto it = rows.find(m);
                    if (it == rows.end())
                        it = rows.emplace(m, RatVector(unknowns)).first;
                    return it->second;
                };
                for (std::size_t k = 0; k < n; ++k) {
                    for (const auto &[m, coeff] : h(r, k).terms())
                        row_for(m)[var(k, c)] += coeff;
                    for (const auto &[m, coeff] : h(k, c).terms())
                        row_for(m)[var(k, r)] -= coeff;
                }
                for (auto &[m, row] : rows) {
                    normalize_row(row);
                    bool nonzero = false;
                    for (const auto &x : row)
                        nonzero = nonzero || sgn(x) != 0;
                    if (nonzero)
                        equations.insert(std::move(row));
                }
            }
    }

    RatMatrix system(equations.size(), unknowns);
    std::size_t i = 0;
    for (const auto &row : equations) {
        for (std::size_t j = 0; j < unknowns; ++j)
            system(i, j) = row[j];
        ++i;
    }
    return from_nullspace(n, nullspace_basis(system));
}

RatMatrix jordan_product(const RatMatrix &x, const RatMatrix &y) {
    if (!x.is_square() || x.rows() != y.rows() || x.cols() != y.cols())
        throw DimensionMismatch("jordan_product needs equal square matrices");
    RatMatrix s = x * y + y * x;
    return s *= Rational(1, 2);
}

bool membership_check(const RatMatrix &x, std::span<const Polynomial> fs) {
    const std::size_t n = common_dimension(fs);
    if (x.rows() != n || x.cols() != n)
        throw DimensionMismatch("membership_check: matrix must be " + std::to_string(n) + "x" +
                                std::to_string(n));
    for (const auto &f : fs) {
        const PolyMatrix hx = hessian(f) * x;
        if (!hx.is_symmetric())
            return false;
    }
    return true;
}

CenterBasis intersect_centers(std::span<const std::vector<Polynomial>> groups) {
    if (groups.empty())
        throw EmptyInput("no polynomial groups");
    CenterBasis acc = center_basis(groups.front());
    for (std::size_t g = 1; g < groups.size(); ++g) {
        const CenterBasis next = center_basis(groups[g]);
        if (next.n != acc.n)
            throw DimensionMismatch("groups have different variable counts");
        // v in span(A) and span(B): solve A a - B b = 0 and map a back.
        const std::size_t len = acc.n * acc.n;
        std::vector<RatVector> cols;
        for (const auto &m : acc.basis)
            cols.push_back(m.entries());
        for (const auto &m : next.basis) {
            RatVector neg = m.entries();
            for (auto &x : neg)
                x = -x;
            cols.push_back(std::move(neg));
        }
        const auto kernel = nullspace_basis(RatMatrix::from_columns(cols, len));
        std::vector<RatVector> inter;
        for (const auto &v : kernel) {
            RatMatrix m(acc.n, acc.n);
            for (std::size_t k = 0; k < acc.dim(); ++k)
                if (sgn(v[k]) != 0)
                    m += acc.basis[k] * v[k];
            inter.push_back(m.entries());
        }
        // Canonical form: nonzero rows of the rref of the stacked vectors.
        CenterBasis reduced{acc.n, {}};
        if (!inter.empty()) {
            const auto r = rref(RatMatrix::from_columns(inter, len).transpose());
            for (std::size_t k = 0; k < r.pivots.size(); ++k) {
                RatMatrix m(acc.n, acc.n);
                for (std::size_t j = 0; j < len; ++j)
                    m(j / acc.n, j % acc.n) = r.reduced(k, j);
                reduced.basis.push_back(std::move(m));
            }
        }
        acc = std::move(reduced);
    }
    return acc;
}

bool same_center(const CenterBasis &a, const CenterBasis &b) {
    return a.n == b.n && same_span(flatten_all(a.basis), flatten_all(b.basis));
}

std::optional<RatVector> coordinates_in(const CenterBasis &z, const RatMatrix &x) {
    if (z.dim() == 0)
        return x.is_zero() ? std::optional<RatVector>(RatVector{}) : std::nullopt;
    return solve(RatMatrix::from_columns(flatten_all(z.basis), z.n * z.n), x.entries());
}

} // namespace polydecomp
