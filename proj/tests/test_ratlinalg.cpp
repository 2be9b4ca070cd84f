#include "test_util.hpp"

#include "polydecomp/errors.hpp"

#include <gtest/gtest.h>

using namespace polydecomp;
using namespace polydecomp::testing;

namespace {

RatMatrix M(std::initializer_list<std::initializer_list<const char *>> rows) { return RatMatrix::from_strings(rows); }

UniPoly U(std::initializer_list<int> low_first) {
    std::vector<Rational> c;
    for (int v : low_first)
        c.emplace_back(v);
    return UniPoly(std::move(c));
}

// Unknown order X00, X01, ..., X22 for a 3x3 unknown matrix.
std::size_t at(std::size_t r, std::size_t c) { return 3 * r + c; }

} // namespace

TEST(Rational, ParseAndCanonicalize) {
    EXPECT_EQ(parse_rational("6/4"), Rational(3, 2));
    EXPECT_EQ(parse_rational("-7"), Rational(-7));
    EXPECT_EQ(to_string(parse_rational("-2/4")), "-1/2");
    EXPECT_THROW(parse_rational("2/-4"), ParseError);
    EXPECT_EQ(to_string(Rational(0)), "0");
    EXPECT_THROW(make_rational(1, 0), InvalidArgument);
}

TEST(Rref, ReducedFormAndPivots) {
    const RrefResult r = rref(M({{"2", "4", "6"}, {"1", "2", "4"}, {"3", "6", "10"}}));
    EXPECT_EQ(r.pivots, (std::vector<std::size_t>{0, 2}));
    EXPECT_EQ(r.reduced, M({{"1", "2", "0"}, {"0", "0", "1"}, {"0", "0", "0"}}));
}

TEST(Rref, FractionalEntries) {
    const RrefResult r = rref(M({{"1/2", "1/3"}, {"1/4", "1/6"}}));
    EXPECT_EQ(r.pivots, (std::vector<std::size_t>{0}));
    EXPECT_EQ(r.reduced, M({{"1", "2/3"}, {"0", "0"}}));
}

TEST(Rref, MatchesForwardSubstitutionOnRandomMatrices) {
    std::mt19937_64 rng(23);
    for (int t = 0; t < 30; ++t) {
        const RatMatrix m = random_matrix(rng, 4, 5, 6);
        const RrefResult r = rref(m);
        // Every row of m is a combination of the nonzero reduced rows, read off the pivots.
        for (std::size_t i = 0; i < m.rows(); ++i) {
            RatVector rebuilt(m.cols(), Rational(0));
            for (std::size_t k = 0; k < r.pivots.size(); ++k)
                for (std::size_t j = 0; j < m.cols(); ++j)
                    rebuilt[j] += m(i, r.pivots[k]) * r.reduced(k, j);
            for (std::size_t j = 0; j < m.cols(); ++j)
                EXPECT_EQ(rebuilt[j], m(i, j));
        }
        for (std::size_t k = 0; k < r.pivots.size(); ++k)
            EXPECT_EQ(r.reduced(k, r.pivots[k]), 1);
    }
}

TEST(Nullspace, QuarticPlusSquaresCenterSystem) {
    // Hessian diag(12x^2, 2, 2); strictly-upper entries of HX - X^T H, one row per monomial.
    RatMatrix sys(5, 9);
    sys(0, at(0, 1)) = 12;                       // (0,1), x^2
    sys(1, at(1, 0)) = -2;                       // (0,1), 1
    sys(2, at(0, 2)) = 12;                       // (0,2), x^2
    sys(3, at(2, 0)) = -2;                       // (0,2), 1
    sys(4, at(1, 2)) = 2, sys(4, at(2, 1)) = -2; // (1,2), 1
    const auto basis = nullspace_basis(sys);
    ASSERT_EQ(basis.size(), 4u);
    for (const auto &v : basis) {
        const RatVector r = sys * v;
        for (const auto &x : r)
            EXPECT_EQ(x, 0);
    }
    EXPECT_TRUE(same_span(basis, flatten_all({M({{"1", "0", "0"}, {"0", "0", "0"}, {"0", "0", "0"}}),
                                              M({{"0", "0", "0"}, {"0", "1", "0"}, {"0", "0", "0"}}),
                                              M({{"0", "0", "0"}, {"0", "0", "0"}, {"0", "0", "1"}}),
                                              M({{"0", "0", "0"}, {"0", "0", "1"}, {"0", "1", "0"}})})));
}

TEST(Nullspace, BinaryCubicPairSystemHasNullityTwo) {
    const auto u = names({"u1", "u2"});
    const std::vector<Polynomial> fs{
        P("54*u1^3 - 54*u1^2*u2 + 8*u1^2 + 18*u1*u2^2 + 16*u1*u2 - 2*u2^3 + 8*u2^2 + 8*u2 + 1", u),
        P("-27*u1^3 + 27*u1^2*u2 - 24*u1^2 - 9*u1*u2^2 - 48*u1*u2 - 15*u1 + u2^3 - 24*u2^2 - 19*u2 - 3", u)};
    // (HX - X^T H)_{01} = H00 X01 + H01 X11 - X00 H01 - X10 H11, unknowns X00 X01 X10 X11.
    std::vector<RatVector> rows;
    const std::vector<Monomial> monos{Monomial({1, 0}), Monomial({0, 1}), Monomial({0, 0})};
    for (const auto &f : fs) {
        const PolyMatrix h = hessian(f);
        for (const auto &mono : monos)
            rows.push_back({-h(0, 1).coefficient(mono), h(0, 0).coefficient(mono), -h(1, 1).coefficient(mono),
                            h(0, 1).coefficient(mono)});
    }
    RatMatrix sys(rows.size(), 4);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < 4; ++j)
            sys(i, j) = rows[i][j];
    EXPECT_EQ(rank(sys), 2u);
    EXPECT_EQ(nullspace_basis(sys).size(), 2u);
}

TEST(Nullspace, RankNullityAndKernelOnRandomMatrices) {
    std::mt19937_64 rng(29);
    for (int t = 0; t < 40; ++t) {
        const std::size_t rows = 1 + t % 5, cols = 1 + (t * 7) % 6;
        RatMatrix m = random_matrix(rng, rows, cols, 3);
        if (t % 3 == 0 && rows > 1)
            for (std::size_t j = 0; j < cols; ++j)
                m(rows - 1, j) = m(0, j) * 2; // force a dependency
        const auto basis = nullspace_basis(m);
        EXPECT_EQ(rank(m) + basis.size(), cols);
        EXPECT_EQ(span_rank(basis), basis.size());
        for (const auto &v : basis)
            for (const auto &x : m * v)
                EXPECT_EQ(x, 0);
    }
}

TEST(Nullspace, FullRankHasEmptyKernel) { EXPECT_TRUE(nullspace_basis(RatMatrix::identity(3)).empty()); }

TEST(Invert, DiagonalizingTransform) {
    const RatMatrix p = M({{"-1/8", "1/4"}, {"-3/8", "-1/4"}});
    EXPECT_EQ(determinant(p), Rational(1, 8));
    EXPECT_EQ(invert(p), M({{"-2", "-2"}, {"3", "-1"}}));
}

TEST(Invert, SingularThrows) {
    EXPECT_THROW(invert(M({{"1", "2"}, {"2", "4"}})), SingularMatrix);
    EXPECT_THROW(invert(RatMatrix(2, 3)), DimensionMismatch);
}

TEST(Invert, RoundTripOnRandomMatrices) {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 30; ++t) {
        const std::size_t n = 1 + t % 5;
        const RatMatrix m = random_invertible(rng, n, 4);
        const RatMatrix inv = invert(m);
        EXPECT_EQ(inv * m, RatMatrix::identity(n));
        EXPECT_EQ(m * inv, RatMatrix::identity(n));
        EXPECT_EQ(determinant(m) * determinant(inv), 1);
    }
}

TEST(Solve, ConsistentAndInconsistent) {
    const RatMatrix a = M({{"1", "1"}, {"2", "2"}});
    const auto x = solve(a, {Rational(3), Rational(6)});
    ASSERT_TRUE(x.has_value());
    EXPECT_EQ(a * *x, (RatVector{3, 6}));
    EXPECT_FALSE(solve(a, {Rational(3), Rational(7)}).has_value());
}

TEST(MinimalPolynomial, SmallCases) {
    EXPECT_EQ(minimal_polynomial(RatMatrix::identity(3)), U({-1, 1}));
    EXPECT_EQ(minimal_polynomial(M({{"1", "0"}, {"0", "0"}})), U({0, -1, 1}));
    EXPECT_EQ(minimal_polynomial(M({{"2", "0"}, {"0", "3"}})), U({6, -5, 1}));
    EXPECT_EQ(minimal_polynomial(M({{"0", "1"}, {"0", "0"}})), U({0, 0, 1}));
    EXPECT_EQ(minimal_polynomial(RatMatrix(2, 2)), U({0, 1}));
}

TEST(MinimalPolynomial, AnnihilatesAndIsMinimal) {
    std::mt19937_64 rng(37);
    for (int t = 0; t < 30; ++t) {
        const std::size_t n = 2 + t % 4;
        RatMatrix m = random_matrix(rng, n, n, 3);
        if (t % 2 == 0) {
            // Conjugated diagonal matrix with repeated eigenvalues.
            RatMatrix d(n, n);
            for (std::size_t i = 0; i < n; ++i)
                d(i, i) = static_cast<int>(i % 2);
            const RatMatrix q = random_invertible(rng, n);
            m = invert(q) * d * q;
        }
        const UniPoly mp = minimal_polynomial(m);
        EXPECT_EQ(mp.leading(), 1);
        EXPECT_TRUE(mp.evaluate(m).is_zero());
        for (const auto &factor : coprime_split(mp)) {
            if (factor.degree() < 1)
                continue;
            const UniPoly reduced = divmod(mp, factor).quotient;
            EXPECT_FALSE(reduced.evaluate(m).is_zero());
        }
    }
}

TEST(UniPoly, GcdAndExtendedGcd) {
    EXPECT_EQ(unipoly_gcd(U({-1, 0, 1}), U({1, 1})), U({1, 1}));
    const ExtendedGcd g = extended_gcd(U({0, 1}), U({-1, 1}));
    EXPECT_EQ(g.gcd, U({1}));
    EXPECT_EQ(g.u, U({1}));
    EXPECT_EQ(g.v, U({-1}));
    std::mt19937_64 rng(41);
    std::uniform_int_distribution<int> c(-5, 5);
    for (int t = 0; t < 30; ++t) {
        const UniPoly a({c(rng), c(rng), c(rng), 1});
        const UniPoly b({c(rng), c(rng), 1});
        const ExtendedGcd e = extended_gcd(a, b);
        EXPECT_EQ(e.u * a + e.v * b, e.gcd);
        EXPECT_TRUE((a % e.gcd).is_zero());
        EXPECT_TRUE((b % e.gcd).is_zero());
    }
}

TEST(UniPoly, SquarefreeAndRoots) {
    // (t-1)^2 (t+2)
    const UniPoly p = U({2, -3, 0, 1});
    EXPECT_EQ(squarefree_part(p), U({-2, 1, 1}));
    EXPECT_EQ(rational_roots(U({-1, 0, 4})), (std::vector<Rational>{Rational(-1, 2), Rational(1, 2)}));
    EXPECT_TRUE(rational_roots(U({-2, 0, 1})).empty());
}

TEST(UniPoly, CoprimeSplitExamples) {
    EXPECT_EQ(coprime_split(U({0, -1, 1})), (std::vector<UniPoly>{U({0, 1}), U({-1, 1})}));
    // (t-1)^2 (t^2-2)
    const UniPoly p = U({-1, -2, 0, 1}) * U({-1, 1}) * U({1, 1});
    const auto parts = coprime_split(U({-1, 1}) * U({-1, 1}) * U({-2, 0, 1}));
    ASSERT_EQ(parts.size(), 2u);
    EXPECT_EQ(parts[0], U({-1, 1}));
    EXPECT_EQ(parts[1], U({-2, 0, 1}));
    EXPECT_EQ(coprime_split(p).size(), 3u);
}

TEST(UniPoly, CoprimeSplitFactorsArePairwiseCoprime) {
    std::mt19937_64 rng(43);
    std::uniform_int_distribution<int> root(-6, 6);
    for (int t = 0; t < 30; ++t) {
        UniPoly m = U({1});
        for (int k = 0; k < 4; ++k)
            m = m * UniPoly::linear_root(make_rational(root(rng), 1 + k % 2));
        if (t % 2)
            m = m * U({-3, 0, 1});
        const auto parts = coprime_split(m);
        UniPoly product = U({1});
        for (std::size_t i = 0; i < parts.size(); ++i) {
            product = product * parts[i];
            for (std::size_t j = i + 1; j < parts.size(); ++j)
                EXPECT_EQ(unipoly_gcd(parts[i], parts[j]), U({1}));
        }
        EXPECT_EQ(product, squarefree_part(m));
    }
}

TEST(ColumnSpace, PicksPivotColumns) {
    const auto basis = column_space_basis(M({{"1", "2", "0"}, {"2", "4", "1"}}));
    ASSERT_EQ(basis.size(), 2u);
    EXPECT_EQ(basis[0], (RatVector{1, 2}));
    EXPECT_EQ(basis[1], (RatVector{0, 1}));
    EXPECT_TRUE(column_space_basis(RatMatrix(2, 2)).empty());
}
