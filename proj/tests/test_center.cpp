#include "test_util.hpp"

#include "polydecomp/center.hpp"
#include "polydecomp/errors.hpp"
#include "polydecomp/instancegen.hpp"

#include <gtest/gtest.h>

using namespace polydecomp;
using namespace polydecomp::testing;

namespace {

RatMatrix M(std::initializer_list<std::initializer_list<const char *>> rows) { return RatMatrix::from_strings(rows); }

bool spans_equal(const CenterBasis &z, const std::vector<RatMatrix> &family) {
    return same_span(flatten_all(z.basis), flatten_all(family));
}

void expect_members(const CenterBasis &z, std::span<const Polynomial> fs) {
    for (const auto &x : z.basis)
        EXPECT_TRUE(membership_check(x, fs));
}

} // namespace

TEST(Center, QuarticPlusSquares) {
    const auto fs = fixture("quartic_plus_squares.poly");
    const CenterBasis z = center_basis(fs);
    EXPECT_EQ(z.dim(), 4u);
    expect_members(z, fs);
    EXPECT_TRUE(spans_equal(z, {M({{"1", "0", "0"}, {"0", "0", "0"}, {"0", "0", "0"}}),
                                M({{"0", "0", "0"}, {"0", "1", "0"}, {"0", "0", "0"}}),
                                M({{"0", "0", "0"}, {"0", "0", "0"}, {"0", "0", "1"}}),
                                M({{"0", "0", "0"}, {"0", "0", "1"}, {"0", "1", "0"}})}));
}

TEST(Center, BinaryCubicPair) {
    const auto fs = fixture("binary_cubic_pair.poly");
    const CenterBasis z = center_basis(fs);
    EXPECT_EQ(z.dim(), 2u);
    expect_members(z, fs);
    EXPECT_TRUE(spans_equal(z, {M({{"1", "-1/2"}, {"-3/2", "0"}}), M({{"0", "1/2"}, {"3/2", "1"}})}));
}

TEST(Center, SumOfSquaresIsAllSymmetricMatrices) {
    const auto xy = names({"x", "y"});
    const std::vector<Polynomial> fs{P("x^2 + y^2", xy)};
    const CenterBasis z = center_basis(fs);
    EXPECT_EQ(z.dim(), 3u);
    for (const auto &x : z.basis)
        EXPECT_EQ(x, x.transpose());
}

TEST(Center, AffineInputGivesFullMatrixAlgebra) {
    const auto fs = fixture("affine_single.poly");
    EXPECT_EQ(center_basis(fs).dim(), 4u);
}

TEST(Center, QuaternaryPair) {
    const auto fs = fixture("quaternary_pair.poly");
    const CenterBasis z = center_basis(fs);
    EXPECT_EQ(z.dim(), 3u);
    expect_members(z, fs);
    EXPECT_TRUE(spans_equal(z, {RatMatrix::identity(4),
                                M({{"1", "1", "1", "0"}, {"0", "0", "0", "0"}, {"0", "0", "0", "0"}, {"0", "0", "0", "0"}}),
                                M({{"1", "2", "0", "0"}, {"0", "-1", "1", "0"}, {"0", "0", "0", "0"}, {"0", "0", "0", "0"}})}));
}

TEST(Center, TernaryTripleIndividualAndJoint) {
    const auto fs = fixture("ternary_triple.poly");
    ASSERT_EQ(fs.size(), 3u);
    std::vector<std::size_t> dims;
    for (const auto &f : fs)
        dims.push_back(center_basis(std::span(&f, 1)).dim());
    EXPECT_EQ(dims, (std::vector<std::size_t>{2, 3, 5}));
    const CenterBasis joint = center_basis(fs);
    EXPECT_EQ(joint.dim(), 1u);
    EXPECT_TRUE(spans_equal(joint, {RatMatrix::identity(3)}));
}

TEST(Center, ErrorsOnEmptyOrMismatchedInput) {
    EXPECT_THROW(center_basis(std::vector<Polynomial>{}), EmptyInput);
    const std::vector<Polynomial> mixed{Polynomial(2), Polynomial(3)};
    EXPECT_THROW(center_basis(mixed), DimensionMismatch);
}

TEST(Center, BasisIsDeterministicAndLinearlyIndependent) {
    const auto fs = fixture("quaternary_pair.poly");
    const CenterBasis a = center_basis(fs);
    const CenterBasis b = center_basis(fs);
    EXPECT_EQ(a.basis, b.basis);
    EXPECT_EQ(span_rank(flatten_all(a.basis)), a.dim());
}

TEST(Center, Membership) {
    const auto fs = fixture("binary_cubic_pair.poly");
    EXPECT_TRUE(membership_check(RatMatrix::identity(2), fs));
    EXPECT_TRUE(membership_check(M({{"1", "-1/2"}, {"-3/2", "0"}}), fs));
    EXPECT_FALSE(membership_check(M({{"0", "1"}, {"0", "0"}}), fs));
}

TEST(Center, JordanProduct) {
    const RatMatrix a = M({{"0", "1"}, {"0", "0"}});
    const RatMatrix b = M({{"0", "0"}, {"1", "0"}});
    EXPECT_EQ(jordan_product(a, b), M({{"1/2", "0"}, {"0", "1/2"}}));
    EXPECT_EQ(jordan_product(a, a), RatMatrix(2, 2));
}

TEST(Center, JordanClosureOnRandomInputs) {
    std::mt19937_64 rng(101);
    for (int t = 0; t < 15; ++t) {
        const std::size_t n = 2 + t % 3;
        std::vector<Polynomial> fs;
        for (std::size_t k = 0; k < 1 + t % 2; ++k)
            fs.push_back(random_polynomial(rng, n, 3, 1 + t % 4));
        const CenterBasis z = center_basis(fs);
        for (const auto &x : z.basis)
            for (const auto &y : z.basis)
                EXPECT_TRUE(membership_check(jordan_product(x, y), fs));
    }
}

TEST(Center, JordanClosureOnPlantedInstances) {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const std::vector<std::size_t> blocks{1, 2};
        const auto inst = generate(seed, 3, 2, blocks, 3);
        const CenterBasis z = center_basis(inst.fs);
        for (const auto &x : z.basis)
            for (const auto &y : z.basis)
                EXPECT_TRUE(coordinates_in(z, jordan_product(x, y)).has_value());
    }
}

TEST(Center, IdentityAlwaysBelongs) {
    std::mt19937_64 rng(103);
    for (int t = 0; t < 20; ++t) {
        const std::size_t n = 1 + t % 4;
        const std::vector<Polynomial> fs{random_polynomial(rng, n, 4, 6)};
        const CenterBasis z = center_basis(fs);
        EXPECT_GE(z.dim(), 1u);
        EXPECT_TRUE(coordinates_in(z, RatMatrix::identity(n)).has_value());
    }
}

TEST(Center, IntersectionLaw) {
    std::mt19937_64 rng(107);
    for (int t = 0; t < 15; ++t) {
        const std::size_t n = 2 + t % 3;
        const std::vector<Polynomial> g1{random_polynomial(rng, n, 3, 3)};
        const std::vector<Polynomial> g2{random_polynomial(rng, n, 3, 2), random_polynomial(rng, n, 2, 2)};
        std::vector<Polynomial> joined = g1;
        joined.insert(joined.end(), g2.begin(), g2.end());
        const std::vector<std::vector<Polynomial>> groups{g1, g2};
        EXPECT_TRUE(same_center(center_basis(joined), intersect_centers(groups)));
    }
}

TEST(Center, IntersectionOfTernaryTripleIsScalar) {
    const auto fs = fixture("ternary_triple.poly");
    const std::vector<std::vector<Polynomial>> groups{{fs[0]}, {fs[1]}, {fs[2]}};
    EXPECT_EQ(intersect_centers(groups).dim(), 1u);
}

TEST(Center, ConjugationCovariance) {
    std::mt19937_64 rng(109);
    for (int t = 0; t < 10; ++t) {
        const std::size_t n = 2 + t % 3;
        const std::vector<std::size_t> blocks = n == 2 ? std::vector<std::size_t>{1, 1}
                                                       : std::vector<std::size_t>{1, n - 1};
        const auto inst = generate(200 + t, n, 1 + t % 2, blocks, 3);
        const RatMatrix a = random_invertible(rng, n);
        std::vector<Polynomial> gs;
        for (const auto &f : inst.fs)
            gs.push_back(substitute_linear(f, a));
        const CenterBasis zf = center_basis(inst.fs);
        const CenterBasis zg = center_basis(gs);
        ASSERT_EQ(zf.dim(), zg.dim());
        const RatMatrix a_inv = invert(a);
        std::vector<RatMatrix> conj;
        for (const auto &x : zf.basis)
            conj.push_back(a_inv * x * a);
        EXPECT_TRUE(spans_equal(zg, conj));
    }
}

TEST(Center, AgreesWithBruteForce) {
    std::mt19937_64 rng(113);
    for (int t = 0; t < 20; ++t) {
        const std::size_t n = 1 + t % 4;
        std::vector<Polynomial> fs{random_polynomial(rng, n, 4, 1 + t % 5)};
        if (t % 3 == 0)
            fs.push_back(random_polynomial(rng, n, 3, 2));
        EXPECT_EQ(center_basis(fs).dim(), brute_force_center_dim(fs));
    }
}

TEST(Center, GenericDenseCubicIsScalar) {
    std::mt19937_64 rng(127);
    for (int t = 0; t < 5; ++t) {
        const std::vector<Polynomial> fs{dense_polynomial(rng, 3, 3, 20)};
        EXPECT_EQ(center_basis(fs).dim(), 1u);
    }
}

TEST(Center, CoordinatesRecombine) {
    const auto fs = fixture("quartic_plus_squares.poly");
    const CenterBasis z = center_basis(fs);
    const std::vector<Rational> c{2, -1, Rational(1, 3), 5};
    const RatMatrix x = z.combine(c);
    const auto back = coordinates_in(z, x);
    ASSERT_TRUE(back.has_value());
    EXPECT_EQ(*back, c);
    EXPECT_FALSE(coordinates_in(z, M({{"0", "1", "0"}, {"0", "0", "0"}, {"0", "0", "0"}})).has_value());
}
