#include "polydecomp/idempotent.hpp"

#include "polydecomp/errors.hpp"
#include "polydecomp/ratlinalg.hpp"

#include <algorithm>
#include <random>

namespace polydecomp {

namespace {

// Basis of the corner algebra e Z e.
std::vector<RatMatrix> corner_basis(const CenterBasis &z, const RatMatrix &e) {
    std::vector<RatMatrix> spanning;
    for (const auto &x : z.basis)
        spanning.push_back(e * x * e);
    const auto r = rref(RatMatrix::from_columns(flatten_all(spanning), z.n * z.n));
    std::vector<RatMatrix> basis;
    for (auto p : r.pivots)
        basis.push_back(spanning[p]);
    return basis;
}

// Matrix of h restricted to the range of e, in the basis given by the
// columns of `range` (n x r, full column rank).
RatMatrix restrict_to_range(const RatMatrix &h, const RatMatrix &range) {
    const RatMatrix image = h * range;
    RatMatrix c(range.cols(), range.cols());
    for (std::size_t j = 0; j < range.cols(); ++j) {
        auto x = solve(range, image.column(j));
        if (!x)
            throw InternalInvariantViolation("range of an idempotent is not invariant");
        for (std::size_t i = 0; i < range.cols(); ++i)
            c(i, j) = (*x)[i];
    }
    return c;
}

// Projectors p_i(t) with p_i = 1 mod q_i and p_i = 0 mod q_j (j != i), where
// q_i is the full power of factors[i] dividing m.
std::vector<UniPoly> crt_projectors(const UniPoly &m, const std::vector<UniPoly> &factors) {
    std::vector<UniPoly> primary;
    for (const auto &f : factors) {
        UniPoly q = UniPoly::constant(1), rest = m;
        for (;;) {
            auto [quot, rem] = divmod(rest, f);
            if (!rem.is_zero())
                break;
            q = q * f;
            rest = std::move(quot);
        }
        primary.push_back(std::move(q));
    }
    std::vector<UniPoly> projectors;
    for (const auto &q : primary) {
        const UniPoly cofactor = divmod(m, q).quotient;
        const ExtendedGcd eg = extended_gcd(cofactor, q);
        if (eg.gcd.degree() != 0)
            throw InternalInvariantViolation("coprime_split returned non-coprime factors");
        projectors.push_back((eg.u * cofactor) % m);
    }
    return projectors;
}

class Splitter {
  public:
    Splitter(const CenterBasis &z, std::uint64_t seed, int max_tries)
        : z_(z), seed_(seed), max_tries_(max_tries) {}

    void refine(const RatMatrix &e, std::vector<RatMatrix> &out) {
        const auto corner = corner_basis(z_, e);
        if (corner.size() > 1) {
            const RatMatrix range = RatMatrix::from_columns(column_space_basis(e), z_.n);
            // Basis elements first: sparse ones often split where random
            // combinations only have irrational eigenvalues.
            for (const auto &b : corner)
                if (split_with(e, b, range, out))
                    return;
            for (int attempt = 0; attempt < max_tries_; ++attempt)
                if (split_with(e, random_element(corner), range, out))
                    return;
        }
        out.push_back(e);
    }

  private:
    bool split_with(const RatMatrix &e, const RatMatrix &g, const RatMatrix &range, std::vector<RatMatrix> &out) {
        const auto pieces = try_split(e, g, range);
        if (pieces.size() < 2)
            return false;
        for (const auto &p : pieces)
            refine(p, out);
        return true;
    }

    RatMatrix random_element(const std::vector<RatMatrix> &corner) {
        std::seed_seq seq{static_cast<std::uint32_t>(seed_), static_cast<std::uint32_t>(seed_ >> 32),
                          static_cast<std::uint32_t>(draws_++)};
        std::mt19937_64 rng(seq);
        std::uniform_int_distribution<int> dist(1, 18);
        RatMatrix g(z_.n, z_.n);
        for (const auto &b : corner) {
            const int v = dist(rng);
            const int c = v <= 9 ? v - 10 : v - 9; // {-9..9} \ {0}
            g += b * Rational(c);
        }
        return g;
    }

    std::vector<RatMatrix> try_split(const RatMatrix &e, const RatMatrix &g, const RatMatrix &range) {
        const UniPoly m = minimal_polynomial(restrict_to_range(g, range));
        if (m.degree() < 2)
            return {};
        const auto factors = coprime_split(m);
        if (factors.size() < 2)
            return {};
        std::vector<RatMatrix> pieces;
        for (const auto &p : crt_projectors(m, factors))
            pieces.push_back(e * p.evaluate(g));
        return pieces;
    }

    const CenterBasis &z_;
    std::uint64_t seed_;
    int max_tries_;
    std::uint64_t draws_ = 0;
};

bool idempotent_identities(const std::vector<RatMatrix> &eps, std::size_t n) {
    RatMatrix sum(n, n);
    for (std::size_t i = 0; i < eps.size(); ++i) {
        if (eps[i].rows() != n || eps[i].cols() != n || eps[i].is_zero())
            return false;
        if (!(eps[i] * eps[i] == eps[i]))
            return false;
        for (std::size_t j = 0; j < eps.size(); ++j)
            if (i != j && !(eps[i] * eps[j]).is_zero())
                return false;
        sum += eps[i];
    }
    return sum == RatMatrix::identity(n);
}

} // namespace

IdempotentSet find_idempotents(const CenterBasis &z, std::uint64_t seed, int max_tries) {
    if (z.dim() == 0)
        throw EmptyInput("empty center basis");
    if (max_tries < 1)
        throw InvalidArgument("max_tries must be at least 1");
    if (z.dim() == 1)
        return IdempotentSet::trivial(z.n);

    IdempotentSet set{z.n, {}};
    Splitter(z, seed, max_tries).refine(RatMatrix::identity(z.n), set.eps);
    if (!idempotent_identities(set.eps, z.n))
        throw InternalInvariantViolation("constructed idempotents are not complete and orthogonal");
    for (const auto &e : set.eps)
        if (!coordinates_in(z, e))
            throw InternalInvariantViolation("constructed idempotent lies outside the center");
    return set;
}

bool satisfies_idempotent_identities(const IdempotentSet &set) {
    return !set.eps.empty() && idempotent_identities(set.eps, set.n);
}

bool verify_complete(const IdempotentSet &set, std::span<const Polynomial> fs) {
    if (!satisfies_idempotent_identities(set))
        return false;
    return std::all_of(set.eps.begin(), set.eps.end(),
                       [&](const RatMatrix &e) { return membership_check(e, fs); });
}

std::vector<std::size_t> rank_profile(const IdempotentSet &set) {
    std::vector<std::size_t> ranks;
    for (const auto &e : set.eps)
        ranks.push_back(rank(e));
    std::sort(ranks.begin(), ranks.end());
    return ranks;
}

} // namespace polydecomp
