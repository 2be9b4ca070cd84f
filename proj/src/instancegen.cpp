#include "polydecomp/instancegen.hpp"

#include "polydecomp/errors.hpp"
#include "polydecomp/ratlinalg.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>

namespace polydecomp {

namespace {

// All exponent vectors in `nvars` variables with total degree exactly d.
void monomials_of_degree(std::size_t nvars, std::uint32_t d, std::vector<std::uint32_t> &cur,
                         std::vector<Monomial> &out) {
    if (cur.size() + 1 == nvars) {
        cur.push_back(d);
        out.emplace_back(cur);
        cur.pop_back();
        return;
    }
    for (std::uint32_t e = d + 1; e-- > 0;) {
        cur.push_back(e);
        monomials_of_degree(nvars, d - e, cur, out);
        cur.pop_back();
    }
}

std::vector<Monomial> monomials_of_degree(std::size_t nvars, std::uint32_t d) {
    std::vector<Monomial> out;
    std::vector<std::uint32_t> cur;
    monomials_of_degree(nvars, d, cur, out);
    return out;
}

int nonzero_in(std::mt19937_64 &rng, int bound) {
    std::uniform_int_distribution<int> dist(1, 2 * bound);
    const int v = dist(rng);
    return v <= bound ? v - bound - 1 : v - bound;
}

} // namespace

PlantedInstance generate(std::uint64_t seed, std::size_t n, std::size_t m,
                         std::span<const std::size_t> block_sizes, std::uint32_t max_degree) {
    if (block_sizes.empty() || std::find(block_sizes.begin(), block_sizes.end(), 0u) != block_sizes.end())
        throw InvalidArgument("block sizes must be positive");
    if (std::accumulate(block_sizes.begin(), block_sizes.end(), std::size_t{0}) != n)
        throw InvalidArgument("block sizes must sum to n");
    if (m == 0)
        throw InvalidArgument("need at least one polynomial");
    if (max_degree < 3)
        throw InvalidArgument("max_degree must be at least 3");

    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(0.5);

    PlantedInstance inst;
    inst.seed = seed;
    inst.planted_blocks.assign(block_sizes.begin(), block_sizes.end());

    std::uniform_int_distribution<std::size_t> pick_poly(0, m - 1);
    std::uniform_int_distribution<std::uint32_t> pick_degree(3, max_degree);
    for (std::size_t j = 0; j < block_sizes.size(); ++j) {
        const std::size_t k = block_sizes[j];
        std::vector<Polynomial> parts(m, Polynomial(k));
        const std::size_t anchor = pick_poly(rng);
        const std::uint32_t dense_degree = pick_degree(rng);
        for (const auto &mono : monomials_of_degree(k, dense_degree))
            parts[anchor].add_term(mono, nonzero_in(rng, 5));
        for (std::size_t i = 0; i < m; ++i)
            for (std::uint32_t d = j == 0 ? 0 : 1; d <= max_degree; ++d)
                for (const auto &mono : monomials_of_degree(k, d))
                    if (coin(rng))
                        parts[i].add_term(mono, nonzero_in(rng, 5));
        inst.block_polys.push_back(std::move(parts));
    }

    std::uniform_int_distribution<int> entry(-3, 3);
    do {
        inst.Q = RatMatrix(n, n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c)
                inst.Q(r, c) = entry(rng);
    } while (sgn(determinant(inst.Q)) == 0);

    std::vector<std::size_t> offsets{0};
    for (auto k : block_sizes)
        offsets.push_back(offsets.back() + k);
    for (std::size_t i = 0; i < m; ++i) {
        Polynomial h(n);
        for (std::size_t j = 0; j < block_sizes.size(); ++j) {
            std::vector<std::size_t> pos(block_sizes[j]);
            std::iota(pos.begin(), pos.end(), offsets[j]);
            h += embed_variables(inst.block_polys[j][i], n, pos);
        }
        inst.fs.push_back(substitute_linear(h, inst.Q));
    }
    return inst;
}

DecompositionResult planted_result(const PlantedInstance &inst) {
    const std::size_t n = inst.Q.rows();
    DecompositionResult r;
    r.P = invert(inst.Q);
    r.tree.variable_indices.resize(n);
    std::iota(r.tree.variable_indices.begin(), r.tree.variable_indices.end(), std::size_t{0});
    r.tree.polys = inst.fs;
    r.tree.local_transform = r.P;
    r.tree.idempotents.n = n;
    std::size_t at = 0;
    for (std::size_t j = 0; j < inst.planted_blocks.size(); ++j) {
        const std::size_t k = inst.planted_blocks[j];
        RatMatrix e(n, n);
        for (std::size_t t = at; t < at + k; ++t)
            e(t, t) = 1;
        // epsilon_j = P E_j P^{-1}
        r.tree.idempotents.eps.push_back(r.P * e * inst.Q);
        DecompositionNode leaf;
        leaf.variable_indices.resize(k);
        std::iota(leaf.variable_indices.begin(), leaf.variable_indices.end(), at);
        leaf.polys = inst.block_polys[j];
        leaf.local_transform = RatMatrix::identity(k);
        r.tree.children.push_back(std::move(leaf));
        at += k;
    }
    r.diagonalizable = std::all_of(inst.planted_blocks.begin(), inst.planted_blocks.end(),
                                   [](std::size_t k) { return k == 1; });
    return r;
}

std::size_t brute_force_center_dim(std::span<const Polynomial> fs) {
    if (fs.empty())
        throw EmptyInput("no polynomials");
    const std::size_t n = fs.front().nvars();
    if (n > brute_force_max_dim)
        throw InvalidArgument("brute-force oracle limited to n <= 6");
    const std::size_t unknowns = n * n;

    std::vector<std::vector<Rational>> rows;
    for (const auto &f : fs) {
        // Second partials computed directly from the terms.
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) {
                // Collect all monomials present in row r or column c of H.
                std::vector<std::pair<Monomial, std::vector<Rational>>> eqs;
                auto slot = [&](const Monomial &mono) -> std::vector<Rational> & {
                    for (auto &[mm, row] : eqs)
                        if (mm == mono)
                            return row;
                    eqs.emplace_back(mono, std::vector<Rational>(unknowns));
                    return eqs.back().second;
                };
                for (std::size_t k = 0; k < n; ++k) {
                    const Polynomial hrk = partial_derivative(partial_derivative(f, r), k);
                    const Polynomial hkc = partial_derivative(partial_derivative(f, k), c);
                    for (const auto &[mono, coeff] : hrk.terms())
                        slot(mono)[k * n + c] += coeff;
                    for (const auto &[mono, coeff] : hkc.terms())
                        slot(mono)[k * n + r] -= coeff;
                }
                for (auto &[mono, row] : eqs)
                    rows.push_back(std::move(row));
            }
    }

    // Plain Gaussian elimination over the rationals.
    std::size_t rank = 0;
    for (std::size_t col = 0; col < unknowns && rank < rows.size(); ++col) {
        std::size_t p = rank;
        while (p < rows.size() && sgn(rows[p][col]) == 0)
            ++p;
        if (p == rows.size())
            continue;
        std::swap(rows[p], rows[rank]);
        for (std::size_t r = rank + 1; r < rows.size(); ++r) {
            if (sgn(rows[r][col]) == 0)
                continue;
            const Rational f = rows[r][col] / rows[rank][col];
            for (std::size_t j = col; j < unknowns; ++j)
                rows[r][j] -= f * rows[rank][j];
        }
        ++rank;
    }
    return unknowns - rank;
}

bool is_refinement(std::vector<std::size_t> fine, std::vector<std::size_t> coarse) {
    if (std::accumulate(fine.begin(), fine.end(), std::size_t{0}) !=
        std::accumulate(coarse.begin(), coarse.end(), std::size_t{0}))
        return false;
    std::sort(fine.rbegin(), fine.rend());
    std::vector<std::size_t> remaining = coarse;
    // Place each fine part into some coarse bin with enough room.
    std::function<bool(std::size_t)> place = [&](std::size_t idx) {
        if (idx == fine.size())
            return std::all_of(remaining.begin(), remaining.end(), [](std::size_t r) { return r == 0; });
        for (std::size_t b = 0; b < remaining.size(); ++b) {
            if (remaining[b] < fine[idx])
                continue;
            bool seen = false;
            for (std::size_t e = 0; e < b; ++e)
                seen = seen || remaining[e] == remaining[b];
            if (seen)
                continue;
            remaining[b] -= fine[idx];
            if (place(idx + 1))
                return true;
            remaining[b] += fine[idx];
        }
        return false;
    };
    return place(0);
}

} // namespace polydecomp
