#pragma once

#include "polydecomp/document.hpp"
#include "polydecomp/poly.hpp"
#include "polydecomp/ratlinalg.hpp"

#include <ostream>
#include <random>
#include <string>
#include <vector>

namespace polydecomp {

// Readable gtest failure messages.
inline void PrintTo(const Polynomial &p, std::ostream *os) {
    *os << render_canonical(p, default_variable_names(p.nvars()));
}
inline void PrintTo(const UniPoly &p, std::ostream *os) { *os << to_string(p); }
inline void PrintTo(const RatMatrix &m, std::ostream *os) { *os << to_string(m); }

} // namespace polydecomp

namespace polydecomp::testing {

inline std::vector<std::string> names(std::initializer_list<const char *> list) {
    return {list.begin(), list.end()};
}

inline Polynomial P(const std::string &text, const std::vector<std::string> &vars) {
    return parse_polynomial(text, vars);
}

inline std::vector<Polynomial> fixture(const std::string &name) {
    return read_problem_file(std::string(POLYDECOMP_FIXTURES) + "/" + name).polynomials();
}

inline std::string fixture_path(const std::string &name) {
    return std::string(POLYDECOMP_FIXTURES) + "/" + name;
}

/// Up to `terms` random monomials of total degree <= max_degree with
/// nonzero integer coefficients in [-bound, bound].
inline Polynomial random_polynomial(std::mt19937_64 &rng, std::size_t n, std::uint32_t max_degree,
                                    std::size_t terms, int bound = 9) {
    std::uniform_int_distribution<int> coeff(-bound, bound);
    std::uniform_int_distribution<std::uint32_t> deg(0, max_degree);
    std::uniform_int_distribution<std::size_t> var(0, n - 1);
    Polynomial p(n);
    for (std::size_t t = 0; t < terms; ++t) {
        std::vector<std::uint32_t> e(n, 0);
        const std::uint32_t d = deg(rng);
        for (std::uint32_t k = 0; k < d; ++k)
            ++e[var(rng)];
        p.add_term(Monomial(std::move(e)), coeff(rng));
    }
    return p;
}

/// Dense random polynomial: every monomial of degree <= max_degree.
inline Polynomial dense_polynomial(std::mt19937_64 &rng, std::size_t n, std::uint32_t max_degree, int bound) {
    std::uniform_int_distribution<int> coeff(-bound, bound);
    Polynomial p(n);
    std::vector<std::uint32_t> e(n, 0);
    // Odometer over exponent vectors with sum <= max_degree.
    for (;;) {
        std::uint32_t sum = 0;
        for (auto x : e)
            sum += x;
        if (sum <= max_degree)
            p.add_term(Monomial(e), coeff(rng));
        std::size_t i = 0;
        while (i < n && ++e[i] > max_degree)
            e[i++] = 0;
        if (i == n)
            break;
    }
    return p;
}

inline RatMatrix random_matrix(std::mt19937_64 &rng, std::size_t rows, std::size_t cols, int bound) {
    std::uniform_int_distribution<int> entry(-bound, bound);
    RatMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = entry(rng);
    return m;
}

inline RatMatrix random_invertible(std::mt19937_64 &rng, std::size_t n, int bound = 3) {
    for (;;) {
        RatMatrix m = random_matrix(rng, n, n, bound);
        if (sgn(determinant(m)) != 0)
            return m;
    }
}

} // namespace polydecomp::testing
