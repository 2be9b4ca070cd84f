#include "polydecomp/unipoly.hpp"

#include "polydecomp/errors.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace polydecomp {

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void UniPoly::trim() {
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0)
        coeffs_.pop_back();
}

UniPoly UniPoly::constant(const Rational &c) { return UniPoly({c}); }

UniPoly UniPoly::linear_root(const Rational &root) { return UniPoly({-root, Rational(1)}); }

UniPoly UniPoly::monomial(std::size_t degree, const Rational &c) {
    std::vector<Rational> v(degree + 1);
    v[degree] = c;
    return UniPoly(std::move(v));
}

UniPoly UniPoly::monic() const {
    if (is_zero())
        return *this;
    Rational lc = leading();
    std::vector<Rational> v = coeffs_;
    for (auto &c : v)
        c /= lc;
    return UniPoly(std::move(v));
}

UniPoly UniPoly::derivative() const {
    if (coeffs_.size() <= 1)
        return {};
    std::vector<Rational> v(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k)
        v[k - 1] = coeffs_[k] * static_cast<unsigned long>(k);
    return UniPoly(std::move(v));
}

Rational UniPoly::evaluate(const Rational &t) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * t + *it;
    return acc;
}

RatMatrix UniPoly::evaluate(const RatMatrix &m) const {
    if (!m.is_square())
        throw DimensionMismatch("polynomial evaluation needs a square matrix");
    const std::size_t n = m.rows();
    RatMatrix acc(n, n);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * m;
        for (std::size_t i = 0; i < n; ++i)
            acc(i, i) += *it;
    }
    return acc;
}

UniPoly operator+(const UniPoly &a, const UniPoly &b) {
    std::vector<Rational> v(std::max(a.coeffs().size(), b.coeffs().size()));
    for (std::size_t k = 0; k < v.size(); ++k)
        v[k] = a.coeff(k) + b.coeff(k);
    return UniPoly(std::move(v));
}

UniPoly operator-(const UniPoly &a, const UniPoly &b) {
    std::vector<Rational> v(std::max(a.coeffs().size(), b.coeffs().size()));
    for (std::size_t k = 0; k < v.size(); ++k)
        v[k] = a.coeff(k) - b.coeff(k);
    return UniPoly(std::move(v));
}

UniPoly operator*(const UniPoly &a, const UniPoly &b) {
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<Rational> v(a.coeffs().size() + b.coeffs().size() - 1);
    for (std::size_t i = 0; i < a.coeffs().size(); ++i)
        for (std::size_t j = 0; j < b.coeffs().size(); ++j)
            v[i + j] += a.coeffs()[i] * b.coeffs()[j];
    return UniPoly(std::move(v));
}

UniPoly operator*(const Rational &c, const UniPoly &a) { return UniPoly::constant(c) * a; }

DivMod divmod(const UniPoly &a, const UniPoly &b) {
    if (b.is_zero())
        throw InvalidArgument("polynomial division by zero");
    std::vector<Rational> rem = a.coeffs();
    const int db = b.degree();
    if (a.degree() < db)
        return {UniPoly(), a};
    std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db + 1));
    for (int k = a.degree(); k >= db; --k) {
        Rational c = rem[static_cast<std::size_t>(k)] / b.leading();
        quot[static_cast<std::size_t>(k - db)] = c;
        if (sgn(c) == 0)
            continue;
        for (int j = 0; j <= db; ++j)
            rem[static_cast<std::size_t>(k - db + j)] -= c * b.coeffs()[static_cast<std::size_t>(j)];
    }
    return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly operator%(const UniPoly &a, const UniPoly &b) { return divmod(a, b).remainder; }

std::string to_string(const UniPoly &p, const std::string &var) {
    if (p.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = p.degree(); k >= 0; --k) {
        const Rational &c = p.coeffs()[static_cast<std::size_t>(k)];
        if (sgn(c) == 0)
            continue;
        Rational a = abs(c);
        if (first)
            os << (sgn(c) < 0 ? "-" : "");
        else
            os << (sgn(c) < 0 ? " - " : " + ");
        first = false;
        if (k == 0 || a != 1)
            os << a.get_str() << (k ? "*" : "");
        if (k >= 1)
            os << var;
        if (k >= 2)
            os << '^' << k;
    }
    return os.str();
}

UniPoly unipoly_gcd(const UniPoly &a, const UniPoly &b) { return extended_gcd(a, b).gcd; }

ExtendedGcd extended_gcd(const UniPoly &a, const UniPoly &b) {
    if (a.is_zero() && b.is_zero())
        throw InvalidArgument("gcd(0, 0) is undefined");
    UniPoly r0 = a, r1 = b;
    UniPoly s0 = UniPoly::constant(1), s1;
    UniPoly t0, t1 = UniPoly::constant(1);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        UniPoly s2 = s0 - q * s1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        UniPoly t2 = t0 - q * t1;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    Rational inv = 1 / r0.leading();
    return {inv * r0, inv * s0, inv * t0};
}

UniPoly squarefree_part(const UniPoly &m) {
    if (m.degree() <= 0)
        return m.is_zero() ? m : UniPoly::constant(1);
    UniPoly g = unipoly_gcd(m, m.derivative());
    return divmod(m, g).quotient.monic();
}

namespace {

Integer pollard_rho(const Integer &n) {
    if (n % 2 == 0)
        return 2;
    for (unsigned long c = 1;; ++c) {
        Integer x = 2, y = 2, d = 1;
        auto f = [&](const Integer &v) -> Integer { return (v * v + c) % n; };
        while (d == 1) {
            x = f(x);
            y = f(f(y));
            Integer diff = abs(x - y);
            mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        }
        if (d != n)
            return d;
    }
}

void factor_into(Integer n, std::map<Integer, unsigned> &out) {
    for (unsigned long p = 2; p < 1000 && n > 1; ++p)
        while (n % p == 0) {
            ++out[Integer(p)];
            n /= p;
        }
    if (n == 1)
        return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 30)) {
        ++out[n];
        return;
    }
    Integer d = pollard_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

std::vector<Integer> positive_divisors(const Integer &n) {
    std::map<Integer, unsigned> primes;
    factor_into(abs(n), primes);
    std::vector<Integer> divs{1};
    for (const auto &[p, e] : primes) {
        const std::size_t base = divs.size();
        Integer pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i)
                divs.push_back(divs[i] * pk);
        }
    }
    return divs;
}

} // namespace

std::vector<Rational> rational_roots(const UniPoly &p) {
    if (p.is_zero())
        throw InvalidArgument("rational_roots of the zero polynomial");
    std::vector<Rational> roots;
    // Integer-scaled primitive copy; strip the power of t first.
    const auto &c = p.coeffs();
    Integer den = common_denominator(c.begin(), c.end());
    std::vector<Integer> a;
    for (const auto &q : c)
        a.push_back(Integer(q * den));
    std::size_t low = 0;
    while (a[low] == 0)
        ++low;
    if (low > 0)
        roots.push_back(0);
    a.erase(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(low));
    if (a.size() > 1) {
        UniPoly reduced(std::vector<Rational>(a.begin(), a.end()));
        for (const auto &num : positive_divisors(a.front()))
            for (const auto &d : positive_divisors(a.back()))
                for (int s : {1, -1}) {
                    Rational r = make_rational(s * num, d);
                    if (sgn(reduced.evaluate(r)) == 0)
                        roots.push_back(r);
                }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

std::vector<UniPoly> coprime_split(const UniPoly &m) {
    if (m.degree() < 1)
        throw InvalidArgument("coprime_split needs degree >= 1");
    UniPoly residual = squarefree_part(m);
    std::vector<UniPoly> factors;
    for (const auto &r : rational_roots(residual)) {
        UniPoly lin = UniPoly::linear_root(r);
        residual = divmod(residual, lin).quotient;
        factors.push_back(std::move(lin));
    }
    if (residual.degree() >= 1)
        factors.push_back(residual.monic());
    return factors;
}

} // namespace polydecomp
