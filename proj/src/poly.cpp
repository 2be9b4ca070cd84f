#include "polydecomp/poly.hpp"

#include "polydecomp/errors.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <regex>
#include <set>
#include <sstream>
#include <unordered_map>

namespace polydecomp {

Monomial::Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {
    for (auto e : exps_)
        degree_ += e;
}

Monomial Monomial::variable(std::size_t nvars, std::size_t i) {
    std::vector<std::uint32_t> e(nvars, 0);
    e.at(i) = 1;
    return Monomial(std::move(e));
}

Monomial Monomial::operator*(const Monomial &other) const {
    if (other.nvars() != nvars())
        throw DimensionMismatch("monomial variable count mismatch");
    std::vector<std::uint32_t> e = exps_;
    for (std::size_t i = 0; i < e.size(); ++i)
        e[i] += other.exps_[i];
    return Monomial(std::move(e));
}

bool GrlexGreater::operator()(const Monomial &a, const Monomial &b) const {
    if (a.degree() != b.degree())
        return a.degree() > b.degree();
    return a.exponents() > b.exponents();
}

// ---------------------------------------------------------------------------

Polynomial Polynomial::constant(std::size_t nvars, const Rational &c) {
    Polynomial p(nvars);
    p.add_term(Monomial(nvars), c);
    return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t i) {
    return term(Monomial::variable(nvars, i), 1);
}

Polynomial Polynomial::term(const Monomial &m, const Rational &c) {
    Polynomial p(m.nvars());
    p.add_term(m, c);
    return p;
}

int Polynomial::total_degree() const noexcept {
    return terms_.empty() ? -1 : static_cast<int>(terms_.begin()->first.degree());
}

Rational Polynomial::coefficient(const Monomial &m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational Polynomial::constant_term() const { return coefficient(Monomial(nvars_)); }

void Polynomial::add_term(const Monomial &m, const Rational &c) {
    if (m.nvars() != nvars_)
        throw DimensionMismatch("monomial has " + std::to_string(m.nvars()) +
                                " variables, polynomial has " + std::to_string(nvars_));
    if (sgn(c) == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0)
            terms_.erase(it);
    }
}

Polynomial &Polynomial::operator+=(const Polynomial &q) {
    if (q.nvars_ != nvars_)
        throw DimensionMismatch("polynomial variable count mismatch");
    for (const auto &[m, c] : q.terms_)
        add_term(m, c);
    return *this;
}

Polynomial &Polynomial::operator-=(const Polynomial &q) {
    if (q.nvars_ != nvars_)
        throw DimensionMismatch("polynomial variable count mismatch");
    for (const auto &[m, c] : q.terms_)
        add_term(m, -c);
    return *this;
}

Polynomial &Polynomial::operator*=(const Rational &c) {
    if (sgn(c) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto &[m, coeff] : terms_)
        coeff *= c;
    return *this;
}

Polynomial Polynomial::operator-() const {
    Polynomial p = *this;
    return p *= Rational(-1);
}

Polynomial operator+(Polynomial p, const Polynomial &q) { return p += q; }
Polynomial operator-(Polynomial p, const Polynomial &q) { return p -= q; }
Polynomial operator*(Polynomial p, const Rational &c) { return p *= c; }
Polynomial operator*(const Rational &c, Polynomial p) { return p *= c; }

Polynomial operator*(const Polynomial &p, const Polynomial &q) {
    if (p.nvars() != q.nvars())
        throw DimensionMismatch("polynomial variable count mismatch");
    Polynomial r(p.nvars());
    for (const auto &[mp, cp] : p.terms())
        for (const auto &[mq, cq] : q.terms())
            r.add_term(mp * mq, cp * cq);
    return r;
}

Polynomial pow(const Polynomial &p, std::uint32_t e) {
    Polynomial result = Polynomial::constant(p.nvars(), 1);
    Polynomial base = p;
    while (e) {
        if (e & 1u)
            result = result * base;
        e >>= 1u;
        if (e)
            base = base * base;
    }
    return result;
}

// ---------------------------------------------------------------------------

void validate_variable_names(std::span<const std::string> vars) {
    static const std::regex ident("[A-Za-z_][A-Za-z0-9_]*");
    if (vars.empty())
        throw InvalidArgument("variable list is empty");
    std::set<std::string> seen;
    for (const auto &v : vars) {
        if (!std::regex_match(v, ident))
            throw InvalidArgument("invalid variable name '" + v + "'");
        if (!seen.insert(v).second)
            throw InvalidArgument("duplicate variable name '" + v + "'");
    }
}

namespace {

class PolyParser {
  public:
    PolyParser(std::string_view text, std::span<const std::string> vars)
        : text_(text), n_(vars.size()) {
        for (std::size_t i = 0; i < vars.size(); ++i)
            index_.emplace(vars[i], i);
    }

    Polynomial parse() {
        Polynomial result(n_);
        skip_ws();
        if (at_end())
            throw ParseError("empty polynomial", pos_);
        bool negative = false;
        if (peek() == '+' || peek() == '-') {
            negative = peek() == '-';
            ++pos_;
        }
        for (;;) {
            auto [m, c] = parse_term();
            result.add_term(m, negative ? Rational(-c) : c);
            skip_ws();
            if (at_end())
                break;
            if (peek() != '+' && peek() != '-')
                throw ParseError(std::string("expected '+' or '-', found '") + peek() + "'", pos_);
            negative = peek() == '-';
            ++pos_;
        }
        return result;
    }

  private:
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek())))
            ++pos_;
    }

    Integer parse_digits() {
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek())))
            ++pos_;
        if (pos_ == start)
            throw ParseError("expected integer literal", start);
        return Integer(std::string(text_.substr(start, pos_ - start)));
    }

    std::pair<Monomial, Rational> parse_term() {
        std::vector<std::uint32_t> exps(n_, 0);
        Rational coeff = 1;
        for (;;) {
            skip_ws();
            if (at_end())
                throw ParseError("expected a factor", pos_);
            const char c = peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                Integer num = parse_digits();
                Integer den = 1;
                skip_ws();
                if (!at_end() && peek() == '/') {
                    ++pos_;
                    skip_ws();
                    const std::size_t at = pos_;
                    den = parse_digits();
                    if (den == 0)
                        throw ParseError("zero denominator", at);
                }
                coeff *= make_rational(num, den);
            } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                const std::size_t start = pos_;
                while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_'))
                    ++pos_;
                const std::string name(text_.substr(start, pos_ - start));
                auto it = index_.find(name);
                if (it == index_.end())
                    throw ParseError("unknown variable '" + name + "'", start);
                std::uint64_t e = 1;
                skip_ws();
                if (!at_end() && peek() == '^') {
                    ++pos_;
                    skip_ws();
                    const std::size_t at = pos_;
                    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
                        throw ParseError("exponent must be a non-negative integer literal", at);
                    Integer big = parse_digits();
                    if (!at_end() && (peek() == '.' || peek() == '/'))
                        throw ParseError("exponent must be a non-negative integer literal", at);
                    if (big > std::numeric_limits<std::uint32_t>::max() / 2)
                        throw ParseError("exponent too large", at);
                    e = big.get_ui();
                }
                exps[it->second] += static_cast<std::uint32_t>(e);
            } else {
                throw ParseError(std::string("unexpected character '") + c + "'", pos_);
            }
            skip_ws();
            if (at_end() || peek() != '*')
                break;
            ++pos_;
        }
        return {Monomial(std::move(exps)), coeff};
    }

    std::string_view text_;
    std::size_t n_;
    std::size_t pos_ = 0;
    std::unordered_map<std::string, std::size_t> index_;
};

} // namespace

Polynomial parse_polynomial(std::string_view text, std::span<const std::string> vars) {
    validate_variable_names(vars);
    return PolyParser(text, vars).parse();
}

std::string render_canonical(const Polynomial &p, std::span<const std::string> vars) {
    if (vars.size() != p.nvars())
        throw DimensionMismatch("render: " + std::to_string(vars.size()) + " names for " +
                                std::to_string(p.nvars()) + " variables");
    if (p.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto &[m, c] : p.terms()) {
        if (first)
            os << (sgn(c) < 0 ? "-" : "");
        else
            os << (sgn(c) < 0 ? " - " : " + ");
        first = false;
        const Rational a = abs(c);
        bool need_star = false;
        if (m.is_constant() || a != 1) {
            os << a.get_str();
            need_star = true;
        }
        for (std::size_t i = 0; i < m.nvars(); ++i) {
            if (m[i] == 0)
                continue;
            if (need_star)
                os << '*';
            os << vars[i];
            if (m[i] > 1)
                os << '^' << m[i];
            need_star = true;
        }
    }
    return os.str();
}

std::vector<std::string> default_variable_names(std::size_t n, const std::string &prefix) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i)
        names.push_back(prefix + std::to_string(i + 1));
    return names;
}

Polynomial partial_derivative(const Polynomial &p, std::size_t i) {
    if (i >= p.nvars())
        throw InvalidArgument("variable index " + std::to_string(i) + " out of range");
    Polynomial d(p.nvars());
    for (const auto &[m, c] : p.terms()) {
        if (m[i] == 0)
            continue;
        std::vector<std::uint32_t> e = m.exponents();
        const std::uint32_t k = e[i]--;
        d.add_term(Monomial(std::move(e)), c * k);
    }
    return d;
}

// ---------------------------------------------------------------------------

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols, std::size_t nvars)
    : rows_(rows), cols_(cols), data_(rows * cols, Polynomial(nvars)) {}

bool PolyMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Polynomial &p) { return p.is_zero(); });
}

bool PolyMatrix::is_symmetric() const {
    if (rows_ != cols_)
        return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if (!((*this)(i, j) == (*this)(j, i)))
                return false;
    return true;
}

PolyMatrix PolyMatrix::transpose() const {
    PolyMatrix t(cols_, rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

PolyMatrix operator*(const PolyMatrix &a, const RatMatrix &b) {
    if (a.cols() != b.rows())
        throw DimensionMismatch("PolyMatrix * RatMatrix shape mismatch");
    const std::size_t nv = a.rows() && a.cols() ? a(0, 0).nvars() : 0;
    PolyMatrix c(a.rows(), b.cols(), nv);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k)
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (sgn(b(k, j)) != 0)
                    c(i, j) += a(i, k) * b(k, j);
    return c;
}

PolyMatrix operator*(const RatMatrix &a, const PolyMatrix &b) {
    if (a.cols() != b.rows())
        throw DimensionMismatch("RatMatrix * PolyMatrix shape mismatch");
    const std::size_t nv = b.rows() && b.cols() ? b(0, 0).nvars() : 0;
    PolyMatrix c(a.rows(), b.cols(), nv);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k)
            if (sgn(a(i, k)) != 0)
                for (std::size_t j = 0; j < b.cols(); ++j)
                    c(i, j) += b(k, j) * a(i, k);
    return c;
}

PolyMatrix operator-(const PolyMatrix &a, const PolyMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionMismatch("PolyMatrix subtraction shape mismatch");
    PolyMatrix c = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            c(i, j) -= b(i, j);
    return c;
}

PolyMatrix hessian(const Polynomial &p) {
    const std::size_t n = p.nvars();
    PolyMatrix h(n, n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const Polynomial di = partial_derivative(p, i);
        for (std::size_t j = i; j < n; ++j) {
            h(i, j) = partial_derivative(di, j);
            if (j != i)
                h(j, i) = h(i, j);
        }
    }
    return h;
}

Polynomial substitute_linear(const Polynomial &p, const RatMatrix &P) {
    const std::size_t n = p.nvars();
    if (P.rows() != n || P.cols() != n)
        throw DimensionMismatch("substitute_linear: matrix must be " + std::to_string(n) + "x" +
                                std::to_string(n));
    std::vector<std::uint32_t> max_exp(n, 0);
    for (const auto &[m, c] : p.terms())
        for (std::size_t i = 0; i < n; ++i)
            max_exp[i] = std::max(max_exp[i], m[i]);

    // powers[i][k] = (sum_j P(i,j) y_j)^k
    std::vector<std::vector<Polynomial>> powers(n);
    for (std::size_t i = 0; i < n; ++i) {
        Polynomial form(n);
        for (std::size_t j = 0; j < n; ++j)
            form.add_term(Monomial::variable(n, j), P(i, j));
        powers[i].push_back(Polynomial::constant(n, 1));
        for (std::uint32_t k = 1; k <= max_exp[i]; ++k)
            powers[i].push_back(powers[i].back() * form);
    }

    Polynomial result(n);
    for (const auto &[m, c] : p.terms()) {
        Polynomial t = Polynomial::constant(n, c);
        for (std::size_t i = 0; i < n; ++i)
            if (m[i])
                t = t * powers[i][m[i]];
        result += t;
    }
    return result;
}

Polynomial restrict_variables(const Polynomial &p, std::span<const std::size_t> keep) {
    std::vector<bool> kept(p.nvars(), false);
    for (auto k : keep)
        kept.at(k) = true;
    Polynomial r(keep.size());
    for (const auto &[m, c] : p.terms()) {
        for (std::size_t i = 0; i < p.nvars(); ++i)
            if (m[i] && !kept[i])
                throw InvalidArgument("term involves a dropped variable");
        std::vector<std::uint32_t> e(keep.size());
        for (std::size_t k = 0; k < keep.size(); ++k)
            e[k] = m[keep[k]];
        r.add_term(Monomial(std::move(e)), c);
    }
    return r;
}

Polynomial embed_variables(const Polynomial &p, std::size_t nvars,
                           std::span<const std::size_t> positions) {
    if (positions.size() != p.nvars())
        throw DimensionMismatch("embed_variables: position count mismatch");
    Polynomial r(nvars);
    for (const auto &[m, c] : p.terms()) {
        std::vector<std::uint32_t> e(nvars, 0);
        for (std::size_t k = 0; k < positions.size(); ++k)
            e.at(positions[k]) += m[k];
        r.add_term(Monomial(std::move(e)), c);
    }
    return r;
}

} // namespace polydecomp
