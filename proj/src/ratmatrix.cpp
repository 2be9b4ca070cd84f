#include "polydecomp/ratmatrix.hpp"

#include "polydecomp/errors.hpp"

#include <sstream>

namespace polydecomp {

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows * cols)
        throw DimensionMismatch("entry count does not match " + std::to_string(rows) + "x" +
                                std::to_string(cols));
}

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::from_strings(std::initializer_list<std::initializer_list<const char *>> rows) {
    std::vector<std::vector<std::string>> v;
    for (const auto &r : rows)
        v.emplace_back(r.begin(), r.end());
    return from_strings(v);
}

RatMatrix RatMatrix::from_strings(const std::vector<std::vector<std::string>> &rows) {
    if (rows.empty())
        return {};
    const std::size_t cols = rows.front().size();
    std::vector<Rational> data;
    data.reserve(rows.size() * cols);
    for (const auto &r : rows) {
        if (r.size() != cols)
            throw DimensionMismatch("ragged matrix rows");
        for (const auto &s : r)
            data.push_back(parse_rational(s));
    }
    return RatMatrix(rows.size(), cols, std::move(data));
}

RatMatrix RatMatrix::from_columns(const std::vector<RatVector> &columns, std::size_t rows) {
    RatMatrix m(rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
        if (columns[j].size() != rows)
            throw DimensionMismatch("column length mismatch");
        for (std::size_t i = 0; i < rows; ++i)
            m(i, j) = columns[j][i];
    }
    return m;
}

bool RatMatrix::is_zero() const {
    for (const auto &x : data_)
        if (sgn(x) != 0)
            return false;
    return true;
}

RatVector RatMatrix::column(std::size_t j) const {
    RatVector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        v[i] = (*this)(i, j);
    return v;
}

RatMatrix RatMatrix::transpose() const {
    RatMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

std::vector<std::vector<std::string>> RatMatrix::to_strings() const {
    std::vector<std::vector<std::string>> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            out[i].push_back((*this)(i, j).get_str());
    return out;
}

RatMatrix &RatMatrix::operator+=(const RatMatrix &other) {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw DimensionMismatch("matrix addition shape mismatch");
    for (std::size_t k = 0; k < data_.size(); ++k)
        data_[k] += other.data_[k];
    return *this;
}

RatMatrix &RatMatrix::operator-=(const RatMatrix &other) {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw DimensionMismatch("matrix subtraction shape mismatch");
    for (std::size_t k = 0; k < data_.size(); ++k)
        data_[k] -= other.data_[k];
    return *this;
}

RatMatrix &RatMatrix::operator*=(const Rational &c) {
    for (auto &x : data_)
        x *= c;
    return *this;
}

RatMatrix operator+(RatMatrix a, const RatMatrix &b) { return a += b; }
RatMatrix operator-(RatMatrix a, const RatMatrix &b) { return a -= b; }
RatMatrix operator*(RatMatrix a, const Rational &c) { return a *= c; }
RatMatrix operator*(const Rational &c, RatMatrix a) { return a *= c; }

RatMatrix operator*(const RatMatrix &a, const RatMatrix &b) {
    if (a.cols() != b.rows())
        throw DimensionMismatch("matrix product shape mismatch");
    RatMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Rational &aik = a(i, k);
            if (sgn(aik) == 0)
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                c(i, j) += aik * b(k, j);
        }
    return c;
}

RatVector operator*(const RatMatrix &a, const RatVector &v) {
    if (a.cols() != v.size())
        throw DimensionMismatch("matrix-vector shape mismatch");
    RatVector out(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k)
            out[i] += a(i, k) * v[k];
    return out;
}

RatMatrix block_diagonal(const std::vector<RatMatrix> &blocks) {
    std::size_t n = 0;
    for (const auto &b : blocks) {
        if (!b.is_square())
            throw DimensionMismatch("block_diagonal expects square blocks");
        n += b.rows();
    }
    RatMatrix m(n, n);
    std::size_t off = 0;
    for (const auto &b : blocks) {
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j)
                m(off + i, off + j) = b(i, j);
        off += b.rows();
    }
    return m;
}

std::string to_string(const RatMatrix &m) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < m.cols(); ++j)
            os << (j ? ", " : "") << m(i, j).get_str();
        os << ']';
    }
    os << ']';
    return os.str();
}

} // namespace polydecomp
