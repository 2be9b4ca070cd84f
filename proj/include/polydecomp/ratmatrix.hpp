#pragma once

#include "polydecomp/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace polydecomp {

using RatVector = std::vector<Rational>;

/// Dense row-major matrix of exact rationals.
class RatMatrix {
  public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols);
    RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

    static RatMatrix identity(std::size_t n);
    /// Entries given as "a" or "a/b" strings, one inner list per row.
    static RatMatrix from_strings(std::initializer_list<std::initializer_list<const char *>> rows);
    static RatMatrix from_strings(const std::vector<std::vector<std::string>> &rows);
    static RatMatrix from_columns(const std::vector<RatVector> &columns, std::size_t rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }
    bool is_zero() const;

    Rational &operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational &operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    const std::vector<Rational> &entries() const noexcept { return data_; }
    RatVector column(std::size_t j) const;
    RatMatrix transpose() const;
    std::vector<std::vector<std::string>> to_strings() const;

    RatMatrix &operator+=(const RatMatrix &other);
    RatMatrix &operator-=(const RatMatrix &other);
    RatMatrix &operator*=(const Rational &c);

    friend bool operator==(const RatMatrix &, const RatMatrix &) = default;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

RatMatrix operator+(RatMatrix a, const RatMatrix &b);
RatMatrix operator-(RatMatrix a, const RatMatrix &b);
RatMatrix operator*(const RatMatrix &a, const RatMatrix &b);
RatMatrix operator*(RatMatrix a, const Rational &c);
RatMatrix operator*(const Rational &c, RatMatrix a);
RatVector operator*(const RatMatrix &a, const RatVector &v);

/// Block-diagonal matrix with the given square blocks in order.
RatMatrix block_diagonal(const std::vector<RatMatrix> &blocks);

std::string to_string(const RatMatrix &m);

} // namespace polydecomp
