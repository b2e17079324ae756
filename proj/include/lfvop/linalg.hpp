#pragma once

#include <cstddef>
#include <vector>

#include "lfvop/rational.hpp"

namespace lfvop {

using RationalVector = std::vector<Rational>;

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static RationalMatrix identity(std::size_t size);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    /// Appends one row; length must equal cols() (sets cols() when empty).
    void append_row(const RationalVector& row);

    RationalVector row(std::size_t i) const;

    bool operator==(const RationalMatrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

Rational dot(const RationalVector& a, const RationalVector& b);
RationalVector matvec(const RationalMatrix& m, const RationalVector& x);
RationalVector subtract(const RationalVector& a, const RationalVector& b);
bool is_zero(const RationalVector& v);

}  // namespace lfvop
