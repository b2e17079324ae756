#include "lfvop/linalg.hpp"

#include "lfvop/errors.hpp"

namespace lfvop {

RationalMatrix RationalMatrix::identity(std::size_t size) {
    RationalMatrix m(size, size);
    for (std::size_t i = 0; i < size; ++i) m(i, i) = 1;
    return m;
}

void RationalMatrix::append_row(const RationalVector& row) {
    if (rows_ == 0 && cols_ == 0) cols_ = row.size();
    if (row.size() != cols_) {
        throw DimensionMismatch("append_row: expected " + std::to_string(cols_) + " entries, got " +
                                std::to_string(row.size()));
    }
    data_.insert(data_.end(), row.begin(), row.end());
    ++rows_;
}

RationalVector RationalMatrix::row(std::size_t i) const {
    return RationalVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                          data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Rational dot(const RationalVector& a, const RationalVector& b) {
    if (a.size() != b.size()) {
        throw DimensionMismatch("dot: vector lengths " + std::to_string(a.size()) + " and " +
                                std::to_string(b.size()));
    }
    Rational sum(0);
    for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
    return sum;
}

RationalVector matvec(const RationalMatrix& m, const RationalVector& x) {
    if (m.cols() != x.size()) {
        throw DimensionMismatch("matvec: matrix has " + std::to_string(m.cols()) +
                                " columns, vector length " + std::to_string(x.size()));
    }
    RationalVector result(m.rows(), Rational(0));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) result[i] += m(i, j) * x[j];
    }
    return result;
}

RationalVector subtract(const RationalVector& a, const RationalVector& b) {
    if (a.size() != b.size()) {
        throw DimensionMismatch("subtract: vector lengths differ");
    }
    RationalVector result(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) result[i] = a[i] - b[i];
    return result;
}

bool is_zero(const RationalVector& v) {
    for (const Rational& r : v) {
        if (r != 0) return false;
    }
    return true;
}

}  // namespace lfvop
