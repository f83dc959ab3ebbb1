#pragma once

#include "holonomic/exact.hpp"

#include <vector>

namespace holonomic {

/// Row-major dense integer matrix.
class IntMatrix {
public:
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Integer(0)) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Integer> data_;
};

/// Fraction-free Gauss-Jordan elimination (Bareiss pivots). Afterwards every
/// pivot equals the last pivot value and pivot columns are zero elsewhere.
/// Returns the pivot columns in row order.
std::vector<std::size_t> fraction_free_rref(IntMatrix& m);

/// Integer basis of the right nullspace {x : M x = 0}, one vector per free
/// column. Vectors are primitive and their last nonzero positions strictly
/// increase; the first vector has the smallest last-nonzero position of any
/// nullspace vector.
std::vector<std::vector<Integer>> integer_nullspace(IntMatrix m);

/// Divides by the gcd of the entries and makes the first nonzero entry positive.
void make_primitive(std::vector<Integer>& v);

}  // namespace holonomic
