#pragma once

#include <vector>

#include "modcalc/scalar_function.hpp"

namespace modcalc {

/// Dense matrix of exact rational functions.
class FunMatrix {
public:
    FunMatrix() = default;
    FunMatrix(int rows, int cols, int nvars);

    static FunMatrix identity(int n, int nvars);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    ScalarFunction& at(int r, int c) { return data_[(size_t)r * cols_ + c]; }
    const ScalarFunction& at(int r, int c) const { return data_[(size_t)r * cols_ + c]; }

    FunMatrix operator*(const FunMatrix& o) const;
    FunMatrix operator-(const FunMatrix& o) const;

    ScalarFunction determinant() const;
    /// Exact inverse; throws DivisionByZeroFunction when the
    /// determinant is identically zero.
    FunMatrix inverse() const;

    bool is_zero() const;

private:
    int rows_ = 0, cols_ = 0, nvars_ = 0;
    std::vector<ScalarFunction> data_;
};

} // namespace modcalc
