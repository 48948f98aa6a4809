#include "modcalc/matrix.hpp"

#include <cassert>

namespace modcalc {

FunMatrix::FunMatrix(int rows, int cols, int nvars)
    : rows_(rows), cols_(cols), nvars_(nvars),
      data_((size_t)rows * cols, ScalarFunction::zero(nvars)) {}

FunMatrix FunMatrix::identity(int n, int nvars) {
    FunMatrix m(n, n, nvars);
    for (int i = 0; i < n; ++i) m.at(i, i) = ScalarFunction::one(nvars);
    return m;
}

FunMatrix FunMatrix::operator*(const FunMatrix& o) const {
    assert(cols_ == o.rows_);
    FunMatrix out(rows_, o.cols_, nvars_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            if (at(i, k).is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) {
                if (o.at(k, j).is_zero()) continue;
                out.at(i, j) = out.at(i, j) + at(i, k) * o.at(k, j);
            }
        }
    return out;
}

FunMatrix FunMatrix::operator-(const FunMatrix& o) const {
    assert(rows_ == o.rows_ && cols_ == o.cols_);
    FunMatrix out(rows_, cols_, nvars_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            out.at(i, j) = at(i, j) - o.at(i, j);
    return out;
}

bool FunMatrix::is_zero() const {
    for (const auto& f : data_)
        if (!f.is_zero()) return false;
    return true;
}

namespace {

// Fraction-free elimination is unnecessary here: ScalarFunction is a
// field, so plain Gauss-Jordan with exact division stays exact.
struct Elimination {
    FunMatrix work;
    FunMatrix inv;
    ScalarFunction det;
    bool singular = false;

    Elimination(const FunMatrix& m, int nvars) : work(m), inv(FunMatrix::identity(m.rows(), nvars)),
        det(ScalarFunction::one(nvars)) {
        const int n = m.rows();
        for (int col = 0; col < n; ++col) {
            int pivot = -1;
            for (int r = col; r < n; ++r)
                if (!work.at(r, col).is_zero()) { pivot = r; break; }
            if (pivot < 0) {
                singular = true;
                det = ScalarFunction::zero(nvars);
                return;
            }
            if (pivot != col) {
                for (int j = 0; j < n; ++j) {
                    std::swap(work.at(pivot, j), work.at(col, j));
                    std::swap(inv.at(pivot, j), inv.at(col, j));
                }
                det = -det;
            }
            ScalarFunction p = work.at(col, col);
            det = det * p;
            for (int j = 0; j < n; ++j) {
                work.at(col, j) = work.at(col, j) / p;
                inv.at(col, j) = inv.at(col, j) / p;
            }
            for (int r = 0; r < n; ++r) {
                if (r == col) continue;
                ScalarFunction f = work.at(r, col);
                if (f.is_zero()) continue;
                for (int j = 0; j < n; ++j) {
                    work.at(r, j) = work.at(r, j) - f * work.at(col, j);
                    inv.at(r, j) = inv.at(r, j) - f * inv.at(col, j);
                }
            }
        }
    }
};

} // namespace

ScalarFunction FunMatrix::determinant() const {
    assert(rows_ == cols_);
    if (rows_ == 0) return ScalarFunction::one(nvars_);
    return Elimination(*this, nvars_).det;
}

FunMatrix FunMatrix::inverse() const {
    assert(rows_ == cols_);
    if (rows_ == 0) return *this;
    Elimination e(*this, nvars_);
    if (e.singular)
        throw DivisionByZeroFunction("matrix is singular as a rational-function matrix");
    return e.inv;
}

} // namespace modcalc
