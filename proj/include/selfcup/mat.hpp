#pragma once

#include <optional>

#include "selfcup/linalg.hpp"

namespace selfcup {

/// Dense row-major matrix over Z/m (the modulus travels with the operation,
/// not the matrix).
struct Mat {
    int rows = 0;
    int cols = 0;
    DenseVec a;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}

    uint8_t& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    uint8_t at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

    bool operator==(const Mat& rhs) const = default;
};

Mat mat_identity(int n);
Mat mat_mul(int m, const Mat& x, const Mat& y);
DenseVec mat_vec(int m, const Mat& x, const DenseVec& v);
Mat mat_transpose(const Mat& x);
Mat mat_add(int m, const Mat& x, const Mat& y);
Mat mat_sub(int m, const Mat& x, const Mat& y);
/// Kronecker product; block (i,j) of the result is x(i,j) * y.
Mat mat_kronecker(int m, const Mat& x, const Mat& y);
/// Inverse over Z/m, or nullopt when singular.  For m = 4 this inverts mod 2
/// and lifts (a matrix is invertible mod 4 iff it is mod 2).
std::optional<Mat> mat_inverse(int m, const Mat& x);

}  // namespace selfcup
