#include "selfcup/mat.hpp"

#include "selfcup/errors.hpp"
#include "selfcup/zmod.hpp"

namespace selfcup {

Mat mat_identity(int n) {
    Mat out(n, n);
    for (int i = 0; i < n; ++i) out.at(i, i) = 1;
    return out;
}

Mat mat_mul(int m, const Mat& x, const Mat& y) {
    if (x.cols != y.rows) throw ValidationError("matrix dimension mismatch in mat_mul");
    Mat out(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            int xv = x.at(i, k);
            if (!xv) continue;
            for (int j = 0; j < y.cols; ++j)
                out.at(i, j) = static_cast<uint8_t>((out.at(i, j) + xv * y.at(k, j)) % m);
        }
    return out;
}

DenseVec mat_vec(int m, const Mat& x, const DenseVec& v) {
    if (static_cast<size_t>(x.cols) != v.size())
        throw ValidationError("matrix/vector dimension mismatch");
    DenseVec out(static_cast<size_t>(x.rows), 0);
    for (int i = 0; i < x.rows; ++i) {
        int acc = 0;
        for (int j = 0; j < x.cols; ++j) acc += x.at(i, j) * v[static_cast<size_t>(j)];
        out[static_cast<size_t>(i)] = static_cast<uint8_t>(acc % m);
    }
    return out;
}

Mat mat_transpose(const Mat& x) {
    Mat out(x.cols, x.rows);
    for (int i = 0; i < x.rows; ++i)
        for (int j = 0; j < x.cols; ++j) out.at(j, i) = x.at(i, j);
    return out;
}

Mat mat_add(int m, const Mat& x, const Mat& y) {
    if (x.rows != y.rows || x.cols != y.cols)
        throw ValidationError("matrix dimension mismatch in mat_add");
    Mat out(x.rows, x.cols);
    for (size_t i = 0; i < x.a.size(); ++i) out.a[i] = zmod::add(m, x.a[i], y.a[i]);
    return out;
}

Mat mat_sub(int m, const Mat& x, const Mat& y) {
    if (x.rows != y.rows || x.cols != y.cols)
        throw ValidationError("matrix dimension mismatch in mat_sub");
    Mat out(x.rows, x.cols);
    for (size_t i = 0; i < x.a.size(); ++i) out.a[i] = zmod::sub(m, x.a[i], y.a[i]);
    return out;
}

Mat mat_kronecker(int m, const Mat& x, const Mat& y) {
    Mat out(x.rows * y.rows, x.cols * y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int j = 0; j < x.cols; ++j) {
            int xv = x.at(i, j);
            if (!xv) continue;
            for (int r = 0; r < y.rows; ++r)
                for (int c = 0; c < y.cols; ++c)
                    out.at(i * y.rows + r, j * y.cols + c) =
                        static_cast<uint8_t>((xv * y.at(r, c)) % m);
        }
    return out;
}

namespace {

std::optional<Mat> inverse_prime(int m, Mat a) {
    const int n = a.rows;
    Mat inv = mat_identity(n);
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (a.at(r, col) % m != 0) {
                piv = r;
                break;
            }
        if (piv < 0) return std::nullopt;
        if (piv != col) {
            for (int c = 0; c < n; ++c) {
                std::swap(a.at(piv, c), a.at(col, c));
                std::swap(inv.at(piv, c), inv.at(col, c));
            }
        }
        uint8_t s = zmod::inv(m, a.at(col, col));
        for (int c = 0; c < n; ++c) {
            a.at(col, c) = zmod::mul(m, a.at(col, c), s);
            inv.at(col, c) = zmod::mul(m, inv.at(col, c), s);
        }
        for (int r = 0; r < n; ++r) {
            if (r == col) continue;
            uint8_t f = a.at(r, col);
            if (!f) continue;
            for (int c = 0; c < n; ++c) {
                a.at(r, c) = zmod::sub(m, a.at(r, c), zmod::mul(m, f, a.at(col, c)));
                inv.at(r, c) = zmod::sub(m, inv.at(r, c), zmod::mul(m, f, inv.at(col, c)));
            }
        }
    }
    return inv;
}

}  // namespace

std::optional<Mat> mat_inverse(int m, const Mat& x) {
    if (x.rows != x.cols) throw ValidationError("mat_inverse needs a square matrix");
    if (m != 4) return inverse_prime(m, x);
    // invert mod 2, then one Hensel step: X1 = X0 (2I - A X0) mod 4
    Mat x2 = x;
    for (uint8_t& v : x2.a) v &= 1;
    std::optional<Mat> inv2 = inverse_prime(2, x2);
    if (!inv2) return std::nullopt;
    Mat prod = mat_mul(4, x, *inv2);
    Mat two_i(x.rows, x.cols);
    for (int i = 0; i < x.rows; ++i) two_i.at(i, i) = 2;
    Mat corr = mat_sub(4, two_i, prod);
    return mat_mul(4, *inv2, corr);
}

}  // namespace selfcup
