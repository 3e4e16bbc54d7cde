#include "selfcup/linalg.hpp"

#include <algorithm>
#include <numeric>

#include "selfcup/errors.hpp"
#include "selfcup/zmod.hpp"

namespace selfcup {

namespace {

// extended gcd: returns g and x, y with x*a + y*b = g
long long egcd(long long a, long long b, long long& x, long long& y) {
    if (b == 0) {
        x = 1;
        y = 0;
        return a;
    }
    long long x1, y1;
    long long g = egcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

size_t first_nonzero(const DenseVec& v) {
    for (size_t i = 0; i < v.size(); ++i)
        if (v[i]) return i;
    return v.size();
}

size_t first_set_bit(const std::vector<uint64_t>& w, size_t ncols) {
    for (size_t i = 0; i < w.size(); ++i) {
        if (w[i]) {
            size_t j = i * 64 + static_cast<size_t>(__builtin_ctzll(w[i]));
            return j < ncols ? j : ncols;
        }
    }
    return ncols;
}

inline bool get_bit(const std::vector<uint64_t>& w, size_t j) {
    return (w[j >> 6] >> (j & 63)) & 1u;
}

inline void set_bit(std::vector<uint64_t>& w, size_t j, bool v) {
    if (v)
        w[j >> 6] |= uint64_t(1) << (j & 63);
    else
        w[j >> 6] &= ~(uint64_t(1) << (j & 63));
}

inline void xor_rows(std::vector<uint64_t>& dst, const std::vector<uint64_t>& src) {
    for (size_t i = 0; i < dst.size(); ++i) dst[i] ^= src[i];
}

// dst += c * src (mod m)
void axpy(int m, DenseVec& dst, const DenseVec& src, int c) {
    c %= m;
    if (c < 0) c += m;
    if (c == 0) return;
    for (size_t i = 0; i < dst.size(); ++i)
        dst[i] = static_cast<uint8_t>((dst[i] + c * src[i]) % m);
}

DenseVec scaled(int m, const DenseVec& v, int c) {
    DenseVec out(v.size());
    c %= m;
    if (c < 0) c += m;
    for (size_t i = 0; i < v.size(); ++i) out[i] = static_cast<uint8_t>((c * v[i]) % m);
    return out;
}

}  // namespace

SpanForm::SpanForm(int m, size_t ncols) : m_(m), ncols_(ncols), nwords_((ncols + 63) / 64) {
    zmod::check_modulus(m);
}

bool SpanForm::add_bits(std::vector<uint64_t> row) {
    for (;;) {
        size_t j = first_set_bit(row, ncols_);
        if (j == ncols_) return false;
        auto it = bit_rows_.find(static_cast<uint32_t>(j));
        if (it == bit_rows_.end()) {
            bit_rows_.emplace(static_cast<uint32_t>(j), std::move(row));
            dirty_ = true;
            return true;
        }
        xor_rows(row, it->second);
    }
}

bool SpanForm::add_bytes(DenseVec row) {
    bool grew = false;
    std::vector<DenseVec> work;
    bool tracking = true;  // only the caller's row counts toward growth
    for (;;) {
        for (;;) {
            size_t j = first_nonzero(row);
            if (j == row.size()) break;
            auto it = byte_rows_.find(static_cast<uint32_t>(j));
            if (it == byte_rows_.end()) {
                // install: scale by a unit so the leading entry is gcd(lead, m)
                int v = row[j];
                int g = std::gcd(v, m_);
                if (v != g) {
                    for (int u = 1; u < m_; ++u) {
                        if (zmod::is_unit(m_, static_cast<uint8_t>(u)) && (u * v) % m_ == g) {
                            row = scaled(m_, row, u);
                            break;
                        }
                    }
                }
                if (g != 1) work.push_back(scaled(m_, row, m_ / g));
                byte_rows_.emplace(static_cast<uint32_t>(j), std::move(row));
                dirty_ = true;
                if (tracking) grew = true;
                break;
            }
            DenseVec& piv = it->second;
            int d = piv[j];
            int a = row[j];
            if (a % d == 0) {
                axpy(m_, row, piv, m_ - a / d);
            } else {
                // leading entries must be combined down to their gcd (m = 4 only)
                long long x, y;
                long long g = egcd(a, d, x, y);
                DenseVec comb = scaled(m_, row, static_cast<int>(x % m_));
                axpy(m_, comb, piv, static_cast<int>(y % m_));
                DenseVec displaced = piv;
                axpy(m_, displaced, comb, m_ - d / static_cast<int>(g));
                axpy(m_, row, comb, m_ - a / static_cast<int>(g));
                if (g != 1) work.push_back(scaled(m_, comb, m_ / static_cast<int>(g)));
                it->second = std::move(comb);
                work.push_back(std::move(displaced));
                dirty_ = true;
                if (tracking) grew = true;
            }
        }
        tracking = false;
        if (work.empty()) break;
        row = std::move(work.back());
        work.pop_back();
    }
    return grew;
}

bool SpanForm::add(const DenseVec& v) {
    if (v.size() != ncols_) throw ValidationError("vector length mismatch in SpanForm::add");
    if (m_ == 2) {
        std::vector<uint64_t> row(nwords_, 0);
        for (size_t i = 0; i < v.size(); ++i)
            if (v[i] & 1) set_bit(row, i, true);
        return add_bits(std::move(row));
    }
    return add_bytes(v);
}

bool SpanForm::add_sparse(const SparseRow& row) {
    if (m_ == 2) {
        std::vector<uint64_t> r(nwords_, 0);
        for (auto [col, c] : row)
            if (c & 1) set_bit(r, col, !get_bit(r, col));
        return add_bits(std::move(r));
    }
    DenseVec r(ncols_, 0);
    for (auto [col, c] : row) r[col] = zmod::add(m_, r[col], static_cast<uint8_t>(c % m_));
    return add_bytes(std::move(r));
}

void SpanForm::finalize() const {
    if (!dirty_) return;
    if (m_ == 2) {
        for (auto it = bit_rows_.begin(); it != bit_rows_.end(); ++it) {
            auto jt = it;
            for (++jt; jt != bit_rows_.end(); ++jt)
                if (get_bit(it->second, jt->first)) xor_rows(it->second, jt->second);
        }
    } else {
        for (auto it = byte_rows_.begin(); it != byte_rows_.end(); ++it) {
            auto jt = it;
            for (++jt; jt != byte_rows_.end(); ++jt) {
                int d = jt->second[jt->first];
                int q = it->second[jt->first] / d;
                if (q) axpy(m_, it->second, jt->second, m_ - q);
            }
        }
    }
    dirty_ = false;
}

DenseVec SpanForm::reduce(DenseVec v) const {
    if (v.size() != ncols_) throw ValidationError("vector length mismatch in SpanForm::reduce");
    finalize();
    if (m_ == 2) {
        std::vector<uint64_t> row(nwords_, 0);
        for (size_t i = 0; i < v.size(); ++i)
            if (v[i] & 1) set_bit(row, i, true);
        for (const auto& [col, piv] : bit_rows_)
            if (get_bit(row, col)) xor_rows(row, piv);
        DenseVec out(ncols_, 0);
        for (size_t i = 0; i < ncols_; ++i) out[i] = get_bit(row, i) ? 1 : 0;
        return out;
    }
    for (const auto& [col, piv] : byte_rows_) {
        int d = piv[col];
        int q = v[col] / d;
        if (q) axpy(m_, v, piv, m_ - q);
    }
    return v;
}

bool SpanForm::contains(const DenseVec& v) const {
    DenseVec r = reduce(v);
    return first_nonzero(r) == r.size();
}

int SpanForm::log_order() const {
    int total = 0;
    if (m_ == 2) return static_cast<int>(bit_rows_.size());
    if (m_ != 4) return static_cast<int>(byte_rows_.size());
    for (const auto& [col, row] : byte_rows_) total += row[col] == 1 ? 2 : 1;
    return total;
}

size_t SpanForm::num_pivots() const {
    return m_ == 2 ? bit_rows_.size() : byte_rows_.size();
}

std::vector<DenseVec> SpanForm::basis() const {
    finalize();
    std::vector<DenseVec> out;
    if (m_ == 2) {
        for (const auto& [col, row] : bit_rows_) {
            DenseVec v(ncols_, 0);
            for (size_t i = 0; i < ncols_; ++i) v[i] = get_bit(row, i) ? 1 : 0;
            out.push_back(std::move(v));
        }
    } else {
        for (const auto& [col, row] : byte_rows_) out.push_back(row);
    }
    return out;
}

std::vector<int> SpanForm::pivot_values() const {
    std::vector<int> out;
    if (m_ == 2) {
        out.assign(bit_rows_.size(), 1);
    } else {
        for (const auto& [col, row] : byte_rows_) out.push_back(row[col]);
    }
    return out;
}

std::vector<DenseVec> SpanForm::enumerate(size_t limit) const {
    std::vector<DenseVec> rows = basis();
    std::vector<int> piv = pivot_values();
    size_t count = 1;
    std::vector<int> radix(rows.size());
    for (size_t i = 0; i < rows.size(); ++i) {
        radix[i] = m_ / piv[i];
        count *= static_cast<size_t>(radix[i]);
        if (count > limit) throw SizeError("span too large to enumerate");
    }
    std::vector<DenseVec> out;
    out.reserve(count);
    std::vector<int> digits(rows.size(), 0);
    for (size_t n = 0; n < count; ++n) {
        DenseVec v(ncols_, 0);
        for (size_t i = 0; i < rows.size(); ++i)
            if (digits[i]) axpy(m_, v, rows[i], digits[i]);
        out.push_back(std::move(v));
        for (size_t i = 0; i < rows.size(); ++i) {
            if (++digits[i] < radix[i]) break;
            digits[i] = 0;
        }
    }
    return out;
}

LinSystem::LinSystem(int m, size_t ncols) : ncols_(ncols), rows_(m, ncols + 1) {}

void LinSystem::add_equation(const SparseRow& coeffs, uint8_t rhs) {
    SparseRow row = coeffs;
    if (rhs) row.emplace_back(static_cast<uint32_t>(ncols_), rhs);
    rows_.add_sparse(row);
}

void LinSystem::add_equation_dense(const DenseVec& coeffs, uint8_t rhs) {
    DenseVec row = coeffs;
    row.push_back(rhs);
    rows_.add(row);
}

std::optional<DenseVec> LinSystem::solve() const {
    const int m = rows_.modulus();
    std::vector<DenseVec> basis = rows_.basis();
    DenseVec x(ncols_, 0);
    for (auto it = basis.rbegin(); it != basis.rend(); ++it) {
        const DenseVec& row = *it;
        size_t j = first_nonzero(row);
        if (j == ncols_) return std::nullopt;  // equation 0 = r with r != 0
        int d = row[j];
        int acc = row[ncols_];
        for (size_t k = j + 1; k < ncols_; ++k) acc = (acc - row[k] * x[k]) % m;
        acc = ((acc % m) + m) % m;
        if (acc % d != 0) return std::nullopt;
        x[j] = static_cast<uint8_t>(acc / d);
    }
    return x;
}

KernelBuilder::KernelBuilder(int m, size_t ncols) : m_(m), ncols_(ncols), constraints_(m, ncols) {}

std::vector<DenseVec> KernelBuilder::kernel_basis() const {
    // x is in the kernel iff x is orthogonal to the constraint span E.
    // Augment E^T with the identity and read off rows whose E-part vanished;
    // the Howell property guarantees these generate the whole kernel.
    std::vector<DenseVec> e = constraints_.basis();
    const size_t k = e.size();
    SpanForm aug(m_, k + ncols_);
    for (size_t i = 0; i < ncols_; ++i) {
        DenseVec row(k + ncols_, 0);
        for (size_t r = 0; r < k; ++r) row[r] = e[r][i];
        row[k + i] = 1;
        aug.add(row);
    }
    std::vector<DenseVec> out;
    for (const DenseVec& row : aug.basis()) {
        if (first_nonzero(row) < k) continue;
        out.emplace_back(row.begin() + static_cast<long>(k), row.end());
    }
    return out;
}

SpanForm KernelBuilder::kernel_span() const {
    SpanForm span(m_, ncols_);
    for (const DenseVec& v : kernel_basis()) span.add(v);
    return span;
}

}  // namespace selfcup
