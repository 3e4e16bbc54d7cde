#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace selfcup {

/// Dense vector over Z/m; entries reduced mod m.
using DenseVec = std::vector<uint8_t>;
/// Sparse vector: (column, coefficient) pairs, coefficient nonzero mod m.
using SparseRow = std::vector<std::pair<uint32_t, uint8_t>>;

/// Row span of a set of vectors in (Z/m)^n, maintained in Howell form.
/// Over prime m this is the usual reduced row echelon form; over m = 4 the
/// extra torsion rows make coset reduction canonical, which everything
/// downstream (cohomology class enumeration, solvability tests) relies on.
/// Rows over m = 2 are bit-packed.
class SpanForm {
public:
    SpanForm(int m, size_t ncols);

    /// Adds a vector to the span.  Returns true if the span grew.
    bool add(const DenseVec& v);
    bool add_sparse(const SparseRow& row);

    /// Canonical representative of v + span (Howell reduction).  Two vectors
    /// reduce to the same representative iff they lie in the same coset.
    DenseVec reduce(DenseVec v) const;
    bool contains(const DenseVec& v) const;

    /// log_p of the span order, where p is the prime under m (2 for m in
    /// {2,4}, else m itself).
    int log_order() const;
    size_t num_pivots() const;
    size_t ncols() const { return ncols_; }
    int modulus() const { return m_; }

    /// Howell basis rows in increasing pivot-column order.
    std::vector<DenseVec> basis() const;
    /// Leading (pivot) entries matching basis(); each divides m.
    std::vector<int> pivot_values() const;

    /// All span elements, enumerated deterministically.  Throws SizeError if
    /// the span order exceeds `limit`.
    std::vector<DenseVec> enumerate(size_t limit) const;

private:
    struct BitRow {
        std::vector<uint64_t> w;
    };
    void finalize() const;
    bool add_bits(std::vector<uint64_t> row);
    bool add_bytes(DenseVec row);

    int m_;
    size_t ncols_;
    size_t nwords_;  // bit-packed width when m_ == 2
    // pivot column -> row; value rows have pivot entry dividing m
    mutable std::map<uint32_t, std::vector<uint64_t>> bit_rows_;
    mutable std::map<uint32_t, DenseVec> byte_rows_;
    mutable bool dirty_ = false;
};

/// Streaming solver for A x = b over Z/m; equations arrive one at a time as
/// sparse rows.  Solvability and the canonical solution come out of the
/// Howell form of the equation rows.
class LinSystem {
public:
    LinSystem(int m, size_t ncols);

    void add_equation(const SparseRow& coeffs, uint8_t rhs);
    void add_equation_dense(const DenseVec& coeffs, uint8_t rhs);

    /// Canonical solution, or nullopt if the system is inconsistent.
    std::optional<DenseVec> solve() const;

private:
    size_t ncols_;
    SpanForm rows_;
};

/// Streaming kernel computation: feed constraint functionals r (meaning
/// r . x = 0), then read off a generating set of the solution subgroup.
class KernelBuilder {
public:
    KernelBuilder(int m, size_t ncols);

    void add_constraint(const SparseRow& row) { constraints_.add_sparse(row); }
    void add_constraint_dense(const DenseVec& row) { constraints_.add(row); }

    /// Howell-form generating rows of {x : r . x = 0 for all constraints}.
    std::vector<DenseVec> kernel_basis() const;
    /// The kernel as a SpanForm (for membership and coset work).
    SpanForm kernel_span() const;

private:
    int m_;
    size_t ncols_;
    SpanForm constraints_;
};

}  // namespace selfcup
