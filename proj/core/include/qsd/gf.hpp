#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace qsd {

/// Dense matrix over a prime field GF(p). Entries are stored reduced,
/// i.e. every entry lies in {0,...,p-1}. Instances are immutable after
/// construction and all operations on them are pure, so matrices can be
/// shared freely across threads.
class GFMatrix {
public:
    /// Zero matrix. Throws std::invalid_argument unless p is prime.
    GFMatrix(int p, std::size_t rows, std::size_t cols);

    /// Matrix from row-major entries (values are reduced mod p).
    GFMatrix(int p, std::size_t rows, std::size_t cols, std::vector<int> entries);

    static GFMatrix identity(int p, std::size_t n);
    static GFMatrix from_rows(int p, std::initializer_list<std::initializer_list<int>> rows);

    int p() const { return p_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    std::uint8_t at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    GFMatrix transposed() const;

    const std::vector<std::uint8_t>& entries() const { return a_; }

    bool operator==(const GFMatrix&) const = default;

private:
    int p_;
    std::size_t rows_, cols_;
    std::vector<std::uint8_t> a_;

    friend class GFMatrixBuilder;
};

/// Mutable staging buffer for assembling a GFMatrix entry by entry.
class GFMatrixBuilder {
public:
    GFMatrixBuilder(int p, std::size_t rows, std::size_t cols) : m_(p, rows, cols) {}
    void set(std::size_t r, std::size_t c, int value);
    GFMatrix build() && { return std::move(m_); }

private:
    GFMatrix m_;
};

/// Vector over GF(p), entries reduced mod p.
struct GFVector {
    int p = 2;
    std::vector<std::uint8_t> e;

    GFVector() = default;  // empty GF(2) vector
    GFVector(int p_, std::size_t len);
    GFVector(int p_, std::vector<int> entries);

    std::size_t len() const { return e.size(); }
    std::size_t weight() const;  // number of nonzero entries
    bool is_zero() const;

    bool operator==(const GFVector&) const = default;
};

struct RrefResult {
    GFMatrix r;                       // reduced row echelon form
    std::vector<std::size_t> pivots;  // pivot column indices, strictly increasing
};

/// Rank over GF(p). Empty matrices have rank 0.
std::size_t rank_mod_p(const GFMatrix& m);

/// Unique reduced row echelon form, leftmost-pivot / stable row order.
RrefResult rref(const GFMatrix& m);

/// Basis of the right nullspace {x : M x = 0}; one basis vector per row.
/// Row count equals cols(m) - rank(m).
GFMatrix nullspace_basis(const GFMatrix& m);

/// M x^T mod p. Zero iff x is orthogonal to every row of m.
/// Throws std::invalid_argument on dimension mismatch.
GFVector syndrome(const GFMatrix& m, const GFVector& x);

/// True iff v lies in the GF(p) row span of m.
bool row_space_contains(const GFMatrix& m, const GFVector& v);

bool is_prime(int p);

}  // namespace qsd
