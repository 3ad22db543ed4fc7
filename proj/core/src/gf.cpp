#include "qsd/gf.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace qsd {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; d++)
        if (p % d == 0) return false;
    return true;
}

namespace {

int reduce(long long v, int p) {
    long long r = v % p;
    return int(r < 0 ? r + p : r);
}

// multiplicative inverse of a in GF(p), a != 0
int inv_mod(int a, int p) {
    // extended euclid
    int t = 0, newt = 1, r = p, newr = a;
    while (newr != 0) {
        int q = r / newr;
        t -= q * newt;
        std::swap(t, newt);
        r -= q * newr;
        std::swap(r, newr);
    }
    return t < 0 ? t + p : t;
}

void check_prime(int p) {
    if (!is_prime(p))
        throw std::invalid_argument("GF modulus must be prime, got " + std::to_string(p));
}

}  // namespace

GFMatrix::GFMatrix(int p, std::size_t rows, std::size_t cols)
    : p_(p), rows_(rows), cols_(cols), a_(rows * cols, 0) {
    check_prime(p);
}

GFMatrix::GFMatrix(int p, std::size_t rows, std::size_t cols, std::vector<int> entries)
    : p_(p), rows_(rows), cols_(cols) {
    check_prime(p);
    if (entries.size() != rows * cols)
        throw std::invalid_argument("entry count does not match dimensions");
    a_.resize(entries.size());
    for (std::size_t i = 0; i < entries.size(); i++)
        a_[i] = std::uint8_t(reduce(entries[i], p));
}

GFMatrix GFMatrix::identity(int p, std::size_t n) {
    GFMatrix m(p, n, n);
    for (std::size_t i = 0; i < n; i++) m.a_[i * n + i] = 1;
    return m;
}

GFMatrix GFMatrix::from_rows(int p, std::initializer_list<std::initializer_list<int>> rows) {
    std::size_t r = rows.size();
    std::size_t c = r ? rows.begin()->size() : 0;
    std::vector<int> flat;
    flat.reserve(r * c);
    for (const auto& row : rows) {
        if (row.size() != c) throw std::invalid_argument("ragged rows");
        flat.insert(flat.end(), row.begin(), row.end());
    }
    return GFMatrix(p, r, c, std::move(flat));
}

GFMatrix GFMatrix::transposed() const {
    GFMatrix t(p_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; i++)
        for (std::size_t j = 0; j < cols_; j++)
            t.a_[j * rows_ + i] = a_[i * cols_ + j];
    return t;
}

void GFMatrixBuilder::set(std::size_t r, std::size_t c, int value) {
    if (r >= m_.rows_ || c >= m_.cols_) throw std::out_of_range("GFMatrixBuilder::set");
    m_.a_[r * m_.cols_ + c] = std::uint8_t(reduce(value, m_.p_));
}

GFVector::GFVector(int p_, std::size_t len) : p(p_), e(len, 0) { check_prime(p_); }

GFVector::GFVector(int p_, std::vector<int> entries) : p(p_) {
    check_prime(p_);
    e.resize(entries.size());
    for (std::size_t i = 0; i < entries.size(); i++)
        e[i] = std::uint8_t(reduce(entries[i], p_));
}

std::size_t GFVector::weight() const {
    std::size_t w = 0;
    for (auto v : e) w += (v != 0);
    return w;
}

bool GFVector::is_zero() const { return weight() == 0; }

RrefResult rref(const GFMatrix& m) {
    const int p = m.p();
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::uint8_t> a = m.entries();
    std::vector<std::size_t> pivots;

    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; c++) {
        // leftmost nonzero column, first eligible row (stable order)
        std::size_t piv = rows;
        for (std::size_t i = r; i < rows; i++)
            if (a[i * cols + c] != 0) { piv = i; break; }
        if (piv == rows) continue;
        if (piv != r)
            for (std::size_t j = 0; j < cols; j++)
                std::swap(a[r * cols + j], a[piv * cols + j]);
        int iv = inv_mod(a[r * cols + c], p);
        if (iv != 1)
            for (std::size_t j = 0; j < cols; j++)
                a[r * cols + j] = std::uint8_t((a[r * cols + j] * iv) % p);
        for (std::size_t i = 0; i < rows; i++) {
            if (i == r) continue;
            int f = a[i * cols + c];
            if (f == 0) continue;
            for (std::size_t j = 0; j < cols; j++) {
                int v = a[i * cols + j] - f * a[r * cols + j];
                a[i * cols + j] = std::uint8_t(((v % p) + p) % p);
            }
        }
        pivots.push_back(c);
        r++;
    }
    std::vector<int> out(a.begin(), a.end());
    return RrefResult{GFMatrix(p, rows, cols, std::move(out)), std::move(pivots)};
}

std::size_t rank_mod_p(const GFMatrix& m) { return rref(m).pivots.size(); }

GFMatrix nullspace_basis(const GFMatrix& m) {
    auto [r, pivots] = rref(m);
    const int p = m.p();
    const std::size_t cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;

    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < cols; c++)
        if (!is_pivot[c]) free_cols.push_back(c);

    GFMatrixBuilder basis(p, free_cols.size(), cols);
    for (std::size_t k = 0; k < free_cols.size(); k++) {
        std::size_t f = free_cols[k];
        basis.set(k, f, 1);
        // pivot variable i solves row i: x_{pivot_i} = -R[i][f] * x_f
        for (std::size_t i = 0; i < pivots.size(); i++) {
            int coeff = r.at(i, f);
            if (coeff != 0) basis.set(k, pivots[i], p - coeff);
        }
    }
    return std::move(basis).build();
}

GFVector syndrome(const GFMatrix& m, const GFVector& x) {
    if (x.len() != m.cols() || x.p != m.p())
        throw std::invalid_argument("syndrome: dimension or field mismatch");
    const int p = m.p();
    GFVector s(p, m.rows());
    for (std::size_t i = 0; i < m.rows(); i++) {
        long long acc = 0;
        for (std::size_t j = 0; j < m.cols(); j++)
            acc += m.at(i, j) * x.e[j];
        s.e[i] = std::uint8_t(acc % p);
    }
    return s;
}

bool row_space_contains(const GFMatrix& m, const GFVector& v) {
    if (v.len() != m.cols() || v.p != m.p())
        throw std::invalid_argument("row_space_contains: dimension or field mismatch");
    // reduce v against rref(m): v in span iff residue is zero
    auto [r, pivots] = rref(m);
    const int p = m.p();
    std::vector<int> w(v.e.begin(), v.e.end());
    for (std::size_t i = 0; i < pivots.size(); i++) {
        int f = w[pivots[i]];
        if (f == 0) continue;
        for (std::size_t j = 0; j < m.cols(); j++)
            w[j] = ((w[j] - f * r.at(i, j)) % p + p) % p;
    }
    return std::all_of(w.begin(), w.end(), [](int x) { return x == 0; });
}

}  // namespace qsd
