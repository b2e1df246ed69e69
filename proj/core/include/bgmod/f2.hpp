#pragma once

#include <cstdint>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

namespace bgmod {

/* Raised when a mathematically guaranteed property fails at runtime
 * (a certificate check, an exactness check, ...).  Distinct from argument
 * errors so callers can map it to a dedicated exit code. */
class TheoryError : public std::runtime_error {
public:
    explicit TheoryError(const std::string& what) : std::runtime_error(what) {}
};

/* Bit-packed vector over F2.  Bit i lives in word i/64 at position i%64. */
class F2Vec {
public:
    F2Vec() = default;
    explicit F2Vec(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    std::size_t size() const { return n_; }
    bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool v) {
        std::uint64_t m = std::uint64_t(1) << (i & 63);
        if (v) w_[i >> 6] |= m; else w_[i >> 6] &= ~m;
    }
    void flip(std::size_t i) { w_[i >> 6] ^= std::uint64_t(1) << (i & 63); }

    void operator^=(const F2Vec& o) {
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] ^= o.w_[k];
    }
    bool is_zero() const {
        for (auto w : w_) if (w) return false;
        return true;
    }
    /* index of first set bit, or npos */
    static constexpr std::size_t npos = std::size_t(-1);
    std::size_t first_set() const;
    std::size_t popcount() const;
    std::vector<std::uint32_t> set_bits() const;

    bool operator==(const F2Vec& o) const { return n_ == o.n_ && w_ == o.w_; }

    const std::vector<std::uint64_t>& words() const { return w_; }
    std::vector<std::uint64_t>& words() { return w_; }

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

struct F2Rref;

/* Row-major bit-packed matrix over F2.
 * Convention throughout: a matrix represents a linear map by
 * (rows = target dimension) x (cols = source dimension), acting on column
 * vectors: (M*v)[r] = parity(row_r & v). */
class F2Matrix {
public:
    F2Matrix() = default;
    F2Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), wpr_((cols + 63) / 64), w_(rows * wpr_, 0) {}

    static F2Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const {
        return (w_[r * wpr_ + (c >> 6)] >> (c & 63)) & 1u;
    }
    void set(std::size_t r, std::size_t c, bool v) {
        std::uint64_t m = std::uint64_t(1) << (c & 63);
        if (v) w_[r * wpr_ + (c >> 6)] |= m; else w_[r * wpr_ + (c >> 6)] &= ~m;
    }
    void flip(std::size_t r, std::size_t c) {
        w_[r * wpr_ + (c >> 6)] ^= std::uint64_t(1) << (c & 63);
    }

    void xor_row_into(std::size_t src, std::size_t dst) {
        auto* s = &w_[src * wpr_];
        auto* d = &w_[dst * wpr_];
        for (std::size_t k = 0; k < wpr_; ++k) d[k] ^= s[k];
    }
    /* out ^= row r; out must carry cols() bits */
    void xor_row_onto(std::size_t r, F2Vec& out) const {
        const auto* s = &w_[r * wpr_];
        auto* d = out.words().data();
        for (std::size_t k = 0; k < wpr_; ++k) d[k] ^= s[k];
    }
    void swap_rows(std::size_t a, std::size_t b);

    F2Vec row(std::size_t r) const;
    void set_row(std::size_t r, const F2Vec& v);
    F2Vec column(std::size_t c) const;
    void xor_column_into(std::size_t c, F2Vec& out) const;

    /* matrix * column vector */
    F2Vec apply(const F2Vec& v) const;
    /* this * rhs  (this: m x k, rhs: k x n) */
    F2Matrix multiply(const F2Matrix& rhs) const;
    F2Matrix transposed() const;

    bool is_zero() const;
    bool operator==(const F2Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && w_ == o.w_;
    }

private:
    std::size_t rows_ = 0, cols_ = 0, wpr_ = 0;
    std::vector<std::uint64_t> w_;
    friend struct F2Rref;
    friend F2Rref f2_rref(F2Matrix m);
};

/* Reduced row echelon form together with its pivot columns. */
struct F2Rref {
    F2Matrix mat;
    std::vector<std::uint32_t> pivots;  // pivot column of row r, increasing
};

F2Rref f2_rref(F2Matrix m);
std::size_t f2_rank(const F2Matrix& m);

/* Canonical kernel basis from the RREF: one vector per free column f,
 * with v[f] = 1 and pivot coordinates filled from the RREF column f.
 * Ordered by increasing free column. */
std::vector<F2Vec> f2_kernel_basis(const F2Matrix& m);

struct F2Solution {
    F2Vec particular;         // free coordinates set to zero
    std::vector<F2Vec> kernel;
};

/* Solve m x = b; nullopt when inconsistent. */
std::optional<F2Solution> f2_solve(const F2Matrix& m, const F2Vec& b);

/* Growing subspace kept in reduced echelon form (pivot = first set bit,
 * rows mutually reduced).  Canonical: the stored basis depends only on the
 * spanned subspace, not on insertion order. */
class F2Span {
public:
    explicit F2Span(std::size_t n) : n_(n) {}
    std::size_t dim() const { return rows_.size(); }
    std::size_t ambient() const { return n_; }
    /* residue of v modulo the span */
    F2Vec reduce(F2Vec v) const;
    /* insert v; true when the dimension grew */
    bool insert(F2Vec v);
    bool contains(const F2Vec& v) const { return reduce(v).is_zero(); }
    const std::vector<F2Vec>& basis() const { return rows_; }
    const std::vector<std::size_t>& pivots() const { return piv_; }

private:
    std::size_t n_;
    std::vector<F2Vec> rows_;        // sorted by pivot
    std::vector<std::size_t> piv_;
};

/* ---- 2-adic integer combinatorics ---- */

/* number of ones in the binary expansion */
int alpha2(std::uint64_t n);

/* exponent of 2; undefined at 0 */
int nu2(std::uint64_t n);

/* binomial coefficient mod 2, defined for every integer upper index via
 * the power series (1+x)^j over F2.  For j >= 0 this is Lucas:
 * binom(j,i) = 1 iff i AND j == i.  For j < 0, use
 * (1+x)^j = (1+x)^{j+2^N} * (1+x^{2^N})^{-1} with 2^N > i, so the
 * coefficient of x^i equals the one in (1+x)^{j+2^N}. */
int binom_mod2(std::int64_t j, std::int64_t i);

struct BinaryProfile {
    std::uint64_t n;
    int alpha;                          // alpha2(n)
    int nu;                             // nu2(n); -1 for n = 0
    std::vector<int> exponents;         // increasing, n = sum 2^e
    static BinaryProfile of(std::uint64_t n);
};

}  // namespace bgmod
