#include "bgmod/f2.hpp"

#include <algorithm>
#include <bit>

namespace bgmod {

std::size_t F2Vec::first_set() const {
    for (std::size_t k = 0; k < w_.size(); ++k)
        if (w_[k]) return k * 64 + std::countr_zero(w_[k]);
    return npos;
}

std::size_t F2Vec::popcount() const {
    std::size_t c = 0;
    for (auto w : w_) c += std::popcount(w);
    return c;
}

std::vector<std::uint32_t> F2Vec::set_bits() const {
    std::vector<std::uint32_t> out;
    for (std::size_t k = 0; k < w_.size(); ++k) {
        std::uint64_t w = w_[k];
        while (w) {
            out.push_back(std::uint32_t(k * 64 + std::countr_zero(w)));
            w &= w - 1;
        }
    }
    return out;
}

F2Matrix F2Matrix::identity(std::size_t n) {
    F2Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

void F2Matrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t k = 0; k < wpr_; ++k)
        std::swap(w_[a * wpr_ + k], w_[b * wpr_ + k]);
}

F2Vec F2Matrix::row(std::size_t r) const {
    F2Vec v(cols_);
    std::copy(w_.begin() + r * wpr_, w_.begin() + (r + 1) * wpr_, v.words().begin());
    return v;
}

void F2Matrix::set_row(std::size_t r, const F2Vec& v) {
    std::copy(v.words().begin(), v.words().end(), w_.begin() + r * wpr_);
}

F2Vec F2Matrix::column(std::size_t c) const {
    F2Vec v(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        if (get(r, c)) v.set(r, true);
    return v;
}

void F2Matrix::xor_column_into(std::size_t c, F2Vec& out) const {
    for (std::size_t r = 0; r < rows_; ++r)
        if (get(r, c)) out.flip(r);
}

F2Vec F2Matrix::apply(const F2Vec& v) const {
    F2Vec out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        std::uint64_t acc = 0;
        const auto* rw = &w_[r * wpr_];
        for (std::size_t k = 0; k < wpr_; ++k) acc ^= rw[k] & v.words()[k];
        if (std::popcount(acc) & 1) out.set(r, true);
    }
    return out;
}

F2Matrix F2Matrix::multiply(const F2Matrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("F2Matrix::multiply: shape mismatch");
    F2Matrix out(rows_, rhs.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        auto* dst = &out.w_[r * out.wpr_];
        for (std::size_t k = 0; k < wpr_; ++k) {
            std::uint64_t w = w_[r * wpr_ + k];
            while (w) {
                std::size_t j = k * 64 + std::countr_zero(w);
                w &= w - 1;
                const auto* src = &rhs.w_[j * rhs.wpr_];
                for (std::size_t t = 0; t < rhs.wpr_; ++t) dst[t] ^= src[t];
            }
        }
    }
    return out;
}

F2Matrix F2Matrix::transposed() const {
    F2Matrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < wpr_; ++k) {
            std::uint64_t w = w_[r * wpr_ + k];
            while (w) {
                std::size_t c = k * 64 + std::countr_zero(w);
                w &= w - 1;
                out.set(c, r, true);
            }
        }
    return out;
}

bool F2Matrix::is_zero() const {
    for (auto w : w_) if (w) return false;
    return true;
}

F2Rref f2_rref(F2Matrix m) {
    F2Rref out;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && !m.get(p, c)) ++p;
        if (p == m.rows()) continue;
        m.swap_rows(r, p);
        for (std::size_t i = 0; i < m.rows(); ++i)
            if (i != r && m.get(i, c)) m.xor_row_into(r, i);
        out.pivots.push_back(std::uint32_t(c));
        ++r;
    }
    out.mat = std::move(m);
    return out;
}

std::size_t f2_rank(const F2Matrix& m) { return f2_rref(m).pivots.size(); }

std::vector<F2Vec> f2_kernel_basis(const F2Matrix& m) {
    F2Rref rr = f2_rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : rr.pivots) is_pivot[p] = true;
    std::vector<F2Vec> out;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        F2Vec v(m.cols());
        v.set(f, true);
        for (std::size_t r = 0; r < rr.pivots.size(); ++r)
            if (rr.mat.get(r, f)) v.set(rr.pivots[r], true);
        out.push_back(std::move(v));
    }
    return out;
}

std::optional<F2Solution> f2_solve(const F2Matrix& m, const F2Vec& b) {
    if (b.size() != m.rows()) throw std::invalid_argument("f2_solve: shape mismatch");
    F2Matrix aug(m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (m.get(r, c)) aug.set(r, c, true);
        if (b.get(r)) aug.set(r, m.cols(), true);
    }
    F2Rref rr = f2_rref(std::move(aug));
    if (!rr.pivots.empty() && rr.pivots.back() == m.cols()) return std::nullopt;
    F2Solution sol;
    sol.particular = F2Vec(m.cols());
    for (std::size_t r = 0; r < rr.pivots.size(); ++r)
        if (rr.mat.get(r, m.cols())) sol.particular.set(rr.pivots[r], true);
    sol.kernel = f2_kernel_basis(m);
    return sol;
}

F2Vec F2Span::reduce(F2Vec v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i)
        if (v.get(piv_[i])) v ^= rows_[i];
    return v;
}

bool F2Span::insert(F2Vec v) {
    v = reduce(std::move(v));
    std::size_t p = v.first_set();
    if (p == F2Vec::npos) return false;
    /* keep existing rows reduced against the new pivot */
    for (std::size_t i = 0; i < rows_.size(); ++i)
        if (rows_[i].get(p)) rows_[i] ^= v;
    auto it = std::lower_bound(piv_.begin(), piv_.end(), p);
    std::size_t at = std::size_t(it - piv_.begin());
    piv_.insert(it, p);
    rows_.insert(rows_.begin() + at, std::move(v));
    return true;
}

int alpha2(std::uint64_t n) { return std::popcount(n); }

int nu2(std::uint64_t n) {
    if (n == 0) throw std::domain_error("nu2: undefined at 0");
    return std::countr_zero(n);
}

int binom_mod2(std::int64_t j, std::int64_t i) {
    if (i < 0) throw std::domain_error("binom_mod2: lower index must be >= 0");
    if (j >= 0) return ((i & j) == i) ? 1 : 0;
    /* shift by a single power 2^N > max(i, -j); then the upper index is
     * >= 0 and small-degree coefficients are unchanged */
    int N = 1;
    while ((std::int64_t(1) << N) <= i || (std::int64_t(1) << N) < -j) ++N;
    std::int64_t jj = j + (std::int64_t(1) << N);
    return ((i & jj) == i) ? 1 : 0;
}

BinaryProfile BinaryProfile::of(std::uint64_t n) {
    BinaryProfile p;
    p.n = n;
    p.alpha = alpha2(n);
    p.nu = n ? nu2(n) : -1;
    for (int e = 0; n >> e; ++e)
        if ((n >> e) & 1) p.exponents.push_back(e);
    return p;
}

}  // namespace bgmod
