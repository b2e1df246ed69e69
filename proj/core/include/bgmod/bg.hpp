#pragma once

#include "bgmod/graded.hpp"
#include "bgmod/homsolve.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace bgmod {

/* multiplication J(n1) (x) J(n2) -> J(n1+n2), a (x) b -> a*b */
ModuleMap mu_map(std::uint64_t n1, std::uint64_t n2);

/* J(2n) -> J(n): kills monomials divisible by x0 and shifts every other
 * generator down one index.  A degree-preserving ring map; commutes with
 * every Sq^i. */
ModuleMap halving_map(std::uint64_t n);

/* S J(w) -> J(w+1): s x -> x0 x.  Every odd-weight monomial is divisible by
 * x0, so together with halving_map this is a degreewise short exact sequence
 *   0 -> S J(2n-1) -> J(2n) -> J(n) -> 0. */
ModuleMap x0_mult_map(std::uint64_t w);

/* F(1) window [1, window_hi] -> J(2^k): t^{2^i} -> x_{k-i}^{2^i} for i <= k,
 * zero for i > k */
ModuleMap pk_map(int k, int window_hi);

/* the A-map J(n) -> J(l) sending every basis monomial of J(n)^l to the top
 * class; identity at l = n, zero for l > n */
ModuleMap p_map(std::uint64_t n, std::uint64_t l);

/* column-sparse copy of every Sq^i block of J(n): rows(i, d, c) lists the
 * target indices of Sq^i on the c-th basis monomial of J(n)^d.  Built once
 * per weight and shared; backs the tensor views and the Q construction. */
class SparseSq {
public:
    explicit SparseSq(const WeightModule& w);
    int lo() const { return lo_; }
    int hi() const { return hi_; }
    const std::vector<std::uint32_t>& rows(int i, int d, int c) const;

private:
    int lo_ = 0, hi_ = 0;
    /* [i-1][d - lo][c] */
    std::vector<std::vector<std::vector<std::vector<std::uint32_t>>>> r_;
};

/* process-wide cache, one table per weight */
const SparseSq& sparse_sq(std::uint64_t n);

/* J(n) (x) (t) truncated at total degree cap, kept symbolic: the degree-d
 * basis is a (x) t^{d-|a|} over basis monomials a of J(n) with |a| < d,
 * grouped by |a| ascending.  Steenrod columns come from the sparse J(n)
 * tables and Sq^v t^j = binom(j,v) t^{j+v}; no block is materialized. */
class IdealTensor {
public:
    IdealTensor() = default;
    IdealTensor(std::uint64_t n, int cap);

    std::uint64_t n() const { return n_; }
    int cap() const { return cap_; }
    int lo() const { return lo_; }
    int hi() const { return cap_; }
    int dim(int d) const;
    /* coordinate offset of the |a| = da group inside any degree > da */
    int offset(int da) const;
    /* scatter a J(n)^{da} vector into degree-(da + j) coordinates, j >= 1 */
    F2Vec embed(int da, const F2Vec& w, int j) const;
    std::vector<std::vector<std::uint32_t>> sq_columns(int i, int d) const;
    std::string label(int d, int idx) const;
    SourceView view() const;

private:
    std::uint64_t n_ = 0;
    int cap_ = 0, lo_ = 0;
    const WeightModule* w_ = nullptr;   // cache entries never move
    const SparseSq* sp_ = nullptr;
    std::vector<int> prefix_;           // prefix_[da - w.lo()] = offset of group da
};

/* the A-map (J(n) (x) (t)) <= m -> J(m) pinned by the all-ones functional
 * in degree m; solved degreewise and certified against every Sq^i */
struct QMap {
    std::uint64_t n = 0, m = 0;
    IdealTensor src;
    HomSolveResult sol;

    /* image of w (x) t^j, w a coordinate vector over J(n)^{da} */
    F2Vec apply_elem(int da, const F2Vec& w, int j) const;
    /* image of a degree-d coordinate vector of the tensor */
    F2Vec apply(int d, const F2Vec& v) const;
    /* image of a (x) t^j as a weight-m polynomial */
    Poly value(const Monomial& a, int j) const;
};

QMap q_map(std::uint64_t n, std::uint64_t m);

/* the same map with its source materialized (small inputs, cross-checks) */
ModuleMap q_map_dense(std::uint64_t n, std::uint64_t m);

/* pushout Q(n, m) of q : (J(n) (x) (t)) <= m -> J(m) along the inclusion
 * into J(n) (x) P~_-1; coordinates in degree d are [s^-1 J(n)^{d+1} | J(m)^d].
 * The module is complete: everything above degree m vanishes on the nose. */
struct QModule {
    std::uint64_t n = 0, m = 0;
    ModulePtr module;
    ModulePtr desusp;          // suspend(J(n), -1), shared by the maps below
    ModuleMap inclusion;       // J(m) -> Q
    ModuleMap projection;      // Q -> s^-1 J(n), kills the J(m) block
    ModuleMap desusp_section;  // s^-1 J(n) -> Q, degreewise section, not A-linear

    int desusp_dim(int d) const;              // dim of the s^-1 block
    int index_in_q(const Monomial& x) const;  // coordinate of s^-1 x in degree |x|-1
    F2Vec class_of(const Monomial& x) const;
};

QModule build_q_module(std::uint64_t n, std::uint64_t m);

/* weight-n cycles x0^e x(q)^2 and x0^e x1 x(q-1)^2 for n = 2q + e; their
 * classes form a basis of the Q1 Margolis homology of J(n), n >= 2 */
std::pair<Poly, Poly> q1_representatives(std::uint64_t n);

}  // namespace bgmod
