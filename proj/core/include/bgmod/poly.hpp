#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace bgmod {

/* Monomial in the polynomial generators x_0, x_1, x_2, ...
 * where x_k sits in degree 1 and carries weight 2^k.  Exponents are stored
 * from x_0 upward with trailing zeros trimmed; the empty vector is the unit.
 *
 * Global order, fixed once for every basis listing and dump:
 * graded lexicographic on (degree, exponent vector read from x_0 upward). */
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<std::uint32_t> exps) : e_(std::move(exps)) { trim(); }
    static Monomial generator(int k, std::uint32_t exp = 1);

    const std::vector<std::uint32_t>& exps() const { return e_; }
    std::uint32_t exp(int k) const {
        return (k >= 0 && std::size_t(k) < e_.size()) ? e_[std::size_t(k)] : 0;
    }
    int top_var() const { return int(e_.size()) - 1; }  // -1 for the unit
    bool is_unit() const { return e_.empty(); }

    std::uint64_t degree() const;
    std::uint64_t weight() const;

    Monomial operator*(const Monomial& o) const;
    /* this / x_k; exponent must be positive */
    Monomial divide_by_gen(int k) const;

    std::strong_ordering operator<=>(const Monomial& o) const;
    bool operator==(const Monomial& o) const { return e_ == o.e_; }

    std::string str() const;                    // "x0^2*x2", unit = "1"
    static Monomial parse(const std::string& s);

private:
    void trim() { while (!e_.empty() && e_.back() == 0) e_.pop_back(); }
    std::vector<std::uint32_t> e_;
};

/* Polynomial over F2: a sorted set of monomials (coefficients are implicit
 * ones; addition is symmetric difference). */
class Poly {
public:
    Poly() = default;
    explicit Poly(Monomial m) : t_{std::move(m)} {}
    static Poly zero() { return Poly(); }

    const std::vector<Monomial>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    std::size_t size() const { return t_.size(); }

    Poly operator+(const Poly& o) const;
    void operator+=(const Poly& o) { *this = *this + o; }
    Poly operator*(const Monomial& m) const;
    Poly operator*(const Poly& o) const;

    bool operator==(const Poly& o) const { return t_ == o.t_; }

    std::string str() const;                    // terms joined " + ", zero = "0"
    static Poly parse(const std::string& s);

    static Poly from_terms(std::vector<Monomial> terms);  // sorts, cancels pairs

private:
    std::vector<Monomial> t_;
};

/* Sq^j on the power x_k^e, in closed form.
 * k >= 1: binom(e,j) * x_k^{e-j} * x_{k-1}^{2j}  (zero when j > e);
 * k == 0: x_0^e for j == 0, zero otherwise. */
Poly sq_on_power(int k, std::uint32_t e, std::uint32_t j);

/* Total Steenrod expansion of a monomial: entry [i] is Sq^i(m).
 * Computed once by the Cartan convolution across the variables;
 * entries beyond the degree are zero and omitted (instability). */
std::vector<Poly> sq_table(const Monomial& m);

/* Sq^i, extended by the Cartan formula; weight preserving, degree +i. */
Poly sq(std::uint32_t i, const Poly& p);

/* Milnor primitive Q_m as a derivation:
 * Q_m x_k = x_{k-m-1}^{2^{m+1}} for k > m, zero otherwise.
 * Degree +2^{m+1}-1, weight preserving. */
Poly qm(int m, const Poly& p);

/* Q_m through the commutator recursion Q_0 = Sq^1,
 * Q_m = Q_{m-1} Sq^{2^m} + Sq^{2^m} Q_{m-1}; equal to qm(). */
Poly qm_via_commutator(int m, const Poly& p);

/* Monomials of weight n (the basis of the weight-n part of Z/2[x_0,x_1,...]),
 * sorted by the global order. */
std::vector<Monomial> weight_monomials(std::uint64_t n);

/* Number of binary partitions, independent of the enumeration:
 * b(0) = 1, b(2k+1) = b(2k), b(2k) = b(2k-1) + b(k). */
std::uint64_t binary_partition_count(std::uint64_t n);

}  // namespace bgmod
