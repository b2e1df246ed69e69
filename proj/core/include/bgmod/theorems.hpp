#pragma once

#include "bgmod/bg.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace bgmod {

/* verdict of the arithmetic acyclicity test for Q(n, m) */
struct CriterionVerdict {
    std::uint64_t n = 0, m = 0;
    char parity_case = 'c';  // 'a' both even, 'b' both odd, 'c' mixed
    bool alpha_ok = false;
    bool nu_ok = false;
    bool binom_ok = false;
    bool predicted_acyclic = false;
};

/* Q(n, m) is predicted Q1-acyclic iff alpha2(m) = alpha2(n) + 1,
 * nu2(m) = nu2(n) and binom(m - n - 2, n) is odd; an odd pair delegates to
 * (n-1, m-1), a mixed pair never qualifies, and neither does n <= 1 */
CriterionVerdict main_criterion(std::uint64_t n, std::uint64_t m);

struct OracleResult {
    bool acyclic = false;
    int witness_degree = 0;
    std::string witness;  // a surviving homology class when not acyclic
};

/* builds Q(n, m) and computes its Q1 Margolis homology outright */
OracleResult acyclicity_oracle(std::uint64_t n, std::uint64_t m);

struct ScanRecord {
    std::uint64_t n = 0, m = 0;
    bool predicted = false;
    bool oracle = false;
    bool free_checked = false;  // freeness runs whenever predicted holds
    bool free_ok = false;
    std::vector<int> generator_degrees;
    std::string witness;  // homology class when the oracle says not acyclic
};

struct ScanReport {
    std::uint64_t n_max = 0, m_max = 0;
    std::vector<ScanRecord> records;      // (n, m) lexicographic
    std::vector<std::size_t> mismatches;  // indices into records
    double seconds = 0.0;
};

/* every pair 2 <= n <= n_max, n < m <= m_max: criterion against oracle,
 * plus the A(1) freeness decomposition wherever acyclicity is predicted.
 * A mismatch is a prediction the oracle refutes, or a predicted module
 * that fails to be free. */
ScanReport scan_main_theorem(std::uint64_t n_max, std::uint64_t m_max, int jobs = 1);

/* H(J(2n); Q1) and H(J(2l); Q1) agree degreewise iff alpha and nu match */
bool good_pair(std::uint64_t n, std::uint64_t l);

struct SjkResult {
    std::uint64_t count = 0;     // permutations sigma with k_c >= j_{sigma(c)}
    bool odd = false;
    bool chain = false;          // j_1 <= k_1 < j_2 <= k_2 < ... interleaving
    std::vector<int> s_profile;  // s(c) = #{b : j_b <= k_c}
};

/* permutation count for strictly increasing exponent lists of equal length
 * <= 8; certifies count = prod(s(c) - c + 1), count odd iff the chain
 * interleaves, and an odd count is exactly one */
SjkResult s_jk(const std::vector<int>& J, const std::vector<int>& K);

struct PairMismatch {
    std::uint64_t n = 0, m = 0;
    std::string detail;
};

/* binom(m - n - 1, n) is odd iff m >= 2n and the bit lists of m - 2^top(m)
 * and n interleave; checked for all n < m <= bound with
 * alpha2(m) = alpha2(n) + 1.  Empty result means verified. */
std::vector<PairMismatch> magic_lemma_check(std::uint64_t bound);

/* no mixed-parity p(n, l) induces a Q1 iso; on profile-matching pairs the
 * designated generator class lands in the boundaries.  Empty means verified. */
std::vector<PairMismatch> mixed_parity_vanishing(std::uint64_t bound);

struct KTable {
    int m = 0;
    std::vector<int> ranks;          // Margolis totals, index = weight
    std::vector<int> closed_form;
    std::vector<int> series;         // generating function coefficients
    std::vector<std::string> notes;  // discrepancies; empty means agreement
};

/* Margolis ranks k_{m,n}, n = 0..n_max, against the closed forms and the
 * series 1 + t, (1 + t^2)/(1 - t), (1 + t^4)/((1 - t)(1 - t^2)) */
KTable k_tables(int m, std::uint64_t n_max);

/* degreewise count of the weight-n slice of
 * Z/2[x_0, ..., x_m, x_{m+1}^2, ...] / (x_k^{2^{m+1}}); index = degree */
std::vector<int> quotient_ring_slice(int m, std::uint64_t n);

/* m = l + 2^k with l < 2^k */
std::pair<std::uint64_t, int> split_top_bit(std::uint64_t m);

}  // namespace bgmod
