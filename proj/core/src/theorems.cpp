#include "bgmod/theorems.hpp"

#include "bgmod/a1.hpp"
#include "bgmod/margolis.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <exception>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace bgmod {

CriterionVerdict main_criterion(std::uint64_t n, std::uint64_t m) {
    if (m <= n) throw std::invalid_argument("main_criterion: need n < m");
    CriterionVerdict v;
    v.n = n;
    v.m = m;
    bool ne = n % 2 == 0, me = m % 2 == 0;
    v.parity_case = (ne == me) ? (ne ? 'a' : 'b') : 'c';
    if (v.parity_case == 'c' || n <= 1) return v;
    std::uint64_t en = n, em = m;
    if (v.parity_case == 'b') { --en; --em; }
    v.alpha_ok = alpha2(em) == alpha2(en) + 1;
    v.nu_ok = nu2(em) == nu2(en);
    v.binom_ok = binom_mod2(std::int64_t(em - en) - 2, std::int64_t(en)) == 1;
    v.predicted_acyclic = v.alpha_ok && v.nu_ok && v.binom_ok;
    return v;
}

OracleResult acyclicity_oracle(std::uint64_t n, std::uint64_t m) {
    QModule q = build_q_module(n, m);
    MargolisReport rep = margolis(*q.module, 1);
    OracleResult r;
    r.acyclic = rep.acyclic;
    if (!rep.acyclic) {
        for (const auto& md : rep.degrees) {
            if (md.reps.empty()) continue;
            r.witness_degree = md.d;
            r.witness = label_combo(*q.module, md.d, md.reps.front());
            break;
        }
    }
    return r;
}

ScanReport scan_main_theorem(std::uint64_t n_max, std::uint64_t m_max, int jobs) {
    if (n_max < 2 || m_max <= n_max)
        throw std::invalid_argument("scan: need 2 <= n_max < m_max");
    auto t0 = std::chrono::steady_clock::now();

    std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
    for (std::uint64_t n = 2; n <= n_max; ++n)
        for (std::uint64_t m = n + 1; m <= m_max; ++m) pairs.emplace_back(n, m);

    /* warm the shared caches so workers only ever read them */
    for (std::uint64_t w = 1; w <= m_max; ++w) {
        weight_module(w);
        sparse_sq(w);
    }

    ScanReport rep;
    rep.n_max = n_max;
    rep.m_max = m_max;
    rep.records.resize(pairs.size());

    std::atomic<std::size_t> next{0};
    std::mutex err_mu;
    std::exception_ptr err;
    auto work = [&]() {
        try {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= pairs.size()) return;
                {
                    std::lock_guard<std::mutex> lock(err_mu);
                    if (err) return;
                }
                auto [n, m] = pairs[i];
                ScanRecord& r = rep.records[i];
                r.n = n;
                r.m = m;
                r.predicted = main_criterion(n, m).predicted_acyclic;
                QModule q = build_q_module(n, m);
                MargolisReport h = margolis(*q.module, 1);
                r.oracle = h.acyclic;
                if (!h.acyclic) {
                    for (const auto& md : h.degrees) {
                        if (md.reps.empty()) continue;
                        r.witness = label_combo(*q.module, md.d, md.reps.front());
                        break;
                    }
                }
                if (r.predicted) {
                    A1Decomposition dec = a1_free_decomposition(*q.module);
                    r.free_checked = true;
                    r.free_ok = dec.free;
                    if (dec.free)
                        for (const auto& g : dec.generators)
                            r.generator_degrees.push_back(g.degree);
                    else
                        r.witness = dec.reason;
                }
            }
        } catch (...) {
            std::lock_guard<std::mutex> lock(err_mu);
            if (!err) err = std::current_exception();
        }
    };

    if (jobs <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }
    if (err) std::rethrow_exception(err);

    for (std::size_t i = 0; i < rep.records.size(); ++i) {
        const auto& r = rep.records[i];
        if (r.predicted != r.oracle || (r.free_checked && !r.free_ok))
            rep.mismatches.push_back(i);
    }
    rep.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

bool good_pair(std::uint64_t n, std::uint64_t l) {
    if (n == 0 || l == 0) return n == l;
    return alpha2(n) == alpha2(l) && nu2(n) == nu2(l);
}

namespace {

std::vector<int> bit_list(std::uint64_t v) {
    std::vector<int> out;
    for (int k = 0; v >> k; ++k)
        if ((v >> k) & 1) out.push_back(k);
    return out;
}

/* j_1 <= k_1 < j_2 <= k_2 < ... over two increasing lists of equal length */
bool interleaves(const std::vector<int>& J, const std::vector<int>& K) {
    for (std::size_t c = 0; c < J.size(); ++c) {
        if (J[c] > K[c]) return false;
        if (c > 0 && J[c] <= K[c - 1]) return false;
    }
    return true;
}

}  // namespace

SjkResult s_jk(const std::vector<int>& J, const std::vector<int>& K) {
    if (J.size() != K.size()) throw std::invalid_argument("s_jk: lists differ in length");
    if (J.size() > 8) throw std::invalid_argument("s_jk: more than 8 exponents");
    for (std::size_t c = 1; c < J.size(); ++c)
        if (J[c] <= J[c - 1] || K[c] <= K[c - 1])
            throw std::invalid_argument("s_jk: lists must increase strictly");

    std::size_t d = J.size();
    SjkResult r;
    std::vector<int> perm(d);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (std::size_t c = 0; c < d && ok; ++c)
            if (K[c] < J[std::size_t(perm[c])]) ok = false;
        if (ok) ++r.count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    r.odd = (r.count & 1) != 0;
    r.chain = interleaves(J, K);

    for (std::size_t c = 0; c < d; ++c) {
        int s = 0;
        for (std::size_t b = 0; b < d; ++b)
            if (J[b] <= K[c]) ++s;
        r.s_profile.push_back(s);
    }
    /* the profile is nondecreasing, so the count factors as a product of
     * remaining choices; this recount is independent of the enumeration */
    std::uint64_t prod = 1;
    for (std::size_t c = 0; c < d; ++c) {
        int avail = r.s_profile[c] - int(c);
        if (avail <= 0) { prod = 0; break; }
        prod *= std::uint64_t(avail);
    }
    if (prod != r.count)
        throw TheoryError("s_jk: product recount disagrees with the enumeration");
    if (r.odd != r.chain)
        throw TheoryError("s_jk: parity does not match the interleaving chain");
    if (r.odd && r.count != 1)
        throw TheoryError("s_jk: odd count other than one");
    return r;
}

std::pair<std::uint64_t, int> split_top_bit(std::uint64_t m) {
    if (m == 0) throw std::invalid_argument("split_top_bit: zero has no top bit");
    int k = std::bit_width(m) - 1;
    return {m - (std::uint64_t(1) << k), k};
}

std::vector<PairMismatch> magic_lemma_check(std::uint64_t bound) {
    if (bound > 4096) throw std::invalid_argument("magic_lemma_check: bound above 4096");
    std::vector<PairMismatch> bad;
    for (std::uint64_t n = 0; n <= bound; ++n) {
        for (std::uint64_t m = n + 1; m <= bound; ++m) {
            if (alpha2(m) != alpha2(n) + 1) continue;
            auto [l, k] = split_top_bit(m);
            (void)k;
            bool lhs = binom_mod2(std::int64_t(m - n) - 1, std::int64_t(n)) == 1;
            bool rhs = m >= 2 * n && interleaves(bit_list(l), bit_list(n));
            if (lhs != rhs) {
                std::ostringstream os;
                os << "binom says " << lhs << ", chain says " << rhs;
                bad.push_back({n, m, os.str()});
            }
        }
    }
    return bad;
}

std::vector<PairMismatch> mixed_parity_vanishing(std::uint64_t bound) {
    if (bound > 64) throw std::invalid_argument("mixed_parity_vanishing: bound above 64");
    std::vector<PairMismatch> bad;
    std::map<std::uint64_t, MargolisReport> reports;
    auto report_of = [&](std::uint64_t w) -> const MargolisReport& {
        auto it = reports.find(w);
        if (it == reports.end())
            it = reports.emplace(w, margolis(*weight_module(w).mod, 1)).first;
        return it->second;
    };

    for (std::uint64_t nn = 3; nn <= bound; ++nn) {
        for (std::uint64_t ll = 2; ll < nn; ++ll) {
            if ((nn + ll) % 2 == 0) continue;
            ModuleMap p = p_map(nn, ll);
            const MargolisReport& hs = report_of(nn);
            const MargolisReport& ht = report_of(ll);
            InducedMargolis ind = induced_on_margolis(p, 1, hs, ht);
            if (ind.iso) {
                bad.push_back({nn, ll, "induced map is an iso across parities"});
                continue;
            }
            /* profile match: same homology dimension in every degree */
            bool match = true;
            int lod = std::min(hs.verdict_lo, ht.verdict_lo);
            int hid = std::max(hs.verdict_hi, ht.verdict_hi);
            for (int d = lod; d <= hid && match; ++d) {
                const MargolisDegree* a = hs.at(d);
                const MargolisDegree* b = ht.at(d);
                if ((a ? a->dim_homology : 0) != (b ? b->dim_homology : 0)) match = false;
            }
            if (!match) continue;

            /* the top-profile class must die in the target homology */
            const WeightModule& wn = weight_module(nn);
            const WeightModule& wl = weight_module(ll);
            Monomial cls = q1_representatives(nn).first.terms().front();
            int dc = int(cls.degree());
            F2Vec v(std::size_t(wn.mod->dim(dc)));
            v.set(std::size_t(wn.index_of(cls)), true);
            F2Vec img = p.apply(dc, v);
            if (img.is_zero()) continue;
            F2Span boundaries(std::size_t(wl.mod->dim(dc)));
            if (dc - 3 >= wl.lo() && dc <= wl.hi()) {
                std::vector<F2Matrix> qb = qm_blocks(*wl.mod, 1);
                if (dc - 3 + 3 <= wl.hi()) {
                    const F2Matrix& b = qb[std::size_t(dc - 3 - wl.lo())];
                    for (std::size_t c = 0; c < b.cols(); ++c) boundaries.insert(b.column(c));
                }
            }
            if (!boundaries.reduce(img).is_zero()) {
                std::ostringstream os;
                os << "class " << cls.str() << " survives in J(" << ll << ")";
                bad.push_back({nn, ll, os.str()});
            }
        }
    }
    return bad;
}

namespace {

/* coefficients of num/den to the requested order; den[0] must be 1 */
std::vector<int> series_div(std::vector<int> num, std::vector<int> den, std::size_t order) {
    std::vector<int> c(order + 1, 0);
    num.resize(order + 1, 0);
    den.resize(order + 1, 0);
    for (std::size_t i = 0; i <= order; ++i) {
        long long acc = num[i];
        for (std::size_t j = 1; j <= i; ++j) acc -= (long long)den[j] * c[i - j];
        c[i] = int(acc);
    }
    return c;
}

}  // namespace

KTable k_tables(int m, std::uint64_t n_max) {
    if (m < 0 || m > 2) throw std::invalid_argument("k_tables: only m = 0, 1, 2");
    if (n_max > 64) throw std::invalid_argument("k_tables: weight cap is 64");
    KTable t;
    t.m = m;
    for (std::uint64_t n = 0; n <= n_max; ++n) {
        MargolisReport rep = margolis(*weight_module(n).mod, m);
        t.ranks.push_back(rep.total_homology);
    }
    for (std::uint64_t n = 0; n <= n_max; ++n) {
        int cf = 0;
        if (n <= 1) cf = 1;
        else if (m == 0) cf = 0;
        else if (m == 1) cf = 2;
        else cf = 2 * int(n / 2);
        t.closed_form.push_back(cf);
    }
    std::vector<int> num, den;
    switch (m) {
        case 0:  num = {1, 1};          den = {1};            break;
        case 1:  num = {1, 0, 1};       den = {1, -1};        break;
        default: num = {1, 0, 0, 0, 1}; den = {1, -1, -1, 1}; break;
    }
    t.series = series_div(num, den, n_max);
    for (std::uint64_t n = 0; n <= n_max; ++n) {
        if (t.ranks[n] == t.closed_form[n] && t.ranks[n] == t.series[n]) continue;
        std::ostringstream os;
        os << "n=" << n << ": rank " << t.ranks[n] << ", closed form "
           << t.closed_form[n] << ", series " << t.series[n];
        t.notes.push_back(os.str());
    }
    return t;
}

std::vector<int> quotient_ring_slice(int m, std::uint64_t n) {
    if (m < 0) throw std::invalid_argument("quotient_ring_slice: m must be >= 0");
    std::vector<int> out(n + 1, 0);
    int kmax = 0;
    while ((std::uint64_t(1) << (kmax + 1)) <= n) ++kmax;
    std::uint64_t ecap = std::uint64_t(1) << (m + 1);

    /* exponents below 2^{m+1}, even above index m */
    auto dfs = [&](auto&& self, int k, std::uint64_t rem, std::uint64_t deg) -> void {
        if (k < 0) {
            if (rem == 0) ++out[deg];
            return;
        }
        std::uint64_t step = (k > m) ? 2 : 1;
        std::uint64_t unit = std::uint64_t(1) << k;
        for (std::uint64_t e = 0; e < ecap && e * unit <= rem; e += step)
            self(self, k - 1, rem - e * unit, deg + e);
    };
    if (n == 0) { out[0] = 1; return out; }
    dfs(dfs, kmax, n, 0);
    return out;
}

}  // namespace bgmod
