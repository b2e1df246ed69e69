/* Acceptance harness: one criterion per run, chosen by argv[1].
 * Prints detail lines, then a single verdict line
 *     criterion <k>: PASS | FAIL
 * and exits 0 on pass, 1 on fail, 2 on usage errors. */

#include "bgmod/a1.hpp"
#include "bgmod/bg.hpp"
#include "bgmod/dump.hpp"
#include "bgmod/homsolve.hpp"
#include "bgmod/margolis.hpp"
#include "bgmod/theorems.hpp"

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

using namespace bgmod;

namespace {

bool g_ok = true;

void sub(bool ok, const std::string& what) {
    std::cout << "  " << (ok ? "ok  " : "FAIL") << " " << what << "\n";
    if (!ok) g_ok = false;
}

std::vector<int> bit_positions(std::uint64_t n) {
    std::vector<int> out;
    for (int b = 0; n; ++b, n >>= 1)
        if (n & 1) out.push_back(b);
    return out;
}

/* 1: exhaustive agreement of the criterion, the homology oracle, and the
 * freeness decomposition over every pair 2 <= n < m <= 48 */
void criterion1() {
    ScanReport rep = scan_main_theorem(47, 48, 1);
    std::size_t predicted = 0;
    for (const ScanRecord& r : rep.records)
        if (r.predicted) ++predicted;
    std::cout << "  " << rep.records.size() << " pairs, " << predicted
              << " predicted acyclic, " << rep.mismatches.size()
              << " mismatches, " << rep.seconds << "s\n";
    for (std::size_t i : rep.mismatches) {
        const ScanRecord& r = rep.records[i];
        std::cout << "  mismatch at (" << r.n << ", " << r.m << "): predicted "
                  << r.predicted << ", oracle " << r.oracle << ", free "
                  << r.free_ok << " " << r.witness << "\n";
    }
    sub(rep.mismatches.empty(), "criterion, oracle and freeness agree on every pair");
}

/* 2: the three pinned glued modules, their free generators, and the
 * suspension class identity in Q(4,12) */
void criterion2() {
    {
        QModule q = build_q_module(2, 6);
        sub(q.module->total_dim() == 8, "Q(2,6) has dimension 8");
        sub(poincare(*q.module).dims == std::vector<int>{1, 1, 1, 2, 1, 1, 1},
            "Q(2,6) degrees 0..6 have dims 1 1 1 2 1 1 1");
        A1Decomposition dec = a1_free_decomposition(*q.module);
        sub(dec.free && dec.generators.size() == 1 && dec.generators[0].degree == 0,
            "Q(2,6) is free on one generator in degree 0");
    }
    {
        QModule q = build_q_module(4, 12);
        sub(q.module->total_dim() == 24, "Q(4,12) has dimension 24");
        A1Decomposition dec = a1_free_decomposition(*q.module);
        std::vector<int> degs;
        for (const auto& g : dec.generators) degs.push_back(g.degree);
        sub(dec.free && degs == std::vector<int>{0, 2, 6},
            "Q(4,12) is free on generators in degrees 0, 2, 6");
    }
    {
        QModule q = build_q_module(10, 22);
        sub(q.module->total_dim() == 88, "Q(10,22) has dimension 88");
        A1Decomposition dec = a1_free_decomposition(*q.module);
        sub(dec.free && dec.generators.size() == 11,
            "Q(10,22) is free on 11 generators");
    }
    {
        QModule q = build_q_module(4, 12);
        const WeightModule& w12 = weight_module(12);
        /* literally, Sq2 Sq1 kills the desuspended square: Sq1 already does */
        F2Vec c1 = q.class_of(Monomial::parse("x1^2"));
        F2Vec lit = q.module->apply_sq(2, 2, q.module->apply_sq(1, 1, c1));
        sub(lit.is_zero(), "Sq2 Sq1 on the desuspended square vanishes as written");
        /* the intended composite: start one degree lower, on the desuspended
         * generator, where Sq1 lands on the square and Sq2 then picks up the
         * correction term from the gluing */
        F2Vec c0 = q.class_of(Monomial::parse("x2"));
        F2Vec step = q.module->apply_sq(1, 0, c0);
        sub(step == c1, "Sq1 carries the desuspended generator to the square");
        F2Vec got = q.module->apply_sq(2, 1, step);
        F2Vec want(std::size_t(q.module->dim(3)));
        want.set(std::size_t(q.index_in_q(Monomial::parse("x0^4"))), true);
        want.set(std::size_t(q.desusp_dim(3) +
                             w12.index_of(Monomial::parse("x1^2*x3"))),
                 true);
        sub(got == want,
            "Sq2 Sq1 from the generator hits the desuspended fourth power "
            "plus the weight-12 correction");
        std::cout << "  note: read as a composite from one degree down; the "
                     "literal left side lives two degrees above the stated "
                     "right side and is zero\n";
    }
}

/* 3: adding a power of two past the weight is always acyclic */
void criterion3() {
    int checked = 0, confirmed = 0;
    bool crit = true, orac = true;
    for (std::uint64_t n = 2; n <= 32; n += 2)
        for (std::uint64_t pk = 1; pk <= 96; pk <<= 1) {
            if (pk <= n || n + pk > 96) continue;
            ++checked;
            crit = crit && main_criterion(n, n + pk).predicted_acyclic;
            if (n + pk <= 48) {
                ++confirmed;
                orac = orac && acyclicity_oracle(n, n + pk).acyclic;
            }
        }
    sub(crit, "criterion holds on all " + std::to_string(checked) + " family pairs");
    sub(orac, "oracle confirms the " + std::to_string(confirmed) + " pairs in reach");
}

/* 4: the first acyclic partner of an even weight is 2n + 2^{nu2(n)} */
void criterion4() {
    bool minimal = true, at_star = true, orac = true;
    for (std::uint64_t n = 2; n <= 24; n += 2) {
        std::uint64_t m_star = 2 * n + (std::uint64_t(1) << nu2(n));
        for (std::uint64_t m = n + 1; m < m_star; ++m)
            minimal = minimal && !main_criterion(n, m).predicted_acyclic;
        at_star = at_star && main_criterion(n, m_star).predicted_acyclic;
        if (n <= 16) orac = orac && acyclicity_oracle(n, m_star).acyclic;
    }
    sub(minimal, "no smaller partner is predicted acyclic");
    sub(at_star, "the threshold partner is predicted acyclic");
    sub(orac, "the oracle confirms the threshold up to weight 16");
}

/* 5: homology rank tables against closed forms and series up to weight 64 */
void criterion5() {
    for (int m = 0; m <= 2; ++m) {
        KTable t = k_tables(m, 64);
        sub(t.notes.empty(),
            "Q" + std::to_string(m) + " ranks match the closed form and the series");
        for (const std::string& note : t.notes) std::cout << "    " << note << "\n";
    }
}

/* 6: four consistency sweeps; the projection comparison is expected to fail
 * and the verdict records that honestly */
void criterion6() {
    {
        bool ok = true;
        for (std::uint64_t n = 0; n <= 64 && ok; ++n)
            for (const Monomial& mono : weight_monomials(n)) {
                Poly p(mono);
                for (int m = 0; m <= 2; ++m)
                    if (qm(m, p) != qm_via_commutator(m, p)) {
                        ok = false;
                        std::cout << "    differ at Q" << m << " " << mono.str()
                                  << "\n";
                        break;
                    }
                if (!ok) break;
            }
        sub(ok, "derivations match their commutator towers through weight 64");
    }
    {
        bool ok = true;
        for (std::uint64_t n = 1; n <= 12; ++n) {
            ModuleMap h = halving_map(n);
            ModuleMap p = p_map(2 * n, n);
            for (int d = h.source->lo(); d <= h.source->hi(); ++d) {
                if (h.block(d) == p.block(d)) continue;
                if (ok) {
                    const WeightModule& w = weight_module(2 * n);
                    for (int c = 0; c < h.source->dim(d); ++c) {
                        F2Vec e(std::size_t(h.source->dim(d)));
                        e.set(std::size_t(c), true);
                        F2Vec hv = h.apply(d, e), pv = p.apply(d, e);
                        if (hv == pv) continue;
                        std::cout << "    first difference at weight " << 2 * n
                                  << ", degree " << d << ": " << w.at(d)[std::size_t(c)].str()
                                  << " halves to " << label_combo(*h.target, d, hv)
                                  << " but projects to " << label_combo(*p.target, d, pv)
                                  << "\n";
                        break;
                    }
                }
                ok = false;
            }
        }
        sub(ok, "halving equals the all-ones projection through weight 12");
    }
    {
        bool ok = true;
        for (std::uint64_t n = 1; n <= 16; ++n) {
            ModuleMap x = x0_mult_map(2 * n - 1);
            ModuleMap h = halving_map(n);
            ModuleMap c = compose(h, x);
            for (int d = c.source->lo(); d <= c.source->hi(); ++d)
                ok = ok && c.block(d).is_zero();
            for (int d = h.source->lo(); d <= h.source->hi(); ++d) {
                std::size_t in_rank =
                    (d >= x.source->lo() && d <= x.source->hi())
                        ? f2_rank(x.block(d))
                        : 0;
                ok = ok && in_rank + f2_rank(h.block(d)) ==
                               std::size_t(h.source->dim(d));
                ok = ok && f2_rank(h.block(d)) == std::size_t(h.target->dim(d));
            }
        }
        sub(ok, "suspension, doubling, halving stay exact through weight 16");
    }
    {
        bool ok = true;
        for (std::uint64_t n = 1; n <= 20 && ok; ++n) {
            const WeightModule& w = weight_module(n);
            for (int l = w.lo(); l <= w.hi() && ok; ++l)
                for (int r = 0; r < w.mod->dim(l) && ok; ++r) {
                    F2Vec phi(std::size_t(w.mod->dim(l)));
                    phi.set(std::size_t(r), true);
                    HomSolveResult s = hom_solve(view_of(w.mod), std::uint64_t(l), phi);
                    ok = ok && s.unique && s.verified;
                }
        }
        sub(ok, "every functional through weight 20 extends uniquely");
    }
}

/* 7: the combinatorial backbone on wide sweeps */
void criterion7() {
    {
        auto bad = magic_lemma_check(512);
        for (const PairMismatch& p : bad)
            std::cout << "    (" << p.n << ", " << p.m << ") " << p.detail << "\n";
        sub(bad.empty(), "binomial test equals bit interleaving through 512");
    }
    {
        bool ok = true;
        std::uint64_t calls = 0;
        std::vector<int> J, K;
        /* every strictly increasing pair of equal-size subsets of 0..9 */
        for (std::uint64_t jm = 1; jm < 1024 && ok; ++jm) {
            J = bit_positions(jm);
            if (J.size() > 4) continue;
            for (std::uint64_t km = 1; km < 1024 && ok; ++km) {
                K = bit_positions(km);
                if (K.size() != J.size()) continue;
                ++calls;
                try {
                    s_jk(J, K);
                } catch (const TheoryError& e) {
                    std::cout << "    " << e.what() << "\n";
                    ok = false;
                }
            }
        }
        sub(ok, "permutation counts certified on " + std::to_string(calls) +
                    " exponent pairs");
    }
    {
        auto bad = mixed_parity_vanishing(32);
        for (const PairMismatch& p : bad)
            std::cout << "    (" << p.n << ", " << p.m << ") " << p.detail << "\n";
        sub(bad.empty(), "mixed parity projections never induce isomorphisms");
    }
    {
        bool ok = true;
        for (std::uint64_t n = 1; n <= 65536; ++n)
            ok = ok && alpha2(n - 1) - alpha2(n) == nu2(n) - 1;
        sub(ok, "digit sum drop equals the 2-adic valuation through 65536");
    }
    {
        bool ok = true;
        for (std::int64_t m = 0; m <= 1024; m += 2)
            for (std::int64_t n = 0; n <= 1024; n += 2)
                ok = ok && binom_mod2(m - n - 2, n) ==
                               binom_mod2(m / 2 - n / 2 - 1, n / 2);
        sub(ok, "the binomial test halves cleanly on even pairs through 1024");
    }
}

/* 8: below the doubling line the homology is four dimensional, and at
 * m = 2n - 1 the glued module is the desuspension on the nose */
void criterion8() {
    bool four = true, shape = true;
    for (std::uint64_t n = 2; n <= 12; ++n) {
        for (std::uint64_t m = n + 1; m + 1 < 2 * n; ++m) {
            QModule q = build_q_module(n, m);
            MargolisReport rep = margolis(*q.module, 1);
            if (rep.total_homology != 4) {
                four = false;
                std::cout << "    Q(" << n << ", " << m << ") has total "
                          << rep.total_homology << "\n";
            }
        }
        QModule q = build_q_module(n, 2 * n - 1);
        ModulePtr down = suspend(weight_module(2 * n).mod, -1);
        if (!(poincare(*q.module) == poincare(*down))) shape = false;
        MargolisReport a = margolis(*q.module, 1);
        MargolisReport b = margolis(*down, 1);
        for (int d = a.verdict_lo; d <= a.verdict_hi; ++d) {
            const MargolisDegree* x = a.at(d);
            const MargolisDegree* y = b.at(d);
            int dx = x ? x->dim_homology : 0;
            int dy = y ? y->dim_homology : 0;
            if (dx != dy) shape = false;
        }
    }
    sub(four, "every pair below the doubling line carries four classes");
    sub(shape, "at m = 2n - 1 the glued module matches the desuspension");
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: acceptance <1-8>\n";
        return 2;
    }
    int k = std::atoi(argv[1]);
    try {
        switch (k) {
            case 1: criterion1(); break;
            case 2: criterion2(); break;
            case 3: criterion3(); break;
            case 4: criterion4(); break;
            case 5: criterion5(); break;
            case 6: criterion6(); break;
            case 7: criterion7(); break;
            case 8: criterion8(); break;
            default: std::cerr << "usage: acceptance <1-8>\n"; return 2;
        }
    } catch (const std::exception& e) {
        std::cout << "  unexpected error: " << e.what() << "\n";
        g_ok = false;
    }
    std::cout << "criterion " << k << ": " << (g_ok ? "PASS" : "FAIL") << "\n";
    return g_ok ? 0 : 1;
}
