#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bgmod/bg.hpp"
#include "bgmod/homsolve.hpp"
#include "bgmod/margolis.hpp"

#include <algorithm>
#include <map>
#include <string>

using namespace bgmod;

namespace {

std::map<std::string, int> label_index(const FiniteGradedModule& m, int d) {
    std::map<std::string, int> out;
    const auto& ls = m.labels(d);
    for (int i = 0; i < int(ls.size()); ++i) out[ls[std::size_t(i)]] = i;
    return out;
}

F2Matrix block_or_zero(const FiniteGradedModule& m, int i, int d) {
    const F2Matrix* b = m.sq(i, d);
    if (b) return *b;
    return F2Matrix(std::size_t(m.dim(d + i)), std::size_t(m.dim(d)));
}

F2Vec ones(std::size_t n) {
    F2Vec v(n);
    for (std::size_t i = 0; i < n; ++i) v.set(i, true);
    return v;
}

F2Vec unit(std::size_t n, std::size_t i) {
    F2Vec v(n);
    v.set(i, true);
    return v;
}

/* Q(n, m) a second way: push the all-ones solution on the materialized
 * J(n) (x) (t) out along its inclusion into J(n) (x) P~.  The bespoke
 * construction must reproduce these blocks coordinate for coordinate. */
ModulePtr generic_q(std::uint64_t n, std::uint64_t m) {
    const WeightModule& wn = weight_module(n);
    int cap = int(m);
    ModulePtr tid = t_family_module(TFamily::IdealT, 0, 1, cap);
    ModulePtr tpt = t_family_module(TFamily::PTilde, 0, -1, cap);
    ModulePtr src = tensor(wn.mod, tid, cap);
    ModulePtr amb = tensor(wn.mod, tpt, cap);

    ModuleMap g;
    g.source = src;
    g.target = amb;
    for (int d = src->lo(); d <= src->hi(); ++d) {
        F2Matrix b(std::size_t(amb->dim(d)), std::size_t(src->dim(d)));
        auto idx = label_index(*amb, d);
        for (int c = 0; c < src->dim(d); ++c) {
            auto it = idx.find(src->labels(d)[std::size_t(c)]);
            REQUIRE(it != idx.end());
            b.set(std::size_t(it->second), std::size_t(c), true);
        }
        g.blocks.push_back(std::move(b));
    }

    ModuleMap f = hom_solver(src, m, ones(std::size_t(src->dim(int(m)))));
    return pushout(f, g);
}

}  // namespace

TEST_CASE("multiplication realizes the product of monomials") {
    ModuleMap mu = mu_map(2, 4);
    const WeightModule& wa = weight_module(2);
    const WeightModule& wb = weight_module(4);
    const WeightModule& wc = weight_module(6);
    CHECK_NOTHROW(mu.verify_a_linear(mu.source->span()));
    for (int d = mu.source->lo(); d <= mu.source->hi(); ++d) {
        auto idx = label_index(*mu.source, d);
        for (int da = wa.lo(); da <= wa.hi(); ++da) {
            int db = d - da;
            if (db < wb.lo() || db > wb.hi()) continue;
            for (const auto& a : wa.at(da))
                for (const auto& b : wb.at(db)) {
                    auto it = idx.find(a.str() + " (x) " + b.str());
                    REQUIRE(it != idx.end());
                    F2Vec img = mu.apply(d, unit(std::size_t(mu.source->dim(d)),
                                                 std::size_t(it->second)));
                    CHECK(img == unit(std::size_t(wc.mod->dim(d)),
                                      std::size_t(wc.index_of(a * b))));
                }
        }
    }
}

TEST_CASE("halving kills x0 multiples and shifts the rest down") {
    ModuleMap h = halving_map(3);
    const WeightModule& w6 = weight_module(6);
    const WeightModule& w3 = weight_module(3);
    CHECK(h.a_linear);
    auto image = [&](const char* mono) {
        int d = int(Monomial::parse(mono).degree());
        return h.apply(d, unit(std::size_t(w6.mod->dim(d)),
                               std::size_t(w6.index_of(Monomial::parse(mono)))));
    };
    CHECK(image("x1^3") == unit(1, 0));      // -> x0^3
    CHECK(image("x1*x2") == unit(1, 0));     // -> x0*x1
    CHECK(image("x0^2*x2").is_zero());
    CHECK(image("x0^6").is_zero());
}

TEST_CASE("halving agrees with the solver run on its own functional") {
    for (std::uint64_t n = 1; n <= 5; ++n) {
        const WeightModule& w2n = weight_module(2 * n);
        int dim_top = w2n.mod->dim(int(n));
        F2Vec psi{std::size_t(dim_top)};
        for (int c = 0; c < dim_top; ++c)
            if (w2n.at(int(n))[std::size_t(c)].exp(0) == 0) psi.set(std::size_t(c), true);
        ModuleMap solved = hom_solver(w2n.mod, n, psi);
        ModuleMap h = halving_map(n);
        for (int d = w2n.lo(); d <= w2n.hi(); ++d) CHECK(h.block(d) == solved.block(d));
    }
}

TEST_CASE("halving equals the projection map exactly in small weights only") {
    for (std::uint64_t n = 1; n <= 2; ++n) {
        ModuleMap h = halving_map(n);
        ModuleMap p = p_map(2 * n, n);
        for (int d = h.source->lo(); d <= h.source->hi(); ++d)
            CHECK(h.block(d) == p.block(d));
    }
    /* from weight six on the two maps genuinely differ: the projection sends
     * x0^2*x2 to x0^3 while halving sends it to zero */
    ModuleMap h = halving_map(3);
    ModuleMap p = p_map(6, 3);
    const WeightModule& w6 = weight_module(6);
    F2Vec probe = unit(2, std::size_t(w6.index_of(Monomial::parse("x0^2*x2"))));
    CHECK(h.apply(3, probe).is_zero());
    CHECK(p.apply(3, probe) == unit(1, 0));
}

TEST_CASE("x0 multiplication embeds the suspension") {
    for (std::uint64_t w : {1, 4, 7}) {
        ModuleMap x = x0_mult_map(w);
        CHECK(x.source->name == "S^1 J(" + std::to_string(w) + ")");
        CHECK_NOTHROW(x.verify_a_linear(x.source->span()));
        for (int d = x.source->lo(); d <= x.source->hi(); ++d)
            CHECK(f2_rank(x.block(d)) == std::size_t(x.source->dim(d)));
    }
}

TEST_CASE("short exact sequence: suspension, doubling, halving") {
    for (std::uint64_t n = 1; n <= 8; ++n) {
        ModuleMap x = x0_mult_map(2 * n - 1);
        ModuleMap h = halving_map(n);
        REQUIRE(x.target == h.source);
        ModuleMap comp = compose(h, x);
        for (int d = comp.source->lo(); d <= comp.source->hi(); ++d)
            CHECK(comp.block(d).is_zero());
        for (int d = h.source->lo(); d <= h.source->hi(); ++d) {
            std::size_t in_rank = 0;
            if (d >= x.source->lo() && d <= x.source->hi()) {
                in_rank = f2_rank(x.block(d));
                CHECK(in_rank == std::size_t(x.source->dim(d)));
            }
            std::size_t out_rank = f2_rank(h.block(d));
            CHECK(out_rank == std::size_t(h.target->dim(d)));
            CHECK(in_rank + out_rank == std::size_t(h.source->dim(d)));
        }
    }
}

TEST_CASE("suspending an even weight module gives the next odd one on the nose") {
    for (std::uint64_t n = 1; n <= 8; ++n) {
        const WeightModule& even = weight_module(2 * n);
        const WeightModule& odd = weight_module(2 * n + 1);
        ModulePtr s = suspend(even.mod, 1);
        CHECK(poincare(*s).dims == poincare(*odd.mod).dims);
        CHECK(s->lo() == odd.lo());
        for (int d = odd.lo(); d <= odd.hi(); ++d) {
            /* the order-preserving bijection is multiplication by x0 */
            for (int c = 0; c < odd.mod->dim(d); ++c)
                CHECK(odd.at(d)[std::size_t(c)] ==
                      Monomial::parse("x0") * even.at(d - 1)[std::size_t(c)]);
            for (int i = 1; d + i <= odd.hi(); ++i)
                CHECK(block_or_zero(*s, i, d) == block_or_zero(*odd.mod, i, d));
        }
    }
}

TEST_CASE("the free-module comparison map hits descending squares") {
    ModuleMap p2 = pk_map(2, 10);
    const WeightModule& w4 = weight_module(4);
    CHECK(p2.target == w4.mod);
    auto at = [&](int d) {
        return p2.apply(d, unit(std::size_t(p2.source->dim(d)), 0));
    };
    CHECK(at(1) == unit(1, std::size_t(w4.index_of(Monomial::parse("x2")))));
    CHECK(at(2) == unit(1, std::size_t(w4.index_of(Monomial::parse("x1^2")))));
    CHECK(at(4) == unit(1, std::size_t(w4.index_of(Monomial::parse("x0^4")))));
    CHECK(at(8).is_zero());
    CHECK_NOTHROW(p2.verify_a_linear(8));
}

TEST_CASE("sparse square tables mirror the dense blocks") {
    const WeightModule& w = weight_module(8);
    const SparseSq& sp = sparse_sq(8);
    CHECK(sp.lo() == w.lo());
    CHECK(sp.hi() == w.hi());
    for (int d = w.lo(); d <= w.hi(); ++d)
        for (int i = 1; d + i <= w.hi(); ++i)
            for (int c = 0; c < w.mod->dim(d); ++c) {
                const F2Matrix* b = w.mod->sq(i, d);
                std::vector<std::uint32_t> expect =
                    b ? b->column(std::size_t(c)).set_bits()
                      : std::vector<std::uint32_t>{};
                CHECK(sp.rows(i, d, c) == expect);
            }
}

TEST_CASE("symbolic tensor with the ideal matches the materialized one") {
    IdealTensor it(3, 8);
    ModulePtr dense = tensor(weight_module(3).mod,
                             t_family_module(TFamily::IdealT, 0, 1, 8), 8);
    CHECK(it.lo() == dense->lo());
    CHECK(it.hi() == dense->hi());
    for (int d = it.lo(); d <= it.hi(); ++d) {
        REQUIRE(it.dim(d) == dense->dim(d));
        for (int c = 0; c < it.dim(d); ++c)
            CHECK(it.label(d, c) == dense->labels(d)[std::size_t(c)]);
        for (int i = 1; d + i <= it.hi(); ++i) {
            auto cols = it.sq_columns(i, d);
            REQUIRE(int(cols.size()) == it.dim(d));
            for (int c = 0; c < it.dim(d); ++c) {
                auto sorted = cols[std::size_t(c)];
                std::sort(sorted.begin(), sorted.end());
                const F2Matrix* b = dense->sq(i, d);
                std::vector<std::uint32_t> expect =
                    b ? b->column(std::size_t(c)).set_bits()
                      : std::vector<std::uint32_t>{};
                CHECK(sorted == expect);
            }
        }
    }
    /* embedding a weight vector at a fixed t power lands in its group */
    const WeightModule& w3 = weight_module(3);
    F2Vec e = it.embed(2, unit(std::size_t(w3.mod->dim(2)), 0), 3);
    CHECK(e.size() == std::size_t(it.dim(5)));
    CHECK(e.set_bits() == std::vector<std::uint32_t>{std::uint32_t(it.offset(2))});
}

TEST_CASE("the symbolic and dense q maps agree") {
    for (auto [n, m] : {std::pair<std::uint64_t, std::uint64_t>{2, 6}, {3, 7}, {4, 9}}) {
        QMap q = q_map(n, m);
        ModuleMap qd = q_map_dense(n, m);
        CHECK(qd.a_linear);
        for (int d = qd.source->lo(); d <= int(m); ++d)
            for (int c = 0; c < qd.source->dim(d); ++c)
                CHECK(q.apply(d, unit(std::size_t(qd.source->dim(d)),
                                      std::size_t(c))) ==
                      qd.block(d).column(std::size_t(c)));
    }
}

TEST_CASE("a pinned value of the big q map") {
    QMap q = q_map(4, 12);
    CHECK(q.value(Monomial::parse("x1^2"), 1) == Poly::parse("x1^2*x3"));
    /* the top functional sends every a (x) t^j of total degree 12 to x0^12 */
    CHECK(q.value(Monomial::parse("x0^4"), 8) == Poly::parse("x0^12"));
}

TEST_CASE("the glued module in its smallest instance") {
    QModule q = build_q_module(2, 6);
    CHECK(q.module->name == "Q(2,6)");
    CHECK(q.module->complete());
    CHECK(q.module->lo() == 0);
    CHECK(q.module->hi() == 6);
    CHECK(poincare(*q.module).dims == std::vector<int>{1, 1, 1, 2, 1, 1, 1});
    CHECK(q.module->total_dim() == 8);
    CHECK(q.desusp_dim(0) == 1);
    CHECK(q.index_in_q(Monomial::parse("x1")) == 0);
    CHECK(q.class_of(Monomial::parse("x1")) == unit(1, 0));
    /* the projection undoes the section */
    for (int d = q.desusp->lo(); d <= q.desusp->hi(); ++d)
        for (int c = 0; c < q.desusp->dim(d); ++c) {
            F2Vec e = unit(std::size_t(q.desusp->dim(d)), std::size_t(c));
            CHECK(q.projection.apply(d, q.desusp_section.apply(d, e)) == e);
        }
    CHECK_THROWS_AS(build_q_module(1, 5), std::invalid_argument);
    CHECK_THROWS_AS(build_q_module(3, 3), std::invalid_argument);
}

TEST_CASE("bespoke gluing equals the generic pushout matrix for matrix") {
    for (auto [n, m] : {std::pair<std::uint64_t, std::uint64_t>{2, 6},
                        {2, 5},
                        {3, 7},
                        {4, 8}}) {
        ModulePtr gen = generic_q(n, m);
        QModule bes = build_q_module(n, m);
        const WeightModule& wn = weight_module(n);
        REQUIRE(gen->lo() == bes.module->lo());
        REQUIRE(gen->hi() == bes.module->hi());
        for (int d = gen->lo(); d <= gen->hi(); ++d) {
            REQUIRE(gen->dim(d) == bes.module->dim(d));
            /* coordinates: first the t^-1 pairs in basis order, then J(m) */
            int sdim = bes.desusp_dim(d);
            for (int c = 0; c < gen->dim(d); ++c) {
                std::string lab = gen->labels(d)[std::size_t(c)];
                if (c < sdim)
                    CHECK(lab == "n:" + wn.at(d + 1)[std::size_t(c)].str() +
                                     " (x) t^-1");
                else
                    CHECK(lab.rfind("p:", 0) == 0);
            }
            for (int i = 1; d + i <= gen->hi(); ++i)
                CHECK(block_or_zero(*gen, i, d) == block_or_zero(*bes.module, i, d));
        }
    }
}

TEST_CASE("the bottom of the glued module comes from either block") {
    /* alpha2(32) = 1 sits below alpha2(14) - 1 = 2, so the J(m) block opens
     * the window here */
    QModule q = build_q_module(14, 32);
    CHECK(q.module->lo() == 1);
    CHECK(q.module->total_dim() == int(binary_partition_count(32) +
                                       binary_partition_count(14)));
    QModule r = build_q_module(4, 12);
    CHECK(r.module->lo() == 0);  // alpha2(4) - 1
    CHECK(r.module->total_dim() == 24);
}

TEST_CASE("kernel representatives by weight") {
    auto [a2, b2] = q1_representatives(2);
    CHECK(a2.str() == "x0^2");
    CHECK(b2.str() == "x1");
    auto [a5, b5] = q1_representatives(5);
    CHECK(a5.str() == "x0*x1^2");
    CHECK(b5.str() == "x0^3*x1");
    auto [a6, b6] = q1_representatives(6);
    CHECK(a6.str() == "x0^2*x1^2");
    CHECK(b6.str() == "x1^3");
    CHECK_THROWS_AS(q1_representatives(1), std::invalid_argument);

    for (std::uint64_t n = 2; n <= 12; ++n) {
        auto [a, b] = q1_representatives(n);
        CHECK(qm(1, a).is_zero());
        CHECK(qm(1, b).is_zero());
        REQUIRE(a.terms().size() == 1);
        REQUIRE(b.terms().size() == 1);
        CHECK(a.terms()[0].degree() != b.terms()[0].degree());
        /* each spans the homology in its degree */
        const WeightModule& w = weight_module(n);
        auto blocks = qm_blocks(*w.mod, 1);
        for (const Poly* rep : {&a, &b}) {
            const Monomial& mono = rep->terms()[0];
            int d = int(mono.degree());
            F2Span image(std::size_t(w.mod->dim(d)));
            if (d - 3 >= w.lo()) {
                const F2Matrix& in = blocks[std::size_t(d - 3 - w.lo())];
                for (std::size_t c = 0; c < in.cols(); ++c)
                    image.insert(in.column(c));
            }
            F2Vec v = unit(std::size_t(w.mod->dim(d)),
                           std::size_t(w.index_of(mono)));
            CHECK_FALSE(image.contains(v));
        }
    }
}

TEST_CASE("tensoring with the punctured algebra is invisible to Q1") {
    for (auto [n, cap] : {std::pair<std::uint64_t, int>{2, 8}, {3, 9}, {4, 12}}) {
        ModulePtr amb = tensor(weight_module(n).mod,
                               t_family_module(TFamily::PTilde, 0, -1, cap), cap);
        MargolisReport rep = margolis(*amb, 1);
        CHECK(rep.acyclic);
    }
}
