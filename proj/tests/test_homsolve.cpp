#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bgmod/bg.hpp"
#include "bgmod/homsolve.hpp"

using namespace bgmod;

namespace {

F2Vec ones(std::size_t n) {
    F2Vec v(n);
    for (std::size_t i = 0; i < n; ++i) v.set(i, true);
    return v;
}

}  // namespace

TEST_CASE("identity functionals reproduce the identity map") {
    for (std::uint64_t n = 1; n <= 8; ++n) {
        ModuleMap p = p_map(n, n);
        ModuleMap id = identity_map(weight_module(n).mod);
        for (int d = p.source->lo(); d <= p.source->hi(); ++d)
            CHECK(p.block(d) == id.block(d));
        CHECK(p.a_linear);
    }
}

TEST_CASE("maps up in weight are zero") {
    ModuleMap z = p_map(4, 6);
    for (int d = z.source->lo(); d <= z.source->hi(); ++d)
        CHECK(z.block(d).is_zero());
}

TEST_CASE("every top functional extends to a certified map") {
    for (std::uint64_t n = 2; n <= 12; ++n) {
        const WeightModule& w = weight_module(n);
        for (std::uint64_t l = alpha2(n); l <= n; ++l) {
            int dim_l = w.mod->dim(int(l));
            for (int c = 0; c < dim_l; ++c) {
                F2Vec phi{std::size_t(dim_l)};
                phi.set(std::size_t(c), true);
                HomSolveResult hs = hom_solve(view_of(w.mod), l, phi);
                CHECK(hs.unique);
                CHECK(hs.verified);
                /* the top block is the functional itself */
                CHECK(hs.block(int(l)).row(0) == phi);
            }
        }
    }
}

TEST_CASE("solutions are linear in the functional") {
    const WeightModule& w = weight_module(6);
    int dim4 = w.mod->dim(4);
    REQUIRE(dim4 == 1);
    (void)dim4;
    const std::uint64_t l = 3;
    int dim_l = w.mod->dim(3);
    REQUIRE(dim_l == 2);
    F2Vec e0(2), e1(2), both(2);
    e0.set(0, true);
    e1.set(1, true);
    both.set(0, true);
    both.set(1, true);
    HomSolveResult a = hom_solve(view_of(w.mod), l, e0);
    HomSolveResult b = hom_solve(view_of(w.mod), l, e1);
    HomSolveResult c = hom_solve(view_of(w.mod), l, both);
    for (int d = a.target_lo; d <= int(l); ++d) {
        F2Matrix sum = a.block(d);
        for (std::size_t r = 0; r < sum.rows(); ++r) {
            F2Vec rb = b.block(d).row(r);
            F2Vec rs = sum.row(r);
            rs ^= rb;
            sum.set_row(r, rs);
        }
        CHECK(sum == c.block(d));
    }
}

TEST_CASE("the zero functional solves to the zero map") {
    const WeightModule& w = weight_module(9);
    HomSolveResult hs = hom_solve(view_of(w.mod), 5, F2Vec(std::size_t(w.mod->dim(5))));
    for (int d = hs.target_lo; d <= 5; ++d) CHECK(hs.block(d).is_zero());
}

TEST_CASE("a window that stops below the target degree is refused") {
    CHECK_THROWS_AS(hom_solver(weight_module(4).mod, 6, ones(1)),
                    std::invalid_argument);
}

TEST_CASE("wrapped solver pads the map across the full source range") {
    ModuleMap p = p_map(10, 4);
    CHECK(p.a_linear);
    CHECK(p.source->hi() == 10);
    for (int d = 5; d <= 10; ++d) {
        CHECK(int(p.block(d).rows()) == 0);  // J(4) stops at degree 4
    }
    CHECK_NOTHROW(p.verify_a_linear(p.source->span()));
}
