#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bgmod/f2.hpp"
#include "bgmod/poly.hpp"

#include <map>

using namespace bgmod;

namespace {

/* Total-square oracle: T(x_0) = x_0, T(x_k) = x_k + x_{k-1}^2 for k >= 1,
 * extended multiplicatively; Sq^i of a monomial is the degree-(|m|+i) slice
 * of T(m).  Entirely independent of the Cartan convolution in the library. */
Poly total_square(const Monomial& m) {
    Poly acc{Monomial()};
    for (int k = 0; k <= m.top_var(); ++k) {
        Poly factor{Monomial::generator(k)};
        if (k >= 1) factor += Poly(Monomial::generator(k - 1, 2));
        for (std::uint32_t e = 0; e < m.exp(k); ++e) acc = acc * factor;
    }
    return acc;
}

Poly degree_slice(const Poly& p, std::uint64_t d) {
    std::vector<Monomial> keep;
    for (const auto& t : p.terms())
        if (t.degree() == d) keep.push_back(t);
    return Poly::from_terms(std::move(keep));
}

}  // namespace

TEST_CASE("monomial parse and print round-trip") {
    for (const char* s : {"1", "x0", "x1^3", "x0^2*x2", "x0^6", "x1*x2"}) {
        Monomial m = Monomial::parse(s);
        CHECK(m.str() == s);
        CHECK(Monomial::parse(m.str()) == m);
    }
    CHECK_THROWS_AS(Monomial::parse("y3"), std::invalid_argument);
    CHECK_THROWS_AS(Monomial::parse("x"), std::invalid_argument);
    CHECK_THROWS_AS(Monomial::parse("x1^"), std::invalid_argument);
    CHECK_THROWS_AS(Monomial::parse(""), std::invalid_argument);
    CHECK(Poly::parse("0").is_zero());
    Poly p = Poly::parse("x0^2*x2 + x1^3");
    CHECK(p.size() == 2);
    CHECK(p.str() == "x1^3 + x0^2*x2");
}

TEST_CASE("degree, weight, arithmetic") {
    Monomial m = Monomial::parse("x0^2*x2");
    CHECK(m.degree() == 3);
    CHECK(m.weight() == 6);
    CHECK(m.top_var() == 2);
    CHECK((m * Monomial::parse("x1")).str() == "x0^2*x1*x2");
    CHECK(m.divide_by_gen(0).str() == "x0*x2");
    CHECK_THROWS_AS(m.divide_by_gen(1), std::invalid_argument);
    Poly sum = Poly::parse("x1^3") + Poly::parse("x1^3 + x0^2*x2");
    CHECK(sum.str() == "x0^2*x2");
}

TEST_CASE("global order sorts by degree then exponents from x0 up") {
    auto w6 = weight_monomials(6);
    std::vector<std::string> got;
    for (const auto& m : w6) got.push_back(m.str());
    CHECK(got == std::vector<std::string>{"x1*x2", "x1^3", "x0^2*x2", "x0^2*x1^2",
                                          "x0^4*x1", "x0^6"});
    auto w12 = weight_monomials(12);
    std::vector<std::string> deg3;
    for (const auto& m : w12)
        if (m.degree() == 3) deg3.push_back(m.str());
    CHECK(deg3 == std::vector<std::string>{"x2^3", "x1^2*x3"});
}

TEST_CASE("weight enumeration counts binary partitions") {
    CHECK(weight_monomials(0).size() == 1);
    CHECK(weight_monomials(0).front().is_unit());
    for (std::uint64_t n = 0; n <= 24; ++n)
        CHECK(weight_monomials(n).size() == binary_partition_count(n));
    CHECK(binary_partition_count(12) == 20);
    CHECK(binary_partition_count(22) == 74);
    CHECK(binary_partition_count(48) == 692);
    CHECK(binary_partition_count(64) == 1828);
}

TEST_CASE("squares on a single power match the closed form") {
    /* k >= 1: binom(e, j) x_k^{e-j} x_{k-1}^{2j} */
    CHECK(sq_on_power(2, 3, 2).str() == "x1^4*x2");
    CHECK(sq_on_power(2, 3, 1).str() == "x1^2*x2^2");
    CHECK(sq_on_power(1, 2, 1).is_zero());  // binom(2,1) even
    CHECK(sq_on_power(1, 2, 2).str() == "x0^4");
    CHECK(sq_on_power(1, 1, 1).str() == "x0^2");
    /* x_0 carries no positive squares */
    CHECK(sq_on_power(0, 5, 0).str() == "x0^5");
    CHECK(sq_on_power(0, 5, 1).is_zero());
    CHECK(sq_on_power(0, 5, 5).is_zero());
}

TEST_CASE("Cartan squares against the multiplicative total square") {
    for (std::uint64_t n = 1; n <= 9; ++n) {
        for (const auto& m : weight_monomials(n)) {
            Poly total = total_square(m);
            auto table = sq_table(m);
            for (std::uint64_t i = 0; i <= m.degree() + 2; ++i) {
                Poly via_lib = i < table.size() ? table[i] : Poly();
                CHECK(via_lib == degree_slice(total, m.degree() + i));
                CHECK(via_lib == sq(std::uint32_t(i), Poly(m)));
                for (const auto& t : via_lib.terms()) CHECK(t.weight() == n);
            }
        }
    }
}

TEST_CASE("instability: no squares above the degree") {
    for (std::uint64_t n = 1; n <= 10; ++n)
        for (const auto& m : weight_monomials(n)) {
            auto table = sq_table(m);
            CHECK(table.size() <= m.degree() + 1);
        }
}

TEST_CASE("Milnor primitives as derivations") {
    CHECK(qm(0, Poly::parse("x1")).str() == "x0^2");
    CHECK(qm(1, Poly::parse("x2")).str() == "x0^4");
    CHECK(qm(2, Poly::parse("x3")).str() == "x0^8");
    CHECK(qm(1, Poly::parse("x1")).is_zero());
    CHECK(qm(1, Poly::parse("x0")).is_zero());
    /* squares die under any derivation */
    CHECK(qm(1, Poly::parse("x2^2")).is_zero());
    CHECK(qm(1, Poly::parse("x0*x2")).str() == "x0^5");
    /* Leibniz on a product of two odd-exponent variables */
    CHECK(qm(0, Poly::parse("x1*x2")) == Poly::parse("x1^3 + x0^2*x2"));
}

TEST_CASE("commutator recursion equals the derivation") {
    for (std::uint64_t n = 1; n <= 12; ++n)
        for (const auto& mono : weight_monomials(n))
            for (int m = 0; m <= 2; ++m)
                CHECK(qm(m, Poly(mono)) == qm_via_commutator(m, Poly(mono)));
}

TEST_CASE("derivation squares to zero") {
    for (std::uint64_t n = 1; n <= 10; ++n)
        for (const auto& mono : weight_monomials(n))
            for (int m = 0; m <= 2; ++m) CHECK(qm(m, qm(m, Poly(mono))).is_zero());
}
