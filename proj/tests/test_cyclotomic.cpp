#include "doctest.h"

#include "stratsum/cyclotomic.hpp"

using namespace stratsum;

namespace {

std::vector<mpz_class> poly(std::vector<long> v) {
    std::vector<mpz_class> out;
    for (long x : v) out.push_back(x);
    return out;
}

}  // namespace

TEST_CASE("cyclotomic polynomials match the known tables") {
    CHECK(cyclotomic_polynomial(1) == poly({-1, 1}));
    CHECK(cyclotomic_polynomial(2) == poly({1, 1}));
    CHECK(cyclotomic_polynomial(3) == poly({1, 1, 1}));
    CHECK(cyclotomic_polynomial(4) == poly({1, 0, 1}));
    CHECK(cyclotomic_polynomial(6) == poly({1, -1, 1}));
    CHECK(cyclotomic_polynomial(8) == poly({1, 0, 0, 0, 1}));
    CHECK(cyclotomic_polynomial(12) == poly({1, 0, -1, 0, 1}));
    CHECK(cyclotomic_polynomial(16) == poly({1, 0, 0, 0, 0, 0, 0, 0, 1}));
    CHECK(euler_phi(12) == 4);
}

TEST_CASE("zeta_4 squared is minus one") {
    auto i = CyclotomicInt::from_root(RootOfUnity(4, 1));
    auto minus_one = CyclotomicInt::from_integer(4, -1);
    CHECK(i * i == minus_one);
}

TEST_CASE("1 + zeta_3 + zeta_3^2 vanishes") {
    auto sum = CyclotomicInt::from_integer(3, 1) + CyclotomicInt::from_root(RootOfUnity(3, 1)) +
               CyclotomicInt::from_root(RootOfUnity(3, 2));
    CHECK(sum.is_zero());
}

TEST_CASE("root arithmetic") {
    RootOfUnity a(6, 4), b(6, 5);
    CHECK(a.times(b) == RootOfUnity(6, 3));
    CHECK(a.inverse() == RootOfUnity(6, 2));
    CHECK(a.pow(-5) == RootOfUnity(6, -20));
    CHECK(RootOfUnity(5, 7).k == 2);
    CHECK_THROWS_AS(a.times(RootOfUnity(5, 0)), Error);
}

TEST_CASE("ring arithmetic stays canonical") {
    // (1 + zeta_8)(1 - zeta_8) = 1 - zeta_8^2 = 1 - i
    auto one = CyclotomicInt::from_integer(8, 1);
    auto z = CyclotomicInt::from_root(RootOfUnity(8, 1));
    auto lhs = (one + z) * (one - z);
    auto rhs = one - CyclotomicInt::from_root(RootOfUnity(8, 2));
    CHECK(lhs == rhs);

    // zeta_m^m = 1 exercised through high-exponent counts
    std::vector<mpz_class> counts(6, 0);
    counts[0] = 2;
    counts[3] = 1;  // 2 + zeta_6^3 = 2 - 1 = 1
    auto v = CyclotomicInt::from_exponent_counts(6, counts);
    CHECK(v == CyclotomicInt::from_integer(6, 1));

    CHECK((one - one).is_zero());
    CHECK((one + one).content() == 2);
    CHECK(one.times_integer(5) == CyclotomicInt::from_integer(8, 5));
    CHECK_THROWS_AS(one + CyclotomicInt::from_integer(4, 1), Error);
}
