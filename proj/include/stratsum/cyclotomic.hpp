#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "stratsum/error.hpp"

namespace stratsum {

// m-th cyclotomic polynomial as a monic integer coefficient vector
// (index = degree).  Computed by dividing x^m - 1 by the product of the
// proper-divisor cyclotomics; memoized.
const std::vector<mpz_class>& cyclotomic_polynomial(int m);

int euler_phi(int m);

// A primitive-root power: zeta_m^k.
struct RootOfUnity {
    int m = 1;
    int k = 0;  // reduced mod m

    RootOfUnity() = default;
    RootOfUnity(int m_, long long k_);

    RootOfUnity inverse() const { return RootOfUnity(m, -k); }
    RootOfUnity times(const RootOfUnity& o) const;
    RootOfUnity pow(long long e) const { return RootOfUnity(m, static_cast<long long>(k) * e); }
    bool is_one() const { return k == 0; }
    bool operator==(const RootOfUnity&) const = default;
};

// Element of Z[zeta_m], stored as the canonical residue mod the m-th
// cyclotomic polynomial.  Equality of values is equality of coefficient
// vectors.
class CyclotomicInt {
public:
    explicit CyclotomicInt(int m = 1);
    static CyclotomicInt from_integer(int m, const mpz_class& v);
    static CyclotomicInt from_root(const RootOfUnity& r);
    // Sum of c_k * zeta^k given per-exponent multiplicities (size m).
    static CyclotomicInt from_exponent_counts(int m, const std::vector<mpz_class>& counts);

    int order() const { return m_; }
    const std::vector<mpz_class>& coeffs() const { return c_; }

    CyclotomicInt operator+(const CyclotomicInt& o) const;
    CyclotomicInt operator-(const CyclotomicInt& o) const;
    CyclotomicInt operator*(const CyclotomicInt& o) const;
    CyclotomicInt operator-() const;
    CyclotomicInt times_integer(const mpz_class& v) const;
    bool operator==(const CyclotomicInt& o) const;
    bool is_zero() const;

    // gcd of all coefficients (0 for the zero element).
    mpz_class content() const;

    std::string to_string() const;  // "[c0, c1, ...]"

private:
    void reduce(std::vector<mpz_class> raw);  // arbitrary degree -> canonical
    int m_;
    std::vector<mpz_class> c_;  // size = deg(Phi_m)
};

}  // namespace stratsum
