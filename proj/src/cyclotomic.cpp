#include "stratsum/cyclotomic.hpp"

#include <functional>
#include <map>
#include <mutex>

namespace stratsum {

namespace {

// Exact division of polynomials over Z, quotient must be integral.
std::vector<mpz_class> poly_divide(const std::vector<mpz_class>& num, const std::vector<mpz_class>& den) {
    std::vector<mpz_class> rem = num;
    if (den.empty() || den.back() == 0) throw semantic_error("poly_divide: bad divisor");
    const int dn = static_cast<int>(den.size()) - 1;
    const int qn = static_cast<int>(rem.size()) - 1 - dn;
    if (qn < 0) throw semantic_error("poly_divide: divisor degree too large");
    std::vector<mpz_class> q(qn + 1, 0);
    for (int i = qn; i >= 0; --i) {
        mpz_class lead = rem[i + dn];
        if (lead == 0) continue;
        if (!mpz_divisible_p(lead.get_mpz_t(), den.back().get_mpz_t()))
            throw semantic_error("poly_divide: non-exact division");
        mpz_class f = lead / den.back();
        q[i] = f;
        for (int j = 0; j <= dn; ++j) rem[i + j] -= f * den[j];
    }
    for (const auto& r : rem)
        if (r != 0) throw semantic_error("poly_divide: nonzero remainder");
    return q;
}

std::vector<mpz_class> poly_mul(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b) {
    std::vector<mpz_class> out(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

}  // namespace

const std::vector<mpz_class>& cyclotomic_polynomial(int m) {
    static std::map<int, std::vector<mpz_class>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    if (m < 1) throw semantic_error("cyclotomic order must be positive");
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;

    std::function<const std::vector<mpz_class>&(int)> get = [&](int k) -> const std::vector<mpz_class>& {
        auto found = cache.find(k);
        if (found != cache.end()) return found->second;
        std::vector<mpz_class> num(k + 1, 0);  // x^k - 1
        num[0] = -1;
        num[k] = 1;
        std::vector<mpz_class> den{1};
        for (int d = 1; d < k; ++d)
            if (k % d == 0) den = poly_mul(den, get(d));
        return cache.emplace(k, poly_divide(num, den)).first->second;
    };
    return get(m);
}

int euler_phi(int m) {
    return static_cast<int>(cyclotomic_polynomial(m).size()) - 1;
}

RootOfUnity::RootOfUnity(int m_, long long k_) : m(m_) {
    if (m < 1) throw semantic_error("root order must be positive");
    long long r = k_ % m;
    if (r < 0) r += m;
    k = static_cast<int>(r);
}

RootOfUnity RootOfUnity::times(const RootOfUnity& o) const {
    if (m != o.m) throw Error("modulus_mismatch", "root orders differ");
    return RootOfUnity(m, static_cast<long long>(k) + o.k);
}

CyclotomicInt::CyclotomicInt(int m) : m_(m) {
    c_.assign(euler_phi(m_), 0);
}

CyclotomicInt CyclotomicInt::from_integer(int m, const mpz_class& v) {
    CyclotomicInt out(m);
    std::vector<mpz_class> raw(1, v);
    out.reduce(std::move(raw));
    return out;
}

CyclotomicInt CyclotomicInt::from_root(const RootOfUnity& r) {
    CyclotomicInt out(r.m);
    std::vector<mpz_class> raw(r.k + 1, 0);
    raw[r.k] = 1;
    out.reduce(std::move(raw));
    return out;
}

CyclotomicInt CyclotomicInt::from_exponent_counts(int m, const std::vector<mpz_class>& counts) {
    if (counts.size() != static_cast<size_t>(m)) throw semantic_error("exponent count vector must have length m");
    CyclotomicInt out(m);
    out.reduce(counts);
    return out;
}

void CyclotomicInt::reduce(std::vector<mpz_class> raw) {
    const auto& phi = cyclotomic_polynomial(m_);
    const int deg = static_cast<int>(phi.size()) - 1;
    // Long division by the monic Phi_m; remainder is canonical.
    for (int i = static_cast<int>(raw.size()) - 1; i >= deg; --i) {
        if (raw[i] == 0) continue;
        mpz_class f = raw[i];
        for (int j = 0; j <= deg; ++j) raw[i - deg + j] -= f * phi[j];
    }
    c_.assign(deg, 0);
    for (int i = 0; i < deg && i < static_cast<int>(raw.size()); ++i) c_[i] = raw[i];
}

CyclotomicInt CyclotomicInt::operator+(const CyclotomicInt& o) const {
    if (m_ != o.m_) throw Error("modulus_mismatch", "cyclotomic orders differ");
    CyclotomicInt out(m_);
    for (size_t i = 0; i < c_.size(); ++i) out.c_[i] = c_[i] + o.c_[i];
    return out;
}

CyclotomicInt CyclotomicInt::operator-(const CyclotomicInt& o) const {
    if (m_ != o.m_) throw Error("modulus_mismatch", "cyclotomic orders differ");
    CyclotomicInt out(m_);
    for (size_t i = 0; i < c_.size(); ++i) out.c_[i] = c_[i] - o.c_[i];
    return out;
}

CyclotomicInt CyclotomicInt::operator*(const CyclotomicInt& o) const {
    if (m_ != o.m_) throw Error("modulus_mismatch", "cyclotomic orders differ");
    CyclotomicInt out(m_);
    if (is_zero() || o.is_zero()) return out;
    std::vector<mpz_class> raw(c_.size() + o.c_.size() - 1, 0);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) raw[i + j] += c_[i] * o.c_[j];
    }
    out.reduce(std::move(raw));
    return out;
}

CyclotomicInt CyclotomicInt::operator-() const {
    CyclotomicInt out(m_);
    for (size_t i = 0; i < c_.size(); ++i) out.c_[i] = -c_[i];
    return out;
}

CyclotomicInt CyclotomicInt::times_integer(const mpz_class& v) const {
    CyclotomicInt out(m_);
    for (size_t i = 0; i < c_.size(); ++i) out.c_[i] = c_[i] * v;
    return out;
}

bool CyclotomicInt::operator==(const CyclotomicInt& o) const {
    return m_ == o.m_ && c_ == o.c_;
}

bool CyclotomicInt::is_zero() const {
    for (const auto& v : c_)
        if (v != 0) return false;
    return true;
}

mpz_class CyclotomicInt::content() const {
    mpz_class g = 0;
    for (const auto& v : c_) {
        mpz_class a = abs(v);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
    }
    return g;
}

std::string CyclotomicInt::to_string() const {
    std::string out = "[";
    for (size_t i = 0; i < c_.size(); ++i) {
        if (i) out += ", ";
        out += c_[i].get_str();
    }
    out += "]";
    return out;
}

}  // namespace stratsum
