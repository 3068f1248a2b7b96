#include "stratsum/statesum.hpp"

namespace stratsum {

mpz_class StateSumValue::denominator() const {
    mpz_class den = 1;
    for (int i = 0; i < -bulk_exponent; ++i) den *= bulk_fiber;
    for (int i = 0; i < -defect_exponent; ++i) den *= defect_fiber;
    return den;
}

std::pair<CyclotomicInt, mpz_class> StateSumValue::canonical() const {
    mpz_class den = denominator();
    const mpz_class cont = sum.content();
    if (cont == 0) return {CyclotomicInt(m), mpz_class(1)};
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), cont.get_mpz_t(), den.get_mpz_t());
    if (g == 1) return {sum, den};
    CyclotomicInt reduced(m);
    std::vector<mpz_class> coeffs = sum.coeffs();
    std::vector<mpz_class> counts(m, 0);
    // divide every coefficient exactly by g
    for (auto& v : coeffs) v /= g;
    // rebuild through from_exponent_counts-compatible path: coefficients are
    // already canonical residues, so just place them directly
    for (size_t i = 0; i < coeffs.size() && i < counts.size(); ++i) counts[i] = coeffs[i];
    reduced = CyclotomicInt::from_exponent_counts(m, counts);
    return {reduced, den / g};
}

bool StateSumValue::equals(const StateSumValue& o) const {
    if (m != o.m) return false;
    const CyclotomicInt lhs = sum.times_integer(o.denominator());
    const CyclotomicInt rhs = o.sum.times_integer(denominator());
    return lhs == rhs;
}

std::string StateSumValue::to_string() const {
    auto [num, den] = canonical();
    return "(1/" + den.get_str() + ") * " + num.to_string() + " (zeta order " + std::to_string(m) + ")";
}

StateSumValue twisted_state_sum(const DirectedTriangulation& t, const Gamma2Parcel& p,
                                const PartialCocycle& alpha) {
    if (alpha.d != t.base.dim)
        throw Error("dimension_mismatch", "cocycle dimension " + std::to_string(alpha.d) +
                                              " does not match complex dimension " + std::to_string(t.base.dim));
    if (!alpha.domain.matches(p))
        throw Error("domain_coverage", "cocycle domain does not match the parcel");

    const int d = t.base.dim;
    const int m = alpha.m;
    const size_t n_tops = t.base.simplices[d].size();

    // Precompute per top simplex: the long-path edge ids and the sign.
    std::vector<std::vector<int>> paths(n_tops);
    std::vector<int> signs(n_tops);
    for (size_t s = 0; s < n_tops; ++s) {
        paths[s] = long_path_edges(t, static_cast<int>(s));
        signs[s] = orientation_sign(t, static_cast<int>(s));
    }

    std::vector<mpz_class> counts(m, 0);
    std::vector<ParcelArrow> tuple(d);
    for_each_coloring(t, p, ColoringMode::All, [&](const Coloring& col) {
        long long e = 0;
        for (size_t s = 0; s < n_tops; ++s) {
            for (int i = 0; i < d; ++i) {
                const int eid = paths[s][i];
                tuple[i] = {t.edge_word[eid], col.arrows[eid]};
            }
            e += signs[s] * alpha.value(tuple).k;
        }
        counts[((e % m) + m) % m] += 1;
    });

    StateSumValue out;
    out.m = m;
    out.sum = CyclotomicInt::from_exponent_counts(m, counts);
    out.bulk_fiber = p.bulk.n;
    out.defect_fiber = p.defect.n;
    const auto sc = strata_counts(t.base);
    out.bulk_exponent = sc.bulk_components - sc.bulk_vertices;
    out.defect_exponent = sc.defect_components - sc.defect_vertices;
    return out;
}

}  // namespace stratsum
