#pragma once

#include <gmpxx.h>

#include <functional>
#include <vector>

#include "stratsum/cocycle.hpp"
#include "stratsum/directed.hpp"

namespace testsupport {

// Plain odometer over all edge labellings with no propagation: the
// independent oracle for coloring counts and state sums.  Only usable on
// small complexes.
inline mpz_class naive_for_each_coloring(const stratsum::DirectedTriangulation& t,
                                         const stratsum::Gamma2Parcel& p,
                                         const std::function<void(const std::vector<int>&)>& visit) {
    using namespace stratsum;
    const size_t n_edges = t.base.simplices[1].size();
    std::vector<int> fibers(n_edges), assign(n_edges, 0);
    for (size_t e = 0; e < n_edges; ++e) fibers[e] = p.fiber_count(t.edge_word[e]);

    mpz_class count = 0;
    while (true) {
        bool ok = true;
        for (const auto& f : t.faces) {
            const ParcelArrow comp =
                compose({t.edge_word[f.first], assign[f.first]}, {t.edge_word[f.second], assign[f.second]}, p);
            if (comp.elem != assign[f.third]) {
                ok = false;
                break;
            }
        }
        if (ok) {
            ++count;
            if (visit) visit(assign);
        }
        int pos = static_cast<int>(n_edges) - 1;
        while (pos >= 0 && assign[pos] == fibers[pos] - 1) assign[pos--] = 0;
        if (pos < 0) break;
        ++assign[pos];
    }
    return count;
}

inline mpz_class naive_color_count(const stratsum::DirectedTriangulation& t, const stratsum::Gamma2Parcel& p) {
    return naive_for_each_coloring(t, p, nullptr);
}

// Naive twisted sum; returns the per-exponent counts of zeta^k.
inline std::vector<mpz_class> naive_statesum_counts(const stratsum::DirectedTriangulation& t,
                                                    const stratsum::Gamma2Parcel& p,
                                                    const stratsum::PartialCocycle& alpha) {
    using namespace stratsum;
    const int d = t.base.dim;
    std::vector<mpz_class> counts(alpha.m, 0);
    naive_for_each_coloring(t, p, [&](const std::vector<int>& assign) {
        long long e = 0;
        for (size_t s = 0; s < t.base.simplices[d].size(); ++s) {
            const auto eids = long_path_edges(t, static_cast<int>(s));
            std::vector<ParcelArrow> tuple;
            for (int eid : eids) tuple.push_back({t.edge_word[eid], assign[eid]});
            e += orientation_sign(t, static_cast<int>(s)) * alpha.value(tuple).k;
        }
        counts[((e % alpha.m) + alpha.m) % alpha.m] += 1;
    });
    return counts;
}

}  // namespace testsupport
