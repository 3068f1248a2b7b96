#include "doctest.h"

#include <functional>
#include <random>

#include "stratsum/cocycle.hpp"
#include "support/groups.hpp"

using namespace stratsum;

namespace {

Gamma2Parcel parcel_z2() { return build_group_parcel(cyclic_group(2), trivial_group(), {0, 0, 1}, {0, 0, 0}); }
Gamma2Parcel parcel_z2z2() { return build_group_parcel(cyclic_group(2), cyclic_group(2), {0, 0, 1}, {0, 0, 0}); }
Gamma2Parcel parcel_d4() { return build_group_parcel(trivial_group(), cyclic_group(4), {0, 0, 1}, {0, 0, 0}); }
Gamma2Parcel parcel_trivial() { return build_group_parcel(trivial_group(), trivial_group(), {0, 0, 1}, {0, 0, 0}); }

GroupCochain make_cochain(int d, int m, FiniteGroupTable q, std::vector<int> bulk_map, std::vector<int> defect_map,
                          int z_map, const std::function<int(const std::vector<int>&)>& val) {
    GroupCochain c;
    c.d = d;
    c.m = m;
    c.quotient = std::move(q);
    c.bulk_map = std::move(bulk_map);
    c.defect_map = std::move(defect_map);
    c.z_map = z_map;
    long long total = 1;
    for (int i = 0; i < d; ++i) total *= c.quotient.n;
    std::vector<int> args(d, 0);
    for (long long idx = 0; idx < total; ++idx) {
        long long rest = idx;
        for (int i = d - 1; i >= 0; --i) {
            args[i] = static_cast<int>(rest % c.quotient.n);
            rest /= c.quotient.n;
        }
        c.values.push_back(((val(args) % m) + m) % m);
    }
    return c;
}

// Independent alternating-coboundary oracle over integer exponents.
bool oracle_is_cocycle(const GroupCochain& c) {
    const int q = c.quotient.n;
    std::vector<int> t(c.d + 1, 0);
    while (true) {
        long long e = 0;
        for (int i = 0; i <= c.d + 1; ++i) {
            std::vector<int> face;
            for (int k = 0; k <= c.d; ++k) {
                if (k == i - 1 && i >= 1 && i <= c.d) {
                    face.push_back(c.quotient.times(t[k], t[k + 1]));
                    ++k;
                } else if ((i == 0 && k == 0) || (i == c.d + 1 && k == c.d)) {
                    // dropped entry
                } else {
                    face.push_back(t[k]);
                }
            }
            e += (i % 2 == 0 ? 1 : -1) * c.value_at(face);
        }
        if (((e % c.m) + c.m) % c.m != 0) return false;
        int pos = c.d;
        while (pos >= 0 && t[pos] == q - 1) t[pos--] = 0;
        if (pos < 0) return true;
        ++t[pos];
    }
}

// delta of a (d-1)-cochain given by `f`; always a d-cocycle.
GroupCochain coboundary_cochain(int d, int m, const FiniteGroupTable& q, std::vector<int> bulk_map,
                                std::vector<int> defect_map, int z_map,
                                const std::function<int(const std::vector<int>&)>& f) {
    return make_cochain(d, m, q, std::move(bulk_map), std::move(defect_map), z_map,
                        [&](const std::vector<int>& x) {
                            long long e = 0;
                            int sign = 1;
                            {
                                std::vector<int> face(x.begin() + 1, x.end());
                                e += sign * f(face);
                            }
                            sign = -1;
                            for (int i = 1; i < d; ++i) {
                                std::vector<int> face;
                                for (int k = 0; k < d; ++k) {
                                    if (k == i - 1) {
                                        face.push_back(q.times(x[k], x[k + 1]));
                                        ++k;
                                    } else {
                                        face.push_back(x[k]);
                                    }
                                }
                                e += sign * f(face);
                                sign = -sign;
                            }
                            {
                                std::vector<int> face(x.begin(), x.end() - 1);
                                e += sign * f(face);
                            }
                            return static_cast<int>(((e % m) + m) % m);
                        });
}

}  // namespace

TEST_CASE("constant cochain is a cocycle in any dimension") {
    for (int d : {1, 2, 3}) {
        auto c = make_cochain(d, 2, cyclic_group(2), {0, 1}, {0}, 0, [](const std::vector<int>&) { return 0; });
        CHECK(check_group_cocycle(c));
        CHECK(oracle_is_cocycle(c));
    }
}

TEST_CASE("the sign cocycle (-1)^(abc) on Z/2 is a 3-cocycle") {
    auto c = make_cochain(3, 2, cyclic_group(2), {0, 1}, {0}, 0,
                          [](const std::vector<int>& x) { return x[0] * x[1] * x[2]; });
    CHECK(oracle_is_cocycle(c));
    CHECK(check_group_cocycle(c));
}

TEST_CASE("(-1)^(ab) on Z/2 is a 2-cocycle; a first-argument sign is not") {
    // Brute force over all 2^3 tuples shows the bilinear sign form has
    // trivial coboundary (it is the extension cocycle of Z/4 over Z/2).
    auto bilinear = make_cochain(2, 2, cyclic_group(2), {0, 1}, {0}, 0,
                                 [](const std::vector<int>& x) { return x[0] * x[1]; });
    CHECK(oracle_is_cocycle(bilinear));
    CHECK(check_group_cocycle(bilinear));

    auto first_only = make_cochain(2, 2, cyclic_group(2), {0, 1}, {0}, 0,
                                   [](const std::vector<int>& x) { return x[0]; });
    CHECK_FALSE(oracle_is_cocycle(first_only));
    CHECK_FALSE(check_group_cocycle(first_only));
}

TEST_CASE("the standard Z/4 3-cocycle with zeta_4 values") {
    auto c = make_cochain(3, 4, cyclic_group(4), {0}, {0, 1, 2, 3}, 0, [](const std::vector<int>& x) {
        return x[0] * ((x[1] + x[2]) / 4);
    });
    CHECK(oracle_is_cocycle(c));
    CHECK(check_group_cocycle(c));
}

TEST_CASE("pullback through quotient maps") {
    // everything killed: alpha is constant one
    {
        auto p = parcel_trivial();
        auto c = make_cochain(3, 2, cyclic_group(2), {0}, {0}, 0,
                              [](const std::vector<int>& x) { return x[0] * x[1] * x[2]; });
        auto a = pullback(c, p);
        for (int e : a.exponents) CHECK(e == 0);
    }
    // bulk projection: alpha on bulk triples is the sign form
    {
        auto p = parcel_z2();
        auto c = make_cochain(3, 2, cyclic_group(2), {0, 1}, {0}, 0,
                              [](const std::vector<int>& x) { return x[0] * x[1] * x[2]; });
        auto a = pullback(c, p);
        for (int b1 = 0; b1 < 2; ++b1)
            for (int b2 = 0; b2 < 2; ++b2)
                for (int b3 = 0; b3 < 2; ++b3) {
                    std::vector<ParcelArrow> tuple{{Word::BulkId, b1}, {Word::BulkId, b2}, {Word::BulkId, b3}};
                    CHECK(a.value(tuple).k == (b1 * b2 * b3 == 1 ? 1 : 0));
                }
    }
    // missing labelling is an error
    {
        auto p = parcel_z2();
        p.glabel.reset();
        auto c = make_cochain(3, 2, cyclic_group(2), {0, 1}, {0}, 0, [](const std::vector<int>&) { return 0; });
        CHECK_THROWS_AS(pullback(c, p), Error);
    }
}

TEST_CASE("partial cocycle checks: constants and odd-dimension pullbacks pass") {
    auto p = parcel_z2();
    auto one = PartialCocycle::constant_one(p, 3, 2);
    auto rep = check_partial_cocycle(one, p);
    CHECK(rep.coboundary_ok);
    CHECK(rep.extended_move_ok);

    auto c = make_cochain(3, 2, cyclic_group(2), {0, 1}, {0}, 0,
                          [](const std::vector<int>& x) { return x[0] * x[1] * x[2]; });
    auto a = pullback(c, p);
    auto rep2 = check_partial_cocycle(a, p);
    CHECK(rep2.ok());
    CHECK(d3_eight_term_check(a, p));
}

TEST_CASE("even dimension: defect values outside {+-1} break the extended-move condition") {
    auto p = parcel_d4();
    // coboundary of f(k) = zeta_16^k on Q = Z/4: values in {1, i}
    auto c = coboundary_cochain(2, 16, cyclic_group(4), {0}, {0, 1, 2, 3}, 0,
                                [](const std::vector<int>& x) { return x[0]; });
    CHECK(check_group_cocycle(c));
    auto a = pullback(c, p);
    auto rep = check_partial_cocycle(a, p);
    CHECK(rep.coboundary_ok);  // honest group cocycle pulls back to condition 1
    CHECK_FALSE(rep.extended_move_ok);
    CHECK_FALSE(rep.first_extended_failure.empty());
}

TEST_CASE("even dimension: {+-1}-valued defect restriction passes") {
    auto p = parcel_z2z2();
    auto c = make_cochain(2, 2, cyclic_group(2), {0, 1}, {0, 1}, 0,
                          [](const std::vector<int>& x) { return x[0] * x[1]; });
    CHECK(check_group_cocycle(c));
    auto a = pullback(c, p);
    CHECK(check_partial_cocycle(a, p).ok());
}

TEST_CASE("d3 eight-term relation: perturbations break it and the generic check agrees") {
    auto p = parcel_z2z2();
    auto c = make_cochain(3, 4, cyclic_group(2), {0, 1}, {0, 1}, 0,
                          [](const std::vector<int>& x) { return 2 * x[0] * x[1] * x[2]; });
    CHECK(check_group_cocycle(c));
    auto a = pullback(c, p);
    CHECK(d3_eight_term_check(a, p));
    CHECK(check_partial_cocycle(a, p).ok());

    // a single mixed-tuple perturbation by zeta_4 violates the relation
    auto perturbed = a;
    std::vector<ParcelArrow> t{{Word::IntoDefect, 0}, {Word::DefectId, 1}, {Word::DefectId, 1}};
    perturbed.exponents[perturbed.domain.index_of(t)] = (perturbed.exponents[perturbed.domain.index_of(t)] + 1) % 4;
    CHECK_FALSE(d3_eight_term_check(perturbed, p));
    CHECK_FALSE(check_partial_cocycle(perturbed, p).extended_move_ok);

    // a single bulk-triple perturbation instead violates the coboundary
    auto bulk_pert = a;
    std::vector<ParcelArrow> bt{{Word::BulkId, 1}, {Word::BulkId, 1}, {Word::BulkId, 1}};
    bulk_pert.exponents[bulk_pert.domain.index_of(bt)] = (bulk_pert.exponents[bulk_pert.domain.index_of(bt)] + 1) % 4;
    CHECK_FALSE(check_partial_cocycle(bulk_pert, p).coboundary_ok);

    // agreement of the two derivations on random tables, valid or not
    std::mt19937 rng(23);
    for (int trial = 0; trial < 50; ++trial) {
        PartialCocycle r = PartialCocycle::constant_one(p, 3, 4);
        for (auto& e : r.exponents) e = static_cast<int>(rng() % 4);
        CHECK(d3_eight_term_check(r, p) == check_partial_cocycle(r, p).extended_move_ok);
    }
}

TEST_CASE("parity law on randomized coboundary cocycles") {
    std::mt19937 rng(31);
    std::vector<Gamma2Parcel> parcels{parcel_z2(), parcel_z2z2(), parcel_d4()};
    for (int trial = 0; trial < 24; ++trial) {
        const auto& p = parcels[trial % parcels.size()];
        const int m = 8;
        // random quotient = the defect group itself when cyclic, else Z/2
        FiniteGroupTable q = p.defect.n > 1 ? p.defect : cyclic_group(2);
        std::vector<int> bmap(p.bulk.n, q.id), dmap(p.defect.n);
        for (int i = 0; i < p.defect.n; ++i) dmap[i] = p.defect.n > 1 ? i : q.id;
        const int zmap = static_cast<int>(rng() % q.n);
        // ensure commuting images: Q is abelian here
        std::vector<int> table(q.n * q.n);
        for (auto& v : table) v = static_cast<int>(rng() % m);
        auto f2 = [&](const std::vector<int>& x) { return table[x[0] * q.n + x[1]]; };
        auto f1 = [&](const std::vector<int>& x) { return table[x[0]]; };

        // odd d: every cocycle induces a partial cocycle
        auto c3 = coboundary_cochain(3, m, q, bmap, dmap, zmap, f2);
        CHECK(check_group_cocycle(c3));
        auto a3 = pullback(c3, p);
        CHECK(check_partial_cocycle(a3, p).ok());

        // even d: passes exactly when the defect restriction is +-1 valued
        auto c2 = coboundary_cochain(2, m, q, bmap, dmap, zmap, f1);
        CHECK(check_group_cocycle(c2));
        auto a2 = pullback(c2, p);
        bool pm1 = true;
        for (int h1 = 0; h1 < p.defect.n; ++h1)
            for (int h2 = 0; h2 < p.defect.n; ++h2) {
                std::vector<ParcelArrow> tuple{{Word::DefectId, h1}, {Word::DefectId, h2}};
                const int e = a2.value(tuple).k;
                if (e != 0 && e != m / 2) pm1 = false;
            }
        CHECK(check_partial_cocycle(a2, p).ok() == pm1);
    }
}
