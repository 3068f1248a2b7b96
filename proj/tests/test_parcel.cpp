#include "doctest.h"

#include <random>
#include <set>
#include <tuple>

#include "stratsum/parcel.hpp"
#include "support/groups.hpp"

using namespace stratsum;

namespace {

Gamma2Parcel z2_parcel() {
    return build_group_parcel(cyclic_group(2), trivial_group(), {0, 0, 1}, {0, 0, 0});
}

// Brute-force double coset |L * mid * R| inside L x R x Z.
long long oracle_double_coset_size(const FiniteGroupTable& gb, const FiniteGroupTable& gd, const GTriple& mid,
                                   bool bulk_left) {
    std::set<std::tuple<int, int, long long>> seen;
    const auto& left = bulk_left ? gb : gd;
    const auto& right = bulk_left ? gd : gb;
    for (int l = 0; l < left.n; ++l)
        for (int r = 0; r < right.n; ++r) {
            const int b = bulk_left ? gb.times(l, mid.b) : gb.times(mid.b, r);
            const int d = bulk_left ? gd.times(mid.d, r) : gd.times(l, mid.d);
            seen.insert({b, d, mid.z});
        }
    return static_cast<long long>(seen.size());
}

}  // namespace

TEST_CASE("smallest nontrivial parcel validates") {
    auto p = z2_parcel();
    CHECK(p.bulk.n == 2);
    CHECK(p.defect.n == 1);
    CHECK(p.n_into == 2);
    CHECK(p.n_out == 2);
    CHECK(validate_parcel(p).ok());
}

TEST_CASE("monoid table in the bulk fiber fails the group check") {
    Gamma2Parcel p = z2_parcel();
    // left-zero monoid on two elements: 0 absorbs, not a group
    p.bulk.mul = {0, 0, 0, 1};
    p.bulk.inv = {0, 1};
    auto rep = validate_parcel(p);
    CHECK_FALSE(rep.ok());
    CHECK_FALSE(rep.find("bulk_identity_fiber_group")->ok);
}

TEST_CASE("empty generator fiber fails surjectivity") {
    // shape checks allow zero-size fibers only through direct construction
    Gamma2Parcel p;
    p.bulk = cyclic_group(2);
    p.defect = trivial_group();
    p.n_into = 0;
    p.n_out = 1;
    p.act_bulk_into = {};
    p.act_into_defect = {};
    p.act_defect_out = {0};
    p.act_out_bulk = {0, 0};
    auto rep = validate_parcel(p);
    CHECK_FALSE(rep.ok());
    CHECK_FALSE(rep.find("surjective_on_arrows")->ok);
}

TEST_CASE("compose: group multiplication, actions and error cases") {
    auto p = z2_parcel();

    // bulk group multiplication over the bulk identity word
    auto r = compose({Word::BulkId, 1}, {Word::BulkId, 1}, p);
    CHECK(r.word == Word::BulkId);
    CHECK(r.elem == p.bulk.id);

    // left action of the bulk group on the inbound fiber
    const int x0 = 0;
    auto bx = compose({Word::BulkId, 1}, {Word::IntoDefect, x0}, p);
    CHECK(bx.word == Word::IntoDefect);
    CHECK(bx.elem != x0);  // the nontrivial element acts freely here

    CHECK_THROWS_AS(compose({Word::IntoDefect, 0}, {Word::OutOfDefect, 0}, p), Error);
    try {
        compose({Word::IntoDefect, 0}, {Word::OutOfDefect, 0}, p);
    } catch (const Error& e) {
        CHECK(e.code() == "word_too_long");
    }
    try {
        compose({Word::BulkId, 0}, {Word::DefectId, 0}, p);
    } catch (const Error& e) {
        CHECK(e.code() == "not_composable");
    }
}

TEST_CASE("build_group_parcel: fiber sizes match the brute-force double cosets") {
    auto gb = cyclic_group(2);
    auto gd = trivial_group();
    auto p = build_group_parcel(gb, gd, {0, 0, 1}, {0, 0, 0});
    CHECK(p.n_into == oracle_double_coset_size(gb, gd, {0, 0, 1}, true));
    CHECK(p.n_out == oracle_double_coset_size(gb, gd, {0, 0, 0}, false));
    CHECK(p.n_into == 2);
    CHECK(p.n_out == 2);

    auto q = build_group_parcel(trivial_group(), trivial_group(), {0, 0, 1}, {0, 0, 0});
    CHECK(q.bulk.n == 1);
    CHECK(q.defect.n == 1);
    CHECK(q.n_into == 1);
    CHECK(q.n_out == 1);

    CHECK_THROWS_AS(build_group_parcel(gb, gd, {0, 0, 1}, {0, 0, -1}), Error);
    try {
        build_group_parcel(gb, gd, {0, 0, 1}, {0, 0, -1});
    } catch (const Error& e) {
        CHECK(e.code() == "infinite_order_violation");
    }
}

TEST_CASE("fiber_size by path word") {
    auto p = z2_parcel();
    CHECK(fiber_size(p, {Obj::Bulk, {}}) == 2);
    CHECK(fiber_size(p, {Obj::Defect, {}}) == 1);
    CHECK(fiber_size(p, {Obj::Bulk, {Gen::IntoDefect}}) == 2);
    CHECK(fiber_size(p, {Obj::Defect, {Gen::OutOfDefect}}) == 2);
    CHECK_THROWS(fiber_size(p, {Obj::Bulk, {Gen::IntoDefect, Gen::OutOfDefect}}));
    // letters must chain
    CHECK_THROWS(validate_path_word({Obj::Bulk, {Gen::OutOfDefect}}));
}

TEST_CASE("randomized group parcels validate and mixed associativity holds") {
    std::vector<FiniteGroupTable> groups{trivial_group(), cyclic_group(2), cyclic_group(3), cyclic_group(4),
                                         testsupport::klein_four(), testsupport::symmetric3()};
    std::mt19937 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        const auto& gb = groups[rng() % groups.size()];
        const auto& gd = groups[rng() % groups.size()];
        GTriple phi{static_cast<int>(rng() % gb.n), static_cast<int>(rng() % gd.n),
                    static_cast<long long>(rng() % 3)};
        GTriple psi{static_cast<int>(rng() % gb.n), static_cast<int>(rng() % gd.n),
                    static_cast<long long>(1 + rng() % 3)};
        if (phi.z + psi.z == 0) continue;
        auto p = build_group_parcel(gb, gd, phi, psi);
        CHECK(validate_parcel(p).ok());
        CHECK(p.n_into == oracle_double_coset_size(gb, gd, phi, true));

        // (b.x).h == b.(x.h) through compose
        for (int rep = 0; rep < 10; ++rep) {
            ParcelArrow b{Word::BulkId, static_cast<int>(rng() % p.bulk.n)};
            ParcelArrow x{Word::IntoDefect, static_cast<int>(rng() % p.n_into)};
            ParcelArrow h{Word::DefectId, static_cast<int>(rng() % p.defect.n)};
            auto lhs = compose(compose(b, x, p), h, p);
            auto rhs = compose(b, compose(x, h, p), p);
            CHECK(lhs == rhs);
        }
    }
}
