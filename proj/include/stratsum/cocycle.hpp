#pragma once

#include <vector>

#include "stratsum/cyclotomic.hpp"
#include "stratsum/parcel.hpp"

namespace stratsum {

// Admissible composable d-tuples of parcel arrows: every entry lies over an
// identity or a single generator, and at most one entry lies over a
// generator.  The domain is enumerated densely in a fixed order:
//   all-bulk tuples, all-defect tuples, then for each position j the tuples
//   with the inbound generator at j (bulk^j, I, defect^(d-1-j)), then the
//   outbound ones (defect^j, W, bulk^(d-1-j)).
struct AdmissibleDomain {
    int d = 1;
    int n_bulk = 1, n_defect = 1, n_into = 1, n_out = 1;

    static AdmissibleDomain of(const Gamma2Parcel& p, int d);

    long long size() const;
    long long index_of(const std::vector<ParcelArrow>& tuple) const;  // throws on inadmissible
    std::vector<ParcelArrow> tuple_at(long long index) const;
    bool matches(const Gamma2Parcel& p) const;
};

// Scalar function on the admissible domain, values in mu_m as exponents.
struct PartialCocycle {
    int d = 1;
    int m = 1;
    AdmissibleDomain domain;
    std::vector<int> exponents;  // size = domain.size(), each in [0, m)

    RootOfUnity value(const std::vector<ParcelArrow>& tuple) const;
    static PartialCocycle constant_one(const Gamma2Parcel& p, int d, int m);
    PartialCocycle inverted() const;  // pointwise inverse
};

// d-cochain on a designated finite quotient Q of G = B x D x Z, with the
// quotient map given by homomorphisms on the three factors.
struct GroupCochain {
    int d = 1;
    int m = 1;
    FiniteGroupTable quotient;
    std::vector<int> bulk_map;    // B element -> Q element
    std::vector<int> defect_map;  // D element -> Q element
    int z_map = 0;                // image of the z generator
    std::vector<int> values;      // row-major over Q^d, exponents in [0, m)

    int value_at(const std::vector<int>& args) const;
    int apply_quotient(const GTriple& t) const;
};

// Shape/range checks against a parcel.  Throws semantic_error.
void check_cochain_shape(const GroupCochain& c, const Gamma2Parcel& p);

// True iff the alternating (d+2)-face coboundary product is trivial on all
// (d+1)-tuples over Q.
bool check_group_cocycle(const GroupCochain& c);

// alpha(x_1..x_d) = c(q(glabel(x_1)), ..., q(glabel(x_d))).
PartialCocycle pullback(const GroupCochain& c, const Gamma2Parcel& p);

struct PartialCocycleReport {
    bool coboundary_ok = true;        // condition on admissible (d+1)-tuples
    bool extended_move_ok = true;     // condition on (into, defect^d, out) tuples
    std::string first_coboundary_failure;
    std::string first_extended_failure;
    bool ok() const { return coboundary_ok && extended_move_ok; }
};

PartialCocycleReport check_partial_cocycle(const PartialCocycle& alpha, const Gamma2Parcel& p);

// The d = 3 relation with its eight factors written out; must agree with the
// extended-move component of check_partial_cocycle.
bool d3_eight_term_check(const PartialCocycle& alpha, const Gamma2Parcel& p);

}  // namespace stratsum
