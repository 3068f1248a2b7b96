#pragma once

#include "stratsum/cocycle.hpp"
#include "stratsum/coloring.hpp"

namespace stratsum {

// Value of the twisted sum together with its symbolic normalization
// |B|^(s_b - v_b) * |D|^(s_d - v_d).  The raw sum and the exponent data are
// kept; equality and the canonical form divide out the common content.
struct StateSumValue {
    int m = 1;
    CyclotomicInt sum;          // over colorings, before normalization
    int bulk_fiber = 1;         // |B|
    int defect_fiber = 1;       // |D|
    int bulk_exponent = 0;      // s_b - v_b  (non-positive)
    int defect_exponent = 0;    // s_d - v_d

    StateSumValue() : sum(1) {}

    mpz_class denominator() const;  // |B|^(v_b-s_b) * |D|^(v_d-s_d)

    // Reduced pair (numerator, denominator) with content coprime to the
    // denominator; unique per value.
    std::pair<CyclotomicInt, mpz_class> canonical() const;

    bool equals(const StateSumValue& o) const;  // exact, cross-multiplied
    std::string to_string() const;              // canonical one-line form
};

// Evaluates the twisted sum: for every coloring, the product over top
// simplices of alpha on the long-path arrow tuple, raised to the orientation
// sign; summed exactly in Z[zeta_m].  Structural mismatches throw
// Error("dimension_mismatch") / Error("domain_coverage"); the cocycle
// conditions themselves are the caller's to check.
StateSumValue twisted_state_sum(const DirectedTriangulation& t, const Gamma2Parcel& p,
                                const PartialCocycle& alpha);

}  // namespace stratsum
