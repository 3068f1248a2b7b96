#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "stratsum/group_table.hpp"

namespace stratsum {

// The base graph has two vertices (bulk and defect) and two generating edges:
// into the defect (bulk -> defect) and out of it (defect -> bulk).
enum class Obj : uint8_t { Bulk, Defect };
enum class Gen : uint8_t { IntoDefect, OutOfDefect };

inline Obj gen_source(Gen g) { return g == Gen::IntoDefect ? Obj::Bulk : Obj::Defect; }
inline Obj gen_target(Gen g) { return g == Gen::IntoDefect ? Obj::Defect : Obj::Bulk; }

// A word in the free path category on the base graph.
struct PathWord {
    Obj source = Obj::Bulk;
    std::vector<Gen> letters;

    Obj target() const;
    bool operator==(const PathWord&) const = default;
};

// Throws semantic_error if consecutive letters do not chain.
void validate_path_word(const PathWord& w);

// The four words of length <= 1; everything the state-sum machinery colors with.
enum class Word : uint8_t { BulkId, DefectId, IntoDefect, OutOfDefect };

Obj word_source(Word w);
Obj word_target(Word w);
const char* word_name(Word w);
PathWord to_path_word(Word w);

// Element of G = Gbulk x Gdefect x Z, used to label parcel arrows for cocycle
// pullback.  Indices refer to the parcel's own B and D tables.
struct GTriple {
    int b = 0;
    int d = 0;
    long long z = 0;
    bool operator==(const GTriple&) const = default;
};

struct GLabel {
    std::vector<GTriple> on_bulk;     // per B element
    std::vector<GTriple> on_defect;   // per D element
    std::vector<GTriple> on_into;     // per I element
    std::vector<GTriple> on_out;      // per W element
};

// Regular fiber-finite parcel: groups over the two identity words, finite
// biacted sets over the two generators.  Composition is diagrammatic (first
// argument first), so the left action on I is "bulk loop, then crossing".
struct Gamma2Parcel {
    FiniteGroupTable bulk;    // fiber over the bulk identity
    FiniteGroupTable defect;  // fiber over the defect identity
    int n_into = 0;           // |fiber over IntoDefect|
    int n_out = 0;            // |fiber over OutOfDefect|
    std::vector<int> act_bulk_into;    // bulk.n x n_into: b . x
    std::vector<int> act_into_defect;  // n_into x defect.n: x . h
    std::vector<int> act_defect_out;   // defect.n x n_out: h . w
    std::vector<int> act_out_bulk;     // n_out x bulk.n: w . b
    std::optional<GLabel> glabel;

    int fiber_count(Word w) const;
    GTriple label(Word w, int elem) const;  // throws Error("missing_glabel")
    GTriple triple_times(const GTriple& a, const GTriple& b) const;
};

struct ParcelArrow {
    Word word = Word::BulkId;
    int elem = 0;
    bool operator==(const ParcelArrow&) const = default;
};

// Structural sanity (table sizes and ranges).  Throws semantic_error.
void check_parcel_shape(const Gamma2Parcel& p);

// Full axiom report: group axioms for both identity fibers, action axioms,
// commuting of left/right actions, surjectivity on arrows, and glabel
// equivariance/injectivity when a labelling is present.
ValidationReport validate_parcel(const Gamma2Parcel& p);

// Composition of two arrows whose concatenated word has length <= 1.
// Throws Error("not_composable") on object mismatch and Error("word_too_long")
// when both lie over generators.
ParcelArrow compose(const ParcelArrow& f, const ParcelArrow& g, const Gamma2Parcel& p);

// Fiber cardinality over a word of length <= 1.
long long fiber_size(const Gamma2Parcel& p, const PathWord& w);

// The paper-style construction inside Gb x Gd x Z: B and D embed as the
// coordinate subgroups, the crossing fibers are the double cosets of phi and
// psi, and glabel is the inclusion.  Requires the z component of phi*psi to be
// nonzero; throws Error("infinite_order_violation") otherwise.
Gamma2Parcel build_group_parcel(const FiniteGroupTable& g_bulk, const FiniteGroupTable& g_defect,
                                const GTriple& phi, const GTriple& psi);

}  // namespace stratsum
