#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "stratsum/cocycle.hpp"
#include "stratsum/directed.hpp"

namespace stratsum {

enum class MoveKind : uint8_t {
    BulkSubdivide,      // 1 -> d+1 on a top simplex; target: {top id}
    BulkVertexRemove,   // d+1 -> 1; target: {bulk vertex id}
    BulkFlip,           // 2 -> 2 (d=2) / 2 -> 3 (d=3); target: {(d-1)-simplex id}
    BulkFlipInverse,    // 3 -> 2, d=3 only; target: {edge id}
    DefectSubdivide,    // suspended 1 -> d in the defect; target: {(d-1)-simplex id}
    DefectVertexRemove, // suspended d -> 1; target: {defect vertex id}
    DefectFlip          // suspended 2 -> 2, d=3 only; target: {edge id}
};

const char* move_kind_name(MoveKind k);

struct MoveSpec {
    MoveKind kind = MoveKind::BulkSubdivide;
    std::vector<int> target;
    int insert_rank = -1;  // stratum-order slot for a created vertex; -1 = append
};

// Bulk Pachner moves.  Throws Error("not_applicable") when the configuration
// is absent or the result would not be simplicial/valid,
// Error("stratum_violation") when the targeted face lies in the defect.
DirectedTriangulation apply_bulk_pachner(const DirectedTriangulation& t, const MoveSpec& m);

// Extended moves: suspensions of (d-1)-dimensional Pachner moves performed in
// the defect.  Additionally throws Error("side_structure_violation") when a
// targeted defect simplex is not flanked by one inbound and one outbound top
// simplex.
DirectedTriangulation apply_extended_move(const DirectedTriangulation& t, const MoveSpec& m);

enum class MoveMix : uint8_t { Mixed, BulkOnly, ExtendedOnly };

struct FuzzOptions {
    uint64_t seed = 0;
    int steps = 20;
    MoveMix mix = MoveMix::Mixed;
};

struct FuzzStep {
    MoveSpec move;
    bool applied = false;
    std::string note;        // error code for skipped candidates
    std::string invariant;   // decimal, after the move
    std::string statesum;    // canonical form, empty when untwisted
    bool value_matches = true;
};

struct FuzzReport {
    std::string initial_invariant;
    std::string initial_statesum;
    std::vector<FuzzStep> steps;
    int applied_count = 0;
    bool all_equal = true;
    std::string to_text() const;
};

// Applies random applicable moves, recomputing the counting invariant (and
// the twisted sum when alpha is given) after each; deterministic per seed.
FuzzReport fuzz_invariance(const DirectedTriangulation& t, const Gamma2Parcel& p,
                           const PartialCocycle* alpha, const FuzzOptions& opt);

}  // namespace stratsum
