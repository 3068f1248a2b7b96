#pragma once

#include "stratsum/complex.hpp"
#include "stratsum/parcel.hpp"

namespace stratsum {

// Edge letters along long paths: bulk step, defect step, a step leaving the
// defect (over the outbound generator), a step entering it (over the inbound
// generator).
enum class EdgeLetter : uint8_t { BulkStep, DefectStep, OutStep, InStep };

Word letter_word(EdgeLetter l);

// A validated complex together with derived direction data: per-edge
// orientation, per-top-simplex side and long path, and for every 2-face its
// composable edge pair.
struct DirectedTriangulation {
    StratifiedComplex base;
    std::vector<std::pair<int, int>> edge_dir;  // per 1-simplex: (tail, head)
    std::vector<Word> edge_word;                // per 1-simplex
    std::vector<Side> side;                     // per top simplex
    std::vector<std::vector<int>> long_paths;   // per top simplex: d+1 vertices in order

    struct FaceEdges {
        int first = -1;   // edge (u,v) in face order
        int second = -1;  // edge (v,w)
        int third = -1;   // edge (u,w), the composite
        std::array<int, 3> verts{};  // u, v, w
    };
    std::vector<FaceEdges> faces;  // per 2-simplex; empty when dim == 1

    int edge_id(int u, int v) const;  // unordered lookup into simplices[1]
};

// Derives directions from stratum orders and orientation-induced sides.
// Throws Error("side_conflict") when the defect is not locally two-sided
// (disagreeing or underdetermined sides) and Error("cyclic_tournament") as a
// defensive check.  Requires validate_flag_like to pass.
DirectedTriangulation direct_triangulation(const StratifiedComplex& c);

enum class FaceType : uint8_t {
    Bulk,
    Defect,
    DefectEdgeApexInbound,   // defect edge, apex in the bulk, edges apex -> defect
    DefectEdgeApexOutbound,  // defect edge, apex in the bulk, edges defect -> apex
    BulkEdgeApexReceiving,   // bulk edge, apex in the defect, edges bulk -> apex
    BulkEdgeApexEmitting     // bulk edge, apex in the defect, edges apex -> bulk
};

const char* face_type_name(FaceType t);

struct FaceClass {
    FaceType type;
    DirectedTriangulation::FaceEdges edges;
};

// Classifies a 2-simplex into one of the six types; throws semantic_error on
// configurations that violate the direction invariants.
FaceClass face_type(const DirectedTriangulation& t, int face_id);

enum class PathFormKind : uint8_t {
    AllBulk,        // (a_1 .. a_d)
    DefectToBulk,   // (b_1 .. b_{k-1}, c_k, a_{k+1} .. a_d)
    BulkToDefect    // (a_1 .. a_{k-1}, d_k, b_{k+1} .. b_d)
};

struct LongPathForm {
    PathFormKind kind;
    int cross_index = 0;  // k (1-based) for the mixed forms, 0 otherwise
    std::vector<EdgeLetter> letters;
};

LongPathForm long_path_form(const DirectedTriangulation& t, int top_id);

// +1 when the long-path vertex order orients the simplex like the stored
// orientation bit, else -1.
int orientation_sign(const DirectedTriangulation& t, int top_id);

// Arrows assigned by a coloring to the long-path edges of a top simplex,
// given per-edge arrow elements; helper shared by the state sum.
std::vector<int> long_path_edges(const DirectedTriangulation& t, int top_id);

}  // namespace stratsum
