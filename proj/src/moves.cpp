#include "stratsum/moves.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "stratsum/statesum.hpp"

namespace stratsum {

const char* move_kind_name(MoveKind k) {
    switch (k) {
        case MoveKind::BulkSubdivide: return "bulk_subdivide";
        case MoveKind::BulkVertexRemove: return "bulk_vertex_remove";
        case MoveKind::BulkFlip: return "bulk_flip";
        case MoveKind::BulkFlipInverse: return "bulk_flip_inverse";
        case MoveKind::DefectSubdivide: return "defect_subdivide";
        case MoveKind::DefectVertexRemove: return "defect_vertex_remove";
        case MoveKind::DefectFlip: return "defect_flip";
    }
    return "?";
}

namespace {

std::set<Simplex> defect_closure(const StratifiedComplex& c) {
    std::set<Simplex> out;
    for (const auto& s : c.defect_tops)
        for (unsigned mask = 1; mask < (1u << s.size()); ++mask) {
            Simplex f;
            for (size_t i = 0; i < s.size(); ++i)
                if (mask & (1u << i)) f.push_back(s[i]);
            out.insert(std::move(f));
        }
    return out;
}

std::map<Simplex, int> bits_by_tuple(const std::vector<Simplex>& list, const std::vector<int>& bits,
                                     const std::set<Simplex>& removed) {
    std::map<Simplex, int> out;
    for (size_t i = 0; i < list.size(); ++i)
        if (!removed.count(list[i])) out[list[i]] = bits[i];
    return out;
}

// Inserts a vertex into a stratum's order sequence: existing orders >= rank
// shift up by one.  Returns the order for the new vertex.
int insert_order(std::vector<VertexInfo>& vertices, Stratum s, int rank) {
    int max_order = -1;
    for (const auto& v : vertices)
        if (v.stratum == s) max_order = std::max(max_order, v.order);
    if (rank < 0) return max_order + 1;
    for (auto& v : vertices)
        if (v.stratum == s && v.order >= rank) ++v.order;
    return rank;
}

DirectedTriangulation rebuild(int dim, std::vector<VertexInfo> vertices, const std::vector<Simplex>& tops,
                              const std::vector<Simplex>& defect_tops, const std::map<Simplex, int>& fixed_top,
                              const std::map<Simplex, int>& fixed_defect) {
    auto c = assemble_complex(dim, std::move(vertices), tops, defect_tops);
    try {
        complete_orientations(c, fixed_top, fixed_defect);
    } catch (const Error& e) {
        throw Error("not_applicable", std::string("move result cannot be oriented: ") + e.what());
    }
    auto rep = validate_flag_like(c);
    if (!rep.ok()) throw Error("not_applicable", "move result is invalid:\n" + rep.to_text());
    return direct_triangulation(c);
}

// Drops vertex `w` (which must occur in no simplex) and compacts ids.
void drop_vertex(std::vector<VertexInfo>& vertices, std::vector<Simplex>& tops, std::vector<Simplex>& defects,
                 int w) {
    vertices.erase(vertices.begin() + w);
    auto remap = [&](std::vector<Simplex>& list) {
        for (auto& s : list)
            for (auto& v : s) {
                if (v == w) throw semantic_error("drop_vertex: vertex still used");
                if (v > w) --v;
            }
    };
    remap(tops);
    remap(defects);
}

std::vector<int> top_cofaces_of(const StratifiedComplex& c, const Simplex& f) {
    std::vector<int> out;
    const auto& tops = c.simplices[c.dim];
    for (size_t i = 0; i < tops.size(); ++i)
        if (std::includes(tops[i].begin(), tops[i].end(), f.begin(), f.end())) out.push_back(static_cast<int>(i));
    return out;
}

Simplex set_minus(const Simplex& s, const Simplex& f) {
    Simplex out;
    for (int v : s)
        if (!std::binary_search(f.begin(), f.end(), v)) out.push_back(v);
    return out;
}

Simplex set_union(Simplex s, int v) {
    s.push_back(v);
    std::sort(s.begin(), s.end());
    return s;
}

// Inbound and outbound flanking top simplices of a defect facet.
std::pair<int, int> flanking(const DirectedTriangulation& t, const Simplex& tau) {
    const auto ids = top_cofaces_of(t.base, tau);
    if (ids.size() != 2)
        throw Error("side_structure_violation", "defect simplex does not have exactly two flanking top simplices");
    int in = -1, out = -1;
    for (int i : ids) {
        if (t.side[i] == Side::Inbound) in = i;
        if (t.side[i] == Side::Outbound) out = i;
    }
    if (in < 0 || out < 0)
        throw Error("side_structure_violation",
                    "defect simplex is not flanked by one inbound and one outbound top simplex");
    return {in, out};
}

}  // namespace

DirectedTriangulation apply_bulk_pachner(const DirectedTriangulation& t, const MoveSpec& m) {
    const auto& c = t.base;
    const int d = c.dim;
    if (m.target.size() != 1) throw semantic_error("bulk move expects a single target id");
    const int target = m.target[0];
    const auto dset = defect_closure(c);

    std::vector<Simplex> tops = c.simplices[d];
    std::vector<Simplex> defects = c.defect_tops;
    std::vector<VertexInfo> vertices = c.vertices;
    std::set<Simplex> removed_tops;

    switch (m.kind) {
        case MoveKind::BulkSubdivide: {
            if (target < 0 || target >= static_cast<int>(tops.size()))
                throw Error("not_applicable", "no such top simplex");
            const Simplex sigma = tops[target];
            const int rank = insert_order(vertices, Stratum::Bulk, m.insert_rank);
            const int w = static_cast<int>(vertices.size());
            vertices.push_back({Stratum::Bulk, rank});
            removed_tops.insert(sigma);
            tops.erase(tops.begin() + target);
            for (int i = 0; i <= d; ++i) {
                Simplex nt = sigma;
                nt.erase(nt.begin() + i);
                nt = set_union(nt, w);
                tops.push_back(nt);
            }
            break;
        }
        case MoveKind::BulkVertexRemove: {
            if (target < 0 || target >= static_cast<int>(vertices.size()))
                throw Error("not_applicable", "no such vertex");
            if (vertices[target].stratum != Stratum::Bulk)
                throw Error("stratum_violation", "bulk vertex removal targets a defect vertex");
            std::vector<int> star;
            std::set<int> link;
            for (size_t i = 0; i < tops.size(); ++i)
                if (std::binary_search(tops[i].begin(), tops[i].end(), target)) {
                    star.push_back(static_cast<int>(i));
                    for (int v : tops[i])
                        if (v != target) link.insert(v);
                }
            if (static_cast<int>(star.size()) != d + 1 || static_cast<int>(link.size()) != d + 1)
                throw Error("not_applicable", "vertex star is not a subdivided simplex");
            Simplex sigma(link.begin(), link.end());
            if (c.simplex_id(d, sigma) >= 0)
                throw Error("not_applicable", "removal would duplicate an existing simplex");
            // star must be exactly { sigma \ {x} + {target} : x in sigma }
            std::set<Simplex> star_set;
            for (int i : star) star_set.insert(tops[i]);
            for (int x : sigma) {
                Simplex want = set_union(set_minus(sigma, {x}), target);
                if (!star_set.count(want)) throw Error("not_applicable", "vertex link is not standard");
            }
            std::vector<Simplex> kept;
            for (size_t i = 0; i < tops.size(); ++i)
                if (!std::binary_search(tops[i].begin(), tops[i].end(), target)) kept.push_back(tops[i]);
            for (int i : star) removed_tops.insert(tops[i]);
            kept.push_back(sigma);
            tops = std::move(kept);
            drop_vertex(vertices, tops, defects, target);
            // removed/kept tuples reindex below via fixed maps on new ids
            std::map<Simplex, int> fixed_top;
            for (size_t i = 0; i < c.simplices[d].size(); ++i) {
                const auto& s = c.simplices[d][i];
                if (std::binary_search(s.begin(), s.end(), target)) continue;
                Simplex renamed = s;
                for (auto& v : renamed)
                    if (v > target) --v;
                fixed_top[renamed] = c.top_orientation[i];
            }
            std::map<Simplex, int> fixed_defect;
            for (size_t i = 0; i < c.defect_tops.size(); ++i) {
                Simplex renamed = c.defect_tops[i];
                for (auto& v : renamed)
                    if (v > target) --v;
                fixed_defect[renamed] = c.defect_orientation[i];
            }
            return rebuild(d, std::move(vertices), tops, defects, fixed_top, fixed_defect);
        }
        case MoveKind::BulkFlip: {
            const auto& walls = c.simplices[d - 1];
            if (target < 0 || target >= static_cast<int>(walls.size()))
                throw Error("not_applicable", "no such face");
            const Simplex f = walls[target];
            if (dset.count(f)) throw Error("stratum_violation", "flip face lies in the defect");
            const auto ids = top_cofaces_of(c, f);
            if (ids.size() != 2) throw Error("not_applicable", "face is not interior");
            const Simplex ap1 = set_minus(c.simplices[d][ids[0]], f);
            const Simplex ap2 = set_minus(c.simplices[d][ids[1]], f);
            const int x = ap1[0], y = ap2[0];
            Simplex xy{std::min(x, y), std::max(x, y)};
            if (c.simplex_id(1, xy) >= 0) throw Error("not_applicable", "flip would duplicate an edge");
            removed_tops.insert(c.simplices[d][ids[0]]);
            removed_tops.insert(c.simplices[d][ids[1]]);
            std::vector<Simplex> kept;
            for (size_t i = 0; i < tops.size(); ++i)
                if (static_cast<int>(i) != ids[0] && static_cast<int>(i) != ids[1]) kept.push_back(tops[i]);
            if (d == 2) {
                kept.push_back(set_union(xy, f[0]));
                kept.push_back(set_union(xy, f[1]));
            } else {
                kept.push_back(set_union(set_union(xy, f[0]), f[1]));
                kept.push_back(set_union(set_union(xy, f[0]), f[2]));
                kept.push_back(set_union(set_union(xy, f[1]), f[2]));
            }
            tops = std::move(kept);
            break;
        }
        case MoveKind::BulkFlipInverse: {
            if (d != 3) throw Error("not_applicable", "3->2 move needs dimension 3");
            const auto& edges = c.simplices[1];
            if (target < 0 || target >= static_cast<int>(edges.size()))
                throw Error("not_applicable", "no such edge");
            const Simplex e = edges[target];
            if (dset.count(e)) throw Error("stratum_violation", "edge lies in the defect");
            const auto ids = top_cofaces_of(c, e);
            if (ids.size() != 3) throw Error("not_applicable", "edge does not have exactly three cofaces");
            std::set<int> linkset;
            for (int i : ids)
                for (int v : set_minus(c.simplices[d][i], e)) linkset.insert(v);
            if (linkset.size() != 3) throw Error("not_applicable", "edge link is not a triangle");
            Simplex abc(linkset.begin(), linkset.end());
            std::set<Simplex> around;
            for (int i : ids) around.insert(c.simplices[d][i]);
            for (int drop : abc) {
                Simplex want = set_union(set_union(set_minus(abc, {drop}), e[0]), e[1]);
                if (!around.count(want)) throw Error("not_applicable", "tetrahedra around the edge do not match");
            }
            if (c.simplex_id(2, abc) >= 0) throw Error("not_applicable", "inverse flip would duplicate a triangle");
            for (int i : ids) removed_tops.insert(c.simplices[d][i]);
            std::vector<Simplex> kept;
            for (size_t i = 0; i < tops.size(); ++i)
                if (std::find(ids.begin(), ids.end(), static_cast<int>(i)) == ids.end()) kept.push_back(tops[i]);
            kept.push_back(set_union(abc, e[0]));
            kept.push_back(set_union(abc, e[1]));
            tops = std::move(kept);
            break;
        }
        default:
            throw semantic_error("apply_bulk_pachner: not a bulk move kind");
    }

    const auto fixed_top = bits_by_tuple(c.simplices[d], c.top_orientation, removed_tops);
    const auto fixed_defect = bits_by_tuple(c.defect_tops, c.defect_orientation, {});
    return rebuild(d, std::move(vertices), tops, defects, fixed_top, fixed_defect);
}

DirectedTriangulation apply_extended_move(const DirectedTriangulation& t, const MoveSpec& m) {
    const auto& c = t.base;
    const int d = c.dim;
    if (d < 2) throw Error("not_applicable", "the defect of a 1-manifold admits no Pachner moves");
    if (m.target.size() != 1) throw semantic_error("extended move expects a single target id");
    const int target = m.target[0];
    const auto dset = defect_closure(c);

    std::vector<Simplex> tops = c.simplices[d];
    std::vector<Simplex> defects = c.defect_tops;
    std::vector<VertexInfo> vertices = c.vertices;
    std::set<Simplex> removed_tops, removed_defects;

    auto erase_top = [&](const Simplex& s) {
        auto it = std::find(tops.begin(), tops.end(), s);
        if (it == tops.end()) throw Error("not_applicable", "expected top simplex missing");
        tops.erase(it);
        removed_tops.insert(s);
    };
    auto erase_defect = [&](const Simplex& s) {
        auto it = std::find(defects.begin(), defects.end(), s);
        if (it == defects.end()) throw Error("not_applicable", "expected defect simplex missing");
        defects.erase(it);
        removed_defects.insert(s);
    };

    switch (m.kind) {
        case MoveKind::DefectSubdivide: {
            const auto& walls = c.simplices[d - 1];
            if (target < 0 || target >= static_cast<int>(walls.size()))
                throw Error("not_applicable", "no such face");
            const Simplex tau = walls[target];
            if (c.defect_top_id(tau) < 0) throw Error("stratum_violation", "target face is not a defect simplex");
            auto [in_id, out_id] = flanking(t, tau);
            const int x = set_minus(c.simplices[d][in_id], tau)[0];
            const int y = set_minus(c.simplices[d][out_id], tau)[0];

            const int rank = insert_order(vertices, Stratum::Defect, m.insert_rank);
            const int r = static_cast<int>(vertices.size());
            vertices.push_back({Stratum::Defect, rank});

            erase_top(c.simplices[d][in_id]);
            erase_top(c.simplices[d][out_id]);
            erase_defect(tau);
            for (size_t i = 0; i < tau.size(); ++i) {
                Simplex piece = tau;
                piece.erase(piece.begin() + i);
                piece = set_union(piece, r);
                defects.push_back(piece);
                tops.push_back(set_union(piece, x));
                tops.push_back(set_union(piece, y));
            }
            break;
        }
        case MoveKind::DefectVertexRemove: {
            if (target < 0 || target >= static_cast<int>(vertices.size()))
                throw Error("not_applicable", "no such vertex");
            if (vertices[target].stratum != Stratum::Defect)
                throw Error("stratum_violation", "defect vertex removal targets a bulk vertex");
            std::vector<Simplex> dstar;
            std::set<int> dlink;
            for (const auto& s : defects)
                if (std::binary_search(s.begin(), s.end(), target)) {
                    dstar.push_back(s);
                    for (int v : s)
                        if (v != target) dlink.insert(v);
                }
            if (static_cast<int>(dstar.size()) != d || static_cast<int>(dlink.size()) != d)
                throw Error("not_applicable", "defect star of the vertex is not a subdivided simplex");
            Simplex tau_new(dlink.begin(), dlink.end());
            if (c.simplex_id(d - 1, tau_new) >= 0)
                throw Error("not_applicable", "removal would duplicate an existing face");
            std::set<Simplex> dstar_set(dstar.begin(), dstar.end());
            for (int z : tau_new)
                if (!dstar_set.count(set_union(set_minus(tau_new, {z}), target)))
                    throw Error("not_applicable", "defect link is not standard");

            int x = -1, y = -1;
            for (const auto& s : dstar) {
                auto [in_id, out_id] = flanking(t, s);
                const int xi = set_minus(c.simplices[d][in_id], s)[0];
                const int yi = set_minus(c.simplices[d][out_id], s)[0];
                if (x == -1) x = xi;
                if (y == -1) y = yi;
                if (xi != x || yi != y)
                    throw Error("not_applicable", "suspension apexes differ across the defect star");
            }
            for (const auto& s : dstar) {
                erase_top(set_union(s, x));
                erase_top(set_union(s, y));
                erase_defect(s);
            }
            defects.push_back(tau_new);
            tops.push_back(set_union(tau_new, x));
            tops.push_back(set_union(tau_new, y));

            drop_vertex(vertices, tops, defects, target);
            std::map<Simplex, int> fixed_top, fixed_defect;
            for (size_t i = 0; i < c.simplices[d].size(); ++i) {
                if (removed_tops.count(c.simplices[d][i])) continue;
                Simplex renamed = c.simplices[d][i];
                for (auto& v : renamed)
                    if (v > target) --v;
                fixed_top[renamed] = c.top_orientation[i];
            }
            for (size_t i = 0; i < c.defect_tops.size(); ++i) {
                if (removed_defects.count(c.defect_tops[i])) continue;
                Simplex renamed = c.defect_tops[i];
                for (auto& v : renamed)
                    if (v > target) --v;
                fixed_defect[renamed] = c.defect_orientation[i];
            }
            return rebuild(d, std::move(vertices), tops, defects, fixed_top, fixed_defect);
        }
        case MoveKind::DefectFlip: {
            if (d != 3) throw Error("not_applicable", "defect edge flip needs dimension 3");
            const auto& edges = c.simplices[1];
            if (target < 0 || target >= static_cast<int>(edges.size()))
                throw Error("not_applicable", "no such edge");
            const Simplex e = edges[target];
            if (!dset.count(e)) throw Error("stratum_violation", "flip edge is not in the defect");
            std::vector<Simplex> dcof;
            for (const auto& s : defects)
                if (std::includes(s.begin(), s.end(), e.begin(), e.end())) dcof.push_back(s);
            if (dcof.size() != 2) throw Error("not_applicable", "defect edge is not interior to the defect");
            const int su = set_minus(dcof[0], e)[0];
            const int tv = set_minus(dcof[1], e)[0];
            Simplex st{std::min(su, tv), std::max(su, tv)};
            if (c.simplex_id(1, st) >= 0) throw Error("not_applicable", "flip would duplicate an edge");

            int x = -1, y = -1;
            for (const auto& s : dcof) {
                auto [in_id, out_id] = flanking(t, s);
                const int xi = set_minus(c.simplices[d][in_id], s)[0];
                const int yi = set_minus(c.simplices[d][out_id], s)[0];
                if (x == -1) x = xi;
                if (y == -1) y = yi;
                if (xi != x || yi != y)
                    throw Error("not_applicable", "suspension apexes differ across the flipped edge");
            }
            for (const auto& s : dcof) {
                erase_top(set_union(s, x));
                erase_top(set_union(s, y));
                erase_defect(s);
            }
            for (int keep : {e[0], e[1]}) {
                Simplex nd = set_union(st, keep);
                defects.push_back(nd);
                tops.push_back(set_union(nd, x));
                tops.push_back(set_union(nd, y));
            }
            break;
        }
        default:
            throw semantic_error("apply_extended_move: not an extended move kind");
    }

    const auto fixed_top = bits_by_tuple(c.simplices[d], c.top_orientation, removed_tops);
    const auto fixed_defect = bits_by_tuple(c.defect_tops, c.defect_orientation, removed_defects);
    return rebuild(d, std::move(vertices), tops, defects, fixed_top, fixed_defect);
}

namespace {

std::string fuzz_value_invariant(const DirectedTriangulation& t, const Gamma2Parcel& p) {
    return counting_invariant(t, p).get_str();
}

std::string fuzz_value_statesum(const DirectedTriangulation& t, const Gamma2Parcel& p, const PartialCocycle* a) {
    if (!a) return "";
    return twisted_state_sum(t, p, *a).to_string();
}

std::vector<MoveSpec> enumerate_candidates(const DirectedTriangulation& t, MoveMix mix, bool allow_grow) {
    std::vector<MoveSpec> out;
    const auto& c = t.base;
    const int d = c.dim;
    const auto dset = defect_closure(c);

    if (mix != MoveMix::ExtendedOnly) {
        if (allow_grow)
            for (size_t i = 0; i < c.simplices[d].size(); ++i)
                out.push_back({MoveKind::BulkSubdivide, {static_cast<int>(i)}, -1});
        for (size_t v = 0; v < c.vertices.size(); ++v)
            if (c.vertices[v].stratum == Stratum::Bulk)
                out.push_back({MoveKind::BulkVertexRemove, {static_cast<int>(v)}, -1});
        for (size_t f = 0; f < c.simplices[d - 1].size(); ++f)
            if (!dset.count(c.simplices[d - 1][f]))
                out.push_back({MoveKind::BulkFlip, {static_cast<int>(f)}, -1});
        if (d == 3)
            for (size_t e = 0; e < c.simplices[1].size(); ++e)
                if (!dset.count(c.simplices[1][e]))
                    out.push_back({MoveKind::BulkFlipInverse, {static_cast<int>(e)}, -1});
    }
    if (mix != MoveMix::BulkOnly && d >= 2) {
        if (allow_grow)
            for (size_t f = 0; f < c.simplices[d - 1].size(); ++f)
                if (c.defect_top_id(c.simplices[d - 1][f]) >= 0)
                    out.push_back({MoveKind::DefectSubdivide, {static_cast<int>(f)}, -1});
        for (size_t v = 0; v < c.vertices.size(); ++v)
            if (c.vertices[v].stratum == Stratum::Defect)
                out.push_back({MoveKind::DefectVertexRemove, {static_cast<int>(v)}, -1});
        if (d == 3)
            for (size_t e = 0; e < c.simplices[1].size(); ++e)
                if (dset.count(c.simplices[1][e]))
                    out.push_back({MoveKind::DefectFlip, {static_cast<int>(e)}, -1});
    }
    return out;
}

bool is_bulk_kind(MoveKind k) {
    return k == MoveKind::BulkSubdivide || k == MoveKind::BulkVertexRemove || k == MoveKind::BulkFlip ||
           k == MoveKind::BulkFlipInverse;
}

}  // namespace

std::string FuzzReport::to_text() const {
    std::string out = "initial invariant=" + initial_invariant;
    if (!initial_statesum.empty()) out += " statesum=" + initial_statesum;
    out += "\n";
    int i = 0;
    for (const auto& s : steps) {
        out += "step=" + std::to_string(++i) + " kind=" + move_kind_name(s.move.kind) + " target=[";
        for (size_t j = 0; j < s.move.target.size(); ++j) {
            if (j) out += ",";
            out += std::to_string(s.move.target[j]);
        }
        out += "]";
        if (!s.applied) {
            out += " skipped (" + s.note + ")";
        } else {
            out += " invariant=" + s.invariant;
            if (!s.statesum.empty()) out += " statesum=" + s.statesum;
            out += s.value_matches ? " match=yes" : " match=NO";
        }
        out += "\n";
    }
    out += "applied=" + std::to_string(applied_count) + " all_equal=" + (all_equal ? "true" : "false") + "\n";
    return out;
}

FuzzReport fuzz_invariance(const DirectedTriangulation& t0, const Gamma2Parcel& p, const PartialCocycle* alpha,
                           const FuzzOptions& opt) {
    FuzzReport rep;
    DirectedTriangulation cur = t0;
    rep.initial_invariant = fuzz_value_invariant(cur, p);
    rep.initial_statesum = fuzz_value_statesum(cur, p, alpha);

    std::optional<StateSumValue> initial_sum;
    if (alpha) initial_sum = twisted_state_sum(cur, p, *alpha);

    std::mt19937_64 rng(opt.seed);
    // Vertex-creating moves are offered only while the complex stays within a
    // fixed budget over its starting size; the walk then hovers instead of
    // growing without bound (exact re-enumeration is exponential in vertices).
    const size_t grow_budget = t0.base.vertices.size() + 8;
    const int max_attempts_per_step = 64;
    for (int step = 0; step < opt.steps; ++step) {
        bool advanced = false;
        for (int attempt = 0; attempt < max_attempts_per_step && !advanced; ++attempt) {
            auto candidates = enumerate_candidates(cur, opt.mix, cur.base.vertices.size() < grow_budget);
            if (candidates.empty()) break;
            MoveSpec mv = candidates[rng() % candidates.size()];
            FuzzStep fs;
            fs.move = mv;
            try {
                DirectedTriangulation next =
                    is_bulk_kind(mv.kind) ? apply_bulk_pachner(cur, mv) : apply_extended_move(cur, mv);
                cur = std::move(next);
                fs.applied = true;
                fs.invariant = fuzz_value_invariant(cur, p);
                bool match = fs.invariant == rep.initial_invariant;
                if (alpha) {
                    const auto v = twisted_state_sum(cur, p, *alpha);
                    fs.statesum = v.to_string();
                    match = match && v.equals(*initial_sum);
                }
                fs.value_matches = match;
                if (!match) rep.all_equal = false;
                ++rep.applied_count;
                advanced = true;
            } catch (const Error& e) {
                fs.applied = false;
                fs.note = e.code();
            }
            rep.steps.push_back(std::move(fs));
        }
        if (!advanced) break;  // no applicable move found
    }
    return rep;
}

}  // namespace stratsum
