#include "stratsum/complex.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>

namespace stratsum {

namespace {

std::string simplex_str(const Simplex& s) {
    std::string out = "(";
    for (size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(s[i]);
    }
    return out + ")";
}

// All facets (codimension-1 faces) of s.
std::vector<Simplex> facets_of(const Simplex& s) {
    std::vector<Simplex> out;
    for (size_t i = 0; i < s.size(); ++i) {
        Simplex f;
        for (size_t j = 0; j < s.size(); ++j)
            if (j != i) f.push_back(s[j]);
        out.push_back(std::move(f));
    }
    return out;
}

struct DisjointSets {
    std::vector<int> parent;
    explicit DisjointSets(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

int StratifiedComplex::simplex_id(int k, const Simplex& s) const {
    const auto& list = simplices[k];
    auto it = std::lower_bound(list.begin(), list.end(), s);
    if (it != list.end() && *it == s) return static_cast<int>(it - list.begin());
    return -1;
}

int StratifiedComplex::defect_top_id(const Simplex& s) const {
    auto it = std::lower_bound(defect_tops.begin(), defect_tops.end(), s);
    if (it != defect_tops.end() && *it == s) return static_cast<int>(it - defect_tops.begin());
    return -1;
}

void check_complex_shape(const StratifiedComplex& c) {
    if (c.dim < 1 || c.dim > 3) throw semantic_error("complex: dimension must be 1, 2 or 3");
    const int n = static_cast<int>(c.vertices.size());
    if (n == 0) throw semantic_error("complex: no vertices");
    for (int k = 0; k <= 3; ++k) {
        if (k > c.dim && !c.simplices[k].empty())
            throw semantic_error("complex: simplices above the stated dimension");
        const auto& list = c.simplices[k];
        for (const auto& s : list) {
            if (static_cast<int>(s.size()) != k + 1)
                throw semantic_error("complex: simplex " + simplex_str(s) + " has wrong arity for dimension " +
                                     std::to_string(k));
            for (size_t i = 0; i < s.size(); ++i) {
                if (s[i] < 0 || s[i] >= n)
                    throw semantic_error("complex: vertex id out of range in " + simplex_str(s));
                if (i && s[i] <= s[i - 1])
                    throw semantic_error("complex: simplex " + simplex_str(s) + " is not strictly increasing");
            }
        }
        if (!std::is_sorted(list.begin(), list.end()))
            throw semantic_error("complex: simplex list of dimension " + std::to_string(k) + " is not sorted");
        if (std::adjacent_find(list.begin(), list.end()) != list.end())
            throw semantic_error("complex: duplicate simplex in dimension " + std::to_string(k));
    }
    if (c.simplices[0].size() != static_cast<size_t>(n))
        throw semantic_error("complex: 0-simplices must list every vertex exactly once");
    for (int v = 0; v < n; ++v)
        if (c.simplices[0][v] != Simplex{v}) throw semantic_error("complex: 0-simplices must be 0..n-1 in order");
    if (!std::is_sorted(c.defect_tops.begin(), c.defect_tops.end()) ||
        std::adjacent_find(c.defect_tops.begin(), c.defect_tops.end()) != c.defect_tops.end())
        throw semantic_error("complex: defect list must be sorted and duplicate-free");
    for (const auto& s : c.defect_tops) {
        if (s.empty() || static_cast<int>(s.size()) > c.dim)
            throw semantic_error("complex: defect simplex " + simplex_str(s) + " has impossible dimension");
        for (size_t i = 0; i < s.size(); ++i) {
            if (s[i] < 0 || s[i] >= n) throw semantic_error("complex: defect vertex id out of range");
            if (i && s[i] <= s[i - 1]) throw semantic_error("complex: defect simplex not strictly increasing");
        }
    }
    if (c.top_orientation.size() != c.simplices[c.dim].size())
        throw semantic_error("complex: top orientation table size mismatch");
    if (c.defect_orientation.size() != c.defect_tops.size())
        throw semantic_error("complex: defect orientation table size mismatch");
    for (int v : c.top_orientation)
        if (v != 1 && v != -1) throw semantic_error("complex: top orientation entries must be +-1");
    for (int v : c.defect_orientation)
        if (v != 1 && v != -1) throw semantic_error("complex: defect orientation entries must be +-1");
}

ValidationReport validate_flag_like(const StratifiedComplex& c) {
    check_complex_shape(c);
    ValidationReport r;
    const int d = c.dim;

    r.add("has_top_simplices", !c.simplices[d].empty());

    // Face closure.
    {
        bool ok = true;
        std::string detail;
        for (int k = 2; k <= d && ok; ++k)
            for (const auto& s : c.simplices[k]) {
                for (const auto& f : facets_of(s))
                    if (c.simplex_id(k - 1, f) < 0) {
                        ok = false;
                        detail = "missing face " + simplex_str(f) + " of " + simplex_str(s);
                        break;
                    }
                if (!ok) break;
            }
        r.add("face_closure", ok, detail);
    }

    // Defect subcomplex: membership of listed simplices plus closure set.
    std::set<Simplex> defect_set;  // all simplices of the defect subcomplex
    {
        bool ok = true;
        std::string detail;
        for (const auto& s : c.defect_tops) {
            if (c.simplex_id(static_cast<int>(s.size()) - 1, s) < 0) {
                ok = false;
                detail = "defect simplex " + simplex_str(s) + " is not a simplex of the complex";
            }
            // subset closure
            for (unsigned mask = 1; mask < (1u << s.size()); ++mask) {
                Simplex f;
                for (size_t i = 0; i < s.size(); ++i)
                    if (mask & (1u << i)) f.push_back(s[i]);
                defect_set.insert(std::move(f));
            }
        }
        r.add("defect_simplices_exist", ok, detail);
    }

    {
        bool ok = true;
        for (const auto& s : c.defect_tops)
            if (static_cast<int>(s.size()) != d) ok = false;
        r.add("defect_pure_codim1", ok, ok ? "" : "a listed defect simplex is not (d-1)-dimensional");
    }

    // Vertex tags match the defect subcomplex.
    {
        bool ok = true;
        std::string detail;
        std::vector<bool> in_defect(c.vertices.size(), false);
        for (const auto& s : defect_set)
            if (s.size() == 1) in_defect[s[0]] = true;
        for (size_t v = 0; v < c.vertices.size(); ++v) {
            const bool tagged = c.vertices[v].stratum == Stratum::Defect;
            if (tagged != in_defect[v]) {
                ok = false;
                detail = "vertex " + std::to_string(v) + (tagged ? " tagged defect but not in the defect"
                                                                 : " lies in the defect but is tagged bulk");
                break;
            }
        }
        r.add("stratum_tags_match_defect", ok, detail);
    }

    // Flag-likeness: the defect vertices of any simplex span a face that
    // belongs to the defect subcomplex.
    {
        bool ok = true;
        std::string detail;
        for (int k = 1; k <= d && ok; ++k)
            for (const auto& s : c.simplices[k]) {
                Simplex span;
                for (int v : s)
                    if (c.vertex_in_defect(v)) span.push_back(v);
                if (!span.empty() && !defect_set.count(span)) {
                    ok = false;
                    detail = "simplex " + simplex_str(s) + " meets the defect in " + simplex_str(span) +
                             " which is not a defect face";
                    break;
                }
            }
        r.add("flag_like", ok, detail);
    }

    // Closed bulk: every (d-1)-simplex lies in exactly two top simplices.
    std::map<Simplex, std::vector<int>> cofaces;
    for (size_t i = 0; i < c.simplices[d].size(); ++i)
        for (const auto& f : facets_of(c.simplices[d][i])) cofaces[f].push_back(static_cast<int>(i));
    {
        bool ok = true;
        std::string detail;
        for (const auto& f : c.simplices[d - 1]) {
            auto it = cofaces.find(f);
            const size_t cnt = it == cofaces.end() ? 0 : it->second.size();
            if (cnt != 2) {
                ok = false;
                detail = simplex_str(f) + " lies in " + std::to_string(cnt) + " top simplices";
                break;
            }
        }
        r.add("bulk_pseudo_manifold", ok, detail);
    }

    // Closed defect: every (d-2)-simplex of the defect lies in exactly two
    // defect (d-1)-simplices.
    std::map<Simplex, std::vector<int>> defect_cofaces;
    if (d >= 2) {
        for (size_t i = 0; i < c.defect_tops.size(); ++i)
            if (static_cast<int>(c.defect_tops[i].size()) == d)
                for (const auto& f : facets_of(c.defect_tops[i])) defect_cofaces[f].push_back(static_cast<int>(i));
        bool ok = true;
        std::string detail;
        for (const auto& [f, ids] : defect_cofaces)
            if (ids.size() != 2) {
                ok = false;
                detail = simplex_str(f) + " lies in " + std::to_string(ids.size()) + " defect simplices";
                break;
            }
        // also catch defect boundary faces that appear once only via the map;
        // faces appearing zero times cannot exist (they are faces of a listed top)
        r.add("defect_pseudo_manifold", ok, detail);
    } else {
        r.add("defect_pseudo_manifold", true);
    }

    // Bulk orientation coherence.
    {
        bool ok = true;
        std::string detail;
        for (const auto& [f, ids] : cofaces) {
            if (ids.size() != 2) continue;
            int sign[2];
            for (int j = 0; j < 2; ++j) {
                const auto& s = c.simplices[d][ids[j]];
                int miss = -1;
                for (size_t i = 0; i < s.size(); ++i)
                    if (!std::binary_search(f.begin(), f.end(), s[i])) miss = static_cast<int>(i);
                sign[j] = c.top_orientation[ids[j]] * (miss % 2 == 0 ? 1 : -1);
            }
            if (sign[0] != -sign[1]) {
                ok = false;
                detail = "induced orientations agree on " + simplex_str(f);
                break;
            }
        }
        r.add("orientation_consistent", ok, detail);
    }

    // Defect orientation coherence (d >= 2).
    {
        bool ok = true;
        std::string detail;
        for (const auto& [f, ids] : defect_cofaces) {
            if (ids.size() != 2) continue;
            int sign[2];
            for (int j = 0; j < 2; ++j) {
                const auto& s = c.defect_tops[ids[j]];
                int miss = -1;
                for (size_t i = 0; i < s.size(); ++i)
                    if (!std::binary_search(f.begin(), f.end(), s[i])) miss = static_cast<int>(i);
                sign[j] = c.defect_orientation[ids[j]] * (miss % 2 == 0 ? 1 : -1);
            }
            if (sign[0] != -sign[1]) {
                ok = false;
                detail = "induced defect orientations agree on " + simplex_str(f);
                break;
            }
        }
        r.add("defect_orientation_consistent", ok, detail);
    }

    // Stratum orders: distinct within each stratum component.
    {
        DisjointSets ds(static_cast<int>(c.vertices.size()));
        for (const auto& e : c.simplices[1])
            if (c.vertices[e[0]].stratum == c.vertices[e[1]].stratum) ds.unite(e[0], e[1]);
        bool ok = true;
        std::string detail;
        std::map<std::pair<int, int>, int> seen;  // (component root, order) -> vertex
        for (int v = 0; v < static_cast<int>(c.vertices.size()) && ok; ++v) {
            auto key = std::make_pair(ds.find(v), c.vertices[v].order);
            auto [it, inserted] = seen.emplace(key, v);
            if (!inserted) {
                ok = false;
                detail = "vertices " + std::to_string(it->second) + " and " + std::to_string(v) +
                         " share order " + std::to_string(c.vertices[v].order) + " in one stratum component";
            }
        }
        r.add("stratum_orders_distinct", ok, detail);
    }

    return r;
}

void require_valid(const StratifiedComplex& c) {
    auto rep = validate_flag_like(c);
    if (!rep.ok()) throw Error("validation_failed", rep.to_text());
}

Side side_of_defect(const StratifiedComplex& c, int top_id, int facet_id) {
    if (top_id < 0 || top_id >= static_cast<int>(c.simplices[c.dim].size()))
        throw semantic_error("side_of_defect: top simplex id out of range");
    if (facet_id < 0 || facet_id >= static_cast<int>(c.simplices[c.dim - 1].size()))
        throw semantic_error("side_of_defect: facet id out of range");
    const auto& s = c.simplices[c.dim][top_id];
    const auto& f = c.simplices[c.dim - 1][facet_id];
    const int df = c.defect_top_id(f);
    if (df < 0) throw semantic_error("side_of_defect: facet " + simplex_str(f) + " is not in the defect");
    int miss = -1;
    for (size_t i = 0; i < s.size(); ++i)
        if (!std::binary_search(f.begin(), f.end(), s[i])) {
            if (miss != -1) throw semantic_error("side_of_defect: facet is not a facet of the top simplex");
            miss = static_cast<int>(i);
        }
    if (miss == -1) throw semantic_error("side_of_defect: facet is not a facet of the top simplex");
    const int induced = c.top_orientation[top_id] * (miss % 2 == 0 ? 1 : -1);
    return induced == c.defect_orientation[df] ? Side::Inbound : Side::Outbound;
}

StrataCounts strata_counts(const StratifiedComplex& c) {
    StrataCounts out;
    DisjointSets ds(static_cast<int>(c.vertices.size()));
    for (const auto& e : c.simplices[1])
        if (c.vertices[e[0]].stratum == c.vertices[e[1]].stratum) ds.unite(e[0], e[1]);
    std::set<int> bulk_roots, defect_roots;
    for (int v = 0; v < static_cast<int>(c.vertices.size()); ++v) {
        if (c.vertices[v].stratum == Stratum::Bulk) {
            ++out.bulk_vertices;
            bulk_roots.insert(ds.find(v));
        } else {
            ++out.defect_vertices;
            defect_roots.insert(ds.find(v));
        }
    }
    out.bulk_components = static_cast<int>(bulk_roots.size());
    out.defect_components = static_cast<int>(defect_roots.size());
    return out;
}

long long euler_characteristic(const StratifiedComplex& c) {
    long long chi = 0;
    for (int k = 0; k <= c.dim; ++k) chi += (k % 2 == 0 ? 1 : -1) * static_cast<long long>(c.simplices[k].size());
    return chi;
}

long long defect_euler_characteristic(const StratifiedComplex& c) {
    std::set<Simplex> defect_set;
    for (const auto& s : c.defect_tops)
        for (unsigned mask = 1; mask < (1u << s.size()); ++mask) {
            Simplex f;
            for (size_t i = 0; i < s.size(); ++i)
                if (mask & (1u << i)) f.push_back(s[i]);
            defect_set.insert(std::move(f));
        }
    long long chi = 0;
    for (const auto& s : defect_set) chi += (s.size() % 2 == 1 ? 1 : -1);
    return chi;
}

StratifiedComplex assemble_complex(int dim, std::vector<VertexInfo> vertices,
                                   const std::vector<Simplex>& tops, const std::vector<Simplex>& defect_tops) {
    StratifiedComplex c;
    c.dim = dim;
    c.vertices = std::move(vertices);

    std::array<std::set<Simplex>, 4> by_dim;
    for (size_t v = 0; v < c.vertices.size(); ++v) by_dim[0].insert({static_cast<int>(v)});
    auto add_closure = [&](const Simplex& s) {
        for (unsigned mask = 1; mask < (1u << s.size()); ++mask) {
            Simplex f;
            for (size_t i = 0; i < s.size(); ++i)
                if (mask & (1u << i)) f.push_back(s[i]);
            by_dim[f.size() - 1].insert(std::move(f));
        }
    };
    for (const auto& s : tops) add_closure(s);
    for (const auto& s : defect_tops) add_closure(s);

    for (int k = 0; k <= 3; ++k) c.simplices[k].assign(by_dim[k].begin(), by_dim[k].end());
    c.defect_tops = defect_tops;
    std::sort(c.defect_tops.begin(), c.defect_tops.end());
    c.defect_tops.erase(std::unique(c.defect_tops.begin(), c.defect_tops.end()), c.defect_tops.end());

    // Derive stratum tags from the defect.
    for (auto& v : c.vertices) v.stratum = Stratum::Bulk;
    for (const auto& s : c.defect_tops)
        for (int v : s) c.vertices[v].stratum = Stratum::Defect;

    c.top_orientation.assign(c.simplices[dim].size(), 0);
    c.defect_orientation.assign(c.defect_tops.size(), 0);
    return c;
}

namespace {

// Generic coherence propagation over a list of equidimensional simplices.
// bits[i] == 0 means free.  Throws on conflict.
void propagate_bits(const std::vector<Simplex>& tops, std::vector<int>& bits) {
    std::map<Simplex, std::vector<int>> cofaces;
    for (size_t i = 0; i < tops.size(); ++i)
        for (const auto& f : facets_of(tops[i])) cofaces[f].push_back(static_cast<int>(i));

    std::vector<std::vector<std::pair<int, int>>> nbr(tops.size());  // (other, relation)
    for (const auto& [f, ids] : cofaces) {
        if (ids.size() != 2) continue;
        int missp[2];
        for (int j = 0; j < 2; ++j) {
            const auto& s = tops[ids[j]];
            int miss = -1;
            for (size_t i = 0; i < s.size(); ++i)
                if (!std::binary_search(f.begin(), f.end(), s[i])) miss = static_cast<int>(i);
            missp[j] = miss % 2 == 0 ? 1 : -1;
        }
        // bit0 * missp0 == -bit1 * missp1  =>  bit1 = -bit0 * missp0 * missp1
        const int relation = -missp[0] * missp[1];
        nbr[ids[0]].push_back({ids[1], relation});
        nbr[ids[1]].push_back({ids[0], relation});
    }

    std::queue<int> q;
    for (size_t i = 0; i < tops.size(); ++i)
        if (bits[i] != 0) q.push(static_cast<int>(i));
    auto flush = [&]() {
        while (!q.empty()) {
            int i = q.front();
            q.pop();
            for (auto [j, rel] : nbr[i]) {
                const int want = bits[i] * rel;
                if (bits[j] == 0) {
                    bits[j] = want;
                    q.push(j);
                } else if (bits[j] != want) {
                    throw Error("orientation_conflict", "no coherent orientation completion exists");
                }
            }
        }
    };
    flush();
    for (size_t i = 0; i < tops.size(); ++i)
        if (bits[i] == 0) {
            bits[i] = 1;
            q.push(static_cast<int>(i));
            flush();
        }
}

}  // namespace

void complete_orientations(StratifiedComplex& c, const std::map<Simplex, int>& fixed_top,
                           const std::map<Simplex, int>& fixed_defect) {
    std::vector<int> bits(c.simplices[c.dim].size(), 0);
    for (const auto& [s, b] : fixed_top) {
        int id = c.simplex_id(c.dim, s);
        if (id >= 0) bits[id] = b;
    }
    propagate_bits(c.simplices[c.dim], bits);
    c.top_orientation = std::move(bits);

    std::vector<int> dbits(c.defect_tops.size(), 0);
    for (const auto& [s, b] : fixed_defect) {
        int id = c.defect_top_id(s);
        if (id >= 0) dbits[id] = b;
    }
    if (c.dim >= 2) {
        propagate_bits(c.defect_tops, dbits);
    } else {
        for (auto& b : dbits)
            if (b == 0) b = 1;
    }
    c.defect_orientation = std::move(dbits);
}

StratifiedComplex relabel_vertices(const StratifiedComplex& c, const std::vector<int>& perm) {
    if (perm.size() != c.vertices.size()) throw semantic_error("relabel: permutation size mismatch");
    std::vector<int> seen(perm.size(), 0);
    for (int v : perm) {
        if (v < 0 || v >= static_cast<int>(perm.size()) || seen[v]++)
            throw semantic_error("relabel: not a permutation");
    }

    StratifiedComplex out;
    out.dim = c.dim;
    out.vertices.resize(c.vertices.size());
    for (size_t v = 0; v < c.vertices.size(); ++v) out.vertices[perm[v]] = c.vertices[v];

    // Maps a tuple and returns (sorted tuple, sort parity).
    auto map_simplex = [&](const Simplex& s) {
        Simplex t;
        t.reserve(s.size());
        for (int v : s) t.push_back(perm[v]);
        int parity = 1;
        for (size_t i = 0; i < t.size(); ++i)
            for (size_t j = i + 1; j < t.size(); ++j)
                if (t[i] > t[j]) parity = -parity;
        std::sort(t.begin(), t.end());
        return std::make_pair(t, parity);
    };

    for (int k = 0; k <= 3; ++k) {
        std::vector<std::pair<Simplex, int>> mapped;
        for (size_t i = 0; i < c.simplices[k].size(); ++i) {
            auto [t, parity] = map_simplex(c.simplices[k][i]);
            const int bit = (k == c.dim && !c.top_orientation.empty()) ? c.top_orientation[i] * parity : 0;
            mapped.push_back({std::move(t), bit});
        }
        std::sort(mapped.begin(), mapped.end());
        out.simplices[k].clear();
        if (k == c.dim) out.top_orientation.clear();
        for (auto& [t, bit] : mapped) {
            out.simplices[k].push_back(std::move(t));
            if (k == c.dim) out.top_orientation.push_back(bit);
        }
    }
    {
        std::vector<std::pair<Simplex, int>> mapped;
        for (size_t i = 0; i < c.defect_tops.size(); ++i) {
            auto [t, parity] = map_simplex(c.defect_tops[i]);
            mapped.push_back({std::move(t), c.defect_orientation[i] * parity});
        }
        std::sort(mapped.begin(), mapped.end());
        for (auto& [t, bit] : mapped) {
            out.defect_tops.push_back(std::move(t));
            out.defect_orientation.push_back(bit);
        }
    }
    return out;
}

}  // namespace stratsum
