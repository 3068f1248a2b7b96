#include "stratsum/parcel.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace stratsum {

Obj PathWord::target() const {
    Obj at = source;
    for (Gen g : letters) at = gen_target(g);
    return at;
}

void validate_path_word(const PathWord& w) {
    Obj at = w.source;
    for (Gen g : w.letters) {
        if (gen_source(g) != at) throw semantic_error("path word letters do not chain");
        at = gen_target(g);
    }
}

Obj word_source(Word w) {
    switch (w) {
        case Word::BulkId: return Obj::Bulk;
        case Word::DefectId: return Obj::Defect;
        case Word::IntoDefect: return Obj::Bulk;
        case Word::OutOfDefect: return Obj::Defect;
    }
    throw semantic_error("bad word");
}

Obj word_target(Word w) {
    switch (w) {
        case Word::BulkId: return Obj::Bulk;
        case Word::DefectId: return Obj::Defect;
        case Word::IntoDefect: return Obj::Defect;
        case Word::OutOfDefect: return Obj::Bulk;
    }
    throw semantic_error("bad word");
}

const char* word_name(Word w) {
    switch (w) {
        case Word::BulkId: return "bulk_id";
        case Word::DefectId: return "defect_id";
        case Word::IntoDefect: return "into_defect";
        case Word::OutOfDefect: return "out_of_defect";
    }
    return "?";
}

PathWord to_path_word(Word w) {
    switch (w) {
        case Word::BulkId: return {Obj::Bulk, {}};
        case Word::DefectId: return {Obj::Defect, {}};
        case Word::IntoDefect: return {Obj::Bulk, {Gen::IntoDefect}};
        case Word::OutOfDefect: return {Obj::Defect, {Gen::OutOfDefect}};
    }
    throw semantic_error("bad word");
}

int Gamma2Parcel::fiber_count(Word w) const {
    switch (w) {
        case Word::BulkId: return bulk.n;
        case Word::DefectId: return defect.n;
        case Word::IntoDefect: return n_into;
        case Word::OutOfDefect: return n_out;
    }
    throw semantic_error("bad word");
}

GTriple Gamma2Parcel::label(Word w, int elem) const {
    if (!glabel) throw Error("missing_glabel", "parcel carries no group labelling");
    switch (w) {
        case Word::BulkId: return glabel->on_bulk.at(elem);
        case Word::DefectId: return glabel->on_defect.at(elem);
        case Word::IntoDefect: return glabel->on_into.at(elem);
        case Word::OutOfDefect: return glabel->on_out.at(elem);
    }
    throw semantic_error("bad word");
}

GTriple Gamma2Parcel::triple_times(const GTriple& a, const GTriple& b) const {
    return {bulk.times(a.b, b.b), defect.times(a.d, b.d), a.z + b.z};
}

void check_parcel_shape(const Gamma2Parcel& p) {
    check_group_shape(p.bulk);
    check_group_shape(p.defect);
    if (p.n_into < 0 || p.n_out < 0) throw semantic_error("parcel: negative fiber size");
    auto check_table = [](const std::vector<int>& t, int rows, int cols, int range, const char* what) {
        if (t.size() != static_cast<size_t>(rows) * cols)
            throw semantic_error(std::string("parcel: ") + what + " has wrong size");
        for (int v : t)
            if (v < 0 || v >= range) throw semantic_error(std::string("parcel: ") + what + " entry out of range");
    };
    check_table(p.act_bulk_into, p.bulk.n, p.n_into, std::max(p.n_into, 1), "bulk action on I");
    check_table(p.act_into_defect, p.n_into, p.defect.n, std::max(p.n_into, 1), "defect action on I");
    check_table(p.act_defect_out, p.defect.n, p.n_out, std::max(p.n_out, 1), "defect action on W");
    check_table(p.act_out_bulk, p.n_out, p.bulk.n, std::max(p.n_out, 1), "bulk action on W");
    if (p.glabel) {
        if (p.glabel->on_bulk.size() != static_cast<size_t>(p.bulk.n) ||
            p.glabel->on_defect.size() != static_cast<size_t>(p.defect.n) ||
            p.glabel->on_into.size() != static_cast<size_t>(p.n_into) ||
            p.glabel->on_out.size() != static_cast<size_t>(p.n_out))
            throw semantic_error("parcel: glabel tables have wrong sizes");
        for (const auto* tab : {&p.glabel->on_bulk, &p.glabel->on_defect, &p.glabel->on_into, &p.glabel->on_out})
            for (const auto& t : *tab)
                if (t.b < 0 || t.b >= p.bulk.n || t.d < 0 || t.d >= p.defect.n)
                    throw semantic_error("parcel: glabel triple out of range");
    }
}

namespace {

int act_bi(const Gamma2Parcel& p, int b, int x) { return p.act_bulk_into[static_cast<size_t>(b) * p.n_into + x]; }
int act_id(const Gamma2Parcel& p, int x, int h) { return p.act_into_defect[static_cast<size_t>(x) * p.defect.n + h]; }
int act_dw(const Gamma2Parcel& p, int h, int w) { return p.act_defect_out[static_cast<size_t>(h) * p.n_out + w]; }
int act_wb(const Gamma2Parcel& p, int w, int b) { return p.act_out_bulk[static_cast<size_t>(w) * p.bulk.n + b]; }

}  // namespace

ValidationReport validate_parcel(const Gamma2Parcel& p) {
    check_parcel_shape(p);
    ValidationReport r;

    // Conservativity of the structure functor forces the identity fibers to
    // be groups; a monoid table with a non-invertible element fails here.
    auto bulk_rep = validate_group(p.bulk);
    auto defect_rep = validate_group(p.defect);
    r.add("bulk_identity_fiber_group", bulk_rep.ok(), bulk_rep.ok() ? "" : "group axioms fail");
    r.add("defect_identity_fiber_group", defect_rep.ok(), defect_rep.ok() ? "" : "group axioms fail");

    r.add("surjective_on_arrows", p.n_into > 0 && p.n_out > 0,
          p.n_into > 0 && p.n_out > 0 ? "" : "a generator fiber is empty");

    bool id_acts = true;
    for (int x = 0; x < p.n_into; ++x)
        if (act_bi(p, p.bulk.id, x) != x || act_id(p, x, p.defect.id) != x) id_acts = false;
    for (int w = 0; w < p.n_out; ++w)
        if (act_dw(p, p.defect.id, w) != w || act_wb(p, w, p.bulk.id) != w) id_acts = false;
    r.add("identity_acts_trivially", id_acts);

    bool assoc = true;
    for (int a = 0; a < p.bulk.n && assoc; ++a)
        for (int b = 0; b < p.bulk.n && assoc; ++b)
            for (int x = 0; x < p.n_into; ++x)
                if (act_bi(p, p.bulk.times(a, b), x) != act_bi(p, a, act_bi(p, b, x))) { assoc = false; break; }
    for (int x = 0; x < p.n_into && assoc; ++x)
        for (int g = 0; g < p.defect.n && assoc; ++g)
            for (int h = 0; h < p.defect.n; ++h)
                if (act_id(p, x, p.defect.times(g, h)) != act_id(p, act_id(p, x, g), h)) { assoc = false; break; }
    for (int a = 0; a < p.defect.n && assoc; ++a)
        for (int b = 0; b < p.defect.n && assoc; ++b)
            for (int w = 0; w < p.n_out; ++w)
                if (act_dw(p, p.defect.times(a, b), w) != act_dw(p, a, act_dw(p, b, w))) { assoc = false; break; }
    for (int w = 0; w < p.n_out && assoc; ++w)
        for (int g = 0; g < p.bulk.n && assoc; ++g)
            for (int h = 0; h < p.bulk.n; ++h)
                if (act_wb(p, w, p.bulk.times(g, h)) != act_wb(p, act_wb(p, w, g), h)) { assoc = false; break; }
    r.add("action_associativity", assoc);

    bool commute = true;
    for (int b = 0; b < p.bulk.n && commute; ++b)
        for (int x = 0; x < p.n_into && commute; ++x)
            for (int h = 0; h < p.defect.n; ++h)
                if (act_id(p, act_bi(p, b, x), h) != act_bi(p, b, act_id(p, x, h))) { commute = false; break; }
    for (int h = 0; h < p.defect.n && commute; ++h)
        for (int w = 0; w < p.n_out && commute; ++w)
            for (int b = 0; b < p.bulk.n; ++b)
                if (act_wb(p, act_dw(p, h, w), b) != act_dw(p, h, act_wb(p, w, b))) { commute = false; break; }
    r.add("actions_commute", commute);

    if (p.glabel) {
        bool inj = true;
        auto injective_hom = [&](const std::vector<GTriple>& tab, const FiniteGroupTable& grp) {
            for (int a = 0; a < grp.n; ++a)
                for (int b = 0; b < grp.n; ++b) {
                    if (p.triple_times(tab[a], tab[b]) != tab[grp.times(a, b)]) return false;
                    if (a != b && tab[a] == tab[b]) return false;
                }
            return true;
        };
        inj = injective_hom(p.glabel->on_bulk, p.bulk) && injective_hom(p.glabel->on_defect, p.defect);
        r.add("glabel_injective_hom", inj);

        bool equi = true;
        for (int b = 0; b < p.bulk.n && equi; ++b)
            for (int x = 0; x < p.n_into; ++x)
                if (p.triple_times(p.glabel->on_bulk[b], p.glabel->on_into[x]) != p.glabel->on_into[act_bi(p, b, x)]) {
                    equi = false;
                    break;
                }
        for (int x = 0; x < p.n_into && equi; ++x)
            for (int h = 0; h < p.defect.n; ++h)
                if (p.triple_times(p.glabel->on_into[x], p.glabel->on_defect[h]) != p.glabel->on_into[act_id(p, x, h)]) {
                    equi = false;
                    break;
                }
        for (int h = 0; h < p.defect.n && equi; ++h)
            for (int w = 0; w < p.n_out; ++w)
                if (p.triple_times(p.glabel->on_defect[h], p.glabel->on_out[w]) != p.glabel->on_out[act_dw(p, h, w)]) {
                    equi = false;
                    break;
                }
        for (int w = 0; w < p.n_out && equi; ++w)
            for (int b = 0; b < p.bulk.n; ++b)
                if (p.triple_times(p.glabel->on_out[w], p.glabel->on_bulk[b]) != p.glabel->on_out[act_wb(p, w, b)]) {
                    equi = false;
                    break;
                }
        r.add("glabel_equivariant", equi);
    }

    return r;
}

ParcelArrow compose(const ParcelArrow& f, const ParcelArrow& g, const Gamma2Parcel& p) {
    if (f.elem < 0 || f.elem >= p.fiber_count(f.word) || g.elem < 0 || g.elem >= p.fiber_count(g.word))
        throw semantic_error("compose: arrow element out of range");
    if (word_target(f.word) != word_source(g.word))
        throw Error("not_composable", "target of first arrow differs from source of second");
    const bool f_letter = f.word == Word::IntoDefect || f.word == Word::OutOfDefect;
    const bool g_letter = g.word == Word::IntoDefect || g.word == Word::OutOfDefect;
    if (f_letter && g_letter)
        throw Error("word_too_long", "composite would lie over a length-2 word");

    if (!f_letter && !g_letter) {
        if (f.word == Word::BulkId) return {Word::BulkId, p.bulk.times(f.elem, g.elem)};
        return {Word::DefectId, p.defect.times(f.elem, g.elem)};
    }
    if (f.word == Word::BulkId && g.word == Word::IntoDefect) return {Word::IntoDefect, act_bi(p, f.elem, g.elem)};
    if (f.word == Word::IntoDefect && g.word == Word::DefectId) return {Word::IntoDefect, act_id(p, f.elem, g.elem)};
    if (f.word == Word::DefectId && g.word == Word::OutOfDefect) return {Word::OutOfDefect, act_dw(p, f.elem, g.elem)};
    if (f.word == Word::OutOfDefect && g.word == Word::BulkId) return {Word::OutOfDefect, act_wb(p, f.elem, g.elem)};
    throw Error("not_composable", "unsupported word pair");
}

long long fiber_size(const Gamma2Parcel& p, const PathWord& w) {
    validate_path_word(w);
    if (w.letters.size() > 1) throw semantic_error("fiber_size: word longer than one letter");
    if (w.letters.empty()) return w.source == Obj::Bulk ? p.bulk.n : p.defect.n;
    return w.letters[0] == Gen::IntoDefect ? p.n_into : p.n_out;
}

Gamma2Parcel build_group_parcel(const FiniteGroupTable& g_bulk, const FiniteGroupTable& g_defect,
                                const GTriple& phi, const GTriple& psi) {
    auto rb = validate_group(g_bulk);
    auto rd = validate_group(g_defect);
    if (!rb.ok() || !rd.ok()) throw semantic_error("build_group_parcel: input tables are not groups");
    if (phi.b < 0 || phi.b >= g_bulk.n || phi.d < 0 || phi.d >= g_defect.n ||
        psi.b < 0 || psi.b >= g_bulk.n || psi.d < 0 || psi.d >= g_defect.n)
        throw semantic_error("build_group_parcel: phi/psi out of range");
    if (phi.z + psi.z == 0)
        throw Error("infinite_order_violation", "z component of phi*psi vanishes");

    Gamma2Parcel p;
    p.bulk = g_bulk;
    p.defect = g_defect;

    // Double cosets by brute-force set construction; no closed form assumed.
    auto mul3 = [&](const GTriple& a, const GTriple& b) {
        return GTriple{g_bulk.times(a.b, b.b), g_defect.times(a.d, b.d), a.z + b.z};
    };
    auto coset = [&](const GTriple& mid, bool bulk_left) {
        std::map<std::tuple<int, int, long long>, int> index;
        std::vector<GTriple> elems;
        for (int l = 0; l < (bulk_left ? g_bulk.n : g_defect.n); ++l)
            for (int r = 0; r < (bulk_left ? g_defect.n : g_bulk.n); ++r) {
                GTriple left = bulk_left ? GTriple{l, g_defect.id, 0} : GTriple{g_bulk.id, l, 0};
                GTriple right = bulk_left ? GTriple{g_bulk.id, r, 0} : GTriple{r, g_defect.id, 0};
                GTriple v = mul3(mul3(left, mid), right);
                auto key = std::make_tuple(v.b, v.d, v.z);
                if (!index.count(key)) {
                    index[key] = static_cast<int>(elems.size());
                    elems.push_back(v);
                }
            }
        return std::pair(index, elems);
    };

    auto [into_index, into_elems] = coset(phi, /*bulk_left=*/true);
    auto [out_index, out_elems] = coset(psi, /*bulk_left=*/false);
    p.n_into = static_cast<int>(into_elems.size());
    p.n_out = static_cast<int>(out_elems.size());

    auto key_of = [](const GTriple& t) { return std::make_tuple(t.b, t.d, t.z); };
    p.act_bulk_into.resize(static_cast<size_t>(g_bulk.n) * p.n_into);
    p.act_into_defect.resize(static_cast<size_t>(p.n_into) * g_defect.n);
    p.act_defect_out.resize(static_cast<size_t>(g_defect.n) * p.n_out);
    p.act_out_bulk.resize(static_cast<size_t>(p.n_out) * g_bulk.n);
    for (int b = 0; b < g_bulk.n; ++b)
        for (int x = 0; x < p.n_into; ++x)
            p.act_bulk_into[static_cast<size_t>(b) * p.n_into + x] =
                into_index.at(key_of(mul3({b, g_defect.id, 0}, into_elems[x])));
    for (int x = 0; x < p.n_into; ++x)
        for (int h = 0; h < g_defect.n; ++h)
            p.act_into_defect[static_cast<size_t>(x) * g_defect.n + h] =
                into_index.at(key_of(mul3(into_elems[x], {g_bulk.id, h, 0})));
    for (int h = 0; h < g_defect.n; ++h)
        for (int w = 0; w < p.n_out; ++w)
            p.act_defect_out[static_cast<size_t>(h) * p.n_out + w] =
                out_index.at(key_of(mul3({g_bulk.id, h, 0}, out_elems[w])));
    for (int w = 0; w < p.n_out; ++w)
        for (int b = 0; b < g_bulk.n; ++b)
            p.act_out_bulk[static_cast<size_t>(w) * g_bulk.n + b] =
                out_index.at(key_of(mul3(out_elems[w], {b, g_defect.id, 0})));

    GLabel lab;
    for (int b = 0; b < g_bulk.n; ++b) lab.on_bulk.push_back({b, g_defect.id, 0});
    for (int h = 0; h < g_defect.n; ++h) lab.on_defect.push_back({g_bulk.id, h, 0});
    lab.on_into = into_elems;
    lab.on_out = out_elems;
    p.glabel = std::move(lab);
    return p;
}

}  // namespace stratsum
