#include "stratsum/cocycle.hpp"

#include <string>

namespace stratsum {

namespace {

long long ipow(long long base, int exp) {
    long long out = 1;
    for (int i = 0; i < exp; ++i) out *= base;
    return out;
}

std::string tuple_to_string(const std::vector<ParcelArrow>& tuple) {
    std::string out = "(";
    for (size_t i = 0; i < tuple.size(); ++i) {
        if (i) out += ", ";
        out += word_name(tuple[i].word);
        out += ":";
        out += std::to_string(tuple[i].elem);
    }
    out += ")";
    return out;
}

}  // namespace

AdmissibleDomain AdmissibleDomain::of(const Gamma2Parcel& p, int d) {
    if (d < 1) throw semantic_error("dimension must be positive");
    return {d, p.bulk.n, p.defect.n, p.n_into, p.n_out};
}

bool AdmissibleDomain::matches(const Gamma2Parcel& p) const {
    return n_bulk == p.bulk.n && n_defect == p.defect.n && n_into == p.n_into && n_out == p.n_out;
}

long long AdmissibleDomain::size() const {
    long long total = ipow(n_bulk, d) + ipow(n_defect, d);
    for (int j = 0; j < d; ++j) {
        total += ipow(n_bulk, j) * n_into * ipow(n_defect, d - 1 - j);
        total += ipow(n_defect, j) * n_out * ipow(n_bulk, d - 1 - j);
    }
    return total;
}

long long AdmissibleDomain::index_of(const std::vector<ParcelArrow>& tuple) const {
    if (static_cast<int>(tuple.size()) != d) throw semantic_error("tuple has wrong length");
    int letter_pos = -1;
    for (int i = 0; i < d; ++i) {
        const Word w = tuple[i].word;
        if (w == Word::IntoDefect || w == Word::OutOfDefect) {
            if (letter_pos != -1) throw Error("domain_coverage", "tuple has two generator arrows");
            letter_pos = i;
        }
        if (i + 1 < d && word_target(w) != word_source(tuple[i + 1].word))
            throw Error("domain_coverage", "tuple not composable: " + tuple_to_string(tuple));
    }

    long long base = 0;
    if (letter_pos == -1) {
        if (tuple[0].word == Word::BulkId) {
            long long idx = 0;
            for (int i = 0; i < d; ++i) idx = idx * n_bulk + tuple[i].elem;
            return idx;
        }
        base = ipow(n_bulk, d);
        long long idx = 0;
        for (int i = 0; i < d; ++i) idx = idx * n_defect + tuple[i].elem;
        return base + idx;
    }

    base = ipow(n_bulk, d) + ipow(n_defect, d);
    const bool inbound = tuple[letter_pos].word == Word::IntoDefect;
    if (!inbound)
        for (int j = 0; j < d; ++j) base += ipow(n_bulk, j) * n_into * ipow(n_defect, d - 1 - j);
    for (int j = 0; j < letter_pos; ++j) {
        if (inbound)
            base += ipow(n_bulk, j) * n_into * ipow(n_defect, d - 1 - j);
        else
            base += ipow(n_defect, j) * n_out * ipow(n_bulk, d - 1 - j);
    }
    long long idx = 0;
    for (int i = 0; i < d; ++i) {
        int radix;
        if (i < letter_pos)
            radix = inbound ? n_bulk : n_defect;
        else if (i == letter_pos)
            radix = inbound ? n_into : n_out;
        else
            radix = inbound ? n_defect : n_bulk;
        idx = idx * radix + tuple[i].elem;
    }
    return base + idx;
}

std::vector<ParcelArrow> AdmissibleDomain::tuple_at(long long index) const {
    auto unpack = [&](long long idx, const std::vector<std::pair<Word, int>>& shape) {
        std::vector<ParcelArrow> out(shape.size());
        for (int i = static_cast<int>(shape.size()) - 1; i >= 0; --i) {
            out[i] = {shape[i].first, static_cast<int>(idx % shape[i].second)};
            idx /= shape[i].second;
        }
        return out;
    };

    long long block = ipow(n_bulk, d);
    if (index < block) return unpack(index, std::vector<std::pair<Word, int>>(d, {Word::BulkId, n_bulk}));
    index -= block;
    block = ipow(n_defect, d);
    if (index < block) return unpack(index, std::vector<std::pair<Word, int>>(d, {Word::DefectId, n_defect}));
    index -= block;
    for (int j = 0; j < d; ++j) {
        block = ipow(n_bulk, j) * n_into * ipow(n_defect, d - 1 - j);
        if (index < block) {
            std::vector<std::pair<Word, int>> shape;
            for (int i = 0; i < j; ++i) shape.push_back({Word::BulkId, n_bulk});
            shape.push_back({Word::IntoDefect, n_into});
            for (int i = j + 1; i < d; ++i) shape.push_back({Word::DefectId, n_defect});
            return unpack(index, shape);
        }
        index -= block;
    }
    for (int j = 0; j < d; ++j) {
        block = ipow(n_defect, j) * n_out * ipow(n_bulk, d - 1 - j);
        if (index < block) {
            std::vector<std::pair<Word, int>> shape;
            for (int i = 0; i < j; ++i) shape.push_back({Word::DefectId, n_defect});
            shape.push_back({Word::OutOfDefect, n_out});
            for (int i = j + 1; i < d; ++i) shape.push_back({Word::BulkId, n_bulk});
            return unpack(index, shape);
        }
        index -= block;
    }
    throw semantic_error("domain index out of range");
}

RootOfUnity PartialCocycle::value(const std::vector<ParcelArrow>& tuple) const {
    return RootOfUnity(m, exponents.at(domain.index_of(tuple)));
}

PartialCocycle PartialCocycle::constant_one(const Gamma2Parcel& p, int d, int m) {
    PartialCocycle a;
    a.d = d;
    a.m = m;
    a.domain = AdmissibleDomain::of(p, d);
    a.exponents.assign(a.domain.size(), 0);
    return a;
}

PartialCocycle PartialCocycle::inverted() const {
    PartialCocycle a = *this;
    for (int& e : a.exponents) e = (m - e) % m;
    return a;
}

int GroupCochain::value_at(const std::vector<int>& args) const {
    long long idx = 0;
    for (int a : args) idx = idx * quotient.n + a;
    return values.at(idx);
}

int GroupCochain::apply_quotient(const GTriple& t) const {
    int q = quotient.times(bulk_map.at(t.b), defect_map.at(t.d));
    int zpow = quotient.id;
    int step = t.z >= 0 ? z_map : quotient.inv[z_map];
    for (long long i = 0; i < (t.z >= 0 ? t.z : -t.z); ++i) zpow = quotient.times(zpow, step);
    return quotient.times(q, zpow);
}

void check_cochain_shape(const GroupCochain& c, const Gamma2Parcel& p) {
    if (c.d < 1) throw semantic_error("cochain: dimension must be positive");
    if (c.m < 1) throw semantic_error("cochain: root order must be positive");
    check_group_shape(c.quotient);
    if (!validate_group(c.quotient).ok()) throw semantic_error("cochain: quotient is not a group");
    if (c.bulk_map.size() != static_cast<size_t>(p.bulk.n) || c.defect_map.size() != static_cast<size_t>(p.defect.n))
        throw semantic_error("cochain: quotient maps do not match the parcel's groups");
    for (int v : c.bulk_map)
        if (v < 0 || v >= c.quotient.n) throw semantic_error("cochain: bulk map entry out of range");
    for (int v : c.defect_map)
        if (v < 0 || v >= c.quotient.n) throw semantic_error("cochain: defect map entry out of range");
    if (c.z_map < 0 || c.z_map >= c.quotient.n) throw semantic_error("cochain: z map out of range");
    if (c.values.size() != static_cast<size_t>(ipow(c.quotient.n, c.d)))
        throw semantic_error("cochain: value table has wrong size");
    for (int v : c.values)
        if (v < 0 || v >= c.m) throw semantic_error("cochain: value exponent out of range");

    // The three factor maps must be homomorphisms with commuting images.
    for (int a = 0; a < p.bulk.n; ++a)
        for (int b = 0; b < p.bulk.n; ++b)
            if (c.quotient.times(c.bulk_map[a], c.bulk_map[b]) != c.bulk_map[p.bulk.times(a, b)])
                throw semantic_error("cochain: bulk map is not a homomorphism");
    for (int a = 0; a < p.defect.n; ++a)
        for (int b = 0; b < p.defect.n; ++b)
            if (c.quotient.times(c.defect_map[a], c.defect_map[b]) != c.defect_map[p.defect.times(a, b)])
                throw semantic_error("cochain: defect map is not a homomorphism");
    for (int a = 0; a < p.bulk.n; ++a) {
        if (c.quotient.times(c.bulk_map[a], c.z_map) != c.quotient.times(c.z_map, c.bulk_map[a]))
            throw semantic_error("cochain: bulk image does not commute with z image");
        for (int b = 0; b < p.defect.n; ++b)
            if (c.quotient.times(c.bulk_map[a], c.defect_map[b]) != c.quotient.times(c.defect_map[b], c.bulk_map[a]))
                throw semantic_error("cochain: bulk and defect images do not commute");
    }
    for (int b = 0; b < p.defect.n; ++b)
        if (c.quotient.times(c.defect_map[b], c.z_map) != c.quotient.times(c.z_map, c.defect_map[b]))
            throw semantic_error("cochain: defect image does not commute with z image");
}

bool check_group_cocycle(const GroupCochain& c) {
    const int q = c.quotient.n;
    const int d = c.d;
    std::vector<int> tuple(d + 1, 0);
    while (true) {
        long long e = 0;
        // face dropping the first entry
        {
            std::vector<int> f(tuple.begin() + 1, tuple.end());
            e += c.value_at(f);
        }
        int sign = -1;
        for (int i = 1; i <= d; ++i) {
            std::vector<int> f;
            f.reserve(d);
            for (int k = 0; k < i - 1; ++k) f.push_back(tuple[k]);
            f.push_back(c.quotient.times(tuple[i - 1], tuple[i]));
            for (int k = i + 1; k <= d; ++k) f.push_back(tuple[k]);
            e += sign * c.value_at(f);
            sign = -sign;
        }
        {
            std::vector<int> f(tuple.begin(), tuple.end() - 1);
            e += sign * c.value_at(f);
        }
        if (((e % c.m) + c.m) % c.m != 0) return false;

        int pos = d;
        while (pos >= 0 && tuple[pos] == q - 1) tuple[pos--] = 0;
        if (pos < 0) break;
        ++tuple[pos];
    }
    return true;
}

PartialCocycle pullback(const GroupCochain& c, const Gamma2Parcel& p) {
    if (!p.glabel) throw Error("missing_glabel", "pullback requires a labelled parcel");
    check_cochain_shape(c, p);
    PartialCocycle a;
    a.d = c.d;
    a.m = c.m;
    a.domain = AdmissibleDomain::of(p, c.d);
    const long long n = a.domain.size();
    a.exponents.resize(n);
    std::vector<int> args(c.d);
    for (long long i = 0; i < n; ++i) {
        auto tuple = a.domain.tuple_at(i);
        for (int k = 0; k < c.d; ++k) args[k] = c.apply_quotient(p.label(tuple[k].word, tuple[k].elem));
        a.exponents[i] = c.value_at(args);
    }
    return a;
}

namespace {

// Alternating coboundary exponent of alpha on a composable (d+1)-tuple with
// at most one generator arrow.
long long coboundary_exponent(const PartialCocycle& alpha, const Gamma2Parcel& p,
                              const std::vector<ParcelArrow>& tuple) {
    const int d = alpha.d;
    long long e = 0;
    {
        std::vector<ParcelArrow> f(tuple.begin() + 1, tuple.end());
        e += alpha.value(f).k;
    }
    int sign = -1;
    for (int i = 1; i <= d; ++i) {
        std::vector<ParcelArrow> f;
        f.reserve(d);
        for (int k = 0; k < i - 1; ++k) f.push_back(tuple[k]);
        f.push_back(compose(tuple[i - 1], tuple[i], p));
        for (int k = i + 1; k <= d; ++k) f.push_back(tuple[k]);
        e += sign * alpha.value(f).k;
        sign = -sign;
    }
    {
        std::vector<ParcelArrow> f(tuple.begin(), tuple.end() - 1);
        e += sign * alpha.value(f).k;
    }
    return e;
}

// Exponent of the extended-move product for (x, b_1..b_d, w) with x over the
// inbound generator and w over the outbound one.  Pairs a merge on the
// x-side tuple with the matching merge on the w-side tuple, signs
// alternating, exactly as the relation solved from the suspension moves.
long long extended_move_exponent(const PartialCocycle& alpha, const Gamma2Parcel& p,
                                 const ParcelArrow& x, const std::vector<ParcelArrow>& bs,
                                 const ParcelArrow& w) {
    const int d = alpha.d;
    long long e = 0;
    int sign = 1;
    for (int l = 0; l <= d; ++l) {
        std::vector<ParcelArrow> cside, dside;
        cside.reserve(d);
        dside.reserve(d);
        if (l == 0) {
            cside.push_back(compose(x, bs[0], p));
            for (int i = 1; i < d; ++i) cside.push_back(bs[i]);
            for (int i = 1; i < d; ++i) dside.push_back(bs[i]);
            dside.push_back(w);
        } else if (l < d) {
            cside.push_back(x);
            for (int i = 0; i < d; ++i) {
                if (i == l - 1) {
                    cside.push_back(compose(bs[i], bs[i + 1], p));
                    dside.push_back(compose(bs[i], bs[i + 1], p));
                    ++i;
                } else {
                    cside.push_back(bs[i]);
                    dside.push_back(bs[i]);
                }
            }
            dside.push_back(w);
        } else {
            cside.push_back(x);
            for (int i = 0; i + 1 < d; ++i) cside.push_back(bs[i]);
            for (int i = 0; i + 1 < d; ++i) dside.push_back(bs[i]);
            dside.push_back(compose(bs[d - 1], w, p));
        }
        e += sign * (alpha.value(cside).k + alpha.value(dside).k);
        sign = -sign;
    }
    return e;
}

}  // namespace

PartialCocycleReport check_partial_cocycle(const PartialCocycle& alpha, const Gamma2Parcel& p) {
    if (!alpha.domain.matches(p))
        throw Error("domain_coverage", "cocycle domain does not match the parcel's fibers");
    if (alpha.exponents.size() != static_cast<size_t>(alpha.domain.size()))
        throw Error("domain_coverage", "cocycle table does not cover the admissible domain");

    PartialCocycleReport rep;
    const int d = alpha.d;
    const int m = alpha.m;

    AdmissibleDomain up = alpha.domain;
    up.d = d + 1;
    const long long n_up = up.size();
    for (long long i = 0; i < n_up; ++i) {
        auto tuple = up.tuple_at(i);
        long long e = coboundary_exponent(alpha, p, tuple);
        if (((e % m) + m) % m != 0) {
            rep.coboundary_ok = false;
            rep.first_coboundary_failure = tuple_to_string(tuple);
            break;
        }
    }

    std::vector<ParcelArrow> bs(d);
    for (int xi = 0; xi < p.n_into && rep.extended_move_ok; ++xi) {
        for (int wi = 0; wi < p.n_out && rep.extended_move_ok; ++wi) {
            std::vector<int> counter(d, 0);
            while (true) {
                for (int k = 0; k < d; ++k) bs[k] = {Word::DefectId, counter[k]};
                long long e = extended_move_exponent(alpha, p, {Word::IntoDefect, xi}, bs, {Word::OutOfDefect, wi});
                if (((e % m) + m) % m != 0) {
                    rep.extended_move_ok = false;
                    std::vector<ParcelArrow> t;
                    t.push_back({Word::IntoDefect, xi});
                    for (auto& b : bs) t.push_back(b);
                    t.push_back({Word::OutOfDefect, wi});
                    rep.first_extended_failure = tuple_to_string(t);
                    break;
                }
                int pos = d - 1;
                while (pos >= 0 && counter[pos] == p.defect.n - 1) counter[pos--] = 0;
                if (pos < 0) break;
                ++counter[pos];
            }
        }
    }
    return rep;
}

bool d3_eight_term_check(const PartialCocycle& alpha, const Gamma2Parcel& p) {
    if (alpha.d != 3) throw Error("dimension_mismatch", "eight-term relation is specific to d = 3");
    if (!alpha.domain.matches(p)) throw Error("domain_coverage", "cocycle domain does not match the parcel");

    const int m = alpha.m;
    auto val = [&](const std::vector<ParcelArrow>& t) { return alpha.value(t).k; };
    for (int xi = 0; xi < p.n_into; ++xi)
        for (int wi = 0; wi < p.n_out; ++wi)
            for (int b1 = 0; b1 < p.defect.n; ++b1)
                for (int b2 = 0; b2 < p.defect.n; ++b2)
                    for (int b3 = 0; b3 < p.defect.n; ++b3) {
                        ParcelArrow x{Word::IntoDefect, xi}, w{Word::OutOfDefect, wi};
                        ParcelArrow u1{Word::DefectId, b1}, u2{Word::DefectId, b2}, u3{Word::DefectId, b3};
                        long long e = 0;
                        e += val({compose(x, u1, p), u2, u3});
                        e += val({u2, u3, w});
                        e -= val({x, compose(u1, u2, p), u3});
                        e -= val({compose(u1, u2, p), u3, w});
                        e += val({x, u1, compose(u2, u3, p)});
                        e += val({u1, compose(u2, u3, p), w});
                        e -= val({x, u1, u2});
                        e -= val({u1, u2, compose(u3, w, p)});
                        if (((e % m) + m) % m != 0) return false;
                    }
    return true;
}

}  // namespace stratsum
