#include "polycpx/sc.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "polycpx/error.hpp"

namespace polycpx {

ScObject sc_object(const PolytopeComplex& c, std::vector<PolytopeId> members) {
    for (PolytopeId x : members)
        if (x == kInitial || x.value >= c.size())
            throw Error(ErrorCode::InvalidMorphism, "object family member must be a noninitial object");
    return ScObject{c, std::move(members)};
}

ScObject sc_object(const PolytopeComplex& c, const std::vector<std::string>& names) {
    std::vector<PolytopeId> ids;
    for (const auto& n : names) {
        auto id = c.find(n);
        if (!id) throw Error(ErrorCode::UnknownObject, n);
        ids.push_back(*id);
    }
    return sc_object(c, std::move(ids));
}

bool same_object(const ScObject& a, const ScObject& b) {
    return a.complex.same_as(b.complex) && a.members == b.members;
}

std::string to_string(const ScObject& a) { return family_string(a.complex, a.members); }

ScMorphism::ScMorphism(ScObject source, ScObject target, std::vector<SpanEntry> entries)
    : source_(std::move(source)), target_(std::move(target)), entries_(std::move(entries)) {
    if (!source_.complex.same_as(target_.complex))
        throw Error(ErrorCode::IncompatibleComposition, "span endpoints live in different complexes");
    const auto& c = source_.complex;
    const auto& g = c.groupoid();
    std::sort(entries_.begin(), entries_.end());
    for (std::size_t k = 0; k < entries_.size(); ++k) {
        const auto& e = entries_[k];
        if (e.src >= source_.size() || e.dst >= target_.size())
            throw Error(ErrorCode::InvalidMorphism, "span index out of range");
        if (e.piece == kInitial || !c.leq(e.piece, source_[e.src]))
            throw Error(ErrorCode::InvalidMorphism, c.name(e.piece) + " is not a piece of " + c.name(source_[e.src]));
        if (e.h >= g.size() || g.at(e.h).src != e.piece || g.at(e.h).dst != target_[e.dst])
            throw Error(ErrorCode::InvalidMorphism,
                        "component of " + c.name(e.piece) + " does not land on " + c.name(target_[e.dst]));
        for (std::size_t l = 0; l < k; ++l)
            if (entries_[l].src == e.src && !disjoint(c, entries_[l].piece, e.piece))
                throw Error(ErrorCode::InvalidMorphism, "pieces " + c.name(entries_[l].piece) + " and " +
                                                            c.name(e.piece) + " overlap");
    }
}

std::string to_string(const ScMorphism& f) {
    const auto& c = f.complex();
    const auto& g = c.groupoid();
    std::string s = to_string(f.source()) + " -> " + to_string(f.target()) + " [";
    for (std::size_t k = 0; k < f.entries().size(); ++k) {
        const auto& e = f.entries()[k];
        if (k) s += ", ";
        s += c.name(e.piece) + "@" + std::to_string(e.src) + "->" + std::to_string(e.dst);
        if (!g.is_identity(e.h)) s += " h" + std::to_string(e.h);
    }
    return s + "]";
}

ScMorphism sc_identity(const ScObject& a) {
    std::vector<SpanEntry> es;
    for (std::size_t i = 0; i < a.size(); ++i) es.push_back({a[i], i, i, a.complex.groupoid().identity(a[i])});
    return ScMorphism(a, a, std::move(es));
}

ScMorphism sc_zero(const ScObject& a, const ScObject& b) { return ScMorphism(a, b, {}); }

ScMorphism pure_sub_map(const ScObject& a, const ScObject& refined, const std::vector<std::size_t>& parent) {
    if (parent.size() != refined.size()) throw Error(ErrorCode::InvalidMorphism, "parent map has wrong size");
    std::vector<SpanEntry> es;
    for (std::size_t k = 0; k < refined.size(); ++k)
        es.push_back({refined[k], parent[k], k, a.complex.groupoid().identity(refined[k])});
    return ScMorphism(a, refined, std::move(es));
}

ScMorphism pure_shuffle(const ScObject& a, const ScObject& b, const std::vector<std::size_t>& sigma,
                        const std::vector<HorizId>& components) {
    if (sigma.size() != a.size() || components.size() != a.size())
        throw Error(ErrorCode::InvalidMorphism, "shuffle data has wrong size");
    std::vector<SpanEntry> es;
    for (std::size_t k = 0; k < a.size(); ++k) es.push_back({a[k], k, sigma[k], components[k]});
    return ScMorphism(a, b, std::move(es));
}

ScMorphism injection(const ScObject& a, const ScObject& b, const std::vector<std::size_t>& sigma) {
    std::vector<HorizId> comps;
    for (std::size_t k = 0; k < a.size(); ++k) comps.push_back(a.complex.groupoid().identity(a[k]));
    return pure_shuffle(a, b, sigma, comps);
}

ScMorphism sc_compose(const ScMorphism& f, const ScMorphism& g) {
    if (!same_object(f.target(), g.source()))
        throw Error(ErrorCode::IncompatibleComposition, to_string(f) + " then " + to_string(g));
    const auto& G = f.complex().groupoid();
    std::vector<SpanEntry> es;
    for (const auto& k : f.entries())
        for (const auto& l : g.entries()) {
            if (l.src != k.dst) continue;
            PolytopeId r = G.apply(G.inverse(k.h), l.piece);
            if (r == kInitial) continue;
            HorizId h = G.compose(G.restrict_to(k.h, r), l.h);
            es.push_back({r, k.src, l.dst, h});
        }
    return ScMorphism(f.source(), g.target(), std::move(es));
}

bool sc_equal(const ScMorphism& f, const ScMorphism& g) {
    if (!same_object(f.source(), g.source()) || !same_object(f.target(), g.target())) return false;
    if (f.entries() == g.entries()) return true;
    const auto& c = f.complex();
    const auto& G = c.groupoid();
    // common refinement: pairwise meets of pieces on which both legs agree
    std::vector<std::vector<PolytopeId>> zf(f.entries().size()), zg(g.entries().size());
    for (std::size_t a = 0; a < f.entries().size(); ++a)
        for (std::size_t b = 0; b < g.entries().size(); ++b) {
            const auto& e = f.entries()[a];
            const auto& e2 = g.entries()[b];
            if (e.src != e2.src) continue;
            auto m = c.meet(e.piece, e2.piece);
            if (!m || *m == kInitial) continue;
            if (e.dst != e2.dst || G.restrict_to(e.h, *m) != G.restrict_to(e2.h, *m)) continue;
            zf[a].push_back(*m);
            zg[b].push_back(*m);
        }
    for (std::size_t a = 0; a < zf.size(); ++a)
        if (is_cover(c, zf[a], f.entries()[a].piece) != Tri::True) return false;
    for (std::size_t b = 0; b < zg.size(); ++b)
        if (is_cover(c, zg[b], g.entries()[b].piece) != Tri::True) return false;
    return true;
}

bool has_covering_sub_map(const ScMorphism& f) {
    const auto& c = f.complex();
    std::vector<std::vector<PolytopeId>> pieces(f.source().size());
    for (const auto& e : f.entries()) pieces[e.src].push_back(e.piece);
    for (std::size_t i = 0; i < pieces.size(); ++i)
        if (is_cover(c, pieces[i], f.source()[i]) != Tri::True) return false;
    return true;
}

namespace {
bool dst_injective(const ScMorphism& f) {
    std::set<std::size_t> seen;
    for (const auto& e : f.entries())
        if (!seen.insert(e.dst).second) return false;
    return true;
}
}  // namespace

Classification classify(const ScMorphism& f) {
    Classification k;
    const auto& G = f.complex().groupoid();
    bool covering = has_covering_sub_map(f);
    bool inj = dst_injective(f);
    bool bij = inj && f.entries().size() == f.target().size();
    k.is_cofibration = covering && inj;
    k.is_weak_equivalence = covering && bij;

    bool sub_identity = f.entries().size() == f.source().size();
    for (const auto& e : f.entries())
        if (e.piece != f.source()[e.src]) sub_identity = false;
    k.is_pure_shuffle = sub_identity;

    bool shuffle_identity = bij;
    for (const auto& e : f.entries())
        if (!G.is_identity(e.h)) shuffle_identity = false;
    k.is_pure_sub = shuffle_identity;
    return k;
}

bool is_cofibration(const ScMorphism& f) { return classify(f).is_cofibration; }
bool is_weak_equivalence(const ScMorphism& f) { return classify(f).is_weak_equivalence; }

std::vector<std::size_t> image_indices(const ScMorphism& f) {
    std::set<std::size_t> s;
    for (const auto& e : f.entries()) s.insert(e.dst);
    return {s.begin(), s.end()};
}

ScObject image(const ScMorphism& f) { return subfamily(f.target(), image_indices(f)); }

std::vector<std::size_t> quotient_indices(const ScMorphism& f) {
    if (!is_cofibration(f)) throw Error(ErrorCode::NotACofibration, to_string(f));
    auto im = image_indices(f);
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < f.target().size(); ++j)
        if (!std::binary_search(im.begin(), im.end(), j)) out.push_back(j);
    return out;
}

ScObject quotient(const ScMorphism& f) { return subfamily(f.target(), quotient_indices(f)); }

ScObject subfamily(const ScObject& a, const std::vector<std::size_t>& indices) {
    ScObject s{a.complex, {}};
    for (std::size_t i : indices) s.members.push_back(a.members.at(i));
    return s;
}

ScMorphism subfamily_inclusion(const ScObject& a, const std::vector<std::size_t>& indices) {
    return injection(subfamily(a, indices), a, indices);
}

ScMorphism restrict_morphism(const ScMorphism& f, const std::vector<std::size_t>& src,
                             const std::vector<std::size_t>& dst) {
    std::map<std::size_t, std::size_t> spos, dpos;
    for (std::size_t k = 0; k < src.size(); ++k) spos[src[k]] = k;
    for (std::size_t k = 0; k < dst.size(); ++k) dpos[dst[k]] = k;
    std::vector<SpanEntry> es;
    for (const auto& e : f.entries()) {
        auto s = spos.find(e.src);
        if (s == spos.end()) continue;
        auto d = dpos.find(e.dst);
        if (d == dpos.end())
            throw Error(ErrorCode::InvalidMorphism, "restriction leaves the chosen target members");
        es.push_back({e.piece, s->second, d->second, e.h});
    }
    return ScMorphism(subfamily(f.source(), src), subfamily(f.target(), dst), std::move(es));
}

ScObject coproduct(const ScObject& a, const ScObject& b) {
    if (!a.complex.same_as(b.complex)) throw Error(ErrorCode::IncompatibleComposition, "coproduct across complexes");
    ScObject s = a;
    s.members.insert(s.members.end(), b.members.begin(), b.members.end());
    return s;
}

ScMorphism coproduct(const ScMorphism& f, const ScMorphism& g) {
    std::vector<SpanEntry> es = f.entries();
    for (auto e : g.entries()) {
        e.src += f.source().size();
        e.dst += f.target().size();
        es.push_back(e);
    }
    return ScMorphism(coproduct(f.source(), g.source()), coproduct(f.target(), g.target()), std::move(es));
}

ScMorphism copair(const ScMorphism& f, const ScMorphism& g) {
    if (!same_object(f.target(), g.target())) throw Error(ErrorCode::IncompatibleComposition, "copair targets differ");
    std::vector<SpanEntry> es = f.entries();
    for (auto e : g.entries()) {
        e.src += f.source().size();
        es.push_back(e);
    }
    return ScMorphism(coproduct(f.source(), g.source()), f.target(), std::move(es));
}

ScMorphism coproduct_inclusion(const ScObject& a, const ScObject& b, bool second) {
    ScObject ab = coproduct(a, b);
    const ScObject& part = second ? b : a;
    std::vector<std::size_t> sigma;
    for (std::size_t k = 0; k < part.size(); ++k) sigma.push_back(second ? a.size() + k : k);
    return injection(part, ab, sigma);
}

Pushout pushout(const ScMorphism& f, const ScMorphism& g) {
    if (!same_object(f.source(), g.source())) throw Error(ErrorCode::IncompatibleComposition, "pushout legs differ");
    auto qidx = quotient_indices(f);  // throws NotACofibration
    const auto& c = f.complex();
    const auto& G = c.groupoid();
    const ScObject& b = f.target();
    const ScObject& cc = g.target();
    ScObject p = coproduct(subfamily(b, qidx), cc);
    const std::size_t off = qidx.size();

    std::vector<SpanEntry> es;
    for (std::size_t q = 0; q < qidx.size(); ++q) es.push_back({b[qidx[q]], qidx[q], q, G.identity(b[qidx[q]])});
    for (const auto& k : f.entries())
        for (const auto& l : g.entries()) {
            if (l.src != k.src) continue;
            if (c.leq(l.piece, k.piece)) {
                PolytopeId y = G.apply(k.h, l.piece);
                HorizId h = G.compose(G.restrict_to(G.inverse(k.h), y), l.h);
                es.push_back({y, k.dst, off + l.dst, h});
            } else if (!disjoint(c, l.piece, k.piece)) {
                throw Error(ErrorCode::InvalidMorphism,
                            "piece " + c.name(l.piece) + " straddles the cofibration piece " + c.name(k.piece));
            }
        }
    ScMorphism from_b(b, p, std::move(es));
    std::vector<SpanEntry> ec;
    for (std::size_t j = 0; j < cc.size(); ++j) ec.push_back({cc[j], j, off + j, G.identity(cc[j])});
    ScMorphism from_c(cc, p, std::move(ec));
    return Pushout{p, from_b, from_c};
}

std::vector<std::vector<PolytopeId>> disjoint_families_under(const PolytopeComplex& c, PolytopeId x,
                                                             bool covering_only) {
    auto below = c.below(x);
    const std::size_t n = below.size();
    std::vector<std::vector<bool>> dis(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) dis[i][j] = dis[j][i] = disjoint(c, below[i], below[j]);
    std::vector<std::vector<PolytopeId>> out;
    std::vector<std::size_t> cur;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        if (!cur.empty() || !covering_only) {
            std::vector<PolytopeId> fam;
            for (std::size_t i : cur) fam.push_back(below[i]);
            if (!covering_only || is_cover(c, fam, x) == Tri::True) out.push_back(fam);
        }
        for (std::size_t i = start; i < n; ++i) {
            bool ok = true;
            for (std::size_t j : cur)
                if (!dis[i][j]) ok = false;
            if (!ok) continue;
            cur.push_back(i);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(0);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

enum class Kind { Any, Cofibration, WeakEquivalence };

std::vector<ScMorphism> enumerate(const ScObject& a, const ScObject& b, Kind kind, std::size_t limit) {
    const auto& c = a.complex;
    const auto& G = c.groupoid();
    const bool covering = kind != Kind::Any;
    const bool inj = kind != Kind::Any;
    std::vector<std::vector<std::vector<PolytopeId>>> options;
    for (PolytopeId x : a.members) options.push_back(disjoint_families_under(c, x, covering));

    std::vector<ScMorphism> out;
    std::vector<SpanEntry> cur;
    std::vector<bool> used(b.size(), false);

    std::function<void(std::size_t, const std::vector<PolytopeId>*, std::size_t)> rec;
    rec = [&](std::size_t i, const std::vector<PolytopeId>* fam, std::size_t pos) {
        if (fam && pos == fam->size()) {
            rec(i + 1, nullptr, 0);
            return;
        }
        if (!fam) {
            if (i == a.size()) {
                if (kind == Kind::WeakEquivalence && cur.size() != b.size()) return;
                if (out.size() >= limit)
                    throw Error(ErrorCode::BoundExceeded, "more than " + std::to_string(limit) + " morphisms");
                out.emplace_back(a, b, cur);
                return;
            }
            for (const auto& f : options[i]) rec(i, &f, 0);
            return;
        }
        PolytopeId piece = (*fam)[pos];
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (inj && used[j]) continue;
            for (HorizId h : G.between(piece, b[j])) {
                cur.push_back({piece, i, j, h});
                used[j] = true;
                rec(i, fam, pos + 1);
                used[j] = false;
                cur.pop_back();
            }
        }
    };
    rec(0, nullptr, 0);
    return out;
}

}  // namespace

std::vector<ScMorphism> enumerate_morphisms(const ScObject& a, const ScObject& b, std::size_t limit) {
    return enumerate(a, b, Kind::Any, limit);
}
std::vector<ScMorphism> enumerate_cofibrations(const ScObject& a, const ScObject& b, std::size_t limit) {
    return enumerate(a, b, Kind::Cofibration, limit);
}
std::vector<ScMorphism> enumerate_weak_equivalences(const ScObject& a, const ScObject& b, std::size_t limit) {
    return enumerate(a, b, Kind::WeakEquivalence, limit);
}

Report verify_cofiltered_preorder(const PolytopeComplex& c, const ScObject& y, std::size_t bound) {
    Report r;
    r.title = "cofiltered preorder under " + to_string(y);

    // refinements of y: one pairwise-disjoint cover per member
    std::vector<std::vector<std::vector<PolytopeId>>> covers;
    for (PolytopeId x : y.members) covers.push_back(disjoint_families_under(c, x, true));
    struct Ref {
        std::vector<std::vector<PolytopeId>> parts;
        ScObject obj;
        std::vector<std::size_t> parent;
    };
    std::vector<Ref> refs;
    std::vector<std::vector<PolytopeId>> choice;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == covers.size()) {
            Ref ref{choice, ScObject{c, {}}, {}};
            for (std::size_t k = 0; k < choice.size(); ++k)
                for (PolytopeId p : choice[k]) {
                    ref.obj.members.push_back(p);
                    ref.parent.push_back(k);
                }
            if (ref.obj.size() > bound) {
                r.partial = true;
                return;
            }
            refs.push_back(std::move(ref));
            return;
        }
        for (const auto& f : covers[i]) {
            choice.push_back(f);
            rec(i + 1);
            choice.pop_back();
        }
    };
    rec(0);
    if (r.partial) r.note("BoundExceeded: refinements with more than " + std::to_string(bound) + " pieces skipped");

    std::vector<ScMorphism> w;
    for (const auto& ref : refs) w.push_back(pure_sub_map(y, ref.obj, ref.parent));

    for (std::size_t s = 0; s < refs.size(); ++s)
        for (std::size_t t = 0; t < refs.size(); ++t) {
            std::size_t count = 0;
            for (const auto& u : enumerate_weak_equivalences(refs[s].obj, refs[t].obj))
                if (sc_equal(sc_compose(w[s], u), w[t])) ++count;
            if (count > 1)
                r.fail("parallel morphisms under Y",
                       to_string(refs[s].obj) + " => " + to_string(refs[t].obj) + " (" + std::to_string(count) + ")");
        }

    auto find_ref = [&](const std::vector<std::vector<PolytopeId>>& parts) -> std::optional<std::size_t> {
        for (std::size_t k = 0; k < refs.size(); ++k)
            if (refs[k].parts == parts) return k;
        return std::nullopt;
    };
    for (std::size_t s = 0; s < refs.size(); ++s)
        for (std::size_t t = s + 1; t < refs.size(); ++t) {
            // Z = Y' x_Y Y''
            std::vector<std::vector<PolytopeId>> parts(y.size());
            for (std::size_t i = 0; i < y.size(); ++i) {
                for (PolytopeId p : refs[s].parts[i])
                    for (PolytopeId q : refs[t].parts[i]) {
                        auto m = c.meet(p, q);
                        if (m && *m != kInitial) parts[i].push_back(*m);
                    }
                std::sort(parts[i].begin(), parts[i].end());
                parts[i].erase(std::unique(parts[i].begin(), parts[i].end()), parts[i].end());
            }
            auto z = find_ref(parts);
            std::string pair = to_string(refs[s].obj) + ", " + to_string(refs[t].obj);
            if (!z) {
                r.fail("no lower bound", pair);
                continue;
            }
            for (std::size_t side : {s, t}) {
                std::vector<std::size_t> parent;
                for (std::size_t k = 0; k < refs[*z].obj.size(); ++k) {
                    std::size_t found = refs[side].obj.size();
                    for (std::size_t l = 0; l < refs[side].obj.size(); ++l)
                        if (refs[side].parent[l] == refs[*z].parent[k] &&
                            c.leq(refs[*z].obj[k], refs[side].obj[l]))
                            found = l;
                    parent.push_back(found);
                }
                bool ok = std::find(parent.begin(), parent.end(), refs[side].obj.size()) == parent.end();
                if (ok) {
                    ScMorphism u = pure_sub_map(refs[side].obj, refs[*z].obj, parent);
                    ok = is_weak_equivalence(u) && sc_equal(sc_compose(w[side], u), w[*z]);
                }
                if (!ok) r.fail("lower bound does not commute", pair + " via " + to_string(refs[*z].obj));
            }
            if (refs.size() <= 4) r.note("lower bound of " + pair + " is " + to_string(refs[*z].obj));
        }
    r.checked = refs.size();
    return r;
}

std::vector<ScObject> enumerate_objects(const PolytopeComplex& c, std::size_t max_size) {
    std::vector<ScObject> out;
    std::vector<PolytopeId> cur;
    const auto ids = c.noninitial();
    auto rec = [&](auto&& self, std::size_t start) -> void {
        out.push_back(sc_object(c, cur));
        if (cur.size() == max_size) return;
        for (std::size_t i = start; i < ids.size(); ++i) {
            cur.push_back(ids[i]);
            self(self, i);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

}  // namespace polycpx
