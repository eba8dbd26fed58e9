#include "polycpx/filtration.hpp"

#include <algorithm>
#include <set>

#include "polycpx/error.hpp"

namespace polycpx {

namespace {

ScObject empty_object(const PolytopeComplex& c) { return sc_object(c, std::vector<PolytopeId>{}); }

std::size_t index_of(const std::vector<PolytopeId>& v, PolytopeId x) {
    auto it = std::find(v.begin(), v.end(), x);
    if (it == v.end()) throw Error(ErrorCode::InvalidMorphism, "member not found");
    return static_cast<std::size_t>(it - v.begin());
}

// position of the member of `family` lying above z
std::size_t parent_in(const PolytopeComplex& c, const std::vector<PolytopeId>& family, PolytopeId z) {
    for (std::size_t k = 0; k < family.size(); ++k)
        if (c.leq(z, family[k])) return k;
    throw Error(ErrorCode::InvalidMorphism, c.name(z) + " lies under no member of " + family_string(c, family));
}

}  // namespace

CofChain make_chain(std::vector<ScObject> levels, std::vector<ScMorphism> maps) {
    if (levels.empty()) throw Error(ErrorCode::ArgumentOutOfRange, "a chain needs at least one level");
    if (maps.size() + 1 != levels.size())
        throw Error(ErrorCode::IncompatibleComposition, "chain has " + std::to_string(levels.size()) + " levels and " +
                                                            std::to_string(maps.size()) + " maps");
    for (std::size_t k = 0; k < maps.size(); ++k) {
        if (!same_object(maps[k].source(), levels[k]) || !same_object(maps[k].target(), levels[k + 1]))
            throw Error(ErrorCode::IncompatibleComposition, "map " + std::to_string(k + 1) + " does not match its levels");
        if (!is_cofibration(maps[k]))
            throw Error(ErrorCode::NotACofibration, "step " + std::to_string(k + 1) + ": " + to_string(maps[k]));
    }
    return CofChain{std::move(levels), std::move(maps)};
}

CofChain make_chain(std::vector<ScMorphism> maps) {
    if (maps.empty()) throw Error(ErrorCode::ArgumentOutOfRange, "use singleton_chain for length one");
    std::vector<ScObject> levels{maps[0].source()};
    for (const auto& m : maps) levels.push_back(m.target());
    return make_chain(std::move(levels), std::move(maps));
}

CofChain singleton_chain(const ScObject& a) { return CofChain{{a}, {}}; }

CofChain zero_chain(const PolytopeComplex& c, std::size_t n) {
    ScObject z = empty_object(c);
    return CofChain{std::vector<ScObject>(n, z), std::vector<ScMorphism>(n ? n - 1 : 0, sc_zero(z, z))};
}

bool is_acyclic(const CofChain& a) {
    return std::all_of(a.maps.begin(), a.maps.end(), [](const ScMorphism& m) { return is_weak_equivalence(m); });
}

bool is_zero(const CofChain& a) {
    return std::all_of(a.levels.begin(), a.levels.end(), [](const ScObject& x) { return x.empty(); });
}

bool chain_equal(const CofChain& a, const CofChain& b) {
    if (a.length() != b.length()) return false;
    for (std::size_t k = 0; k < a.length(); ++k)
        if (!same_object(a.levels[k], b.levels[k])) return false;
    for (std::size_t k = 0; k < a.maps.size(); ++k)
        if (!sc_equal(a.maps[k], b.maps[k])) return false;
    return true;
}

std::string to_string(const CofChain& a) {
    std::string s;
    for (std::size_t k = 0; k < a.length(); ++k) {
        if (k) {
            auto cl = classify(a.maps[k - 1]);
            s += cl.is_weak_equivalence ? " >~> " : " >-> ";
        }
        s += to_string(a.levels[k]);
    }
    return s;
}

ChainMorphism make_chain_morphism(CofChain source, CofChain target, std::vector<ScMorphism> components) {
    if (source.length() != target.length() || components.size() != source.length())
        throw Error(ErrorCode::InvalidMorphism, "chain morphism has mismatched lengths");
    for (std::size_t k = 0; k < components.size(); ++k)
        if (!same_object(components[k].source(), source.levels[k]) ||
            !same_object(components[k].target(), target.levels[k]))
            throw Error(ErrorCode::InvalidMorphism, "component " + std::to_string(k + 1) + " does not match the levels");
    for (std::size_t k = 0; k + 1 < components.size(); ++k)
        if (!sc_equal(sc_compose(source.maps[k], components[k + 1]), sc_compose(components[k], target.maps[k])))
            throw Error(ErrorCode::InvalidMorphism, "square " + std::to_string(k + 1) + " does not commute");
    return ChainMorphism{std::move(source), std::move(target), std::move(components)};
}

ChainMorphism chain_identity(const CofChain& a) {
    std::vector<ScMorphism> comps;
    for (const auto& x : a.levels) comps.push_back(sc_identity(x));
    return ChainMorphism{a, a, std::move(comps)};
}

bool chain_morphism_equal(const ChainMorphism& f, const ChainMorphism& g) {
    if (!chain_equal(f.source, g.source) || !chain_equal(f.target, g.target)) return false;
    for (std::size_t k = 0; k < f.components.size(); ++k)
        if (!sc_equal(f.components[k], g.components[k])) return false;
    return true;
}

bool is_layered(const ChainMorphism& f) {
    for (std::size_t k = 0; k + 1 < f.source.length(); ++k) {
        auto q = quotient_indices(f.source.maps[k]);
        std::set<std::size_t> qs(q.begin(), q.end());
        auto earlier = image_indices(f.target.maps[k]);
        std::set<std::size_t> es(earlier.begin(), earlier.end());
        for (const auto& e : f.components[k + 1].entries())
            if (qs.count(e.src) && es.count(e.dst)) return false;
    }
    return true;
}

bool is_chain_isomorphism(const ChainMorphism& f) {
    return std::all_of(f.components.begin(), f.components.end(), [](const ScMorphism& m) {
        auto c = classify(m);
        return c.is_weak_equivalence && c.is_pure_shuffle;
    });
}

std::vector<std::size_t> strand_indices(const CofChain& a, std::size_t i, std::size_t k) {
    if (i < 1 || i > a.length() || k < i || k > a.length())
        throw Error(ErrorCode::IndexOutOfRange, "strand " + std::to_string(i) + " at level " + std::to_string(k));
    std::set<std::size_t> cur;
    if (i == 1) {
        for (std::size_t t = 0; t < a.levels[0].size(); ++t) cur.insert(t);
    } else {
        auto q = quotient_indices(a.maps[i - 2]);
        cur.insert(q.begin(), q.end());
    }
    for (std::size_t l = i; l < k; ++l) {
        std::set<std::size_t> next;
        for (const auto& e : a.maps[l - 1].entries())
            if (cur.count(e.src)) next.insert(e.dst);
        cur = std::move(next);
    }
    return {cur.begin(), cur.end()};
}

CofChain strand(const CofChain& a, std::size_t i) {
    const std::size_t n = a.length();
    if (i < 1 || i > n) throw Error(ErrorCode::IndexOutOfRange, "strand index " + std::to_string(i));
    std::vector<std::vector<std::size_t>> idx;
    for (std::size_t k = i; k <= n; ++k) idx.push_back(strand_indices(a, i, k));
    CofChain s;
    for (std::size_t k = i; k <= n; ++k) s.levels.push_back(subfamily(a.levels[k - 1], idx[k - i]));
    for (std::size_t k = i; k < n; ++k) s.maps.push_back(restrict_morphism(a.maps[k - 1], idx[k - i], idx[k - i + 1]));
    return s;
}

CofChain pad(const CofChain& x, std::size_t n) {
    if (x.length() > n) throw Error(ErrorCode::IndexOutOfRange, "cannot pad a chain of length " +
                                                                   std::to_string(x.length()) + " to " + std::to_string(n));
    const std::size_t extra = n - x.length();
    ScObject z = empty_object(x.levels.at(0).complex);
    CofChain y;
    for (std::size_t k = 0; k < extra; ++k) y.levels.push_back(z);
    for (std::size_t k = 0; k + 1 < extra; ++k) y.maps.push_back(sc_zero(z, z));
    if (extra) y.maps.push_back(sc_zero(z, x.levels[0]));
    y.levels.insert(y.levels.end(), x.levels.begin(), x.levels.end());
    y.maps.insert(y.maps.end(), x.maps.begin(), x.maps.end());
    return y;
}

std::vector<CofChain> comb(const CofChain& a) {
    std::vector<CofChain> out;
    for (std::size_t i = 1; i <= a.length(); ++i) out.push_back(strand(a, i));
    return out;
}

CofChain cp(const std::vector<CofChain>& x) {
    const std::size_t n = x.size();
    if (n == 0) throw Error(ErrorCode::ArgumentOutOfRange, "cp of an empty tuple");
    for (std::size_t i = 0; i < n; ++i)
        if (x[i].length() != n - i)
            throw Error(ErrorCode::IndexOutOfRange, "component " + std::to_string(i + 1) + " has length " +
                                                        std::to_string(x[i].length()) + ", expected " +
                                                        std::to_string(n - i));
    CofChain acc = pad(x[0], n);
    for (std::size_t i = 1; i < n; ++i) {
        CofChain p = pad(x[i], n);
        for (std::size_t k = 0; k < n; ++k) acc.levels[k] = coproduct(acc.levels[k], p.levels[k]);
        for (std::size_t k = 0; k + 1 < n; ++k) acc.maps[k] = coproduct(acc.maps[k], p.maps[k]);
    }
    return acc;
}

ChainMorphism comb_natural_map(const CofChain& a) {
    const std::size_t n = a.length();
    CofChain c = cp(comb(a));
    std::vector<ScMorphism> comps;
    for (std::size_t k = 1; k <= n; ++k) {
        std::vector<std::size_t> sigma;
        for (std::size_t i = 1; i <= k; ++i) {
            auto idx = strand_indices(a, i, k);
            sigma.insert(sigma.end(), idx.begin(), idx.end());
        }
        comps.push_back(injection(c.levels[k - 1], a.levels[k - 1], sigma));
    }
    return make_chain_morphism(std::move(c), a, std::move(comps));
}

std::vector<ChainMorphism> comb(const ChainMorphism& f) {
    if (!is_layered(f)) throw Error(ErrorCode::NotLayered, "comb needs a layered morphism");
    const std::size_t n = f.source.length();
    std::vector<ChainMorphism> out;
    for (std::size_t i = 1; i <= n; ++i) {
        std::vector<ScMorphism> comps;
        for (std::size_t k = i; k <= n; ++k)
            comps.push_back(restrict_morphism(f.components[k - 1], strand_indices(f.source, i, k),
                                              strand_indices(f.target, i, k)));
        out.push_back(make_chain_morphism(strand(f.source, i), strand(f.target, i), std::move(comps)));
    }
    return out;
}

CofChain h_flatten(const FnComplex& fn, const ScObject& x) {
    if (!x.complex.same_as(fn.complex()))
        throw Error(ErrorCode::IncompatibleComposition, "object does not live over " + fn.complex().label());
    const auto& c = fn.base();
    const auto n = static_cast<std::size_t>(fn.n());
    std::vector<std::vector<PolytopeId>> levels(n);
    for (PolytopeId m : x.members)
        for (std::size_t j = 0; j < n; ++j) {
            const auto& f = fn.chain(m)[j];
            levels[j].insert(levels[j].end(), f.begin(), f.end());
        }
    CofChain w;
    for (auto& l : levels) w.levels.push_back(sc_object(c, l));
    for (std::size_t j = 0; j + 1 < n; ++j) {
        std::vector<std::size_t> parent;
        std::size_t base = 0;
        for (PolytopeId m : x.members) {
            const Chain& ch = fn.chain(m);
            for (PolytopeId z : ch[j + 1]) parent.push_back(base + parent_in(c, ch[j], z));
            base += ch[j].size();
        }
        w.maps.push_back(pure_sub_map(w.levels[j], w.levels[j + 1], parent));
    }
    return w;
}

ScObject g_split(const FnComplex& fn, const CofChain& w) {
    const auto n = static_cast<std::size_t>(fn.n());
    if (w.length() != n)
        throw Error(ErrorCode::ArgumentOutOfRange, "chain of length " + std::to_string(w.length()) + " over " +
                                                       fn.complex().label());
    const auto& c = fn.base();
    // root[j][k]: the level-1 member above member k of level j
    std::vector<std::vector<std::size_t>> root(n);
    for (std::size_t k = 0; k < w.levels[0].size(); ++k) root[0].push_back(k);
    for (std::size_t j = 0; j + 1 < n; ++j) {
        const auto& m = w.maps[j];
        if (!classify(m).is_pure_sub)
            throw Error(ErrorCode::NotPure, "step " + std::to_string(j + 1) + " is not a pure covering sub-map: " +
                                                to_string(m));
        root[j + 1].assign(w.levels[j + 1].size(), 0);
        for (const auto& e : m.entries()) root[j + 1][e.dst] = root[j][e.src];
    }
    std::vector<PolytopeId> members;
    for (std::size_t s = 0; s < w.levels[0].size(); ++s) {
        Chain ch(n);
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < w.levels[j].size(); ++k)
                if (root[j][k] == s) ch[j].push_back(w.levels[j][k]);
        for (auto& f : ch) std::sort(f.begin(), f.end());
        if (!is_fn_object(c, ch))
            throw Error(ErrorCode::NotPure, "fiber " + chain_name(c, ch) + " is not an object of f_n");
        members.push_back(fn.at(ch));
    }
    return sc_object(fn.complex(), members);
}

ChainMorphism h_flatten(const FnComplex& fn, const ScMorphism& phi) {
    const ScObject& x = phi.source();
    const ScObject& y = phi.target();
    CofChain hx = h_flatten(fn, x);
    CofChain hy = h_flatten(fn, y);
    const auto& c = fn.base();
    const auto& G = c.groupoid();
    const auto n = static_cast<std::size_t>(fn.n());
    auto offsets = [&](const ScObject& a) {
        std::vector<std::vector<std::size_t>> off(n);
        for (std::size_t j = 0; j < n; ++j) {
            std::size_t acc = 0;
            for (PolytopeId m : a.members) {
                off[j].push_back(acc);
                acc += fn.chain(m)[j].size();
            }
        }
        return off;
    };
    auto ox = offsets(x), oy = offsets(y);
    std::vector<std::vector<SpanEntry>> entries(n);
    for (const auto& e : phi.entries()) {
        HorizId k = fn.descend(e.h);
        const Chain& z = fn.chain(e.piece);
        const Chain& xs = fn.chain(x[e.src]);
        const Chain& yt = fn.chain(y[e.dst]);
        for (std::size_t j = 0; j < n; ++j)
            for (PolytopeId p : z[j]) {
                HorizId r = G.restrict_to(k, p);
                entries[j].push_back(SpanEntry{p, ox[j][e.src] + parent_in(c, xs[j], p),
                                               oy[j][e.dst] + index_of(yt[j], G.at(r).dst), r});
            }
    }
    std::vector<ScMorphism> comps;
    for (std::size_t j = 0; j < n; ++j) comps.emplace_back(hx.levels[j], hy.levels[j], std::move(entries[j]));
    return make_chain_morphism(std::move(hx), std::move(hy), std::move(comps));
}

ScMorphism g_split(const FnComplex& fn, const ChainMorphism& psi) {
    ScObject x = g_split(fn, psi.source);
    ScObject y = g_split(fn, psi.target);
    const auto& c = fn.base();
    const auto& G = c.groupoid();
    std::vector<SpanEntry> entries;
    for (const auto& e : psi.components.at(0).entries()) {
        const Chain& yt = fn.chain(y[e.dst]);
        Chain z = transport(c, G.inverse(e.h), yt);
        const Chain& xs = fn.chain(x[e.src]);
        for (std::size_t j = 0; j < z.size(); ++j)
            if (!family_leq(c, z[j], xs[j]))
                throw Error(ErrorCode::InvalidMorphism, chain_name(c, z) + " does not lie under " + chain_name(c, xs));
        PolytopeId zid = fn.at(z);
        auto h = fn.lift(zid, e.h);
        if (!h) throw Error(ErrorCode::InvalidMorphism, "no horizontal of " + fn.complex().label() + " over " + chain_name(c, z));
        entries.push_back(SpanEntry{zid, e.src, e.dst, *h});
    }
    ScMorphism out(x, y, std::move(entries));
    if (chain_equal(psi.source, h_flatten(fn, x)) && chain_equal(psi.target, h_flatten(fn, y)) &&
        !chain_morphism_equal(h_flatten(fn, out), psi))
        throw Error(ErrorCode::InvalidMorphism, "chain morphism is not determined by its first level");
    return out;
}

std::vector<ChainMorphism> enumerate_chain_morphisms(const CofChain& a, const CofChain& b, std::size_t limit) {
    if (a.length() != b.length()) return {};
    const std::size_t n = a.length();
    std::vector<std::vector<ScMorphism>> options;
    for (std::size_t k = 0; k < n; ++k) options.push_back(enumerate_morphisms(a.levels[k], b.levels[k], limit));
    std::vector<ChainMorphism> out;
    std::vector<ScMorphism> cur;
    auto rec = [&](auto&& self, std::size_t k) -> void {
        if (k == n) {
            if (out.size() >= limit) throw Error(ErrorCode::BoundExceeded, "more than " + std::to_string(limit) + " chain morphisms");
            out.push_back(ChainMorphism{a, b, cur});
            return;
        }
        for (const auto& f : options[k]) {
            if (k > 0 && !sc_equal(sc_compose(a.maps[k - 1], f), sc_compose(cur[k - 1], b.maps[k - 1]))) continue;
            cur.push_back(f);
            self(self, k + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

}  // namespace polycpx

namespace polycpx {

std::vector<CofChain> enumerate_chains(const PolytopeComplex& c, std::size_t max_length, std::size_t max_size) {
    auto objs = enumerate_objects(c, max_size);
    const std::size_t m = objs.size();
    std::vector<std::vector<std::vector<ScMorphism>>> cof(m, std::vector<std::vector<ScMorphism>>(m));
    if (max_length >= 2)
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) cof[i][j] = enumerate_cofibrations(objs[i], objs[j]);
    std::vector<CofChain> out;
    std::vector<ScMorphism> maps;
    auto rec = [&](auto&& self, std::size_t last) -> void {
        if (maps.empty()) out.push_back(singleton_chain(objs[last]));
        else out.push_back(make_chain(maps));
        if (maps.size() + 1 == max_length) return;
        for (std::size_t j = 0; j < m; ++j)
            for (const auto& f : cof[last][j]) {
                maps.push_back(f);
                self(self, j);
                maps.pop_back();
            }
    };
    for (std::size_t i = 0; i < m; ++i) rec(rec, i);
    return out;
}

Report check_combing(const PolytopeComplex& c, std::size_t max_length, std::size_t max_size) {
    Report r;
    r.title = "combing on SC(" + c.label() + ")";
    for (const auto& a : enumerate_chains(c, max_length, max_size)) {
        ++r.checked;
        auto t = comb(a);
        auto t2 = comb(cp(t));
        for (std::size_t i = 0; i < t.size(); ++i)
            if (!chain_equal(t[i], t2[i])) r.fail("comb cp", to_string(a) + " strand " + std::to_string(i + 1));
        if (!is_chain_isomorphism(comb_natural_map(a))) r.fail("cp comb", to_string(a));
        for (std::size_t i = 1; i <= a.length(); ++i)
            for (std::size_t j = 1; j <= a.length(); ++j)
                if (i != j && !is_zero(strand(pad(strand(a, i), a.length()), j)))
                    r.fail("St pad St", to_string(a) + " i=" + std::to_string(i) + " j=" + std::to_string(j));
    }
    r.note("chains of length <= " + std::to_string(max_length) + ", levels of size <= " + std::to_string(max_size));
    return r;
}

Report check_flatten_split(const FnComplex& fn, std::size_t max_family) {
    Report r;
    r.title = "flatten/split on SC(" + fn.complex().label() + ")";
    auto objs = enumerate_objects(fn.complex(), max_family);
    std::size_t morphisms = 0;
    for (const auto& x : objs) {
        ++r.checked;
        CofChain h = h_flatten(fn, x);
        if (!is_acyclic(h)) r.fail("acyclic", to_string(x));
        if (!same_object(g_split(fn, h), x)) r.fail("G H", to_string(x));
    }
    for (const auto& x : objs)
        for (const auto& y : objs) {
            auto ms = enumerate_morphisms(x, y);
            auto ws = enumerate_chain_morphisms(h_flatten(fn, x), h_flatten(fn, y));
            morphisms += ms.size();
            if (ms.size() != ws.size())
                r.fail("hom count", to_string(x) + " -> " + to_string(y) + ": " + std::to_string(ms.size()) + " vs " +
                                        std::to_string(ws.size()));
            for (const auto& m : ms) {
                ++r.checked;
                if (!sc_equal(g_split(fn, h_flatten(fn, m)), m)) r.fail("G H", to_string(m));
            }
            for (const auto& w : ws) {
                ++r.checked;
                if (!chain_morphism_equal(h_flatten(fn, g_split(fn, w)), w)) r.fail("H G", to_string(x) + " -> " + to_string(y));
            }
        }
    r.note(std::to_string(objs.size()) + " objects, " + std::to_string(morphisms) + " morphisms");
    return r;
}

}  // namespace polycpx
