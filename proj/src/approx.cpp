#include "polycpx/approx.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "polycpx/error.hpp"
#include "polycpx/functor.hpp"
#include "polycpx/generators.hpp"
#include "polycpx/k0.hpp"

namespace polycpx {

namespace {

std::vector<PolytopeId> image_of(const Inclusion& inc) {
    std::vector<PolytopeId> v(inc.map.begin() + 1, inc.map.end());
    std::sort(v.begin(), v.end());
    return v;
}

bool in_image(const std::vector<PolytopeId>& img, PolytopeId x) { return std::binary_search(img.begin(), img.end(), x); }

std::string yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

Inclusion make_inclusion(PolytopeComplex sub, PolytopeComplex super, std::vector<PolytopeId> map) {
    if (map.size() != sub.size() || map.at(0) != kInitial)
        throw Error(ErrorCode::NotASubcomplex, "inclusion map has the wrong shape");
    std::set<PolytopeId> seen;
    for (PolytopeId x : sub.noninitial())
        if (map[x.value] == kInitial || !seen.insert(map[x.value]).second)
            throw Error(ErrorCode::NotASubcomplex, sub.name(x) + " is not sent injectively into " + super.label());
    try {
        PolytopeFunctor f(sub, super, map, "inclusion");
    } catch (const Error& e) {
        throw Error(ErrorCode::NotASubcomplex, e.what());
    }
    return Inclusion{std::move(sub), std::move(super), std::move(map)};
}

Inclusion inclusion_by_names(const PolytopeComplex& sub, const PolytopeComplex& super) {
    std::vector<PolytopeId> map(sub.size(), kInitial);
    for (PolytopeId x : sub.noninitial()) {
        auto y = super.find(sub.name(x));
        if (!y) throw Error(ErrorCode::NotASubcomplex, sub.name(x) + " does not occur in " + super.label());
        map[x.value] = *y;
    }
    return make_inclusion(sub, super, std::move(map));
}

Inclusion subcomplex_inclusion(const PolytopeComplex& super, const std::vector<PolytopeId>& keep,
                               const std::string& label) {
    return inclusion_by_names(full_subcomplex(super, keep, label), super);
}

Inclusion constant_objects(const FnComplex& fn) {
    std::vector<PolytopeId> map(fn.base().size(), kInitial);
    for (PolytopeId x : fn.base().noninitial()) map[x.value] = fn.constant(x);
    return make_inclusion(fn.base(), fn.complex(), std::move(map));
}

bool is_full_subcomplex(const Inclusion& inc) {
    const auto& C = inc.sub;
    const auto& D = inc.super;
    for (PolytopeId x : C.noninitial())
        for (PolytopeId y : C.noninitial())
            if (D.leq(inc.map[x.value], inc.map[y.value]) && !C.leq(x, y)) return false;
    // every closure morphism of D between objects of C, seen on C, comes from C
    std::map<PolytopeId, PolytopeId> back;
    for (PolytopeId x : C.noninitial()) back[inc.map[x.value]] = x;
    const auto& GD = D.groupoid();
    const auto& GC = C.groupoid();
    for (HorizId h = 0; h < GD.size(); ++h) {
        const auto& m = GD.at(h);
        if (!back.count(m.src) || !back.count(m.dst)) continue;
        HorizMorphism seen{back[m.src], back[m.dst], {}};
        for (const auto& [z, w] : m.slice)
            if (back.count(z) && back.count(w)) seen.slice.emplace_back(back[z], back[w]);
        std::sort(seen.slice.begin(), seen.slice.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        bool found = false;
        for (HorizId k : GC.between(seen.src, seen.dst)) {
            SliceMap s;
            for (const auto& [z, w] : GC.at(k).slice) s.emplace_back(z, w);
            if (s == seen.slice) found = true;
        }
        if (!found) return false;
    }
    return true;
}

bool is_wide(const Inclusion& inc) {
    auto img = image_of(inc);
    const auto& G = inc.super.groupoid();
    for (HorizId h = 0; h < G.size(); ++h) {
        const auto& m = G.at(h);
        if (m.src == kInitial) continue;
        if (in_image(img, m.dst) && !in_image(img, m.src)) return false;
    }
    return true;
}

bool is_tall(const Inclusion& inc) {
    auto img = image_of(inc);
    for (PolytopeId y : img)
        for (PolytopeId x : inc.super.below(y))
            if (!in_image(img, x)) return false;
    return true;
}

CoverSearch has_sufficient_covers(const Inclusion& inc, int depth_bound) {
    const auto& D = inc.super;
    const auto& G = D.groupoid();
    auto img = image_of(inc);
    std::vector<bool> good(D.size(), false);
    for (PolytopeId x : D.noninitial())
        for (PolytopeId y : img)
            if (G.isomorphic(x, y)) {
                good[x.value] = true;
                break;
            }
    std::map<std::vector<PolytopeId>, std::vector<std::vector<PolytopeId>>> local;
    auto refinements = [&](PolytopeId m) -> const std::vector<std::vector<PolytopeId>>& {
        auto it = local.find({m});
        if (it != local.end()) return it->second;
        std::vector<std::vector<PolytopeId>> v;
        for (auto& f : local_families(D, m))
            if (pairwise_disjoint(D, f)) v.push_back(std::move(f));
        return local[{m}] = std::move(v);
    };
    // refine the first member not isomorphic into sub
    auto search = [&](auto&& self, const std::vector<PolytopeId>& fam, int depth) -> Tri {
        auto bad = std::find_if(fam.begin(), fam.end(), [&](PolytopeId m) { return !good[m.value]; });
        if (bad == fam.end()) return Tri::True;
        if (depth >= depth_bound) return Tri::Unknown;
        Tri best = Tri::False;
        for (const auto& f : refinements(*bad)) {
            std::vector<PolytopeId> next;
            for (PolytopeId m : fam)
                if (m != *bad) next.push_back(m);
            next.insert(next.end(), f.begin(), f.end());
            std::sort(next.begin(), next.end());
            if (!pairwise_disjoint(D, next)) continue;
            Tri t = self(self, next, depth + 1);
            if (t == Tri::True) return t;
            if (t == Tri::Unknown) best = Tri::Unknown;
        }
        return best;
    };
    CoverSearch out;
    out.report.title = "sufficient covers of " + D.label() + " by " + inc.sub.label();
    for (PolytopeId b : D.noninitial()) {
        ++out.report.checked;
        Tri t = search(search, {b}, 0);
        if (t == Tri::False) {
            out.uncoverable.push_back(b);
            out.report.fail("uncoverable", D.name(b));
        } else if (t == Tri::Unknown) {
            out.undecided.push_back(b);
            out.report.partial = true;
            out.report.note("search exhausted its depth at " + D.name(b));
        }
    }
    out.outcome = !out.uncoverable.empty() ? Tri::False : !out.undecided.empty() ? Tri::Unknown : Tri::True;
    return out;
}

ApproximationResult approximation_report(const Inclusion& inc, int depth_bound) {
    ApproximationResult r;
    r.full = is_full_subcomplex(inc);
    r.wide = is_wide(inc);
    r.tall = is_tall(inc);
    auto covers = has_sufficient_covers(inc, depth_bound);
    r.covers = covers.outcome;
    r.criteria_hold = r.full && (r.wide || r.tall) && r.covers == Tri::True;
    r.k0_sub = k0(inc.sub);
    r.k0_super = k0(inc.super);
    GroupHom h = k0_hom(PolytopeFunctor(inc.sub, inc.super, inc.map, "inclusion"));
    r.k0_iso = is_isomorphism(h);

    Report& rep = r.report;
    rep.title = "approximation " + inc.sub.label() + " in " + inc.super.label();
    rep.checked = covers.report.checked;
    rep.partial = covers.report.partial;
    std::string cov = r.covers == Tri::True ? "yes" : r.covers == Tri::False ? "NO" : "unknown";
    if (!covers.uncoverable.empty()) {
        // only the minimal ones; everything above them fails too
        std::vector<std::string> names;
        for (PolytopeId x : covers.uncoverable) {
            bool minimal = true;
            for (PolytopeId y : covers.uncoverable)
                if (y != x && inc.super.leq(y, x)) minimal = false;
            if (minimal) names.push_back(inc.super.name(x));
        }
        cov += " (";
        for (std::size_t k = 0; k < names.size(); ++k) cov += (k ? ", " : "") + names[k];
        cov += " uncoverable)";
    }
    if (r.covers == Tri::Unknown) cov += " (depth bound " + std::to_string(depth_bound) + ")";
    r.summary = "full: " + yes_no(r.full) + "; wide: " + yes_no(r.wide) + "; tall: " + yes_no(r.tall) +
                "; covers: " + cov;
    rep.note(r.summary);
    rep.note("criteria: " + std::string(r.criteria_hold ? "hold" : "fail"));
    rep.note("K_0: " + r.k0_sub.to_string() + " -> " + r.k0_super.to_string() +
             (r.k0_iso ? " (isomorphism)" : " (not an isomorphism)"));
    if (r.criteria_hold && !r.k0_iso) rep.fail("K_0", "criteria hold but the induced map is not an isomorphism");
    return r;
}

}  // namespace polycpx
