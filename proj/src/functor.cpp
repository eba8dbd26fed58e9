#include "polycpx/functor.hpp"

#include <algorithm>

#include "polycpx/error.hpp"

namespace polycpx {

KleisliMorphism::KleisliMorphism(PolytopeComplex source, PolytopeComplex target,
                                 std::vector<std::vector<PolytopeId>> images, std::string label)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)), label_(std::move(label)) {
    if (images_.size() != source_.size())
        throw Error(ErrorCode::InvalidMorphism, label_ + ": object map has wrong size");
    if (!images_[0].empty()) throw Error(ErrorCode::InvalidMorphism, label_ + ": initial must map to empty family");
    for (std::size_t i = 0; i < images_.size(); ++i) {
        auto& img = images_[i];
        std::sort(img.begin(), img.end());
        for (PolytopeId y : img) {
            if (y == kInitial || y.value >= target_.size())
                throw Error(ErrorCode::InvalidMorphism, label_ + ": bad image of " + source_.name(PolytopeId{static_cast<std::uint32_t>(i)}));
        }
        if (!pairwise_disjoint(target_, img))
            throw Error(ErrorCode::InvalidMorphism,
                        label_ + ": image of " + source_.name(PolytopeId{static_cast<std::uint32_t>(i)}) +
                            " is not pairwise disjoint: " + family_string(target_, img));
    }
}

KleisliMorphism PolytopeFunctor::to_kleisli() const {
    std::vector<std::vector<PolytopeId>> images(map_.size());
    for (std::size_t i = 0; i < map_.size(); ++i)
        if (map_[i] != kInitial) images[i] = {map_[i]};
    return KleisliMorphism(source_, target_, std::move(images), label_);
}

PolytopeFunctor::PolytopeFunctor(PolytopeComplex source, PolytopeComplex target, std::vector<PolytopeId> map,
                                 std::string label)
    : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)), label_(std::move(label)) {
    if (map_.size() != source_.size() || map_[0] != kInitial)
        throw Error(ErrorCode::InvalidMorphism, label_ + ": object map must send initial to initial");
    Report r = validate_kleisli(to_kleisli());
    if (!r.ok())
        throw Error(ErrorCode::InvalidMorphism,
                    label_ + ": " + r.violations.front().kind + " " + r.violations.front().witness);
}

KleisliMorphism identity_kleisli(const PolytopeComplex& c) {
    std::vector<std::vector<PolytopeId>> images(c.size());
    for (PolytopeId x : c.noninitial()) images[x.value] = {x};
    return KleisliMorphism(c, c, std::move(images), "id");
}

KleisliMorphism kleisli_compose(const KleisliMorphism& f, const KleisliMorphism& g) {
    if (!f.target().same_as(g.source()))
        throw Error(ErrorCode::IncompatibleComposition, f.label() + " then " + g.label());
    std::vector<std::vector<PolytopeId>> images(f.source().size());
    for (PolytopeId x : f.source().noninitial())
        for (PolytopeId y : f(x))
            for (PolytopeId z : g(y)) images[x.value].push_back(z);
    return KleisliMorphism(f.source(), g.target(), std::move(images), g.label() + "." + f.label());
}

bool same_kleisli(const KleisliMorphism& f, const KleisliMorphism& g) {
    return f.source().same_as(g.source()) && f.target().same_as(g.target()) && f.images() == g.images();
}

bool family_leq(const PolytopeComplex& c, const std::vector<PolytopeId>& x, const std::vector<PolytopeId>& y) {
    for (PolytopeId a : x) {
        bool found = false;
        for (PolytopeId b : y)
            if (c.leq(a, b)) {
                found = true;
                break;
            }
        if (!found) return false;
    }
    return true;
}

std::vector<PolytopeId> family_meet(const PolytopeComplex& c, const std::vector<PolytopeId>& x,
                                    const std::vector<PolytopeId>& y) {
    std::vector<PolytopeId> out;
    for (PolytopeId a : x)
        for (PolytopeId b : y) {
            auto m = c.meet(a, b);
            if (m && *m != kInitial) out.push_back(*m);
        }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {
bool match_from(const HorizontalGroupoid& g, const std::vector<PolytopeId>& x, const std::vector<PolytopeId>& y,
                std::size_t i, std::vector<bool>& used) {
    if (i == x.size()) return true;
    for (std::size_t j = 0; j < y.size(); ++j) {
        if (used[j] || !g.isomorphic(x[i], y[j])) continue;
        used[j] = true;
        if (match_from(g, x, y, i + 1, used)) return true;
        used[j] = false;
    }
    return false;
}
}  // namespace

bool families_isomorphic(const PolytopeComplex& c, const std::vector<PolytopeId>& x,
                         const std::vector<PolytopeId>& y) {
    if (x.size() != y.size()) return false;
    std::vector<bool> used(y.size(), false);
    return match_from(c.groupoid(), x, y, 0, used);
}

Report validate_kleisli(const KleisliMorphism& f) {
    Report r;
    r.title = "validate morphism " + f.label();
    const auto& C = f.source();
    const auto& D = f.target();
    auto nm = [&](PolytopeId x) { return C.name(x); };
    const auto objs = C.noninitial();

    for (PolytopeId x : objs)
        for (PolytopeId y : objs)
            if (x != y && C.leq(x, y) && !family_leq(D, f(x), f(y)))
                r.fail("order not preserved", nm(x) + " <= " + nm(y));

    for (PolytopeId x : objs)
        for (PolytopeId y : objs) {
            if (!(x < y) || !C.have_common_bound(x, y)) continue;
            auto m = C.meet(x, y);
            if (!m) continue;
            std::vector<PolytopeId> lhs = *m == kInitial ? std::vector<PolytopeId>{} : f(*m);
            if (lhs != family_meet(D, f(x), f(y))) r.fail("pullback not preserved", "(" + nm(x) + ", " + nm(y) + ")");
        }

    for (const auto& fam : C.covering_basis()) {
        std::vector<PolytopeId> pieces;
        for (PolytopeId s : fam.sources)
            for (PolytopeId e : f(s)) pieces.push_back(e);
        for (PolytopeId e : f(fam.target)) {
            std::vector<PolytopeId> under;
            for (PolytopeId p : pieces)
                if (D.leq(p, e)) under.push_back(p);
            Tri t = is_cover(D, under, e);
            if (t == Tri::False)
                r.fail("cover not preserved", nm(fam.target) + " <- " + family_string(C, fam.sources));
            else if (t == Tri::Unknown)
                r.note("cover image undecided: " + nm(fam.target));
        }
    }

    for (const auto& h : C.horizontal_generators())
        if (!families_isomorphic(D, f(h.src), f(h.dst)))
            r.fail("horizontal generator not preserved", h.name + ": " + nm(h.src) + " -> " + nm(h.dst));
    r.checked = objs.size();
    return r;
}

}  // namespace polycpx
