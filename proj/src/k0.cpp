#include "polycpx/k0.hpp"

#include <algorithm>
#include <set>

namespace polycpx {

K0Presentation k0_presentation(const PolytopeComplex& c) {
    K0Presentation out;
    const auto objs = c.noninitial();
    const std::size_t n = objs.size();
    std::vector<std::string> names;
    for (PolytopeId x : objs) names.push_back(c.name(x));

    std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
    IntMatrix rel(0, n);
    // every slice pair of a generator is itself a horizontal isomorphism
    for (const auto& h : c.horizontal_generators())
        for (const auto& [a, b] : h.slice) {
            if (a == b || a == kInitial || b == kInitial) continue;
            auto key = std::minmax(a.value, b.value);
            if (!seen.insert(key).second) continue;
            IntVector row(n);
            row[k0_index(a)] += 1;
            row[k0_index(b)] -= 1;
            rel.append_row(row);
        }
    for (const auto& fam : c.covering_basis()) {
        if (!pairwise_disjoint(c, fam.sources)) {
            out.skipped_covers.push_back(c.name(fam.target) + " <- " + family_string(c, fam.sources));
            continue;
        }
        IntVector row(n);
        row[k0_index(fam.target)] += 1;
        for (PolytopeId s : fam.sources) row[k0_index(s)] -= 1;
        rel.append_row(row);
    }
    out.group = FpAbelianGroup(std::move(names), std::move(rel));
    out.generators = objs;
    return out;
}

FpAbelianGroup k0(const PolytopeComplex& c) { return k0_presentation(c).group; }

GroupHom k0_hom(const KleisliMorphism& f) {
    FpAbelianGroup src = k0(f.source());
    FpAbelianGroup dst = k0(f.target());
    IntMatrix m(dst.num_generators(), src.num_generators());
    for (PolytopeId x : f.source().noninitial())
        for (PolytopeId y : f(x)) m(k0_index(y), k0_index(x)) += 1;
    return GroupHom(std::move(src), std::move(dst), std::move(m));
}

GroupHom k0_hom(const PolytopeFunctor& f) { return k0_hom(f.to_kleisli()); }

}  // namespace polycpx
