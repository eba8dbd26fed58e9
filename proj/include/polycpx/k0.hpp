#pragma once

#include <string>
#include <vector>

#include "polycpx/complex.hpp"
#include "polycpx/functor.hpp"
#include "polycpx/group.hpp"

namespace polycpx {

struct K0Presentation {
    FpAbelianGroup group;
    std::vector<PolytopeId> generators;  // generator k is object generators[k]
    // basis families left out because their members are not pairwise disjoint
    std::vector<std::string> skipped_covers;
};

// Generator index of a noninitial object.
inline std::size_t k0_index(PolytopeId x) { return x.value - 1; }

K0Presentation k0_presentation(const PolytopeComplex& c);
FpAbelianGroup k0(const PolytopeComplex& c);

GroupHom k0_hom(const KleisliMorphism& f);
GroupHom k0_hom(const PolytopeFunctor& f);

}  // namespace polycpx
