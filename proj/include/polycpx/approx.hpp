#pragma once

#include <string>
#include <vector>

#include "polycpx/complex.hpp"
#include "polycpx/fn.hpp"
#include "polycpx/group.hpp"
#include "polycpx/report.hpp"

namespace polycpx {

// sub -> super, injective on objects
struct Inclusion {
    PolytopeComplex sub;
    PolytopeComplex super;
    std::vector<PolytopeId> map;
};

// Checks that the map is injective and preserves order, covers and horizontals;
// throws NotASubcomplex.
Inclusion make_inclusion(PolytopeComplex sub, PolytopeComplex super, std::vector<PolytopeId> map);
// objects matched by name
Inclusion inclusion_by_names(const PolytopeComplex& sub, const PolytopeComplex& super);
// full_subcomplex on the listed objects
Inclusion subcomplex_inclusion(const PolytopeComplex& super, const std::vector<PolytopeId>& keep,
                               const std::string& label);

// C as the constant chains of f_n C
Inclusion constant_objects(const FnComplex& fn);

bool is_full_subcomplex(const Inclusion& inc);
bool is_wide(const Inclusion& inc);
bool is_tall(const Inclusion& inc);

struct CoverSearch {
    Tri outcome = Tri::True;
    std::vector<PolytopeId> uncoverable;  // objects of super
    std::vector<PolytopeId> undecided;
    Report report;
};
// For each object of super, look for a pairwise-disjoint cover by members
// horizontally isomorphic to objects of sub, refining at most depth_bound times.
CoverSearch has_sufficient_covers(const Inclusion& inc, int depth_bound = 6);

struct ApproximationResult {
    bool full = false;
    bool wide = false;
    bool tall = false;
    Tri covers = Tri::Unknown;
    bool criteria_hold = false;
    FpAbelianGroup k0_sub;
    FpAbelianGroup k0_super;
    bool k0_iso = false;
    std::string summary;  // one line, e.g. "full: yes; wide: yes; tall: no; covers: yes"
    Report report;
};
ApproximationResult approximation_report(const Inclusion& inc, int depth_bound = 6);

}  // namespace polycpx
