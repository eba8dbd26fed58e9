#pragma once

#include <string>
#include <vector>

#include "polycpx/complex.hpp"

namespace polycpx {

PolytopeComplex trivial_complex();
PolytopeComplex sphere_complex();
PolytopeComplex interval_complex(int n);
PolytopeComplex grid_complex(int w, int h);
PolytopeComplex divisor_complex(long long n);
PolytopeComplex add_twists(const PolytopeComplex& c);

// Objects of copy k are named "<tag_k>/<name>"; the initial objects are identified.
PolytopeComplex wedge_all(const std::vector<PolytopeComplex>& parts, const std::vector<std::string>& tags,
                          const std::string& label);
PolytopeComplex wedge(const PolytopeComplex& c, const PolytopeComplex& d);
PolytopeComplex wedge_power(const PolytopeComplex& c, int n);

// Id of object x of copy `copy` (0-based) inside a wedge built by wedge_all.
// `offsets` come from wedge_offsets.
std::vector<std::size_t> wedge_offsets(const std::vector<PolytopeComplex>& parts);
PolytopeId wedge_id(const std::vector<std::size_t>& offsets, std::size_t copy, PolytopeId x);
// Copy index and local id of a wedge object.
std::pair<std::size_t, PolytopeId> wedge_locate(const std::vector<std::size_t>& offsets, PolytopeId w);

// Restriction of c to the listed objects (plus initial), keeping covers and
// closure morphisms that live entirely inside.
PolytopeComplex full_subcomplex(const PolytopeComplex& c, const std::vector<PolytopeId>& keep,
                                const std::string& label);

}  // namespace polycpx
