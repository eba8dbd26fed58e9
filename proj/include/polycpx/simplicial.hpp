#pragma once

#include <string>
#include <vector>

#include "polycpx/complex.hpp"
#include "polycpx/fn.hpp"
#include "polycpx/functor.hpp"
#include "polycpx/group.hpp"
#include "polycpx/report.hpp"

namespace polycpx {

// A simplicial polytope complex truncated at level N.
// faces[n][i] : C_n -> C_{n-1} for 1 <= n <= N, 0 <= i <= n (faces[0] is empty);
// degeneracies[n][i] : C_n -> C_{n+1} for 0 <= n < N, 0 <= i <= n.
struct SimplicialComplexLevels {
    std::string label;
    std::vector<PolytopeComplex> levels;
    std::vector<std::vector<KleisliMorphism>> faces;
    std::vector<std::vector<KleisliMorphism>> degeneracies;

    int top() const { return static_cast<int>(levels.size()) - 1; }
};

SimplicialComplexLevels constant_simplicial(const PolytopeComplex& c, int N);

// s_n C = f_1 C v ... v f_n C, summand m tagged "f<m>"
struct SLevel {
    int n = 0;
    std::vector<FnComplex> parts;  // parts[m-1] = f_m C
    std::vector<std::size_t> offsets;
    PolytopeComplex complex;
};

SLevel s_complex(const PolytopeComplex& c, int n, std::size_t bound);
KleisliMorphism s_face(const SLevel& src, const SLevel& dst, int i);
KleisliMorphism s_degeneracy(const SLevel& src, const SLevel& dst, int i);
SimplicialComplexLevels s_simplicial(const PolytopeComplex& c, int N, std::size_t bound);
// copy j of C^{vn} goes to the constant chains in the f_{n-j+1} summand
KleisliMorphism constant_inclusion(const PolytopeComplex& c, const PolytopeComplex& wedge_level, const SLevel& s);

SimplicialComplexLevels bar_suspension(const SimplicialComplexLevels& x, int N);
// g[n] : C_n -> D_n
SimplicialComplexLevels cofiber_model(const std::vector<KleisliMorphism>& g, const SimplicialComplexLevels& c,
                                      const SimplicialComplexLevels& d, int N);
// constant C and D
SimplicialComplexLevels cofiber_model(const KleisliMorphism& g, int N);
SimplicialComplexLevels sphere_model(int k, int N);

Report verify_simplicial_identities(const SimplicialComplexLevels& x);

// C_m = k0(level m), d_m = sum (-1)^i k0(d_i)
ChainComplexZ k0_chain_complex(const SimplicialComplexLevels& x, int N);
IntMatrix kleisli_matrix(const KleisliMorphism& f);

}  // namespace polycpx
