#pragma once

#include <string>
#include <vector>

#include "polycpx/fn.hpp"
#include "polycpx/report.hpp"
#include "polycpx/sc.hpp"

namespace polycpx {

// A_1 >-> A_2 >-> ... >-> A_n; maps[k] : levels[k] -> levels[k+1]
struct CofChain {
    std::vector<ScObject> levels;
    std::vector<ScMorphism> maps;

    std::size_t length() const { return levels.size(); }
};

// throws NotACofibration, IncompatibleComposition
CofChain make_chain(std::vector<ScObject> levels, std::vector<ScMorphism> maps);
CofChain make_chain(std::vector<ScMorphism> maps);
CofChain singleton_chain(const ScObject& a);
CofChain zero_chain(const PolytopeComplex& c, std::size_t n);
bool is_acyclic(const CofChain& a);
bool is_zero(const CofChain& a);
bool chain_equal(const CofChain& a, const CofChain& b);
std::string to_string(const CofChain& a);

struct ChainMorphism {
    CofChain source;
    CofChain target;
    std::vector<ScMorphism> components;
};

// checks that every square commutes; throws InvalidMorphism
ChainMorphism make_chain_morphism(CofChain source, CofChain target, std::vector<ScMorphism> components);
ChainMorphism chain_identity(const CofChain& a);
bool chain_morphism_equal(const ChainMorphism& f, const ChainMorphism& g);
bool is_layered(const ChainMorphism& f);
// levelwise isomorphisms
bool is_chain_isomorphism(const ChainMorphism& f);

// indices of A_k lying in the image of A_i / A_(i-1), for k >= i (1-based i, k)
std::vector<std::size_t> strand_indices(const CofChain& a, std::size_t i, std::size_t k);
CofChain strand(const CofChain& a, std::size_t i);
// prepend zero objects up to length n
CofChain pad(const CofChain& x, std::size_t n);
std::vector<CofChain> comb(const CofChain& a);
// coproduct of the padded strands; x[i-1] has length n-i+1
CofChain cp(const std::vector<CofChain>& x);
// the natural map cp(comb(a)) -> a
ChainMorphism comb_natural_map(const CofChain& a);
// throws NotLayered
std::vector<ChainMorphism> comb(const ChainMorphism& f);

// SC(f_n C) <-> chains of pure covering sub-maps. x lives over fn.complex().
CofChain h_flatten(const FnComplex& fn, const ScObject& x);
ScObject g_split(const FnComplex& fn, const CofChain& w);  // throws NotPure
ChainMorphism h_flatten(const FnComplex& fn, const ScMorphism& phi);
// determined by level 1; throws InvalidMorphism when the other levels disagree
ScMorphism g_split(const FnComplex& fn, const ChainMorphism& psi);

// All chain morphisms a -> b (levelwise enumeration filtered by commutativity).
std::vector<ChainMorphism> enumerate_chain_morphisms(const CofChain& a, const CofChain& b,
                                                     std::size_t limit = 100000);

// Chains of length <= max_length whose levels are objects with sorted members
// and at most max_size members.
std::vector<CofChain> enumerate_chains(const PolytopeComplex& c, std::size_t max_length, std::size_t max_size);

// comb(cp(x)) = x on strand tuples, cp(comb(a)) = a via the natural map, and
// St_j pad St_i = 0 for i != j, over enumerate_chains.
Report check_combing(const PolytopeComplex& c, std::size_t max_length, std::size_t max_size);
// h_flatten and g_split inverse on objects with at most max_family members and
// on all morphisms between them.
Report check_flatten_split(const FnComplex& fn, std::size_t max_family);

}  // namespace polycpx
