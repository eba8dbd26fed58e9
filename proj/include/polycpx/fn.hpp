#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "polycpx/complex.hpp"
#include "polycpx/functor.hpp"
#include "polycpx/thicken.hpp"

namespace polycpx {

// Levels A_1 <= A_2 <= ... of pairwise-disjoint families, head first.
using Chain = std::vector<Family>;

std::string chain_name(const PolytopeComplex& c, const Chain& x);
// singleton head, disjoint levels, each level a covering refinement of the previous
bool is_fn_object(const PolytopeComplex& c, const Chain& x);
// the unique element of A_1
PolytopeId p1(const Chain& x);
Chain constant_chain(PolytopeId a, int n);

// f_n C materialized with level families of at most `size_bound` members.
class FnComplex {
public:
    FnComplex(PolytopeComplex base, int n, std::size_t size_bound);

    const PolytopeComplex& base() const { return base_; }
    const PolytopeComplex& complex() const { return complex_; }
    int n() const { return n_; }
    std::size_t bound() const { return bound_; }
    const Chain& chain(PolytopeId x) const { return chains_.at(x.value); }
    std::optional<PolytopeId> find(const Chain& x) const;
    PolytopeId at(const Chain& x) const;  // throws BoundTooSmall
    PolytopeId constant(PolytopeId a) const { return at(constant_chain(a, n_)); }
    // base horizontal morphism carrying the chain x onto the chain y, if any
    std::optional<HorizId> carrier(const Chain& x, const Chain& y) const;
    // the horizontal of f_n C induced by a base morphism out of the head of z
    std::optional<HorizId> lift(PolytopeId z, HorizId base_h) const;
    // a base morphism inducing h; throws InvalidMorphism
    HorizId descend(HorizId h) const;

private:
    PolytopeComplex base_;
    PolytopeComplex complex_;
    int n_;
    std::size_t bound_;
    std::vector<Chain> chains_;
    std::map<Chain, PolytopeId> index_;
};

// transport every member of the chain along a base morphism from its head
Chain transport(const PolytopeComplex& c, HorizId h, const Chain& x);
// x restricted under p <= head: members meet p, empties dropped
Chain restrict_chain(const PolytopeComplex& c, const Chain& x, PolytopeId p);

// The structure maps of f_. C. Faces: 1 <= i <= n; i = 1 drops the head and
// splits into fibers. Degeneracies repeat stage i. An index <= 0 gives the
// identity of src.
KleisliMorphism face_fn(const FnComplex& src, const FnComplex& dst, int i);
KleisliMorphism degeneracy_fn(const FnComplex& src, const FnComplex& dst, int i);

}  // namespace polycpx
