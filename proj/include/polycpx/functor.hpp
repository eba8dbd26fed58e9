#pragma once

#include <string>
#include <vector>

#include "polycpx/complex.hpp"
#include "polycpx/report.hpp"

namespace polycpx {

// A morphism C -> D^id: each object goes to a pairwise-disjoint family of D.
class KleisliMorphism {
public:
    KleisliMorphism(PolytopeComplex source, PolytopeComplex target, std::vector<std::vector<PolytopeId>> images,
                    std::string label = "");

    const PolytopeComplex& source() const { return source_; }
    const PolytopeComplex& target() const { return target_; }
    const std::vector<PolytopeId>& operator()(PolytopeId x) const { return images_.at(x.value); }
    const std::vector<std::vector<PolytopeId>>& images() const { return images_; }
    const std::string& label() const { return label_; }

private:
    PolytopeComplex source_;
    PolytopeComplex target_;
    std::vector<std::vector<PolytopeId>> images_;
    std::string label_;
};

// Object-valued functor. Construction checks that order, pullbacks, covers and
// horizontal generators are preserved and throws InvalidMorphism otherwise.
class PolytopeFunctor {
public:
    PolytopeFunctor(PolytopeComplex source, PolytopeComplex target, std::vector<PolytopeId> map,
                    std::string label = "");

    const PolytopeComplex& source() const { return source_; }
    const PolytopeComplex& target() const { return target_; }
    PolytopeId operator()(PolytopeId x) const { return map_.at(x.value); }
    const std::vector<PolytopeId>& map() const { return map_; }
    const std::string& label() const { return label_; }
    KleisliMorphism to_kleisli() const;

private:
    PolytopeComplex source_;
    PolytopeComplex target_;
    std::vector<PolytopeId> map_;
    std::string label_;
};

KleisliMorphism identity_kleisli(const PolytopeComplex& c);
// g after f, flattening the family of families
KleisliMorphism kleisli_compose(const KleisliMorphism& f, const KleisliMorphism& g);
bool same_kleisli(const KleisliMorphism& f, const KleisliMorphism& g);

Report validate_kleisli(const KleisliMorphism& f);

// X <= Y in the thickening: every member of X lies below some member of Y.
bool family_leq(const PolytopeComplex& c, const std::vector<PolytopeId>& x, const std::vector<PolytopeId>& y);
// pointwise meet of two families (sorted, initial dropped)
std::vector<PolytopeId> family_meet(const PolytopeComplex& c, const std::vector<PolytopeId>& x,
                                    const std::vector<PolytopeId>& y);
// a bijection matching horizontally isomorphic members exists
bool families_isomorphic(const PolytopeComplex& c, const std::vector<PolytopeId>& x,
                         const std::vector<PolytopeId>& y);

}  // namespace polycpx
