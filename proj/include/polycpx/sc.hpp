#pragma once

#include <compare>
#include <string>
#include <vector>

#include "polycpx/complex.hpp"
#include "polycpx/report.hpp"

namespace polycpx {

// A formal finite union of polytopes; the index set is the position.
struct ScObject {
    PolytopeComplex complex;
    std::vector<PolytopeId> members;

    std::size_t size() const { return members.size(); }
    bool empty() const { return members.empty(); }
    PolytopeId operator[](std::size_t i) const { return members.at(i); }
};

ScObject sc_object(const PolytopeComplex& c, std::vector<PolytopeId> members);
ScObject sc_object(const PolytopeComplex& c, const std::vector<std::string>& names);
bool same_object(const ScObject& a, const ScObject& b);
std::string to_string(const ScObject& a);

// One component of a span A <- A' -> B: the middle piece sits under
// A[src] and is carried by a horizontal isomorphism onto B[dst].
struct SpanEntry {
    PolytopeId piece;
    std::size_t src = 0;
    std::size_t dst = 0;
    HorizId h = 0;
    friend auto operator<=>(const SpanEntry&, const SpanEntry&) = default;
};

class ScMorphism {
public:
    // Validates the span and stores it in canonical order; throws InvalidMorphism.
    ScMorphism(ScObject source, ScObject target, std::vector<SpanEntry> entries);

    const ScObject& source() const { return source_; }
    const ScObject& target() const { return target_; }
    const std::vector<SpanEntry>& entries() const { return entries_; }
    const PolytopeComplex& complex() const { return source_.complex; }

private:
    ScObject source_;
    ScObject target_;
    std::vector<SpanEntry> entries_;
};

std::string to_string(const ScMorphism& f);

ScMorphism sc_identity(const ScObject& a);
ScMorphism sc_zero(const ScObject& a, const ScObject& b);
// A -> A' where A'[k] <= A[parent[k]]; the shuffle leg is the identity of A'
ScMorphism pure_sub_map(const ScObject& a, const ScObject& refined, const std::vector<std::size_t>& parent);
// components carry a[k] onto b[sigma[k]]
ScMorphism pure_shuffle(const ScObject& a, const ScObject& b, const std::vector<std::size_t>& sigma,
                        const std::vector<HorizId>& components);
// a[k] == b[sigma[k]] with identity components
ScMorphism injection(const ScObject& a, const ScObject& b, const std::vector<std::size_t>& sigma);

// g after f
ScMorphism sc_compose(const ScMorphism& f, const ScMorphism& g);
bool sc_equal(const ScMorphism& f, const ScMorphism& g);

struct Classification {
    bool is_cofibration = false;
    bool is_weak_equivalence = false;
    bool is_pure_sub = false;
    bool is_pure_shuffle = false;
};
Classification classify(const ScMorphism& f);
bool is_cofibration(const ScMorphism& f);
bool is_weak_equivalence(const ScMorphism& f);
// every source member is covered by its pieces
bool has_covering_sub_map(const ScMorphism& f);

// target indices hit by the shuffle, ascending
std::vector<std::size_t> image_indices(const ScMorphism& f);
ScObject image(const ScMorphism& f);
// target indices outside the image of a cofibration; throws NotACofibration
std::vector<std::size_t> quotient_indices(const ScMorphism& f);
ScObject quotient(const ScMorphism& f);

ScObject subfamily(const ScObject& a, const std::vector<std::size_t>& indices);
ScMorphism subfamily_inclusion(const ScObject& a, const std::vector<std::size_t>& indices);
// f restricted to source members `src` and target members `dst`; throws
// InvalidMorphism when a kept piece lands outside `dst`
ScMorphism restrict_morphism(const ScMorphism& f, const std::vector<std::size_t>& src,
                             const std::vector<std::size_t>& dst);

ScObject coproduct(const ScObject& a, const ScObject& b);
ScMorphism coproduct(const ScMorphism& f, const ScMorphism& g);
// [f, g] : A + B -> C
ScMorphism copair(const ScMorphism& f, const ScMorphism& g);
ScMorphism coproduct_inclusion(const ScObject& a, const ScObject& b, bool second);

struct Pushout {
    ScObject object;  // (B/A) + C
    ScMorphism from_b;
    ScMorphism from_c;
};
Pushout pushout(const ScMorphism& f, const ScMorphism& g);

// Pairwise-disjoint families of noninitial sub-objects of x (sorted).
std::vector<std::vector<PolytopeId>> disjoint_families_under(const PolytopeComplex& c, PolytopeId x,
                                                             bool covering_only);

// Objects with sorted members, up to max_size members (repetition allowed).
std::vector<ScObject> enumerate_objects(const PolytopeComplex& c, std::size_t max_size);

// All morphisms A -> B; throws BoundExceeded beyond `limit`.
std::vector<ScMorphism> enumerate_morphisms(const ScObject& a, const ScObject& b, std::size_t limit = 100000);
std::vector<ScMorphism> enumerate_cofibrations(const ScObject& a, const ScObject& b, std::size_t limit = 100000);
std::vector<ScMorphism> enumerate_weak_equivalences(const ScObject& a, const ScObject& b,
                                                    std::size_t limit = 100000);

Report verify_cofiltered_preorder(const PolytopeComplex& c, const ScObject& y, std::size_t bound);

}  // namespace polycpx
