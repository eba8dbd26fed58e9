#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "polycpx/complex.hpp"
#include "polycpx/functor.hpp"
#include "polycpx/report.hpp"
#include "polycpx/sc.hpp"

namespace polycpx {

using Family = std::vector<PolytopeId>;

// C^id materialized up to a family size bound. Object names are "[x+y+...]".
class Thickening {
public:
    Thickening(PolytopeComplex base, std::size_t size_bound);

    const PolytopeComplex& base() const { return base_; }
    const PolytopeComplex& complex() const { return complex_; }
    std::size_t bound() const { return bound_; }
    // a larger pairwise-disjoint family exists outside the bound
    bool truncated() const { return truncated_; }

    const Family& family(PolytopeId x) const { return families_.at(x.value); }
    // sorted lookup; the empty family is the initial object
    std::optional<PolytopeId> find(Family f) const;
    PolytopeId at(Family f) const;  // throws BoundTooSmall
    PolytopeId singleton(PolytopeId a) const { return at({a}); }

private:
    PolytopeComplex base_;
    PolytopeComplex complex_;
    std::size_t bound_;
    bool truncated_ = false;
    std::vector<Family> families_;
    std::map<Family, PolytopeId> index_;
};

Thickening thicken(const PolytopeComplex& c, std::size_t size_bound);
std::string family_name(const PolytopeComplex& c, const Family& f);

// a |-> {a}
PolytopeFunctor eta(const Thickening& t);
// tt must thicken t.complex(); flattens families of families
PolytopeFunctor mu(const Thickening& t, const Thickening& tt);
PolytopeId flatten(const Thickening& t, const Thickening& tt, PolytopeId x);

// SC-level flattening of objects over C^id, and the unit B -> SC(eta)(nu B)
ScObject nu_apply(const Thickening& t, const ScObject& b);
ScObject sc_eta(const Thickening& t, const ScObject& a);
ScMorphism nu_unit(const Thickening& t, const ScObject& b);

struct MonadCheckOptions {
    std::size_t bound = 2;
    // applied to every flattened family before lookup; used to inject faults
    std::function<Family(const Family&)> corrupt_mu;
};
Report check_monad_laws(const PolytopeComplex& c, const MonadCheckOptions& opts);

enum class AlgebraOutcome { Found, Contradiction, Inconclusive };
const char* algebra_outcome_name(AlgebraOutcome o);

struct AlgebraResult {
    AlgebraOutcome outcome = AlgebraOutcome::Inconclusive;
    std::vector<std::string> derivation;  // numbered lines
    std::vector<std::pair<std::string, std::string>> assignment;  // F(X) = u
    std::size_t nodes = 0;
};

// Search for F : C^id -> C with F eta = id, F mu = F F^id, preserving order,
// pullbacks, horizontals and covers on the materialized part.
AlgebraResult algebra_search(const PolytopeComplex& c, std::size_t bound, std::size_t node_limit = 200000);

}  // namespace polycpx
