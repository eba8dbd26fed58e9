#include "doctest.h"

#include <algorithm>

#include "polycpx/generators.hpp"
#include "polycpx/k0.hpp"
#include "polycpx/thicken.hpp"

using namespace polycpx;

namespace {

std::vector<std::string> object_names(const PolytopeComplex& c) {
    std::vector<std::string> out;
    for (auto x : c.noninitial()) out.push_back(c.name(x));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("materialized thickenings") {
    auto s = thicken(sphere_complex(), 3);
    CHECK(object_names(s.complex()) == std::vector<std::string>{"[*]"});

    auto i = thicken(interval_complex(2), 2);
    CHECK(object_names(i.complex()) ==
          std::vector<std::string>{"[[0..1]+[1..2]]", "[[0..1]]", "[[0..2]]", "[[1..2]]"});

    auto d = thicken(divisor_complex(6), 2);
    CHECK(d.find({*d.base().find("2"), *d.base().find("3")}).has_value());
    CHECK(validate_complex(d.complex()).ok());
}

TEST_CASE("unit and multiplication") {
    auto c = interval_complex(2);
    auto t = thicken(c, 2);
    auto e = eta(t);
    for (auto x : c.noninitial()) CHECK(t.family(e(x)) == Family{x});

    auto tt = thicken(t.complex(), 2);
    auto m = mu(t, tt);
    auto a = *c.find("[0..1]"), b = *c.find("[1..2]");
    auto fam = tt.at({t.singleton(a), t.singleton(b)});
    CHECK(t.family(m(fam)) == Family{a, b});

    // mu after eta at C^id is the identity
    auto e2 = eta(tt);
    for (auto x : t.complex().noninitial()) CHECK(m(e2(x)) == x);
    auto lhs = k0_hom(m).matrix() * k0_hom(e2).matrix();
    CHECK(lhs == IntMatrix::identity(k0(t.complex()).num_generators()));
}

TEST_CASE("monad laws") {
    for (const auto& c : {sphere_complex(), interval_complex(2), divisor_complex(6), grid_complex(2, 2)}) {
        CAPTURE(c.label());
        MonadCheckOptions o;
        o.bound = 2;
        auto r = check_monad_laws(c, o);
        CHECK_MESSAGE(r.ok(), render_text(r));
    }
    MonadCheckOptions o;
    o.bound = 3;
    CHECK(check_monad_laws(sphere_complex(), o).ok());
}

TEST_CASE("a corrupted multiplication is caught") {
    MonadCheckOptions o;
    o.bound = 2;
    o.corrupt_mu = [](const Family& f) {
        Family g = f;
        if (g.size() > 1) g.pop_back();
        return g;
    };
    auto r = check_monad_laws(interval_complex(2), o);
    CHECK_FALSE(r.ok());
}

TEST_CASE("Kleisli composition") {
    auto c = interval_complex(2);
    auto a = *c.find("[0..1]"), b = *c.find("[1..2]"), w = *c.find("[0..2]");
    KleisliMorphism split(c, c, {{}, {a}, {b}, {a, b}});
    KleisliMorphism shrink(c, c, {{}, {a}, {b}, {w}});
    KleisliMorphism ident = identity_kleisli(c);
    std::vector<KleisliMorphism> fs{split, shrink, ident};
    for (const auto& f : fs)
        for (const auto& g : fs)
            for (const auto& h : fs)
                CHECK(same_kleisli(kleisli_compose(kleisli_compose(f, g), h), kleisli_compose(f, kleisli_compose(g, h))));

    // functors embedded through eta compose as functors
    auto sw = PolytopeFunctor(c, c, {kInitial, a, b, w});
    CHECK(same_kleisli(kleisli_compose(sw.to_kleisli(), sw.to_kleisli()), sw.to_kleisli()));
}

TEST_CASE("flattening at the SC level") {
    auto c = interval_complex(2);
    auto t = thicken(c, 2);
    auto a = *c.find("[0..1]"), b = *c.find("[1..2]");
    auto pair = sc_object(t.complex(), {t.at({a, b})});
    auto flat = nu_apply(t, pair);
    CHECK(flat.members == std::vector<PolytopeId>{a, b});

    auto singles = sc_object(c, {a, b});
    CHECK(same_object(nu_apply(t, sc_eta(t, singles)), singles));

    auto two = sc_object(t.complex(), {t.singleton(a), t.singleton(b)});
    CHECK(is_weak_equivalence(nu_unit(t, two)));
}

TEST_CASE("algebra search") {
    auto grid = algebra_search(grid_complex(2, 2), 4);
    CHECK(grid.outcome == AlgebraOutcome::Contradiction);
    REQUIRE_FALSE(grid.derivation.empty());
    CHECK(grid.derivation.back().find("Contradiction") != std::string::npos);
    bool forced = false;
    for (const auto& line : grid.derivation)
        if (line.find("F(empty) = empty; hence empty = [0..2]x[0..2]") != std::string::npos) forced = true;
    CHECK(forced);

    auto d = algebra_search(divisor_complex(6), 2);
    CHECK(d.outcome == AlgebraOutcome::Found);
    bool product = false;
    for (const auto& [x, u] : d.assignment)
        if (x == "{2, 3}" || x == "[2+3]") product = u == "6";
    CHECK(product);

    CHECK(algebra_search(sphere_complex(), 2).outcome == AlgebraOutcome::Found);
}
