#include "doctest.h"

#include "polycpx/error.hpp"
#include "polycpx/filtration.hpp"
#include "polycpx/generators.hpp"
#include "polycpx/k0.hpp"

using namespace polycpx;

namespace {

const PolytopeComplex& sphere() {
    static const PolytopeComplex s = sphere_complex();
    return s;
}

ScObject spheres(std::size_t n) { return sc_object(sphere(), std::vector<PolytopeId>(n, *sphere().find("*"))); }

}  // namespace

TEST_CASE("flattening f_n objects") {
    auto i = interval_complex(2);
    FnComplex fn(i, 2, 4);
    auto c = *i.find("[0..2]"), a = *i.find("[0..1]"), b = *i.find("[1..2]");

    auto constant = sc_object(fn.complex(), {fn.constant(c)});
    auto flat = h_flatten(fn, constant);
    CHECK(is_acyclic(flat));
    CHECK(to_string(flat) == "{[0..2]} >~> {[0..2]}");

    auto split = fn.at({{c}, {a, b}});
    auto w = h_flatten(fn, sc_object(fn.complex(), {split}));
    CHECK(to_string(w) == "{[0..2]} >~> {[0..1], [1..2]}");
    auto back = g_split(fn, w);
    CHECK(back.members == std::vector<PolytopeId>{split});

    auto two = sc_object(fn.complex(), {fn.constant(a), fn.constant(b)});
    auto w2 = h_flatten(fn, two);
    CHECK(w2.levels[0].size() == 2);
    CHECK(w2.levels[1].size() == 2);
    CHECK(same_object(g_split(fn, w2), two));
}

TEST_CASE("splitting needs pure maps") {
    auto one = spheres(1), two = spheres(2);
    FnComplex fn(sphere(), 2, 3);
    CHECK_THROWS_AS(g_split(fn, make_chain({injection(one, two, {0})})), Error);
}

TEST_CASE("flatten and split are inverse") {
    auto i = interval_complex(2);
    for (int n = 1; n <= 2; ++n) {
        FnComplex fn(i, n, 4);
        auto r = check_flatten_split(fn, 1);
        CHECK_MESSAGE(r.ok(), render_text(r));
        CHECK(r.checked > 0);
    }
}

TEST_CASE("layered morphisms") {
    auto one = spheres(1), three = spheres(3);
    auto ch = make_chain({injection(one, three, {0})});
    CHECK(is_layered(chain_identity(ch)));

    auto i = interval_complex(2);
    auto a = *i.find("[0..1]"), b = *i.find("[1..2]");
    auto empty = sc_object(i, std::vector<PolytopeId>{});
    auto y = sc_object(i, {a, b}), x = sc_object(i, {a});
    auto from_zero = make_chain({sc_zero(empty, y)});
    auto from_x = make_chain({injection(x, y, {0})});
    auto f = make_chain_morphism(from_zero, from_x, {sc_zero(empty, x), sc_identity(y)});
    CHECK_FALSE(is_layered(f));
    CHECK_THROWS_AS(comb(f), Error);
}

TEST_CASE("morphisms of acyclic chains are layered") {
    auto i = interval_complex(2);
    std::size_t seen = 0;
    auto chains = enumerate_chains(i, 2, 2);
    std::vector<CofChain> acyclic;
    for (const auto& c : chains)
        if (c.length() == 2 && is_acyclic(c)) acyclic.push_back(c);
    REQUIRE_FALSE(acyclic.empty());
    for (const auto& s : acyclic)
        for (const auto& t : acyclic)
            for (const auto& m : enumerate_chain_morphisms(s, t)) {
                CHECK(is_layered(m));
                ++seen;
            }
    CHECK(seen > 0);
}

TEST_CASE("strands") {
    auto one = spheres(1), three = spheres(3);
    auto ch = make_chain({injection(one, three, {0})});
    CHECK(to_string(strand(ch, 1)) == "{*} >~> {*}");
    CHECK(to_string(strand(ch, 2)) == "{*, *}");
    auto parts = comb(ch);
    REQUIRE(parts.size() == 2);
    auto back = cp(parts);
    CHECK(is_chain_isomorphism(comb_natural_map(ch)));
    CHECK(back.levels[1].size() == 3);

    auto acyc = make_chain({sc_identity(three)});
    CHECK(chain_equal(strand(acyc, 1), acyc));
    CHECK(is_zero(strand(acyc, 2)));
    CHECK(is_zero(strand(zero_chain(sphere(), 2), 1)));

    for (std::size_t i = 1; i <= 2; ++i)
        for (std::size_t j = 1; j <= 2; ++j)
            if (i != j) CHECK(is_zero(strand(pad(strand(ch, i), 2), j)));
}

TEST_CASE("combing round trips") {
    auto r = check_combing(sphere(), 3, 2);
    CHECK_MESSAGE(r.ok(), render_text(r));
    auto ri = check_combing(interval_complex(2), 2, 2);
    CHECK_MESSAGE(ri.ok(), render_text(ri));
}

TEST_CASE("K_0 of f_n") {
    auto i = interval_complex(2);
    FnComplex f2(i, 2, 4);
    CHECK(f2.complex().noninitial().size() == 4);
    auto p = k0_presentation(f2.complex());
    CHECK(p.group.to_string() == "Z");
    CHECK(p.group.relations().rows() >= 3);
    for (int n = 1; n <= 3; ++n) {
        CHECK(k0(FnComplex(sphere(), n, 3).complex()).to_string() == "Z");
        CHECK(validate_complex(FnComplex(i, n, 4).complex()).ok());
    }
}
