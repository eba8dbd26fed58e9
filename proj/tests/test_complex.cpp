#include "doctest.h"

#include "polycpx/complex.hpp"
#include "polycpx/generators.hpp"

using namespace polycpx;

namespace {

PolytopeId id(const PolytopeComplex& c, const char* name) { return *c.find(name); }

std::vector<PolytopeComplex> suite() {
    return {trivial_complex(),        sphere_complex(),   interval_complex(2), interval_complex(4),
            grid_complex(2, 2),       divisor_complex(6), divisor_complex(12), divisor_complex(360),
            wedge_power(sphere_complex(), 3), add_twists(wedge(sphere_complex(), sphere_complex()))};
}

}  // namespace

TEST_CASE("generators validate") {
    for (const auto& c : suite()) {
        CAPTURE(c.label());
        auto r = validate_complex(c);
        CHECK_MESSAGE(r.ok(), render_text(r));
    }
}

TEST_CASE("redeclared pullback is caught") {
    auto i = interval_complex(2);
    auto b = builder_from(i, "bad");
    b.declare_pullback(b.at("[0..1]"), b.at("[1..2]"), b.at("[0..2]"), b.at("[0..2]"));
    auto r = validate_complex(b.build());
    CHECK_FALSE(r.ok());
}

TEST_CASE("disjointness") {
    auto i = interval_complex(2);
    CHECK(disjoint(i, id(i, "[0..1]"), id(i, "[1..2]")));
    CHECK_FALSE(disjoint(i, id(i, "[0..1]"), id(i, "[0..2]")));
    auto s = sphere_complex();
    CHECK_FALSE(disjoint(s, id(s, "*"), id(s, "*")));

    for (const auto& c : suite())
        for (auto x : c.noninitial()) {
            CHECK_FALSE(disjoint(c, x, x));
            for (auto y : c.noninitial()) CHECK(disjoint(c, x, y) == disjoint(c, y, x));
        }
}

TEST_CASE("covers") {
    auto i = interval_complex(2);
    CHECK(is_cover(i, {id(i, "[0..1]"), id(i, "[1..2]")}, id(i, "[0..2]")) == Tri::True);
    for (const auto& c : suite())
        for (auto x : c.noninitial()) CHECK(is_cover(c, {x}, x) == Tri::True);
    auto d = divisor_complex(4);
    CHECK(is_cover(d, {id(d, "2")}, id(d, "4")) == Tri::False);
}

TEST_CASE("is_cover is monotone in the depth bound") {
    for (const auto& c : {interval_complex(3), grid_complex(2, 2), divisor_complex(12)}) {
        auto objs = c.noninitial();
        for (auto t : objs)
            for (auto a : objs)
                for (auto b : objs) {
                    if (!pairwise_disjoint(c, {a, b}) || a == b) continue;
                    std::vector<PolytopeId> fam{std::min(a, b), std::max(a, b)};
                    bool seen_true = false;
                    for (int depth = 0; depth <= 6; ++depth) {
                        Tri v = is_cover(c, fam, t, depth);
                        if (seen_true) CHECK(v == Tri::True);
                        seen_true = seen_true || v == Tri::True;
                    }
                }
    }
}

TEST_CASE("horizontal closure") {
    auto i = interval_complex(2);
    auto a = id(i, "[0..1]"), b = id(i, "[1..2]");
    const auto& g = i.groupoid();
    auto fwd = g.between(a, b);
    REQUIRE(fwd.size() == 1);
    CHECK(g.apply(g.inverse(fwd[0]), b) == a);
    CHECK(g.between(b, a).size() == 1);
    CHECK(g.is_identity(g.compose(fwd[0], g.inverse(fwd[0]))));

    auto s = sphere_complex();
    CHECK(s.groupoid().size() == s.size());

    for (const auto& c : suite()) {
        auto once = horizontal_closure(c);
        auto twice = horizontal_closure(once);
        CHECK(same_presentation(once, twice));
    }
}

TEST_CASE("grid translations match integer translation vectors") {
    auto g = grid_complex(2, 2);
    const auto& gr = g.groupoid();
    // oracle: a rectangle [x0..x1]x[y0..y1] translates to every rectangle of the same shape
    std::size_t expected = 0;
    for (int w = 1; w <= 2; ++w)
        for (int h = 1; h <= 2; ++h) {
            std::size_t count = static_cast<std::size_t>((3 - w) * (3 - h));
            expected += count * count;
        }
    std::size_t got = 0;
    for (auto x : g.noninitial())
        for (auto y : g.noninitial()) got += gr.between(x, y).size();
    CHECK(got == expected);
}

TEST_CASE("wedges") {
    auto s2 = wedge_power(sphere_complex(), 2);
    CHECK(s2.noninitial().size() == 2);
    auto ids = s2.noninitial();
    CHECK(s2.groupoid().between(ids[0], ids[1]).empty());
    CHECK(wedge_power(interval_complex(2), 0).size() == 1);
    CHECK(wedge(sphere_complex(), interval_complex(2)).noninitial().size() == 4);

    auto a = interval_complex(2), b = sphere_complex(), c = divisor_complex(6);
    auto left = wedge(wedge(a, b), c);
    auto right = wedge(a, wedge(b, c));
    CHECK(left.size() == right.size());
    CHECK(left.covering_basis().size() == right.covering_basis().size());
    CHECK(left.hasse_edges().size() == right.hasse_edges().size());
    CHECK(left.horizontal_generators().size() == right.horizontal_generators().size());

    auto with_trivial = wedge(a, trivial_complex());
    CHECK(with_trivial.size() == a.size());
    CHECK(with_trivial.hasse_edges().size() == a.hasse_edges().size());
}

TEST_CASE("builtin enumerations") {
    auto i = interval_complex(2);
    CHECK(i.size() == 4);
    CHECK(i.covering_basis().size() == 1);

    auto d = divisor_complex(12);
    std::vector<std::string> names;
    for (auto x : d.noninitial()) names.push_back(d.name(x));
    CHECK(names == std::vector<std::string>{"2", "3", "4", "6", "12"});
    bool twelve = false, six = false;
    for (const auto& f : d.covering_basis()) {
        if (d.name(f.target) == "12") twelve = family_string(d, f.sources) == "{3, 4}";
        if (d.name(f.target) == "6") six = family_string(d, f.sources) == "{2, 3}";
    }
    CHECK(twelve);
    CHECK(six);

    auto g = grid_complex(2, 2);
    CHECK(g.noninitial().size() == 9);
    std::vector<PolytopeId> cells;
    for (auto x : g.noninitial())
        if (g.below(x).size() == 1) cells.push_back(x);
    CHECK(cells.size() == 4);
    auto top = g.noninitial().back();
    for (auto x : g.noninitial()) CHECK(g.leq(x, top));
    CHECK(is_cover(g, cells, top) == Tri::True);
}
