#include "doctest.h"

#include <filesystem>

#include "polycpx/fn.hpp"
#include "polycpx/generators.hpp"
#include "polycpx/io.hpp"
#include "polycpx/k0.hpp"
#include "polycpx/thicken.hpp"

using namespace polycpx;

namespace {

const std::string kFixtures = FIXTURE_DIR;

std::vector<PolytopeComplex> builtins() {
    return {trivial_complex(),
            sphere_complex(),
            interval_complex(2),
            interval_complex(3),
            grid_complex(2, 2),
            divisor_complex(12),
            divisor_complex(360),
            add_twists(interval_complex(2)),
            wedge_power(sphere_complex(), 3),
            FnComplex(interval_complex(2), 2, 4).complex(),
            thicken(divisor_complex(6), 2).complex()};
}

}  // namespace

TEST_CASE("round trip on builtin complexes") {
    for (const auto& c : builtins()) {
        CAPTURE(c.label());
        auto text = print_complex(c);
        auto back = parse_complex(text);
        CHECK(same_presentation(c, back));
        CHECK(print_complex(back) == text);
        CHECK(validate_complex(back).ok());
    }
}

TEST_CASE("sphere document") {
    auto text = read_file(kFixtures + "/sphere.cpx");
    CHECK(print_complex(parse_complex(text)) == text);
    CHECK(k0(parse_complex(text)).to_string() == "Z");
}

TEST_CASE("comments and inferred pullbacks") {
    auto c = parse_complex("# two halves\ncomplex halves\nobjects:\n  a  # left\n  b\n  c\nvertical:\n  a <= c\n  b <= c\n"
                           "covers:\n  c <- {a, b}\n");
    CHECK(c.noninitial().size() == 3);
    CHECK(c.pullback(*c.find("a"), *c.find("b"), *c.find("c")) == std::optional<PolytopeId>(kInitial));
    CHECK(k0(c).to_string() == "Z^2");

    auto declared = parse_complex("objects:\n  a\n  b\n  c\nvertical:\n  a <= c\n  b <= c\npullback:\n  (a,b|c) = empty\n");
    CHECK(declared.declared_pullbacks().size() == 1);
}

TEST_CASE("located errors") {
    try {
        parse_complex("complex bad\nobjects:\n  a\ncovers:\n  a <- {b}\n");
        FAIL("expected an error");
    } catch (const ParseError& e) {
        CHECK(e.code() == ErrorCode::UnknownObject);
        CHECK(e.location().line == 5);
        CHECK(e.location().column == 9);
        CHECK(std::string(e.what()) == "UnknownObject: line 5, column 9: unknown object 'b'");
    }
}

TEST_CASE("malformed fixtures") {
    std::size_t count = 0;
    for (const auto& entry : std::filesystem::directory_iterator(kFixtures + "/malformed")) {
        CAPTURE(entry.path().string());
        ++count;
        bool located = false;
        try {
            parse_complex(read_file(entry.path().string()));
        } catch (const ParseError& e) {
            located = e.location().line > 0 && e.location().column > 0;
        }
        CHECK(located);
    }
    CHECK(count == 10);
}

TEST_CASE("morphism documents") {
    auto seg = load_complex(kFixtures + "/segment.cpx");
    auto i = load_complex(kFixtures + "/interval2.cpx");
    auto doc = load_morphism_document(kFixtures + "/times2.map");
    CHECK(doc.kleisli);
    CHECK(doc.label == "times2");
    auto f = resolve_kleisli(doc, seg, i);
    CHECK(f(*seg.find("[0..2]")).size() == 2);
    auto text = print_morphism(f);
    auto again = resolve_kleisli(parse_morphism_document(text), seg, i);
    CHECK(same_kleisli(f, again));

    auto s = load_complex(kFixtures + "/sphere.cpx");
    auto s2 = load_complex(kFixtures + "/sphere2.cpx");
    auto fold = resolve_kleisli(load_morphism_document(kFixtures + "/fold.map"), s2, s);
    CHECK(print_morphism(fold, true).find("1/* |-> *") != std::string::npos);

    CHECK_THROWS_AS(resolve_kleisli(parse_morphism_document("kleisli\n[0..2] |-> {nowhere}\n"), seg, i), ParseError);
    CHECK_THROWS_AS(parse_morphism_document("functor\na |-> {b, c}\n"), ParseError);
    // images must be disjoint
    CHECK_THROWS_AS(resolve_kleisli(parse_morphism_document("kleisli\n[0..2] |-> {[0..1], [0..2]}\n"), seg, i), Error);
}
