#include "doctest.h"

#include "oracle.hpp"
#include "polycpx/generators.hpp"
#include "polycpx/k0.hpp"
#include "polycpx/simplicial.hpp"

using namespace polycpx;

namespace {

std::vector<std::string> image_names(const KleisliMorphism& f, PolytopeId x) {
    std::vector<std::string> out;
    for (auto y : f(x)) out.push_back(f.target().name(y));
    return out;
}

oracle::Abelian lib(const FpAbelianGroup& g) {
    oracle::Abelian a;
    a.free_rank = g.free_rank();
    for (const auto& t : g.torsion()) a.torsion.push_back(t.get_si());
    return a;
}

void check_homology_oracle(const SimplicialComplexLevels& x, int n) {
    auto cc = k0_chain_complex(x, n);
    for (int m = 0; m < n; ++m) CHECK(lib(homology(cc, m)) == oracle::homology(cc, m));
}

}  // namespace

TEST_CASE("faces and degeneracies of f_n") {
    auto s = sphere_complex();
    FnComplex s1(s, 1, 3), s2(s, 2, 3);
    auto star = *s.find("*");
    auto d = face_fn(s2, s1, 1);
    CHECK(d(s2.constant(star)) == std::vector<PolytopeId>{s1.constant(star)});

    auto i = interval_complex(2);
    auto a = *i.find("[0..1]"), b = *i.find("[1..2]"), c = *i.find("[0..2]");
    FnComplex f1(i, 1, 4), f2(i, 2, 4), f3(i, 3, 4);
    auto split = f2.at({{c}, {a, b}});
    auto d1 = face_fn(f2, f1, 1);
    CHECK(d1(split) == std::vector<PolytopeId>{f1.constant(a), f1.constant(b)});
    auto d2 = face_fn(f2, f1, 2);
    CHECK(d2(split) == std::vector<PolytopeId>{f1.constant(c)});

    auto s1map = degeneracy_fn(f2, f3, 1);
    CHECK(image_names(s1map, split) == std::vector<std::string>{"[[0..2]]~[[0..2]]~[[0..1]+[1..2]]"});
}

TEST_CASE("s_n levels") {
    auto s = sphere_complex();
    for (int n = 1; n <= 3; ++n) CHECK(s_complex(s, n, 3).complex.noninitial().size() == static_cast<std::size_t>(n));

    auto i = interval_complex(2);
    auto s1 = s_complex(i, 1, 4), s2 = s_complex(i, 2, 4);
    auto d0 = s_face(s2, s1, 0);
    const auto& c2 = s2.complex;
    for (auto x : c2.noninitial()) {
        const bool top = c2.name(x).rfind("f2/", 0) == 0;
        if (top) CHECK(d0(x).empty());
        else CHECK(d0(x).size() == 1);
    }
    auto d2 = s_face(s2, s1, 2);
    for (auto x : c2.noninitial())
        if (c2.name(x).rfind("f1/", 0) == 0) CHECK(d2(x).empty());

    CHECK(k0(s2.complex).to_string() == "Z^2");
}

TEST_CASE("simplicial identities") {
    auto s = sphere_complex();
    auto i = interval_complex(2);
    for (const auto& x : {s_simplicial(s, 3, 3), s_simplicial(i, 3, 3), bar_suspension(constant_simplicial(i, 4), 4),
                          sphere_model(1, 4), cofiber_model(identity_kleisli(s), 4)}) {
        CAPTURE(x.label);
        auto r = verify_simplicial_identities(x);
        CHECK_MESSAGE(r.ok(), render_text(r));
    }
}

TEST_CASE("a corrupted face is caught") {
    auto x = s_simplicial(interval_complex(2), 3, 3);
    // replace d_1 on level 2 by d_2, dropping the fiber split
    x.faces[2][1] = x.faces[2][2];
    auto r = verify_simplicial_identities(x);
    CHECK_FALSE(r.ok());
    REQUIRE_FALSE(r.violations.empty());
    CHECK(r.violations[0].witness.find("level") != std::string::npos);
}

TEST_CASE("model sizes") {
    auto s = sphere_complex();
    auto bar = bar_suspension(constant_simplicial(s, 4), 4);
    for (int n = 0; n <= 4; ++n) CHECK(bar.levels[n].noninitial().size() == static_cast<std::size_t>(n));
    auto sm = sphere_model(2, 4);
    for (int n = 0; n <= 4; ++n) CHECK(sm.levels[n].noninitial().size() == static_cast<std::size_t>(n * n));
    auto cof = cofiber_model(identity_kleisli(s), 4);
    for (int n = 0; n <= 4; ++n) CHECK(cof.levels[n].noninitial().size() == static_cast<std::size_t>(n + 1));
}

TEST_CASE("bar chain complex of the sphere") {
    auto bar = bar_suspension(constant_simplicial(sphere_complex(), 4), 4);
    auto cc = k0_chain_complex(bar, 4);
    for (std::size_t m = 0; m <= 4; ++m) CHECK(cc.level(m).num_generators() == m);
    CHECK(homology(cc, 0).to_string() == "0");
    CHECK(homology(cc, 1).to_string() == "Z");
    // d_{m-1} d_m = 0 by the oracle's matrix product
    for (std::size_t m = 2; m <= 4; ++m) {
        auto a = oracle::from_library(cc.differential(m - 1)), b = oracle::from_library(cc.differential(m));
        for (std::size_t r = 0; r < a.size(); ++r)
            for (std::size_t col = 0; col < (b.empty() ? 0 : b[0].size()); ++col) {
                long long sum = 0;
                for (std::size_t k = 0; k < b.size(); ++k) sum += a[r][k] * b[k][col];
                CHECK(sum == 0);
            }
    }
}

TEST_CASE("homology of the models against the oracle") {
    check_homology_oracle(bar_suspension(constant_simplicial(divisor_complex(12), 4), 4), 4);
    check_homology_oracle(bar_suspension(constant_simplicial(wedge_power(sphere_complex(), 3), 4), 4), 4);
    for (int k = 0; k <= 2; ++k) check_homology_oracle(sphere_model(k, k + 2), k + 2);
    auto i = interval_complex(2);
    auto seg = full_subcomplex(i, {*i.find("[0..2]")}, "segment");
    KleisliMorphism times2(seg, i, {{}, {*i.find("[0..1]"), *i.find("[1..2]")}});
    check_homology_oracle(cofiber_model(times2, 4), 4);
}

TEST_CASE("suspension shadow") {
    for (const auto& c : {sphere_complex(), interval_complex(2), divisor_complex(6), grid_complex(2, 2)}) {
        auto cc = k0_chain_complex(bar_suspension(constant_simplicial(c, 3), 3), 3);
        CHECK(homology(cc, 0).to_string() == "0");
        CHECK(groups_isomorphic(homology(cc, 1), k0(c)));
    }
}

TEST_CASE("constant objects commute with the structure maps") {
    auto i = interval_complex(2);
    const int N = 3;
    auto bar = bar_suspension(constant_simplicial(i, N), N);
    std::vector<SLevel> s;
    for (int n = 0; n <= N; ++n) s.push_back(s_complex(i, n, 4));
    std::vector<KleisliMorphism> incl;
    for (int n = 0; n <= N; ++n) incl.push_back(constant_inclusion(i, bar.levels[n], s[n]));
    for (int n = 1; n <= N; ++n)
        for (int k = 0; k <= n; ++k) {
            CAPTURE(n);
            CAPTURE(k);
            auto lhs = kleisli_compose(incl[n], s_face(s[n], s[n - 1], k));
            auto rhs = kleisli_compose(bar.faces[n][k], incl[n - 1]);
            CHECK(same_kleisli(lhs, rhs));
        }
    for (int n = 0; n < N; ++n)
        for (int k = 0; k <= n; ++k) {
            auto lhs = kleisli_compose(incl[n], s_degeneracy(s[n], s[n + 1], k));
            auto rhs = kleisli_compose(bar.degeneracies[n][k], incl[n + 1]);
            CHECK(same_kleisli(lhs, rhs));
        }
    CHECK(is_isomorphism(k0_hom(incl[2])));
}
