// One line per acceptance criterion: number, PASS/FAIL, elapsed time, detail.
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <sstream>
#include <string>

#include "oracle.hpp"
#include "polycpx/approx.hpp"
#include "polycpx/filtration.hpp"
#include "polycpx/generators.hpp"
#include "polycpx/io.hpp"
#include "polycpx/k0.hpp"
#include "polycpx/simplicial.hpp"
#include "polycpx/thicken.hpp"

using namespace polycpx;

namespace {

const std::string kFixtures = FIXTURE_DIR;

struct Outcome {
    bool ok = true;
    std::ostringstream detail;

    void expect(bool cond, const std::string& what) {
        if (!cond) {
            if (ok) detail << "failed: ";
            else detail << "; ";
            detail << what;
            ok = false;
        }
    }
};

oracle::Abelian lib(const FpAbelianGroup& g) {
    oracle::Abelian a;
    a.free_rank = g.free_rank();
    for (const auto& t : g.torsion()) a.torsion.push_back(t.get_si());
    return a;
}

oracle::Abelian free_group(std::size_t n) { return {n, {}}; }

int failures = 0;

void criterion(int number, const char* name, double limit_seconds, const std::function<void(Outcome&)>& body) {
    Outcome out;
    auto start = std::chrono::steady_clock::now();
    try {
        body(out);
    } catch (const std::exception& e) {
        out.expect(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > limit_seconds) {
        std::ostringstream s;
        s << "took " << secs << " s, limit " << limit_seconds << " s";
        out.expect(false, s.str());
    }
    if (!out.ok) ++failures;
    std::printf("criterion %2d: %s  %8.1f ms  %s%s%s\n", number, out.ok ? "PASS" : "FAIL", secs * 1000.0, name,
                out.detail.str().empty() ? "" : "  -- ", out.detail.str().c_str());
    std::fflush(stdout);
}

KleisliMorphism times_two(const PolytopeComplex& i) {
    auto seg = full_subcomplex(i, {*i.find("[0..2]")}, "segment");
    return KleisliMorphism(seg, i, {{}, {*i.find("[0..1]"), *i.find("[1..2]")}}, "times2");
}

}  // namespace

int main() {
    criterion(1, "K_0 baselines", 4.0, [](Outcome& o) {
        auto timed = [&](const std::string& what, const PolytopeComplex& c, const oracle::Abelian& want) {
            auto t0 = std::chrono::steady_clock::now();
            auto g = k0(c);
            double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            o.expect(lib(g) == want, what + " = " + g.to_string() + ", want " + want.str());
            o.expect(lib(g) == oracle::of(g), what + " disagrees with the oracle reduction");
            o.expect(s < 1.0, what + " over 1 s");
        };
        timed("K_0(sphere)", sphere_complex(), free_group(1));
        for (int m = 1; m <= 5; ++m)
            timed("K_0(sphere^" + std::to_string(m) + ")", wedge_power(sphere_complex(), m), free_group(m));
        for (long long n : {6LL, 12LL, 30LL, 360LL})
            timed("K_0(divisor(" + std::to_string(n) + "))", divisor_complex(n),
                  free_group(oracle::prime_power_divisors(n)));
        for (int n = 1; n <= 4; ++n)
            timed("K_0(interval(" + std::to_string(n) + "))", interval_complex(n), free_group(1));
    });

    criterion(2, "monad laws", 5.0, [](Outcome& o) {
        for (const auto& c : {sphere_complex(), interval_complex(2), divisor_complex(6)})
            for (std::size_t b : {2u, 3u}) {
                MonadCheckOptions opt;
                opt.bound = b;
                auto r = check_monad_laws(c, opt);
                o.expect(r.ok(), c.label() + " bound " + std::to_string(b) + ": " + render_text(r));
            }
    });

    criterion(3, "rectangle is not an algebra", 10.0, [](Outcome& o) {
        auto g = algebra_search(grid_complex(2, 2), 4);
        o.expect(g.outcome == AlgebraOutcome::Contradiction,
                 std::string("grid search gave ") + algebra_outcome_name(g.outcome));
        bool forced = false;
        for (const auto& line : g.derivation)
            if (line.find("hence empty = [0..2]x[0..2]") != std::string::npos) forced = true;
        o.expect(forced, "derivation does not force the initial object to the full square");
        auto d = algebra_search(divisor_complex(6), 2);
        o.expect(d.outcome == AlgebraOutcome::Found,
                 std::string("divisor(6) search gave ") + algebra_outcome_name(d.outcome));
    });

    criterion(4, "simplicial identities", 30.0, [](Outcome& o) {
        auto check = [&](const SimplicialComplexLevels& x, const std::string& what) {
            auto r = verify_simplicial_identities(x);
            o.expect(r.ok(), what + ": " + render_text(r));
        };
        check(s_simplicial(sphere_complex(), 3, 3), "s(sphere)");
        check(s_simplicial(interval_complex(2), 3, 3), "s(interval(2))");
        for (const auto& c : {sphere_complex(), interval_complex(2), divisor_complex(12)})
            check(bar_suspension(constant_simplicial(c, 5), 5), "bar(" + c.label() + ")");
        auto s = sphere_complex();
        auto s2 = wedge_power(s, 2);
        check(cofiber_model(identity_kleisli(s), 5), "cofiber(id)");
        check(cofiber_model(times_two(interval_complex(2)), 5), "cofiber(times2)");
        check(cofiber_model(PolytopeFunctor(s, s2, {kInitial, s2.noninitial()[0]}).to_kleisli(), 5),
              "cofiber(first copy)");
        for (int k = 0; k <= 3; ++k) check(sphere_model(k, 5), "sphere_model(" + std::to_string(k) + ")");
    });

    criterion(5, "suspension shadow", 10.0, [](Outcome& o) {
        for (const auto& c : {sphere_complex(), wedge_power(sphere_complex(), 3), interval_complex(2), divisor_complex(12)}) {
            auto cc = k0_chain_complex(bar_suspension(constant_simplicial(c, 4), 4), 4);
            auto h0 = homology(cc, 0), h1 = homology(cc, 1);
            o.expect(lib(h0) == oracle::Abelian{}, c.label() + ": H_0 = " + h0.to_string());
            o.expect(lib(h1) == lib(k0(c)), c.label() + ": H_1 = " + h1.to_string() + " vs K_0 = " + k0(c).to_string());
            o.expect(lib(h1) == oracle::homology(cc, 1), c.label() + ": H_1 disagrees with the oracle");
            o.expect(lib(h0) == oracle::homology(cc, 0), c.label() + ": H_0 disagrees with the oracle");
        }
    });

    criterion(6, "sphere models", 30.0, [](Outcome& o) {
        for (int k = 0; k <= 3; ++k) {
            auto cc = k0_chain_complex(sphere_model(k, k + 2), k + 2);
            for (int i = 0; i <= k; ++i) {
                auto h = homology(cc, i);
                auto want = i == k ? free_group(1) : oracle::Abelian{};
                o.expect(lib(h) == want, "k=" + std::to_string(k) + ": H_" + std::to_string(i) + " = " + h.to_string());
                o.expect(oracle::homology(cc, i) == want, "k=" + std::to_string(k) + ": oracle H_" + std::to_string(i));
            }
        }
    });

    criterion(7, "cofiber shadow", 10.0, [](Outcome& o) {
        auto s = sphere_complex();
        auto s2 = wedge_power(s, 2);
        auto i = interval_complex(2);
        std::vector<std::pair<std::string, KleisliMorphism>> maps{
            {"identity", identity_kleisli(s)},
            {"first copy", PolytopeFunctor(s, s2, {kInitial, s2.noninitial()[0]}).to_kleisli()},
            {"fold", PolytopeFunctor(s2, s, {kInitial, s.noninitial()[0], s.noninitial()[0]}).to_kleisli()},
            {"times2", times_two(i)}};
        const std::vector<oracle::Abelian> expected{{}, free_group(1), {}, {0, {2}}};
        for (std::size_t k = 0; k < maps.size(); ++k) {
            const auto& [name, g] = maps[k];
            auto want = oracle::cokernel(oracle::from_library(kleisli_matrix(g)),
                                         oracle::from_library(k0(g.target()).relations()),
                                         k0(g.target()).num_generators());
            o.expect(want == expected[k], name + ": oracle cokernel " + want.str());
            auto model = cofiber_model(g, 3);
            auto h0 = homology(k0_chain_complex(model, 3), 0);
            o.expect(lib(h0) == want, name + ": H_0 = " + h0.to_string() + ", cokernel " + want.str());
            GroupHom composite(k0(g.source()), h0, kleisli_matrix(g));
            o.expect(is_zero_map(composite), name + ": K_0(C) -> H_0 is not zero");
        }
    });

    criterion(8, "combing round trip", 60.0, [](Outcome& o) {
        for (const auto& c : {sphere_complex(), interval_complex(2)}) {
            auto r = check_combing(c, 3, 3);
            o.expect(r.ok() && !r.partial, c.label() + ": " + render_text(r));
        }
    });

    criterion(9, "flatten and split", 30.0, [](Outcome& o) {
        auto i = interval_complex(2);
        for (int n = 1; n <= 2; ++n) {
            FnComplex fn(i, n, 4);
            auto r = check_flatten_split(fn, 2);
            o.expect(r.ok() && !r.partial, "n=" + std::to_string(n) + ": " + render_text(r));
        }
        auto g = k0(FnComplex(i, 2, 4).complex());
        o.expect(lib(g) == free_group(1), "K_0(f_2 interval(2)) = " + g.to_string());
    });

    criterion(10, "approximation", 10.0, [](Outcome& o) {
        auto by = [](const PolytopeComplex& d, const std::vector<std::string>& names) {
            std::vector<PolytopeId> keep;
            for (const auto& n : names) keep.push_back(*d.find(n));
            return approximation_report(subcomplex_inclusion(d, keep, "sub"));
        };
        auto ss = wedge(sphere_complex(), sphere_complex());
        auto left = by(ss, {"1/*"});
        o.expect(left.tall && left.covers == Tri::False, "left copy: " + left.summary);
        auto tw = by(add_twists(sphere_complex()), {"1/*"});
        o.expect(tw.tall && tw.covers == Tri::True && tw.k0_iso, "twisted: " + tw.summary);
        auto pr = by(divisor_complex(12), {"2", "3"});
        o.expect(pr.wide && pr.covers == Tri::False && pr.k0_sub.free_rank() == 2 && pr.k0_super.free_rank() == 3,
                 "primes: " + pr.summary);
        FnComplex f2(interval_complex(2), 2, 4);
        auto cn = approximation_report(constant_objects(f2));
        o.expect(cn.wide && cn.covers == Tri::True && cn.k0_iso, "constants: " + cn.summary);
    });

    criterion(11, "cofiltered preorder", 30.0, [](Outcome& o) {
        auto c = interval_complex(3);
        std::size_t objects = 0;
        for (const auto& y : enumerate_objects(c, 2)) {
            if (y.empty()) continue;
            ++objects;
            auto r = verify_cofiltered_preorder(c, y, 6);
            o.expect(r.ok() && !r.partial, to_string(y) + ": " + render_text(r));
        }
        o.expect(objects > 0, "no objects enumerated");
    });

    criterion(12, "parser", 1.0, [](Outcome& o) {
        for (const auto& c : {trivial_complex(), sphere_complex(), interval_complex(1), interval_complex(4), grid_complex(2, 2),
                              grid_complex(3, 2), divisor_complex(6), divisor_complex(360), add_twists(sphere_complex()),
                              wedge_power(sphere_complex(), 5), wedge(sphere_complex(), interval_complex(2))}) {
            auto text = print_complex(c);
            auto back = parse_complex(text);
            o.expect(same_presentation(c, back) && print_complex(back) == text, c.label() + " does not round trip");
        }
        std::size_t located = 0, total = 0;
        for (const auto& entry : std::filesystem::directory_iterator(kFixtures + "/malformed")) {
            ++total;
            try {
                parse_complex(read_file(entry.path().string()));
            } catch (const ParseError& e) {
                if (e.location().line > 0) ++located;
            }
        }
        o.expect(total == 10 && located == 10,
                 std::to_string(located) + " of " + std::to_string(total) + " malformed fixtures located");
    });

    std::printf("%d criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
