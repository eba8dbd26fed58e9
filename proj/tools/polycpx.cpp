// polycpx command-line driver. Exit codes: 0 ok, 1 check failed, 2 usage or parse error.
#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <sstream>

#include "polycpx/approx.hpp"
#include "polycpx/filtration.hpp"
#include "polycpx/generators.hpp"
#include "polycpx/io.hpp"
#include "polycpx/k0.hpp"
#include "polycpx/sc.hpp"
#include "polycpx/simplicial.hpp"
#include "polycpx/thicken.hpp"

using namespace polycpx;
using nlohmann::ordered_json;

namespace {

constexpr const char* kSchema = "scissors-report/1";

ordered_json to_json(const Report& r, const std::string& command, ordered_json data = ordered_json::object()) {
    ordered_json j;
    j["schema"] = kSchema;
    j["command"] = command;
    j["title"] = r.title;
    j["status"] = r.ok() ? "pass" : "fail";
    j["partial"] = r.partial;
    j["checked"] = r.checked;
    j["violations"] = ordered_json::array();
    for (const auto& v : r.violations) j["violations"].push_back({{"kind", v.kind}, {"witness", v.witness}});
    j["notes"] = r.notes;
    j["data"] = std::move(data);
    return j;
}

int emit(const Report& r, const std::string& command, bool json, ordered_json data = ordered_json::object(),
         const std::string& text_extra = "") {
    if (json) std::cout << to_json(r, command, std::move(data)).dump(2) << "\n";
    else std::cout << text_extra << render_text(r);
    return r.ok() ? 0 : 1;
}

std::string bigints(const std::vector<BigInt>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].get_str();
    return s + ")";
}

PolytopeComplex generate(const std::vector<std::string>& args) {
    auto num = [&](std::size_t i) -> long long {
        if (args.size() <= i) throw CLI::ValidationError("generate", args[0] + " needs more arguments");
        return std::stoll(args[i]);
    };
    const std::string& kind = args.at(0);
    if (kind == "trivial") return trivial_complex();
    if (kind == "sphere") return sphere_complex();
    if (kind == "sphere-wedge") return wedge_power(sphere_complex(), static_cast<int>(num(1)));
    if (kind == "interval") return interval_complex(static_cast<int>(num(1)));
    if (kind == "grid") return grid_complex(static_cast<int>(num(1)), static_cast<int>(num(2)));
    if (kind == "divisor") return divisor_complex(num(1));
    if (kind == "twisted-sphere") return add_twists(sphere_complex());
    if (kind == "twisted-interval") return add_twists(interval_complex(static_cast<int>(num(1))));
    if (kind == "interval-wedge") return wedge(interval_complex(static_cast<int>(num(1))), interval_complex(static_cast<int>(num(1))));
    if (kind == "fn-interval")
        return FnComplex(interval_complex(static_cast<int>(num(1))), static_cast<int>(num(2)), 4).complex();
    throw CLI::ValidationError("generate", "unknown generator '" + kind + "'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"polytope complexes, scissors congruence K_0 and their simplicial models"};
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "structured output");

    std::string file, file2, mapfile, check_kind;
    int levels = 4, k = 1;
    std::size_t bound = 0;
    bool homology_flag = false;
    std::vector<std::string> gen_args;

    auto* validate = app.add_subcommand("validate", "check the complex axioms");
    validate->add_option("file", file)->required();
    validate->add_flag("--json", json);

    auto* k0cmd = app.add_subcommand("k0", "K_0 of a complex");
    k0cmd->add_option("file", file)->required();
    k0cmd->add_flag("--json", json);

    auto* suspend = app.add_subcommand("suspend", "bar model and its K_0 chain complex");
    suspend->add_option("file", file)->required();
    suspend->add_option("--levels", levels)->required()->check(CLI::Range(2, 12));
    suspend->add_flag("--homology", homology_flag);
    suspend->add_flag("--json", json);

    auto* cofiber = app.add_subcommand("cofiber", "cofiber model of a Kleisli morphism C -> D");
    cofiber->add_option("C", file)->required();
    cofiber->add_option("D", file2)->required();
    cofiber->add_option("--map", mapfile)->required();
    cofiber->add_option("--levels", levels)->required()->check(CLI::Range(2, 12));
    cofiber->add_flag("--json", json);

    auto* sphere = app.add_subcommand("sphere", "sphere models");
    sphere->add_option("--k", k)->required()->check(CLI::Range(0, 4));
    sphere->add_option("--levels", levels)->required()->check(CLI::Range(2, 7));
    sphere->add_flag("--json", json);

    auto* check = app.add_subcommand("check", "law suites");
    check->add_option("kind", check_kind)->required()->check(CLI::IsMember({"monad", "simplicial", "combing", "cofiltered"}));
    check->add_option("file", file)->required();
    check->add_option("--bound", bound);
    check->add_option("--levels", levels);
    check->add_flag("--json", json);

    auto* algebra = app.add_subcommand("algebra-search", "search for a T-algebra structure");
    algebra->add_option("file", file)->required();
    algebra->add_option("--bound", bound)->required();
    algebra->add_flag("--json", json);

    auto* approx = app.add_subcommand("approx", "approximation criteria for an inclusion");
    approx->add_option("sub", file)->required();
    approx->add_option("super", file2)->required();
    approx->add_flag("--json", json);

    auto* gen = app.add_subcommand("generate", "print a builtin complex");
    gen->add_option("args", gen_args, "sphere | sphere-wedge M | interval N | grid W H | divisor N | "
                                      "twisted-sphere | twisted-interval N | interval-wedge N | fn-interval N n")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*validate) {
            auto c = load_complex(file);
            return emit(validate_complex(c), "validate", json);
        }
        if (*k0cmd) {
            auto c = load_complex(file);
            auto p = k0_presentation(c);
            Report r;
            r.title = "K_0(" + c.label() + ") = " + p.group.to_string();
            r.checked = p.generators.size();
            auto classes = p.group.generator_classes();
            ordered_json data;
            data["group"] = p.group.to_string();
            data["free_rank"] = p.group.free_rank();
            data["torsion"] = ordered_json::array();
            for (const auto& t : p.group.torsion()) data["torsion"].push_back(t.get_str());
            data["classes"] = ordered_json::object();
            std::ostringstream text;
            for (std::size_t i = 0; i < p.generators.size(); ++i) {
                std::string cls = bigints(classes[i]);
                r.note("[" + c.name(p.generators[i]) + "] = " + cls);
                data["classes"][c.name(p.generators[i])] = cls;
            }
            for (const auto& s : p.skipped_covers) r.note("skipped cover " + s);
            return emit(r, "k0", json, data);
        }
        if (*suspend) {
            auto c = load_complex(file);
            auto bar = bar_suspension(constant_simplicial(c, levels), levels);
            Report r = verify_simplicial_identities(bar);
            r.title = "suspension of " + c.label() + " up to level " + std::to_string(levels);
            ordered_json data;
            data["levels"] = ordered_json::array();
            for (int n = 0; n <= levels; ++n) {
                r.note("level " + std::to_string(n) + ": " + std::to_string(bar.levels[n].size() - 1) + " objects");
                data["levels"].push_back(bar.levels[n].size() - 1);
            }
            if (homology_flag) {
                auto cc = k0_chain_complex(bar, levels);
                auto kc = k0(c);
                data["homology"] = ordered_json::array();
                for (int m = 0; m < levels; ++m) {
                    auto h = homology(cc, static_cast<std::size_t>(m));
                    std::string line = "H_" + std::to_string(m) + " = " + h.to_string();
                    if (m == 0 && (h.free_rank() != 0 || !h.torsion().empty()))
                        r.fail("H_0", "expected 0, got " + h.to_string());
                    if (m == 1) {
                        bool iso = groups_isomorphic(h, kc);
                        line += iso ? " (matches K_0 = " + kc.to_string() + ")" : "";
                        if (!iso) r.fail("H_1", h.to_string() + " vs K_0 = " + kc.to_string());
                    }
                    if (m >= 2) line += " (not theorem-checked)";
                    r.note(line);
                    data["homology"].push_back(h.to_string());
                }
            }
            return emit(r, "suspend", json, data);
        }
        if (*cofiber) {
            auto c = load_complex(file);
            auto d = load_complex(file2);
            auto g = resolve_kleisli(load_morphism_document(mapfile), c, d);
            auto model = cofiber_model(g, levels);
            Report r = verify_simplicial_identities(model);
            r.title = "cofiber of " + (g.label().empty() ? std::string("g") : g.label()) + " up to level " +
                      std::to_string(levels);
            auto cc = k0_chain_complex(model, levels);
            auto h0 = homology(cc, 0);
            auto cok = cokernel(k0_hom(g));
            bool iso = groups_isomorphic(h0, cok);
            r.note("H_0 = " + h0.to_string());
            r.note("coker K_0(g) = " + cok.to_string());
            if (!iso) r.fail("H_0", h0.to_string() + " vs cokernel " + cok.to_string());
            GroupHom into(k0(c), cok, kleisli_matrix(g));
            if (!is_zero_map(into)) r.fail("composite", "K_0(C) -> K_0(D) -> H_0 is not zero");
            else r.note("K_0(C) -> K_0(D) -> H_0 is zero");
            ordered_json data{{"H0", h0.to_string()}, {"cokernel", cok.to_string()}};
            return emit(r, "cofiber", json, data);
        }
        if (*sphere) {
            auto s = sphere_model(k, levels);
            Report r = verify_simplicial_identities(s);
            r.title = "sphere model k=" + std::to_string(k) + " up to level " + std::to_string(levels);
            auto cc = k0_chain_complex(s, levels);
            ordered_json data;
            data["homology"] = ordered_json::array();
            for (int m = 0; m < levels; ++m) {
                auto h = homology(cc, static_cast<std::size_t>(m));
                r.note("H_" + std::to_string(m) + " = " + h.to_string());
                data["homology"].push_back(h.to_string());
            }
            return emit(r, "sphere", json, data);
        }
        if (*check) {
            auto c = load_complex(file);
            if (check_kind == "monad") {
                MonadCheckOptions o;
                o.bound = bound ? bound : 2;
                return emit(check_monad_laws(c, o), "check monad", json);
            }
            if (check_kind == "simplicial") {
                const std::size_t b = bound ? bound : 3;
                const int n = levels >= 2 ? levels : 3;
                Report r = verify_simplicial_identities(s_simplicial(c, n, b));
                r.absorb(verify_simplicial_identities(bar_suspension(constant_simplicial(c, n), n)));
                r.title = "simplicial identities for s(" + c.label() + ") and its bar model, levels <= " +
                          std::to_string(n) + ", family bound " + std::to_string(b);
                return emit(r, "check simplicial", json);
            }
            if (check_kind == "combing") {
                const std::size_t b = bound ? bound : 3;
                const auto n = static_cast<std::size_t>(levels >= 1 ? std::min(levels, 3) : 3);
                return emit(check_combing(c, n, b), "check combing", json);
            }
            const std::size_t b = bound ? bound : 2;
            Report r;
            r.title = "cofiltered preorder over SC(" + c.label() + "), objects of size <= " + std::to_string(b);
            for (const auto& y : enumerate_objects(c, b)) {
                if (y.empty()) continue;
                r.absorb(verify_cofiltered_preorder(c, y, 4 * b));
            }
            return emit(r, "check cofiltered", json);
        }
        if (*algebra) {
            auto c = load_complex(file);
            auto res = algebra_search(c, bound);
            Report r;
            r.title = "algebra search on " + c.label() + " (bound " + std::to_string(bound) + "): " +
                      algebra_outcome_name(res.outcome);
            r.checked = res.nodes;
            r.partial = res.outcome == AlgebraOutcome::Inconclusive;
            for (const auto& line : res.derivation) r.note(line);
            for (const auto& [x, u] : res.assignment) r.note("F(" + x + ") = " + u);
            ordered_json data{{"outcome", algebra_outcome_name(res.outcome)}, {"derivation", res.derivation}};
            if (json) std::cout << to_json(r, "algebra-search", data).dump(2) << "\n";
            else std::cout << render_text(r);
            return res.outcome == AlgebraOutcome::Inconclusive ? 1 : 0;
        }
        if (*approx) {
            auto sub = load_complex(file);
            auto super = load_complex(file2);
            auto res = approximation_report(inclusion_by_names(sub, super));
            ordered_json data{{"full", res.full},
                              {"wide", res.wide},
                              {"tall", res.tall},
                              {"covers", tri_name(res.covers)},
                              {"criteria_hold", res.criteria_hold},
                              {"k0_sub", res.k0_sub.to_string()},
                              {"k0_super", res.k0_super.to_string()},
                              {"k0_iso", res.k0_iso}};
            return emit(res.report, "approx", json, data);
        }
        if (*gen) {
            std::cout << print_complex(generate(gen_args));
            return 0;
        }
    } catch (const ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
