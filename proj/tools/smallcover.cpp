// Command-line front end: gen, decorate, check, resolve, fvector, chromatic,
// lift-check and reproduce. Exit codes: 0 clean, 1 usage or I/O error,
// 2 finding (bad faces, bounds only, lift failures, failed reproduction check).

#include <chrono>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "smallcover/charmap.hpp"
#include "smallcover/chromatic.hpp"
#include "smallcover/errors.hpp"
#include "smallcover/generators.hpp"
#include "smallcover/io.hpp"
#include "smallcover/reproduce.hpp"
#include "smallcover/resolution.hpp"

namespace sc = smallcover;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitFinding = 2;

std::string set_text(const std::vector<int>& xs) {
    std::string s = "{";
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
    return s + "}";
}

std::string labelled(const sc::Polytope& p, const std::vector<int>& facets) {
    std::string s;
    for (std::size_t i = 0; i < facets.size(); ++i) s += (i ? " ∩ " : "") + p.label(facets[i]);
    return s;
}

void emit(const std::string& out_path, const sc::Json& j) {
    const auto text = sc::canonical_dump(j);
    if (out_path.empty()) {
        std::cout << text;
    } else {
        sc::write_text_file(out_path, text);
    }
}

std::string vector_text(const std::vector<long long>& f) {
    std::string s = "[";
    for (std::size_t i = 0; i < f.size(); ++i) s += (i ? ", " : "") + std::to_string(f[i]);
    return s + "]";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Simple polytopes with characteristic maps of maximal chromatic number"};
    app.require_subcommand(1);
    int exit_code = kExitOk;

    // gen
    auto* gen = app.add_subcommand("gen", "Generate a polytope");
    gen->require_subcommand(1);
    std::string gen_out;

    auto* gen_cyclic = gen->add_subcommand("dual-cyclic", "Dual of the cyclic polytope C^n(m)");
    int cyc_dim = 4;
    int cyc_facets = 15;
    gen_cyclic->add_option("--dim", cyc_dim, "Dimension n")->required();
    gen_cyclic->add_option("--facets", cyc_facets, "Number of facets m")->required();
    gen_cyclic->add_option("-o,--output", gen_out, "Output file (stdout if omitted)");
    gen_cyclic->callback([&] { emit(gen_out, sc::to_json(sc::dual_cyclic(cyc_dim, cyc_facets))); });

    auto* gen_product = gen->add_subcommand("product", "Cartesian product of two polytopes");
    std::string prod_a;
    std::string prod_b;
    gen_product->add_option("first", prod_a)->required()->check(CLI::ExistingFile);
    gen_product->add_option("second", prod_b)->required()->check(CLI::ExistingFile);
    gen_product->add_option("-o,--output", gen_out, "Output file (stdout if omitted)");
    gen_product->callback([&] {
        emit(gen_out, sc::to_json(sc::product(sc::load_polytope(prod_a), sc::load_polytope(prod_b))));
    });

    auto* gen_segment = gen->add_subcommand("segment", "The segment I");
    gen_segment->add_option("-o,--output", gen_out, "Output file (stdout if omitted)");
    gen_segment->callback([&] { emit(gen_out, sc::to_json(sc::segment())); });

    // decorate
    auto* decorate = app.add_subcommand("decorate", "Build a preset characteristic map for a polytope");
    std::string dec_poly;
    std::string dec_preset;
    std::string dec_out;
    decorate->add_option("polytope", dec_poly)->required()->check(CLI::ExistingFile);
    decorate->add_option("--preset", dec_preset, "paper-example | odd-bijection | identity-first")
        ->required()
        ->check(CLI::IsMember({"paper-example", "odd-bijection", "identity-first"}));
    decorate->add_option("-o,--output", dec_out, "Output file (stdout if omitted)");
    decorate->callback([&] {
        const auto p = sc::load_polytope(dec_poly);
        emit(dec_out, sc::to_json(sc::make_preset(*sc::parse_preset(dec_preset), p)));
    });

    // check
    auto* check = app.add_subcommand("check", "List the bad faces of a characteristic map");
    std::string chk_poly;
    std::string chk_map;
    std::string chk_format = "table";
    check->add_option("polytope", chk_poly)->required()->check(CLI::ExistingFile);
    check->add_option("map", chk_map)->required()->check(CLI::ExistingFile);
    check->add_option("--format", chk_format)->check(CLI::IsMember({"table", "json"}));
    check->callback([&] {
        const auto p = sc::load_polytope(chk_poly);
        const auto m = sc::load_charmap(chk_map);
        const auto bad = sc::bad_faces(p, m);
        if (chk_format == "json") {
            std::cout << sc::canonical_dump(sc::to_json(bad));
        } else {
            std::cout << std::left << std::setw(6) << "size" << std::setw(20) << "face" << "witness vertex\n";
            for (const auto& b : bad) {
                std::cout << std::setw(6) << b.circuit_size << std::setw(20) << set_text(b.face)
                          << set_text(b.witness_vertex) << "   " << labelled(p, b.face) << "\n";
            }
            std::cout << bad.size() << " bad face(s)\n";
        }
        if (!bad.empty()) exit_code = kExitFinding;
    });

    // resolve
    auto* resolve = app.add_subcommand("resolve", "Truncate bad faces until the map is non-singular");
    std::string res_poly;
    std::string res_map;
    std::vector<std::string> res_out;
    std::string res_trace;
    int res_budget = sc::kDefaultBudget;
    resolve->add_option("polytope", res_poly)->required()->check(CLI::ExistingFile);
    resolve->add_option("map", res_map)->required()->check(CLI::ExistingFile);
    resolve->add_option("-o,--output", res_out, "Output polytope and map files")->expected(2)->required();
    resolve->add_option("--trace", res_trace, "Write the resolution report here");
    resolve->add_option("--budget", res_budget, "Maximum number of truncations")->check(CLI::PositiveNumber);
    resolve->callback([&] {
        const auto report = sc::resolve(sc::load_polytope(res_poly), sc::load_charmap(res_map), res_budget);
        sc::save(res_out[0], report.final_polytope);
        sc::save(res_out[1], report.final_map);
        if (!res_trace.empty()) sc::save(res_trace, report);
        std::cout << "terminated: " << sc::to_string(report.terminated) << ", initial bad faces: "
                  << report.initial_bad_count << ", steps: " << report.steps.size()
                  << ", f = " << vector_text(sc::f_vector(report.final_polytope)) << "\n";
        if (report.terminated != sc::Termination::success) exit_code = kExitFinding;
    });

    // fvector
    auto* fvec = app.add_subcommand("fvector", "Print the f-vector and the Euler check");
    std::string fv_poly;
    std::string fv_format = "table";
    fvec->add_option("polytope", fv_poly)->required()->check(CLI::ExistingFile);
    fvec->add_option("--format", fv_format)->check(CLI::IsMember({"table", "json"}));
    fvec->callback([&] {
        const auto p = sc::load_polytope(fv_poly);
        const auto f = sc::f_vector(p);
        const bool euler = sc::satisfies_euler(f, p.dim());
        if (fv_format == "json") {
            sc::Json j;
            j["f_vector"] = f;
            j["euler_sum"] = sc::euler_alternating_sum(f);
            j["euler_ok"] = euler;
            std::cout << sc::canonical_dump(j);
        } else {
            std::cout << "f = " << vector_text(f) << "\n"
                      << "alternating sum = " << sc::euler_alternating_sum(f) << " (" << (euler ? "ok" : "VIOLATED")
                      << ")\n";
        }
    });

    // chromatic
    auto* chromatic = app.add_subcommand("chromatic", "Exact chromatic number with certificate");
    std::string chr_poly;
    std::string chr_hint;
    std::string chr_format = "table";
    long long chr_budget_ms = sc::kDefaultTimeBudget.count();
    chromatic->add_option("polytope", chr_poly)->required()->check(CLI::ExistingFile);
    chromatic->add_option("--hint", chr_hint, "Characteristic map whose induced coloring seeds the upper bound")
        ->check(CLI::ExistingFile);
    chromatic->add_option("--format", chr_format)->check(CLI::IsMember({"table", "json"}));
    chromatic->add_option("--time-budget-ms", chr_budget_ms)->check(CLI::PositiveNumber);
    chromatic->callback([&] {
        const auto p = sc::load_polytope(chr_poly);
        std::optional<sc::CharMap> hint;
        if (!chr_hint.empty()) hint = sc::load_charmap(chr_hint);
        const auto cert = sc::chromatic_number(p, hint, std::chrono::milliseconds(chr_budget_ms));
        if (chr_format == "json") {
            std::cout << sc::canonical_dump(sc::to_json(cert));
        } else {
            std::cout << "chi = " << cert.chi << " (" << sc::to_string(cert.status) << ", lower " << cert.lower
                      << ", upper " << cert.upper << ")\n"
                      << "clique = " << set_text(cert.clique) << "\n"
                      << "coloring = " << set_text(cert.coloring) << "\n";
        }
        if (cert.status != sc::ChromaticStatus::exact) exit_code = kExitFinding;
    });

    // lift-check
    auto* lift = app.add_subcommand("lift-check", "Integer determinants of the 0/1 lift at every vertex");
    std::string lift_poly;
    std::string lift_map;
    std::string lift_format = "table";
    lift->add_option("polytope", lift_poly)->required()->check(CLI::ExistingFile);
    lift->add_option("map", lift_map)->required()->check(CLI::ExistingFile);
    lift->add_option("--format", lift_format)->check(CLI::IsMember({"table", "json"}));
    lift->callback([&] {
        const auto report = sc::lift_determinant_report(sc::load_polytope(lift_poly), sc::load_charmap(lift_map));
        if (lift_format == "json") {
            std::cout << sc::canonical_dump(sc::to_json(report));
        } else {
            for (const auto& d : report.failures) {
                std::cout << set_text(d.vertex) << "  det = " << d.determinant << "\n";
            }
            std::cout << report.determinants.size() << " vertices, " << report.failures.size()
                      << " with |det| != 1, determinants at non-singular vertices all odd: "
                      << (report.all_odd ? "yes" : "no") << "\n";
        }
        if (!report.failures.empty()) exit_code = kExitFinding;
    });

    // reproduce
    auto* repro = app.add_subcommand("reproduce", "Run a full construction and check its claims");
    std::string repro_target;
    std::string repro_out;
    std::string repro_format = "table";
    long long repro_budget_ms = sc::kDefaultTimeBudget.count();
    repro->add_option("target", repro_target, "main | main2 | main3")
        ->required()
        ->check(CLI::IsMember({"main", "main2", "main3"}));
    repro->add_option("-o,--output", repro_out, "Write the JSON summary here");
    repro->add_option("--format", repro_format)->check(CLI::IsMember({"table", "json"}));
    repro->add_option("--time-budget-ms", repro_budget_ms)->check(CLI::PositiveNumber);
    repro->callback([&] {
        const auto summary =
            sc::reproduce(*sc::parse_reproduce_target(repro_target), std::chrono::milliseconds(repro_budget_ms));
        const auto j = sc::to_json(summary);
        if (!repro_out.empty()) sc::write_text_file(repro_out, sc::canonical_dump(j));
        if (repro_format == "json") {
            std::cout << sc::canonical_dump(j);
        } else {
            std::cout << summary.start << "\n" << summary.headline() << "\n";
            for (const auto& c : summary.checks) {
                std::cout << (c.passed ? "  [pass] " : "  [FAIL] ") << c.name << ": expected " << c.expected
                          << ", observed " << c.observed << "\n";
            }
            for (const auto& n : summary.notes) std::cout << "  note: " << n << "\n";
        }
        if (!summary.passed()) exit_code = kExitFinding;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return exit_code;
}
