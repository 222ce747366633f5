// coxdim - desk-scale verification of dimension invariants of outer
// automorphism groups of free products of right-angled Coxeter-type groups.
//
// Subcommands:
//   racg check      condition certificate for the RACG of a graph
//   racg vcd        virtual cohomological dimension via Davis's formula
//   gp verify       full construction + verification for one odd prime
//   gp export       emit intermediate complexes as JSON
//   product bounds  torsion calculus for products of factor classes
//   spine enumerate quotient trees of free splittings up to isomorphism
//   spine verify    stabilizer degree bound over all quotient trees
//   spine bounds    vcd/Bredon bounds for Out of a free product
//   cohomology      integral simplicial cohomology of a complex
//
// Exit codes: 0 computed/verified, 1 a verified property is false,
// 2 input or usage error.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

#include "coxdim/json_io.hpp"
#include "coxdim/version.hpp"

namespace {

using namespace coxdim;

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    }
};

std::string read_input(const std::string& path) {
    std::ostringstream buf;
    if (path.empty()) {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in) throw InputError("cannot open input file: " + path);
        buf << in.rdbuf();
    }
    return buf.str();
}

void emit_report(const std::string& command, const Json& inputs, const Json& results,
                 bool as_json, const Timer& timer,
                 const std::function<void(const Json&)>& human) {
    if (as_json) {
        Json report;
        report["command"] = command;
        report["version"] = kVersion;
        report["inputs"] = inputs;
        report["results"] = results;
        std::cout << report.dump(2) << "\n";
    } else {
        human(results);
        std::cout << "elapsed: " << timer.seconds() << "s\n";
    }
}

void print_kv(const Json& j, const std::string& indent = "  ") {
    for (const auto& [key, value] : j.items()) {
        if (value.is_object() && value.contains("display")) {
            std::cout << indent << key << ": " << value["display"].get<std::string>()
                      << "\n";
        } else if (value.is_object()) {
            std::cout << indent << key << ":\n";
            print_kv(value, indent + "  ");
        } else {
            std::cout << indent << key << ": " << value.dump() << "\n";
        }
    }
}

int run(int argc, char** argv) {
    CLI::App app{"coxdim: simplicial cohomology and dimension bounds toolkit"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    unsigned threads = 0;
    app.add_option("--threads", threads, "cap on worker threads (default: all cores)");

    // racg ------------------------------------------------------------------
    auto* racg = app.add_subcommand("racg", "right-angled Coxeter group analysis");
    racg->require_subcommand(1);
    std::string racg_input;
    bool racg_json = false;

    auto* racg_check = racg->add_subcommand("check", "condition certificate");
    racg_check->add_option("--input", racg_input, "graph JSON (default: stdin)");
    racg_check->add_flag("--json", racg_json, "machine-readable report");

    auto* racg_vcd = racg->add_subcommand("vcd", "virtual cohomological dimension");
    racg_vcd->add_option("--input", racg_input, "graph JSON (default: stdin)");
    racg_vcd->add_flag("--json", racg_json, "machine-readable report");

    // gp --------------------------------------------------------------------
    auto* gp = app.add_subcommand("gp", "the G_p construction");
    gp->require_subcommand(1);
    int gp_p = 3;
    int gp_subdivisions = 3;
    std::string gp_builder = "ring";
    bool gp_json = false;
    std::string gp_stage = "L";
    std::string gp_output;

    auto* gp_verify = gp->add_subcommand("verify", "construct and verify G_p");
    gp_verify->add_option("-p", gp_p, "odd prime")->required();
    gp_verify->add_option("--subdivisions", gp_subdivisions, "subdivision/refinement count");
    gp_verify->add_option("--builder", gp_builder, "ring (flag-no-square) or barycentric")
        ->check(CLI::IsMember({"ring", "barycentric"}));
    gp_verify->add_flag("--json", gp_json, "machine-readable report");

    auto* gp_export = gp->add_subcommand("export", "emit an intermediate complex");
    gp_export->add_option("-p", gp_p, "odd prime")->required();
    gp_export->add_option("--subdivisions", gp_subdivisions, "subdivision/refinement count");
    gp_export->add_option("--builder", gp_builder, "ring (flag-no-square) or barycentric")
        ->check(CLI::IsMember({"ring", "barycentric"}));
    gp_export->add_option("--stage", gp_stage, "Z, L, Lsing, Lprime, K or Ksing")
        ->check(CLI::IsMember({"Z", "L", "Lsing", "Lprime", "K", "Ksing"}));
    gp_export->add_option("--output", gp_output, "output path (default: stdout)");

    // product ---------------------------------------------------------------
    auto* product = app.add_subcommand("product", "product dimension calculus");
    product->require_subcommand(1);
    std::string product_profile;
    std::string product_profiles_path;
    bool product_json = false;
    auto* product_bounds = product->add_subcommand("bounds", "vcd/Bredon bounds");
    product_bounds->add_option("--profile", product_profile,
                               "inline JSON array of {d, exponent, mult}");
    product_bounds->add_option("--profiles", product_profiles_path,
                               "path to a profile JSON file");
    product_bounds->add_flag("--json", product_json, "machine-readable report");

    // spine -----------------------------------------------------------------
    auto* spine = app.add_subcommand("spine", "outer-space quotient trees");
    spine->require_subcommand(1);
    int spine_r = 2;
    bool spine_json = false;
    std::string spine_profiles_path;

    auto* spine_enumerate = spine->add_subcommand("enumerate", "list quotient trees");
    spine_enumerate->add_option("-r", spine_r, "number of factors (>= 2)")->required();
    spine_enumerate->add_flag("--json", spine_json, "machine-readable report");

    auto* spine_verify = spine->add_subcommand("verify", "degree/dimension inequality");
    spine_verify->add_option("-r", spine_r, "number of factors (>= 2)")->required();
    spine_verify->add_flag("--json", spine_json, "machine-readable report");

    auto* spine_bounds = spine->add_subcommand("bounds", "Out(G) dimension bounds");
    spine_bounds->add_option("-r", spine_r, "number of factors (>= 2)")->required();
    spine_bounds->add_option("--profiles", spine_profiles_path,
                             "path to a profile JSON file (default: d=3, distinct primes)");
    spine_bounds->add_flag("--json", spine_json, "machine-readable report");

    // cohomology --------------------------------------------------------------
    auto* coh = app.add_subcommand("cohomology", "integral simplicial cohomology");
    std::string coh_input;
    int coh_degree = std::numeric_limits<int>::min();
    bool coh_reduced = false;
    bool coh_json = false;
    coh->add_option("--input", coh_input, "complex JSON (default: stdin)");
    coh->add_option("-n,--degree", coh_degree, "degree (default: all)");
    coh->add_flag("--reduced", coh_reduced, "reduced cohomology");
    coh->add_flag("--json", coh_json, "machine-readable report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);  // prints the diagnostic or help text
        return code == 0 ? 0 : 2;      // usage problems are input errors
    }
    if (threads > 0) set_thread_budget(threads);
    Timer timer;

    // racg ------------------------------------------------------------------
    if (racg_check->parsed() || racg_vcd->parsed()) {
        const Graph g = graph_from_json(parse_json_text(read_input(racg_input)));
        const SimplicialComplex l = flag_complex(g);
        Json inputs;
        inputs["graph"] = graph_to_json(g);
        if (racg_check->parsed()) {
            const RacgCertificate cert = rigidity_certificate(l);
            emit_report("racg check", inputs, certificate_to_json(cert), racg_json, timer,
                        [](const Json& r) { print_kv(r, ""); });
        } else {
            const int vcd = vcd_davis(l);
            Json results;
            results["vcd"] = vcd;
            emit_report("racg vcd", inputs, results, racg_json, timer,
                        [&](const Json&) { std::cout << "vcd(W) = " << vcd << "\n"; });
        }
        return 0;
    }

    // gp ----------------------------------------------------------------------
    if (gp_verify->parsed()) {
        const LBuilder builder =
            gp_builder == "ring" ? LBuilder::Ring : LBuilder::Barycentric;
        const GpReport report = verify_gp(gp_p, gp_subdivisions, builder);
        Json inputs;
        inputs["p"] = gp_p;
        inputs["subdivisions"] = gp_subdivisions;
        inputs["builder"] = gp_builder;
        emit_report("gp verify", inputs, gp_report_to_json(report), gp_json, timer,
                    [&](const Json& r) {
                        print_kv(r, "");
                        std::cout << "verdict: " << (report.verdict ? "TRUE" : "FALSE")
                                  << "\n";
                    });
        return report.verdict ? 0 : 1;
    }
    if (gp_export->parsed()) {
        SimplicialComplex stage;
        if (gp_builder == "ring") {
            const EquivariantComplex l = build_L_flag_no_square(gp_p, std::max(3, gp_subdivisions));
            if (gp_stage == "Z") {
                // The ring complex is itself a triangulation of Z.
                stage = l.complex;
            } else if (gp_stage == "L") {
                stage = l.complex;
            } else if (gp_stage == "Lsing") {
                stage = fixed_subcomplex(l);
            } else if (gp_stage == "Lprime") {
                stage = barycentric_subdivision(l.complex).complex;
            } else {
                const KSingPair pair = build_K_sing(l.complex, fixed_subcomplex(l));
                stage = gp_stage == "K" ? pair.k : pair.k_sing;
            }
        } else {
            const BuildLResult bl = build_L(gp_p, gp_subdivisions);
            if (gp_stage == "Z") {
                stage = bl.z_simplicial.complex;
            } else if (gp_stage == "L") {
                stage = bl.l.complex;
            } else if (gp_stage == "Lsing") {
                stage = fixed_subcomplex(bl.l);
            } else if (gp_stage == "Lprime") {
                stage = barycentric_subdivision(bl.l.complex).complex;
            } else {
                const KSingPair pair = build_K_sing(bl.l.complex, fixed_subcomplex(bl.l));
                stage = gp_stage == "K" ? pair.k : pair.k_sing;
            }
        }
        const std::string text = complex_to_json(stage).dump(2) + "\n";
        if (gp_output.empty()) {
            std::cout << text;
        } else {
            std::ofstream out(gp_output);
            if (!out) throw InputError("cannot open output file: " + gp_output);
            out << text;
        }
        return 0;
    }

    // product ------------------------------------------------------------------
    if (product_bounds->parsed()) {
        Json profile_json;
        if (!product_profile.empty())
            profile_json = parse_json_text(product_profile);
        else if (!product_profiles_path.empty())
            profile_json = parse_json_text(read_input(product_profiles_path));
        else
            throw InputError("product bounds: provide --profile or --profiles");
        const auto profiles = profiles_from_json(profile_json);
        const ProductReport report = product_dimension_report(profiles);
        Json inputs;
        inputs["profiles"] = profile_json;
        emit_report("product bounds", inputs, product_report_to_json(report),
                    product_json, timer, [](const Json& r) { print_kv(r, ""); });
        return 0;
    }

    // spine ---------------------------------------------------------------------
    if (spine_enumerate->parsed()) {
        const auto trees = enumerate_trees(spine_r);
        Json results;
        results["r"] = spine_r;
        results["count"] = trees.size();
        Json list = Json::array();
        for (const auto& t : trees) list.push_back(tree_to_json(t));
        results["trees"] = std::move(list);
        Json inputs;
        inputs["r"] = spine_r;
        emit_report("spine enumerate", inputs, results, spine_json, timer,
                    [&](const Json& r) {
                        std::cout << "quotient trees for r=" << spine_r << ": "
                                  << trees.size() << "\n";
                        for (const auto& t : r["trees"]) {
                            std::cout << "  deg=" << t["degree_vector"].dump()
                                      << " trivial=" << t["trivial"] << " edges=";
                            std::cout << t["edges"].dump() << "\n";
                        }
                    });
        return 0;
    }
    if (spine_verify->parsed()) {
        const StabBoundReport report = verify_stab_bound(spine_r);
        Json inputs;
        inputs["r"] = spine_r;
        emit_report("spine verify", inputs, stab_report_to_json(report), spine_json,
                    timer, [&](const Json& r) {
                        print_kv(r, "");
                        std::cout << (report.violations.empty() ? "no violations\n"
                                                                : "VIOLATIONS FOUND\n");
                    });
        return report.violations.empty() ? 0 : 1;
    }
    if (spine_bounds->parsed()) {
        OutBounds bounds;
        Json inputs;
        inputs["r"] = spine_r;
        if (spine_profiles_path.empty()) {
            bounds = out_dimension_bounds(spine_r);
            inputs["profiles"] = "default";
        } else {
            const Json profile_json = parse_json_text(read_input(spine_profiles_path));
            bounds = out_dimension_bounds(spine_r, profiles_from_json(profile_json));
            inputs["profiles"] = profile_json;
        }
        Json results = out_bounds_to_json(bounds);
        results["aut"] = aut_bounds_to_json(aut_dimension_bounds(spine_r));
        emit_report("spine bounds", inputs, results, spine_json, timer,
                    [](const Json& r) { print_kv(r, ""); });
        return 0;
    }

    // cohomology -------------------------------------------------------------------
    if (coh->parsed()) {
        const SimplicialComplex k = complex_from_json(parse_json_text(read_input(coh_input)));
        Json results;
        results["dimension"] = k.dim();
        results["reduced"] = coh_reduced;
        Json groups;
        const int lo = coh_degree != std::numeric_limits<int>::min() ? coh_degree
                       : (coh_reduced ? -1 : 0);
        const int hi =
            coh_degree != std::numeric_limits<int>::min() ? coh_degree : std::max(k.dim(), lo);
        for (int n = lo; n <= hi; ++n)
            groups["H^" + std::to_string(n)] = group_to_json(cohomology(k, n, coh_reduced));
        results["groups"] = std::move(groups);
        Json inputs;
        inputs["complex"] = complex_to_json(k);
        emit_report("cohomology", inputs, results, coh_json, timer, [&](const Json& r) {
            for (const auto& [key, value] : r["groups"].items())
                std::cout << key << " = " << value["display"].get<std::string>() << "\n";
        });
        return 0;
    }

    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const coxdim::InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const coxdim::BuildError& e) {
        std::cerr << "build error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
