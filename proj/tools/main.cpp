// Batch verification runner and report/diagram emitter for the exceptional
// antipodal-set catalog.

#include "e8cat/catalog.hpp"
#include "e8cat/diagram.hpp"
#include "e8cat/parse.hpp"
#include "e8cat/suites.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <thread>

namespace {

int cmd_verify(const e8cat::RunConfig& cfg, const std::string& format) {
    e8cat::VerificationReport rep;
    try {
        rep = e8cat::run_verify(cfg);
    } catch (const e8cat::UnknownSuite& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    std::cout << e8cat::export_report(
        rep, format == "md" ? e8cat::ReportFormat::markdown : e8cat::ReportFormat::json);
    std::cout << "\n";
    // Table-2 style summary for the tables suite in markdown mode
    bool tables = false;
    for (const auto& s : cfg.suites) tables = tables || s == "tables" || s == "all";
    if (tables && format == "md") {
        std::cout << "\nNote: the type-G row of the classification table (G2/SO(4), "
                     "cardinality 7) is outside the scope of this toolkit.\n";
    }
    return rep.passed() ? 0 : 1;
}

int cmd_classify(const std::string& expr) {
    e8cat::E8GroupElem g = e8cat::parse_element(expr);
    e8cat::Classifier cl(std::max(2u, std::thread::hardware_concurrency()));
    std::cout << "{\n  \"element\": \"" << g.display() << "\",\n";
    std::cout << "  \"involution\": " << (g.is_involution() ? "true" : "false") << ",\n";
    if (g.torus_encoding()) {
        std::cout << "  \"torus_exponent\": \"" << g.torus_encoding()->v.str()
                  << (g.torus_encoding()->x_flag ? " * x" : "") << "\",\n";
    }
    auto d = e8cat::fixed_space_dims(g.adjoint_matrix());
    std::cout << "  \"e8_fixed_dims\": [" << d.d_plus << ", " << d.d_minus << "],\n";
    std::cout << "  \"orbits\": {";
    bool first = true;
    for (const std::string group : {"E8", "E7", "E6", "F4"}) {
        std::cout << (first ? "" : ",");
        first = false;
        std::cout << "\n    \"" << group << "\": ";
        try {
            auto info = cl.classify(g, group);
            std::cout << "{\"label\": \"" << info.label << "\", \"orbit\": \"" << info.orbit_id
                      << "\", \"fixed_dim\": " << info.restricted_dplus << "}";
        } catch (const e8cat::NotNormalizing&) {
            std::cout << "{\"error\": \"NotNormalizing\"}";
        }
    }
    std::cout << "\n  }\n}\n";
    return 0;
}

int cmd_diagram(const std::string& which) {
    e8cat::Classifier cl(std::max(2u, std::thread::hardware_concurrency()));
    std::cout << e8cat::emit_diagram(cl, which);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification of the exceptional antipodal-set catalog"};
    app.require_subcommand(1);

    e8cat::RunConfig cfg;
    cfg.parallel = std::max(2u, std::thread::hardware_concurrency());
    std::string format = "json";
    std::string jacobi = "sampled:10000";
    auto* verify = app.add_subcommand("verify", "run verification suites");
    verify->add_option("--suite", cfg.suites,
                       "suite name (octonion, triality, clifford, rootsys, e8, catalog, tables, "
                       "diagrams, all)");
    verify->add_option("--seed", cfg.seed, "rng seed for sampled checks");
    verify->add_option("--jacobi", jacobi, "full or sampled:<N>");
    verify->add_option("--parallel", cfg.parallel, "worker count");
    verify->add_option("--format", format, "json or md")
        ->check(CLI::IsMember({"json", "md"}));

    std::string expr;
    auto* classify = app.add_subcommand("classify", "classify one element expression");
    classify->add_option("--element", expr, "element expression")->required();

    std::string which = "inclusion";
    auto* diagram = app.add_subcommand("diagram", "emit a DOT diagram");
    diagram->add_option("--which", which, "eix_orbits, eviii_orbits or inclusion")
        ->check(CLI::IsMember({"eix_orbits", "eviii_orbits", "inclusion"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (verify->parsed()) {
            if (jacobi == "full") {
                cfg.jacobi_full = true;
            } else if (jacobi.rfind("sampled:", 0) == 0) {
                cfg.jacobi_full = false;
                cfg.jacobi_samples = std::stoul(jacobi.substr(8));
            } else {
                std::cerr << "invalid --jacobi value: " << jacobi << "\n";
                return 2;
            }
            if (cfg.suites.empty()) cfg.suites = {"all"};
            return cmd_verify(cfg, format);
        }
        if (classify->parsed()) return cmd_classify(expr);
        if (diagram->parsed()) return cmd_diagram(which);
    } catch (const e8cat::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
