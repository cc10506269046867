#include "ballq/hj.hpp"
#include "ballq/lattice.hpp"
#include "ballq/registry.hpp"
#include "ballq/reider.hpp"
#include "ballq/verifier.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

constexpr int kUsageError = 2;

std::string vec_str(const std::vector<ballq::Rational>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].str();
    return s + ")";
}

int cmd_hj(long n, long q) {
    const ballq::CyclicSingularity sing(n, q);
    const auto expansion = ballq::hj_expand(sing);
    const auto chain = ballq::ExceptionalChain::resolve(sing);
    std::cout << sing.str() << "\n  " << n << "/" << q << " = [";
    for (std::size_t i = 0; i < expansion.size(); ++i) std::cout << (i ? "," : "") << expansion[i];
    std::cout << "]\n  chain self-intersections (";
    for (std::size_t i = 0; i < chain.length(); ++i) std::cout << (i ? "," : "") << chain.self_intersections()[i];
    std::cout << ")\n  discrepancies " << vec_str(ballq::discrepancies(chain)) << "\n  K^2 correction "
              << ballq::canonical_correction(chain).str() << "\n";
    return 0;
}

int cmd_reider(long k_sq, long deg_z, bool all) {
    const auto list = all ? ballq::enumerate_candidates(k_sq, deg_z) : ballq::enumerate_destabilizations(k_sq, deg_z);
    if (list.empty()) std::cout << "no destabilizing configuration\n";
    for (const auto& c : list) std::cout << ballq::to_string(c) << "\n";
    return 0;
}

int cmd_registry(const std::string& kind, bool as_json) {
    std::vector<ballq::fpp::FppRecord> rows = ballq::fpp::load_registry();
    if (!kind.empty()) rows = ballq::fpp::query_by_case(rows, ballq::fpp::parse_case(kind));
    if (as_json) {
        std::cout << ballq::fpp::registry_to_json(rows) << "\n";
        return 0;
    }
    for (const auto& r : rows) std::cout << ballq::fpp::to_string(r.kind) << "\t" << r.raw_name << "\n";
    std::cout << rows.size() << " records\n";
    return 0;
}

int cmd_lattice(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("lattice", "cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    const auto lat = ballq::lattice_from_json(buf.str());
    const auto s = ballq::signature(lat.gram());
    std::cout << "dimension " << lat.dimension() << "\nsignature (" << s.n_plus << "," << s.n_minus << ","
              << s.n_zero << ")\n";
    const std::vector<ballq::DivisorClass> basis = [&] {
        std::vector<ballq::DivisorClass> b;
        for (const auto& l : lat.labels()) b.push_back(lat.basis(l));
        return b;
    }();
    try {
        for (const auto& ov : ballq::orthogonalize(basis))
            std::cout << "  " << ov.vector.str() << "  norm " << ov.norm.str() << "\n";
    } catch (const ballq::LatticeError& e) {
        std::cout << "  no orthogonal basis from the given order: " << e.what() << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact replay of the bicanonical embedding argument for ball quotients with c2 = 3"};
    app.require_subcommand(1);

    std::string scope = "all";
    bool report_json = false;
    bool fail_on_flagged = false;
    auto* report = app.add_subcommand("report", "run the checks and print one line per check");
    report->add_option("--scope", scope, "all, surface, reider, singularities, coverings, appendix2, registry")
        ->check(CLI::IsMember(ballq::verify::scopes()));
    report->add_flag("--json", report_json, "emit a JSON array of check results");
    report->add_flag("--fail-on-flagged", fail_on_flagged, "exit 1 when any check is FLAGGED");

    std::string check_id;
    auto* explain = app.add_subcommand("explain", "print the derivation trace of one check");
    explain->add_option("CHECK_ID", check_id)->required();

    std::string kind;
    bool registry_json = false;
    auto* registry = app.add_subcommand("registry", "list the fake projective plane table");
    registry->add_option("--case", kind, "b, c, d or min")->check(CLI::IsMember({"b", "c", "d", "min"}));
    registry->add_flag("--json", registry_json);

    long n = 0, q = 0;
    auto* hj = app.add_subcommand("hj", "resolve the cyclic quotient singularity 1/N(1,Q)");
    hj->add_option("N", n)->required();
    hj->add_option("Q", q)->required();

    long k_sq = 0, deg_z = 0;
    bool all_candidates = false;
    auto* reider = app.add_subcommand("reider", "enumerate Reider destabilizations for K^2 and deg Z");
    reider->add_option("K_SQ", k_sq)->required();
    reider->add_option("DEG_Z", deg_z)->required();
    reider->add_flag("--all", all_candidates, "also list rejected candidates with the reason");

    std::string lattice_path;
    auto* lattice = app.add_subcommand("lattice", "signature and orthogonal basis of a JSON Gram matrix");
    lattice->add_option("FILE", lattice_path)->required()->check(CLI::ExistingFile);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kUsageError;
    }

    try {
        if (*report) {
            const auto results = ballq::verify::run_report(scope);
            std::cout << (report_json ? ballq::verify::render_json(results) + "\n"
                                      : ballq::verify::render_text(results));
            return ballq::verify::exit_status(results, fail_on_flagged);
        }
        if (*explain) {
            std::cout << ballq::verify::explain(check_id);
            return 0;
        }
        if (*registry) return cmd_registry(kind, registry_json);
        if (*hj) return cmd_hj(n, q);
        if (*reider) return cmd_reider(k_sq, deg_z, all_candidates);
        if (*lattice) return cmd_lattice(lattice_path);
    } catch (const ballq::verify::UnknownCheck& e) {
        std::cerr << e.what() << "\n";
        return kUsageError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsageError;
    }
    return kUsageError;
}
