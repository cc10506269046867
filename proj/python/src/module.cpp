// Python bindings. Exact rationals cross the boundary as "p/q" strings; the
// ballq package turns them into fractions.Fraction.

#include "ballq/covering.hpp"
#include "ballq/hj.hpp"
#include "ballq/registry.hpp"
#include "ballq/reider.hpp"
#include "ballq/verifier.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace ballq;

namespace {

std::vector<std::string> strs(const std::vector<Rational>& v) {
    std::vector<std::string> out;
    for (const auto& r : v) out.push_back(r.str());
    return out;
}

py::dict result_dict(const verify::CheckResult& r) {
    py::dict d;
    d["check_id"] = r.check_id;
    d["scope"] = r.scope;
    d["paper_anchor"] = py::dict(py::arg("location") = r.paper_anchor.location,
                                 py::arg("quote") = r.paper_anchor.quote);
    d["expected"] = py::dict(py::arg("value") = r.expected, py::arg("provenance") = verify::to_string(r.provenance));
    d["computed"] = r.computed;
    d["status"] = verify::to_string(r.status);
    d["axioms_used"] = r.axioms_used;
    d["trace"] = r.trace;
    return d;
}

py::dict candidate_dict(const ReiderCandidate& c) {
    py::dict d;
    d["case"] = to_string(c.tag);
    d["d1"] = c.d1;
    d["d2"] = c.d2;
    d["delta"] = c.delta;
    d["deg_W"] = c.deg_W;
    d["B_sq"] = c.B_sq.str();
    d["p_a"] = c.p_a.str();
    d["reason"] = c.reason;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    py::register_exception<verify::UnknownCheck>(m, "UnknownCheck", PyExc_KeyError);
    py::register_exception<verify::UnknownScope>(m, "UnknownScope", PyExc_ValueError);

    m.def("check_ids", &verify::check_ids);
    m.def("scopes", &verify::scopes);
    m.def("run_check", [](const std::string& id) { return result_dict(verify::run_check(id)); }, py::arg("check_id"));
    m.def(
        "run_report",
        [](const std::string& scope) {
            py::list out;
            for (const auto& r : verify::run_report(scope)) out.append(result_dict(r));
            return out;
        },
        py::arg("scope") = "all");
    m.def(
        "report_json",
        [](const std::string& scope, int indent) { return verify::render_json(verify::run_report(scope), indent); },
        py::arg("scope") = "all", py::arg("indent") = 2);
    m.def("explain", &verify::explain, py::arg("check_id"));

    m.def("hj_expand", [](long n, long q) { return hj_expand(CyclicSingularity(n, q)); }, py::arg("n"), py::arg("q"));
    m.def(
        "discrepancies",
        [](long n, long q, bool reversed) {
            const auto chain = ExceptionalChain::resolve(
                CyclicSingularity(n, q), reversed ? ChainOrientation::Reversed : ChainOrientation::HjOrder);
            return strs(discrepancies(chain));
        },
        py::arg("n"), py::arg("q"), py::arg("reversed") = false);

    m.def(
        "enumerate_destabilizations",
        [](long k_sq, long deg_z, bool hyperbolic) {
            py::list out;
            for (const auto& c :
                 enumerate_destabilizations(k_sq, deg_z, hyperbolic ? hyperbolic_filter() : no_genus_filter()))
                out.append(candidate_dict(c));
            return out;
        },
        py::arg("k_sq"), py::arg("deg_z"), py::arg("hyperbolic") = true);

    m.def(
        "riemann_hurwitz_solutions",
        [](long g_up, long degree, const std::set<long>& allowed, std::optional<long> max_points) {
            std::vector<std::pair<long, std::vector<long>>> out;
            for (const auto& s : riemann_hurwitz_solutions(g_up, degree, allowed, max_points))
                out.emplace_back(s.g_down, s.branch_orders);
            return out;
        },
        py::arg("g_up"), py::arg("degree"), py::arg("allowed_b"), py::arg("max_points") = py::none());

    m.def(
        "registry",
        [](const std::string& kind) {
            auto rows = fpp::load_registry();
            if (!kind.empty()) rows = fpp::query_by_case(rows, fpp::parse_case(kind));
            py::list out;
            for (const auto& r : rows) {
                py::dict d;
                d["raw_name"] = r.raw_name;
                d["family"] = r.family;
                d["prime_or_place"] = r.prime_or_place;
                d["torsion_set"] = r.torsion_set;
                d["subgroup_tag"] = r.subgroup_tag;
                d["case"] = fpp::to_string(r.kind);
                out.append(d);
            }
            return out;
        },
        py::arg("case") = "");
}
