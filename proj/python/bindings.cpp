#include "zm/frac_integrals.hpp"
#include "zm/identity_suite.hpp"
#include "zm/report.hpp"
#include "zm/special_fn.hpp"

#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace zm;

namespace {

// JSON crosses the boundary as text; the Python side decodes it
std::string results_json(const std::vector<CheckResult>& rs) {
    Json a = Json::array();
    for (const auto& r : rs) a.push_back(to_json(r, false));
    return a.dump();
}

const DirichletCharacter& char_at(unsigned modulus, unsigned index) {
    static std::map<unsigned, std::vector<DirichletCharacter>> cache;
    auto it = cache.find(modulus);
    if (it == cache.end()) it = cache.emplace(modulus, characters_mod(modulus)).first;
    if (index >= it->second.size()) throw py::index_error("character index out of range");
    return it->second[index];
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "zeta-family moment identity verifier";
    py::register_exception<PoleError>(m, "PoleError", PyExc_ValueError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<UnknownIdError>(m, "UnknownIdError", PyExc_KeyError);

    m.def("hurwitz_zeta", &hurwitz_zeta, py::arg("s"), py::arg("a") = 1.0);
    m.def("riemann_zeta", &riemann_zeta, py::arg("s"));
    m.def("alt_hurwitz_zeta", &alt_hurwitz_zeta, py::arg("s"), py::arg("a") = 1.0);
    m.def("hurwitz_zeta_sderiv", &hurwitz_zeta_sderiv, py::arg("order"), py::arg("s"), py::arg("a") = 1.0);
    m.def("alt_hurwitz_zeta_sderiv", &alt_hurwitz_zeta_sderiv, py::arg("s"), py::arg("a") = 1.0);
    m.def("lerch_phi", [](Complex z, Complex s, double a) { return lerch_phi({z, s, a}); }, py::arg("z"), py::arg("s"),
          py::arg("a"));
    m.def("dirichlet_L", [](Complex s, unsigned k, unsigned i) { return dirichlet_L(s, char_at(k, i)); }, py::arg("s"),
          py::arg("modulus"), py::arg("index"));
    m.def("character_count", [](unsigned k) { return characters_mod(k).size(); });
    m.def("digamma", &digamma);
    m.def("polygamma", &polygamma, py::arg("k"), py::arg("x"));
    m.def("log_gamma", &log_gamma);
    m.def("cosine_integral", &cosine_integral);

    m.def("frac", &frac);
    m.def("phi_ivic", &phi_ivic);
    m.def("phi_n", [](int n, double x) { return phi_n(n, x).value; }, py::arg("n"), py::arg("x"));
    m.def("phi2_closed", &phi2_closed);
    m.def("i1", &i1);
    m.def("i_infty", &i_infty);
    m.def("moment_frac", &moment_frac, py::arg("n"), py::arg("sigma"));
    m.def("damped_integral",
          [](const std::string& kind, double T, int k) {
              DampedKind d = kind == "frac_over_x"         ? DampedKind::frac_over_x
                             : kind == "frac_sq_over_x_sq" ? DampedKind::frac_sq_over_x_sq
                             : kind == "log_weighted"      ? DampedKind::log_weighted
                                                           : throw py::value_error("unknown damped kind " + kind);
              return static_cast<double>(damped_integral(d, T, k));
          },
          py::arg("kind"), py::arg("T"), py::arg("k") = 1);

    m.def("moment_integral",
          [](const std::string& kind, double sigma, double a, Complex z, int weight, const std::string& modulation,
             double rel_tol, double t_max) {
              MomentSpec sp;
              auto k = parse_kind(kind);
              if (!k) throw py::value_error("unknown kind " + kind);
              auto md = parse_modulation(modulation);
              if (!md) throw py::value_error("unknown modulation " + modulation);
              sp.kind = *k;
              sp.sigma = sigma;
              sp.a = a;
              sp.z = z;
              sp.weight_power = weight;
              sp.modulation = *md;
              MomentOptions o;
              o.t_max = t_max;
              auto r = moment_integral(sp, rel_tol, o);
              py::dict d;
              d["value"] = r.value;
              d["abs_error_estimate"] = r.abs_error_estimate;
              d["tail_estimate"] = r.tail_estimate;
              d["truncation_height"] = r.truncation_height;
              d["converged"] = r.converged;
              d["note"] = r.note;
              return d;
          },
          py::arg("kind"), py::arg("sigma"), py::arg("a") = 1.0, py::arg("z") = Complex(1, 0), py::arg("weight") = 2,
          py::arg("modulation") = "none", py::arg("rel_tol") = 1e-9, py::arg("t_max") = 0.0);

    m.def("check_ids", [] {
        std::vector<std::string> ids;
        for (const auto& c : registry()) ids.push_back(c.id);
        return ids;
    });
    m.def("_run_check",
          [](const std::string& id, const std::string& overrides) {
              py::gil_scoped_release nogil;
              return results_json(run_check(id, Json::parse(overrides)));
          },
          py::arg("id"), py::arg("overrides") = "{}");
    m.def("_run_all",
          [](std::vector<std::string> ids, std::vector<std::string> tags, int workers) {
              SuiteOptions o;
              o.ids = std::move(ids);
              o.tags = {tags.begin(), tags.end()};
              o.workers = workers;
              py::gil_scoped_release nogil;
              return results_json(run_all(o));
          },
          py::arg("ids") = std::vector<std::string>{}, py::arg("tags") = std::vector<std::string>{}, py::arg("workers") = 1);
    m.attr("__version__") = kToolVersion;
}
