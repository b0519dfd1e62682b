#include "rootfold/affine.hpp"
#include "rootfold/characters.hpp"
#include "rootfold/echelonnage.hpp"
#include "rootfold/hecke.hpp"
#include "rootfold/presets.hpp"
#include "rootfold/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace py = pybind11;
using namespace rootfold;

namespace {

IVec to_ivec(const std::vector<std::int64_t>& v) { return IVec(v.begin(), v.end()); }

std::string verify_json(const std::vector<std::string>& names, std::optional<std::int64_t> mu_bound, bool run_kl,
                        unsigned threads) {
    std::vector<Preset> presets;
    for (const auto& n : names.empty() ? preset_names() : names) presets.push_back(load_preset(n));
    VerifyOptions opt;
    opt.mu_bound = mu_bound;
    opt.run_kl = run_kl;
    opt.threads = threads;
    py::gil_scoped_release release;
    return verify_presets(presets, opt).to_json();
}

std::map<std::string, std::int64_t> hecke_parameters(const std::string& preset) {
    Preset p = load_preset(preset);
    Echelonnage e = compute_echelonnage(p.datum, p.parameters);
    std::map<std::string, std::int64_t> out;
    const std::size_t nf = e.parameters.finite.size();
    for (std::size_t i = 0; i < e.parameters.node_names.size(); ++i)
        out[e.parameters.node_names[i]] = i < nf ? e.parameters.finite[i] : e.parameters.affine[i - nf];
    return out;
}

std::string kl_polynomial(const std::string& preset, const std::vector<std::int64_t>& lambda,
                          const std::vector<std::int64_t>& nu) {
    Preset p = load_preset(preset);
    ExtendedAffineWeylGroup g(p.datum);
    FixedAffineGroup w(g);
    HeckeAlgebra hecke(w);
    FixedPointDatum h = fixed_point_datum(p.datum);
    require_rational_dominant(h, to_ivec(lambda));
    require_rational_dominant(h, to_ivec(nu));
    return hecke.kl_polynomial(w.max_double_coset(h.project(to_ivec(nu))), w.max_double_coset(h.project(to_ivec(lambda))))
        .to_string();
}

std::size_t admissible_size(const std::string& preset, const std::vector<std::int64_t>& mu) {
    Preset p = load_preset(preset);
    ExtendedAffineWeylGroup g(p.datum);
    return admissible_set(g, to_ivec(mu)).size();
}

std::string weyl_dimension_of(const std::string& type, const std::string& isogeny,
                              const std::vector<std::int64_t>& highest) {
    return weyl_dimension(build_datum(type, parse_isogeny(isogeny)), to_ivec(highest)).str();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Root data folding, affine Weyl groups and Hecke algebra computations";
    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);
    py::register_exception<TheoremViolation>(m, "TheoremViolation", PyExc_AssertionError);

    m.def("preset_names", &preset_names);
    m.def("verify_json", &verify_json, py::arg("presets") = std::vector<std::string>{},
          py::arg("mu_bound") = std::nullopt, py::arg("run_kl") = true, py::arg("threads") = 0u);
    m.def("hecke_parameters", &hecke_parameters, py::arg("preset"));
    m.def("kl_polynomial", &kl_polynomial, py::arg("preset"), py::arg("lam"), py::arg("nu"));
    m.def("admissible_size", &admissible_size, py::arg("preset"), py::arg("mu"));
    m.def("weyl_dimension", &weyl_dimension_of, py::arg("type"), py::arg("isogeny"), py::arg("highest"));
}
