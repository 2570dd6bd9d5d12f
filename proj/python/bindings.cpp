// pybind11 module fbeta._core.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fbeta/acceptance.hpp"
#include "fbeta/beta.hpp"
#include "fbeta/chern.hpp"
#include "fbeta/finvariant.hpp"
#include "fbeta/parse.hpp"

namespace py = pybind11;
using namespace fbeta;

namespace {

py::dict coset_dict(const TensorCoset& c) {
  py::dict d;
  d["degree"] = c.degree;
  d["order_exponent"] = c.order_exponent;
  d["representative"] = c.representative.str();
  return d;
}

const Orientation& orientation(unsigned p, const std::string& kind) {
  if (kind != "default" && kind != "eisenstein") throw std::invalid_argument("orientation must be default or eisenstein");
  return Orientation::get(p, p == 2 ? 3 : 1,
                          kind == "eisenstein" ? OrientationKind::Eisenstein : OrientationKind::FormalGroup);
}

py::dict fclass_dict(const FClass& f) {
  py::dict d;
  d["degree"] = f.degree;
  d["prime"] = f.prime;
  d["level"] = f.level;
  d["precision"] = f.precision;
  d["value"] = f.str();
  d["ambiguity_basis_size"] = f.ambiguity.size();
  // a + b*zb in F_p[zb]/(zb^2 + zb + 1); b is always 0 at level 1.
  std::vector<std::pair<long, long>> coeffs;
  for (std::size_t i = 0; i < f.reduction.precision(); ++i) coeffs.emplace_back(f.reduction[i].a(), f.reduction[i].b());
  d["reduction"] = coeffs;
  d["igusa"] = f.igusa ? py::object(py::str(f.igusa->str())) : py::object(py::none());
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "f-invariants of beta families";
  m.attr("DEFAULT_SEED") = kDefaultSeed;
  m.attr("CRITERION_COUNT") = kCriterionCount;

  m.def(
      "eta_r", [](unsigned p, int n) { return BPContext::get(p).eta_R_generator(n).str(); }, py::arg("p"),
      py::arg("n"), "eta_R(v_n) as a polynomial in v_i and t_i.");

  m.def(
      "beta_representative",
      [](int t, int s, int r, unsigned p) { return coset_dict(beta_representative(t, s, r, p)); }, py::arg("t"),
      py::arg("s") = 1, py::arg("r") = 1, py::arg("p") = 2);

  m.def(
      "f_beta",
      [](int t, int s, unsigned p, const std::string& kind, std::size_t precision) {
        return fclass_dict(f_invariant(beta_representative(t, s, 1, p), orientation(p, kind), precision));
      },
      py::arg("t"), py::arg("s") = 1, py::arg("p") = 2, py::arg("orientation") = "default",
      py::arg("precision") = kDefaultPrecision, "f-invariant of beta_{t/s}.");

  m.def(
      "f_alpha1_alpha",
      [](int t, std::size_t precision) {
        return fclass_dict(f_invariant(alpha1_alpha_t_representative(t), orientation(2, "default"), precision));
      },
      py::arg("t"), py::arg("precision") = kDefaultPrecision, "f-invariant of alpha_1 alpha_t at p = 2.");

  m.def(
      "log_coefficient",
      [](unsigned p, int level, std::size_t n) { return Orientation::get(p, level).log_coefficient(n).str(); },
      py::arg("p"), py::arg("level"), py::arg("n"), "Coefficient a_n of log = sum a_n t^n / n.");

  m.def("closed_form_beta", [](int s, int i) { return closed_form_beta(s, i).str(); }, py::arg("s"), py::arg("i"));

  m.def(
      "qexp",
      [](const std::string& form, int level, std::size_t precision) {
        const ModularForms& M = ModularForms::get(level);
        CSeries s = M.expansion(parse_polynomial(form, M.alphabet()), precision);
        std::vector<std::pair<std::string, std::string>> out;
        for (std::size_t i = 0; i < s.precision(); ++i) out.emplace_back(to_string(s[i].a()), to_string(s[i].b()));
        return out;
      },
      py::arg("form"), py::arg("level"), py::arg("precision") = 20,
      "Coefficients a + b*zeta as pairs of rational strings.");

  m.def("kervaire_chern_polynomial", [](int dim) { return kervaire_chern_polynomial(dim).str(); }, py::arg("dimension"));
  m.def("required_chern_numbers", &required_chern_numbers, py::arg("dimension"));
  m.def(
      "evaluate_manifold",
      [](int dim, const std::map<std::string, long long>& numbers) {
        ChernData data{dim, {}};
        for (const auto& [k, v] : numbers) data.numbers[k] = Integer(std::to_string(v));
        ManifoldVerdict v = evaluate_manifold(data);
        py::dict d;
        d["value"] = v.value.get_str();
        d["verdict"] = v.verdict();
        return d;
      },
      py::arg("dimension"), py::arg("numbers"));

  m.def("verify_suites", &verify_suites);
  m.def(
      "run_suite",
      [](const std::string& name, std::uint64_t seed, std::size_t precision) {
        py::list out;
        for (const auto& c : run_suite(name, seed, precision)) {
          py::dict d;
          d["name"] = c.name;
          d["passed"] = c.passed;
          d["detail"] = c.detail;
          out.append(d);
        }
        return out;
      },
      py::arg("name"), py::arg("seed") = kDefaultSeed, py::arg("precision") = kAcceptancePrecision);
}
