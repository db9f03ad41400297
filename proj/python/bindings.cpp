#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "zdt/errors.hpp"
#include "zdt/games.hpp"
#include "zdt/io.hpp"
#include "zdt/regions.hpp"
#include "zdt/verify.hpp"
#include "zdt/zd_core.hpp"

namespace py = pybind11;
using namespace zdt;

namespace {

py::dict outcome_dict(const PayoffOutcome& o) {
  py::dict d;
  d["pi"] = o.pi;
  d["pi_focal"] = o.pi_focal;
  d["pi_coplayers_avg"] = o.pi_coplayers_avg;
  d["method"] = std::string(to_string(o.method));
  d["delta"] = o.delta;
  d["stderr"] = o.std_error ? py::cast(*o.std_error) : py::none();
  d["seed"] = o.seed ? py::cast(*o.seed) : py::none();
  d["episodes"] = o.episodes;
  return d;
}

py::dict bound_dict(const SlopeBound& b) {
  py::dict d;
  d["s_star"] = b.s_star;
  d["strict"] = b.strict;
  d["class"] = std::string(to_string(b.cls));
  return d;
}

StrategyProfile profile_of(const std::vector<MemoryOneStrategy>& strategies) {
  StrategyProfile p{strategies};
  p.validate();
  return p;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "ZD strategies for threshold public goods and snowdrift games";

  auto base = py::register_exception<Error>(m, "ZdtError", PyExc_RuntimeError);
  py::register_exception<InvalidSpec>(m, "InvalidSpec", base.ptr());
  py::register_exception<InvalidArgument>(m, "InvalidArgument", base.ptr());
  py::register_exception<SlopeOutOfRange>(m, "SlopeOutOfRange", base.ptr());
  py::register_exception<NotEnforceable>(m, "NotEnforceable", base.ptr());
  py::register_exception<InfeasibleParameters>(m, "InfeasibleParameters", base.ptr());
  py::register_exception<StateSpaceTooLarge>(m, "StateSpaceTooLarge", base.ptr());

  py::enum_<Family>(m, "Family")
      .value("PGG", Family::ThresholdPGG)
      .value("SDG", Family::ThresholdSDG);
  py::enum_<ZdClass>(m, "ZdClass")
      .value("GENEROUS", ZdClass::Generous)
      .value("EXTORTIONATE", ZdClass::Extortionate)
      .value("EQUALIZER", ZdClass::Equalizer);

  py::class_<GameSpec>(m, "GameSpec")
      .def_static("pgg", &GameSpec::pgg, py::arg("n"), py::arg("m"), py::arg("r"), py::arg("c") = 1.0)
      .def_static("sdg", &GameSpec::sdg, py::arg("n"), py::arg("m"), py::arg("b"), py::arg("c") = 1.0)
      .def_readonly("family", &GameSpec::family)
      .def_readonly("n", &GameSpec::n)
      .def_readonly("m", &GameSpec::m)
      .def_readonly("r", &GameSpec::r)
      .def_readonly("b", &GameSpec::b)
      .def_readonly("c", &GameSpec::c)
      .def("validate", &GameSpec::validate)
      .def("to_json", [](const GameSpec& s) { return nlohmann::json(s).dump(); })
      .def("__repr__", [](const GameSpec& s) { return "GameSpec(" + nlohmann::json(s).dump() + ")"; });

  py::class_<PayoffTable>(m, "PayoffTable")
      .def(py::init<std::vector<double>, std::vector<double>>(), py::arg("a"), py::arg("b"))
      .def_property_readonly("n", &PayoffTable::n)
      .def_property_readonly("a", [](const PayoffTable& t) {
        return std::vector<double>(t.cooperator().begin(), t.cooperator().end());
      })
      .def_property_readonly("b", [](const PayoffTable& t) {
        return std::vector<double>(t.defector().begin(), t.defector().end());
      });

  py::class_<MemoryOneStrategy>(m, "MemoryOneStrategy")
      .def(py::init([](int n, std::vector<double> probs, double init) {
             MemoryOneStrategy s{n, std::move(probs), init};
             s.validate();
             return s;
           }),
           py::arg("n"), py::arg("probs"), py::arg("init"))
      .def_readonly("n", &MemoryOneStrategy::n)
      .def_readonly("probs", &MemoryOneStrategy::probs)
      .def_readonly("init", &MemoryOneStrategy::init)
      .def("coop_prob", &MemoryOneStrategy::coop_prob, py::arg("cooperated"), py::arg("z"))
      .def("to_json", [](const MemoryOneStrategy& s) { return nlohmann::json(s).dump(); });

  m.def("payoffs", &payoffs, py::arg("spec"));
  m.def("check_social_dilemma", [](const PayoffTable& t) {
    const auto r = check_social_dilemma(t);
    py::dict d;
    d["monotone"] = r.monotone;
    d["defector_advantage"] = r.defector_advantage;
    d["cooperation_favored"] = r.cooperation_favored;
    py::list v;
    for (auto [cond, z] : r.violations) v.append(py::make_tuple(std::string(to_string(cond)), z));
    d["violations"] = v;
    return d;
  });

  m.def("l_bounds", [](const PayoffTable& t, double s) {
    const auto b = l_bounds(t, s);
    return py::make_tuple(b.lower, b.upper);
  }, py::arg("table"), py::arg("s"));
  m.def("enforceable", &enforceable, py::arg("table"), py::arg("s"), py::arg("l"));
  m.def("preset_baseline", &preset_baseline, py::arg("table"), py::arg("cls"));
  m.def("construct_zd",
        [](const PayoffTable& t, double s, double l, double phi, double delta, double p0) {
          return construct_zd(t, {s, l, phi, delta, p0});
        },
        py::arg("table"), py::arg("s"), py::arg("l"), py::arg("phi"), py::arg("delta"), py::arg("p0"));
  m.def("feasible_phi_interval",
        [](const PayoffTable& t, double s, double l, double delta, double p0) -> py::object {
          const auto iv = feasible_phi_interval(t, s, l, delta, p0);
          if (!iv) return py::none();
          return py::make_tuple(iv->lo, iv->hi);
        },
        py::arg("table"), py::arg("s"), py::arg("l"), py::arg("delta"), py::arg("p0"));
  m.def("best_p0", &best_p0, py::arg("table"), py::arg("s"), py::arg("l"), py::arg("delta"));
  m.def("min_enforceable_delta", &min_enforceable_delta, py::arg("table"), py::arg("s"), py::arg("l"));

  m.def("closed_form_bound", [](const GameSpec& s, ZdClass c) { return bound_dict(closed_form_bound(s, c)); },
        py::arg("spec"), py::arg("cls"));
  m.def("numeric_slope_bound", [](const PayoffTable& t, ZdClass c) { return bound_dict(numeric_slope_bound(t, c)); },
        py::arg("table"), py::arg("cls"));
  m.def("equalizer_exists", &equalizer_exists, py::arg("table"));
  m.def("region_sweep_json",
        [](Family f, int n, const std::vector<double>& axis, const std::vector<int>& ms, ZdClass c, double cost,
           unsigned threads) {
          py::gil_scoped_release release;
          return region_to_json(region_sweep(f, n, axis, ms, c, cost, threads)).dump();
        },
        py::arg("family"), py::arg("n"), py::arg("axis1"), py::arg("m_values"), py::arg("cls"), py::arg("c") = 1.0,
        py::arg("threads") = 0);
  m.def("axis_grid", &axis_grid, py::arg("min"), py::arg("max"), py::arg("step"));

  m.def("random_memory_one", &random_memory_one, py::arg("n"), py::arg("seed"));
  m.def("exact_discounted_payoffs",
        [](const std::vector<MemoryOneStrategy>& strategies, const PayoffTable& t, double delta) {
          const auto p = profile_of(strategies);
          PayoffOutcome o;
          {
            py::gil_scoped_release release;
            o = exact_discounted_payoffs(p, t, delta);
          }
          return outcome_dict(o);
        },
        py::arg("strategies"), py::arg("table"), py::arg("delta"));
  m.def("simulate_monte_carlo",
        [](const std::vector<MemoryOneStrategy>& strategies, const PayoffTable& t, double delta,
           std::uint64_t episodes, std::uint64_t seed, unsigned threads) {
          const auto p = profile_of(strategies);
          PayoffOutcome o;
          {
            py::gil_scoped_release release;
            o = simulate_monte_carlo(p, t, delta, episodes, seed, threads);
          }
          return outcome_dict(o);
        },
        py::arg("strategies"), py::arg("table"), py::arg("delta"), py::arg("episodes"), py::arg("seed"),
        py::arg("threads") = 0);
  m.def("relation_residual",
        [](const std::vector<double>& pi, double s, double l) {
          PayoffOutcome o;
          o.pi = pi;
          o.summarize();
          return relation_residual(o, s, l);
        },
        py::arg("pi"), py::arg("s"), py::arg("l"));

  m.attr("RNG_ALGORITHM") = std::string(kRngAlgorithm);
}
