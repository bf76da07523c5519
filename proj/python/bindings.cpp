// _symcert: thin pybind11 layer. Rationals cross the boundary as "p/q"
// strings; the symcert package converts them to fractions.Fraction.

#include "symcert/branch_bound.hpp"
#include "symcert/checks.hpp"
#include "symcert/construction.hpp"
#include "symcert/report.hpp"

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace symcert;

namespace {

std::vector<Rational> parse_point(const std::vector<std::string>& xs) {
  std::vector<Rational> out;
  out.reserve(xs.size());
  for (const auto& s : xs) out.push_back(parse_rational(s));
  return out;
}

std::vector<std::string> format_point(std::span<const Rational> xs) {
  std::vector<std::string> out;
  for (const auto& x : xs) out.push_back(to_string(x));
  return out;
}

Point six(const std::vector<std::string>& xs) {
  auto v = parse_point(xs);
  if (v.size() != kVars) throw std::invalid_argument("expected 6 coordinates");
  Point p;
  std::copy(v.begin(), v.end(), p.begin());
  return p;
}

Problem make_problem(const Polynomial& objective, const std::vector<std::pair<std::string, std::string>>& domain,
                     const std::vector<std::pair<Polynomial, std::string>>& constraints, const std::string& target) {
  Problem pr;
  pr.objective = objective;
  for (const auto& [lo, hi] : domain) pr.domain.emplace_back(parse_rational(lo), parse_rational(hi));
  for (const auto& [g, rel] : constraints) {
    if (rel != "eq" && rel != "le") throw std::invalid_argument("constraint relation must be 'eq' or 'le'");
    pr.constraints.push_back({g, rel == "eq" ? Relation::EqualsZero : Relation::AtMostZero});
  }
  pr.target = parse_rational(target);
  return pr;
}

ConfigOverrides overrides_from(const py::dict& d) {
  ConfigOverrides o;
  for (const auto& [k, v] : d) {
    const auto key = py::cast<std::string>(k);
    if (key == "threshold") o.threshold = parse_rational(py::cast<std::string>(py::str(v)));
    else if (key == "grid_step") o.grid_step = parse_rational(py::cast<std::string>(py::str(v)));
    else if (key == "max_depth") o.max_depth = py::cast<int>(v);
    else if (key == "max_boxes") o.max_boxes = py::cast<std::size_t>(v);
    else if (key == "samples") o.samples = py::cast<std::size_t>(v);
    else if (key == "seed") o.seed = py::cast<std::uint64_t>(v);
    else if (key == "workers") o.workers = py::cast<unsigned>(v);
    else throw std::invalid_argument("unknown config key '" + key + "'");
  }
  return o;
}

}  // namespace

PYBIND11_MODULE(_symcert, m) {
  m.doc() = "Exact construction and certified bounds for the symplectic R^6 example";
  m.attr("__version__") = SYMCERT_VERSION;
  m.attr("orientation") = kOrientation;

  py::class_<Polynomial>(m, "Polynomial")
      .def(py::init<>())
      .def(py::init([](const std::string& c) { return Polynomial(parse_rational(c)); }))
      .def_static("parse", &Polynomial::parse)
      .def_static("variable", &Polynomial::variable)
      .def("degree", &Polynomial::degree)
      .def("size", &Polynomial::size)
      .def("is_zero", &Polynomial::is_zero)
      .def("diff", &Polynomial::diff)
      .def("pow", &Polynomial::pow)
      .def("eval", [](const Polynomial& p, const std::vector<std::string>& pt) { return to_string(p.eval(parse_point(pt))); })
      .def("subst", &Polynomial::subst)
      .def("terms",
           [](const Polynomial& p) {
             std::vector<std::pair<std::vector<int>, std::string>> out;
             for (const auto& [e, c] : p.terms()) out.emplace_back(std::vector<int>(e.begin(), e.end()), to_string(c));
             return out;
           })
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self == py::self)
      .def("__str__", &Polynomial::to_string)
      .def("__repr__", [](const Polynomial& p) { return "Polynomial('" + p.to_string() + "')"; });

  m.def("build_construction", [] {
    const auto& c = shared_construction();
    py::dict d;
    d["h"] = c.h;
    d["p"] = c.p;
    d["q"] = c.q;
    d["Q"] = c.Q;
    d["beta_norm_sq"] = c.beta_norm_sq;
    d["psi"] = c.psi.to_string();
    d["dpsi"] = c.dpsi.to_string();
    d["beta"] = c.beta.to_string();
    d["chi"] = c.chi.to_string();
    return d;
  });

  m.def("reduced_system", [] {
    auto rs = reduced_system(shared_construction());
    py::dict d;
    d["chi_y0"] = std::vector<Polynomial>(rs.chi_y0.begin(), rs.chi_y0.end());
    d["stated_polys"] = std::vector<Polynomial>(rs.stated_polys.begin(), rs.stated_polys.end());
    d["sum_sq_reduced"] = rs.sum_sq_reduced;
    d["sum_sq_stated"] = rs.sum_sq_stated;
    d["Q_simplex_2d"] = rs.Q_simplex_2d;
    return d;
  });

  m.def("rank4_at", [](const std::vector<std::string>& pt) { return rank4_at(shared_construction(), six(pt)); });
  m.def("psi_at", [](const std::vector<std::string>& pt) {
    auto v = shared_construction().psi.eval(six(pt));
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& [idx, c] : v) out.emplace_back(idx.to_string(), to_string(c));
    return out;
  });
  m.def("anchor_point", [] { auto p = anchor_point(); return format_point(p); });

  auto points = [](const std::vector<Point>& pts) {
    std::vector<std::vector<std::string>> out;
    for (const auto& p : pts) out.push_back(format_point(p));
    return out;
  };
  m.def("sample_torus_points", [points](std::size_t n, std::uint64_t seed) { return points(sample_torus_points(n, seed)); });
  m.def("sample_sphere_points", [points](std::size_t n, std::uint64_t seed) { return points(sample_sphere_points(n, seed)); });

  m.def(
      "bb_lower_bound",
      [](const Polynomial& objective, const std::vector<std::pair<std::string, std::string>>& domain,
         const std::vector<std::pair<Polynomial, std::string>>& constraints, const std::string& target, int max_depth,
         std::size_t max_boxes, unsigned workers) {
        Problem pr = make_problem(objective, domain, constraints, target);
        CertificateResult r;
        {
          py::gil_scoped_release release;
          r = bb_lower_bound(pr, Budget{max_depth, max_boxes}, workers);
        }
        std::ostringstream cert;
        write_certificate(cert, pr, r);
        py::dict d;
        d["certified_lower_bound"] = to_string(r.certified_lower_bound);
        d["status"] = to_string(r.status);
        d["boxes_processed"] = r.boxes_processed;
        d["max_depth_reached"] = r.max_depth_reached;
        d["budget_exhausted"] = r.budget_exhausted;
        d["witness"] = r.witness ? py::cast(format_point(*r.witness)) : py::none();
        d["certificate"] = cert.str();
        return d;
      },
      py::arg("objective"), py::arg("domain"), py::arg("constraints"), py::arg("target"), py::arg("max_depth") = 40,
      py::arg("max_boxes") = 1'000'000, py::arg("workers") = 1);

  m.def("grid_oracle_min",
        [](const Polynomial& p, const std::vector<std::pair<std::string, std::string>>& domain,
           const std::vector<std::pair<Polynomial, std::string>>& constraints, const std::string& step) {
          Problem pr = make_problem(p, domain, constraints, "0");
          auto g = grid_oracle_min(pr.objective, pr.domain, pr.constraints, parse_rational(step));
          py::dict d;
          d["point"] = g.point ? py::cast(format_point(*g.point)) : py::none();
          d["value"] = g.value ? py::cast(to_string(*g.value)) : py::none();
          d["nodes_scanned"] = g.nodes_scanned;
          d["feasible_nodes"] = g.feasible_nodes;
          return d;
        });

  m.def("replay_certificate", [](const std::string& text) {
    std::istringstream in(text);
    auto r = replay_certificate(in);
    py::dict d;
    d["ok"] = r.ok();
    d["leaves_checked"] = r.leaves_checked;
    d["discrepancies"] = r.discrepancies;
    d["coverage_ok"] = r.coverage_ok;
    d["claimed_status"] = to_string(r.claimed_status);
    d["claimed_bound"] = to_string(r.claimed_bound);
    d["messages"] = r.messages;
    return d;
  });

  m.def("check_ids", [] {
    std::vector<std::string> ids;
    for (const auto& info : check_registry()) ids.emplace_back(info.id);
    return ids;
  });

  // Structured report (JSON text) for the given ids; timing omitted so the
  // output is reproducible.
  m.def(
      "run_checks",
      [](const std::vector<std::string>& ids, const py::dict& overrides) {
        ConfigOverrides o = overrides_from(overrides);
        VerificationReport rep;
        rep.invocation = {{"target", ids}};
        std::vector<CheckConfig> cfgs;
        for (const auto& id : ids) cfgs.push_back(resolve_config(id, o));
        {
          py::gil_scoped_release release;
          for (std::size_t i = 0; i < ids.size(); ++i) rep.checks.push_back(run_check(ids[i], cfgs[i]));
        }
        return py::make_tuple(emit_report(rep, ReportFormat::Structured, false), exit_code(rep));
      },
      py::arg("ids"), py::arg("overrides") = py::dict());
}
