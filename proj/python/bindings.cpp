#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "momentcf/checks.hpp"
#include "momentcf/cli.hpp"
#include "momentcf/contfrac.hpp"
#include "momentcf/sequences.hpp"

namespace py = pybind11;
using namespace momentcf;

namespace {

// Values cross the boundary as "p/q" strings; the Python layer turns them
// into fractions.Fraction.
std::vector<Rational> parse_all(const std::vector<std::string>& values) {
  std::vector<Rational> out;
  for (const auto& v : values) out.push_back(Rational::parse(v));
  return out;
}

std::vector<std::string> print_all(const std::vector<Rational>& values) {
  std::vector<std::string> out;
  for (const auto& v : values) out.push_back(v.to_string());
  return out;
}

py::dict report_dict(const CheckReport& r) {
  py::dict d;
  d["id"] = r.id;
  d["passed"] = r.passed;
  d["verdict"] = r.verdict();
  d["cases"] = r.cases;
  d["seed"] = r.seed ? py::cast(*r.seed) : py::none();
  d["notes"] = r.notes;
  d["counterexample"] = r.counterexample ? py::cast(*r.counterexample) : py::none();
  return d;
}

}  // namespace

PYBIND11_MODULE(_momentcf, m) {
  m.doc() = "Exact moments and continued fractions of classical orthogonal polynomials";

  static py::exception<Error> error(m, "MomentError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error, e.what());
    }
  });

  m.def("sequence", &cli::sequence, py::arg("family"), py::arg("params") = "", py::arg("n") = cli::kDefaultN);
  m.def("egf", &cli::egf, py::arg("family"), py::arg("params") = "", py::arg("order") = cli::kDefaultOrder);
  m.def(
      "continued_fraction",
      [](const std::string& family, const std::string& params, std::size_t depth, const std::string& kind) {
        if (kind != "s" && kind != "j" && kind != "S" && kind != "J") throw Error(Errc::kInvalidArgument, "kind is s or j");
        const auto c = cli::continued_fraction(family, params, depth, static_cast<char>(std::toupper(kind[0])));
        py::dict d;
        d["kind"] = std::string(1, c.kind);
        if (c.kind == 'S') {
          d["alphas"] = c.alphas;
        } else {
          d["gammas"] = c.gammas;
          d["betas"] = c.betas;
        }
        d["terminates"] = c.terminates;
        return d;
      },
      py::arg("family"), py::arg("params") = "", py::arg("depth") = cli::kDefaultDepth, py::arg("kind") = "j");

  m.def("check_ids", [] {
    std::vector<std::string> ids;
    for (const auto& info : check_registry()) ids.push_back(info.id);
    return ids;
  });
  m.def(
      "verify",
      [](const std::string& id, std::uint64_t seed, std::optional<std::size_t> n, std::optional<std::size_t> depth,
         std::optional<std::size_t> order) {
        CheckOptions o;
        o.seed = seed;
        o.n = n;
        o.depth = depth;
        o.order = order;
        if (!find_check(id)) throw Error(Errc::kInvalidArgument, "unknown verification id '" + id + "'");
        return report_dict(run_check(id, o));
      },
      py::arg("id"), py::arg("seed") = kDefaultSeed, py::arg("n") = py::none(), py::arg("depth") = py::none(),
      py::arg("order") = py::none());

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));

  m.def("bernoulli", [](long n) { return bernoulli(n).to_string(); });
  m.def("genocchi", [](long n) { return genocchi(n).to_string(); });
  m.def("median_genocchi", [](long n) { return median_genocchi(n).to_string(); });

  m.def(
      "series_to_jfrac",
      [](const std::vector<std::string>& moments) {
        const auto j = series_to_jfrac(MomentFunctional<Rational>{parse_all(moments), "x"});
        return py::make_tuple(print_all(j.gammas), print_all(j.betas), j.terminates);
      },
      py::arg("moments"));
  m.def(
      "series_to_sfrac",
      [](const std::vector<std::string>& moments) {
        const auto s = series_to_sfrac(MomentFunctional<Rational>{parse_all(moments), "x"});
        return py::make_tuple(print_all(s.alphas), s.terminates);
      },
      py::arg("moments"));
  m.def(
      "sfrac_to_series",
      [](const std::vector<std::string>& alphas, std::size_t order) {
        SFrac<Rational> s;
        s.alphas = parse_all(alphas);
        return print_all(cf_to_series(s, order).coeffs());
      },
      py::arg("alphas"), py::arg("order"));
  m.def(
      "jfrac_to_series",
      [](const std::vector<std::string>& gammas, const std::vector<std::string>& betas, std::size_t order) {
        JFrac<Rational> j;
        j.gammas = parse_all(gammas);
        j.betas = parse_all(betas);
        return print_all(cf_to_series(j, order).coeffs());
      },
      py::arg("gammas"), py::arg("betas"), py::arg("order"));
  m.def(
      "hankel_det",
      [](const std::vector<std::string>& moments, std::size_t n) {
        return hankel_det(MomentFunctional<Rational>{parse_all(moments), "x"}, n).to_string();
      },
      py::arg("moments"), py::arg("n"));
}
