#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "fibpair/closed_forms.hpp"
#include "fibpair/error.hpp"
#include "fibpair/explorer.hpp"
#include "fibpair/fibonacci.hpp"
#include "fibpair/solver.hpp"
#include "fibpair/verify.hpp"

namespace py = pybind11;
namespace fp = fibpair;

// Python int <-> mpz_class through their decimal representations.
namespace pybind11::detail {

template <>
struct type_caster<mpz_class> {
  PYBIND11_TYPE_CASTER(mpz_class, const_name("int"));

  bool load(handle src, bool) {
    if (!src || !PyLong_Check(src.ptr())) {
      return false;
    }
    object text = reinterpret_steal<object>(PyObject_Str(src.ptr()));
    if (!text) {
      PyErr_Clear();
      return false;
    }
    return value.set_str(text.cast<std::string>(), 10) == 0;
  }

  static handle cast(const mpz_class& src, return_value_policy, handle) {
    return PyLong_FromString(src.get_str(10).c_str(), nullptr, 10);
  }
};

}  // namespace pybind11::detail

namespace {

py::dict as_dict(const fp::ScanRecord& r) {
  py::dict d;
  d["n"] = r.n;
  d["a"] = r.a;
  d["b"] = r.b;
  d["x"] = r.x;
  d["y"] = r.y;
  d["gamma"] = fp::to_int(r.gamma);
  return d;
}

fp::ScanRecord from_dict(const py::dict& d, unsigned long i, unsigned long j) {
  return {d["n"].cast<fp::FibIndex>(), i, j, d["a"].cast<mpz_class>(), d["b"].cast<mpz_class>(),
          d["x"].cast<mpz_class>(), d["y"].cast<mpz_class>(),
          static_cast<fp::Gamma>(d["gamma"].cast<int>())};
}

py::tuple as_tuple(const fp::PairSolution& s) { return py::make_tuple(fp::to_int(s.gamma), s.x, s.y); }

py::tuple as_tuple(const fp::ClosedFormResult& r) {
  return py::make_tuple(fp::to_int(r.gamma), r.x, r.y);
}

fp::Family family_of(const std::string& name) {
  if (name == "linear") return fp::Family::linear;
  if (name == "squared") return fp::Family::squared;
  if (name == "cubed") return fp::Family::cubed;
  throw fp::DomainError("unknown family '" + name + "'");
}

fp::TableFormat format_of(const std::string& name) {
  if (name == "csv") return fp::TableFormat::csv;
  if (name == "json") return fp::TableFormat::json;
  throw fp::DomainError("unknown format '" + name + "'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact solver and explorer for ax + by (+1) = (a-1)(b-1)/2";

  py::register_exception<fp::DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<fp::ContradictionError>(m, "ContradictionError", PyExc_ArithmeticError);

  m.def("fib", &fp::fib, py::arg("n"));
  m.def("fib_pow", &fp::fib_pow, py::arg("n"), py::arg("k"));
  m.def("cassini", &fp::cassini, py::arg("n"));
  m.def("sum_cubes", &fp::sum_cubes, py::arg("n"));
  m.def("alt_sum_cubes", &fp::alt_sum_cubes, py::arg("n"));
  m.def("fib_triple_identity", &fp::fib_triple_identity, py::arg("n"));

  m.def(
      "gamma", [](const mpz_class& a, const mpz_class& b) {
        return fp::to_int(fp::gamma(fp::CoprimePair(a, b)));
      },
      py::arg("a"), py::arg("b"));
  m.def(
      "solve_pair",
      [](const mpz_class& a, const mpz_class& b) {
        return as_tuple(fp::solve_pair(fp::CoprimePair(a, b)));
      },
      py::arg("a"), py::arg("b"), "Returns (gamma, x, y).");
  m.def(
      "solve_shifted_pair",
      [](const mpz_class& a, const mpz_class& b) {
        return as_tuple(fp::solve_shifted_pair(fp::CoprimePair(a, b)));
      },
      py::arg("a"), py::arg("b"));
  m.def(
      "solve_positive_pair",
      [](const mpz_class& a, const mpz_class& b) {
        auto s = fp::solve_positive_pair(a, b);
        return py::make_tuple(s.equation == fp::PositiveEquation::plus ? "plus" : "minus", s.x,
                              s.y);
      },
      py::arg("a"), py::arg("b"), "Returns (equation, x, y) with equation 'plus' or 'minus'.");

  m.def(
      "closed_solution",
      [](const std::string& family, fp::FibIndex n) {
        return as_tuple(fp::closed_solution(family_of(family), n));
      },
      py::arg("family"), py::arg("n"), "Returns (gamma, x, y).");

  m.def(
      "scan",
      [](unsigned long i, unsigned long j, fp::FibIndex n_from, fp::FibIndex n_to) {
        py::list rows;
        fp::scan_each(i, j, n_from, n_to, [&](const fp::ScanRecord& r) { rows.append(as_dict(r)); });
        return rows;
      },
      py::arg("i"), py::arg("j"), py::arg("n_from"), py::arg("n_to"));

  m.def(
      "detect_period",
      [](const std::vector<int>& values, fp::FibIndex first_index,
         std::optional<fp::FibIndex> offset_hint) {
        std::vector<fp::Gamma> gammas;
        for (int v : values) {
          if (v != 1 && v != 2) throw fp::DomainError("gamma values must be 1 or 2");
          gammas.push_back(static_cast<fp::Gamma>(v));
        }
        auto report = fp::detect_period(gammas, first_index, offset_hint);
        py::dict d;
        d["status"] = report.status == fp::PeriodStatus::found ? "found" : "none-found";
        d["offset"] = report.offset;
        d["period"] = report.period;
        std::vector<int> pattern;
        for (auto g : report.pattern) pattern.push_back(fp::to_int(g));
        d["pattern"] = pattern;
        d["verified_upto"] = report.verified_upto;
        return d;
      },
      py::arg("gammas"), py::arg("first_index") = 0, py::arg("offset_hint") = py::none());

  m.def(
      "difference_probe",
      [](unsigned long i, unsigned long j, fp::FibIndex n_from, fp::FibIndex n_to) {
        auto diffs = fp::difference_probe(fp::scan(i, j, n_from, n_to));
        std::vector<std::pair<fp::FibIndex, mpz_class>> out;
        for (auto& d : diffs) out.emplace_back(d.n, d.value);
        return out;
      },
      py::arg("i"), py::arg("j"), py::arg("n_from"), py::arg("n_to"),
      "Returns [(n, y_{n+1} - x_n), ...] for the scan over [n_from, n_to].");

  m.def(
      "emit_table",
      [](const py::list& rows, const std::string& format) {
        std::vector<fp::ScanRecord> records;
        for (const auto& row : rows) records.push_back(from_dict(row.cast<py::dict>(), 0, 0));
        return fp::emit_table(records, format_of(format));
      },
      py::arg("rows"), py::arg("format") = "csv");

  m.def(
      "verify",
      [](const std::string& suite, std::uint64_t max) {
        std::vector<fp::VerifyReport> reports;
        if (suite == "cassini") reports = {fp::verify_cassini(max)};
        else if (suite == "parity") reports = {fp::verify_parity(max)};
        else if (suite == "triple") reports = {fp::verify_triple(max)};
        else if (suite == "sums") reports = {fp::verify_sums(max)};
        else if (suite == "thm11") reports = {fp::verify_dichotomy(max)};
        else if (suite == "shifted") reports = {fp::verify_shifted(max)};
        else if (suite == "thm12")
          reports = {fp::verify_squared_identities(max), fp::verify_squared_solver(max)};
        else if (suite == "thm15")
          reports = {fp::verify_cubed_identities(max), fp::verify_cubed_solver(max)};
        else if (suite == "thm42") reports = {fp::verify_positive_pair(max, max)};
        else throw fp::DomainError("unknown suite '" + suite + "'");
        py::list out;
        for (const auto& r : reports) {
          py::dict d;
          d["suite"] = r.suite;
          d["checked"] = r.checked;
          d["passed"] = r.passed;
          d["counterexample"] = r.counterexample;
          out.append(d);
        }
        return out;
      },
      py::arg("suite"), py::arg("max"));
}
