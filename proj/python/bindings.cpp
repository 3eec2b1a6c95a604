#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tau/arith.hpp"
#include "tau/bounds.hpp"
#include "tau/cache.hpp"
#include "tau/cli.hpp"
#include "tau/engines.hpp"
#include "tau/identities.hpp"
#include "tau/stats.hpp"

namespace py = pybind11;
using namespace tau;

namespace {

py::int_ to_py(const BigInt& v) {
  const std::string text = v.get_str(10);
  PyObject* obj = PyLong_FromString(text.c_str(), nullptr, 10);
  if (obj == nullptr) throw py::error_already_set();
  return py::reinterpret_steal<py::int_>(obj);
}

BigInt from_py(const py::int_& v) { return BigInt(py::str(v).cast<std::string>(), 10); }

py::list to_py_list(std::span<const BigInt> values) {
  py::list out;
  for (const auto& v : values) out.append(to_py(v));
  return out;
}

double to_float(const HighReal& x) { return x.to_double(); }

TauTable build(std::uint64_t limit, const std::string& algo) {
  switch (parse_algo(algo)) {
    case Algo::eta: return tau_eta(limit);
    case Algo::niebur: return tau_niebur(limit, sieve_sigma(limit, {1}));
    case Algo::eisenstein: return tau_eisenstein(limit, sieve_sigma(limit, {3, 5}));
    case Algo::multiplicative: return tau_multiplicative(limit, harvest_prime_taus(tau_eta(limit)));
  }
  throw std::logic_error("unhandled algorithm");
}

TauTable table_from_values(const std::string& algo, const py::list& values) {
  std::vector<BigInt> v{BigInt(0)};
  for (const auto& item : values) v.push_back(from_py(item.cast<py::int_>()));
  return TauTable(parse_algo(algo), std::move(v));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact Ramanujan tau tables, identity checks and bound audits";

  py::register_exception<CacheError>(m, "CacheError", PyExc_ValueError);

  py::class_<TauTable>(m, "TauTable")
      .def(py::init(&table_from_values), py::arg("algo"), py::arg("values"))
      .def_property_readonly("limit", &TauTable::limit)
      .def_property_readonly("algo", [](const TauTable& t) { return std::string(to_string(t.algo())); })
      .def_property_readonly("values", [](const TauTable& t) { return to_py_list(t.values()); })
      .def("__len__", &TauTable::limit)
      .def("__getitem__", [](const TauTable& t, std::uint64_t n) { return to_py(t.at(n)); }, py::arg("n"))
      .def("__eq__", [](const TauTable& a, const TauTable& b) { return a == b; })
      .def("__repr__", [](const TauTable& t) {
        return "TauTable(algo=" + std::string(to_string(t.algo())) + ", limit=" + std::to_string(t.limit()) + ")";
      });

  m.def("compute", &build, py::arg("limit"), py::arg("algo") = "eta",
        "tau(1..limit) from one engine: eta, niebur, eisenstein or multiplicative");

  m.def(
      "reconcile",
      [](const std::vector<TauTable>& tables) {
        const ReconcileReport rep = reconcile(tables);
        py::list pairs;
        for (const auto& p : rep.pairs) {
          py::dict d;
          d["a"] = std::string(to_string(rep.algos[p.first]));
          d["b"] = std::string(to_string(rep.algos[p.second]));
          d["first_mismatch"] = p.first_mismatch ? py::cast(*p.first_mismatch) : py::none();
          pairs.append(d);
        }
        py::dict out;
        out["range"] = rep.range;
        out["agree"] = rep.all_agree();
        out["pairs"] = pairs;
        return out;
      },
      py::arg("tables"));

  m.def(
      "check_identities",
      [](const TauTable& t) {
        py::list out;
        for (const auto& v : check_all_identities(t)) {
          py::dict d;
          d["kind"] = std::string(to_string(v.kind));
          d["n"] = v.n;
          d["lhs"] = to_py(v.lhs);
          d["rhs"] = to_py(v.rhs);
          d["detail"] = v.detail;
          out.append(d);
        }
        return out;
      },
      py::arg("table"));

  m.def(
      "factorize",
      [](std::uint64_t n) {
        std::vector<std::pair<std::uint64_t, unsigned>> out;
        for (const auto& [p, a] : factorize(n).factors) out.emplace_back(p, a);
        return out;
      },
      py::arg("n"));
  m.def("is_prime", &is_prime, py::arg("n"));

  m.def(
      "sieve_sigma",
      [](std::uint64_t limit, const std::vector<unsigned>& exponents) {
        py::dict out;
        for (unsigned a : exponents) {
          const SigmaTables s = sieve_sigma(limit, {a});
          out[py::int_(a)] = to_py_list(std::span(s.table(a)).subspan(1));
        }
        return out;
      },
      py::arg("limit"), py::arg("exponents") = std::vector<unsigned>{0, 1, 3, 5},
      "Divisor power sums sigma_a(1..limit), keyed by exponent");

  m.def("power_sum_direct", [](unsigned t, std::uint64_t n) { return to_py(power_sum_direct(t, n)); },
        py::arg("t"), py::arg("n"));
  m.def("power_sum_faulhaber", [](unsigned t, std::uint64_t n) { return to_py(power_sum_faulhaber(t, n)); },
        py::arg("t"), py::arg("n"));
  m.def(
      "faulhaber_coefficients",
      [](unsigned t) {
        std::vector<std::pair<py::int_, py::int_>> out;
        for (const auto& c : faulhaber_coefficients(t)) out.emplace_back(to_py(c.get_num()), to_py(c.get_den()));
        return out;
      },
      py::arg("t"), "(numerator, denominator) of c_0..c_{t+1}");
  m.def("loglog", [](std::uint64_t n) { return to_float(loglog(n)); }, py::arg("n"));

  m.def(
      "check_deligne",
      [](const TauTable& t) {
        const DeligneCheck d = check_deligne(t, sieve_sigma(t.limit(), {0}));
        py::dict out;
        out["violations"] = d.violations;
        out["max_ratio"] = to_float(d.max_ratio);
        out["argmax"] = d.argmax;
        return out;
      },
      py::arg("table"));

  m.def(
      "check_robin",
      [](std::uint64_t limit, std::uint64_t first) {
        const RobinCheck r = check_robin(sieve_sigma(limit, {1}), BoundParams{}, first, limit);
        py::dict out;
        out["violations"] = r.violations;
        out["near_equality"] = r.near_equality;
        py::dict margins;
        for (std::uint64_t n : r.near_equality) margins[py::int_(n)] = to_float(r.records[n - first].margin);
        out["near_equality_margins"] = margins;
        return out;
      },
      py::arg("limit"), py::arg("first") = 3);

  m.def(
      "implied_c",
      [](std::uint64_t first, std::uint64_t last) {
        const ImpliedC c = implied_c(sieve_sigma(last, {1}), first, last);
        return std::make_pair(to_float(c.value), c.argmax);
      },
      py::arg("first"), py::arg("last"));

  m.def(
      "evaluate_t5",
      [](std::uint64_t n, const py::int_& tau_n, double c) {
        const T5Evaluation e = evaluate_t5(n, from_py(tau_n), HighReal(c));
        py::dict out;
        out["bound"] = to_float(e.bound);
        out["ratio"] = to_float(e.ratio);
        out["verdict"] = std::string(to_string(e.verdict));
        return out;
      },
      py::arg("n"), py::arg("tau_n"), py::arg("c") = 1.0);

  m.def(
      "check_t5",
      [](const TauTable& t, std::optional<double> c, std::uint64_t scan_start) {
        const SigmaTables sigma = sieve_sigma(t.limit(), {0, 1});
        BoundParams params;
        params.scan_start = scan_start;
        params.c = c ? HighReal(*c) : implied_c(sigma, scan_start, t.limit()).value;
        const T5Check check = check_t5(t, sigma, params, scan_start, t.limit());
        py::list profile;
        for (const auto& p : check.profile) {
          py::dict d;
          d["upto"] = p.upto;
          d["running_max"] = to_float(p.running_max);
          d["argmax"] = p.argmax;
          profile.append(d);
        }
        py::dict out;
        out["c"] = to_float(params.c);
        out["failures"] = check.failures;
        out["profile"] = profile;
        return out;
      },
      py::arg("table"), py::arg("c") = py::none(), py::arg("scan_start") = 16);

  m.def(
      "audit_cancellation",
      [](std::uint64_t n) {
        const CancellationAudit a = audit_cancellation(n, sieve_sigma(n, {1}));
        py::dict out;
        out["n"] = a.n;
        out["signed_abs"] = to_py(a.signed_abs);
        out["absolute_sum"] = to_py(a.absolute_sum);
        out["ratio"] = to_float(a.ratio);
        out["reconstructed_tau"] = to_py(a.reconstructed_tau);
        return out;
      },
      py::arg("n"));

  m.def(
      "hecke_ratio_scan",
      [](const TauTable& t, std::uint64_t first, std::uint64_t last) {
        const HeckeScan h = hecke_ratio_scan(t, first, last);
        return std::make_pair(to_float(h.max_ratio), h.argmax);
      },
      py::arg("table"), py::arg("first"), py::arg("last"));

  m.def(
      "rankin",
      [](const TauTable& t, const std::vector<std::uint64_t>& checkpoints) {
        py::list out;
        for (const auto& row : rankin_rows(t, checkpoints).rows) {
          py::dict d;
          d["N"] = row.upto;
          d["sum_sq"] = to_py(row.sum_sq);
          d["r12"] = to_float(row.r12);
          d["r11"] = row.r11 ? py::cast(to_float(*row.r11)) : py::none();
          out.append(d);
        }
        return out;
      },
      py::arg("table"), py::arg("checkpoints"));

  m.def(
      "lseries_compare",
      [](const TauTable& t, double s, std::uint64_t n_terms, std::uint64_t p_max) {
        const LSeriesComparison c = lseries_compare(t, HighReal(s), n_terms, p_max);
        py::dict out;
        out["dirichlet_partial"] = to_float(c.dirichlet_partial);
        out["euler_partial"] = to_float(c.euler_partial);
        out["difference"] = to_float(c.difference);
        out["tail_bound"] = to_float(c.tail_bound);
        return out;
      },
      py::arg("table"), py::arg("s"), py::arg("n_terms"), py::arg("p_max"));

  m.def("serialize_table", &serialize_table, py::arg("table"));
  m.def("parse_table", [](const std::string& text) { return parse_table(text); }, py::arg("text"));
  m.def("write_table", [](const TauTable& t, const std::string& path) { write_table(t, path); }, py::arg("table"),
        py::arg("path"));
  m.def("read_table", [](const std::string& path) { return read_table(path); }, py::arg("path"));

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out;
        std::ostringstream err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Run a CLI command in-process; returns (exit_code, stdout, stderr)");
}
