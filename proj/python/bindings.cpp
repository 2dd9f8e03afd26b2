// Python bindings. Big integers cross the boundary as Python ints (via their
// decimal string), vectors as strings with one symbol per character.

#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sdgqc/census.hpp"
#include "sdgqc/cli.hpp"
#include "sdgqc/code_io.hpp"
#include "sdgqc/constructions.hpp"
#include "sdgqc/gv_bounds.hpp"
#include "sdgqc/linear_code.hpp"
#include "sdgqc/mass_formulas.hpp"

namespace py = pybind11;
using namespace sdgqc;

namespace {

py::int_ to_py(const BigCount& v) { return py::int_(py::str(to_decimal(v))); }

py::object to_py(const BigRational& v) {
  return py::module_::import("fractions").attr("Fraction")(to_py(numerator(v)), to_py(denominator(v)));
}

LinearCode code_from_rows(unsigned q, std::size_t n, const std::vector<std::string>& rows) {
  const FieldId f = field_from_order(q);
  std::vector<Vector> v;
  for (const auto& r : rows) v.push_back(Vector::parse(f, r));
  return LinearCode::from_rows(f, n, v);
}

std::vector<std::string> rows_of(const LinearCode& c) {
  std::vector<std::string> out;
  for (const auto& r : c.generator()) out.push_back(r.to_string());
  return out;
}

py::dict report_dict(const BoundReport& r) {
  py::dict d;
  d["ell"] = r.ell;
  d["d"] = r.d;
  d["mode"] = std::string(bound_mode_name(r.mode));
  d["type2"] = r.type2;
  d["lhs"] = to_py(r.lhs);
  d["rhs"] = to_py(r.rhs);
  d["holds"] = r.holds;
  d["delta"] = to_py(r.delta);
  return d;
}

py::tuple run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_sdgqc, m) {
  m.doc() = "Self-dual quasi-cyclic and generalized quasi-cyclic binary codes";

  py::register_exception<InfeasibleCensus>(m, "InfeasibleCensus", PyExc_RuntimeError);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);
  py::register_exception<FormatError>(m, "FormatError", PyExc_ValueError);

  py::class_<LinearCode>(m, "LinearCode")
      .def(py::init(&code_from_rows), py::arg("q"), py::arg("n"), py::arg("rows"))
      .def_static("from_text", &code_from_string, py::arg("text"))
      .def_property_readonly("q", [](const LinearCode& c) { return order(c.field()); })
      .def_property_readonly("n", &LinearCode::length)
      .def_property_readonly("k", &LinearCode::dimension)
      .def_property_readonly("rows", &rows_of)
      .def("contains",
           [](const LinearCode& c, const std::string& v) { return c.contains(Vector::parse(c.field(), v)); })
      .def("to_text", &code_to_string)
      .def("__eq__", [](const LinearCode& a, const LinearCode& b) { return a == b; })
      .def("__hash__", [](const LinearCode& c) { return py::hash(py::str(code_to_string(c))); })
      .def("__repr__", [](const LinearCode& c) {
        return "LinearCode(q=" + std::to_string(order(c.field())) + ", n=" + std::to_string(c.length()) +
               ", k=" + std::to_string(c.dimension()) + ")";
      });

  m.def("dual", [](const LinearCode& c) { return dual(c); });
  m.def("is_self_dual", [](const LinearCode& c) { return is_self_dual(c); });
  m.def("is_type_ii", &is_type_ii);
  m.def(
      "min_distance",
      [](const LinearCode& c, unsigned threads) { return min_distance(c, {.threads = threads}); }, py::arg("code"),
      py::arg("threads") = 1);
  m.def(
      "weight_tally",
      [](const LinearCode& c, unsigned threads) {
        py::list out;
        for (const auto& v : weight_tally(c, {.threads = threads}).counts) out.append(to_py(v));
        return out;
      },
      py::arg("code"), py::arg("threads") = 1);

  m.def("cubic_code", [](const LinearCode& c1, const LinearCode& c2) { return cubic_code({c1, c2}); });
  m.def("quintic_code", [](const LinearCode& c1, const LinearCode& c2) { return quintic_code({c1, c2}); });
  m.def("quintic_map", [](const std::string& x, const std::string& s) {
    return quintic_map(Vector::parse(FieldId::GF2, x), Vector::parse(FieldId::GF16, s)).to_string();
  });
  m.def("crt_components", [](const std::string& c) {
    const auto [x, s] = crt_components(Vector::parse(FieldId::GF2, c));
    return py::make_tuple(x.to_string(), s.to_string());
  });
  m.def("interleave", py::overload_cast<const LinearCode&, std::size_t, std::size_t>(&interleave), py::arg("code"),
        py::arg("sections"), py::arg("m"));
  m.def("is_gqc_invariant", [](const LinearCode& c, const std::vector<std::size_t>& co_indices) {
    return is_gqc_invariant(c, GqcProfile(co_indices));
  });

  m.def("n_sd_binary", [](unsigned l) { return to_py(n_sd_binary(l)); });
  m.def("m_sd_binary", [](unsigned l) { return to_py(m_sd_binary(l)); });
  m.def("t_type2", [](unsigned l) { return to_py(t_type2(l)); });
  m.def("s_type2", [](unsigned l) { return to_py(s_type2(l)); });
  m.def("n_sd_hermitian16", [](unsigned l) { return to_py(n_sd_hermitian16(l)); });
  m.def("m_sd_hermitian16", [](unsigned l) { return to_py(m_sd_hermitian16(l)); });

  m.def(
      "census",
      [](unsigned q, std::size_t n, bool type2, std::optional<std::string> containing, bool keep_codes,
         unsigned threads) {
        CensusQuery query{field_from_order(q), n, type2, std::nullopt};
        if (containing) query.containing = Vector::parse(query.field, *containing);
        CensusOptions o;
        o.keep_codes = keep_codes;
        o.threads = threads;
        auto r = census(query, o);
        return py::make_tuple(to_py(r.count), std::move(r.codes));
      },
      py::arg("q"), py::arg("n"), py::arg("type2") = false, py::arg("containing") = py::none(),
      py::arg("keep_codes") = false, py::arg("threads") = 1);
  m.def(
      "sample_self_dual",
      [](unsigned q, std::size_t n, std::uint64_t seed) { return sample_self_dual({field_from_order(q), n, seed}); },
      py::arg("q"), py::arg("n"), py::arg("seed"));

  m.def(
      "bound_check",
      [](unsigned ell, unsigned d, const std::string& mode, bool type2) {
        const BoundMode bm = bound_mode_from_string(mode);
        return report_dict(type2 ? theorem2_check(ell, d, bm) : theorem1_check(ell, d, bm));
      },
      py::arg("ell"), py::arg("d"), py::arg("mode") = "exact", py::arg("type2") = false);
  m.def(
      "max_distance",
      [](unsigned ell, const std::string& mode, bool type2) {
        return max_distance(ell, bound_mode_from_string(mode), type2).d_star;
      },
      py::arg("ell"), py::arg("mode") = "exact", py::arg("type2") = false);
  m.def("entropy", &entropy, py::arg("q"), py::arg("x"));
  m.def("inverse_entropy", &inverse_entropy, py::arg("q"), py::arg("y"));

  m.def("run_cli", &run_cli, py::arg("args"),
        "Runs one command line in-process; returns (exit_code, stdout, stderr).");
}
