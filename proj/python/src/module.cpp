#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "symcc/commands.hpp"
#include "symcc/cycle_algebra.hpp"
#include "symcc/errors.hpp"
#include "symcc/geometry.hpp"
#include "symcc/index.hpp"
#include "symcc/series.hpp"

namespace py = pybind11;
using namespace symcc;

namespace {

py::int_ to_py(const Integer& v) { return py::int_(py::str(v.get_str())); }

Divisor drops_of(const std::map<std::string, long>& sing) {
  Divisor d;
  for (const auto& [id, a] : sing) d.add(Point(id), a);
  return d;
}

py::list terms_of(const CycleSum& z) {
  py::list out;
  for (const auto& [b, c] : z.terms()) out.append(py::make_tuple(b.delta().to_string(), b.e().to_string(), to_py(c)));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Characteristic cycles of symmetric powers of sheaves on curves";

  static py::exception<ArgumentError> argument_error(m, "ArgumentError", PyExc_ValueError);
  static py::exception<PreconditionError> precondition_error(m, "PreconditionError", PyExc_ValueError);
  static py::exception<InternalError> internal_error(m, "InternalError", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ArgumentError& e) {
      py::set_error(argument_error, e.what());
    } catch (const PreconditionError& e) {
      py::set_error(precondition_error, e.what());
    } catch (const InternalError& e) {
      py::set_error(internal_error, e.what());
    }
  });

  m.def(
      "structure_constants",
      [](const std::string& e, const std::string& e2) {
        py::dict out;
        for (const auto& [f, c] : *structure_constants(MultVec::parse(e), MultVec::parse(e2))) {
          out[py::str(f.to_string())] = to_py(c);
        }
        return out;
      },
      py::arg("e"), py::arg("e2"), "N(e, e'; f) keyed by f, e.g. structure_constants('1^1', '1^1').");

  m.def(
      "product",
      [](const std::vector<std::string>& labels) {
        CycleSum z = CycleSum::unit();
        for (const auto& l : labels) z = multiply(z, CycleSum::term(TauBasis::parse(l), 1));
        return terms_of(z);
      },
      py::arg("labels"), "Product of labels such as 's; 1^1'; returns (delta, e, coef) triples.");

  m.def(
      "count_m",
      [](const std::vector<unsigned>& lambda, const std::vector<unsigned>& mu) {
        return to_py(count_m(Partition(lambda), mu));
      },
      py::arg("lam"), py::arg("mu"));

  m.def(
      "series",
      [](unsigned rank, const std::map<std::string, long>& sing, unsigned max_degree, long genus, bool shifted) {
        const CurveContext ctx = make_curve_context(genus, 0);
        const SheafDescriptor d = SheafDescriptor::make(rank, drops_of(sing));
        const CycleSeries s = shifted ? shifted_series(d, ctx, max_degree) : build_series(d, ctx, max_degree);
        py::list out;
        for (const auto& z : s.components()) out.append(terms_of(z));
        return out;
      },
      py::arg("rank"), py::arg("sing") = std::map<std::string, long>{}, py::arg("max_degree") = 6,
      py::arg("genus") = 0, py::arg("shifted") = false);

  m.def(
      "infer_degrees",
      [](long genus, unsigned max_degree) {
        py::dict out;
        for (const auto& [lambda, d] : infer_degrees(genus, max_degree).entries) {
          out[py::tuple(py::cast(lambda.parts()))] = to_py(d);
        }
        return out;
      },
      py::arg("genus"), py::arg("max_degree"));

  m.def(
      "index_check",
      [](long genus, unsigned rank, const std::map<std::string, long>& sing, unsigned max_degree) {
        return index_check(make_curve_context(genus, 0), SheafDescriptor::make(rank, drops_of(sing)), max_degree);
      },
      py::arg("genus"), py::arg("rank"), py::arg("sing") = std::map<std::string, long>{}, py::arg("max_degree") = 5);

  m.def(
      "acyclicity",
      [](long genus, unsigned rank, const std::map<std::string, long>& sing, long n) {
        const CurveContext ctx = make_curve_context(genus, 0);
        const SheafDescriptor d = SheafDescriptor::make(rank, drops_of(sing));
        const AcyclicityReport rep = acyclicity(ctx, d, n);
        py::dict out;
        out["verdict"] = to_string(rep.verdict);
        out["n_f"] = rep.n_f;
        out["k_f_label"] = rep.k_f_label;
        const auto cert = rank >= 1 ? singularity_certificate(ctx, d, n) : std::nullopt;
        if (cert) {
          out["certificate"] = py::make_tuple(cert->delta.to_string(), cert->e.to_string());
        } else {
          out["certificate"] = py::none();
        }
        return out;
      },
      py::arg("genus"), py::arg("rank"), py::arg("sing") = std::map<std::string, long>{}, py::arg("n"));

  m.def(
      "critical_point",
      [](long genus, unsigned rank, const std::map<std::string, long>& sing, const std::string& omega) {
        return critical_point(make_curve_context(genus, 0), SheafDescriptor::make(rank, drops_of(sing)),
                              Divisor::parse(omega))
            .to_string();
      },
      py::arg("genus"), py::arg("rank"), py::arg("sing"), py::arg("omega"));

  m.def(
      "mtable",
      [](unsigned n, const std::string& fmt) { return commands::mtable(n, parse_format(fmt)); },
      py::arg("n"), py::arg("format") = "text");

  m.def("selftest", [] {
    const auto res = commands::selftest();
    return py::make_tuple(res.passed, res.text);
  });
}
