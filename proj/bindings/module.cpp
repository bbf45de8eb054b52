#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>
#include <string>
#include <vector>

#include "cmreg/bounds.hpp"
#include "cmreg/corpus.hpp"
#include "cmreg/handle.hpp"
#include "cmreg/hilbert.hpp"
#include "cmreg/ideal_io.hpp"
#include "cmreg/util.hpp"

namespace py = pybind11;
using namespace cmreg;

namespace {

// mpz_class round-trips through decimal strings: exact at any size.
py::object to_int(const mpz_class& z) {
  return py::reinterpret_steal<py::object>(
      PyLong_FromString(z.get_str().c_str(), nullptr, 10));
}

mpz_class to_mpz(const py::handle& o) {
  return mpz_class(py::str(o).cast<std::string>());
}

py::list int_list(const std::vector<mpz_class>& v) {
  py::list out;
  for (const auto& z : v) out.append(to_int(z));
  return out;
}

RandomFlavor parse_flavor(const std::string& s) {
  if (s == "general") return RandomFlavor::general;
  if (s == "monomial") return RandomFlavor::monomial;
  if (s == "squarefree") return RandomFlavor::squarefree;
  if (s == "borel") return RandomFlavor::borel;
  fail(ErrorCode::invalid_input, "unknown random flavor '" + s + "'");
}

// An ideal file plus the invariant cache working on it.
struct Ideal {
  IdealFile file;
  std::shared_ptr<IdealHandle> handle;

  IdealHandle& h() { return *handle; }
};

Ideal wrap(IdealFile f, std::uint64_t seed, int trials) {
  auto h = std::make_shared<IdealHandle>(f.ring, f.gens, seed, trials);
  return Ideal{std::move(f), std::move(h)};
}

Ideal wrap_entry(const CorpusEntry& entry, std::uint64_t seed, int trials) {
  auto h = std::make_shared<IdealHandle>(
      corpus_handle(entry, seed, trials));
  return Ideal{entry.file, std::move(h)};
}

std::vector<std::string> poly_strings(const std::vector<Polynomial>& ps) {
  std::vector<std::string> out;
  out.reserve(ps.size());
  for (const auto& p : ps) out.push_back(p.str());
  return out;
}

std::vector<std::string> mono_strings(const MonomialIdeal& I) {
  std::vector<std::string> out;
  out.reserve(I.gens().size());
  for (const auto& p : I.to_polynomials()) out.push_back(p.str());
  return out;
}

py::object a_inv(long a) {
  if (a == kMinusInfinity) return py::none();
  return py::int_(a);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Exact commutative-algebra kernels: Groebner bases, Hilbert "
      "series/polynomials, Gotzmann decompositions, local cohomology of "
      "Borel-type monomial ideals, Castelnuovo-Mumford regularity, arithmetic "
      "degree, and the degree-bound audit registry.";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      std::string msg = std::string(e.code_name()) + ": " + e.what();
      PyErr_SetString(PyExc_ValueError, msg.c_str());
    }
  });

  py::class_<Ideal>(m, "Ideal",
                    "A homogeneous ideal with cached derived invariants. "
                    "Randomized reductions are deterministic in (seed, "
                    "trials).")
      .def_property_readonly("id", [](Ideal& s) { return s.file.id; })
      .def_property_readonly(
          "nvars", [](Ideal& s) { return s.file.ring->nvars; })
      .def_property_readonly(
          "variables", [](Ideal& s) { return s.file.ring->var_names; })
      .def_property_readonly(
          "order", [](Ideal& s) { return s.file.order.name(); })
      .def_property_readonly(
          "generators", [](Ideal& s) { return poly_strings(s.h().gens()); })
      .def_property_readonly("expect",
                             [](Ideal& s) {
                               py::dict out;
                               for (const auto& [k, v] : s.file.expect)
                                 out[py::str(k)] = to_int(v);
                               return out;
                             })
      .def_property_readonly("seed", [](Ideal& s) { return s.h().seed(); })
      .def_property_readonly("trials", [](Ideal& s) { return s.h().trials(); })
      .def_property_readonly("is_monomial",
                             [](Ideal& s) { return bool(s.h().monomial()); })
      .def_property_readonly("is_squarefree",
                             [](Ideal& s) {
                               const auto& mi = s.h().monomial();
                               return mi && mi->is_squarefree();
                             })
      .def_property_readonly("is_borel_type",
                             [](Ideal& s) {
                               const auto& mi = s.h().monomial();
                               return mi && is_borel_type(*mi);
                             })
      .def_property_readonly("is_strongly_stable",
                             [](Ideal& s) {
                               const auto& mi = s.h().monomial();
                               return mi && is_strongly_stable(*mi);
                             })
      .def_property_readonly("dim", [](Ideal& s) { return s.h().dim(); })
      .def_property_readonly("codim", [](Ideal& s) { return s.h().codim(); })
      .def_property_readonly(
          "multiplicity",
          [](Ideal& s) { return to_int(s.h().multiplicity()); })
      .def_property_readonly(
          "minimal_degrees",
          [](Ideal& s) { return s.h().minimal_degrees(); })
      .def_property_readonly(
          "max_gen_degree", [](Ideal& s) { return s.h().max_gen_degree(); })
      .def_property_readonly(
          "hilbert_numerator",
          [](Ideal& s) { return int_list(s.h().series().numerator); })
      .def_property_readonly(
          "hilbert_coefficients",
          [](Ideal& s) { return int_list(s.h().hpoly().e); })
      .def_property_readonly("postulation",
                             [](Ideal& s) { return s.h().postulation(); })
      .def_property_readonly("gotzmann",
                             [](Ideal& s) {
                               const auto& g = s.h().gotzmann();
                               py::dict out;
                               out["c"] = g.c;
                               out["s"] = g.s;
                               out["B"] = int_list(g.B);
                               return out;
                             })
      .def_property_readonly("reg_quotient",
                             [](Ideal& s) { return s.h().reg_quotient(); })
      .def_property_readonly("reg_ideal",
                             [](Ideal& s) { return s.h().reg_ideal(); })
      .def_property_readonly(
          "reg_method",
          [](Ideal& s) { return s.h().regularity_result().method; })
      .def_property_readonly(
          "reg_exact",
          [](Ideal& s) { return s.h().regularity_result().exact; })
      .def_property_readonly(
          "reg_upper_bound_only",
          [](Ideal& s) { return s.h().regularity_result().upper_bound_only; })
      .def_property_readonly("adeg",
                             [](Ideal& s) { return to_int(s.h().adeg().arith_degree); })
      .def_property_readonly(
          "adeg_source", [](Ideal& s) { return s.h().adeg().source; })
      .def_property_readonly("adeg_exact",
                             [](Ideal& s) { return s.h().adeg().exact; })
      .def_property_readonly("depth", [](Ideal& s) { return s.h().depth(); })
      .def_property_readonly(
          "is_cohen_macaulay", [](Ideal& s) { return s.h().cohen_macaulay(); })
      .def("hilbert_function",
           [](Ideal& s, long t) { return to_int(s.h().series().function(t)); },
           py::arg("t"))
      .def("brute_hilbert",
           [](Ideal& s, long t) {
             return to_int(brute_force_hilbert(s.file.ring, s.h().gens(), t));
           },
           py::arg("t"),
           "Hilbert function value by exact row reduction, independent of "
           "the Groebner/series pipeline.")
      .def("hilbert_polynomial",
           [](Ideal& s, long t) { return to_int(s.h().hpoly().eval(t)); },
           py::arg("t"))
      .def("groebner",
           [](Ideal& s, const std::string& order) {
             return poly_strings(
                 s.h().groebner(TermOrder::parse(order)).basis());
           },
           py::arg("order") = "grevlex")
      .def("initial",
           [](Ideal& s, const std::string& order) {
             return mono_strings(s.h().initial(TermOrder::parse(order)));
           },
           py::arg("order") = "grevlex")
      .def("gin", [](Ideal& s) { return mono_strings(s.h().gin()); },
           "Generic initial ideal under grevlex (deterministic in the seed).")
      .def("cohomology",
           [](Ideal& s, int j, long t) {
             return to_int(s.h().table().value(j, t));
           },
           py::arg("j"), py::arg("t"),
           "Hilbert function of the j-th graded local cohomology module of "
           "R/I at degree t.")
      .def("a_invariants",
           [](Ideal& s) {
             py::list out;
             for (long a : s.h().table().a) out.append(a_inv(a));
             return out;
           },
           "a_j = top nonvanishing degree of the j-th cohomology module; "
           "None when the module vanishes.")
      .def("euler_check",
           [](Ideal& s, long lo, long hi) {
             const auto& mi = s.h().monomial();
             if (!mi)
               fail(ErrorCode::unsupported,
                    "euler_check needs a monomial ideal");
             EulerCheck ec = euler_characteristic_check(*mi, lo, hi);
             py::list residuals;
             for (std::size_t i = 0; i < ec.lhs.size(); ++i)
               residuals.append(to_int(ec.lhs[i] - ec.rhs[i]));
             py::dict out;
             out["ok"] = ec.ok;
             out["residuals"] = residuals;
             return out;
           },
           py::arg("lo") = -10, py::arg("hi") = 10)
      .def("lex_segment",
           [](Ideal& s) {
             return mono_strings(lex_segment_ideal(s.h().series(), s.file.ring));
           },
           "The lex-segment ideal with the same Hilbert function.")
      .def("hyperplane_section",
           [](Ideal& s, std::uint64_t seed) {
             SectionResult sec =
                 hyperplane_section(s.file.ring, s.h().gens(), seed);
             IdealFile f;
             f.id = s.file.id + "-section";
             f.ring = sec.ring;
             f.gens = sec.gens;
             return wrap(std::move(f), s.h().seed(), s.h().trials());
           },
           py::arg("seed") = 1,
           "Generic hyperplane section (one fewer variable, dim drops by 1).")
      .def("declare_prime", [](Ideal& s) { s.h().declare_prime(); })
      .def("supply_adeg",
           [](Ideal& s, const py::int_& v) {
             s.h().supply_arith_degree(to_mpz(v));
           },
           py::arg("value"))
      .def("audit",
           [](Ideal& s) {
             BoundReport rep = audit_ideal(s.h(), s.file.id);
             return report_json({rep}, s.h().seed(), s.h().trials());
           },
           "Evaluates every applicable registered bound; returns the JSON "
           "report.")
      .def("serialize", [](Ideal& s) {
        IdealFile f = s.file;
        f.gens = s.h().gens();
        return serialize_ideal(f);
      })
      .def("__repr__", [](Ideal& s) {
        return "Ideal(id='" + s.file.id +
               "', nvars=" + std::to_string(s.file.ring->nvars) +
               ", ngens=" + std::to_string(s.h().gens().size()) + ")";
      });

  m.def("parse",
        [](const std::string& text, bool strict, std::uint64_t seed,
           int trials) {
          return wrap(parse_ideal_file(text, strict), seed, trials);
        },
        py::arg("text"), py::arg("strict") = false, py::arg("seed") = 0,
        py::arg("trials") = 3, "Parses the line-oriented ideal file format.");
  m.def("load",
        [](const std::string& path, bool strict, std::uint64_t seed,
           int trials) {
          return wrap(load_ideal_file(path, strict), seed, trials);
        },
        py::arg("path"), py::arg("strict") = false, py::arg("seed") = 0,
        py::arg("trials") = 3);

  m.def("twisted_cubic",
        [](std::uint64_t seed, int trials) {
          return wrap_entry(twisted_cubic(), seed, trials);
        },
        py::arg("seed") = 0, py::arg("trials") = 3,
        "The rational normal cubic curve (a prime toric kernel).");
  m.def("toric_surface",
        [](long e, std::uint64_t seed, int trials) {
          return wrap_entry(toric_surface(e), seed, trials);
        },
        py::arg("e"), py::arg("seed") = 0, py::arg("trials") = 3,
        "Projected rational scroll of degree e (e >= 3).");
  m.def("double_plane",
        [](long t, std::uint64_t seed, int trials) {
          return wrap_entry(double_plane(t), seed, trials);
        },
        py::arg("t"), py::arg("seed") = 0, py::arg("trials") = 3,
        "Double structure on a plane: degree 2, regularity growing with t.");
  m.def("borel_intersection",
        [](int n, int c, int r, std::uint64_t seed, int trials) {
          return wrap_entry(borel_intersection(n, c, r), seed, trials);
        },
        py::arg("n"), py::arg("c"), py::arg("r"), py::arg("seed") = 0,
        py::arg("trials") = 3,
        "Subspace with a fat embedded component; closed-form regularity.");
  m.def("named_corpus",
        [](std::uint64_t seed, int trials) {
          std::vector<Ideal> out;
          for (const auto& entry : named_corpus())
            out.push_back(wrap_entry(entry, seed, trials));
          return out;
        },
        py::arg("seed") = 0, py::arg("trials") = 3);
  m.def("random_ideals",
        [](int n, int max_degree, int count, std::uint64_t seed,
           const std::string& flavor, int trials) {
          std::vector<Ideal> out;
          for (auto& f : random_ideals(n, max_degree, count, seed,
                                       parse_flavor(flavor)))
            out.push_back(wrap(std::move(f), seed, trials));
          return out;
        },
        py::arg("n"), py::arg("max_degree"), py::arg("count"),
        py::arg("seed"), py::arg("flavor") = "general", py::arg("trials") = 3,
        "Deterministic random ideals; flavor is general | monomial | "
        "squarefree | borel.");

  m.def("eval_bound",
        [](const std::string& name, const py::dict& args) {
          InvariantMap inv;
          for (auto item : args)
            inv[item.first.cast<std::string>()] = to_mpz(item.second);
          return to_int(eval_bound(name, inv));
        },
        py::arg("name"), py::arg("args"),
        "Evaluates one registered bound formula to an exact integer.");
  m.def("bound_names", []() { return bound_names(); });

  m.def("finiteness_explorer",
        [](int n, int a, int d) {
          FinitenessResult r = finiteness_explorer(n, a, d);
          py::list functions;
          for (const auto& row : r.functions) functions.append(int_list(row));
          py::dict out;
          out["n"] = r.n;
          out["a"] = r.a;
          out["d"] = r.d;
          out["ideals_examined"] = r.ideals_examined;
          out["functions"] = functions;
          out["max_reg_quotient"] = r.max_reg_quotient;
          out["reg_cap"] = to_int(r.reg_cap);
          out["all_within_cap"] = r.all_within_cap;
          return out;
        },
        py::arg("n"), py::arg("a"), py::arg("d"),
        "Enumerates squarefree monomial ideals with dim R/I = d and at most "
        "a facets; collects the distinct Hilbert functions and checks the "
        "regularity cap.");
}
