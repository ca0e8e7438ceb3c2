// python surface: element type, parsing, membership, counting, closure

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "evenres/counting.hpp"
#include "evenres/engine.hpp"
#include "evenres/families.hpp"
#include "evenres/named.hpp"
#include "evenres/parse.hpp"

namespace py = pybind11;
using namespace evenres;

namespace {

FamilySpec family_or_throw(const std::string& name, int n) {
  auto f = parse_family(name, n);
  if (!f) throw std::invalid_argument("unknown family: " + name);
  return *f;
}

std::vector<Transformation> gens_for(const std::string& name, int n) {
  auto f = family_or_throw(name, n);
  GenFamily gf;
  switch (f.tag) {
    case FamilyTag::Gamma: gf = GenFamily::GammaGroup; break;
    case FamilyTag::Delta: gf = GenFamily::DeltaMonoid; break;
    case FamilyTag::Sigma: gf = GenFamily::SigmaMonoid; break;
    case FamilyTag::GammaOplus: gf = GenFamily::GammaOplus; break;
    case FamilyTag::Bn: gf = GenFamily::Bn; break;
    case FamilyTag::BnPrime: gf = GenFamily::BnPrime; break;
    default:
      throw std::invalid_argument("no published generating set for " + f.str());
  }
  return generating_set({gf, f.n, f.m});
}

}  // namespace

PYBIND11_MODULE(_evenres, m) {
  m.doc() = "even-restriction transformation families";
  register_engine_oracle();

  py::class_<Transformation>(m, "Transformation")
      .def(py::init([](const std::vector<int>& img) { return tf_vec(img); }))
      .def_static("identity", &Transformation::identity)
      .def("apply", &Transformation::apply)
      .def_property_readonly("degree", &Transformation::degree)
      .def_property_readonly("rank", &Transformation::rank)
      .def_property_readonly("is_permutation", &Transformation::is_permutation)
      .def_property_readonly("images", &Transformation::images)
      .def("__mul__",
           [](const Transformation& a, const Transformation& b) { return a * b; })
      .def("__eq__",
           [](const Transformation& a, const Transformation& b) { return a == b; })
      .def("__hash__", [](const Transformation& a) { return pack(a); })
      .def("__repr__", [](const Transformation& a) { return a.str(); })
      .def("cycles", [](const Transformation& a) { return format_cycles(a); });

  m.def("parse", [](const std::string& s, int n) {
    return parse_transformation(s, n);
  }, py::arg("text"), py::arg("n") = 0);

  m.def("contains", [](const std::string& family, int n,
                       const Transformation& a) {
    return contains(family_or_throw(family, n), a);
  });
  m.def("oracle_contains", [](const std::string& family, int n,
                              const Transformation& a) {
    return oracle_contains(family_or_throw(family, n), a);
  });
  m.def("explain", [](const std::string& family, int n,
                      const Transformation& a) {
    return explain_membership(family_or_throw(family, n), a);
  });

  m.def("card", [](const std::string& family, int n) {
    return card(family_or_throw(family, n)).str();
  });
  m.def("table", [](int max_n) {
    py::list rows;
    for (const auto& r : table(max_n)) {
      py::dict d;
      d["n"] = r.n;
      d["gamma"] = r.gamma.str();
      d["sym"] = r.sym.str();
      d["delta"] = r.delta.str();
      d["sigma"] = r.sigma.str();
      d["total"] = r.full_t.str();
      rows.append(d);
    }
    return rows;
  });

  m.def("generating_set", &gens_for);
  m.def("named", [](const std::string& name) {
    auto e = parse_named(name);
    if (!e) throw std::invalid_argument("unknown element: " + name);
    return build(*e);
  });

  py::class_<EnumeratedMonoid>(m, "Monoid")
      .def_property_readonly("degree", &EnumeratedMonoid::degree)
      .def("__len__", &EnumeratedMonoid::size)
      .def("__contains__", &EnumeratedMonoid::contains)
      .def("element", &EnumeratedMonoid::element)
      .def("factor", [](const EnumeratedMonoid& M, const Transformation& a) {
        return factor_word(M, a);
      });

  m.def("closure", [](int n, const std::vector<Transformation>& gens,
                      long long budget) {
    return closure(n, gens, {budget, 1});
  }, py::arg("n"), py::arg("gens"), py::arg("budget") = 20'000'000LL);
  m.def("enumerate_family", [](const std::string& family, int n,
                               long long budget) {
    return closure(n, gens_for(family, n), {budget, 1});
  }, py::arg("family"), py::arg("n"), py::arg("budget") = 20'000'000LL);

  m.def("kernel_orbit_count",
        [](int n) { return kernel_orbit_count(n).orbit_count; });
}
