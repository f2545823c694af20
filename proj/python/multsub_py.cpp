#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <numbers>

#include "multsub/constants.hpp"
#include "multsub/ekstats.hpp"
#include "multsub/errors.hpp"
#include "multsub/extremal.hpp"
#include "multsub/multgroup.hpp"
#include "multsub/partitions.hpp"
#include "multsub/pgroup.hpp"
#include "multsub/polyops.hpp"
#include "multsub/sieve.hpp"

namespace py = pybind11;
using namespace multsub;

namespace {

// Exact counts cross as Python ints; mpz -> decimal -> int keeps arbitrary size.
py::int_ to_py(const mpz_class& v) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(v.get_str().c_str(), nullptr, 10));
}

py::object to_fraction(const mpq_class& v) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(to_py(v.get_num()), to_py(v.get_den()));
}

Partition as_partition(const std::vector<unsigned>& parts) { return Partition(parts); }

std::vector<unsigned> as_list(const Partition& p) { return {p.parts().begin(), p.parts().end()}; }

Which parse_which(const std::string& s) {
  if (s == "G") return Which::G;
  if (s == "I") return Which::I;
  throw multsub::invalid_argument("which must be 'G' or 'I'");
}

py::dict record_dict(const ExtremalRecord& r) {
  py::dict d;
  d["n"] = py::int_(py::str(r.n));
  d["which"] = r.which == Which::G ? "G" : "I";
  d["value"] = r.value;
  d["normalized"] = r.normalized;
  d["provenance"] = r.provenance == Provenance::scan ? "scan" : "construction";
  return d;
}

py::dict estimate_dict(const ConstantEstimate& e) {
  py::dict d;
  d["value"] = e.value;
  d["prime_limit"] = e.prime_limit;
  d["tail_bound"] = e.tail_bound;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Subgroup counts of the unit group mod n, exact and statistical";

  py::register_exception<multsub::error>(m, "Error", PyExc_RuntimeError);

  // partitions
  m.def("conjugate", [](const std::vector<unsigned>& p) { return as_list(conjugate(as_partition(p))); });
  m.def("is_subpartition", [](const std::vector<unsigned>& b, const std::vector<unsigned>& a) {
    return is_subpartition(as_partition(b), as_partition(a));
  });
  m.def("enumerate_subpartitions", [](const std::vector<unsigned>& a, unsigned cap) {
    std::vector<std::vector<unsigned>> out;
    for (const auto& b : enumerate_subpartitions(as_partition(a), cap)) out.push_back(as_list(b));
    return out;
  }, py::arg("alpha"), py::arg("cap") = kDefaultEnumerationCap);
  m.def("count_subpartitions", [](const std::vector<unsigned>& a) {
    return to_py(count_subpartitions(as_partition(a)));
  });

  // pgroup
  m.def("gaussian_binomial", [](unsigned k, int l, std::uint64_t p) {
    return to_py(gaussian_binomial(k, l, p));
  });
  m.def("subgroup_count_of_type", [](std::uint64_t p, const std::vector<unsigned>& a,
                                     const std::vector<unsigned>& b) {
    return to_py(subgroup_count_of_type(PGroupType(p, as_partition(a)), as_partition(b)));
  });
  m.def("subgroup_count", [](std::uint64_t p, const std::vector<unsigned>& a) {
    return to_py(subgroup_count(PGroupType(p, as_partition(a))));
  });

  // multgroup
  m.def("factorize", [](std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, unsigned>> out;
    for (const auto& pe : factorize(n).factors) out.emplace_back(pe.prime, pe.exponent);
    return out;
  });
  m.def("omega_q", py::overload_cast<std::uint64_t, std::uint64_t>(&omega_q));
  m.def("omega_bar", py::overload_cast<std::uint64_t, std::uint64_t, unsigned>(&omega_bar));
  m.def("lambda_p", py::overload_cast<std::uint64_t, std::uint64_t>(&lambda_p));
  m.def("sylow_partition", [](std::uint64_t n, std::uint64_t p) { return as_list(sylow_partition(n, p)); });
  m.def("sylow_decomposition", [](std::uint64_t n) {
    std::map<std::uint64_t, std::vector<unsigned>> out;
    for (const auto& [p, a] : sylow_decomposition(factorize(n))) out[p] = as_list(a);
    return out;
  });
  m.def("count_subgroups", [](std::uint64_t n) { return to_py(count_subgroups(n)); });
  m.def("count_subgroup_isoclasses", [](std::uint64_t n) { return to_py(count_subgroup_isoclasses(n)); });
  m.def("enumerate_subgroups_oracle", &enumerate_subgroups_oracle, py::arg("n"),
        py::arg("cap") = kDefaultOracleCap);
  m.def("classify_isoclasses_oracle", &classify_isoclasses_oracle, py::arg("n"),
        py::arg("cap") = kDefaultOracleCap);

  // sieve
  py::class_<FunctionTable>(m, "FunctionTable")
      .def_static("build", [](std::uint32_t N) { return FunctionTable::build(N); }, py::arg("N"))
      .def_property_readonly("bound", &FunctionTable::bound)
      .def("totient", &FunctionTable::totient)
      .def("omega_phi", &FunctionTable::omega_phi)
      .def("bigomega_phi", &FunctionTable::bigomega_phi)
      .def("smallest_prime_factor", &FunctionTable::smallest_prime_factor);
  m.def("primes_up_to", &primes_up_to);

  // ekstats
  auto additive = [](const std::string& name) {
    if (name == "omega_0") return AdditiveFunctionId::omega0();
    if (name.rfind("omega_", 0) == 0) return AdditiveFunctionId::omega(std::stoull(name.substr(6)));
    throw multsub::invalid_argument("additive function must be 'omega_0' or 'omega_<q>'");
  };
  m.def("mu", [additive](const std::string& f, double x) { return mu(additive(f), x); });
  m.def("F", [additive](const std::string& g, std::uint64_t a, double x) { return F(additive(g), a, x); });
  m.def("H", [](std::uint64_t n) { return to_fraction(H(n)); });
  m.def("covariance", [additive](const std::string& a, const std::string& b, double z) {
    return covariance(additive(a), additive(b), z);
  });
  m.def("truncation_parameter", &truncation_parameter);
  m.def("P_n", &P_n, py::arg("n"), py::arg("x"), py::arg("table"));
  m.def("D", &D, py::arg("x"), py::arg("table"));
  m.def("moments", [](const std::vector<unsigned>& hs, double x, const FunctionTable& t, double C) {
    std::vector<py::dict> out;
    for (const auto& r : moments(hs, x, t, C, 1)) {
      py::dict d;
      d["h"] = r.h;
      d["x"] = r.x;
      d["M_h"] = r.value;
      d["normalized"] = r.normalized;
      out.push_back(d);
    }
    return out;
  }, py::arg("orders"), py::arg("x"), py::arg("table"), py::arg("C"));
  m.def("distribution_report", [](double x, const std::string& which, const FunctionTable& t,
                                  double A, double C) {
    const auto r = distribution_report(x, parse_which(which), t, A, C, nullptr, 1);
    py::dict d;
    d["x"] = r.x;
    d["which"] = which;
    d["sample_count"] = r.sample_count;
    d["empirical_moments"] = r.empirical_moments;
    d["ks_distance"] = r.ks_distance;
    d["normalization"] = py::make_tuple(r.mean_coefficient, r.variance_coefficient);
    return d;
  }, py::arg("x"), py::arg("which"), py::arg("table"), py::arg("A") = 0.0, py::arg("C") = 1.0);
  m.def("ks_distance", &ks_distance);

  // polyops
  m.def("s_h", [](unsigned h) { return to_fraction(s_h(h)); });
  m.def("two_to_one_maps", [](unsigned k) {
    std::vector<std::vector<unsigned>> out;
    for (const auto& t : enumerate_two_to_one(k)) out.push_back(t.images);
    return out;
  });
  m.def("psi", [](const std::vector<unsigned>& sigma) { return psi(sigma).images; });

  // constants
  m.def("compute_A0", [](std::uint64_t P) { return estimate_dict(compute_A0(P)); });
  m.def("compute_B", [](std::uint64_t P) {
    const auto b = compute_B(P);
    py::dict d = estimate_dict(b.derived);
    d["corrected_closed_form"] = b.corrected_closed_form;
    d["printed_closed_form"] = b.printed_closed_form;
    return d;
  });
  m.def("compute_C", [](std::uint64_t P) { return estimate_dict(compute_C(P)); });
  m.attr("LOG2") = std::numbers::ln2;

  // extremal
  m.def("scan_max", [](std::uint32_t N, const std::string& which, const FunctionTable& t) {
    return record_dict(scan_max(N, parse_which(which), t, 1));
  });
  m.def("construct_G_extremal", [](double x, double b) {
    const auto c = construct_G_extremal(x, b);
    py::dict d = record_dict(c.record);
    d["p"] = c.p;
    d["primes"] = c.primes;
    d["below_x"] = c.below_x;
    d["bound_holds"] = c.bound_holds;
    return d;
  }, py::arg("x"), py::arg("bv_exponent") = 0.0);
  m.def("construct_I_extremal", [](double x) {
    const auto c = construct_I_extremal(x);
    py::dict d = record_dict(c.record);
    d["m"] = c.m;
    d["q"] = c.q;
    d["below_x"] = c.below_x;
    d["lower_bound_holds"] = c.lower_bound_holds;
    return d;
  }, py::arg("x"));
}
