#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rw/catalog.hpp"
#include "rw/json_io.hpp"
#include "rw/ramsey.hpp"
#include "rw/verify.hpp"

namespace py = pybind11;

namespace {

// Named-object store backing the python-facing operations. Structured
// results cross the boundary as JSON strings.
struct CatalogHandle {
  rw::Catalog cat;

  explicit CatalogHandle(const std::string& dir) : cat(rw::load_catalog(dir)) {}

  template <typename M>
  static std::vector<std::string> names(const M& m) {
    std::vector<std::string> out;
    for (const auto& [k, v] : m) out.push_back(k);
    return out;
  }

  const rw::OrderedAlgebra& ordered(const std::string& name) const {
    auto it = cat.ordered.find(name);
    if (it == cat.ordered.end()) throw std::invalid_argument("no ordered algebra " + name);
    return it->second;
  }

  const rw::FiniteAlgebra& algebra(const std::string& name) const {
    auto it = cat.algebras.find(name);
    if (it == cat.algebras.end()) throw std::invalid_argument("no algebra " + name);
    return it->second;
  }

  const rw::Variety& variety(const std::string& name) const {
    auto it = cat.varieties.find(name);
    if (it == cat.varieties.end()) throw std::invalid_argument("no variety " + name);
    return it->second;
  }

  int free_size(const std::string& v, int n) const {
    return rw::free_algebra(variety(v), n).algebra().size();
  }

  std::vector<std::string> ordered_free_min_terms(const std::string& v, int n) const {
    const rw::Variety& var = variety(v);
    rw::OrderedFreeAlgebra of = rw::ordered_free(var, n);
    std::vector<std::string> out;
    for (int p = 0; p < of.size(); ++p)
      out.push_back(rw::render(of.min_term(of.ordered().at_position(p)), var.signature));
    return out;
  }

  std::vector<std::vector<int>> rigid_epis(const std::string& from,
                                           const std::string& to) const {
    std::vector<std::vector<int>> out;
    for (const rw::RigidEpimorphism& e : rw::rigid_epi_set(ordered(from), ordered(to)))
      out.push_back(e.map());
    return out;
  }

  std::string check_arrow(const std::string& category, const std::string& c,
                          const std::string& b, const std::string& a, int k, int t,
                          unsigned long long seed, long long budget) const {
    rw::ArrowOptions opts;
    opts.seed = seed;
    opts.budget = budget;
    rw::ArrowCertificate cert;
    if (category == "chains")
      cert = rw::check_arrow_chains(std::stoi(c), std::stoi(b), std::stoi(a), k, t, opts);
    else if (category == "ordered")
      cert = rw::check_arrow_ordered(ordered(c), ordered(b), ordered(a), k, t, opts);
    else if (category == "algebras")
      cert = rw::check_arrow_algebras(algebra(c), algebra(b), algebra(a), k, t, opts);
    else
      throw std::invalid_argument("unknown category " + category);
    return rw::to_json(cert).dump();
  }

  std::string transport(const std::string& v, int n, const std::string& a,
                        const std::string& b, int k, int t) const {
    rw::TransportCertificate tc =
        rw::transport_arrow(variety(v), n, ordered(a), ordered(b), k, t);
    return rw::to_json(tc).dump();
  }

  std::string segment_induction(const std::string& v, const std::string& a, int k,
                                const std::vector<int>& coloring, int n_free) const {
    rw::SegmentCertificate sc =
        rw::segment_induction(variety(v), ordered(a), k, coloring, n_free);
    return rw::to_json(sc).dump();
  }
};

}  // namespace

PYBIND11_MODULE(ramsey_workbench, m) {
  m.doc() = "finite workbench for rigid surjections, ordered free algebras, and dual "
            "partition arrows";

  m.def("rigid_surjections",
        [](int n, int k) {
          std::vector<std::vector<int>> out;
          for (const rw::ChainMap& f : rw::enumerate_rigid_surjections(n, k))
            out.push_back(f.table);
          return out;
        },
        py::arg("n"), py::arg("k"), "all rigid surjections n -> k in table order");

  m.def("is_rigid_surjection",
        [](const std::vector<int>& table, int k) {
          return rw::is_rigid_surjection(
              rw::ChainMap(static_cast<int>(table.size()), k, table));
        },
        py::arg("table"), py::arg("k"));

  m.def("induced_order",
        [](const std::vector<int>& table, int k) {
          return rw::induced_order(rw::ChainMap(static_cast<int>(table.size()), k, table));
        },
        py::arg("table"), py::arg("k"),
        "unique codomain order making the surjection rigid");

  m.def("neat_terms",
        [](const std::string& signature_json, int n_vars, int max_len) {
          rw::Signature sig = rw::signature_from_json(rw::json::parse(signature_json));
          std::vector<std::string> out;
          for (const rw::Term& t : rw::enumerate_neat(sig, n_vars, max_len))
            out.push_back(rw::render(t, sig));
          return out;
        },
        py::arg("signature_json"), py::arg("n_vars"), py::arg("max_len"),
        "rendered terms in neat order up to the shape-length truncation");

  m.def("check_arrow_chains",
        [](int c, int b, int a, int k, int t, unsigned long long seed, long long budget) {
          rw::ArrowOptions opts;
          opts.seed = seed;
          opts.budget = budget;
          return rw::to_json(rw::check_arrow_chains(c, b, a, k, t, opts)).dump();
        },
        py::arg("c"), py::arg("b"), py::arg("a"), py::arg("k"), py::arg("t"),
        py::arg("seed") = 1, py::arg("budget") = 2000000,
        "certificate JSON for the chain arrow c <- (b)^a_{k,t}");

  m.def("gr_search",
        [](int a, int b, int k, int max_n) -> py::object {
          auto found = rw::gr_witness_search(a, b, k, max_n);
          if (!found) return py::none();
          return py::make_tuple(found->first, rw::to_json(found->second).dump());
        },
        py::arg("a"), py::arg("b"), py::arg("k"), py::arg("max_n") = 6,
        "least chain size carrying the arrow at t=1, with its certificate JSON");

  m.def("verify_suite",
        [](const std::string& scope) {
          std::vector<std::tuple<std::string, bool, std::string>> out;
          for (const rw::CheckResult& r : rw::run_verify_suite(scope))
            out.emplace_back(r.name, r.pass, r.detail);
          return out;
        },
        py::arg("scope") = "all", "replay the structural laws; (name, pass, detail) rows");

  py::class_<CatalogHandle>(m, "Catalog")
      .def(py::init<const std::string&>(), py::arg("directory"))
      .def("signature_names",
           [](const CatalogHandle& h) { return CatalogHandle::names(h.cat.signatures); })
      .def("algebra_names",
           [](const CatalogHandle& h) { return CatalogHandle::names(h.cat.algebras); })
      .def("ordered_names",
           [](const CatalogHandle& h) { return CatalogHandle::names(h.cat.ordered); })
      .def("variety_names",
           [](const CatalogHandle& h) { return CatalogHandle::names(h.cat.varieties); })
      .def("free_size", &CatalogHandle::free_size, py::arg("variety"), py::arg("n"))
      .def("ordered_free_min_terms", &CatalogHandle::ordered_free_min_terms,
           py::arg("variety"), py::arg("n"),
           "minimal terms of the ordered free algebra, in carrier order")
      .def("rigid_epis", &CatalogHandle::rigid_epis, py::arg("from_ordered"),
           py::arg("to_ordered"), "carrier maps of all rigid epimorphisms")
      .def("check_arrow", &CatalogHandle::check_arrow, py::arg("category"), py::arg("c"),
           py::arg("b"), py::arg("a"), py::arg("k"), py::arg("t"), py::arg("seed") = 1,
           py::arg("budget") = 2000000, "certificate JSON for the arrow c <- (b)^a_{k,t}")
      .def("transport", &CatalogHandle::transport, py::arg("variety"), py::arg("n"),
           py::arg("a"), py::arg("b"), py::arg("k"), py::arg("t"),
           "transport certificate JSON at the rank-n free algebra")
      .def("segment_induction", &CatalogHandle::segment_induction, py::arg("variety"),
           py::arg("a"), py::arg("k"), py::arg("coloring"), py::arg("n_free"),
           "segment certificate JSON for one coloring");
}
