#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <mutex>
#include <sstream>

#include <json.hpp>

#include "mhall/bmodule.hpp"
#include "mhall/catalog.hpp"
#include "mhall/category.hpp"
#include "mhall/hall.hpp"
#include "mhall/io.hpp"
#include "mhall/kth.hpp"
#include "mhall/minor_hopf.hpp"

namespace py = pybind11;
using namespace mhall;

namespace {

const Catalog& shared_catalog(int bound) {
  static std::mutex mu;
  static std::map<int, Catalog> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(bound);
  if (it == cache.end()) {
    it = cache.emplace(bound, Catalog::build(bound, EnumerateOptions{bound, bound >= 6})).first;
  }
  return it->second;
}

py::object fraction(const Coeff& c) {
  static py::object ctor = py::module_::import("fractions").attr("Fraction");
  return ctor(c.numerator(), c.denominator());
}

py::dict lin_to_dict(const IsoLin& f) {
  py::dict out;
  for (const auto& [c, x] : f.terms()) out[py::str(canon_hex(c))] = fraction(x);
  return out;
}

py::dict tensor_to_dict(const TensorLin& t) {
  py::dict out;
  for (const auto& [pair, x] : t) {
    out[py::make_tuple(canon_hex(pair.first), canon_hex(pair.second))] = fraction(x);
  }
  return out;
}

Mask mask_from_labels(const PointedMatroid& m, const std::vector<std::string>& labels) {
  return m.ground().mask_of(labels);
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
  mod.doc() = "Pointed matroids, strong maps, and their Hall-algebra structure";

  py::register_exception<ValidationError>(mod, "MatroidValidationError", PyExc_ValueError);
  py::register_exception<ParseError>(mod, "MatroidParseError", PyExc_ValueError);

  py::class_<PointedMatroid>(mod, "Matroid")
      .def_static(
          "from_flats",
          [](const std::vector<std::string>& labels,
             const std::vector<std::vector<std::string>>& flats) {
            GroundSet ground{labels};
            std::vector<Mask> masks;
            for (const auto& f : flats) masks.push_back(ground.mask_of(f));
            return PointedMatroid::from_flats(std::move(ground), std::move(masks));
          },
          py::arg("labels"), py::arg("flats"))
      .def_static(
          "from_bases",
          [](const std::vector<std::string>& labels,
             const std::vector<std::vector<std::string>>& bases) {
            GroundSet ground{labels};
            std::vector<Mask> masks;
            for (const auto& b : bases) masks.push_back(ground.mask_of(b));
            return from_bases(ground, masks);
          },
          py::arg("labels"), py::arg("bases"))
      .def_static(
          "from_graph",
          [](const std::vector<std::string>& vertices,
             const std::vector<std::tuple<std::string, std::string, std::string>>& edges,
             const std::string& loop) {
            Graph g;
            g.vertices = vertices;
            for (const auto& [name, from, to] : edges) g.edges.push_back({name, from, to});
            g.distinguished_loop = loop;
            return from_graph(g);
          },
          py::arg("vertices"), py::arg("edges"), py::arg("loop"))
      .def_static("uniform", &uniform, py::arg("r"), py::arg("n"))
      .def_static("free", [](int n) { return free_matroid(GroundSet::numbered(n)); }, py::arg("n"))
      .def_static("zero", &zero_matroid)
      .def_static("fixture", &fixture, py::arg("name"))
      .def_static("from_json", [](const std::string& text) {
        return matroid_from_json(nlohmann::json::parse(text));
      })
      .def_property_readonly("labels",
                             [](const PointedMatroid& m) { return m.ground().labels(); })
      .def_property_readonly("degree", &PointedMatroid::degree)
      .def_property_readonly("rank", [](const PointedMatroid& m) { return m.rank(); })
      .def_property_readonly("flats",
                             [](const PointedMatroid& m) {
                               std::vector<std::vector<std::string>> out;
                               for (Mask f : m.flats()) out.push_back(m.ground().labels_of(f));
                               return out;
                             })
      .def("closure",
           [](const PointedMatroid& m, const std::vector<std::string>& s) {
             return m.ground().labels_of(m.closure(mask_from_labels(m, s)));
           })
      .def("rank_of",
           [](const PointedMatroid& m, const std::vector<std::string>& s) {
             return m.rank_of(mask_from_labels(m, s));
           })
      .def("cocircuits",
           [](const PointedMatroid& m) {
             std::vector<std::vector<std::string>> out;
             for (Mask c : m.cocircuits()) out.push_back(m.ground().labels_of(c));
             return out;
           })
      .def("restrict",
           [](const PointedMatroid& m, const std::vector<std::string>& s) {
             return m.restrict_to(mask_from_labels(m, s));
           })
      .def("contract",
           [](const PointedMatroid& m, const std::vector<std::string>& s) {
             return m.contract_by(mask_from_labels(m, s));
           })
      .def("components", [](const PointedMatroid& m) { return components(m); })
      .def("canon", [](const PointedMatroid& m) { return canon_hex(canonical_form(m)); })
      .def("is_isomorphic",
           [](const PointedMatroid& m, const PointedMatroid& n) {
             return canonical_form(m) == canonical_form(n);
           })
      .def("iso_witness",
           [](const PointedMatroid& m, const PointedMatroid& n) -> py::object {
             auto witness = find_isomorphism(m, n);
             if (!witness) return py::none();
             py::dict out;
             for (int i = 0; i < m.ground().size(); ++i) {
               out[py::str(m.ground().label(i))] = n.ground().label((*witness)[i]);
             }
             return out;
           })
      .def("k0",
           [](const PointedMatroid& m) {
             K0Class k = k0_class(m);
             return py::make_tuple(k.rank, k.corank);
           })
      .def("decompose", [](const PointedMatroid& m) { return decompose(m); })
      .def("to_json", [](const PointedMatroid& m) { return matroid_to_json(m).dump(); })
      .def("__add__", &direct_sum)
      .def("__eq__", [](const PointedMatroid& m, const PointedMatroid& n) { return m == n; })
      .def("__repr__", [](const PointedMatroid& m) {
        return "<Matroid degree=" + std::to_string(m.degree()) +
               " rank=" + std::to_string(m.rank()) + " canon=" + canon_hex(canonical_form(m)) +
               ">";
      });

  mod.def(
      "enumerate_classes",
      [](int n) {
        std::vector<std::string> out;
        for (const IsoClass& c : enumerate_matroids(n, EnumerateOptions{std::max(n, 6), n >= 7})) {
          out.push_back(canon_hex(c));
        }
        return out;
      },
      py::arg("n"));
  mod.def("matroid_of", [](const std::string& hex) { return matroid_of(parse_canon_hex(hex)); });

  mod.def(
      "structure_constant",
      [](const PointedMatroid& a, const PointedMatroid& c, const PointedMatroid& b) {
        return structure_constant(canonical_form(a), canonical_form(c), canonical_form(b));
      },
      py::arg("a"), py::arg("c"), py::arg("b"));
  mod.def(
      "hall_product",
      [](const PointedMatroid& a, const PointedMatroid& b) {
        int needed = a.degree() + b.degree();
        return lin_to_dict(hall_product(delta(a), delta(b), shared_catalog(needed)));
      },
      py::arg("a"), py::arg("b"));
  mod.def("hall_coproduct",
          [](const PointedMatroid& m) { return tensor_to_dict(hall_coproduct(delta(m))); });
  mod.def("mm_coproduct",
          [](const PointedMatroid& m) { return tensor_to_dict(mm_coproduct(delta(m))); });
  mod.def("antipode",
          [](const PointedMatroid& m) { return lin_to_dict(antipode(canonical_form(m))); });
  mod.def("duality_check", [](const PointedMatroid& m) {
    IsoClass c = canonical_form(m);
    return duality_check(c, shared_catalog(c.degree));
  });
  mod.def("is_graphic", [](const PointedMatroid& m) { return is_graphic(canonical_form(m)); });
  mod.def(
      "flag_count",
      [](const PointedMatroid& m, int n) { return flags(m, n).size(); },
      py::arg("matroid"), py::arg("n"));
  mod.def(
      "check_flag_grids",
      [](const PointedMatroid& m, int n) {
        for (const FlagGrid& f : flags(m, n)) {
          if (!check_grid(f)) return false;
        }
        return true;
      },
      py::arg("matroid"), py::arg("n"));
  mod.def(
      "verify_axioms",
      [](int max_degree) {
        std::vector<PointedMatroid> matroids;
        const Catalog& cat = shared_catalog(max_degree);
        for (int d = 0; d <= max_degree; ++d) {
          for (const IsoClass& c : cat.at_degree(d)) matroids.push_back(matroid_of(c));
        }
        ProtoExactReport rep = verify_proto_exact(matroids);
        py::dict out;
        for (int k = 1; k <= 5; ++k) {
          out[py::str("prop" + std::to_string(k))] =
              py::make_tuple(rep.property[k].instances, rep.property[k].failures);
        }
        out["ok"] = rep.ok();
        return out;
      },
      py::arg("max_degree"));
  mod.def(
      "is_strong_map",
      [](const PointedMatroid& source, const PointedMatroid& target,
         const std::map<std::string, std::string>& mapping) {
        std::vector<int> map(source.ground().size(), -1);
        for (const auto& [from, to] : mapping) {
          auto i = source.ground().index_of(from);
          auto j = target.ground().index_of(to);
          if (!i || !j) throw ParseError("unknown label in map");
          map[*i] = *j;
        }
        for (int v : map) {
          if (v < 0) throw ParseError("map is not total on the source ground set");
        }
        return is_strong(source, target, map);
      },
      py::arg("source"), py::arg("target"), py::arg("map"));
}
