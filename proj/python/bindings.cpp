#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "coxdim/json_io.hpp"
#include "coxdim/version.hpp"

namespace py = pybind11;
using namespace coxdim;

namespace {

py::object json_to_py(const Json& j) {
    switch (j.type()) {
        case Json::value_t::null:
            return py::none();
        case Json::value_t::boolean:
            return py::bool_(j.get<bool>());
        case Json::value_t::number_integer:
            return py::int_(j.get<long long>());
        case Json::value_t::number_unsigned:
            return py::int_(j.get<unsigned long long>());
        case Json::value_t::number_float:
            return py::float_(j.get<double>());
        case Json::value_t::string:
            return py::str(j.get<std::string>());
        case Json::value_t::array: {
            py::list out;
            for (const auto& item : j) out.append(json_to_py(item));
            return out;
        }
        case Json::value_t::object: {
            py::dict out;
            for (const auto& [key, value] : j.items())
                out[py::str(key)] = json_to_py(value);
            return out;
        }
        default:
            return py::none();
    }
}

py::int_ integer_to_py(const Integer& v) {
    const std::string s = v.str();
    PyObject* obj = PyLong_FromString(s.c_str(), nullptr, 10);
    if (obj == nullptr) throw py::error_already_set();
    return py::reinterpret_steal<py::int_>(obj);
}

Integer py_to_integer(const py::int_& v) {
    const py::str text(static_cast<py::handle>(v));
    return Integer(static_cast<std::string>(text));
}

FgAbelianGroup group_from_py(int rank, const std::vector<py::int_>& torsion) {
    std::vector<Integer> factors;
    for (const auto& t : torsion) factors.push_back(py_to_integer(t));
    return from_cyclic_moduli(rank, std::move(factors));
}

std::vector<FactorProfile> profiles_from_py(const py::list& items) {
    std::vector<FactorProfile> out;
    for (const auto& item : items) {
        const py::dict d = item.cast<py::dict>();
        FactorProfile prof;
        prof.top_dimension = d["d"].cast<int>();
        prof.top_group = cyclic(py_to_integer(d["exponent"].cast<py::int_>()));
        prof.multiplicity = d.contains("mult") ? d["mult"].cast<int>() : 1;
        out.push_back(std::move(prof));
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_coxdim, m) {
    m.doc() = "simplicial cohomology and dimension bounds toolkit";
    m.attr("__version__") = kVersion;

    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<BuildError>(m, "BuildError", PyExc_RuntimeError);

    py::class_<Graph>(m, "Graph")
        .def(py::init([](const std::vector<std::string>& vertices,
                         const std::vector<std::pair<std::string, std::string>>& edges) {
                 return Graph::from_names(vertices, edges);
             }),
             py::arg("vertices"), py::arg("edges"))
        .def_property_readonly("vertices", &Graph::vertex_names)
        .def_property_readonly("edges",
                               [](const Graph& g) {
                                   std::vector<std::pair<std::string, std::string>> out;
                                   for (const auto& [a, b] : g.edges())
                                       out.emplace_back(g.vertex_names()[a],
                                                        g.vertex_names()[b]);
                                   return out;
                               })
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; });

    py::class_<SimplicialComplex>(m, "SimplicialComplex")
        .def(py::init([](const std::vector<std::vector<std::string>>& faces) {
                 return SimplicialComplex::from_maximal_faces(faces);
             }),
             py::arg("maximal_faces"))
        .def_property_readonly("vertices", &SimplicialComplex::vertex_names)
        .def_property_readonly("dim", &SimplicialComplex::dim)
        .def_property_readonly("maximal_faces",
                               [](const SimplicialComplex& k) {
                                   std::vector<std::vector<std::string>> out;
                                   for (const auto& f : k.maximal_faces())
                                       out.push_back(k.face_names(f));
                                   return out;
                               })
        .def("faces",
             [](const SimplicialComplex& k, int d) {
                 std::vector<std::vector<std::string>> out;
                 for (const auto& f : k.faces(d)) out.push_back(k.face_names(f));
                 return out;
             },
             py::arg("dim"))
        .def("face_count", &SimplicialComplex::face_count)
        .def("__eq__", [](const SimplicialComplex& a, const SimplicialComplex& b) {
            return a == b;
        });

    py::class_<FgAbelianGroup>(m, "FgAbelianGroup")
        .def(py::init(&group_from_py), py::arg("rank") = 0,
             py::arg("torsion") = std::vector<py::int_>{})
        .def_readonly("rank", &FgAbelianGroup::rank)
        .def_property_readonly("torsion",
                               [](const FgAbelianGroup& g) {
                                   py::list out;
                                   for (const auto& d : g.torsion)
                                       out.append(integer_to_py(d));
                                   return out;
                               })
        .def("is_trivial", &FgAbelianGroup::is_trivial)
        .def("__str__", &FgAbelianGroup::to_string)
        .def("__repr__", &FgAbelianGroup::to_string)
        .def("__eq__", [](const FgAbelianGroup& a, const FgAbelianGroup& b) {
            return a == b;
        });

    // simplicial-core operations
    m.def("flag_complex", &flag_complex, py::arg("graph"));
    m.def("one_skeleton", &one_skeleton, py::arg("complex"));
    m.def("is_flag", &is_flag, py::arg("complex"));
    m.def("full_subcomplex", &full_subcomplex, py::arg("complex"), py::arg("vertices"));
    m.def("cone", &cone, py::arg("complex"), py::arg("apex"));
    m.def("connected_components",
          [](const SimplicialComplex& k) { return connected_components(k); },
          py::arg("complex"));
    m.def("barycentric_subdivision",
          [](const SimplicialComplex& k) {
              Subdivision sd = barycentric_subdivision(k);
              return py::make_tuple(sd.complex, sd.provenance);
          },
          py::arg("complex"));

    // homology-engine
    m.def("smith_normal_form",
          [](int rows, int cols,
             const std::vector<std::tuple<int, int, py::int_>>& entries) {
              IntegerMatrix mat(rows, cols);
              for (const auto& [r, c, v] : entries) mat.add(r, c, py_to_integer(v));
              const SnfResult snf = smith_normal_form(mat);
              py::list divisors;
              for (const auto& d : snf.divisors) divisors.append(integer_to_py(d));
              py::dict out;
              out["divisors"] = divisors;
              out["rank"] = snf.rank;
              return out;
          },
          py::arg("rows"), py::arg("cols"), py::arg("entries"));
    m.def("cohomology", &cohomology, py::arg("complex"), py::arg("degree"),
          py::arg("reduced") = false);
    m.def("relative_cohomology", &relative_cohomology, py::arg("complex"),
          py::arg("subcomplex"), py::arg("degree"));

    // racg-analyzer
    m.def("check_hyperbolic", &check_hyperbolic, py::arg("graph"));
    m.def("check_one_ended", &check_one_ended, py::arg("complex"));
    m.def("check_no_dominating_vertex", &check_no_dominating_vertex, py::arg("graph"));
    m.def("check_star_complements", &check_star_complements, py::arg("graph"));
    m.def("check_maximal_cover", &check_maximal_cover, py::arg("complex"));
    m.def("vcd_davis", &vcd_davis, py::arg("complex"), py::arg("scan_limit") = 20000);
    m.def("racg_certificate",
          [](const SimplicialComplex& l) {
              return json_to_py(certificate_to_json(rigidity_certificate(l)));
          },
          py::arg("complex"));

    // gp-constructor
    m.def("gp_verify",
          [](int p, int subdivisions, const std::string& builder) {
              const LBuilder b =
                  builder == "barycentric" ? LBuilder::Barycentric : LBuilder::Ring;
              return json_to_py(gp_report_to_json(verify_gp(p, subdivisions, b)));
          },
          py::arg("p"), py::arg("subdivisions") = 3, py::arg("builder") = "ring");
    m.def("gp_build_l",
          [](int p, int subdivisions) { return build_L(p, subdivisions).l.complex; },
          py::arg("p"), py::arg("subdivisions") = 3,
          "L as the k-fold barycentric subdivision of Z");
    m.def("gp_build_l_flag_no_square",
          [](int p, int rings, int circle) {
              return build_L_flag_no_square(p, rings, circle).complex;
          },
          py::arg("p"), py::arg("rings") = 3, py::arg("circle_length") = 6);

    // product-bounds
    m.def("tensor", &tensor, py::arg("a"), py::arg("b"));
    m.def("tor1", &tor1, py::arg("a"), py::arg("b"));
    m.def("product_bounds",
          [](const py::list& profiles) {
              return json_to_py(
                  product_report_to_json(product_dimension_report(profiles_from_py(profiles))));
          },
          py::arg("profiles"));
    m.def("free_product_gd", &free_product_gd, py::arg("dimensions"));

    // spine-enumerator
    m.def("spine_enumerate",
          [](int r) {
              py::list out;
              for (const auto& t : enumerate_trees(r)) out.append(json_to_py(tree_to_json(t)));
              return out;
          },
          py::arg("r"));
    m.def("spine_verify",
          [](int r) { return json_to_py(stab_report_to_json(verify_stab_bound(r))); },
          py::arg("r"));
    m.def("spine_bounds",
          [](int r) { return json_to_py(out_bounds_to_json(out_dimension_bounds(r))); },
          py::arg("r"));
    m.def("aut_bounds",
          [](int factors) {
              return json_to_py(aut_bounds_to_json(aut_dimension_bounds(factors)));
          },
          py::arg("factors"));

    m.def("set_threads", &set_thread_budget, py::arg("n"));
}
