#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "quiver3/classify.hpp"
#include "quiver3/hochschild.hpp"
#include "quiver3/orbits.hpp"
#include "quiver3/spectral.hpp"
#include "quiver3/verify.hpp"

namespace py = pybind11;
using namespace quiver3;

namespace {

// Arbitrary-precision values cross the boundary as native Python ints,
// converted through decimal strings.
Int to_int(const py::handle& obj) {
    return parse_int(py::str(obj).cast<std::string>());
}

py::object to_py(const Int& v) {
    PyObject* p = PyLong_FromString(to_string(v).c_str(), nullptr, 10);
    if (!p) throw py::error_already_set();
    return py::reinterpret_steal<py::object>(p);
}

Triple to_triple(const py::sequence& s) {
    if (py::len(s) != 3) throw py::value_error("triple needs exactly three entries");
    return Triple(to_int(s[0]), to_int(s[1]), to_int(s[2]));
}

py::tuple from_triple(const Triple& t) {
    return py::make_tuple(to_py(t.x), to_py(t.y), to_py(t.z));
}

py::list from_word(const GroupWord& w) {
    py::list out;
    for (Generator g : w) out.append(generator_name(g));
    return out;
}

GroupWord to_word(const py::sequence& s) {
    GroupWord w;
    for (py::handle h : s) w.push_back(generator_from_name(h.cast<std::string>()));
    return w;
}

py::dict from_classification(const Classification& c) {
    py::dict d;
    d["verdict"] = verdict_name(c.verdict);
    d["representative"] = from_triple(c.representative);
    d["witness"] = from_word(c.witness);
    d["constant"] = to_py(c.constant);
    return d;
}

py::list from_matrix(const Matrix3& m) {
    py::list rows;
    for (const auto& row : m) {
        py::list r;
        for (const Int& v : row) r.append(to_py(v));
        rows.append(r);
    }
    return rows;
}

AcyclicQuiver3 to_quiver(const py::handle& r, const py::handle& s, const py::handle& t) {
    return AcyclicQuiver3{to_int(r), to_int(s), to_int(t)};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Rank-3 quiver mutation: classification, orbits, spectra, Hochschild dimensions";

    m.def("mutate", [](const py::sequence& t, int i) { return from_triple(mutate(to_triple(t), i)); });
    m.def("permute", [](const py::sequence& t, const std::array<int, 3>& sigma) {
        return from_triple(permute(to_triple(t), sigma));
    });
    m.def("apply_word", [](const py::sequence& t, const py::sequence& w) {
        return from_triple(apply_word(to_triple(t), to_word(w)));
    });
    m.def("markov_constant", [](const py::sequence& t) { return to_py(markov_constant(to_triple(t))); });
    m.def("m_case", [](const py::sequence& t) { return m_case_name(m_case(to_triple(t))); });

    m.def("predicate_constant", [](const py::sequence& t) { return predicate_constant(to_triple(t)); });
    m.def("predicate_band", [](const py::sequence& t) { return predicate_band(to_triple(t)); });
    m.def("descend", [](const py::sequence& t) { return from_classification(descend(to_triple(t))); });
    m.def("fundamental_representative",
          [](const py::sequence& t) { return from_triple(fundamental_representative(to_triple(t))); });
    m.def("in_fundamental_domain",
          [](const py::sequence& t) { return in_fundamental_domain(to_triple(t)); });
    m.def("in_open_domain", [](const py::sequence& t) { return in_open_domain(to_triple(t)); });
    m.def("m_minus", [](double x, double y) { return m_minus(x, y); });
    m.def("m_plus", [](double x, double y) { return m_plus(x, y); });

    m.def("slice_classify", [](const py::handle& C, const py::handle& z) {
        return slice_kind_name(slice_classify(to_int(C), to_int(z)));
    });
    m.def(
        "singular_points",
        [](const py::handle& C, const std::string& field) {
            py::list out;
            Field f = field == "complex" ? Field::Complex : Field::Real;
            for (const Triple& t : singular_points(to_int(C), f)) out.append(from_triple(t));
            return out;
        },
        py::arg("constant"), py::arg("field") = "real");
    m.def("component_table", [](const py::handle& C) {
        ComponentTable t = component_table(to_int(C));
        return py::make_tuple(t.components, t.smooth_components, t.compact_components);
    });
    m.def("component_of", [](const std::array<double, 3>& p) {
        return component_label_name(component_of(p));
    });

    m.def(
        "enumerate_orbit",
        [](const py::sequence& seed, const py::handle& max_abs, std::size_t max_nodes) {
            OrbitGraph g = enumerate_orbit(to_triple(seed), to_int(max_abs), max_nodes);
            py::list nodes, edges;
            for (const Triple& t : g.nodes) nodes.append(from_triple(t));
            for (const OrbitGraph::Edge& e : g.edges)
                edges.append(py::make_tuple(from_triple(e.a), from_triple(e.b),
                                            generator_name(e.label)));
            py::dict d;
            d["nodes"] = nodes;
            d["edges"] = edges;
            d["truncated"] = g.truncated;
            return d;
        },
        py::arg("seed"), py::arg("max_abs") = 1000, py::arg("max_nodes") = 4096);
    m.def(
        "is_finite_orbit",
        [](const py::sequence& seed, std::size_t bound) {
            return finiteness_name(is_finite_orbit(to_triple(seed), bound));
        },
        py::arg("seed"), py::arg("safety_bound") = 4096);
    m.def(
        "summarize_orbit",
        [](const py::sequence& seed, const py::handle& max_abs, std::size_t max_nodes) {
            OrbitSummary s = summarize_orbit(to_triple(seed), to_int(max_abs), max_nodes);
            py::dict d;
            d["seed"] = from_triple(s.seed);
            d["representative"] = from_triple(s.representative);
            d["elements_found"] = s.elements_found;
            d["is_finite"] = finiteness_name(s.is_finite);
            d["bound"] = s.bound;
            d["constant"] = to_py(s.constant);
            d["verdict"] = verdict_name(s.verdict);
            d["truncated"] = s.truncated;
            return d;
        },
        py::arg("seed"), py::arg("max_abs") = 1000, py::arg("max_nodes") = 4096);
    m.def(
        "export_dot",
        [](const py::sequence& seed, const py::handle& max_abs, std::size_t max_nodes) {
            return export_dot(enumerate_orbit(to_triple(seed), to_int(max_abs), max_nodes));
        },
        py::arg("seed"), py::arg("max_abs") = 1000, py::arg("max_nodes") = 4096);
    m.def("cyclic_representatives", [](const py::handle& C) {
        CyclicReps r = cyclic_representatives(to_int(C));
        py::list reps;
        for (const Triple& t : r.reps) reps.append(from_triple(t));
        py::dict d;
        d["infinite_family"] = r.infinite_family;
        d["representatives"] = reps;
        return d;
    });
    m.def(
        "acyclic_representatives",
        [](const py::handle& C, const py::handle& max_abs, std::size_t max_nodes) {
            py::list out;
            for (const AcyclicOrbitClass& c :
                 acyclic_representatives(to_int(C), to_int(max_abs), max_nodes)) {
                py::dict d;
                d["canonical"] = from_triple(c.canonical);
                py::list members;
                for (const Triple& t : c.members) members.append(from_triple(t));
                d["members"] = members;
                d["complete"] = c.complete;
                out.append(d);
            }
            return out;
        },
        py::arg("constant"), py::arg("max_abs") = 1000, py::arg("max_nodes") = 20000);

    m.def("cartan", [](const py::sequence& t) { return from_matrix(cartan(to_triple(t)).m); });
    m.def("coxeter",
          [](const py::sequence& t) { return from_matrix(coxeter(cartan(to_triple(t))).m); });
    m.def("char_poly", [](const py::sequence& t) {
        py::list out;
        for (const Int& c : char_poly(coxeter(cartan(to_triple(t))))) out.append(to_py(c));
        return out;
    });
    m.def("spectrum", [](const py::sequence& t) {
        CoxeterSpectrum s = spectrum(to_triple(t));
        py::dict d;
        d["constant"] = to_py(s.constant);
        d["lambda_plus_inverse"] = to_py(s.lambda_plus_inverse);
        d["lambda"] = py::make_tuple(s.lambda.real(), s.lambda.imag());
        d["lambda_real"] = s.lambda_real;
        d["regime"] = regime_name(s.regime);
        return d;
    });

    m.def("path_counts", [](const py::handle& r, const py::handle& s, const py::handle& t) {
        PathCounts nu = path_counts(to_quiver(r, s, t));
        py::dict d;
        d["nu_12"] = to_py(nu.nu_12);
        d["nu_23"] = to_py(nu.nu_23);
        d["nu_13"] = to_py(nu.nu_13);
        return d;
    });
    m.def("dim_h1", [](const py::handle& r, const py::handle& s, const py::handle& t) {
        return to_py(dim_h1(to_quiver(r, s, t)));
    });
    m.def("mutate_to_cyclic", [](const py::handle& r, const py::handle& s, const py::handle& t) {
        return from_triple(mutate_to_cyclic(to_quiver(r, s, t)));
    });
    m.def("verify_appendix_theorem",
          [](const py::handle& r, const py::handle& s, const py::handle& t) {
              return verify_appendix_theorem(to_quiver(r, s, t));
          });
    m.def("hereditary_candidates", [](const py::handle& C) {
        py::list out;
        for (const AcyclicQuiver3& q : hereditary_candidates(to_int(C)))
            out.append(py::make_tuple(to_py(q.r), to_py(q.s), to_py(q.t)));
        return out;
    });

    m.def(
        "verify_harness",
        [](int box) {
            py::list out;
            for (const CheckResult& r : verify_harness(box)) {
                py::dict d;
                d["name"] = r.name;
                d["passed"] = r.passed;
                d["cases"] = r.cases;
                d["detail"] = r.detail;
                out.append(d);
            }
            return out;
        },
        py::arg("box") = 10);

    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const std::domain_error& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        } catch (const std::invalid_argument& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        }
    });
}
