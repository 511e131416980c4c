#include "domlab/domination.hpp"
#include "domlab/error.hpp"
#include "domlab/extremal.hpp"
#include "domlab/families.hpp"
#include "domlab/graph.hpp"
#include "domlab/graph6.hpp"
#include "domlab/hereditary.hpp"
#include "domlab/patterns.hpp"
#include "domlab/sat_reduction.hpp"

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdlib>

namespace py = pybind11;
using namespace domlab;

namespace {

using Colours = std::vector<std::vector<int>>;

Colours colours_of(const RainbowAssignment& f) {
    Colours out;
    for (RainbowLabel l : f.labels()) {
        std::vector<int> cell;
        if (static_cast<int>(l) & 1)
            cell.push_back(1);
        if (static_cast<int>(l) & 2)
            cell.push_back(2);
        out.push_back(std::move(cell));
    }
    return out;
}

RainbowAssignment rainbow_of(const Colours& cells) {
    std::vector<RainbowLabel> labels;
    for (const auto& cell : cells) {
        int code = 0;
        for (int c : cell) {
            if (c != 1 && c != 2)
                throw PreconditionError("rainbow colours must be 1 or 2");
            code |= c;
        }
        labels.push_back(static_cast<RainbowLabel>(code));
    }
    return RainbowAssignment(std::move(labels));
}

std::vector<int> ints_of(const WeakRomanAssignment& g) { return {g.values().begin(), g.values().end()}; }

SolverOptions solver_options(int max_order) {
    SolverOptions o;
    o.max_order = max_order;
    return o;
}

py::dict verdict_dict(const Verdict& v) {
    py::dict d;
    d["valid"] = v.valid;
    d["witness"] = v.witness ? py::cast(*v.witness) : py::none();
    return d;
}

// DIMACS-style clauses: signed 1-based variable indices.
CnfFormula formula_of(int num_vars, const std::vector<std::array<int, 3>>& clauses) {
    CnfFormula f{num_vars, {}};
    for (const auto& c : clauses) {
        Clause out;
        for (std::size_t i = 0; i < 3; ++i) {
            if (c[i] == 0)
                throw PreconditionError("literal 0 is not a variable");
            out[i] = {std::abs(c[i]), c[i] < 0};
        }
        f.clauses.push_back(out);
    }
    check_formula(f);
    return f;
}

std::vector<std::array<int, 3>> clauses_of(const CnfFormula& f) {
    std::vector<std::array<int, 3>> out;
    for (const Clause& c : f.clauses) {
        std::array<int, 3> x{};
        for (std::size_t i = 0; i < 3; ++i)
            x[i] = c[i].negated ? -c[i].var : c[i].var;
        out.push_back(x);
    }
    return out;
}

const char* role_name(TriangleRole r) {
    switch (r) {
    case TriangleRole::V: return "v";
    case TriangleRole::W: return "w";
    case TriangleRole::U: return "u";
    }
    return "?";
}

} // namespace

PYBIND11_MODULE(_domlab, m) {
    m.doc() = "Exact 2-rainbow and weak Roman domination on small graphs";

    auto base = py::register_exception<Error>(m, "DomlabError", PyExc_RuntimeError);
    py::register_exception<ParseError>(m, "ParseError", base.ptr());
    py::register_exception<RangeError>(m, "RangeError", base.ptr());
    py::register_exception<PreconditionError>(m, "PreconditionError", base.ptr());
    py::register_exception<CapExceeded>(m, "CapExceeded", base.ptr());
    py::register_exception<TheoremViolation>(m, "TheoremViolation", base.ptr());

    py::class_<Graph>(m, "Graph")
        .def(py::init<int>(), py::arg("order") = 0)
        .def_static("from_edges",
                    [](int order, const std::vector<std::pair<int, int>>& edges) {
                        return Graph::from_edges(order, edges);
                    },
                    py::arg("order"), py::arg("edges"))
        .def_property_readonly("order", &Graph::order)
        .def("edges", &Graph::edges)
        .def("edge_count", &Graph::edge_count)
        .def("adjacent", &Graph::adjacent)
        .def("degree", &Graph::degree)
        .def("neighbors", [](const Graph& g, int v) { return VertexSet(g.neighbors(v)).members(); })
        .def(py::self == py::self)
        .def("__repr__", [](const Graph& g) {
            return "Graph(order=" + std::to_string(g.order()) + ", edges=" + std::to_string(g.edge_count()) + ")";
        });

    m.def("parse_graph6", &parse_graph6, py::arg("text"));
    m.def("emit_graph6", &emit_graph6, py::arg("graph"));
    m.def("complete_graph", &complete_graph);
    m.def("empty_graph", &empty_graph);
    m.def("cycle_graph", &cycle_graph);
    m.def("path_graph", &path_graph);
    m.def("prism", &prism);
    m.def("disjoint_union", &disjoint_union);
    m.def("is_connected", &is_connected);
    m.def("induced_subgraph", [](const Graph& g, const std::vector<int>& vs) {
        return induced_subgraph(g, VertexSet::from(vs));
    });

    py::enum_<Pattern>(m, "Pattern")
        .value("EMPTY_TRIPLE", Pattern::EmptyTriple)
        .value("TRIANGLE", Pattern::Triangle)
        .value("C5", Pattern::C5)
        .value("K4", Pattern::K4)
        .value("DIAMOND", Pattern::Diamond)
        .value("K5", Pattern::K5);
    m.def("contains_induced", &contains_induced, py::arg("graph"), py::arg("pattern"));

    m.def("is_dominating_set", [](const Graph& g, const std::vector<int>& d) {
        return is_dominating_set(g, VertexSet::from(d));
    });
    m.def(
        "domination_number",
        [](const Graph& g, int max_order) {
            const auto r = domination_number(g, solver_options(max_order));
            return py::make_tuple(r.value, r.witness.members());
        },
        py::arg("graph"), py::arg("max_order") = kDefaultSolverMaxOrder);
    m.def(
        "rainbow_number",
        [](const Graph& g, int max_order) {
            SolveResult<RainbowAssignment> r;
            {
                py::gil_scoped_release release;
                r = rainbow_number(g, solver_options(max_order));
            }
            return py::make_tuple(r.value, colours_of(r.witness));
        },
        py::arg("graph"), py::arg("max_order") = kDefaultSolverMaxOrder);
    m.def(
        "weak_roman_number",
        [](const Graph& g, int max_order) {
            SolveResult<WeakRomanAssignment> r;
            {
                py::gil_scoped_release release;
                r = weak_roman_number(g, solver_options(max_order));
            }
            return py::make_tuple(r.value, ints_of(r.witness));
        },
        py::arg("graph"), py::arg("max_order") = kDefaultSolverMaxOrder);
    m.def("validate_rainbow",
          [](const Graph& g, const Colours& f) { return verdict_dict(validate_rainbow(g, rainbow_of(f))); });
    m.def("validate_weak_roman", [](const Graph& g, const std::vector<int>& values) {
        return verdict_dict(validate_weak_roman(g, WeakRomanAssignment(values)));
    });
    m.def("apply_move", [](const std::vector<int>& values, int v, int u) {
        return ints_of(apply_move(WeakRomanAssignment(values), v, u));
    });

    m.def(
        "is_extremal",
        [](const Graph& g, int max_order) {
            const auto r = is_extremal(g, solver_options(max_order));
            py::dict d;
            d["extremal"] = r.extremal;
            d["vacuous"] = r.vacuous;
            d["gamma_r"] = r.gamma_r;
            d["gamma_r2"] = r.gamma_r2;
            return d;
        },
        py::arg("graph"), py::arg("max_order") = kDefaultSolverMaxOrder);
    m.def("extract_decomposition", [](const Graph& g, const std::vector<int>& values) {
        const auto d = extract_decomposition(g, WeakRomanAssignment(values));
        py::dict out;
        out["v_list"] = d.v_list;
        py::list p;
        py::list q;
        for (VertexSet s : d.p_sets)
            p.append(s.members());
        for (VertexSet s : d.q_sets)
            q.append(s.members());
        out["p_sets"] = p;
        out["q_sets"] = q;
        out["valid"] = verify_decomposition(g, d).valid;
        return out;
    });
    m.def("recognize_c2", [](const Graph& g) {
        const auto c = recognize_c2(g);
        py::dict d;
        d["tag"] = std::string(form_name(c.form));
        d["k"] = c.k;
        d["added_edges"] = c.added_edges;
        py::list roles;
        for (const RoleLabel& r : c.roles)
            roles.append(py::make_tuple(role_name(r.role), r.triangle));
        d["roles"] = roles;
        return d;
    });
    m.def("recognize_c1", &recognize_c1);
    m.def("generate_triangle_system", [](int k, const std::vector<std::pair<int, int>>& edges) {
        return generate_triangle_system(k, edges);
    });
    m.def("generate_two_triangles_matching", &generate_two_triangles_matching);

    m.def(
        "parse_dimacs",
        [](const std::string& text, bool pad) {
            DimacsOptions o;
            o.pad_short_clauses = pad;
            const CnfFormula f = parse_dimacs(text, o);
            return py::make_tuple(f.num_vars, clauses_of(f));
        },
        py::arg("text"), py::arg("pad") = false);
    m.def(
        "build_reduction",
        [](int num_vars, const std::vector<std::array<int, 3>>& clauses) {
            const ReductionGraph r = build_reduction(formula_of(num_vars, clauses));
            std::vector<std::string> labels;
            for (const VertexRole& role : r.roles)
                labels.push_back(role_label(role));
            return py::make_tuple(r.graph, labels);
        },
        py::arg("num_vars"), py::arg("clauses"));
    m.def(
        "verify_reduction",
        [](int num_vars, const std::vector<std::array<int, 3>>& clauses, int max_order) {
            const CnfFormula f = formula_of(num_vars, clauses);
            Theorem2Report rep;
            {
                py::gil_scoped_release release;
                rep = verify_theorem2(f, solver_options(max_order));
            }
            py::dict d;
            d["order"] = rep.order;
            d["k5_free"] = rep.k5_free;
            d["gamma_r2"] = rep.gamma_r2;
            d["gamma_r"] = rep.gamma_r;
            d["satisfiable"] = rep.satisfiable;
            d["pass"] = rep.all_pass();
            return d;
        },
        py::arg("num_vars"), py::arg("clauses"), py::arg("max_order") = 20);

    m.def(
        "in_gk",
        [](const Graph& g, int k, int max_order) {
            HereditaryOptions o;
            o.max_order = max_order;
            HereditaryVerdict v;
            {
                py::gil_scoped_release release;
                v = in_gk(g, k, o);
            }
            py::dict d;
            d["member"] = v.member;
            d["witness"] = v.witness ? py::cast(v.witness->members()) : py::none();
            return d;
        },
        py::arg("graph"), py::arg("k"), py::arg("max_order") = kDefaultHereditaryMaxOrder);
    m.def("is_co_k3_c5_free", [](const Graph& g) { return is_free(g, kG3Forbidden).free; });
}
