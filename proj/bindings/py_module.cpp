#include "dicell/cellular.hpp"
#include "dicell/corpus.hpp"
#include "dicell/cubical.hpp"
#include "dicell/homotopy.hpp"
#include "dicell/io.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace dicell;

namespace {

py::list chain_to_py(const qchain& c, const digraph& g) {
    py::list terms;
    for (const auto& [p, coef] : c.terms()) {
        py::list verts;
        for (int v : p.v) verts.append(g.label(v));
        terms.append(py::make_tuple(coef.str(), verts));
    }
    return terms;
}

ichain chain_from_py(const py::sequence& terms, const digraph& g) {
    ichain c;
    for (const auto& item : terms) {
        auto pair = item.cast<py::sequence>();
        const long long coef = pair[0].cast<long long>();
        path p;
        for (const auto& v : pair[1].cast<py::sequence>()) {
            int idx = g.index_of(v.cast<std::string>());
            if (idx < 0) throw unknown_vertex_error(v.cast<std::string>());
            p.v.push_back(idx);
        }
        c.add(p, bigint(coef));
    }
    return c;
}

py::dict report_to_py(const homology_report& rep, const digraph& g) {
    py::dict out;
    out["digraph"] = rep.digraph_name;
    out["reduced"] = rep.reduced;
    out["betti"] = rep.betti();
    py::list rows;
    for (const auto& row : rep.rows) {
        py::dict r;
        r["degree"] = row.degree;
        r["dim"] = row.dim;
        r["rank_boundary"] = row.rank_down;
        r["betti"] = row.betti;
        r["upper_bound_only"] = row.upper_bound_only;
        py::list gens;
        for (const auto& c : row.generators) gens.append(chain_to_py(c, g));
        r["generators"] = gens;
        rows.append(r);
    }
    out["rows"] = rows;
    return out;
}

}  // namespace

PYBIND11_MODULE(_dicell, m) {
    m.doc() = "exact cellular homology engine for finite simple digraphs";

    py::register_exception<error>(m, "DicellError");

    py::class_<digraph>(m, "Digraph")
        .def(py::init([](const std::vector<std::string>& vertices,
                         const std::vector<std::pair<std::string, std::string>>& edges,
                         const std::string& name) {
                 return build_digraph(vertices, edges, name);
             }),
             py::arg("vertices"), py::arg("edges"), py::arg("name") = "")
        .def_property_readonly("name", &digraph::name)
        .def_property_readonly("vertices", &digraph::labels)
        .def_property_readonly("edges", &digraph::edge_labels)
        .def("vertex_count", &digraph::vertex_count)
        .def("edge_count", &digraph::edge_count)
        .def("is_acyclic", [](const digraph& g) { return is_acyclic(g); })
        .def("to_text", [](const digraph& g) { return serialize_digraph_text(g); })
        .def("to_json", [](const digraph& g) { return serialize_digraph_json(g); })
        .def("to_dot", [](const digraph& g) { return to_dot(g); })
        .def("__repr__", [](const digraph& g) {
            return "<Digraph " + (g.name().empty() ? "unnamed" : g.name()) + ": " +
                   std::to_string(g.vertex_count()) + " vertices, " +
                   std::to_string(g.edge_count()) + " edges>";
        });

    m.def("parse", [](const std::string& text) { return parse_digraph(text); });
    m.def("cartesian_product", &cartesian_product);
    m.def("cube", &cube, py::arg("n"), py::arg("cap") = default_cube_cap);
    m.def("circulant", &circulant);
    m.def("johnson", &johnson);
    m.def("k_square", &k_square);
    m.def("exotic_cube", &exotic_cube);
    m.def("line_digraph", [](const std::string& pattern) {
        std::vector<bool> signs;
        for (char c : pattern) signs.push_back(c == '+');
        return line_digraph(signs);
    });

    m.def(
        "omega_dim",
        [](const digraph& g, int degree, const std::string& coeff) {
            auto ob = omega_space(g, degree,
                                  coeff == "int" ? coeff_domain::integers
                                                 : coeff_domain::rationals);
            return ob.basis.size();
        },
        py::arg("g"), py::arg("degree"), py::arg("coeff") = "rat");
    m.def(
        "omega_basis",
        [](const digraph& g, int degree) {
            py::list out;
            for (const auto& c : omega_space(g, degree).basis) out.append(chain_to_py(c, g));
            return out;
        },
        py::arg("g"), py::arg("degree"));

    m.def(
        "path_homology",
        [](const digraph& g, bool reduced) { return report_to_py(path_homology(g, reduced), g); },
        py::arg("g"), py::arg("reduced") = false);
    m.def(
        "cellular_homology",
        [](const digraph& g, bool reduced) {
            return report_to_py(cellular_homology(g, reduced), g);
        },
        py::arg("g"), py::arg("reduced") = false);
    m.def(
        "cubical_homology",
        [](const digraph& g, int max_degree) {
            return report_to_py(cubical_homology(g, max_degree), g);
        },
        py::arg("g"), py::arg("max_degree") = 2);

    m.def(
        "minimal_paths",
        [](const digraph& g, int degree) {
            py::list out;
            for (const auto& rec : enumerate_minimal_paths(g, degree)) {
                py::dict item;
                item["chain"] = chain_to_py(to_rational(rec.chain), g);
                item["start"] = g.label(rec.start);
                item["end"] = g.label(rec.end);
                py::list edges;
                for (auto [a, b] : rec.supp.edge_labels()) edges.append(py::make_tuple(a, b));
                item["supp_edges"] = edges;
                out.append(item);
            }
            return out;
        },
        py::arg("g"), py::arg("degree"));

    m.def(
        "is_minimal",
        [](const digraph& g, const py::sequence& chain) {
            return is_minimal(g, chain_from_py(chain, g));
        },
        py::arg("g"), py::arg("chain"));

    m.def(
        "admissible_paths",
        [](const digraph& g, int degree, bool with_witness) {
            py::list out;
            for (const auto& pr : admissible_set(g, degree)) {
                py::dict item;
                item["chain"] = chain_to_py(to_rational(pr.path.chain), g);
                item["scale"] = pr.scale.str();
                if (with_witness) {
                    py::dict w;
                    for (int v = 0; v < pr.witness.source.vertex_count(); ++v)
                        w[py::str(pr.witness.source.label(v))] =
                            g.label(pr.witness.assign[static_cast<size_t>(v)]);
                    item["witness"] = w;
                }
                out.append(item);
            }
            return out;
        },
        py::arg("g"), py::arg("degree"), py::arg("with_witness") = false);

    m.def(
        "kunneth_check",
        [](const digraph& x, const digraph& y, int max_degree) {
            auto rep = kunneth_check(x, y, max_degree);
            py::dict out;
            out["ok"] = rep.ok();
            out["failures"] = rep.failures;
            py::list rows;
            for (const auto& row : rep.rows)
                rows.append(py::make_tuple(row.degree, row.dim_product, row.dim_sum,
                                           row.betti_product, row.betti_sum));
            out["rows"] = rows;
            return out;
        },
        py::arg("x"), py::arg("y"), py::arg("max_degree") = 2);

    m.def(
        "probe_conjecture",
        [](const digraph& g, int max_degree) {
            auto rep = conjecture_probe(g, max_degree);
            py::dict out;
            out["budget_exceeded"] = rep.budget_exceeded;
            out["agree"] = rep.agree_all();
            out["verified_up_to"] = rep.verified_up_to;
            py::list rows;
            for (const auto& row : rep.rows)
                rows.append(py::make_tuple(row.degree, row.betti_cellular, row.betti_cubical));
            out["rows"] = rows;
            return out;
        },
        py::arg("g"), py::arg("max_degree") = 2);

    m.def(
        "search_contraction_steps",
        [](const digraph& g) -> py::object {
            auto chain = search_contraction(g);
            if (!chain) return py::none();
            return py::int_(chain->size() - 1);
        },
        py::arg("g"));

    m.def("fixture_dir", &default_fixture_dir);
    m.def("list_fixtures", [](const std::string& dir) { return list_fixture_ids(dir); },
          py::arg("dir") = std::string());
    m.def(
        "verify_paper",
        [](const std::string& filter, const std::string& dir) {
            auto rep = run_corpus(filter, dir.empty() ? default_fixture_dir() : dir);
            py::dict out;
            out["passed"] = rep.passed;
            out["failed"] = rep.failed;
            py::list results;
            for (const auto& res : rep.results)
                results.append(py::make_tuple(res.fixture_id, res.check, res.pass, res.detail));
            out["results"] = results;
            return out;
        },
        py::arg("filter") = "", py::arg("dir") = "");
}
