#include "dicell/cellular.hpp"
#include "dicell/corpus.hpp"
#include "dicell/cubical.hpp"
#include "dicell/io.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace dicell;
using nlohmann::json;

namespace {

struct global_options {
    std::string format = "text";
    std::uint64_t budget = 0;  // 0 keeps the per-module defaults
    bool quiet = false;

    bool json_output() const { return format == "json"; }
    std::uint64_t search_budget_or(std::uint64_t fallback) const {
        return budget ? budget : fallback;
    }
};

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path);
    if (!in) throw error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

digraph load_graph(const std::string& path) {
    // any malformed input counts as a parse failure for exit-code purposes
    try {
        return parse_digraph(read_input(path));
    } catch (const parse_error&) {
        throw;
    } catch (const error& e) {
        throw parse_error(0, e.what());
    }
}

json chain_json(const qchain& c, const digraph& g) {
    auto arr = json::array();
    for (const auto& [p, coef] : c.terms()) {
        auto verts = json::array();
        for (int v : p.v) verts.push_back(g.label(v));
        arr.push_back({{"coeff", coef.str()}, {"vertices", verts}});
    }
    return arr;
}

json chain_json(const ichain& c, const digraph& g) { return chain_json(to_rational(c), g); }

void print_report(const global_options& opt, const homology_report& rep, const digraph& g) {
    if (opt.json_output())
        std::cout << report_to_json(rep, g) << "\n";
    else
        std::cout << report_to_text(rep, g);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact cellular homology engine for finite simple digraphs"};
    app.require_subcommand(1);
    app.fallthrough();
    global_options opt;
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--budget", opt.budget, "search node cap (0 = defaults)");
    app.add_flag("--quiet", opt.quiet, "suppress informational output");

    // gen <family> <params...>
    auto* gen = app.add_subcommand("gen", "emit a generated digraph");
    std::string family;
    std::vector<std::string> params;
    gen->add_option("family", family, "circulant|johnson|cube|ksquare|line|exotic")->required();
    gen->add_option("params", params, "family parameters");

    // omega <file> [--degree n] [--coeff int|rat]
    auto* om = app.add_subcommand("omega", "dimension and basis of one path-complex degree");
    std::string omega_file, omega_coeff = "rat";
    int omega_degree = 1;
    om->add_option("file", omega_file, "digraph file or -")->required();
    om->add_option("--degree", omega_degree, "degree n")->capture_default_str();
    om->add_option("--coeff", omega_coeff, "int|rat")->check(CLI::IsMember({"int", "rat"}));

    // homology <file> --theory path|cellular|cubical [--reduced] [--max-degree d]
    auto* hom = app.add_subcommand("homology", "homology report for a digraph");
    std::string hom_file, theory = "path";
    bool reduced = false;
    int max_degree = default_cubical_cap;
    hom->add_option("file", hom_file, "digraph file or -")->required();
    hom->add_option("--theory", theory, "path|cellular|cubical")
        ->check(CLI::IsMember({"path", "cellular", "cubical"}))
        ->capture_default_str();
    hom->add_flag("--reduced", reduced, "reduced homology");
    hom->add_option("--max-degree", max_degree, "top degree for the cubical theory");

    // minimal <file> --degree n [--supp] [--validate-structure]
    auto* min_cmd = app.add_subcommand("minimal", "enumerate minimal paths of one degree");
    std::string min_file;
    int min_degree = 2;
    bool show_supp = false, validate = false;
    min_cmd->add_option("file", min_file, "digraph file or -")->required();
    min_cmd->add_option("--degree", min_degree, "degree n")->required();
    min_cmd->add_flag("--supp", show_supp, "print supporting digraphs");
    min_cmd->add_flag("--validate-structure", validate, "run structure diagnostics");

    // admissible <file> --degree n [--witnesses]
    auto* adm = app.add_subcommand("admissible", "enumerate admissible pairs of one degree");
    std::string adm_file;
    int adm_degree = 2;
    bool witnesses = false;
    adm->add_option("file", adm_file, "digraph file or -")->required();
    adm->add_option("--degree", adm_degree, "degree n")->required();
    adm->add_flag("--witnesses", witnesses, "print witness maps");

    // product <fileX> <fileY> [--kunneth]
    auto* prod = app.add_subcommand("product", "Cartesian product of two digraphs");
    std::string prod_x, prod_y;
    bool kunneth = false;
    int kunneth_degree = 2;
    prod->add_option("fileX", prod_x, "first digraph")->required();
    prod->add_option("fileY", prod_y, "second digraph")->required();
    prod->add_flag("--kunneth", kunneth, "verify the product identities");
    prod->add_option("--max-degree", kunneth_degree, "top degree for the identities");

    // probe-conjecture <file> --max-degree d
    auto* probe = app.add_subcommand("probe-conjecture",
                                     "compare cellular and cubical homology on an acyclic digraph");
    std::string probe_file;
    int probe_degree = 2;
    probe->add_option("file", probe_file, "digraph file or -")->required();
    probe->add_option("--max-degree", probe_degree, "top compared degree");

    // verify-paper [--filter id]
    auto* verify = app.add_subcommand("verify-paper", "run the bundled reference corpus");
    std::string filter, fixtures_dir = default_fixture_dir();
    verify->add_option("--filter", filter, "fixture id prefix");
    verify->add_option("--fixtures", fixtures_dir, "fixtures directory");

    // export-dot <file>
    auto* dot = app.add_subcommand("export-dot", "emit the digraph in DOT format");
    std::string dot_file;
    dot->add_option("file", dot_file, "digraph file or -")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*gen) {
            digraph g;
            auto want = [&](size_t n) {
                if (params.size() != n)
                    throw error("family " + family + " expects " + std::to_string(n) +
                                " parameter(s)");
            };
            if (family == "circulant") {
                want(2);
                std::vector<int> jumps;
                std::stringstream ss(params[1]);
                std::string tok;
                while (std::getline(ss, tok, ',')) jumps.push_back(std::stoi(tok));
                g = circulant(std::stoi(params[0]), jumps);
            } else if (family == "johnson") {
                want(2);
                g = johnson(std::stoi(params[0]), std::stoi(params[1]));
            } else if (family == "cube") {
                want(1);
                g = cube(std::stoi(params[0]));
            } else if (family == "ksquare") {
                want(1);
                g = k_square(std::stoi(params[0]));
            } else if (family == "line") {
                want(1);
                std::vector<bool> signs;
                for (char c : params[0]) {
                    if (c == '+')
                        signs.push_back(true);
                    else if (c == '-')
                        signs.push_back(false);
                    else
                        throw error("line pattern must be drawn from + and -");
                }
                g = line_digraph(signs);
            } else if (family == "exotic") {
                want(0);
                g = exotic_cube();
            } else {
                throw error("unknown family " + family);
            }
            std::cout << (opt.json_output() ? serialize_digraph_json(g) + "\n"
                                            : serialize_digraph_text(g));
        } else if (*om) {
            digraph g = load_graph(omega_file);
            auto ob = omega_space(g, omega_degree,
                                  omega_coeff == "int" ? coeff_domain::integers
                                                       : coeff_domain::rationals);
            if (opt.json_output()) {
                json j;
                j["digraph"] = g.name();
                j["degree"] = omega_degree;
                j["dim"] = ob.basis.size();
                auto basis = json::array();
                for (const auto& c : ob.basis) basis.push_back(chain_json(c, g));
                j["basis"] = basis;
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "dim = " << ob.basis.size() << "\n";
                if (!opt.quiet)
                    for (const auto& c : ob.basis)
                        std::cout << "  " << format_chain(c, g) << "\n";
            }
        } else if (*hom) {
            digraph g = load_graph(hom_file);
            homology_report rep;
            if (theory == "path")
                rep = path_homology(g, reduced);
            else if (theory == "cellular")
                rep = cellular_homology(g, reduced, opt.search_budget_or(default_search_budget));
            else
                rep = cubical_homology(g, max_degree, default_cubical_cap,
                                       opt.search_budget_or(default_cubical_budget));
            print_report(opt, rep, g);
        } else if (*min_cmd) {
            digraph g = load_graph(min_file);
            auto recs = enumerate_minimal_paths(g, min_degree,
                                                opt.search_budget_or(default_minimal_budget));
            if (opt.json_output()) {
                json j;
                j["digraph"] = g.name();
                j["degree"] = min_degree;
                j["count"] = recs.size();
                auto items = json::array();
                for (const auto& rec : recs) {
                    json item;
                    item["chain"] = chain_json(rec.chain, g);
                    item["start"] = g.label(rec.start);
                    item["end"] = g.label(rec.end);
                    if (show_supp) {
                        auto edges = json::array();
                        for (auto [a, b] : rec.supp.edge_labels()) edges.push_back({a, b});
                        item["supp_edges"] = edges;
                    }
                    if (validate) item["violations"] = validate_structure_theorem(g, rec);
                    items.push_back(item);
                }
                j["paths"] = items;
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << recs.size() << " minimal path(s) in degree " << min_degree << "\n";
                for (const auto& rec : recs) {
                    std::cout << "  " << format_chain(rec.chain, g) << "\n";
                    if (show_supp) {
                        std::cout << "    supp:";
                        for (auto [a, b] : rec.supp.edge_labels())
                            std::cout << " " << a << "->" << b;
                        std::cout << "\n";
                    }
                    if (validate) {
                        auto violations = validate_structure_theorem(g, rec);
                        if (violations.empty())
                            std::cout << "    structure: ok\n";
                        else
                            for (const auto& v : violations)
                                std::cout << "    structure violation: " << v << "\n";
                    }
                }
            }
        } else if (*adm) {
            digraph g = load_graph(adm_file);
            auto pairs = admissible_set(g, adm_degree,
                                        opt.search_budget_or(default_search_budget));
            if (opt.json_output()) {
                json j;
                j["digraph"] = g.name();
                j["degree"] = adm_degree;
                j["count"] = pairs.size();
                auto items = json::array();
                for (const auto& pr : pairs) {
                    json item;
                    item["chain"] = chain_json(pr.path.chain, g);
                    item["scale"] = pr.scale.str();
                    if (witnesses) {
                        json m;
                        for (int v = 0; v < pr.witness.source.vertex_count(); ++v)
                            m[pr.witness.source.label(v)] =
                                g.label(pr.witness.assign[static_cast<size_t>(v)]);
                        item["witness"] = m;
                    }
                    items.push_back(item);
                }
                j["pairs"] = items;
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << pairs.size() << " admissible pair(s) in degree " << adm_degree
                          << "\n";
                for (const auto& pr : pairs) {
                    std::cout << "  " << format_chain(pr.path.chain, g)
                              << "  (c = " << pr.scale.str() << ")\n";
                    if (witnesses) {
                        std::cout << "    witness:";
                        for (int v = 0; v < pr.witness.source.vertex_count(); ++v)
                            std::cout << " " << pr.witness.source.label(v) << "->"
                                      << g.label(pr.witness.assign[static_cast<size_t>(v)]);
                        std::cout << "\n";
                    }
                }
            }
        } else if (*prod) {
            digraph x = load_graph(prod_x), y = load_graph(prod_y);
            digraph p = cartesian_product(x, y);
            if (kunneth) {
                auto rep = kunneth_check(x, y, kunneth_degree,
                                         opt.search_budget_or(default_search_budget));
                if (opt.json_output()) {
                    json j;
                    j["ok"] = rep.ok();
                    j["cross_pairs_checked"] = rep.cross_pairs_checked;
                    j["failures"] = rep.failures;
                    auto rows = json::array();
                    for (const auto& row : rep.rows)
                        rows.push_back({{"degree", row.degree},
                                        {"dim_product", row.dim_product},
                                        {"dim_sum", row.dim_sum},
                                        {"betti_product", row.betti_product},
                                        {"betti_sum", row.betti_sum}});
                    j["rows"] = rows;
                    std::cout << j.dump(2) << "\n";
                } else {
                    for (const auto& row : rep.rows)
                        std::cout << "degree " << row.degree << ": dim " << row.dim_product
                                  << (row.dims_match ? " == " : " != ") << row.dim_sum
                                  << ", betti " << row.betti_product
                                  << (row.betti_match ? " == " : " != ") << row.betti_sum
                                  << "\n";
                    std::cout << (rep.ok() ? "product identities hold\n"
                                           : "product identities FAILED\n");
                }
                if (!rep.ok()) return 1;
            } else {
                std::cout << (opt.json_output() ? serialize_digraph_json(p) + "\n"
                                                : serialize_digraph_text(p));
            }
        } else if (*probe) {
            digraph g = load_graph(probe_file);
            if (!is_acyclic(g)) throw error("the conjecture probe needs an acyclic digraph");
            auto rep = conjecture_probe(g, probe_degree, default_cubical_cap,
                                        opt.search_budget_or(default_cubical_budget));
            if (opt.json_output()) {
                json j;
                j["budget_exceeded"] = rep.budget_exceeded;
                j["verified_up_to"] = rep.verified_up_to;
                j["agree"] = rep.agree_all();
                auto rows = json::array();
                for (const auto& row : rep.rows)
                    rows.push_back({{"degree", row.degree},
                                    {"betti_cellular", row.betti_cellular},
                                    {"betti_cubical", row.betti_cubical},
                                    {"agree", row.agree},
                                    {"upper_bound_only", row.upper_bound_only}});
                j["rows"] = rows;
                std::cout << j.dump(2) << "\n";
            } else if (rep.budget_exceeded) {
                std::cout << "budget exceeded; probe inconclusive\n";
            } else {
                for (const auto& row : rep.rows)
                    std::cout << "degree " << row.degree << ": cellular " << row.betti_cellular
                              << ", cubical " << row.betti_cubical
                              << (row.agree ? " (agree)" : " (DISAGREE)")
                              << (row.upper_bound_only ? " [upper bound]" : "") << "\n";
                std::cout << "verified up to degree " << rep.verified_up_to << "\n";
            }
            if (!rep.budget_exceeded && !rep.agree_all()) return 1;
        } else if (*verify) {
            auto rep = run_corpus(filter, fixtures_dir);
            if (opt.json_output()) {
                json j;
                j["passed"] = rep.passed;
                j["failed"] = rep.failed;
                auto items = json::array();
                for (const auto& res : rep.results)
                    items.push_back({{"fixture", res.fixture_id},
                                     {"check", res.check},
                                     {"pass", res.pass},
                                     {"detail", res.detail}});
                j["results"] = items;
                std::cout << j.dump(2) << "\n";
            } else {
                for (const auto& res : rep.results) {
                    if (opt.quiet && res.pass) continue;
                    std::cout << (res.pass ? "pass " : "FAIL ") << res.fixture_id << "/"
                              << res.check
                              << (res.detail.empty() || opt.quiet ? "" : "  [" + res.detail + "]")
                              << "\n";
                }
                std::cout << rep.passed << "/" << (rep.passed + rep.failed) << " checks passed\n";
            }
            if (!rep.ok()) return 1;
        } else if (*dot) {
            std::cout << to_dot(load_graph(dot_file));
        }
    } catch (const parse_error& e) {
        if (opt.json_output())
            std::cout << json{{"error", e.what()}, {"kind", "parse"}}.dump() << "\n";
        else
            std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        if (opt.json_output())
            std::cout << json{{"error", e.what()}, {"kind", "computation"}}.dump() << "\n";
        else
            std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
