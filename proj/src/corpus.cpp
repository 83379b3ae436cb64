#include "dicell/corpus.hpp"

#include "dicell/cellular.hpp"
#include "dicell/cubical.hpp"
#include "dicell/homotopy.hpp"
#include "dicell/io.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace dicell {

namespace fs = std::filesystem;
using nlohmann::json;

std::string default_fixture_dir() {
    if (const char* env = std::getenv("DICELL_FIXTURES")) return env;
#ifdef DICELL_FIXTURE_DIR
    if (fs::exists(DICELL_FIXTURE_DIR)) return DICELL_FIXTURE_DIR;
#endif
    return "fixtures";
}

std::vector<std::string> list_fixture_ids(const std::string& dir) {
    std::vector<std::string> ids;
    if (!fs::exists(dir)) return ids;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (entry.path().extension() == ".json") ids.push_back(entry.path().stem().string());
    }
    std::sort(ids.begin(), ids.end());
    return ids;
}

namespace {

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    if (!in) throw unknown_fixture_error(p.string());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

ichain parse_chain(const json& j, const digraph& g) {
    ichain c;
    for (const auto& term : j) {
        const bigint coef(term.at(0).get<long long>());
        path p;
        for (const auto& v : term.at(1)) {
            int idx = g.index_of(v.get<std::string>());
            if (idx < 0) throw unknown_vertex_error(v.get<std::string>());
            p.v.push_back(idx);
        }
        c.add(p, coef);
    }
    return c;
}

ichain canonical(ichain c) {
    if (!c.zero() && c.terms().begin()->second < 0) c *= bigint(-1);
    return c;
}

digraph_map parse_map(const json& j, const digraph& source, const digraph& target) {
    std::vector<std::pair<std::string, std::string>> assign;
    for (const auto& [k, v] : j.items()) assign.emplace_back(k, v.get<std::string>());
    return make_digraph_map_by_label(source, target, assign);
}

singular_cube parse_cube(const json& j, const digraph& g) {
    singular_cube q;
    q.degree = j.at("degree").get<int>();
    for (const auto& v : j.at("assign")) {
        int idx = g.index_of(v.get<std::string>());
        if (idx < 0) throw unknown_vertex_error(v.get<std::string>());
        q.assign.push_back(idx);
    }
    if (static_cast<int>(q.assign.size()) != (1 << q.degree))
        throw error("cube assignment must list all 2^degree vertices");
    return q;
}

// Per-fixture computation cache.
struct fixture_ctx {
    const fixture& fx;
    json checks;
    std::map<int, std::vector<minimal_path_record>> minimal;
    std::map<int, std::vector<admissible_pair>> admissible;

    explicit fixture_ctx(const fixture& f) : fx(f) {
        checks = json::parse(f.expectations_json).value("checks", json::object());
    }

    const std::vector<minimal_path_record>& minimal_at(int d) {
        auto it = minimal.find(d);
        if (it == minimal.end()) it = minimal.emplace(d, enumerate_minimal_paths(fx.graph, d)).first;
        return it->second;
    }
    const std::vector<admissible_pair>& admissible_at(int d) {
        auto it = admissible.find(d);
        if (it == admissible.end()) it = admissible.emplace(d, admissible_set(fx.graph, d)).first;
        return it->second;
    }
    std::set<ichain> minimal_chains(int d) {
        std::set<ichain> out;
        for (const auto& r : minimal_at(d)) out.insert(r.chain);
        return out;
    }
    std::set<ichain> admissible_chains(int d) {
        std::set<ichain> out;
        for (const auto& p : admissible_at(d)) out.insert(p.path.chain);
        return out;
    }
};

struct runner {
    corpus_report& report;
    const std::string& id;

    void emit(const std::string& check, bool pass, const std::string& detail = "") {
        report.results.push_back({id, check, pass, detail});
        (pass ? report.passed : report.failed) += 1;
    }

    template <class F>
    void guarded(const std::string& check, F&& body) {
        try {
            body();
        } catch (const std::exception& e) {
            emit(check, false, std::string("exception: ") + e.what());
        }
    }
};

cube_chain signed_cubes(const json& j, const digraph& g, int& degree) {
    cube_chain out;
    for (const auto& term : j) {
        const bigint coef(term.at(0).get<long long>());
        singular_cube q = parse_cube(term.at(1), g);
        degree = q.degree;
        out[q.assign] += coef;
        if (out[q.assign] == 0) out.erase(q.assign);
    }
    return out;
}

void run_fixture(const fixture& fx, corpus_report& report) {
    fixture_ctx ctx(fx);
    runner r{report, fx.id};
    const digraph& g = fx.graph;
    const json& checks = ctx.checks;

    if (checks.contains("acyclic"))
        r.emit("acyclic", is_acyclic(g) == checks["acyclic"].get<bool>());

    if (checks.contains("matches_generator")) r.guarded("matches_generator", [&] {
        const auto& cfg = checks["matches_generator"];
        const std::string family = cfg.at("family").get<std::string>();
        digraph gen;
        if (family == "circulant")
            gen = circulant(cfg.at("args")[0].get<int>(),
                            cfg.at("args")[1].get<std::vector<int>>());
        else if (family == "johnson")
            gen = johnson(cfg.at("args")[0].get<int>(), cfg.at("args")[1].get<int>());
        else if (family == "cube")
            gen = cube(cfg.at("args")[0].get<int>());
        else if (family == "ksquare")
            gen = k_square(cfg.at("args")[0].get<int>());
        else if (family == "exotic")
            gen = exotic_cube();
        else
            throw error("unknown generator family " + family);
        r.emit("matches_generator",
               gen.vertex_count() == g.vertex_count() && gen.edges() == g.edges(),
               family + " index structure");
    });

    if (checks.contains("minimal_counts")) r.guarded("minimal_counts", [&] {
        bool ok = true;
        std::string detail;
        for (const auto& [key, value] : checks["minimal_counts"].items()) {
            const int expected = value.get<int>();
            if (!key.empty() && key.back() == '+') {
                const int from = std::stoi(key.substr(0, key.size() - 1));
                for (int d = from; d < g.vertex_count(); ++d)
                    if (static_cast<int>(ctx.minimal_at(d).size()) != expected) {
                        ok = false;
                        detail = "degree " + std::to_string(d);
                    }
            } else {
                const int d = std::stoi(key);
                const int got = static_cast<int>(ctx.minimal_at(d).size());
                if (got != expected) {
                    ok = false;
                    detail += "degree " + key + ": got " + std::to_string(got) + " want " +
                              std::to_string(expected) + "; ";
                }
            }
        }
        r.emit("minimal_counts", ok, detail);
    });

    if (checks.contains("minimal_paths")) r.guarded("minimal_paths", [&] {
        for (const auto& [key, value] : checks["minimal_paths"].items()) {
            const int d = std::stoi(key);
            std::set<ichain> expected;
            for (const auto& cj : value) expected.insert(canonical(parse_chain(cj, g)));
            r.emit("minimal_paths/" + key, ctx.minimal_chains(d) == expected);
        }
    });

    if (checks.contains("minimal_members")) r.guarded("minimal_members", [&] {
        for (const auto& [key, value] : checks["minimal_members"].items()) {
            const int d = std::stoi(key);
            int index = 0;
            for (const auto& cj : value) {
                ichain c = canonical(parse_chain(cj, g));
                r.emit("minimal_members/" + key + "/" + std::to_string(index++),
                       ctx.minimal_chains(d).count(c) != 0);
            }
        }
    });

    if (checks.contains("admissible_counts")) r.guarded("admissible_counts", [&] {
        for (const auto& [key, value] : checks["admissible_counts"].items()) {
            const int d = std::stoi(key);
            const int got = static_cast<int>(ctx.admissible_at(d).size());
            r.emit("admissible_counts/" + key, got == value.get<int>(),
                   "got " + std::to_string(got));
        }
    });

    if (checks.contains("admissible_equals_minimal")) r.guarded("admissible_equals_minimal", [&] {
        for (const auto& dj : checks["admissible_equals_minimal"]) {
            const int d = dj.get<int>();
            r.emit("admissible_equals_minimal/" + std::to_string(d),
                   ctx.admissible_chains(d) == ctx.minimal_chains(d));
        }
    });

    if (checks.contains("non_admissible")) r.guarded("non_admissible", [&] {
        for (const auto& [key, value] : checks["non_admissible"].items()) {
            const int d = std::stoi(key);
            for (const auto& item : value) {
                ichain c = canonical(parse_chain(item.at("chain"), g));
                const std::string why = item.at("reject").get<std::string>();
                std::string name = "non_admissible/" + key;
                if (!ctx.minimal_chains(d).count(c)) {
                    r.emit(name, false, "chain not enumerated as minimal");
                    continue;
                }
                auto rec = make_record(g, c);
                auto quick = quick_reject(g, rec);
                if (why == "search") {
                    if (quick) {
                        r.emit(name, false, "expected full search, got quick reject: " + *quick);
                    } else {
                        r.emit(name, !find_realization(g, rec).has_value(),
                               "exhaustive realization search");
                    }
                } else {
                    bool matches = quick && quick->rfind(why, 0) == 0;
                    r.emit(name, matches && !find_realization(g, rec).has_value(),
                           quick ? *quick : "no quick reject");
                }
            }
        }
    });

    if (checks.contains("betti_path")) r.guarded("betti_path", [&] {
        auto h = path_homology(g);
        auto expected = checks["betti_path"].get<std::vector<int>>();
        bool ok = true;
        for (size_t d = 0; d < std::max(expected.size(), h.rows.size()); ++d) {
            const int want = d < expected.size() ? expected[static_cast<size_t>(d)] : 0;
            if (h.betti_at(static_cast<int>(d)) != want) ok = false;
        }
        r.emit("betti_path", ok);
    });

    if (checks.contains("betti_cellular")) r.guarded("betti_cellular", [&] {
        auto h = cellular_homology(g);
        auto expected = checks["betti_cellular"].get<std::vector<int>>();
        bool ok = true;
        for (size_t d = 0; d < std::max(expected.size(), h.rows.size()); ++d) {
            const int want = d < expected.size() ? expected[static_cast<size_t>(d)] : 0;
            if (h.betti_at(static_cast<int>(d)) != want) ok = false;
        }
        r.emit("betti_cellular", ok);
    });

    if (checks.contains("reduced_cellular_zero")) r.guarded("reduced_cellular_zero", [&] {
        auto h = cellular_homology(g, true);
        bool all_zero = true;
        for (const auto& row : h.rows)
            if (row.betti != 0) all_zero = false;
        r.emit("reduced_cellular_zero", all_zero == checks["reduced_cellular_zero"].get<bool>());
    });

    if (checks.contains("reduced_path_zero")) r.guarded("reduced_path_zero", [&] {
        auto h = path_homology(g, true);
        bool all_zero = true;
        for (const auto& row : h.rows)
            if (row.betti != 0) all_zero = false;
        r.emit("reduced_path_zero", all_zero == checks["reduced_path_zero"].get<bool>());
    });

    if (checks.contains("cellular_dims")) r.guarded("cellular_dims", [&] {
        for (const auto& [key, value] : checks["cellular_dims"].items()) {
            auto cb = cellular_chain_space(g, std::stoi(key));
            r.emit("cellular_dims/" + key, cb.dim() == value.get<int>(),
                   "got " + std::to_string(cb.dim()));
        }
    });

    if (checks.contains("has_relations")) r.guarded("has_relations", [&] {
        for (const auto& [key, value] : checks["has_relations"].items()) {
            auto cb = cellular_chain_space(g, std::stoi(key));
            r.emit("has_relations/" + key, cb.has_relations() == value.get<bool>());
        }
    });

    if (checks.contains("witnesses")) r.guarded("witnesses", [&] {
        int index = 0;
        for (const auto& item : checks["witnesses"]) {
            const std::string name = "witnesses/" + std::to_string(index++);
            ichain c = canonical(parse_chain(item.at("chain"), g));
            const int d = c.degree();
            digraph_map given =
                parse_map(item.at("map"), cube(d, std::max(d, default_cube_cap)), g);
            auto accepted = pair_from_witness(g, c, given);
            if (!accepted) {
                r.emit(name, false, "tabulated witness rejected");
                continue;
            }
            if (d >= 1 && !tau_chain_map_check(g, singular_cube{d, given.assign})) {
                r.emit(name, false, "tau compatibility failed on witness");
                continue;
            }
            auto searched = find_realization(g, make_record(g, c));
            r.emit(name, searched.has_value() && verify_admissible_pair(g, *searched),
                   "tabulated witness accepted; canonical search succeeded");
        }
    });

    if (checks.contains("d_tables")) r.guarded("d_tables", [&] {
        int index = 0;
        for (const auto& item : checks["d_tables"]) {
            const std::string name = "d_tables/" + std::to_string(index++);
            auto rec = make_record(g, canonical(parse_chain(item.at("chain"), g)));
            bool ok = true;
            for (const auto& [label, value] : item.at("ds").items()) {
                auto it = rec.d_start.find(g.index_of(label));
                if (it == rec.d_start.end() || it->second != value.get<int>()) ok = false;
            }
            for (const auto& [label, value] : item.at("de").items()) {
                auto it = rec.d_end.find(g.index_of(label));
                if (it == rec.d_end.end() || it->second != value.get<int>()) ok = false;
            }
            r.emit(name, ok);
        }
    });

    if (checks.contains("structure_valid_degrees")) r.guarded("structure_valid_degrees", [&] {
        for (const auto& dj : checks["structure_valid_degrees"]) {
            const int d = dj.get<int>();
            bool ok = true;
            std::string detail;
            for (const auto& rec : ctx.minimal_at(d)) {
                auto violations = validate_structure_theorem(g, rec);
                if (!violations.empty()) {
                    ok = false;
                    detail = format_chain(rec.chain, g) + ": " + violations.front();
                }
            }
            r.emit("structure_valid/" + std::to_string(d), ok, detail);
        }
    });

    if (checks.contains("ne_nf")) r.guarded("ne_nf", [&] {
        int index = 0;
        for (const auto& item : checks["ne_nf"]) {
            const std::string name = "ne_nf/" + std::to_string(index++);
            auto rec = make_record(g, canonical(parse_chain(item.at("chain"), g)));
            const int ne = rec.chain.term_count();
            ichain bd = boundary(rec.chain);
            const int nf = bd.zero() ? 0 : static_cast<int>(decompose_into_minimal(g, bd).size());
            r.emit(name, ne == item.at("ne").get<int>() && nf == item.at("nf").get<int>(),
                   "NE=" + std::to_string(ne) + " NF=" + std::to_string(nf));
        }
    });

    if (checks.contains("retractions")) r.guarded("retractions", [&] {
        int index = 0;
        for (const auto& item : checks["retractions"]) {
            const std::string name = "retractions/" + std::to_string(index++);
            const auto& sub_spec = item.at("sub");
            std::vector<std::string> verts;
            for (const auto& v : sub_spec.at("vertices")) verts.push_back(v.get<std::string>());
            std::vector<std::pair<std::string, std::string>> edges;
            for (const auto& e : sub_spec.at("edges"))
                edges.emplace_back(e.at(0).get<std::string>(), e.at(1).get<std::string>());
            digraph sub = build_digraph(verts, edges);
            digraph_map m = parse_map(item.at("map"), g, g);
            auto res = verify_retraction(g, sub, m);
            const bool fixes = item.value("fixes_sub", true);
            r.emit(name, res.is_map && res.fixes_sub == fixes,
                   fixes ? "strict retraction" : "relaxed map");
        }
    });

    if (checks.contains("contractible")) r.guarded("contractible", [&] {
        auto chain = search_contraction(g);
        r.emit("contractible", chain.has_value() == checks["contractible"].get<bool>(),
               chain ? std::to_string(chain->size() - 1) + " steps" : "not found (bounded)");
    });

    if (checks.contains("summable")) r.guarded("summable", [&] {
        int index = 0;
        for (const auto& item : checks["summable"]) {
            const std::string name = "summable/" + std::to_string(index++);
            ichain a = parse_chain(item.at("a"), g);
            ichain b = parse_chain(item.at("b"), g);
            ichain sa = a, sb = b;
            sa *= bigint(item.at("signs")[0].get<int>());
            sb *= bigint(item.at("signs")[1].get<int>());
            ichain sum = canonical(sa + sb);
            if (!is_minimal(g, sum)) {
                r.emit(name, false, "sum is not a minimal path");
                continue;
            }
            auto rec = make_record(g, sum);
            const bool admissible = !quick_reject(g, rec) && find_realization(g, rec).has_value();
            r.emit(name, admissible == item.at("in_admissible").get<bool>(),
                   admissible ? "sum admissible" : "sum minimal only");
        }
    });

    if (checks.contains("homology_classes")) r.guarded("homology_classes", [&] {
        int spec_index = 0;
        for (const auto& cfg : checks["homology_classes"]) {
        const std::string tag = std::to_string(spec_index++);
        const int d = cfg.at("degree").get<int>();
        const std::string theory = cfg.value("theory", "cellular");
        std::vector<qchain> next_basis;
        int betti = 0;
        if (theory == "path") {
            next_basis = omega_space(g, d + 1).basis;
            betti = path_homology(g).betti_at(d);
        } else {
            next_basis = cellular_chain_space(g, d + 1).working_chains();
            betti = cellular_homology(g).betti_at(d);
        }
        std::vector<qchain> boundaries;
        for (const auto& c : next_basis) {
            qchain bc = boundary(c);
            if (!bc.zero()) boundaries.push_back(bc);
        }
        std::vector<qchain> gens;
        bool ok = true;
        for (const auto& cj : cfg.at("generators")) {
            qchain c = to_rational(parse_chain(cj, g));
            if (!boundary(c).zero()) ok = false;  // generators must be cycles
            gens.push_back(c);
        }
        if (static_cast<int>(gens.size()) != betti) ok = false;
        // classes are linearly independent modulo boundaries
        std::vector<qchain> pool = boundaries;
        for (const auto& c : gens) {
            if (chain_in_span(pool, c)) ok = false;
            pool.push_back(c);
        }
        r.emit("homology_classes/" + tag, ok, theory + " degree " + std::to_string(d));
        if (cfg.contains("multiples")) {
            int index = 0;
            for (const auto& item : cfg["multiples"]) {
                const std::string name = "homology_multiple/" + tag + "/" + std::to_string(index++);
                qchain c = to_rational(parse_chain(item.at("chain"), g));
                const qchain& base = gens[item.at("of").get<size_t>()];
                auto lam = class_multiple(c, base, next_basis);
                bigrat expect(item.at("lambda").get<std::string>());
                r.emit(name, lam.has_value() && *lam == expect,
                       lam ? ("lambda = " + lam->str()) : "not a multiple");
            }
        }
        }
    });

    if (checks.contains("bounding_cycles")) r.guarded("bounding_cycles", [&] {
        for (const auto& [key, value] : checks["bounding_cycles"].items()) {
            const int d = std::stoi(key);
            auto next = omega_space(g, d + 1).basis;
            std::vector<qchain> boundaries;
            for (const auto& c : next) {
                qchain bc = boundary(c);
                if (!bc.zero()) boundaries.push_back(bc);
            }
            int index = 0;
            for (const auto& cj : value) {
                qchain c = to_rational(parse_chain(cj, g));
                r.emit("bounding_cycles/" + key + "/" + std::to_string(index++),
                       boundary(c).zero() && chain_in_span(boundaries, c));
            }
        }
    });

    if (checks.contains("probe")) r.guarded("probe", [&] {
        const int max_degree = checks["probe"].at("max_degree").get<int>();
        auto pr = conjecture_probe(g, max_degree);
        if (pr.budget_exceeded) {
            r.emit("probe", true, "budget exceeded; inconclusive");
        } else {
            std::string detail;
            for (const auto& row : pr.rows)
                detail += std::to_string(row.betti_cellular) + "/" +
                          std::to_string(row.betti_cubical) + " ";
            r.emit("probe", pr.agree_all(), detail);
        }
    });

    if (checks.contains("not_minimal")) r.guarded("not_minimal", [&] {
        int index = 0;
        for (const auto& cj : checks["not_minimal"]) {
            ichain c = parse_chain(cj, g);
            r.emit("not_minimal/" + std::to_string(index++), !is_minimal(g, c));
        }
    });

    if (checks.contains("decompose")) r.guarded("decompose", [&] {
        int index = 0;
        for (const auto& item : checks["decompose"]) {
            const std::string name = "decompose/" + std::to_string(index++);
            ichain c = parse_chain(item.at("chain"), g);
            std::multiset<std::pair<ichain, int>> expected;
            for (const auto& part : item.at("parts"))
                expected.insert({canonical(parse_chain(part.at(1), g)), part.at(0).get<int>()});
            std::multiset<std::pair<ichain, int>> got;
            for (const auto& part : decompose_into_minimal(g, c))
                got.insert({part.record.chain, part.sign});
            std::multiset<std::pair<ichain, int>> got_rev;
            for (const auto& part : decompose_into_minimal(g, c, default_minimal_budget, true))
                got_rev.insert({part.record.chain, part.sign});
            r.emit(name, got == expected && got_rev == expected);
        }
    });

    if (checks.contains("realizes")) r.guarded("realizes", [&] {
        int index = 0;
        for (const auto& item : checks["realizes"]) {
            const std::string name = "realizes/" + std::to_string(index++);
            ichain expected = parse_chain(item.at("push"), g);
            const int d = item.at("degree").get<int>();
            digraph_map m = parse_map(item.at("map"), cube(d, std::max(d, default_cube_cap)), g);
            if (!check_digraph_map(m)) {
                r.emit(name, false, "not a digraph map");
                continue;
            }
            ichain pushed = push_forward(m, omega(d, std::max(d, default_cube_cap)));
            bool ok = pushed == expected;
            if (item.contains("image_edges")) {
                digraph img = image_digraph(m);
                std::set<std::pair<std::string, std::string>> want;
                for (const auto& e : item["image_edges"])
                    want.insert({e.at(0).get<std::string>(), e.at(1).get<std::string>()});
                const auto img_edges = img.edge_labels();
                std::set<std::pair<std::string, std::string>> got(img_edges.begin(),
                                                                  img_edges.end());
                if (want != got) ok = false;
            }
            r.emit(name, ok);
        }
    });

    if (checks.contains("cube_pushes")) r.guarded("cube_pushes", [&] {
        int index = 0;
        for (const auto& item : checks["cube_pushes"]) {
            const std::string name = "cube_pushes/" + std::to_string(index++);
            singular_cube q = parse_cube(item.at("cube"), g);
            if (!check_digraph_map(cube_map(g, q))) {
                r.emit(name, false, "not a digraph map");
                continue;
            }
            ichain expected = parse_chain(item.at("chain"), g);
            ichain pushed = push_forward(cube_map(g, q),
                                         omega(q.degree, std::max(q.degree, default_cube_cap)));
            r.emit(name, pushed == expected && tau_chain_map_check(g, q));
        }
    });

    if (checks.contains("cube_identities")) r.guarded("cube_identities", [&] {
        for (const auto& item : checks["cube_identities"]) {
            const std::string name = "cube_identity/" + item.at("name").get<std::string>();
            int lhs_degree = 0, rhs_degree = 0;
            cube_chain lhs_cubes = signed_cubes(item.at("lhs_boundary_of"), g, lhs_degree);
            cube_chain rhs =
                item.contains("rhs") ? signed_cubes(item.at("rhs"), g, rhs_degree) : cube_chain{};
            bool ok = true;
            std::string detail;
            for (const auto& [assign, coef] : lhs_cubes) {
                singular_cube q{lhs_degree, assign};
                if (!check_digraph_map(cube_map(g, q))) {
                    ok = false;
                    detail = "lhs cube is not a digraph map";
                }
                if (is_degenerate(q)) {
                    ok = false;
                    detail = "lhs cube is degenerate";
                }
            }
            cube_chain residue = cubical_boundary(lhs_cubes, lhs_degree);
            for (const auto& [assign, coef] : rhs) {
                auto it = residue.find(assign);
                if (it == residue.end() || it->second != coef) {
                    ok = false;
                    detail = "tabulated face missing or with wrong sign";
                } else {
                    residue.erase(it);
                }
            }
            const std::string mode = item.value("mode", "exact");
            if (ok) {
                if (mode == "exact") {
                    if (!residue.empty()) {
                        ok = false;
                        detail = "nonzero residue in exact mode";
                    }
                } else if (mode == "tau_zero") {
                    if (!tau(g, residue, lhs_degree - 1).zero()) {
                        ok = false;
                        detail = "residue pushes to a nonzero chain";
                    }
                } else if (mode == "mod_thin" || mode == "null_homologous") {
                    if (mode == "mod_thin")
                        for (const auto& [assign, coef] : residue)
                            if (!is_edge_thin(g, singular_cube{lhs_degree - 1, assign})) {
                                ok = false;
                                detail = "residue cube is not edge-thin";
                            }
                    if (ok && !tau(g, residue, lhs_degree - 1).zero()) {
                        ok = false;
                        detail = "residue pushes to a nonzero chain";
                    }
                    if (ok && !bounds_in_normalized(g, residue, lhs_degree - 1)) {
                        ok = false;
                        detail = "residue is not a normalized boundary";
                    }
                } else {
                    ok = false;
                    detail = "unknown mode " + mode;
                }
            }
            r.emit(name, ok, detail);
        }
    });

    if (checks.contains("cube_restrictions")) r.guarded("cube_restrictions", [&] {
        int index = 0;
        for (const auto& item : checks["cube_restrictions"]) {
            const std::string name = "cube_restrictions/" + std::to_string(index++);
            singular_cube big = parse_cube(item.at("cube"), g);
            bool ok = check_digraph_map(cube_map(g, big));
            for (const auto& face_spec : item.at("faces")) {
                singular_cube expected = parse_cube(face_spec.at("equals"), g);
                singular_cube got = cube_face(big, face_spec.at("j").get<int>(),
                                              face_spec.at("epsilon").get<int>());
                if (got.assign != expected.assign) ok = false;
            }
            if (item.contains("degenerate_faces"))
                for (const auto& face_spec : item["degenerate_faces"]) {
                    singular_cube got = cube_face(big, face_spec.at(0).get<int>(),
                                                  face_spec.at(1).get<int>());
                    if (!is_degenerate(got)) ok = false;
                }
            r.emit(name, ok);
        }
    });

    if (checks.contains("exotic_cycle")) r.guarded("exotic_cycle", [&] {
        // Realize every admissible 2-path, orient the witnesses so their sum
        // is a normalized cycle, and certify the cycle does not bound.
        const auto& faces = ctx.admissible_at(2);
        std::vector<singular_cube> cubes;
        for (const auto& pr : faces) cubes.push_back(singular_cube{2, pr.witness.assign});
        const int m = static_cast<int>(cubes.size());
        std::map<std::vector<int>, int> edge_index;
        std::vector<std::vector<bigrat>> rows;
        auto touch = [&](const std::vector<int>& a) {
            auto [it, fresh] = edge_index.emplace(a, static_cast<int>(edge_index.size()));
            if (fresh) rows.emplace_back(static_cast<size_t>(m), bigrat(0));
            return it->second;
        };
        for (int i = 0; i < m; ++i)
            for (const auto& [fa, fc] : cubical_boundary(cubes[static_cast<size_t>(i)]))
                rows[static_cast<size_t>(touch(fa))][static_cast<size_t>(i)] = bigrat(fc);
        auto kb = kernel_basis_dense(rows, m);
        std::optional<std::vector<int>> signs;
        for (const auto& v : kb) {
            bool pm = true;
            for (const auto& x : v)
                if (x != 1 && x != -1) pm = false;
            if (pm) {
                std::vector<int> s;
                for (const auto& x : v) s.push_back(x == 1 ? 1 : -1);
                signs = s;
                break;
            }
        }
        if (!signs) {
            r.emit("exotic_cycle", false, "no +/-1 cycle over the face witnesses");
            return;
        }
        cube_chain phi;
        for (int i = 0; i < m; ++i)
            phi[cubes[static_cast<size_t>(i)].assign] = (*signs)[static_cast<size_t>(i)];
        bool cycle = cubical_boundary(phi, 2).empty();
        bool bounds = bounds_in_normalized(g, phi, 2);
        r.emit("exotic_cycle", cycle && !bounds,
               std::string(cycle ? "cycle" : "not a cycle") + ", " +
                   (bounds ? "bounds" : "non-bounding"));
    });
}

}  // namespace

fixture load_fixture(const std::string& id, const std::string& dir) {
    fs::path meta = fs::path(dir) / (id + ".json");
    if (!fs::exists(meta)) throw unknown_fixture_error(id);
    fixture fx;
    fx.id = id;
    fx.expectations_json = slurp(meta);
    json j = json::parse(fx.expectations_json);
    const std::string graph_file = j.value("digraph_file", id + ".digraph");
    fx.graph = parse_digraph(slurp(fs::path(dir) / graph_file));
    return fx;
}

corpus_report run_corpus(const std::string& filter, const std::string& dir) {
    corpus_report report;
    for (const auto& id : list_fixture_ids(dir)) {
        if (!filter.empty() && id.rfind(filter, 0) != 0) continue;
        try {
            fixture fx = load_fixture(id, dir);
            run_fixture(fx, report);
        } catch (const std::exception& e) {
            report.results.push_back({id, "load", false, e.what()});
            report.failed += 1;
        }
    }
    return report;
}

}  // namespace dicell
