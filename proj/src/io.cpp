#include "dicell/io.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace dicell {

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

digraph parse_digraph_json(const std::string& input) {
    nlohmann::json j = nlohmann::json::parse(input);
    std::string name = j.value("name", "");
    std::vector<std::string> vertices;
    for (const auto& v : j.at("vertices")) vertices.push_back(v.get<std::string>());
    std::vector<std::pair<std::string, std::string>> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw parse_error(0, "edge must be a 2-element list");
        edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
    }
    return build_digraph(vertices, edges, name);
}

}  // namespace

digraph parse_digraph(const std::string& input) {
    const std::string body = trim(input);
    if (!body.empty() && body.front() == '{') {
        try {
            return parse_digraph_json(input);
        } catch (const nlohmann::json::exception& e) {
            throw parse_error(0, e.what());
        }
    }
    std::istringstream is(input);
    std::string line, name;
    std::vector<std::string> vertices;
    std::vector<std::pair<std::string, std::string>> edges;
    auto declare = [&](const std::string& v) {
        if (std::find(vertices.begin(), vertices.end(), v) == vertices.end())
            vertices.push_back(v);
    };
    int line_no = 0;
    while (std::getline(is, line)) {
        ++line_no;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        if (t.rfind("digraph ", 0) == 0 && name.empty() && vertices.empty()) {
            name = trim(t.substr(8));
            continue;
        }
        size_t arrow = t.find("->");
        if (arrow == std::string::npos) {
            // bare vertex declaration
            if (t.find(' ') != std::string::npos)
                throw parse_error(line_no, "expected '<token> -> <token>' or a single token");
            declare(t);
            continue;
        }
        std::string a = trim(t.substr(0, arrow));
        std::string b = trim(t.substr(arrow + 2));
        if (a.empty() || b.empty()) throw parse_error(line_no, "missing edge endpoint");
        if (a == b) throw self_loop_error(a);
        declare(a);
        declare(b);
        edges.emplace_back(a, b);
    }
    return build_digraph(vertices, edges, name);
}

std::string serialize_digraph_text(const digraph& g) {
    std::ostringstream os;
    if (!g.name().empty()) os << "digraph " << g.name() << "\n";
    // every vertex declared up front so the canonical order survives parsing
    for (int v = 0; v < g.vertex_count(); ++v) os << g.label(v) << "\n";
    for (auto [u, v] : g.edges()) os << g.label(u) << " -> " << g.label(v) << "\n";
    return os.str();
}

std::string serialize_digraph_json(const digraph& g) {
    nlohmann::json j;
    j["name"] = g.name();
    j["vertices"] = g.labels();
    auto edges = nlohmann::json::array();
    for (auto [a, b] : g.edge_labels()) edges.push_back({a, b});
    j["edges"] = edges;
    return j.dump(2);
}

std::string to_dot(const digraph& g) {
    std::ostringstream os;
    os << "digraph \"" << (g.name().empty() ? "G" : g.name()) << "\" {\n";
    for (int v = 0; v < g.vertex_count(); ++v) os << "  \"" << g.label(v) << "\";\n";
    for (auto [a, b] : g.edge_labels()) os << "  \"" << a << "\" -> \"" << b << "\";\n";
    os << "}\n";
    return os.str();
}

namespace {

nlohmann::json chain_to_json(const qchain& c, const digraph& g) {
    auto arr = nlohmann::json::array();
    for (const auto& [p, coef] : c.terms()) {
        auto verts = nlohmann::json::array();
        for (int v : p.v) verts.push_back(g.label(v));
        arr.push_back({{"coeff", coef.str()}, {"vertices", verts}});
    }
    return arr;
}

}  // namespace

std::string report_to_json(const homology_report& rep, const digraph& g) {
    nlohmann::json j;
    j["digraph"] = rep.digraph_name;
    j["reduced"] = rep.reduced;
    j["betti"] = rep.betti();
    auto rows = nlohmann::json::array();
    for (const auto& r : rep.rows) {
        nlohmann::json row;
        row["degree"] = r.degree;
        row["dim"] = r.dim;
        row["rank_boundary"] = r.rank_down;
        row["betti"] = r.betti;
        if (r.upper_bound_only) row["upper_bound_only"] = true;
        auto gens = nlohmann::json::array();
        for (const auto& c : r.generators) gens.push_back(chain_to_json(c, g));
        row["generators"] = gens;
        rows.push_back(row);
    }
    j["rows"] = rows;
    return j.dump(2);
}

std::string report_to_text(const homology_report& rep, const digraph& g) {
    std::ostringstream os;
    os << (rep.reduced ? "reduced homology of " : "homology of ") << rep.digraph_name << "\n";
    os << "betti:";
    for (int b : rep.betti()) os << " " << b;
    os << "\n";
    for (const auto& r : rep.rows) {
        os << "  degree " << r.degree << ": dim " << r.dim << ", rank d " << r.rank_down
           << ", betti " << r.betti;
        if (r.upper_bound_only) os << " (upper bound)";
        os << "\n";
        for (const auto& c : r.generators) os << "    generator " << format_chain(c, g) << "\n";
    }
    return os.str();
}

}  // namespace dicell
