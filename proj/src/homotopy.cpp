#include "dicell/homotopy.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace dicell {

bool verify_homotopy(const digraph_map& f, const digraph_map& g, const homotopy_witness& w) {
    if (!f.source.same_labelled_graph(g.source)) return false;
    if (!f.target.same_labelled_graph(g.target)) return false;
    const int n = static_cast<int>(w.signs.size());
    const digraph expected = cartesian_product(f.source, line_digraph(w.signs));
    if (w.big_map.source.vertex_count() != expected.vertex_count() ||
        w.big_map.source.edges() != expected.edges())
        return false;
    if (!w.big_map.target.same_labelled_graph(f.target)) return false;
    if (!check_digraph_map(w.big_map)) return false;
    const int steps = n + 1;
    for (int v = 0; v < f.source.vertex_count(); ++v) {
        if (w.big_map.assign[static_cast<size_t>(v * steps)] != f.assign[static_cast<size_t>(v)])
            return false;
        if (w.big_map.assign[static_cast<size_t>(v * steps + n)] != g.assign[static_cast<size_t>(v)])
            return false;
    }
    return true;
}

retraction_check verify_retraction(const digraph& g, const digraph& sub, const digraph_map& r) {
    retraction_check out;
    if (!is_subdigraph(sub, g)) return out;
    if (static_cast<int>(r.assign.size()) != g.vertex_count()) return out;

    // r must land in sub and move along sub edges (or collapse).
    std::set<int> sub_verts;
    std::set<std::pair<int, int>> sub_edges;
    for (const auto& l : sub.labels()) sub_verts.insert(g.index_of(l));
    for (auto [a, b] : sub.edge_labels()) sub_edges.insert({g.index_of(a), g.index_of(b)});

    out.is_map = true;
    for (int v : r.assign)
        if (!sub_verts.count(v)) out.is_map = false;
    if (out.is_map)
        for (auto [u, v] : g.edges()) {
            const int a = r.assign[static_cast<size_t>(u)], b = r.assign[static_cast<size_t>(v)];
            if (a != b && !sub_edges.count({a, b})) {
                out.is_map = false;
                break;
            }
        }
    out.fixes_sub = true;
    for (int sv : sub_verts)
        if (r.assign[static_cast<size_t>(sv)] != sv) out.fixes_sub = false;
    return out;
}

bool one_step_homotopic(const digraph& g, const std::vector<int>& f, const std::vector<int>& h) {
    auto dir_ok = [&](const std::vector<int>& lo, const std::vector<int>& hi) {
        for (int v = 0; v < g.vertex_count(); ++v)
            if (!g.step_ok(lo[static_cast<size_t>(v)], hi[static_cast<size_t>(v)])) return false;
        return true;
    };
    return dir_ok(f, h) || dir_ok(h, f);
}

namespace {

int image_size(const std::vector<int>& assign) {
    std::set<int> s(assign.begin(), assign.end());
    return static_cast<int>(s.size());
}

}  // namespace

std::optional<std::vector<digraph_map>> search_contraction(const digraph& g, int max_steps,
                                                           std::uint64_t budget_cap) {
    const int n = g.vertex_count();
    if (n == 0) return std::nullopt;
    std::vector<int> id(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) id[static_cast<size_t>(v)] = v;

    auto rebuild = [&](const std::vector<std::vector<int>>& states,
                       const std::vector<int>& parent, int leaf) {
        std::vector<digraph_map> chain;
        for (int at = leaf; at >= 0; at = parent[static_cast<size_t>(at)])
            chain.push_back(make_digraph_map(g, g, states[static_cast<size_t>(at)]));
        std::reverse(chain.begin(), chain.end());
        return chain;
    };

    std::vector<std::vector<int>> states{id};
    std::vector<int> parent{-1}, depth{0};
    std::set<std::vector<int>> visited{id};
    // Best-first on (image size, depth, assignment); deterministic order.
    std::set<std::tuple<int, int, std::vector<int>, int>> frontier;
    frontier.insert({image_size(id), 0, id, 0});
    search_budget budget{budget_cap};

    if (image_size(id) == 1) return rebuild(states, parent, 0);

    try {
        while (!frontier.empty()) {
            auto [isz, d, assign, idx] = *frontier.begin();
            frontier.erase(frontier.begin());
            if (d >= max_steps) continue;

            // All one-step successors in either line orientation.
            for (int dir = 0; dir < 2; ++dir) {
                std::vector<int> next(static_cast<size_t>(n), -1);
                std::optional<std::vector<digraph_map>> found;
                auto rec = [&](auto&& self, int v) -> bool {
                    budget.spend();
                    if (v == n) {
                        if (next == assign) return false;
                        if (!visited.insert(next).second) return false;
                        states.push_back(next);
                        parent.push_back(idx);
                        depth.push_back(d + 1);
                        const int ni = static_cast<int>(states.size()) - 1;
                        if (image_size(next) == 1) {
                            found = rebuild(states, parent, ni);
                            return true;
                        }
                        frontier.insert({image_size(next), d + 1, next, ni});
                        return false;
                    }
                    const int base = assign[static_cast<size_t>(v)];
                    std::vector<int> domain{base};
                    for (int w : dir == 0 ? g.out(base) : g.in(base)) domain.push_back(w);
                    std::sort(domain.begin(), domain.end());
                    for (int cand : domain) {
                        bool ok = true;
                        for (int u = 0; u < v && ok; ++u) {
                            if (g.has_edge(u, v) &&
                                !g.step_ok(next[static_cast<size_t>(u)], cand))
                                ok = false;
                            if (g.has_edge(v, u) &&
                                !g.step_ok(cand, next[static_cast<size_t>(u)]))
                                ok = false;
                        }
                        if (!ok) continue;
                        next[static_cast<size_t>(v)] = cand;
                        if (self(self, v + 1)) return true;
                        next[static_cast<size_t>(v)] = -1;
                    }
                    return false;
                };
                if (rec(rec, 0)) return found;
            }
        }
    } catch (const budget_exceeded_error&) {
        return std::nullopt;  // inconclusive
    }
    return std::nullopt;
}

}  // namespace dicell
