#include "dicell/digraph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace dicell {

digraph::digraph(std::string name, std::vector<std::string> labels,
                 std::vector<std::pair<int, int>> edges)
    : name_(std::move(name)), labels_(std::move(labels)) {
    const int n = static_cast<int>(labels_.size());
    {
        std::set<std::string> seen;
        for (const auto& l : labels_)
            if (!seen.insert(l).second) throw error("duplicate vertex label " + l);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    adj_.assign(n, std::vector<bool>(n, false));
    out_.assign(n, {});
    in_.assign(n, {});
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n) throw error("edge endpoint out of range");
        if (u == v) throw self_loop_error(labels_[u]);
        adj_[u][static_cast<size_t>(v)] = true;
        out_[u].push_back(v);
        in_[v].push_back(u);
    }
    edges_ = std::move(edges);
}

int digraph::index_of(const std::string& label) const {
    for (int i = 0; i < vertex_count(); ++i)
        if (labels_[i] == label) return i;
    return -1;
}

std::vector<std::pair<std::string, std::string>> digraph::edge_labels() const {
    std::vector<std::pair<std::string, std::string>> out;
    out.reserve(edges_.size());
    for (auto [u, v] : edges_) out.emplace_back(labels_[u], labels_[v]);
    return out;
}

bool digraph::same_labelled_graph(const digraph& other) const {
    if (labels_ != other.labels_) return false;
    return edges_ == other.edges_;
}

digraph build_digraph(const std::vector<std::string>& vertices,
                      const std::vector<std::pair<std::string, std::string>>& edges,
                      const std::string& name) {
    std::map<std::string, int> index;
    for (int i = 0; i < static_cast<int>(vertices.size()); ++i) index.emplace(vertices[i], i);
    std::vector<std::pair<int, int>> idx_edges;
    idx_edges.reserve(edges.size());
    for (const auto& [a, b] : edges) {
        auto ia = index.find(a), ib = index.find(b);
        if (ia == index.end()) throw unknown_vertex_error(a);
        if (ib == index.end()) throw unknown_vertex_error(b);
        if (ia->second == ib->second) throw self_loop_error(a);
        idx_edges.emplace_back(ia->second, ib->second);
    }
    return digraph(name, vertices, std::move(idx_edges));
}

digraph cartesian_product(const digraph& g, const digraph& h) {
    const int ng = g.vertex_count(), nh = h.vertex_count();
    std::vector<std::string> labels;
    labels.reserve(static_cast<size_t>(ng) * nh);
    for (int a = 0; a < ng; ++a)
        for (int b = 0; b < nh; ++b)
            labels.push_back("(" + g.label(a) + "," + h.label(b) + ")");
    std::vector<std::pair<int, int>> edges;
    auto id = [nh](int a, int b) { return a * nh + b; };
    for (int a = 0; a < ng; ++a)
        for (auto [u, v] : h.edges()) edges.emplace_back(id(a, u), id(a, v));
    for (auto [u, v] : g.edges())
        for (int b = 0; b < nh; ++b) edges.emplace_back(id(u, b), id(v, b));
    return digraph(g.name() + "*" + h.name(), std::move(labels), std::move(edges));
}

digraph cube(int n, int cap) {
    if (n < 0) throw error("cube dimension must be non-negative");
    if (n > cap)
        throw cap_exceeded_error("cube dimension " + std::to_string(n) +
                                 " exceeds cap " + std::to_string(cap));
    if (n == 0) return digraph("I^0", {"0"}, {});
    const int size = 1 << n;
    std::vector<std::string> labels(static_cast<size_t>(size));
    for (int v = 0; v < size; ++v) {
        std::string bits(static_cast<size_t>(n), '0');
        for (int i = 0; i < n; ++i)
            if (v & (1 << (n - 1 - i))) bits[static_cast<size_t>(i)] = '1';
        labels[static_cast<size_t>(v)] = bits;
    }
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < size; ++v)
        for (int i = 0; i < n; ++i)
            if (!(v & (1 << i))) edges.emplace_back(v, v | (1 << i));
    return digraph("I^" + std::to_string(n), std::move(labels), std::move(edges));
}

digraph line_digraph(const std::vector<bool>& signs) {
    const int n = static_cast<int>(signs.size());
    std::vector<std::string> labels;
    for (int i = 0; i <= n; ++i) labels.push_back(std::to_string(i));
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) {
        if (signs[static_cast<size_t>(i)])
            edges.emplace_back(i, i + 1);
        else
            edges.emplace_back(i + 1, i);
    }
    return digraph("line", std::move(labels), std::move(edges));
}

digraph circulant(int n, const std::vector<int>& jumps) {
    if (n <= 0) throw error("circulant order must be positive");
    int prev = 1;
    for (int j : jumps) {
        if (j < prev || j > n / 2)
            throw bad_jump_error("jump " + std::to_string(j) + " violates 1 <= g_1 <= ... <= g_d <= n/2");
        prev = j;
    }
    std::vector<std::string> labels;
    for (int v = 0; v < n; ++v) labels.push_back(std::to_string(v));
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n; ++v)
        for (int j : jumps) edges.emplace_back(v, (v + j) % n);
    std::string nm = "C" + std::to_string(n) + "^";
    for (size_t i = 0; i < jumps.size(); ++i) nm += (i ? "," : "") + std::to_string(jumps[i]);
    return digraph(nm, std::move(labels), std::move(edges));
}

digraph johnson(int n, int k) {
    if (k < 1 || k > n) throw error("johnson requires 1 <= k <= n");
    // All k-subsets of {1..n} in lexicographic order.
    std::vector<std::vector<int>> subsets;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int next) -> void {
        if (static_cast<int>(cur.size()) == k) {
            subsets.push_back(cur);
            return;
        }
        for (int v = next; v <= n; ++v) {
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    rec(rec, 1);

    auto subset_label = [](const std::vector<int>& s) {
        std::string l = "{";
        for (size_t i = 0; i < s.size(); ++i) l += (i ? "," : "") + std::to_string(s[i]);
        return l + "}";
    };
    std::map<std::vector<int>, int> index;
    std::vector<std::string> labels;
    for (int i = 0; i < static_cast<int>(subsets.size()); ++i) {
        index.emplace(subsets[static_cast<size_t>(i)], i);
        labels.push_back(subset_label(subsets[static_cast<size_t>(i)]));
    }
    // a -> b when b replaces one element c0 of a by a smaller c0' not in a.
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < static_cast<int>(subsets.size()); ++i) {
        const auto& a = subsets[static_cast<size_t>(i)];
        for (int c0 : a)
            for (int c0p = 1; c0p < c0; ++c0p) {
                if (std::find(a.begin(), a.end(), c0p) != a.end()) continue;
                std::vector<int> b;
                for (int x : a)
                    if (x != c0) b.push_back(x);
                b.push_back(c0p);
                std::sort(b.begin(), b.end());
                edges.emplace_back(i, index.at(b));
            }
    }
    return digraph("J(" + std::to_string(n) + "," + std::to_string(k) + ")",
                   std::move(labels), std::move(edges));
}

digraph k_square(int k) {
    if (k < 1) throw error("k_square requires k >= 1");
    std::vector<std::string> labels{"S"};
    for (int i = 1; i <= k; ++i) labels.push_back(std::to_string(i));
    labels.push_back("E");
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= k; ++i) {
        edges.emplace_back(0, i);
        edges.emplace_back(i, k + 1);
    }
    return digraph("S" + std::to_string(k), std::move(labels), std::move(edges));
}

digraph exotic_cube() {
    std::vector<std::string> labels;
    for (int v = 0; v <= 8; ++v) labels.push_back(std::to_string(v));
    std::vector<std::pair<int, int>> edges = {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 5},
                                              {1, 8}, {2, 5}, {2, 6}, {3, 6}, {3, 7},
                                              {4, 7}, {4, 8}, {5, 8}, {6, 8}, {7, 8}};
    return digraph("exotic", std::move(labels), std::move(edges));
}

bool is_acyclic(const digraph& g) {
    const int n = g.vertex_count();
    std::vector<int> state(static_cast<size_t>(n), 0);  // 0 new, 1 on stack, 2 done
    std::vector<std::pair<int, size_t>> stack;
    for (int s = 0; s < n; ++s) {
        if (state[static_cast<size_t>(s)] != 0) continue;
        stack.emplace_back(s, 0);
        state[static_cast<size_t>(s)] = 1;
        while (!stack.empty()) {
            auto& [v, i] = stack.back();
            if (i < g.out(v).size()) {
                int w = g.out(v)[i++];
                if (state[static_cast<size_t>(w)] == 1) return false;
                if (state[static_cast<size_t>(w)] == 0) {
                    state[static_cast<size_t>(w)] = 1;
                    stack.emplace_back(w, 0);
                }
            } else {
                state[static_cast<size_t>(v)] = 2;
                stack.pop_back();
            }
        }
    }
    return true;
}

digraph_map make_digraph_map(const digraph& source, const digraph& target,
                             const std::vector<int>& assign) {
    if (static_cast<int>(assign.size()) != source.vertex_count())
        throw error("assignment must cover every source vertex");
    for (int t : assign)
        if (t < 0 || t >= target.vertex_count()) throw error("assignment target out of range");
    return digraph_map{source, target, assign};
}

digraph_map make_digraph_map_by_label(
    const digraph& source, const digraph& target,
    const std::vector<std::pair<std::string, std::string>>& assign) {
    std::vector<int> a(static_cast<size_t>(source.vertex_count()), -1);
    for (const auto& [s, t] : assign) {
        int si = source.index_of(s);
        if (si < 0) throw unknown_vertex_error(s);
        int ti = target.index_of(t);
        if (ti < 0) throw unknown_vertex_error(t);
        a[static_cast<size_t>(si)] = ti;
    }
    for (int i = 0; i < source.vertex_count(); ++i)
        if (a[static_cast<size_t>(i)] < 0) throw error("vertex " + source.label(i) + " unassigned");
    return digraph_map{source, target, a};
}

bool check_digraph_map(const digraph_map& f) {
    for (auto [u, v] : f.source.edges())
        if (!f.target.step_ok(f.assign[static_cast<size_t>(u)], f.assign[static_cast<size_t>(v)]))
            return false;
    return true;
}

digraph_map compose(const digraph_map& g, const digraph_map& f) {
    if (!f.target.same_labelled_graph(g.source))
        throw error("compose: inner target differs from outer source");
    std::vector<int> a(f.assign.size());
    for (size_t i = 0; i < f.assign.size(); ++i)
        a[i] = g.assign[static_cast<size_t>(f.assign[i])];
    return digraph_map{f.source, g.target, std::move(a)};
}

digraph image_digraph(const digraph_map& f) {
    if (!check_digraph_map(f)) throw not_digraph_map_error();
    std::set<int> verts(f.assign.begin(), f.assign.end());
    std::set<std::pair<int, int>> edges;
    for (auto [u, v] : f.source.edges()) {
        int a = f.assign[static_cast<size_t>(u)], b = f.assign[static_cast<size_t>(v)];
        if (a != b) edges.insert({a, b});
    }
    return subdigraph(f.target, {verts.begin(), verts.end()}, {edges.begin(), edges.end()});
}

digraph subdigraph(const digraph& g, const std::vector<int>& vertices,
                   const std::vector<std::pair<int, int>>& edges) {
    std::vector<int> verts = vertices;
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    std::vector<int> pos(static_cast<size_t>(g.vertex_count()), -1);
    std::vector<std::string> labels;
    for (int i = 0; i < static_cast<int>(verts.size()); ++i) {
        pos[static_cast<size_t>(verts[static_cast<size_t>(i)])] = i;
        labels.push_back(g.label(verts[static_cast<size_t>(i)]));
    }
    std::vector<std::pair<int, int>> sub_edges;
    for (auto [u, v] : edges) {
        if (!g.has_edge(u, v)) throw error("subdigraph edge not present in parent");
        if (pos[static_cast<size_t>(u)] < 0 || pos[static_cast<size_t>(v)] < 0)
            throw error("subdigraph edge endpoint not in vertex list");
        sub_edges.emplace_back(pos[static_cast<size_t>(u)], pos[static_cast<size_t>(v)]);
    }
    return digraph(g.name(), std::move(labels), std::move(sub_edges));
}

bool is_subdigraph(const digraph& sub, const digraph& g) {
    for (const auto& l : sub.labels())
        if (g.index_of(l) < 0) return false;
    for (auto [a, b] : sub.edge_labels())
        if (!g.has_edge(g.index_of(a), g.index_of(b))) return false;
    return true;
}

}  // namespace dicell
