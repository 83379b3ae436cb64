#include "dicell/realization.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace dicell {

namespace {

std::vector<int> bfs_dist(const digraph& g, int source, bool reverse) {
    std::vector<int> d(static_cast<size_t>(g.vertex_count()), -1);
    std::queue<int> q;
    d[static_cast<size_t>(source)] = 0;
    q.push(source);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : reverse ? g.in(v) : g.out(v))
            if (d[static_cast<size_t>(w)] < 0) {
                d[static_cast<size_t>(w)] = d[static_cast<size_t>(v)] + 1;
                q.push(w);
            }
    }
    return d;
}

bigint factorial(int n) {
    bigint f(1);
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

}  // namespace

std::optional<std::string> quick_reject(const digraph& g, const minimal_path_record& p) {
    const int n = p.degree();
    if (bigint(p.supp.vertex_count()) > (bigint(1) << n))
        return "vertex bound: |V(Supp)| = " + std::to_string(p.supp.vertex_count()) + " > 2^" +
               std::to_string(n);
    if (bigint(p.chain.term_count()) > factorial(n))
        return "elementary component bound: NE = " + std::to_string(p.chain.term_count()) +
               " > " + factorial(n).str();
    const bigint cube_edges = n == 0 ? bigint(0) : bigint(n) * (bigint(1) << (n - 1));
    if (bigint(p.supp.edge_count()) > cube_edges)
        return "edge bound: |E(Supp)| = " + std::to_string(p.supp.edge_count()) + " > " +
               cube_edges.str();
    if (n >= 1) {
        ichain bd = boundary(p.chain);
        if (!bd.zero()) {
            const int nf = static_cast<int>(decompose_into_minimal(g, bd).size());
            if (nf > 2 * n)
                return "face component bound: NF = " + std::to_string(nf) + " > " +
                       std::to_string(2 * n);
        }
    }
    return std::nullopt;
}

std::optional<admissible_pair> find_realization(const digraph& g, const minimal_path_record& p,
                                                std::uint64_t budget_cap) {
    const int n = p.degree();
    if (n < 0) return std::nullopt;
    const digraph cb = cube(n, std::max(n, default_cube_cap));
    const int cube_size = 1 << n;

    // Support vertices as ambient indices, in canonical (ambient) order.
    std::vector<int> support;
    for (const auto& l : p.supp.labels()) support.push_back(g.index_of(l));
    std::vector<bool> in_support(static_cast<size_t>(g.vertex_count()), false);
    for (int v : support) in_support[static_cast<size_t>(v)] = true;

    // Support adjacency in ambient indices; image steps must stay inside it.
    std::set<std::pair<int, int>> supp_edges;
    for (auto [a, b] : p.supp.edge_labels())
        supp_edges.insert({g.index_of(a), g.index_of(b)});
    auto supp_step = [&](int a, int b) {
        return a == b || supp_edges.count({a, b}) != 0;
    };

    if (n == 0) {
        admissible_pair pair{p, make_digraph_map(cb, g, {p.start}), bigint(1)};
        return verify_admissible_pair(g, pair) ? std::optional(pair) : std::nullopt;
    }

    // Distances within the support bound the image of each cube layer.
    const digraph supp_view = p.supp;
    std::vector<int> ds = bfs_dist(supp_view, supp_view.index_of(g.label(p.start)), false);
    std::vector<int> de = bfs_dist(supp_view, supp_view.index_of(g.label(p.end)), true);
    std::vector<int> dist_s(static_cast<size_t>(g.vertex_count()), -1),
        dist_e(static_cast<size_t>(g.vertex_count()), -1);
    for (int i = 0; i < supp_view.vertex_count(); ++i) {
        const int amb = g.index_of(supp_view.label(i));
        dist_s[static_cast<size_t>(amb)] = ds[static_cast<size_t>(i)];
        dist_e[static_cast<size_t>(amb)] = de[static_cast<size_t>(i)];
    }

    // Assignment order: Hamming weight, then numeric index.
    std::vector<int> order;
    for (int w = 0; w <= n; ++w)
        for (int v = 0; v < cube_size; ++v)
            if (__builtin_popcount(static_cast<unsigned>(v)) == w) order.push_back(v);
    std::vector<int> weight(static_cast<size_t>(cube_size));
    for (int v = 0; v < cube_size; ++v)
        weight[static_cast<size_t>(v)] = __builtin_popcount(static_cast<unsigned>(v));
    // Lower cube neighbors (predecessors) of each vertex.
    std::vector<std::vector<int>> preds(static_cast<size_t>(cube_size));
    for (int v = 0; v < cube_size; ++v)
        for (int i = 0; i < n; ++i)
            if (v & (1 << i)) preds[static_cast<size_t>(v)].push_back(v & ~(1 << i));

    const int total_cube_edges = n * (1 << (n - 1));
    const int supp_edge_count = static_cast<int>(supp_edges.size());

    std::vector<int> assign(static_cast<size_t>(cube_size), -1);
    std::map<std::pair<int, int>, int> edge_cover;  // support edge -> multiplicity
    int covered = 0, completed_edges = 0;
    search_budget budget{budget_cap};
    const ichain wn = omega(n, std::max(n, default_cube_cap));

    // Weight-1 images sorted non-decreasingly: coordinate permutations of the
    // cube act on witnesses, so one representative per orbit suffices.
    std::vector<int> axis_order;
    for (int i = 0; i < n; ++i) axis_order.push_back(1 << i);

    std::optional<admissible_pair> found;

    auto rec = [&](auto&& self, size_t oi) -> void {
        if (found) return;
        if (oi == order.size()) {
            if (covered != supp_edge_count) return;
            digraph_map f = make_digraph_map(cb, g, assign);
            ichain pushed = push_forward(f, wn);
            if (pushed.zero()) return;
            const path& probe = p.chain.terms().begin()->first;
            const bigint c = pushed.coeff(probe);
            if (c == 0) return;
            ichain scaled = p.chain;
            scaled *= c;
            if (pushed != scaled) return;
            std::set<int> image_verts(assign.begin(), assign.end());
            if (static_cast<int>(image_verts.size()) != static_cast<int>(support.size())) return;
            found = admissible_pair{p, f, c};
            return;
        }
        budget.spend();
        const int v = order[oi];
        std::vector<int> candidates;
        if (v == 0)
            candidates = {p.start};
        else if (v == cube_size - 1)
            candidates = {p.end};
        else
            candidates = support;
        for (int target : candidates) {
            if (dist_s[static_cast<size_t>(target)] < 0 ||
                dist_s[static_cast<size_t>(target)] > weight[static_cast<size_t>(v)])
                continue;
            if (dist_e[static_cast<size_t>(target)] < 0 ||
                dist_e[static_cast<size_t>(target)] > n - weight[static_cast<size_t>(v)])
                continue;
            if (weight[static_cast<size_t>(v)] == 1 && v != axis_order[0]) {
                // enforce sorted axis images
                int prev_axis = -1;
                for (int a : axis_order)
                    if (a == v) break;
                    else prev_axis = a;
                if (assign[static_cast<size_t>(prev_axis)] > target) continue;
            }
            bool ok = true;
            for (int u : preds[static_cast<size_t>(v)])
                if (!supp_step(assign[static_cast<size_t>(u)], target)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;

            assign[static_cast<size_t>(v)] = target;
            std::vector<std::pair<int, int>> newly;
            for (int u : preds[static_cast<size_t>(v)]) {
                const int a = assign[static_cast<size_t>(u)];
                if (a == target) continue;
                auto [it, fresh] = edge_cover.emplace(std::pair{a, target}, 0);
                if (it->second == 0) ++covered;
                it->second += 1;
                newly.emplace_back(a, target);
            }
            completed_edges += static_cast<int>(preds[static_cast<size_t>(v)].size());
            if (covered + (total_cube_edges - completed_edges) >= supp_edge_count)
                self(self, oi + 1);
            completed_edges -= static_cast<int>(preds[static_cast<size_t>(v)].size());
            for (auto e : newly) {
                auto it = edge_cover.find(e);
                it->second -= 1;
                if (it->second == 0) --covered;
            }
            assign[static_cast<size_t>(v)] = -1;
            if (found) return;
        }
    };
    rec(rec, 0);
    return found;
}

bool verify_admissible_pair(const digraph& g, const admissible_pair& pair) {
    const int n = pair.path.degree();
    if (pair.scale == 0) return false;
    if (pair.witness.source.vertex_count() != (1 << n)) return false;
    if (!check_digraph_map(pair.witness)) return false;
    // corners map to S and E
    if (pair.witness.assign.front() != pair.path.start) return false;
    if (pair.witness.assign.back() != pair.path.end) return false;
    ichain pushed = push_forward(pair.witness, omega(n, std::max(n, default_cube_cap)));
    ichain scaled = pair.path.chain;
    scaled *= pair.scale;
    if (pushed != scaled) return false;
    digraph img = image_digraph(pair.witness);
    if (img.labels() != pair.path.supp.labels()) return false;
    return img.edge_labels() == pair.path.supp.edge_labels();
}

std::vector<admissible_pair> admissible_set(const digraph& g, int n, std::uint64_t budget) {
    std::vector<admissible_pair> out;
    for (const auto& rec : enumerate_minimal_paths(g, n)) {
        if (quick_reject(g, rec)) continue;
        if (auto pair = find_realization(g, rec, budget)) out.push_back(std::move(*pair));
    }
    return out;
}

std::vector<std::string> check_face_admissibility(const digraph& g, const admissible_pair& p,
                                                  std::uint64_t budget) {
    std::vector<std::string> violations;
    ichain bd = boundary(p.path.chain);
    if (bd.zero()) return violations;
    for (const auto& comp : decompose_into_minimal(g, bd)) {
        if (auto reason = quick_reject(g, comp.record)) {
            violations.push_back("face " + format_chain(comp.record.chain, g) +
                                 " rejected: " + *reason);
            continue;
        }
        if (!find_realization(g, comp.record, budget))
            violations.push_back("face " + format_chain(comp.record.chain, g) +
                                 " has no singular cubical realization");
    }
    return violations;
}

}  // namespace dicell
