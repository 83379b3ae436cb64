#include "dicell/cubical.hpp"

#include <algorithm>

namespace dicell {

namespace {

bool degenerate_assign(const std::vector<int>& assign, int n) {
    const int size = 1 << n;
    for (int j = 0; j < n; ++j) {
        const int bit = 1 << (n - 1 - j);
        bool independent = true;
        for (int v = 0; v < size && independent; ++v)
            if (!(v & bit) && assign[static_cast<size_t>(v)] != assign[static_cast<size_t>(v | bit)])
                independent = false;
        if (independent) return true;
    }
    return false;
}

}  // namespace

std::vector<singular_cube> enumerate_singular_cubes(const digraph& g, int n,
                                                    search_budget* budget) {
    if (n < 0) return {};
    const int size = 1 << n;
    // Assignment proceeds by Hamming weight so every cube in-edge of a fresh
    // vertex is already pinned.
    std::vector<int> order;
    for (int w = 0; w <= n; ++w)
        for (int v = 0; v < size; ++v)
            if (__builtin_popcount(static_cast<unsigned>(v)) == w) order.push_back(v);
    std::vector<std::vector<int>> preds(static_cast<size_t>(size));
    for (int v = 0; v < size; ++v)
        for (int i = 0; i < n; ++i)
            if (v & (1 << i)) preds[static_cast<size_t>(v)].push_back(v & ~(1 << i));

    std::vector<singular_cube> out;
    std::vector<int> assign(static_cast<size_t>(size), -1);
    auto rec = [&](auto&& self, size_t oi) -> void {
        if (oi == order.size()) {
            out.push_back(singular_cube{n, assign});
            return;
        }
        if (budget) budget->spend();
        const int v = order[oi];
        for (int target = 0; target < g.vertex_count(); ++target) {
            bool ok = true;
            for (int u : preds[static_cast<size_t>(v)])
                if (!g.step_ok(assign[static_cast<size_t>(u)], target)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            assign[static_cast<size_t>(v)] = target;
            self(self, oi + 1);
            assign[static_cast<size_t>(v)] = -1;
        }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

bool is_degenerate(const singular_cube& q) {
    return q.degree >= 1 && degenerate_assign(q.assign, q.degree);
}

singular_cube cube_face(const singular_cube& q, int j, int epsilon) {
    const int n = q.degree;
    if (j < 1 || j > n) throw error("cube face index out of range");
    singular_cube out;
    out.degree = n - 1;
    const int low_bits = n - j;
    const int sub_size = 1 << (n - 1);
    out.assign.resize(static_cast<size_t>(sub_size));
    for (int v = 0; v < sub_size; ++v) {
        const int high = v >> low_bits;
        const int low = v & ((1 << low_bits) - 1);
        const int full = (high << (low_bits + 1)) | (epsilon << low_bits) | low;
        out.assign[static_cast<size_t>(v)] = q.assign[static_cast<size_t>(full)];
    }
    return out;
}

cube_chain cubical_boundary(const singular_cube& q, bool normalize) {
    cube_chain out;
    const int n = q.degree;
    for (int j = 1; j <= n; ++j) {
        const bigint sign = (j % 2 == 0) ? 1 : -1;
        for (int eps = 0; eps <= 1; ++eps) {
            singular_cube f = cube_face(q, j, eps);
            if (normalize && f.degree >= 1 && degenerate_assign(f.assign, f.degree)) continue;
            const bigint coef = eps == 0 ? sign : -sign;
            auto [it, fresh] = out.emplace(f.assign, coef);
            if (!fresh) {
                it->second += coef;
                if (it->second == 0) out.erase(it);
            }
        }
    }
    return out;
}

cube_chain cubical_boundary(const cube_chain& c, int degree, bool normalize) {
    cube_chain out;
    for (const auto& [assign, coef] : c) {
        for (const auto& [fa, fc] : cubical_boundary(singular_cube{degree, assign}, normalize)) {
            auto [it, fresh] = out.emplace(fa, fc * coef);
            if (!fresh) {
                it->second += fc * coef;
                if (it->second == 0) out.erase(it);
            }
        }
    }
    return out;
}

digraph_map cube_map(const digraph& g, const singular_cube& q) {
    return make_digraph_map(cube(q.degree, std::max(q.degree, default_cube_cap)), g, q.assign);
}

ichain tau(const digraph& g, const cube_chain& c, int degree) {
    ichain out;
    const ichain w = omega(degree, std::max(degree, default_cube_cap));
    for (const auto& [assign, coef] : c) {
        ichain pushed = push_forward(cube_map(g, singular_cube{degree, assign}), w);
        pushed *= coef;
        out += pushed;
    }
    return out;
}

bool is_edge_thin(const digraph& g, const singular_cube& q) {
    return image_digraph(cube_map(g, q)).edge_count() <= 1;
}

bool bounds_in_normalized(const digraph& g, const cube_chain& c, int degree,
                          search_budget* budget) {
    if (c.empty()) return true;
    std::map<std::vector<int>, int> index;
    for (const auto& q : enumerate_singular_cubes(g, degree, budget))
        if (!is_degenerate(q)) index.emplace(q.assign, static_cast<int>(index.size()));
    for (const auto& [assign, coef] : c)
        if (!index.count(assign)) return false;  // degenerate or foreign term

    std::vector<std::map<int, bigint>> rows;
    for (const auto& q : enumerate_singular_cubes(g, degree + 1, budget)) {
        if (is_degenerate(q)) continue;
        std::map<int, bigint> row;
        for (const auto& [fa, fc] : cubical_boundary(q)) row.emplace(index.at(fa), fc);
        if (!row.empty()) rows.push_back(std::move(row));
    }
    const int base = sparse_rank(rows);
    std::map<int, bigint> target;
    for (const auto& [assign, coef] : c) target.emplace(index.at(assign), coef);
    rows.push_back(std::move(target));
    return sparse_rank(std::move(rows)) == base;
}

homology_report cubical_homology(const digraph& g, int max_degree, int cap,
                                 std::uint64_t budget_cap) {
    if (max_degree > cap)
        throw cap_exceeded_error("cubical degree " + std::to_string(max_degree) +
                                 " exceeds cap " + std::to_string(cap));
    search_budget budget{budget_cap};
    const int enum_top = std::min(max_degree + 1, cap);

    // Non-degenerate cubes per degree, indexed for the boundary matrices.
    std::vector<std::vector<singular_cube>> cubes(static_cast<size_t>(enum_top) + 1);
    std::vector<std::map<std::vector<int>, int>> index(static_cast<size_t>(enum_top) + 1);
    for (int d = 0; d <= enum_top; ++d) {
        for (auto& q : enumerate_singular_cubes(g, d, &budget))
            if (!is_degenerate(q)) {
                index[static_cast<size_t>(d)].emplace(q.assign,
                                                      static_cast<int>(cubes[static_cast<size_t>(d)].size()));
                cubes[static_cast<size_t>(d)].push_back(std::move(q));
            }
    }

    // rank of the boundary degree d -> d-1 (rows = columns of the transpose,
    // one row per d-cube keeps the elimination short and sparse).
    std::vector<int> rank_down(static_cast<size_t>(enum_top) + 1, 0);
    for (int d = 1; d <= enum_top; ++d) {
        std::vector<std::map<int, bigint>> rows;
        rows.reserve(cubes[static_cast<size_t>(d)].size());
        for (const auto& q : cubes[static_cast<size_t>(d)]) {
            std::map<int, bigint> row;
            for (const auto& [fa, fc] : cubical_boundary(q))
                row.emplace(index[static_cast<size_t>(d - 1)].at(fa), fc);
            rows.push_back(std::move(row));
        }
        rank_down[static_cast<size_t>(d)] = sparse_rank(std::move(rows));
    }

    homology_report rep;
    rep.digraph_name = g.name();
    for (int d = 0; d <= max_degree; ++d) {
        homology_report::row row;
        row.degree = d;
        row.dim = static_cast<int>(cubes[static_cast<size_t>(d)].size());
        row.rank_down = d == 0 ? 0 : rank_down[static_cast<size_t>(d)];
        const int rank_up = d + 1 <= enum_top ? rank_down[static_cast<size_t>(d + 1)] : 0;
        row.betti = row.dim - row.rank_down - rank_up;
        row.upper_bound_only = d + 1 > enum_top;
        rep.rows.push_back(row);
    }
    return rep;
}

bool tau_chain_map_check(const digraph& g, const singular_cube& q) {
    const int n = q.degree;
    if (n < 1) return true;
    digraph_map f = cube_map(g, q);
    ichain lhs = boundary(push_forward(f, omega(n, std::max(n, default_cube_cap))));
    ichain rhs;
    const ichain wm = omega(n - 1, std::max(n - 1, default_cube_cap));
    for (int j = 1; j <= n; ++j) {
        const bigint sign = (j % 2 == 0) ? 1 : -1;
        for (int eps = 0; eps <= 1; ++eps) {
            digraph_map fr = cube_map(g, cube_face(q, j, eps));
            ichain pushed = push_forward(fr, wm);
            pushed *= (eps == 0 ? sign : -sign);
            rhs += pushed;
        }
    }
    return lhs == rhs;
}

probe_report conjecture_probe(const digraph& g, int max_degree, int cap,
                              std::uint64_t budget) {
    probe_report rep;
    homology_report cell = cellular_homology(g);
    homology_report cub;
    try {
        cub = cubical_homology(g, max_degree, cap, budget);
    } catch (const budget_exceeded_error&) {
        rep.budget_exceeded = true;
        return rep;
    }
    for (int d = 0; d <= max_degree; ++d) {
        probe_report::row row;
        row.degree = d;
        row.betti_cellular = cell.betti_at(d);
        row.betti_cubical = cub.betti_at(d);
        row.upper_bound_only = cub.rows[static_cast<size_t>(d)].upper_bound_only;
        row.agree = row.betti_cellular == row.betti_cubical;
        if (!row.upper_bound_only) rep.verified_up_to = d;
        rep.rows.push_back(row);
    }
    return rep;
}

}  // namespace dicell
