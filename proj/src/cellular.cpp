#include "dicell/cellular.hpp"

#include <algorithm>
#include <map>

namespace dicell {

namespace {

std::vector<bigrat> coord_vector(const std::map<path, int>& col, const qchain& c) {
    std::vector<bigrat> v(col.size(), bigrat(0));
    for (const auto& [p, coef] : c.terms()) v[static_cast<size_t>(col.at(p))] = coef;
    return v;
}

std::map<path, int> column_index(const std::vector<admissible_pair>& pairs) {
    std::map<path, int> col;
    for (const auto& pr : pairs)
        for (const auto& [p, coef] : pr.path.chain.terms())
            col.emplace(p, static_cast<int>(col.size()));
    return col;
}

}  // namespace

cellular_basis cellular_chain_space(const digraph& g, int n, std::uint64_t budget) {
    cellular_basis cb;
    cb.degree = n;
    cb.pairs = admissible_set(g, n, budget);
    if (cb.pairs.empty()) return cb;

    auto col = column_index(cb.pairs);
    std::vector<std::vector<bigrat>> vectors;
    for (const auto& pr : cb.pairs)
        vectors.push_back(coord_vector(col, to_rational(pr.path.chain)));

    // Greedy maximal independent prefix in canonical order.
    std::vector<std::vector<bigrat>> picked;
    for (int i = 0; i < static_cast<int>(cb.pairs.size()); ++i) {
        if (in_span(picked, vectors[static_cast<size_t>(i)]).has_value()) continue;
        picked.push_back(vectors[static_cast<size_t>(i)]);
        cb.working.push_back(i);
    }
    for (int i = 0; i < static_cast<int>(cb.pairs.size()); ++i) {
        auto coords = in_span(picked, vectors[static_cast<size_t>(i)]);
        if (!coords) throw error("admissible path escaped its own span");
        cb.coords.push_back(std::move(*coords));
    }
    // Admissible relations: kernel of the full pair matrix.
    std::vector<std::vector<bigrat>> rows(col.size(), std::vector<bigrat>(cb.pairs.size(), bigrat(0)));
    for (size_t i = 0; i < cb.pairs.size(); ++i)
        for (size_t r = 0; r < vectors[i].size(); ++r) rows[r][i] = vectors[i][r];
    cb.relations = kernel_basis_dense(std::move(rows), static_cast<int>(cb.pairs.size()));
    return cb;
}

ichain cellular_boundary_coeff(const admissible_pair& p,
                               const std::vector<admissible_pair>& prev) {
    ichain bd = boundary(p.path.chain);
    ichain out;
    for (const auto& q : prev) {
        const ichain& qc = q.path.chain;
        if (is_smaller(qc, bd))
            out += qc;
        else if (is_smaller(-qc, bd))
            out -= qc;
    }
    return out;
}

qchain cellular_boundary_restricted(const admissible_pair& p,
                                    const std::vector<admissible_pair>& prev) {
    qchain bd = to_rational(boundary(p.path.chain));
    if (bd.zero()) return bd;
    std::vector<qchain> span;
    span.reserve(prev.size());
    for (const auto& q : prev) span.push_back(to_rational(q.path.chain));
    if (!chain_in_span(span, bd))
        throw boundary_escapes_span_error("boundary of " +
                                          std::to_string(p.path.degree()) +
                                          "-cell leaves the admissible span");
    return bd;
}

homology_report cellular_homology(const digraph& g, bool reduced, std::uint64_t budget) {
    int top = std::max(0, g.vertex_count() - 1);
    std::vector<cellular_basis> cb;
    for (int d = 0; d <= top; ++d) {
        if (d > 0 && enumerate_allowed_paths(g, d).empty()) break;
        cb.push_back(cellular_chain_space(g, d, budget));
    }
    const int built = static_cast<int>(cb.size()) - 1;

    // Both boundary routes must agree on every admissible cell before any rank
    // is trusted.
    for (int d = 1; d <= built; ++d) {
        const auto& prev = cb[static_cast<size_t>(d - 1)].pairs;
        for (const auto& pr : cb[static_cast<size_t>(d)].pairs) {
            qchain restricted = cellular_boundary_restricted(pr, prev);
            ichain coeff = cellular_boundary_coeff(pr, prev);
            if (to_rational(coeff) != restricted)
                throw error("cellular boundary routes disagree on " +
                            format_chain(pr.path.chain, g));
        }
    }

    std::vector<qchain> basis;
    for (const auto& level : cb)
        for (const auto& c : level.working_chains()) basis.push_back(c);
    auto rep = homology_of_chain_subspace(basis, g.name(), reduced);
    // Pad the report out to the full degree range for stable shapes.
    while (static_cast<int>(rep.rows.size()) <= top) {
        homology_report::row row;
        row.degree = static_cast<int>(rep.rows.size());
        rep.rows.push_back(row);
    }
    return rep;
}

std::optional<admissible_pair> pair_from_witness(const digraph& g, const ichain& chain,
                                                 const digraph_map& witness) {
    if (!check_digraph_map(witness)) return std::nullopt;
    if (!is_minimal(g, chain)) return std::nullopt;
    minimal_path_record rec = make_record(g, chain);
    const int n = rec.degree();
    if (witness.source.vertex_count() != (1 << n)) return std::nullopt;
    ichain pushed = push_forward(witness, omega(n, std::max(n, default_cube_cap)));
    const path& probe = rec.chain.terms().begin()->first;
    const bigint c = pushed.coeff(probe);
    if (c == 0) return std::nullopt;
    ichain scaled = rec.chain;
    scaled *= c;
    if (pushed != scaled) return std::nullopt;
    admissible_pair pair{std::move(rec), witness, c};
    if (!verify_admissible_pair(g, pair)) return std::nullopt;
    return pair;
}

kunneth_report kunneth_check(const digraph& x, const digraph& y, int max_degree,
                             std::uint64_t budget) {
    kunneth_report rep;
    const digraph prod = cartesian_product(x, y);
    const int ny = y.vertex_count();

    std::vector<cellular_basis> cbx, cby, cbp;
    for (int d = 0; d <= max_degree; ++d) {
        cbx.push_back(cellular_chain_space(x, d, budget));
        cby.push_back(cellular_chain_space(y, d, budget));
        cbp.push_back(cellular_chain_space(prod, d, budget));
    }
    auto hx = cellular_homology(x, false, budget);
    auto hy = cellular_homology(y, false, budget);
    auto hp = cellular_homology(prod, false, budget);

    for (int n = 0; n <= max_degree; ++n) {
        kunneth_report::row row;
        row.degree = n;
        row.dim_product = cbp[static_cast<size_t>(n)].dim();
        for (int p = 0; p <= n; ++p)
            row.dim_sum += cbx[static_cast<size_t>(p)].dim() * cby[static_cast<size_t>(n - p)].dim();
        row.dims_match = row.dim_product == row.dim_sum;
        row.betti_product = hp.betti_at(n);
        for (int p = 0; p <= n; ++p) row.betti_sum += hx.betti_at(p) * hy.betti_at(n - p);
        row.betti_match = row.betti_product == row.betti_sum;
        rep.rows.push_back(row);

        // Cross products of working-basis pairs must be admissible in the
        // product (witness h(a,b) = (f(a), g(b))) and span the product cells.
        std::vector<qchain> crosses;
        for (int p = 0; p <= n; ++p) {
            const int q = n - p;
            for (int ip : cbx[static_cast<size_t>(p)].working)
                for (int iq : cby[static_cast<size_t>(q)].working) {
                    const auto& px = cbx[static_cast<size_t>(p)].pairs[static_cast<size_t>(ip)];
                    const auto& qy = cby[static_cast<size_t>(q)].pairs[static_cast<size_t>(iq)];
                    ichain cross = cross_product(px.path.chain, qy.path.chain, ny);
                    // h(a, b) = (f(a), g(b)) under the bit-split identification
                    // of the (p+q)-cube.
                    const digraph cpq = cube(n, std::max(n, default_cube_cap));
                    std::vector<int> assign(static_cast<size_t>(1 << n));
                    for (int v = 0; v < (1 << n); ++v) {
                        const int a = v >> q, b = v & ((1 << q) - 1);
                        assign[static_cast<size_t>(v)] =
                            px.witness.assign[static_cast<size_t>(a)] * ny +
                            qy.witness.assign[static_cast<size_t>(b)];
                    }
                    auto pair = pair_from_witness(prod, cross, make_digraph_map(cpq, prod, assign));
                    ++rep.cross_pairs_checked;
                    if (!pair) {
                        rep.failures.push_back("cross witness rejected in degree " +
                                               std::to_string(n));
                        continue;
                    }
                    // Supp(P x Q) = Supp(P) box Supp(Q)
                    const digraph expected =
                        cartesian_product(px.path.supp, qy.path.supp);
                    if (pair->path.supp.labels() != expected.labels() ||
                        pair->path.supp.edge_labels() != expected.edge_labels())
                        rep.failures.push_back("support of cross product differs from product of supports");
                    crosses.push_back(to_rational(cross));
                }
        }
        std::map<path, int> col;
        for (const auto& c : crosses)
            for (const auto& [p2, coef] : c.terms()) col.emplace(p2, static_cast<int>(col.size()));
        std::vector<std::vector<bigrat>> rows;
        for (const auto& c : crosses) rows.push_back(coord_vector(col, c));
        if (rank_dense(std::move(rows)) != row.dim_product)
            rep.failures.push_back("cross products do not span the product cells in degree " +
                                   std::to_string(n));
    }
    return rep;
}

}  // namespace dicell
