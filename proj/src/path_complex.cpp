#include "dicell/path_complex.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace dicell {

std::vector<path> enumerate_allowed_paths(const digraph& g, int n) {
    std::vector<path> out;
    if (n < 0 || n >= g.vertex_count()) return out;
    std::vector<bool> used(static_cast<size_t>(g.vertex_count()), false);
    path cur;
    auto rec = [&](auto&& self, int v) -> void {
        cur.v.push_back(v);
        used[static_cast<size_t>(v)] = true;
        if (cur.length() == n)
            out.push_back(cur);
        else
            for (int w : g.out(v))
                if (!used[static_cast<size_t>(w)]) self(self, w);
        used[static_cast<size_t>(v)] = false;
        cur.v.pop_back();
    };
    for (int v = 0; v < g.vertex_count(); ++v) rec(rec, v);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Incidence of non-allowed faces: rows index the non-allowed (n-1)-sequences
// that appear, columns the allowed n-paths.
template <class M>
M non_allowed_face_matrix(const digraph& g, const std::vector<path>& columns) {
    std::map<path, int> face_row;
    std::vector<std::tuple<int, int, int>> entries;  // row, col, sign
    for (int c = 0; c < static_cast<int>(columns.size()); ++c) {
        const path& p = columns[static_cast<size_t>(c)];
        int sign = 1;
        for (int j = 0; j <= p.length(); ++j, sign = -sign) {
            path f = face(p, j);
            if (allowed_in(f, g)) continue;
            auto [it, fresh] = face_row.emplace(f, static_cast<int>(face_row.size()));
            entries.emplace_back(it->second, c, sign);
        }
    }
    M m(static_cast<int>(face_row.size()), static_cast<int>(columns.size()));
    for (auto [r, c, s] : entries) m.set(r, c, m.get(r, c) + s);
    return m;
}

qchain chain_from_coords(const std::vector<path>& columns, const std::vector<bigrat>& v) {
    qchain c;
    for (size_t i = 0; i < columns.size(); ++i) c.add(columns[i], v[i]);
    return c;
}

}  // namespace

omega_basis omega_space(const digraph& g, int n, coeff_domain domain) {
    omega_basis ob;
    ob.degree = n;
    ob.columns = enumerate_allowed_paths(g, n);
    if (ob.columns.empty()) return ob;
    if (n == 0) {
        for (const path& p : ob.columns) {
            ob.basis.push_back(qchain::unit(p));
            if (domain == coeff_domain::integers) ob.lattice.push_back(ichain::unit(p));
        }
        return ob;
    }
    if (domain == coeff_domain::rationals) {
        auto m = non_allowed_face_matrix<qmatrix>(g, ob.columns);
        for (const auto& v : kernel_basis(m)) ob.basis.push_back(chain_from_coords(ob.columns, v));
    } else {
        auto m = non_allowed_face_matrix<zmatrix>(g, ob.columns);
        for (const auto& v : integer_kernel_basis(m)) {
            ichain c;
            for (size_t i = 0; i < ob.columns.size(); ++i) c.add(ob.columns[i], v[i]);
            ob.lattice.push_back(c);
            ob.basis.push_back(to_rational(c));
        }
    }
    return ob;
}

namespace {

// Shared rank/Betti engine over graded chain bases in ambient path
// coordinates. bases[d] spans degree d; boundaries must stay inside the span
// one degree down.
homology_report homology_engine(std::vector<std::vector<qchain>> bases,
                                const std::string& name, bool reduced,
                                bool check_closure) {
    homology_report rep;
    rep.digraph_name = name;
    rep.reduced = reduced;
    const int top = static_cast<int>(bases.size()) - 1;

    // Boundary images per degree, as chains.
    std::vector<std::vector<qchain>> bimg(bases.size());
    for (int d = 1; d <= top; ++d)
        for (const auto& c : bases[static_cast<size_t>(d)])
            bimg[static_cast<size_t>(d)].push_back(boundary(c));

    if (check_closure)
        for (int d = 1; d <= top; ++d)
            for (size_t i = 0; i < bimg[static_cast<size_t>(d)].size(); ++i)
                if (!bimg[static_cast<size_t>(d)][i].zero() &&
                    !chain_in_span(bases[static_cast<size_t>(d - 1)],
                                   bimg[static_cast<size_t>(d)][i])) {
                    std::string witness = "boundary of basis chain " + std::to_string(i);
                    throw not_closed_error(d, witness);
                }

    auto span_rank = [](const std::vector<qchain>& chains) {
        if (chains.empty()) return 0;
        std::map<path, int> col;
        for (const auto& c : chains)
            for (const auto& [p, coef] : c.terms()) col.emplace(p, static_cast<int>(col.size()));
        std::vector<std::vector<bigrat>> rows;
        for (const auto& c : chains) {
            std::vector<bigrat> r(col.size(), bigrat(0));
            for (const auto& [p, coef] : c.terms()) r[static_cast<size_t>(col.at(p))] = coef;
            rows.push_back(std::move(r));
        }
        return rank_dense(std::move(rows));
    };

    std::vector<int> dim(static_cast<size_t>(top) + 1, 0), rank_down(static_cast<size_t>(top) + 1, 0);
    for (int d = 0; d <= top; ++d)
        dim[static_cast<size_t>(d)] = span_rank(bases[static_cast<size_t>(d)]);
    for (int d = 1; d <= top; ++d)
        rank_down[static_cast<size_t>(d)] = span_rank(bimg[static_cast<size_t>(d)]);

    // Reduced mode augments degree 0 by the coefficient-sum map.
    int aug_rank = 0;
    if (reduced && dim[0] > 0) aug_rank = 1;

    for (int d = 0; d <= top; ++d) {
        homology_report::row row;
        row.degree = d;
        row.dim = dim[static_cast<size_t>(d)];
        row.rank_down = d == 0 ? aug_rank : rank_down[static_cast<size_t>(d)];
        const int rank_up = d + 1 <= top ? rank_down[static_cast<size_t>(d + 1)] : 0;
        row.betti = row.dim - row.rank_down - rank_up;

        // Generator representatives: cycles outside the boundary image, taken
        // in canonical order. Representatives are non-unique; class equality is
        // what tests should compare.
        if (row.betti > 0) {
            std::vector<qchain> cycles;
            if (d == 0 && !reduced) {
                cycles = bases[0];
            } else {
                // Kernel of the boundary restricted to the span.
                const auto& bs = bases[static_cast<size_t>(d)];
                std::map<path, int> col;
                for (const auto& c : bs)
                    for (const auto& [p, coef] : c.terms())
                        col.emplace(p, static_cast<int>(col.size()));
                std::vector<std::vector<bigrat>> m(col.size(),
                                                   std::vector<bigrat>(bs.size(), bigrat(0)));
                std::map<path, int> fcol;
                std::vector<std::vector<bigrat>> fm;
                for (size_t i = 0; i < bs.size(); ++i) {
                    qchain b = boundary(bs[i]);
                    for (const auto& [p, coef] : b.terms()) {
                        auto [it, fresh] = fcol.emplace(p, static_cast<int>(fcol.size()));
                        if (fresh) fm.emplace_back(bs.size(), bigrat(0));
                        fm[static_cast<size_t>(it->second)][i] = coef;
                    }
                    if (d == 0 && reduced) {
                        // augmentation row
                        auto [it, fresh] = fcol.emplace(path{}, static_cast<int>(fcol.size()));
                        if (fresh) fm.emplace_back(bs.size(), bigrat(0));
                        bigrat s(0);
                        for (const auto& [p, coef] : bs[i].terms()) s += coef;
                        fm[static_cast<size_t>(it->second)][i] = s;
                    }
                }
                for (const auto& v : kernel_basis_dense(std::move(fm), static_cast<int>(bs.size()))) {
                    qchain c;
                    for (size_t i = 0; i < bs.size(); ++i) {
                        qchain t = bs[i];
                        t *= v[i];
                        c += t;
                    }
                    if (!c.zero()) cycles.push_back(c);
                }
            }
            std::vector<qchain> boundaries =
                d + 1 <= top ? bimg[static_cast<size_t>(d + 1)] : std::vector<qchain>{};
            std::vector<qchain> picked = boundaries;
            for (const auto& c : cycles) {
                if (static_cast<int>(row.generators.size()) >= row.betti) break;
                if (!chain_in_span(picked, c)) {
                    row.generators.push_back(c);
                    picked.push_back(c);
                }
            }
        }
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

}  // namespace

homology_report path_homology(const digraph& g, bool reduced) {
    const int top = std::max(0, g.vertex_count() - 1);
    std::vector<std::vector<qchain>> bases(static_cast<size_t>(top) + 1);
    for (int d = 0; d <= top; ++d) bases[static_cast<size_t>(d)] = omega_space(g, d).basis;
    auto rep = homology_engine(std::move(bases), g.name(), reduced, false);
    return rep;
}

homology_report homology_of_chain_subspace(const std::vector<qchain>& basis,
                                           const std::string& name, bool reduced) {
    int top = 0;
    for (const auto& c : basis)
        if (!c.zero()) top = std::max(top, c.degree());
    std::vector<std::vector<qchain>> bases(static_cast<size_t>(top) + 1);
    for (const auto& c : basis) {
        if (c.zero()) continue;
        bases[static_cast<size_t>(c.degree())].push_back(c);
    }
    return homology_engine(std::move(bases), name, reduced, true);
}

std::optional<std::vector<bigrat>> coords_in_span(const std::vector<qchain>& span,
                                                  const qchain& target) {
    std::map<path, int> col;
    for (const auto& c : span)
        for (const auto& [p, coef] : c.terms()) col.emplace(p, static_cast<int>(col.size()));
    for (const auto& [p, coef] : target.terms())
        if (col.find(p) == col.end()) return std::nullopt;
    std::vector<std::vector<bigrat>> vs;
    for (const auto& c : span) {
        std::vector<bigrat> v(col.size(), bigrat(0));
        for (const auto& [p, coef] : c.terms()) v[static_cast<size_t>(col.at(p))] = coef;
        vs.push_back(std::move(v));
    }
    std::vector<bigrat> t(col.size(), bigrat(0));
    for (const auto& [p, coef] : target.terms()) t[static_cast<size_t>(col.at(p))] = coef;
    return in_span(vs, t);
}

bool chain_in_span(const std::vector<qchain>& span, const qchain& target) {
    if (target.zero()) return true;
    return coords_in_span(span, target).has_value();
}

bool same_homology_class(const qchain& a, const qchain& b,
                         const std::vector<qchain>& next_degree_basis) {
    qchain diff = a - b;
    if (diff.zero()) return true;
    std::vector<qchain> boundaries;
    for (const auto& c : next_degree_basis) {
        qchain bc = boundary(c);
        if (!bc.zero()) boundaries.push_back(bc);
    }
    return chain_in_span(boundaries, diff);
}

std::optional<bigrat> class_multiple(const qchain& a, const qchain& b,
                                     const std::vector<qchain>& next_degree_basis) {
    std::vector<qchain> span;
    for (const auto& c : next_degree_basis) {
        qchain bc = boundary(c);
        if (!bc.zero()) span.push_back(bc);
    }
    span.push_back(b);
    auto coords = coords_in_span(span, a);
    if (!coords) return std::nullopt;
    return coords->back();
}

}  // namespace dicell
