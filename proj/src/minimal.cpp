#include "dicell/minimal.hpp"

#include <algorithm>
#include <set>

namespace dicell {

bool in_omega(const digraph& g, const ichain& c) {
    for (const auto& [p, coef] : c.terms())
        if (!p.s_regular() || !allowed_in(p, g)) return false;
    const ichain bd = boundary(c);
    for (const auto& [p, coef] : bd.terms())
        if (!allowed_in(p, g)) return false;
    return true;
}

bool is_smaller(const ichain& p_prime, const ichain& p) {
    if (p_prime.zero()) return false;
    for (const auto& [q, d] : p_prime.terms()) {
        const bigint c = p.coeff(q);
        if (abs(d) > abs(c)) return false;          // includes support violation (c = 0)
        if (abs(c - d) > abs(c)) return false;
    }
    return width(p_prime) < width(p);
}

namespace {

// Cancellation context for +/-1 chains over a fixed term list: every
// non-allowed face of a partial signed sum must eventually balance to zero.
struct growth_ctx {
    std::vector<path> terms;                            // lexicographically sorted
    std::vector<std::vector<std::pair<int, int>>> term_faces;  // term -> (face, sign)
    std::vector<std::vector<std::pair<int, int>>> face_terms;  // face -> (term, sign)

    explicit growth_ctx(const digraph& g, std::vector<path> ts) : terms(std::move(ts)) {
        std::map<path, int> face_id;
        std::vector<path> face_keys;
        term_faces.resize(terms.size());
        for (int t = 0; t < static_cast<int>(terms.size()); ++t) {
            const path& p = terms[static_cast<size_t>(t)];
            int sign = 1;
            for (int j = 0; j <= p.length(); ++j, sign = -sign) {
                path f = face(p, j);
                if (allowed_in(f, g)) continue;
                auto [it, fresh] = face_id.emplace(f, static_cast<int>(face_id.size()));
                if (fresh) face_keys.push_back(f);
                term_faces[static_cast<size_t>(t)].emplace_back(it->second, sign);
            }
        }
        // Re-index faces lexicographically so branching order is canonical.
        std::vector<int> order(face_keys.size());
        for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
        std::sort(order.begin(), order.end(),
                  [&](int a, int b) { return face_keys[static_cast<size_t>(a)] < face_keys[static_cast<size_t>(b)]; });
        std::vector<int> rank(face_keys.size());
        for (size_t i = 0; i < order.size(); ++i) rank[static_cast<size_t>(order[i])] = static_cast<int>(i);
        for (auto& tf : term_faces)
            for (auto& [f, s] : tf) f = rank[static_cast<size_t>(f)];
        face_terms.assign(face_keys.size(), {});
        for (int t = 0; t < static_cast<int>(terms.size()); ++t)
            for (auto [f, s] : term_faces[static_cast<size_t>(t)])
                face_terms[static_cast<size_t>(f)].emplace_back(t, s);
    }
};

// Enumerates the full signed supports reachable from the seed term (coefficient
// fixed by `seed_sign`) by repeatedly cancelling the first unbalanced face.
// `allowed_sign[t]` restricts a term's coefficient (0 = either sign).
// Visits every complete (boundary-invariant) state once; `on_complete` may
// return false to stop the search.
template <class F>
void grow(const growth_ctx& ctx, int seed, int seed_sign,
          const std::vector<int>& allowed_sign, search_budget& budget, F&& on_complete,
          bool only_above_seed = true) {
    const int m = static_cast<int>(ctx.terms.size());
    std::vector<int> signs(static_cast<size_t>(m), 0);
    std::vector<int> imbalance(ctx.face_terms.size(), 0);
    std::set<std::vector<int>> visited;
    bool stop = false;

    auto apply = [&](int t, int c) {
        signs[static_cast<size_t>(t)] = c;
        for (auto [f, s] : ctx.term_faces[static_cast<size_t>(t)])
            imbalance[static_cast<size_t>(f)] += c * s;
    };
    auto undo = [&](int t) {
        const int c = signs[static_cast<size_t>(t)];
        signs[static_cast<size_t>(t)] = 0;
        for (auto [f, s] : ctx.term_faces[static_cast<size_t>(t)])
            imbalance[static_cast<size_t>(f)] -= c * s;
    };

    auto rec = [&](auto&& self) -> void {
        if (stop) return;
        budget.spend();
        int bad = -1;
        for (int f = 0; f < static_cast<int>(imbalance.size()); ++f)
            if (imbalance[static_cast<size_t>(f)] != 0) {
                bad = f;
                break;
            }
        if (bad < 0) {
            if (!on_complete(signs)) stop = true;
            return;
        }
        if (!visited.insert(signs).second) return;
        const int need = imbalance[static_cast<size_t>(bad)] > 0 ? -1 : 1;
        for (auto [t, s] : ctx.face_terms[static_cast<size_t>(bad)]) {
            if (signs[static_cast<size_t>(t)] != 0 || t == seed) continue;
            if (only_above_seed && t < seed) continue;
            const int c = need * s;  // contribution c*s == need
            if (allowed_sign[static_cast<size_t>(t)] != 0 &&
                allowed_sign[static_cast<size_t>(t)] != c)
                continue;
            apply(t, c);
            self(self);
            undo(t);
            if (stop) return;
        }
    };

    if (allowed_sign[static_cast<size_t>(seed)] != 0 &&
        allowed_sign[static_cast<size_t>(seed)] != seed_sign)
        return;
    apply(seed, seed_sign);
    rec(rec);
    undo(seed);
}

ichain chain_of(const growth_ctx& ctx, const std::vector<int>& signs) {
    ichain c;
    for (size_t t = 0; t < signs.size(); ++t)
        if (signs[t] != 0) c.add(ctx.terms[t], bigint(signs[t]));
    return c;
}

bool all_units(const ichain& c) {
    for (const auto& [p, coef] : c.terms())
        if (coef != 1 && coef != -1) return false;
    return true;
}

// Minimality for +/-1 chains: the chain is minimal iff no proper sub-support
// (with inherited signs) is boundary-invariant, decided by growing the atom of
// the lexicographically first term.
bool is_minimal_pm(const digraph& g, const ichain& p, std::uint64_t budget_cap) {
    std::vector<path> ts;
    std::vector<int> fixed;
    for (const auto& [q, coef] : p.terms()) {
        ts.push_back(q);
        fixed.push_back(coef > 0 ? 1 : -1);
    }
    growth_ctx ctx(g, ts);
    const int m = static_cast<int>(ts.size());
    search_budget budget{budget_cap};
    bool minimal = true;
    grow(ctx, 0, fixed[0], fixed, budget, [&](const std::vector<int>& signs) {
        int used = 0;
        for (int s : signs)
            if (s != 0) ++used;
        if (used < m) {
            minimal = false;
            return false;
        }
        return true;
    });
    return minimal;
}

// General integer coefficients: box search over d_t between 0 and c_t.
bool is_minimal_box(const digraph& g, const ichain& p, std::uint64_t budget_cap) {
    std::vector<path> ts;
    std::vector<bigint> coefs;
    for (const auto& [q, coef] : p.terms()) {
        ts.push_back(q);
        coefs.push_back(coef);
    }
    bigint states(1);
    for (const auto& c : coefs) states *= abs(c) + 1;
    if (states > budget_cap) throw budget_exceeded_error(budget_cap);

    growth_ctx ctx(g, ts);
    const int m = static_cast<int>(ts.size());
    std::vector<bigint> d(static_cast<size_t>(m), bigint(0));
    std::vector<bigint> imbalance(ctx.face_terms.size(), bigint(0));
    bool found = false;
    auto rec = [&](auto&& self, int t) -> void {
        if (found) return;
        if (t == m) {
            for (const auto& x : imbalance)
                if (x != 0) return;
            bool zero = true, full = true;
            for (int i = 0; i < m; ++i) {
                if (d[static_cast<size_t>(i)] != 0) zero = false;
                if (d[static_cast<size_t>(i)] != coefs[static_cast<size_t>(i)]) full = false;
            }
            if (!zero && !full) found = true;
            return;
        }
        const bigint step = coefs[static_cast<size_t>(t)] > 0 ? 1 : -1;
        for (bigint v(0);; v += step) {
            d[static_cast<size_t>(t)] = v;
            for (auto [f, s] : ctx.term_faces[static_cast<size_t>(t)])
                imbalance[static_cast<size_t>(f)] += v * s;
            self(self, t + 1);
            for (auto [f, s] : ctx.term_faces[static_cast<size_t>(t)])
                imbalance[static_cast<size_t>(f)] -= v * s;
            if (v == coefs[static_cast<size_t>(t)] || found) break;
        }
        d[static_cast<size_t>(t)] = 0;
    };
    rec(rec, 0);
    return !found;
}

}  // namespace

bool is_minimal(const digraph& g, const ichain& p, std::uint64_t budget) {
    if (p.zero()) return false;
    if (!in_omega(g, p)) throw not_in_omega_error("chain is not boundary-invariant in " + g.name());
    if (p.term_count() == 1) return true;
    if (all_units(p)) return is_minimal_pm(g, p, budget);
    return is_minimal_box(g, p, budget);
}

digraph supp(const digraph& g, const ichain& c) {
    if (!in_omega(g, c)) throw not_in_omega_error("support requires a chain in the path complex");
    std::set<int> verts;
    std::set<std::pair<int, int>> edges;
    auto absorb = [&](const path& p) {
        for (size_t i = 0; i + 1 < p.v.size(); ++i) edges.insert({p.v[i], p.v[i + 1]});
    };
    for (const auto& [p, coef] : c.terms()) {
        for (int v : p.v) verts.insert(v);
        absorb(p);
    }
    const ichain bd = boundary(c);
    for (const auto& [p, coef] : bd.terms()) absorb(p);
    return subdigraph(g, {verts.begin(), verts.end()}, {edges.begin(), edges.end()});
}

std::pair<std::map<int, int>, std::map<int, int>> distance_tables(const ichain& c) {
    std::map<int, int> ds, de;
    for (const auto& [p, coef] : c.terms()) {
        const int n = p.length();
        for (int i = 0; i <= n; ++i) {
            const int v = p.v[static_cast<size_t>(i)];
            auto it = ds.find(v);
            if (it == ds.end() || i < it->second) ds[v] = i;
            auto jt = de.find(v);
            if (jt == de.end() || n - i < jt->second) de[v] = n - i;
        }
    }
    return {ds, de};
}

minimal_path_record make_record(const digraph& g, const ichain& c) {
    minimal_path_record rec;
    rec.chain = c;
    // canonical orientation
    if (!c.zero() && c.terms().begin()->second < 0) rec.chain *= bigint(-1);
    const path& first = rec.chain.terms().begin()->first;
    rec.start = first.v.front();
    rec.end = first.v.back();
    rec.supp = supp(g, rec.chain);
    auto [ds, de] = distance_tables(rec.chain);
    rec.d_start = std::move(ds);
    rec.d_end = std::move(de);
    return rec;
}

std::vector<minimal_path_record> enumerate_minimal_paths(const digraph& g, int n,
                                                         std::uint64_t budget_cap) {
    std::vector<minimal_path_record> out;
    if (n < 0 || n >= g.vertex_count()) return out;
    if (n == 0) {
        for (int v = 0; v < g.vertex_count(); ++v)
            out.push_back(make_record(g, ichain::unit(path{{v}})));
        return out;
    }
    auto all_paths = enumerate_allowed_paths(g, n);
    std::map<std::pair<int, int>, std::vector<path>> by_endpoints;
    for (const auto& p : all_paths) by_endpoints[{p.v.front(), p.v.back()}].push_back(p);

    std::set<ichain> seen;
    for (const auto& [se, terms] : by_endpoints) {
        growth_ctx ctx(g, terms);
        const std::vector<int> free_signs(terms.size(), 0);
        for (int seed = 0; seed < static_cast<int>(terms.size()); ++seed) {
            search_budget budget{budget_cap};
            grow(ctx, seed, 1, free_signs, budget, [&](const std::vector<int>& signs) {
                ichain c = chain_of(ctx, signs);
                if (seen.count(c)) return true;
                if (is_minimal_pm(g, c, budget_cap)) {
                    seen.insert(c);
                    out.push_back(make_record(g, c));
                }
                return true;
            });
        }
    }
    std::sort(out.begin(), out.end(), [](const minimal_path_record& a, const minimal_path_record& b) {
        return a.chain.terms() < b.chain.terms();
    });
    return out;
}

std::vector<signed_component> decompose_into_minimal(const digraph& g, const ichain& c,
                                                     std::uint64_t budget_cap,
                                                     bool reverse_seed) {
    if (!all_units(c)) throw not_decomposable_error("decomposition expects +/-1 coefficients");
    if (!in_omega(g, c)) throw not_decomposable_error("chain is not boundary-invariant");
    std::vector<signed_component> out;
    ichain residue = c;
    while (!residue.zero()) {
        std::vector<path> ts;
        std::vector<int> fixed;
        for (const auto& [q, coef] : residue.terms()) {
            ts.push_back(q);
            fixed.push_back(coef > 0 ? 1 : -1);
        }
        growth_ctx ctx(g, ts);
        // Atom containing the seed term: the minimum-width invariant signed
        // sub-support; complete states are scanned and the smallest kept.
        const int seed = reverse_seed ? static_cast<int>(ts.size()) - 1 : 0;
        std::optional<std::vector<int>> best;
        int best_width = 0;
        search_budget budget{budget_cap};
        grow(
            ctx, seed, fixed[static_cast<size_t>(seed)], fixed, budget,
            [&](const std::vector<int>& signs) {
                int w = 0;
                for (int s : signs)
                    if (s != 0) ++w;
                if (!best || w < best_width) {
                    best = signs;
                    best_width = w;
                }
                return true;
            },
            false);
        if (!best) throw not_decomposable_error("no invariant component contains the seed term");
        ichain atom = chain_of(ctx, *best);
        signed_component comp;
        comp.sign = atom.terms().begin()->second > 0 ? 1 : -1;
        ichain oriented = atom;
        if (comp.sign < 0) oriented *= bigint(-1);
        comp.record = make_record(g, oriented);
        out.push_back(std::move(comp));
        residue -= atom;
    }
    return out;
}

std::vector<std::string> validate_structure_theorem(const digraph& g,
                                                    const minimal_path_record& rec,
                                                    std::uint64_t budget_cap) {
    std::vector<std::string> violations;
    const ichain& p = rec.chain;
    const int n = p.degree();
    if (p.zero()) return {"empty chain"};

    for (const auto& [q, coef] : p.terms())
        if (coef != 1 && coef != -1)
            violations.push_back("coefficient of " + format_path(q, g) + " is " + coef.str());

    for (const auto& [q, coef] : p.terms()) {
        if (q.v.front() != rec.start)
            violations.push_back("term " + format_path(q, g) + " does not start at S");
        if (q.v.back() != rec.end)
            violations.push_back("term " + format_path(q, g) + " does not end at E");
    }
    if (!violations.empty() || n == 0) return violations;

    // Boundary decomposition inside the supporting digraph: one minimal
    // component S->alpha per alpha in E_1, one beta->E per beta in S_1, plus at
    // most one S->E component.
    const digraph& sp = rec.supp;
    auto to_supp = [&](const ichain& c) {
        ichain out;
        for (const auto& [q, coef] : c.terms()) {
            path m;
            m.v.reserve(q.v.size());
            for (int v : q.v) m.v.push_back(sp.index_of(g.label(v)));
            out.add(m, coef);
        }
        return out;
    };
    ichain bd = boundary(p);
    if (bd.zero()) return violations;

    std::set<int> s1, e1;
    for (const auto& [v, d] : rec.d_start)
        if (d == 1) s1.insert(v);
    for (const auto& [v, d] : rec.d_end)
        if (d == 1) e1.insert(v);

    std::map<std::pair<int, int>, int> component_count;
    try {
        for (const auto& comp : decompose_into_minimal(sp, to_supp(bd), budget_cap)) {
            const path& first = comp.record.chain.terms().begin()->first;
            const int cs = g.index_of(sp.label(first.v.front()));
            const int ce = g.index_of(sp.label(first.v.back()));
            component_count[{cs, ce}] += 1;
        }
    } catch (const error& e) {
        violations.push_back(std::string("boundary decomposition failed: ") + e.what());
        return violations;
    }
    std::set<std::pair<int, int>> expected;
    for (int a : e1) expected.insert({rec.start, a});
    for (int b : s1) expected.insert({b, rec.end});
    for (const auto& [se, count] : component_count) {
        if (se == std::pair<int, int>{rec.start, rec.end}) {
            if (count > 1)
                violations.push_back("more than one S->E boundary component");
            continue;
        }
        if (!expected.count(se))
            violations.push_back("boundary component with unexpected endpoints " +
                                 g.label(se.first) + "->" + g.label(se.second));
        else if (count != 1)
            violations.push_back("duplicated boundary component " + g.label(se.first) + "->" +
                                 g.label(se.second));
    }
    for (auto se : expected)
        if (!component_count.count(se))
            violations.push_back("missing boundary component " + g.label(se.first) + "->" +
                                 g.label(se.second));

    // Minimal 2-paths between fixed endpoints in the support are unique.
    if (n >= 2) {
        std::map<std::pair<int, int>, int> twos;
        for (const auto& r : enumerate_minimal_paths(sp, 2, budget_cap)) {
            const path& first = r.chain.terms().begin()->first;
            twos[{first.v.front(), first.v.back()}] += 1;
        }
        for (const auto& [se, count] : twos)
            if (count > 1)
                violations.push_back("minimal 2-path between " + sp.label(se.first) + " and " +
                                     sp.label(se.second) + " is not unique");
    }
    return violations;
}

}  // namespace dicell
