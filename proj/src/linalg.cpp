#include "dicell/linalg.hpp"

#include <algorithm>

namespace dicell {

namespace {

// Bareiss fraction-free elimination on integer rows. Returns the rank.
int bareiss_rank(std::vector<std::vector<bigint>>& m, int cols) {
    const int rows = static_cast<int>(m.size());
    bigint prev(1);
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pivot = -1;
        for (int i = r; i < rows; ++i)
            if (m[static_cast<size_t>(i)][static_cast<size_t>(c)] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[static_cast<size_t>(r)], m[static_cast<size_t>(pivot)]);
        const auto& pr = m[static_cast<size_t>(r)];
        for (int i = r + 1; i < rows; ++i) {
            auto& row = m[static_cast<size_t>(i)];
            for (int j = c + 1; j < cols; ++j)
                row[static_cast<size_t>(j)] =
                    (pr[static_cast<size_t>(c)] * row[static_cast<size_t>(j)] -
                     row[static_cast<size_t>(c)] * pr[static_cast<size_t>(j)]) /
                    prev;
            row[static_cast<size_t>(c)] = 0;
        }
        prev = pr[static_cast<size_t>(c)];
        ++r;
    }
    return r;
}

std::vector<std::vector<bigint>> clear_denominators(const qmatrix& m) {
    std::vector<std::vector<bigint>> rows(static_cast<size_t>(m.rows()),
                                          std::vector<bigint>(static_cast<size_t>(m.cols()), 0));
    std::vector<bigint> lcm(static_cast<size_t>(m.rows()), 1);
    for (const auto& [rc, v] : m.entries()) {
        auto& l = lcm[static_cast<size_t>(rc.first)];
        bigint d = denominator(v);
        l = l / gcd(l, d) * d;
    }
    for (const auto& [rc, v] : m.entries())
        rows[static_cast<size_t>(rc.first)][static_cast<size_t>(rc.second)] =
            numerator(v) * (lcm[static_cast<size_t>(rc.first)] / denominator(v));
    return rows;
}

// Reduced row echelon form over the rationals; returns pivot columns.
std::vector<int> rref(std::vector<std::vector<bigrat>>& m, int cols) {
    const int rows = static_cast<int>(m.size());
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pivot = -1;
        for (int i = r; i < rows; ++i)
            if (m[static_cast<size_t>(i)][static_cast<size_t>(c)] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[static_cast<size_t>(r)], m[static_cast<size_t>(pivot)]);
        auto& pr = m[static_cast<size_t>(r)];
        const bigrat inv = pr[static_cast<size_t>(c)];
        for (int j = c; j < cols; ++j) pr[static_cast<size_t>(j)] /= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r) continue;
            auto& row = m[static_cast<size_t>(i)];
            const bigrat f = row[static_cast<size_t>(c)];
            if (f == 0) continue;
            for (int j = c; j < cols; ++j)
                row[static_cast<size_t>(j)] -= f * pr[static_cast<size_t>(j)];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

int rank(const qmatrix& m) {
    auto rows = clear_denominators(m);
    return bareiss_rank(rows, m.cols());
}

int rank(const zmatrix& m) {
    std::vector<std::vector<bigint>> rows(static_cast<size_t>(m.rows()),
                                          std::vector<bigint>(static_cast<size_t>(m.cols()), 0));
    for (const auto& [rc, v] : m.entries())
        rows[static_cast<size_t>(rc.first)][static_cast<size_t>(rc.second)] = v;
    return bareiss_rank(rows, m.cols());
}

int rank_dense(std::vector<std::vector<bigrat>> m) {
    if (m.empty()) return 0;
    const int cols = static_cast<int>(m[0].size());
    return static_cast<int>(rref(m, cols).size());
}

std::vector<std::vector<bigrat>> kernel_basis_dense(std::vector<std::vector<bigrat>> m,
                                                    int cols) {
    auto pivots = rref(m, cols);
    std::vector<bool> is_pivot(static_cast<size_t>(cols), false);
    for (int c : pivots) is_pivot[static_cast<size_t>(c)] = true;
    std::vector<std::vector<bigrat>> basis;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[static_cast<size_t>(free)]) continue;
        std::vector<bigrat> v(static_cast<size_t>(cols), bigrat(0));
        v[static_cast<size_t>(free)] = 1;
        for (size_t r = 0; r < pivots.size(); ++r)
            v[static_cast<size_t>(pivots[r])] = -m[r][static_cast<size_t>(free)];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<std::vector<bigrat>> kernel_basis(const qmatrix& m) {
    std::vector<std::vector<bigrat>> rows(static_cast<size_t>(m.rows()),
                                          std::vector<bigrat>(static_cast<size_t>(m.cols()), bigrat(0)));
    for (const auto& [rc, v] : m.entries())
        rows[static_cast<size_t>(rc.first)][static_cast<size_t>(rc.second)] = v;
    return kernel_basis_dense(std::move(rows), m.cols());
}

std::vector<std::vector<bigint>> integer_kernel_basis(const zmatrix& m) {
    const int rows = m.rows(), cols = m.cols();
    // Column operations tracked in u; columns of u over zero columns of a form
    // a basis of the kernel lattice.
    std::vector<std::vector<bigint>> a(static_cast<size_t>(rows),
                                       std::vector<bigint>(static_cast<size_t>(cols), 0));
    for (const auto& [rc, v] : m.entries())
        a[static_cast<size_t>(rc.first)][static_cast<size_t>(rc.second)] = v;
    std::vector<std::vector<bigint>> u(static_cast<size_t>(cols),
                                       std::vector<bigint>(static_cast<size_t>(cols), 0));
    for (int i = 0; i < cols; ++i) u[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;

    auto col_submul = [&](int dst, int src, const bigint& q) {
        if (q == 0) return;
        for (int r = 0; r < rows; ++r)
            a[static_cast<size_t>(r)][static_cast<size_t>(dst)] -=
                q * a[static_cast<size_t>(r)][static_cast<size_t>(src)];
        for (int r = 0; r < cols; ++r)
            u[static_cast<size_t>(r)][static_cast<size_t>(dst)] -=
                q * u[static_cast<size_t>(r)][static_cast<size_t>(src)];
    };
    auto col_swap = [&](int i, int j) {
        if (i == j) return;
        for (int r = 0; r < rows; ++r)
            std::swap(a[static_cast<size_t>(r)][static_cast<size_t>(i)],
                      a[static_cast<size_t>(r)][static_cast<size_t>(j)]);
        for (int r = 0; r < cols; ++r)
            std::swap(u[static_cast<size_t>(r)][static_cast<size_t>(i)],
                      u[static_cast<size_t>(r)][static_cast<size_t>(j)]);
    };
    auto col_negate = [&](int i) {
        for (int r = 0; r < rows; ++r)
            a[static_cast<size_t>(r)][static_cast<size_t>(i)] =
                -a[static_cast<size_t>(r)][static_cast<size_t>(i)];
        for (int r = 0; r < cols; ++r)
            u[static_cast<size_t>(r)][static_cast<size_t>(i)] =
                -u[static_cast<size_t>(r)][static_cast<size_t>(i)];
    };

    int c0 = 0;
    for (int r = 0; r < rows && c0 < cols; ++r) {
        // Euclidean reduction across columns c0..cols-1 on row r.
        while (true) {
            int nonzero = -1;
            bigint best;
            for (int c = c0; c < cols; ++c) {
                const bigint& x = a[static_cast<size_t>(r)][static_cast<size_t>(c)];
                if (x == 0) continue;
                if (nonzero < 0 || abs(x) < best) {
                    nonzero = c;
                    best = abs(x);
                }
            }
            if (nonzero < 0) break;
            col_swap(c0, nonzero);
            if (a[static_cast<size_t>(r)][static_cast<size_t>(c0)] < 0) col_negate(c0);
            bool reduced = true;
            const bigint p = a[static_cast<size_t>(r)][static_cast<size_t>(c0)];
            for (int c = c0 + 1; c < cols; ++c) {
                const bigint& x = a[static_cast<size_t>(r)][static_cast<size_t>(c)];
                if (x == 0) continue;
                bigint q = x / p;  // truncated division; remainder handled next sweep
                col_submul(c, c0, q);
                if (a[static_cast<size_t>(r)][static_cast<size_t>(c)] != 0) reduced = false;
            }
            if (reduced) {
                ++c0;
                break;
            }
        }
    }

    std::vector<std::vector<bigint>> basis;
    for (int c = c0; c < cols; ++c) {
        std::vector<bigint> v(static_cast<size_t>(cols));
        for (int r = 0; r < cols; ++r) v[static_cast<size_t>(r)] = u[static_cast<size_t>(r)][static_cast<size_t>(c)];
        basis.push_back(std::move(v));
    }

    // Canonicalize: column-HNF of the basis matrix, then sign-normalize and
    // sort so identical kernels always serialize identically.
    if (!basis.empty()) {
        const int k = static_cast<int>(basis.size());
        int row = 0, done = 0;
        while (row < cols && done < k) {
            while (true) {
                int nonzero = -1;
                bigint best;
                for (int c = done; c < k; ++c) {
                    const bigint& x = basis[static_cast<size_t>(c)][static_cast<size_t>(row)];
                    if (x == 0) continue;
                    if (nonzero < 0 || abs(x) < best) {
                        nonzero = c;
                        best = abs(x);
                    }
                }
                if (nonzero < 0) break;
                std::swap(basis[static_cast<size_t>(done)], basis[static_cast<size_t>(nonzero)]);
                if (basis[static_cast<size_t>(done)][static_cast<size_t>(row)] < 0)
                    for (auto& x : basis[static_cast<size_t>(done)]) x = -x;
                const bigint p = basis[static_cast<size_t>(done)][static_cast<size_t>(row)];
                bool clean = true;
                for (int c = done + 1; c < k; ++c) {
                    const bigint& x = basis[static_cast<size_t>(c)][static_cast<size_t>(row)];
                    if (x == 0) continue;
                    bigint q = x / p;
                    for (int r2 = 0; r2 < cols; ++r2)
                        basis[static_cast<size_t>(c)][static_cast<size_t>(r2)] -=
                            q * basis[static_cast<size_t>(done)][static_cast<size_t>(r2)];
                    if (basis[static_cast<size_t>(c)][static_cast<size_t>(row)] != 0) clean = false;
                }
                if (clean) {
                    // Reduce earlier columns against this pivot.
                    for (int c = 0; c < done; ++c) {
                        bigint x = basis[static_cast<size_t>(c)][static_cast<size_t>(row)];
                        bigint q = x / p;
                        if (x % p != 0 && ((x < 0) != (p < 0))) q -= 1;  // floor
                        if (q != 0)
                            for (int r2 = 0; r2 < cols; ++r2)
                                basis[static_cast<size_t>(c)][static_cast<size_t>(r2)] -=
                                    q * basis[static_cast<size_t>(done)][static_cast<size_t>(r2)];
                    }
                    ++done;
                    break;
                }
            }
            ++row;
        }
        for (auto& v : basis) {
            for (const auto& x : v) {
                if (x == 0) continue;
                if (x < 0)
                    for (auto& y : v) y = -y;
                break;
            }
        }
        std::sort(basis.begin(), basis.end());
    }
    return basis;
}

int sparse_rank(std::vector<std::map<int, bigint>> rows) {
    // Bucket rows by leading column; repeatedly pick the sparsest row of the
    // lowest nonempty column as pivot and reduce the rest of its bucket.
    std::map<int, std::vector<int>> by_lead;
    auto file = [&](int r) {
        if (!rows[static_cast<size_t>(r)].empty())
            by_lead[rows[static_cast<size_t>(r)].begin()->first].push_back(r);
    };
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) file(r);

    auto reduce_content = [](std::map<int, bigint>& row) {
        bigint g(0);
        for (const auto& [c, v] : row) {
            g = gcd(g, v);
            if (g == 1) return;
        }
        if (g > 1)
            for (auto& [c, v] : row) v /= g;
    };

    int rank = 0;
    while (!by_lead.empty()) {
        auto bucket = by_lead.begin();
        const int col = bucket->first;
        auto rs = std::move(bucket->second);
        by_lead.erase(bucket);
        int pivot = -1;
        for (int r : rs)
            if (pivot < 0 ||
                rows[static_cast<size_t>(r)].size() < rows[static_cast<size_t>(pivot)].size())
                pivot = r;
        ++rank;
        const auto& prow = rows[static_cast<size_t>(pivot)];
        const bigint pv = prow.begin()->second;
        for (int r : rs) {
            if (r == pivot) continue;
            auto& row = rows[static_cast<size_t>(r)];
            const bigint rv = row.begin()->second;
            std::map<int, bigint> next;
            auto it = row.begin();
            auto jt = prow.begin();
            while (it != row.end() || jt != prow.end()) {
                if (jt == prow.end() || (it != row.end() && it->first < jt->first)) {
                    next.emplace_hint(next.end(), it->first, pv * it->second);
                    ++it;
                } else if (it == row.end() || jt->first < it->first) {
                    next.emplace_hint(next.end(), jt->first, -rv * jt->second);
                    ++jt;
                } else {
                    bigint v = pv * it->second - rv * jt->second;
                    if (v != 0) next.emplace_hint(next.end(), it->first, std::move(v));
                    ++it;
                    ++jt;
                }
            }
            next.erase(col);
            reduce_content(next);
            row = std::move(next);
            file(r);
        }
        rows[static_cast<size_t>(pivot)].clear();
    }
    return rank;
}

std::optional<std::vector<bigrat>> in_span(const std::vector<std::vector<bigrat>>& vectors,
                                           const std::vector<bigrat>& target) {
    bool target_zero = true;
    for (const auto& x : target)
        if (x != 0) {
            target_zero = false;
            break;
        }
    if (vectors.empty())
        return target_zero ? std::optional<std::vector<bigrat>>(std::vector<bigrat>{})
                           : std::nullopt;

    const int dim = static_cast<int>(target.size());
    const int k = static_cast<int>(vectors.size());
    for (const auto& v : vectors)
        if (static_cast<int>(v.size()) != dim) throw error("in_span: dimension mismatch");

    // Solve [V | t] with vectors as columns; RREF and read the combination.
    std::vector<std::vector<bigrat>> m(static_cast<size_t>(dim),
                                       std::vector<bigrat>(static_cast<size_t>(k + 1), bigrat(0)));
    for (int c = 0; c < k; ++c)
        for (int r = 0; r < dim; ++r)
            m[static_cast<size_t>(r)][static_cast<size_t>(c)] = vectors[static_cast<size_t>(c)][static_cast<size_t>(r)];
    for (int r = 0; r < dim; ++r) m[static_cast<size_t>(r)][static_cast<size_t>(k)] = target[static_cast<size_t>(r)];

    auto pivots = rref(m, k + 1);
    if (!pivots.empty() && pivots.back() == k) return std::nullopt;  // inconsistent
    std::vector<bigrat> coeff(static_cast<size_t>(k), bigrat(0));
    for (size_t r = 0; r < pivots.size(); ++r)
        coeff[static_cast<size_t>(pivots[r])] = m[r][static_cast<size_t>(k)];
    return coeff;
}

}  // namespace dicell
