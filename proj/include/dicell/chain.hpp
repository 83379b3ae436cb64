#pragma once

#include "dicell/digraph.hpp"
#include "dicell/types.hpp"

#include <map>
#include <string>
#include <vector>

namespace dicell {

/// Elementary path: ordered vertex-index sequence. Length n = size - 1.
struct path {
    std::vector<int> v;

    int length() const { return static_cast<int>(v.size()) - 1; }
    bool s_regular() const;
    auto operator<=>(const path&) const = default;
};

path face(const path& p, int j);  // delete vertex j

bool allowed_in(const path& p, const digraph& g);

std::string format_path(const path& p, const digraph& g);

/// Sparse chain keyed by elementary paths in canonical (lexicographic) order.
/// Zero coefficients are never stored; the zero chain is degree-agnostic.
template <class C>
class chain {
public:
    chain() = default;
    explicit chain(std::map<path, C> terms) : t_(std::move(terms)) { prune(); }

    static chain unit(const path& p, C coef = C(1)) {
        chain c;
        if (coef != 0) c.t_.emplace(p, std::move(coef));
        return c;
    }

    const std::map<path, C>& terms() const { return t_; }
    bool zero() const { return t_.empty(); }
    // Degree of the stored terms; -1 for the zero chain.
    int degree() const { return t_.empty() ? -1 : t_.begin()->first.length(); }
    int term_count() const { return static_cast<int>(t_.size()); }

    C coeff(const path& p) const {
        auto it = t_.find(p);
        return it == t_.end() ? C(0) : it->second;
    }

    void add(const path& p, const C& coef) {
        if (coef == 0) return;
        auto [it, fresh] = t_.emplace(p, coef);
        if (!fresh) {
            it->second += coef;
            if (it->second == 0) t_.erase(it);
        }
    }

    chain& operator+=(const chain& o) {
        for (const auto& [p, c] : o.t_) add(p, c);
        return *this;
    }
    chain& operator-=(const chain& o) {
        for (const auto& [p, c] : o.t_) add(p, -c);
        return *this;
    }
    chain& operator*=(const C& s) {
        if (s == 0) {
            t_.clear();
            return *this;
        }
        for (auto& [p, c] : t_) c *= s;
        return *this;
    }

    friend chain operator+(chain a, const chain& b) { return a += b; }
    friend chain operator-(chain a, const chain& b) { return a -= b; }
    friend chain operator*(const C& s, chain a) { return a *= s; }
    friend chain operator-(chain a) { return a *= C(-1); }
    bool operator==(const chain&) const = default;
    bool operator<(const chain& o) const { return t_ < o.t_; }

private:
    void prune() {
        for (auto it = t_.begin(); it != t_.end();)
            it = (it->second == 0) ? t_.erase(it) : std::next(it);
    }
    std::map<path, C> t_;
};

using ichain = chain<bigint>;
using qchain = chain<bigrat>;

qchain to_rational(const ichain& c);
ichain to_integer(const qchain& c);  // throws non_integer_chain_error

template <class C>
chain<C> boundary(const chain<C>& c) {
    chain<C> out;
    for (const auto& [p, coef] : c.terms()) {
        if (p.length() < 1) continue;
        C sign(1);
        for (int j = 0; j <= p.length(); ++j) {
            out.add(face(p, j), sign * coef);
            sign = -sign;
        }
    }
    return out;
}

template <class C>
chain<C> push_forward(const digraph_map& f, const chain<C>& c) {
    chain<C> out;
    for (const auto& [p, coef] : c.terms()) {
        path q;
        q.v.reserve(p.v.size());
        for (int v : p.v) q.v.push_back(f.assign[static_cast<size_t>(v)]);
        if (q.s_regular()) out.add(q, coef);
    }
    return out;
}

/// Shuffle product landing in the box product; product vertex (x, y) has index
/// x * y_size + y. The sign counts the unit cells below the staircase.
template <class C>
chain<C> cross_product(const chain<C>& u, const chain<C>& v, int y_size) {
    chain<C> out;
    for (const auto& [px, cx] : u.terms())
        for (const auto& [py, cy] : v.terms()) {
            const int p = px.length(), q = py.length();
            // Walk all interleavings; `below` accumulates, for each x-step, the
            // number of y-steps already behind it.
            std::vector<int> shuffle;  // 0 = x-step, 1 = y-step
            auto rec = [&](auto&& self, int i, int j, int below) -> void {
                if (i == p && j == q) {
                    path z;
                    z.v.reserve(static_cast<size_t>(p + q + 1));
                    int a = 0, b = 0;
                    z.v.push_back(px.v[0] * y_size + py.v[0]);
                    for (int s : shuffle) {
                        if (s == 0)
                            ++a;
                        else
                            ++b;
                        z.v.push_back(px.v[static_cast<size_t>(a)] * y_size +
                                      py.v[static_cast<size_t>(b)]);
                    }
                    if (z.s_regular()) {
                        C sign = (below % 2 == 0) ? C(1) : C(-1);
                        out.add(z, sign * cx * cy);
                    }
                    return;
                }
                if (i < p) {
                    shuffle.push_back(0);
                    self(self, i + 1, j, below + j);
                    shuffle.pop_back();
                }
                if (j < q) {
                    shuffle.push_back(1);
                    self(self, i, j + 1, below);
                    shuffle.pop_back();
                }
            };
            rec(rec, 0, 0, 0);
        }
    return out;
}

/// Standard generator of the degree-n path space of the n-cube, defined as the
/// n-fold cross product of the one-edge generator.
ichain omega(int n, int cap = default_cube_cap);

bigint width(const ichain& c);

std::string format_chain(const ichain& c, const digraph& g);
std::string format_chain(const qchain& c, const digraph& g);

}  // namespace dicell
