#include "dicell/chain.hpp"

#include <algorithm>
#include <sstream>

namespace dicell {

bool path::s_regular() const {
    for (size_t i = 0; i < v.size(); ++i)
        for (size_t j = i + 1; j < v.size(); ++j)
            if (v[i] == v[j]) return false;
    return true;
}

path face(const path& p, int j) {
    path q;
    q.v.reserve(p.v.size() - 1);
    for (int i = 0; i < static_cast<int>(p.v.size()); ++i)
        if (i != j) q.v.push_back(p.v[static_cast<size_t>(i)]);
    return q;
}

bool allowed_in(const path& p, const digraph& g) {
    for (size_t i = 0; i + 1 < p.v.size(); ++i)
        if (!g.has_edge(p.v[i], p.v[i + 1])) return false;
    return true;
}

std::string format_path(const path& p, const digraph& g) {
    std::string s = "e[";
    for (size_t i = 0; i < p.v.size(); ++i) s += (i ? " " : "") + g.label(p.v[i]);
    return s + "]";
}

qchain to_rational(const ichain& c) {
    std::map<path, bigrat> t;
    for (const auto& [p, coef] : c.terms()) t.emplace(p, bigrat(coef));
    return qchain(std::move(t));
}

ichain to_integer(const qchain& c) {
    std::map<path, bigint> t;
    for (const auto& [p, coef] : c.terms()) {
        if (!is_integral(coef)) throw non_integer_chain_error();
        t.emplace(p, numerator(coef));
    }
    return ichain(std::move(t));
}

ichain omega(int n, int cap) {
    if (n > cap)
        throw cap_exceeded_error("omega degree " + std::to_string(n) + " exceeds cap " +
                                 std::to_string(cap));
    ichain w = ichain::unit(path{{0}});
    const ichain edge = ichain::unit(path{{0, 1}});
    for (int k = 1; k <= n; ++k) w = cross_product(w, edge, 2);
    return w;
}

bigint width(const ichain& c) {
    bigint w = 0;
    for (const auto& [p, coef] : c.terms()) w += abs(coef);
    return w;
}

namespace {
template <class C>
std::string format_impl(const chain<C>& c, const digraph& g) {
    if (c.zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [p, coef] : c.terms()) {
        C a = coef < 0 ? C(-coef) : coef;
        if (coef < 0)
            os << (first ? "-" : " - ");
        else if (!first)
            os << " + ";
        if (a != 1) os << a.str() << "*";
        os << format_path(p, g);
        first = false;
    }
    return os.str();
}
}  // namespace

std::string format_chain(const ichain& c, const digraph& g) { return format_impl(c, g); }
std::string format_chain(const qchain& c, const digraph& g) { return format_impl(c, g); }

}  // namespace dicell
