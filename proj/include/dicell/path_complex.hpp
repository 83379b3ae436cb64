#pragma once

#include "dicell/chain.hpp"
#include "dicell/digraph.hpp"
#include "dicell/linalg.hpp"

#include <string>
#include <vector>

namespace dicell {

/// Per-degree dimensions, boundary ranks and Betti numbers, with generator
/// representatives for the nonzero homology classes.
struct homology_report {
    struct row {
        int degree = 0;
        int dim = 0;        // chain space dimension in this degree
        int rank_down = 0;  // rank of the boundary leaving this degree
        int betti = 0;
        bool upper_bound_only = false;  // top cubical degree without the next boundary
        std::vector<qchain> generators;
    };
    std::string digraph_name;
    bool reduced = false;
    std::vector<row> rows;

    std::vector<int> betti() const {
        std::vector<int> b;
        b.reserve(rows.size());
        for (const auto& r : rows) b.push_back(r.betti);
        return b;
    }
    int betti_at(int degree) const {
        return (degree >= 0 && degree < static_cast<int>(rows.size()))
                   ? rows[static_cast<size_t>(degree)].betti
                   : 0;
    }
};

std::vector<path> enumerate_allowed_paths(const digraph& g, int n);

enum class coeff_domain { integers, rationals };

/// Basis of the degree-n component of the path complex: allowed chains whose
/// boundary stays allowed. The integer domain carries the lattice basis, the
/// rational domain its Q-span.
struct omega_basis {
    int degree = 0;
    std::vector<path> columns;  // allowed paths indexing the coordinates
    std::vector<qchain> basis;
    std::vector<ichain> lattice;  // filled for the integer domain
};

omega_basis omega_space(const digraph& g, int n,
                        coeff_domain domain = coeff_domain::rationals);

homology_report path_homology(const digraph& g, bool reduced = false);

/// Homology of the sub-complex spanned by the given graded chains; throws
/// not_closed_error when a boundary leaves the span.
homology_report homology_of_chain_subspace(const std::vector<qchain>& basis,
                                           const std::string& name = "subspace",
                                           bool reduced = false);

bool chain_in_span(const std::vector<qchain>& span, const qchain& target);
std::optional<std::vector<bigrat>> coords_in_span(const std::vector<qchain>& span,
                                                  const qchain& target);

/// True when (a - b) bounds, i.e. both chains represent the same homology
/// class relative to the given next-degree chain space.
bool same_homology_class(const qchain& a, const qchain& b,
                         const std::vector<qchain>& next_degree_basis);

/// Scalar lambda with [a] = lambda [b] modulo boundaries of the next-degree
/// basis, when one exists.
std::optional<bigrat> class_multiple(const qchain& a, const qchain& b,
                                     const std::vector<qchain>& next_degree_basis);

}  // namespace dicell
