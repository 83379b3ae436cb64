#pragma once

#include "dicell/cellular.hpp"
#include "dicell/path_complex.hpp"

#include <map>
#include <vector>

namespace dicell {

inline constexpr int default_cubical_cap = 3;
inline constexpr std::uint64_t default_cubical_budget = std::uint64_t(1) << 24;

/// Singular n-cube in a digraph: the assignment of the 2^n cube vertices, in
/// cube index order. The target digraph travels alongside by context.
struct singular_cube {
    int degree = 0;
    std::vector<int> assign;

    auto operator<=>(const singular_cube&) const = default;
};

/// Formal integer sum of singular cubes of one degree, keyed by assignment.
using cube_chain = std::map<std::vector<int>, bigint>;

std::vector<singular_cube> enumerate_singular_cubes(const digraph& g, int n,
                                                    search_budget* budget = nullptr);

bool is_degenerate(const singular_cube& q);

/// Face restriction along the inclusion that inserts epsilon at slot j
/// (1-indexed from the most significant coordinate).
singular_cube cube_face(const singular_cube& q, int j, int epsilon);

/// Signed sum of the 2n face restrictions; degenerate terms are dropped when
/// `normalize` is set.
cube_chain cubical_boundary(const singular_cube& q, bool normalize = true);
cube_chain cubical_boundary(const cube_chain& c, int degree, bool normalize = true);

homology_report cubical_homology(const digraph& g, int max_degree,
                                 int cap = default_cubical_cap,
                                 std::uint64_t budget = default_cubical_budget);

/// Boundary-compatibility of the pushed cube generator on acyclic targets.
bool tau_chain_map_check(const digraph& g, const singular_cube& q);

digraph_map cube_map(const digraph& g, const singular_cube& q);

/// Pushed path chain of a formal cube sum (the chain-level shadow).
ichain tau(const digraph& g, const cube_chain& c, int degree);

/// Image digraph spans at most one edge; such cubes push to zero in positive
/// degree and factor through the interval.
bool is_edge_thin(const digraph& g, const singular_cube& q);

/// Whether the normalized cube chain lies in the boundary image from one
/// degree up (exhaustive enumeration of that degree).
bool bounds_in_normalized(const digraph& g, const cube_chain& c, int degree,
                          search_budget* budget = nullptr);

struct probe_report {
    struct row {
        int degree = 0;
        int betti_cellular = 0;
        int betti_cubical = 0;
        bool agree = false;
        bool upper_bound_only = false;
    };
    std::vector<row> rows;
    bool budget_exceeded = false;
    int verified_up_to = -1;  // last degree with an exact comparison
    bool agree_all() const {
        for (const auto& r : rows)
            if (!r.upper_bound_only && !r.agree) return false;
        return true;
    }
};

/// Compares cellular and singular cubical Betti numbers up to max_degree on an
/// acyclic digraph. Budget overruns are reported, not failed.
probe_report conjecture_probe(const digraph& g, int max_degree,
                              int cap = default_cubical_cap,
                              std::uint64_t budget = default_cubical_budget);

}  // namespace dicell
