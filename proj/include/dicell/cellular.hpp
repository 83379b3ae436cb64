#pragma once

#include "dicell/realization.hpp"

#include <vector>

namespace dicell {

/// One degree of the cellular chain structure: all admissible pairs in
/// canonical order, a greedy maximal linearly independent sub-list (the
/// working basis), and every pair's coordinates in that basis.
struct cellular_basis {
    int degree = 0;
    std::vector<admissible_pair> pairs;
    std::vector<int> working;                  // indices into pairs
    std::vector<std::vector<bigrat>> coords;   // pairs[i] in terms of working
    std::vector<std::vector<bigrat>> relations;  // kernel of the pair span

    int dim() const { return static_cast<int>(working.size()); }
    bool has_relations() const { return pairs.size() != working.size(); }
    std::vector<qchain> working_chains() const {
        std::vector<qchain> out;
        out.reserve(working.size());
        for (int i : working) out.push_back(to_rational(pairs[static_cast<size_t>(i)].path.chain));
        return out;
    }
};

cellular_basis cellular_chain_space(const digraph& g, int n,
                                    std::uint64_t budget = default_search_budget);

/// Boundary by the incidence-coefficient rule: sum over previous-degree
/// admissible Q of [Q : P] Q, where [Q : P] is +/-1 when +/-Q is smaller than
/// the path boundary of P, else 0.
ichain cellular_boundary_coeff(const admissible_pair& p,
                               const std::vector<admissible_pair>& prev);

/// Boundary by restriction: the plain path boundary of the carried chain,
/// asserted to lie in the span of the previous-degree admissible paths.
qchain cellular_boundary_restricted(const admissible_pair& p,
                                    const std::vector<admissible_pair>& prev);

homology_report cellular_homology(const digraph& g, bool reduced = false,
                                  std::uint64_t budget = default_search_budget);

struct kunneth_report {
    struct row {
        int degree = 0;
        int dim_product = 0, dim_sum = 0;
        int betti_product = 0, betti_sum = 0;
        bool dims_match = false, betti_match = false;
    };
    std::vector<row> rows;
    int cross_pairs_checked = 0;
    std::vector<std::string> failures;
    bool ok() const {
        if (!failures.empty()) return false;
        for (const auto& r : rows)
            if (!r.dims_match || !r.betti_match) return false;
        return true;
    }
};

kunneth_report kunneth_check(const digraph& x, const digraph& y, int max_degree,
                             std::uint64_t budget = default_search_budget);

/// Validates a proposed witness for the chain and computes the scale factor.
std::optional<admissible_pair> pair_from_witness(const digraph& g, const ichain& chain,
                                                 const digraph_map& witness);

}  // namespace dicell
