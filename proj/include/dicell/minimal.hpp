#pragma once

#include "dicell/chain.hpp"
#include "dicell/digraph.hpp"
#include "dicell/path_complex.hpp"

#include <map>
#include <string>
#include <vector>

namespace dicell {

bool in_omega(const digraph& g, const ichain& c);

/// A minimal path together with its endpoints, supporting digraph and the
/// positional distance tables. Canonical orientation: the lexicographically
/// smallest term carries coefficient +1.
struct minimal_path_record {
    ichain chain;
    int start = -1;
    int end = -1;
    digraph supp;
    std::map<int, int> d_start, d_end;  // ambient vertex index -> distance

    int degree() const { return chain.degree(); }
};

bool is_smaller(const ichain& p_prime, const ichain& p);

inline constexpr std::uint64_t default_minimal_budget = std::uint64_t(1) << 20;

bool is_minimal(const digraph& g, const ichain& p,
                std::uint64_t budget = default_minimal_budget);

std::vector<minimal_path_record> enumerate_minimal_paths(
    const digraph& g, int n, std::uint64_t budget = default_minimal_budget);

/// Union of the edges of the chain's terms and of the terms of its reduced
/// boundary. Requires the chain to lie in the path complex of g.
digraph supp(const digraph& g, const ichain& c);

std::pair<std::map<int, int>, std::map<int, int>> distance_tables(const ichain& c);

minimal_path_record make_record(const digraph& g, const ichain& c);

struct signed_component {
    minimal_path_record record;
    int sign = 1;  // sign * record.chain is the extracted part
};

/// Unique decomposition of a +/-1 invariant chain into minimal components;
/// greedy atom extraction seeded in lexicographic support order (reversed
/// when `reverse_seed`, for uniqueness cross-checks).
std::vector<signed_component> decompose_into_minimal(
    const digraph& g, const ichain& c, std::uint64_t budget = default_minimal_budget,
    bool reverse_seed = false);

/// Structure-theorem diagnostics; an empty list means the record conforms.
std::vector<std::string> validate_structure_theorem(
    const digraph& g, const minimal_path_record& rec,
    std::uint64_t budget = default_minimal_budget);

}  // namespace dicell
