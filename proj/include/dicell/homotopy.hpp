#pragma once

#include "dicell/digraph.hpp"

#include <optional>
#include <vector>

namespace dicell {

/// Multi-step homotopy witness: a map from G box I_n restricting to the two
/// compared maps at the ends of the line digraph.
struct homotopy_witness {
    std::vector<bool> signs;  // line digraph orientation per step
    digraph_map big_map;      // source must be G box line_digraph(signs)
};

bool verify_homotopy(const digraph_map& f, const digraph_map& g, const homotopy_witness& w);

struct retraction_check {
    bool is_map = false;
    bool fixes_sub = false;
    bool ok() const { return is_map && fixes_sub; }
};

/// r must map G onto sub (a sub-digraph of G) and restrict to the identity on
/// sub; the relaxed variant reports the two conditions separately.
retraction_check verify_retraction(const digraph& g, const digraph& sub, const digraph_map& r);

/// One-step homotopy between self-maps of a digraph, in either line
/// orientation.
bool one_step_homotopic(const digraph& g, const std::vector<int>& f, const std::vector<int>& h);

inline constexpr std::uint64_t default_contraction_budget = std::uint64_t(1) << 22;

/// Breadth-first search for a chain of one-step homotopies from the identity
/// to a constant map. Absence within budget is inconclusive.
std::optional<std::vector<digraph_map>> search_contraction(
    const digraph& g, int max_steps = 16,
    std::uint64_t budget = default_contraction_budget);

}  // namespace dicell
