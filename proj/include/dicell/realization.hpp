#pragma once

#include "dicell/minimal.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dicell {

/// A minimal path with a witnessing map from the cube and the scale factor c
/// relating the pushed cube generator to the path. Witnesses are non-unique;
/// only the defining properties below are ever compared.
struct admissible_pair {
    minimal_path_record path;
    digraph_map witness;  // cube(degree) -> ambient digraph
    bigint scale;
};

inline constexpr std::uint64_t default_search_budget = std::uint64_t(1) << 26;

/// First witness in canonical search order, if any. The search assigns cube
/// vertices by Hamming weight then index, rooted at f(0..0) = S, f(1..1) = E,
/// and runs inside the supporting digraph.
std::optional<admissible_pair> find_realization(
    const digraph& g, const minimal_path_record& p,
    std::uint64_t budget = default_search_budget);

/// First violated admissibility bound (vertex count, elementary components,
/// edge count, face components), or nullopt when all hold.
std::optional<std::string> quick_reject(const digraph& g, const minimal_path_record& p);

std::vector<admissible_pair> admissible_set(const digraph& g, int n,
                                            std::uint64_t budget = default_search_budget);

/// Recomputes the defining properties of a candidate pair: the witness is a
/// digraph map, pushes the cube generator to scale * path, maps corners to
/// S/E, and has image digraph equal to the support.
bool verify_admissible_pair(const digraph& g, const admissible_pair& pair);

/// Checks that every minimal component of the pair's boundary is itself
/// admissible; returns violations (expected empty).
std::vector<std::string> check_face_admissibility(const digraph& g, const admissible_pair& p,
                                                  std::uint64_t budget = default_search_budget);

}  // namespace dicell
