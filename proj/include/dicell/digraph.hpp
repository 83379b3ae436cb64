#pragma once

#include "dicell/types.hpp"

#include <string>
#include <utility>
#include <vector>

namespace dicell {

/// Finite simple digraph. Vertices are opaque labels kept in canonical order
/// (input order for parsed graphs, construction order for generators); all
/// downstream tie-breaking uses the resulting indices. Immutable after
/// construction.
class digraph {
public:
    digraph() = default;
    digraph(std::string name, std::vector<std::string> labels,
            std::vector<std::pair<int, int>> edges);

    const std::string& name() const { return name_; }
    int vertex_count() const { return static_cast<int>(labels_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int v) const { return labels_[v]; }
    // Sorted list of (u, v) index pairs.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& out(int v) const { return out_[v]; }
    const std::vector<int>& in(int v) const { return in_[v]; }

    bool has_edge(int u, int v) const { return adj_[u][static_cast<size_t>(v)]; }
    // Edge or equality, the digraph-map condition on one pair.
    bool step_ok(int u, int v) const { return u == v || has_edge(u, v); }

    int index_of(const std::string& label) const;        // -1 when absent
    std::vector<std::pair<std::string, std::string>> edge_labels() const;

    bool same_labelled_graph(const digraph& other) const;

private:
    std::string name_;
    std::vector<std::string> labels_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> out_, in_;
    std::vector<std::vector<bool>> adj_;
};

digraph build_digraph(const std::vector<std::string>& vertices,
                      const std::vector<std::pair<std::string, std::string>>& edges,
                      const std::string& name = "");

digraph cartesian_product(const digraph& g, const digraph& h);

inline constexpr int default_cube_cap = 6;
digraph cube(int n, int cap = default_cube_cap);

// signs[i] = true gives i -> i+1, false the reverse.
digraph line_digraph(const std::vector<bool>& signs);

digraph circulant(int n, const std::vector<int>& jumps);

digraph johnson(int n, int k);

digraph k_square(int k);

digraph exotic_cube();

bool is_acyclic(const digraph& g);

/// Total vertex assignment between two digraphs. Carries value copies of both
/// endpoints so maps stay self-contained.
struct digraph_map {
    digraph source;
    digraph target;
    std::vector<int> assign;  // source index -> target index

    int operator()(int v) const { return assign[v]; }
};

digraph_map make_digraph_map(const digraph& source, const digraph& target,
                             const std::vector<int>& assign);
digraph_map make_digraph_map_by_label(
    const digraph& source, const digraph& target,
    const std::vector<std::pair<std::string, std::string>>& assign);

bool check_digraph_map(const digraph_map& f);

digraph_map compose(const digraph_map& g, const digraph_map& f);  // g after f

// Vertices are the image of the assignment; collapsed edges (f(a) = f(b)) are
// dropped. Vertex order inherits the target's canonical order.
digraph image_digraph(const digraph_map& f);

// Sub-digraph spanned by the given target-index vertex subset and the listed
// edges (which must exist in g).
digraph subdigraph(const digraph& g, const std::vector<int>& vertices,
                   const std::vector<std::pair<int, int>>& edges);

bool is_subdigraph(const digraph& sub, const digraph& g);

}  // namespace dicell
