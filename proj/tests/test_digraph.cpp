#include "dicell/digraph.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace dicell;

namespace {

digraph k3() { return build_digraph({"0", "1", "2"}, {{"0", "1"}, {"1", "2"}, {"0", "2"}}, "K3"); }
digraph c3() { return build_digraph({"0", "1", "2"}, {{"0", "1"}, {"1", "2"}, {"2", "0"}}, "C3"); }

bool is_isomorphism(const digraph& g, const digraph& h, const std::vector<int>& f) {
    if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count()) return false;
    std::set<int> image(f.begin(), f.end());
    if (static_cast<int>(image.size()) != g.vertex_count()) return false;
    for (auto [u, v] : g.edges())
        if (!h.has_edge(f[static_cast<size_t>(u)], f[static_cast<size_t>(v)])) return false;
    return true;
}

}  // namespace

TEST_CASE("build_digraph basics") {
    digraph i = build_digraph({"0", "1"}, {{"0", "1"}}, "I");
    CHECK(i.vertex_count() == 2);
    CHECK(i.edge_count() == 1);
    CHECK(i.has_edge(0, 1));

    digraph t = k3();
    CHECK(t.vertex_count() == 3);
    CHECK(t.edge_count() == 3);

    CHECK_THROWS_AS(build_digraph({"0"}, {{"0", "0"}}), self_loop_error);
    CHECK_THROWS_AS(build_digraph({"0"}, {{"0", "1"}}), unknown_vertex_error);

    // duplicate edges collapse
    digraph d = build_digraph({"a", "b"}, {{"a", "b"}, {"a", "b"}});
    CHECK(d.edge_count() == 1);
}

TEST_CASE("cartesian product") {
    digraph i = build_digraph({"0", "1"}, {{"0", "1"}}, "I");
    digraph sq = cartesian_product(i, i);
    CHECK(sq.vertex_count() == 4);
    CHECK(sq.edge_count() == 4);

    digraph c3d = cartesian_product(sq, i);
    CHECK(c3d.vertex_count() == 8);
    CHECK(c3d.edge_count() == 12);

    digraph point = build_digraph({"*"}, {});
    digraph same = cartesian_product(k3(), point);
    CHECK(same.vertex_count() == 3);
    CHECK(same.edge_count() == 3);

    // |V| and |E| formulas on a couple of shapes
    digraph a = k3(), b = c3();
    digraph p = cartesian_product(a, b);
    CHECK(p.vertex_count() == a.vertex_count() * b.vertex_count());
    CHECK(p.edge_count() ==
          a.vertex_count() * b.edge_count() + a.edge_count() * b.vertex_count());
}

TEST_CASE("cube generator") {
    CHECK(cube(0).vertex_count() == 1);
    CHECK(cube(0).edge_count() == 0);
    CHECK(cube(2).vertex_count() == 4);
    CHECK(cube(2).edge_count() == 4);
    CHECK(cube(3).vertex_count() == 8);
    CHECK(cube(3).edge_count() == 12);
    CHECK_THROWS_AS(cube(7), cap_exceeded_error);

    // cube(n) equals cube(n-1) box I after relabeling
    digraph i = build_digraph({"0", "1"}, {{"0", "1"}});
    for (int n = 1; n <= 4; ++n) {
        digraph lhs = cube(n);
        digraph rhs = cartesian_product(cube(n - 1), i);
        CHECK(lhs.edges() == rhs.edges());
    }
}

TEST_CASE("line digraph") {
    digraph i = line_digraph({true});
    CHECK(i.vertex_count() == 2);
    CHECK(i.has_edge(0, 1));
    digraph zig = line_digraph({true, false});
    CHECK(zig.has_edge(0, 1));
    CHECK(zig.has_edge(2, 1));
    CHECK(line_digraph({}).vertex_count() == 1);
}

TEST_CASE("circulant") {
    digraph c5 = circulant(5, {1, 2});
    CHECK(c5.vertex_count() == 5);
    CHECK(c5.edge_count() == 10);
    digraph c7 = circulant(7, {1, 3});
    CHECK(c7.vertex_count() == 7);
    CHECK(c7.edge_count() == 14);
    digraph c3d = circulant(3, {1});
    CHECK(c3d.edges() == c3().edges());
    CHECK_THROWS_AS(circulant(5, {3}), bad_jump_error);
    CHECK_THROWS_AS(circulant(5, {2, 1}), bad_jump_error);

    // vertex transitivity: rotation by one is an isomorphism
    for (const digraph& g : {c5, c7}) {
        std::vector<int> rot;
        for (int v = 0; v < g.vertex_count(); ++v) rot.push_back((v + 1) % g.vertex_count());
        CHECK(is_isomorphism(g, g, rot));
    }
}

TEST_CASE("johnson") {
    digraph j42 = johnson(4, 2);
    CHECK(j42.vertex_count() == 6);
    CHECK(j42.edge_count() == 12);

    // independent enumeration oracle from the subset rule
    {
        std::vector<std::set<int>> subsets;
        for (int a = 1; a <= 4; ++a)
            for (int b = a + 1; b <= 4; ++b) subsets.push_back({a, b});
        int expected_edges = 0;
        for (const auto& s : subsets)
            for (const auto& t : subsets) {
                if (&s == &t) continue;
                std::set<int> only_s, only_t;
                std::set_difference(s.begin(), s.end(), t.begin(), t.end(),
                                    std::inserter(only_s, only_s.end()));
                std::set_difference(t.begin(), t.end(), s.begin(), s.end(),
                                    std::inserter(only_t, only_t.end()));
                if (only_s.size() == 1 && only_t.size() == 1 && *only_t.begin() < *only_s.begin())
                    ++expected_edges;
            }
        CHECK(j42.edge_count() == expected_edges);
    }

    CHECK(johnson(3, 3).vertex_count() == 1);
    digraph j21 = johnson(2, 1);
    CHECK(j21.vertex_count() == 2);
    CHECK(j21.edge_count() == 1);
    CHECK(j21.label(0) == "{1}");
    CHECK(j21.has_edge(1, 0));  // {2} -> {1}
}

TEST_CASE("k_square and exotic cube") {
    digraph s1 = k_square(1);
    CHECK(s1.vertex_count() == 3);
    CHECK(s1.edge_count() == 2);
    digraph s2 = k_square(2);
    CHECK(s2.vertex_count() == 4);
    CHECK(s2.edge_count() == 4);
    digraph s4 = k_square(4);
    CHECK(s4.vertex_count() == 6);
    CHECK(s4.edge_count() == 8);

    digraph ex = exotic_cube();
    CHECK(ex.vertex_count() == 9);
    CHECK(ex.edge_count() == 15);
    CHECK(is_acyclic(ex));
}

TEST_CASE("acyclicity") {
    CHECK(is_acyclic(k3()));
    CHECK_FALSE(is_acyclic(c3()));
    CHECK(is_acyclic(cube(3)));
    CHECK_FALSE(is_acyclic(circulant(5, {1, 2})));
}

TEST_CASE("digraph maps") {
    digraph t = k3();
    digraph_map ident = make_digraph_map(t, t, {0, 1, 2});
    CHECK(check_digraph_map(ident));

    digraph point = build_digraph({"*"}, {});
    digraph_map constant = make_digraph_map(t, point, {0, 0, 0});
    CHECK(check_digraph_map(constant));
    digraph img = image_digraph(constant);
    CHECK(img.vertex_count() == 1);
    CHECK(img.edge_count() == 0);

    // square -> I with the diagonal flip is not a digraph map
    digraph sq = cube(2);
    digraph i = build_digraph({"0", "1"}, {{"0", "1"}});
    digraph_map bad = make_digraph_map(sq, i, {0, 1, 1, 0});
    CHECK_FALSE(check_digraph_map(bad));

    // composition of digraph maps is a digraph map
    digraph_map f = make_digraph_map(sq, t, {0, 1, 2, 2});
    CHECK(check_digraph_map(f));
    digraph_map g = make_digraph_map(t, t, {0, 0, 2});
    CHECK(check_digraph_map(g));
    digraph_map gf = compose(g, f);
    CHECK(check_digraph_map(gf));

    // realization of the triangle cell: image is all of K3
    digraph_map real = make_digraph_map(sq, t, {0, 1, 2, 2});
    digraph rimg = image_digraph(real);
    CHECK(rimg.vertex_count() == 3);
    CHECK(rimg.edge_count() == 3);
    CHECK(is_subdigraph(rimg, t));

    CHECK_THROWS_AS(image_digraph(bad), not_digraph_map_error);
}
