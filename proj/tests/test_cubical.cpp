#include "dicell/cubical.hpp"

#include <doctest.h>

#include <random>

using namespace dicell;

namespace {

// Exhaustive oracle: every assignment vector, filtered by the edge condition.
int brute_force_cube_count(const digraph& g, int n) {
    const int size = 1 << n;
    const digraph cb = cube(n);
    long total = 1;
    for (int i = 0; i < size; ++i) total *= g.vertex_count();
    int count = 0;
    for (long code = 0; code < total; ++code) {
        long c = code;
        std::vector<int> assign(static_cast<size_t>(size));
        for (int i = 0; i < size; ++i) {
            assign[static_cast<size_t>(i)] = static_cast<int>(c % g.vertex_count());
            c /= g.vertex_count();
        }
        bool ok = true;
        for (auto [u, v] : cb.edges())
            if (!g.step_ok(assign[static_cast<size_t>(u)], assign[static_cast<size_t>(v)])) {
                ok = false;
                break;
            }
        if (ok) ++count;
    }
    return count;
}

digraph k3() { return build_digraph({"0", "1", "2"}, {{"0", "1"}, {"1", "2"}, {"0", "2"}}, "K3"); }

digraph chord_square() {
    return build_digraph({"0", "1", "2", "3"},
                         {{"0", "1"}, {"1", "3"}, {"0", "2"}, {"2", "3"}, {"0", "3"}}, "chord");
}

}  // namespace

TEST_CASE("singular cube enumeration") {
    digraph pt = build_digraph({"*"}, {});
    for (int n = 0; n <= 3; ++n) CHECK(enumerate_singular_cubes(pt, n).size() == 1);

    digraph i = build_digraph({"0", "1"}, {{"0", "1"}}, "I");
    CHECK(static_cast<int>(enumerate_singular_cubes(i, 1).size()) ==
          brute_force_cube_count(i, 1));
    CHECK(enumerate_singular_cubes(i, 1).size() == 3);

    CHECK(static_cast<int>(enumerate_singular_cubes(k3(), 2).size()) ==
          brute_force_cube_count(k3(), 2));

    std::mt19937 rng(8080);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 3);
        std::vector<std::string> labels;
        for (int v = 0; v < n; ++v) labels.push_back(std::to_string(v));
        std::vector<std::pair<std::string, std::string>> edges;
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (u != v && rng() % 2 == 0)
                    edges.emplace_back(labels[static_cast<size_t>(u)],
                                       labels[static_cast<size_t>(v)]);
        digraph g = build_digraph(labels, edges);
        for (int d = 1; d <= 2; ++d)
            CHECK(static_cast<int>(enumerate_singular_cubes(g, d).size()) ==
                  brute_force_cube_count(g, d));
    }
}

TEST_CASE("degeneracy") {
    digraph t = k3();
    CHECK(is_degenerate(singular_cube{1, {0, 0}}));
    CHECK(is_degenerate(singular_cube{2, {0, 1, 0, 1}}));  // independent of the first slot
    CHECK_FALSE(is_degenerate(singular_cube{2, {0, 1, 2, 2}}));
    CHECK_FALSE(is_degenerate(singular_cube{0, {0}}));
    // identity-like embedding of the square
    CHECK_FALSE(is_degenerate(singular_cube{2, {0, 1, 2, 3}}));
}

TEST_CASE("cubical boundary") {
    // constant 1-cube: both faces agree, everything cancels or is degenerate
    CHECK(cubical_boundary(singular_cube{1, {0, 0}}).empty());

    // boundary of boundary vanishes on sampled cubes
    digraph g = chord_square();
    auto cubes = enumerate_singular_cubes(g, 2);
    for (const auto& q : cubes) {
        cube_chain bd = cubical_boundary(q, false);
        CHECK(cubical_boundary(bd, 1, false).empty());
    }

    // faces of degenerate cubes remain degenerate or cancel in pairs
    for (const auto& q : enumerate_singular_cubes(g, 2)) {
        if (!is_degenerate(q)) continue;
        CHECK(cubical_boundary(q).empty());
    }
}

TEST_CASE("cubical homology of small digraphs") {
    digraph pt = build_digraph({"*"}, {});
    auto hp = cubical_homology(pt, 2);
    CHECK(hp.betti() == std::vector<int>{1, 0, 0});

    digraph sq = build_digraph({"0", "1", "2", "3"},
                               {{"0", "1"}, {"0", "2"}, {"1", "3"}, {"2", "3"}}, "S");
    auto hs = cubical_homology(sq, 2);
    CHECK(hs.betti() == std::vector<int>{1, 0, 0});

    auto hex = cubical_homology(exotic_cube(), 2);
    CHECK(hex.betti_at(2) == 1);

    CHECK_THROWS_AS(cubical_homology(pt, 5), cap_exceeded_error);
}

TEST_CASE("tau chain map") {
    digraph t = k3();
    CHECK(tau_chain_map_check(t, singular_cube{2, {0, 0, 0, 0}}));
    CHECK(tau_chain_map_check(t, singular_cube{2, {0, 1, 2, 2}}));
    CHECK(tau_chain_map_check(t, singular_cube{2, {0, 1, 0, 2}}));
    digraph g = chord_square();
    for (const auto& q : enumerate_singular_cubes(g, 2)) CHECK(tau_chain_map_check(g, q));
}

TEST_CASE("three cube identities over the chord square") {
    digraph g = chord_square();
    const singular_cube f_plus{2, {0, 0, 1, 3}};
    const singular_cube f_minus{2, {0, 1, 0, 3}};
    const singular_cube g_plus{2, {0, 2, 1, 3}};
    const singular_cube g_minus{2, {0, 1, 2, 3}};

    // the pushed squares cancel in pairs
    ichain sum = push_forward(cube_map(g, f_plus), omega(2)) +
                 push_forward(cube_map(g, f_minus), omega(2));
    CHECK(sum.zero());
    ichain gsum = push_forward(cube_map(g, g_plus), omega(2)) +
                  push_forward(cube_map(g, g_minus), omega(2));
    CHECK(gsum.zero());

    // The three-cube boundaries reproduce the tabulated squares up to
    // edge-thin residue (single-edge image, zero pushed chain).
    auto matches_mod_thin = [&](const singular_cube& big, cube_chain expected) {
        CHECK(check_digraph_map(cube_map(g, big)));
        CHECK_FALSE(is_degenerate(big));
        cube_chain residue = cubical_boundary(big);
        for (const auto& [a, coef] : expected) {
            auto it = residue.find(a);
            REQUIRE(it != residue.end());
            CHECK(it->second == coef);
            residue.erase(it);
        }
        for (const auto& [a, coef] : residue)
            CHECK(is_edge_thin(g, singular_cube{2, a}));
        CHECK(tau(g, residue, 2).zero());
        CHECK(bounds_in_normalized(g, residue, 2));
    };

    const singular_cube f_tilde{3, {0, 0, 1, 1, 0, 0, 1, 3}};
    matches_mod_thin(f_tilde, {{f_plus.assign, 1}, {f_minus.assign, 1}});

    const singular_cube g_tilde{3, {0, 0, 2, 2, 0, 1, 2, 3}};
    matches_mod_thin(g_tilde, {{g_plus.assign, 1}, {g_minus.assign, 1}});

    const singular_cube h{3, {0, 0, 2, 2, 0, 1, 3, 3}};
    const singular_cube f1{2, {0, 1, 3, 3}};
    const singular_cube f2{2, {0, 2, 0, 3}};
    matches_mod_thin(h, {{g_plus.assign, 1}, {f1.assign, 1}, {f2.assign, -1}});
}

TEST_CASE("conjecture probe") {
    auto ps3 = conjecture_probe(k_square(3), 2);
    CHECK(ps3.agree_all());
    CHECK(ps3.verified_up_to == 2);
    CHECK(ps3.rows[0].betti_cellular == 1);
    CHECK(ps3.rows[1].betti_cellular == 0);
    CHECK(ps3.rows[2].betti_cellular == 0);

    auto pch = conjecture_probe(chord_square(), 2);
    CHECK(pch.agree_all());

    auto pex = conjecture_probe(exotic_cube(), 2);
    CHECK(pex.agree_all());
    CHECK(pex.rows[2].betti_cellular == 1);
    CHECK(pex.rows[2].betti_cubical == 1);
}
