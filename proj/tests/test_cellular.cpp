#include "dicell/cellular.hpp"

#include <doctest.h>

using namespace dicell;

namespace {

path pth(std::initializer_list<int> vs) { return path{std::vector<int>(vs)}; }

ichain make_chain(std::initializer_list<std::pair<std::vector<int>, int>> terms) {
    ichain c;
    for (const auto& [vs, coef] : terms) c.add(path{vs}, bigint(coef));
    return c;
}

}  // namespace

TEST_CASE("k-square chain space has rank k-1 in degree 2") {
    digraph s4 = k_square(4);
    auto cb = cellular_chain_space(s4, 2);
    CHECK(cb.pairs.size() == 6);  // pairwise differences of the four squares
    CHECK(cb.dim() == 3);
    CHECK(cb.has_relations());
    CHECK_FALSE(cb.relations.empty());

    // the tabulated summability: e_{S1E} - e_{S3E} = (e_{S1E} - e_{S2E}) + (e_{S2E} - e_{S3E})
    const int s = s4.index_of("S"), e = s4.index_of("E");
    auto diff = [&](int i, int j) {
        return make_chain({{{s, s4.index_of(std::to_string(i)), e}, 1},
                           {{s, s4.index_of(std::to_string(j)), e}, -1}});
    };
    std::vector<qchain> span{to_rational(diff(1, 2)), to_rational(diff(2, 3))};
    auto coeffs = coords_in_span(span, to_rational(diff(1, 3)));
    REQUIRE(coeffs.has_value());
    CHECK(*coeffs == std::vector<bigrat>{1, 1});

    for (int k = 2; k <= 6; ++k) CHECK(cellular_chain_space(k_square(k), 2).dim() == k - 1);
}

TEST_CASE("cellular boundary routes") {
    digraph t = build_digraph({"0", "1", "2"}, {{"0", "1"}, {"1", "2"}, {"0", "2"}}, "K3");
    auto cells2 = admissible_set(t, 2);
    auto cells1 = admissible_set(t, 1);
    auto cells0 = admissible_set(t, 0);
    REQUIRE(cells2.size() == 1);
    REQUIRE(cells1.size() == 3);

    ichain bd = cellular_boundary_coeff(cells2[0], cells1);
    CHECK(bd == make_chain({{{1, 2}, 1}, {{0, 2}, -1}, {{0, 1}, 1}}));
    CHECK(to_rational(bd) == cellular_boundary_restricted(cells2[0], cells1));

    // 1-cells against vertices
    for (const auto& e : cells1) {
        ichain b1 = cellular_boundary_coeff(e, cells0);
        CHECK(to_rational(b1) == cellular_boundary_restricted(e, cells0));
        CHECK(b1 == boundary(e.path.chain));
    }

    // square cell: boundary of the unique 2-cell of the square digraph
    digraph sq = build_digraph({"0", "1", "2", "3"},
                               {{"0", "1"}, {"0", "2"}, {"1", "3"}, {"2", "3"}}, "S");
    auto sq2 = admissible_set(sq, 2);
    REQUIRE(sq2.size() == 1);
    ichain sqbd = cellular_boundary_coeff(sq2[0], admissible_set(sq, 1));
    CHECK(sqbd == make_chain({{{1, 3}, 1}, {{0, 1}, 1}, {{2, 3}, -1}, {{0, 2}, -1}}));

    // boundary escape: 1-cells alone cannot absorb a 2-cell boundary
    CHECK_THROWS_AS(cellular_boundary_restricted(cells2[0], cells0),
                    boundary_escapes_span_error);
}

TEST_CASE("cellular homology of reference digraphs") {
    for (int k = 2; k <= 6; ++k) {
        auto h = cellular_homology(k_square(k));
        CHECK(h.betti_at(0) == 1);
        for (int d = 1; d <= 3; ++d) CHECK(h.betti_at(d) == 0);
    }

    auto hex = cellular_homology(exotic_cube());
    CHECK(hex.betti_at(0) == 1);
    CHECK(hex.betti_at(1) == 0);
    CHECK(hex.betti_at(2) == 1);
    CHECK(hex.betti_at(3) == 0);

    auto hc5 = cellular_homology(circulant(5, {1, 2}));
    CHECK(hc5.betti() == std::vector<int>{1, 1, 0, 0, 0});

    auto hc7 = cellular_homology(circulant(7, {1, 3}));
    CHECK(hc7.betti_at(0) == 1);
    CHECK(hc7.betti_at(1) == 2);
    CHECK(hc7.betti_at(2) == 1);
    CHECK(hc7.betti_at(3) == 0);

    // reduced homology of a contractible shape vanishes
    auto hred = cellular_homology(k_square(3), true);
    for (int d = 0; d <= 3; ++d) CHECK(hred.betti_at(d) == 0);
}

TEST_CASE("cellular dimensions never exceed the path complex") {
    for (const digraph& g : {circulant(5, {1, 2}), circulant(7, {1, 3})}) {
        for (int d = 0; d < g.vertex_count(); ++d) {
            auto cb = cellular_chain_space(g, d);
            auto ob = omega_space(g, d);
            CHECK(cb.dim() <= static_cast<int>(ob.basis.size()));
            // the circulants carry the full path complex as CW structure
            CHECK(cb.dim() == static_cast<int>(ob.basis.size()));
        }
    }
}

TEST_CASE("kunneth identities") {
    digraph i = build_digraph({"0", "1"}, {{"0", "1"}}, "I");
    auto rii = kunneth_check(i, i, 2);
    CHECK(rii.ok());
    REQUIRE(rii.rows.size() == 3);
    CHECK(rii.rows[1].dim_product == 4);
    CHECK(rii.rows[1].dim_sum == 4);
    CHECK(rii.rows[0].betti_product == 1);
    CHECK(rii.rows[1].betti_product == 0);
    CHECK(rii.rows[2].betti_product == 0);

    digraph t = build_digraph({"0", "1", "2"}, {{"0", "1"}, {"1", "2"}, {"0", "2"}}, "K3");
    auto rti = kunneth_check(t, i, 3);
    CHECK(rti.ok());
    CHECK(rti.rows[0].betti_product == 1);
    CHECK(rti.rows[1].betti_product == 0);

    digraph c3 = circulant(3, {1});
    auto rci = kunneth_check(c3, i, 2);
    CHECK(rci.ok());
    CHECK(rci.rows[0].betti_product == 1);
    CHECK(rci.rows[1].betti_product == 1);
    CHECK(rci.rows[2].betti_product == 0);
}

TEST_CASE("functoriality on acyclic digraphs") {
    // a digraph map between acyclic digraphs sends admissible cells into the
    // admissible span and commutes with the boundary
    digraph g = build_digraph({"0", "1", "2", "3", "4", "5"},
                              {{"0", "1"}, {"0", "2"}, {"0", "4"}, {"1", "3"}, {"1", "5"},
                               {"2", "3"}, {"2", "4"}, {"3", "5"}, {"4", "5"}},
                              "suppA4");
    // collapse onto the square 0,1,2,3 (vertices 4 -> 2, 5 -> 3)
    digraph_map f = make_digraph_map(g, g, {0, 1, 2, 3, 2, 3});
    REQUIRE(check_digraph_map(f));
    REQUIRE(is_acyclic(g));

    for (int d = 1; d <= 3; ++d) {
        auto cells = admissible_set(g, d);
        std::vector<qchain> target_span;
        for (const auto& pr : cells) target_span.push_back(to_rational(pr.path.chain));
        for (const auto& pr : cells) {
            ichain pushed = push_forward(f, pr.path.chain);
            CHECK(boundary(pushed) == push_forward(f, boundary(pr.path.chain)));
            if (!pushed.zero()) {
                auto lower = admissible_set(g, d);
                CHECK(chain_in_span(target_span, to_rational(pushed)));
            }
        }
    }
}
