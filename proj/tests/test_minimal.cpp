#include "dicell/minimal.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace dicell;

namespace {

path pth(std::initializer_list<int> vs) { return path{std::vector<int>(vs)}; }

ichain make_chain(std::initializer_list<std::pair<std::vector<int>, int>> terms) {
    ichain c;
    for (const auto& [vs, coef] : terms) c.add(path{vs}, bigint(coef));
    return c;
}

// triangle with a chord: 0->1->3, 0->2->3, 0->3
digraph chord_square() {
    return build_digraph({"0", "1", "2", "3"},
                         {{"0", "1"}, {"1", "3"}, {"0", "2"}, {"2", "3"}, {"0", "3"}}, "chord");
}

digraph supp_e0123() {
    return build_digraph({"0", "1", "2", "3"},
                         {{"0", "1"}, {"0", "2"}, {"1", "2"}, {"1", "3"}, {"2", "3"}}, "supp0123");
}

// seven-vertex support with five elementary components
digraph supp_five() {
    return build_digraph({"0", "1", "2", "3", "4", "5", "6"},
                         {{"0", "1"}, {"0", "2"}, {"0", "4"}, {"1", "3"}, {"1", "5"},
                          {"2", "3"}, {"2", "4"}, {"3", "6"}, {"4", "5"}, {"4", "6"}, {"5", "6"}},
                         "supp5");
}

ichain five_chain() {
    return make_chain({{{0, 1, 3, 6}, 1},
                       {{0, 1, 5, 6}, -1},
                       {{0, 4, 5, 6}, 1},
                       {{0, 2, 4, 6}, 1},
                       {{0, 2, 3, 6}, -1}});
}

// Exhaustive independent oracle: all +/-1 sign assignments over the allowed
// n-paths (first nonzero positive), kept when boundary-invariant; minimal when
// no other invariant assignment is smaller.
std::vector<ichain> oracle_minimal(const digraph& g, int n) {
    auto paths = enumerate_allowed_paths(g, n);
    const int m = static_cast<int>(paths.size());
    REQUIRE(m <= 13);
    std::vector<ichain> invariants;
    std::vector<int> signs(static_cast<size_t>(m), 0);
    auto rec = [&](auto&& self, int i, bool any) -> void {
        if (i == m) {
            if (!any) return;
            ichain c;
            for (int t = 0; t < m; ++t)
                if (signs[static_cast<size_t>(t)] != 0)
                    c.add(paths[static_cast<size_t>(t)], bigint(signs[static_cast<size_t>(t)]));
            if (in_omega(g, c)) invariants.push_back(c);
            return;
        }
        signs[static_cast<size_t>(i)] = 0;
        self(self, i + 1, any);
        signs[static_cast<size_t>(i)] = 1;
        self(self, i + 1, true);
        if (any) {  // global sign fixed by the first nonzero entry
            signs[static_cast<size_t>(i)] = -1;
            self(self, i + 1, true);
        }
        signs[static_cast<size_t>(i)] = 0;
    };
    rec(rec, 0, false);
    std::vector<ichain> minimal;
    for (const auto& c : invariants) {
        bool has_smaller = false;
        for (const auto& other : invariants) {
            if (is_smaller(other, c) || is_smaller(-other, c)) {
                has_smaller = true;
                break;
            }
        }
        if (!has_smaller) minimal.push_back(c);
    }
    return minimal;
}

std::set<ichain> record_chains(const std::vector<minimal_path_record>& recs) {
    std::set<ichain> out;
    for (const auto& r : recs) out.insert(r.chain);
    return out;
}

}  // namespace

TEST_CASE("is_smaller") {
    ichain p = make_chain({{{0, 1, 3}, 1}, {{0, 2, 3}, -1}});
    ichain e013 = make_chain({{{0, 1, 3}, 1}});
    CHECK(is_smaller(e013, p));
    CHECK_FALSE(is_smaller(p, p));
    CHECK_FALSE(is_smaller(ichain(), p));
    // sign matters: +e023 is not a signed sub-chain of p
    CHECK_FALSE(is_smaller(make_chain({{{0, 2, 3}, 1}}), p));
    CHECK(is_smaller(make_chain({{{0, 2, 3}, -1}}), p));
}

TEST_CASE("is_minimal") {
    CHECK(is_minimal(supp_e0123(), ichain::unit(pth({0, 1, 2, 3}))));

    digraph g = chord_square();
    ichain p = make_chain({{{0, 1, 3}, 1}, {{0, 2, 3}, -1}});
    CHECK(in_omega(g, p));
    CHECK_FALSE(is_minimal(g, p));

    // without the chord the square cell is minimal
    digraph sq = build_digraph({"0", "1", "2", "3"},
                               {{"0", "1"}, {"1", "3"}, {"0", "2"}, {"2", "3"}}, "square");
    CHECK(is_minimal(sq, p));

    digraph ex = exotic_cube();
    ichain exp = make_chain({{{0, 1, 5, 8}, 1},
                             {{0, 2, 5, 8}, -1},
                             {{0, 2, 6, 8}, 1},
                             {{0, 3, 6, 8}, -1},
                             {{0, 3, 7, 8}, 1},
                             {{0, 4, 7, 8}, -1}});
    CHECK(is_minimal(ex, exp));
    CHECK(is_minimal(ex, -exp));  // sign invariance

    CHECK_THROWS_AS(is_minimal(sq, ichain::unit(pth({0, 3}))), not_in_omega_error);
}

TEST_CASE("supp and distance tables") {
    digraph s = supp_e0123();
    ichain e0123 = ichain::unit(pth({0, 1, 2, 3}));
    digraph sp = supp(s, e0123);
    CHECK(sp.vertex_count() == 4);
    CHECK(sp.edge_count() == 5);
    CHECK(sp.edge_labels() ==
          std::vector<std::pair<std::string, std::string>>{
              {"0", "1"}, {"0", "2"}, {"1", "2"}, {"1", "3"}, {"2", "3"}});

    auto rec = make_record(s, e0123);
    for (int v = 0; v < 4; ++v) {
        CHECK(rec.d_start.at(v) == v);
        CHECK(rec.d_end.at(v) == 3 - v);
    }

    digraph i = build_digraph({"0", "1"}, {{"0", "1"}});
    CHECK(supp(i, ichain::unit(pth({0, 1}))).edge_count() == 1);

    // five-component record distance tables as tabulated
    auto rec5 = make_record(supp_five(), five_chain());
    const std::vector<int> ds{0, 1, 1, 2, 1, 2, 3};
    const std::vector<int> de{3, 2, 2, 1, 1, 1, 0};
    for (int v = 0; v < 7; ++v) {
        CHECK(rec5.d_start.at(v) == ds[static_cast<size_t>(v)]);
        CHECK(rec5.d_end.at(v) == de[static_cast<size_t>(v)]);
    }
}

TEST_CASE("supp is edge-minimal") {
    auto check_minimal_support = [](const digraph& g, const ichain& c) {
        digraph sp = supp(g, c);
        for (int drop = 0; drop < sp.edge_count(); ++drop) {
            std::vector<std::pair<std::string, std::string>> edges;
            auto all = sp.edge_labels();
            for (int i = 0; i < static_cast<int>(all.size()); ++i)
                if (i != drop) edges.push_back(all[static_cast<size_t>(i)]);
            digraph smaller = build_digraph(sp.labels(), edges);
            CHECK_FALSE(in_omega(smaller, c));
        }
    };
    check_minimal_support(supp_e0123(), ichain::unit(pth({0, 1, 2, 3})));
    check_minimal_support(supp_five(), five_chain());
}

TEST_CASE("enumerate minimal paths on reference digraphs") {
    digraph t = build_digraph({"0", "1", "2"}, {{"0", "1"}, {"1", "2"}, {"0", "2"}}, "K3");
    auto k3_2 = enumerate_minimal_paths(t, 2);
    REQUIRE(k3_2.size() == 1);
    CHECK(k3_2[0].chain == ichain::unit(pth({0, 1, 2})));

    CHECK(enumerate_minimal_paths(t, 0).size() == 3);
    CHECK(enumerate_minimal_paths(t, 1).size() == 3);
    CHECK(enumerate_minimal_paths(t, 3).empty());

    digraph c5 = circulant(5, {1, 2});
    auto c5_2 = enumerate_minimal_paths(c5, 2);
    std::set<ichain> expected2;
    for (int v = 0; v < 5; ++v) {
        auto r = [&](int k) { return (v + k) % 5; };
        expected2.insert(make_chain({{{r(0), r(1), r(2)}, 1}}));
        // e_{v,v+1,v+3} - e_{v,v+2,v+3}, canonically oriented
        ichain c = make_chain({{{r(0), r(1), r(3)}, 1}, {{r(0), r(2), r(3)}, -1}});
        if (c.terms().begin()->second < 0) c *= bigint(-1);
        expected2.insert(c);
    }
    CHECK(record_chains(c5_2) == expected2);

    digraph c7 = circulant(7, {1, 3});
    auto c7_2 = enumerate_minimal_paths(c7, 2);
    std::set<ichain> expected7;
    for (int v = 0; v < 7; ++v) {
        auto r = [&](int k) { return (v + k) % 7; };
        // e_{v,v+1,v+4} - e_{v,v+3,v+4}
        ichain c = make_chain({{{r(0), r(1), r(4)}, 1}, {{r(0), r(3), r(4)}, -1}});
        if (c.terms().begin()->second < 0) c *= bigint(-1);
        expected7.insert(c);
    }
    CHECK(record_chains(c7_2) == expected7);
    CHECK(enumerate_minimal_paths(c7, 3).empty());
}

TEST_CASE("enumeration matches the exhaustive oracle on small digraphs") {
    std::mt19937 rng(5150);
    int compared = 0;
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 3);
        std::vector<std::string> labels;
        for (int v = 0; v < n; ++v) labels.push_back(std::to_string(v));
        std::vector<std::pair<std::string, std::string>> edges;
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (u != v && rng() % 2 == 0)
                    edges.emplace_back(labels[static_cast<size_t>(u)],
                                       labels[static_cast<size_t>(v)]);
        digraph g = build_digraph(labels, edges);
        for (int d = 1; d < n; ++d) {
            if (enumerate_allowed_paths(g, d).size() > 13) continue;
            auto expected = oracle_minimal(g, d);
            auto got = enumerate_minimal_paths(g, d);
            std::set<ichain> es(expected.begin(), expected.end());
            CHECK(record_chains(got) == es);
            ++compared;
        }
    }
    CHECK(compared > 50);
}

TEST_CASE("decompose into minimal components") {
    digraph g = chord_square();
    ichain p = make_chain({{{0, 1, 3}, 1}, {{0, 2, 3}, -1}});
    auto parts = decompose_into_minimal(g, p);
    REQUIRE(parts.size() == 2);
    CHECK(parts[0].record.chain == make_chain({{{0, 1, 3}, 1}}));
    CHECK(parts[0].sign == 1);
    CHECK(parts[1].record.chain == make_chain({{{0, 2, 3}, 1}}));
    CHECK(parts[1].sign == -1);

    // an already-minimal chain decomposes into itself
    digraph sq = build_digraph({"0", "1", "2", "3"},
                               {{"0", "1"}, {"1", "3"}, {"0", "2"}, {"2", "3"}}, "square");
    auto self_parts = decompose_into_minimal(sq, p);
    REQUIRE(self_parts.size() == 1);
    CHECK(self_parts[0].record.chain == p);

    // boundary of the five-component path: unique decomposition, seed order
    // immaterial
    digraph s5 = supp_five();
    ichain bd = boundary(five_chain());
    auto fwd = decompose_into_minimal(s5, bd);
    auto rev = decompose_into_minimal(s5, bd, default_minimal_budget, true);
    auto as_multiset = [](const std::vector<signed_component>& parts) {
        std::multiset<std::pair<ichain, int>> out;
        for (const auto& p2 : parts) out.insert({p2.record.chain, p2.sign});
        return out;
    };
    CHECK(as_multiset(fwd) == as_multiset(rev));
    CHECK(fwd.size() == 6);

    // every component is minimal and the signed parts sum back
    ichain sum;
    for (const auto& part : fwd) {
        CHECK(is_minimal(s5, part.record.chain));
        ichain t = part.record.chain;
        t *= bigint(part.sign);
        sum += t;
    }
    CHECK(sum == bd);
}

TEST_CASE("omega lattice decomposes over minimal paths") {
    for (const digraph& g : {circulant(5, {1, 2}), supp_five(), exotic_cube()}) {
        for (int d = 1; d <= 3; ++d) {
            auto ob = omega_space(g, d, coeff_domain::integers);
            auto recs = enumerate_minimal_paths(g, d);
            std::vector<qchain> span;
            for (const auto& r : recs) span.push_back(to_rational(r.chain));
            for (const auto& z : ob.lattice) CHECK(chain_in_span(span, to_rational(z)));
        }
    }
}

TEST_CASE("structure theorem validation") {
    digraph s = supp_e0123();
    auto rec = make_record(s, ichain::unit(pth({0, 1, 2, 3})));
    CHECK(validate_structure_theorem(s, rec).empty());

    digraph s5 = supp_five();
    auto rec5 = make_record(s5, five_chain());
    CHECK(validate_structure_theorem(s5, rec5).empty());

    digraph ex = exotic_cube();
    ichain exp = make_chain({{{0, 1, 5, 8}, 1},
                             {{0, 2, 5, 8}, -1},
                             {{0, 2, 6, 8}, 1},
                             {{0, 3, 6, 8}, -1},
                             {{0, 3, 7, 8}, 1},
                             {{0, 4, 7, 8}, -1}});
    auto recx = make_record(ex, exp);
    CHECK(validate_structure_theorem(ex, recx).empty());
    CHECK(decompose_into_minimal(ex, boundary(exp)).size() == 8);
}

TEST_CASE("ten component path on the thirteen vertex fan") {
    std::vector<std::string> labels{"S", "0", "1", "2", "3", "4", "5",
                                    "6", "7", "8", "9", "10", "E"};
    std::vector<std::pair<std::string, std::string>> edges;
    for (int i = 0; i <= 5; ++i) edges.emplace_back("S", std::to_string(i));
    for (int j = 6; j <= 10; ++j) edges.emplace_back(std::to_string(j), "E");
    const std::vector<std::pair<int, int>> mid{{0, 6}, {1, 6}, {1, 7}, {2, 7}, {2, 8},
                                               {3, 8}, {3, 9}, {4, 9}, {4, 10}, {5, 10}};
    for (auto [a, b] : mid) edges.emplace_back(std::to_string(a), std::to_string(b));
    // boundary shortcuts forced by the single-cover ends of the zigzag
    edges.emplace_back("0", "E");
    edges.emplace_back("5", "E");
    digraph g = build_digraph(labels, edges, "fan13");

    auto idx = [&](const std::string& l) { return g.index_of(l); };
    ichain p;
    int sign = 1;
    for (auto [a, b] : mid) {
        p.add(path{{idx("S"), idx(std::to_string(a)), idx(std::to_string(b)), idx("E")}},
              bigint(sign));
        sign = -sign;
    }
    CHECK(in_omega(g, p));
    CHECK(is_minimal(g, p));
    auto rec = make_record(g, p);
    CHECK(validate_structure_theorem(g, rec).empty());
    CHECK(rec.chain.term_count() == 10);
}
