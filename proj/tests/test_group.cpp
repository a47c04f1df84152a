#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <vector>

#include "hallschmidt/group.hpp"
#include "hallschmidt/numbers.hpp"
#include "hallschmidt/products.hpp"

using namespace hs;

namespace {

std::map<std::int64_t, std::int64_t> stats_map(const Group& g) {
    std::map<std::int64_t, std::int64_t> m;
    for (auto& [o, c] : order_statistics(g)) m[o] = c;
    return m;
}

Group klein_table() {
    // Z_2 x Z_2 written out by hand
    return build_from_table({{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}});
}

}  // namespace

TEST_CASE("table groups: construction and validation") {
    SECTION("trivial group") {
        Group g = build_from_table({{0}}, {"e"});
        REQUIRE(g.order() == 1);
        REQUIRE(g.label(0) == "e");
        REQUIRE(g.mul(0, 0) == 0);
        REQUIRE(g.inv(0) == 0);
    }
    SECTION("Klein four group") {
        Group g = klein_table();
        REQUIRE(g.order() == 4);
        for (Elem x = 0; x < 4; ++x) REQUIRE(g.mul(x, x) == 0);
        auto st = stats_map(g);
        REQUIRE(st[1] == 1);
        REQUIRE(st[2] == 3);
    }
    SECTION("identity not in first row is repaired") {
        // a table for Z_3 with the identity living at index 1
        Group g = build_from_table({{2, 0, 1}, {0, 1, 2}, {1, 2, 0}});
        REQUIRE(g.order() == 3);
        REQUIRE(g.mul(0, 0) == 0);
        REQUIRE(g.element_order(1) == 3);
    }
    SECTION("non-latin rows are rejected") {
        REQUIRE_THROWS_AS(build_from_table({{0, 0}, {1, 1}}), NotAGroup);
    }
    SECTION("associativity failures are caught with a witness") {
        // latin square with identity that is not a group (order 5 loop)
        std::vector<std::vector<Elem>> loop = {{0, 1, 2, 3, 4},
                                               {1, 0, 3, 4, 2},
                                               {2, 3, 4, 0, 1},
                                               {3, 4, 1, 2, 0},
                                               {4, 2, 0, 1, 3}};
        try {
            build_from_table(loop);
            FAIL("expected NotAGroup");
        } catch (const NotAGroup& e) {
            auto [a, b, c] = e.witness;
            // witness triple really does violate associativity
            REQUIRE(loop[static_cast<std::size_t>(loop[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)])]
                        [static_cast<std::size_t>(c)] !=
                    loop[static_cast<std::size_t>(a)]
                        [static_cast<std::size_t>(loop[static_cast<std::size_t>(b)][static_cast<std::size_t>(c)])]);
        }
    }
    SECTION("ragged tables are rejected") {
        REQUIRE_THROWS_AS(build_from_table({{0, 1}, {1}}), NotAGroup);
    }
    SECTION("label count must match") {
        REQUIRE_THROWS_AS(build_from_table({{0}}, {"a", "b"}), InvalidParams);
    }
}

TEST_CASE("permutation groups") {
    Group s3 = build_from_permutations(3, {{1, 2, 0}, {1, 0, 2}});
    SECTION("S_3 basics") {
        REQUIRE(s3.order() == 6);
        REQUIRE(s3.kind() == ReprKind::permutation);
        auto st = stats_map(s3);
        REQUIRE(st[1] == 1);
        REQUIRE(st[2] == 3);
        REQUIRE(st[3] == 2);
    }
    SECTION("identity label and cycle labels") {
        REQUIRE(s3.label(0) == "id");
        bool saw_transposition = false, saw_threecycle = false;
        for (Elem x = 0; x < 6; ++x) {
            if (s3.label(x) == "(1 2)") saw_transposition = true;
            if (s3.label(x) == "(1 2 3)") saw_threecycle = true;
        }
        REQUIRE(saw_transposition);
        REQUIRE(saw_threecycle);
    }
    SECTION("group axioms on every pair") {
        for (Elem a = 0; a < 6; ++a) {
            REQUIRE(s3.mul(a, s3.inv(a)) == 0);
            for (Elem b = 0; b < 6; ++b) {
                Elem ab = s3.mul(a, b);
                REQUIRE(ab >= 0);
                REQUIRE(ab < 6);
            }
        }
    }
    SECTION("conjugation and commutators") {
        // commutator subgroup of S_3 is generated by 3-cycles
        bool nontrivial_comm = false;
        for (Elem a = 0; a < 6; ++a)
            for (Elem b = 0; b < 6; ++b) {
                Elem c = s3.commutator(a, b);
                if (c != 0) {
                    REQUIRE(s3.element_order(c) == 3);
                    nontrivial_comm = true;
                }
            }
        REQUIRE(nontrivial_comm);
    }
    SECTION("powers, including negative exponents") {
        Elem r = -1;
        for (Elem x = 0; x < 6; ++x)
            if (s3.element_order(x) == 3) {
                r = x;
                break;
            }
        REQUIRE(s3.power(r, 3) == 0);
        REQUIRE(s3.power(r, -1) == s3.inv(r));
        REQUIRE(s3.power(r, 100) == s3.power(r, 1));
        REQUIRE(s3.power(r, 0) == 0);
    }
    SECTION("bad generators") {
        REQUIRE_THROWS_AS(build_from_permutations(3, {{0, 0, 1}}), NotAPermutation);
        REQUIRE_THROWS_AS(build_from_permutations(3, {{0, 1, 3}}), NotAPermutation);
    }
    SECTION("identity generator alone gives the trivial group") {
        REQUIRE_THROWS_AS(build_from_permutations(4, {}), InvalidParams);
        Group t = build_from_permutations(4, {{0, 1, 2, 3}});
        REQUIRE(t.order() == 1);
    }
    SECTION("element cap") {
        Caps caps;
        caps.element_cap = 100;
        std::vector<Elem> cyc(9), tr(9);
        for (int i = 0; i < 9; ++i) {
            cyc[static_cast<std::size_t>(i)] = Elem((i + 1) % 9);
            tr[static_cast<std::size_t>(i)] = Elem(i);
        }
        tr[0] = 1;
        tr[1] = 0;
        REQUIRE_THROWS_AS(build_from_permutations(9, {cyc, tr}, caps),
                          OrderCapExceeded);
    }
}

TEST_CASE("matrix groups") {
    SECTION("SL(2,3) from two generators") {
        Group g = build_from_matrices(2, 3, {{1, 1, 0, 1}, {0, 2, 1, 0}});
        REQUIRE(g.order() == 24);
        REQUIRE(g.kind() == ReprKind::matrix);
        auto st = stats_map(g);
        REQUIRE(st[1] == 1);
        REQUIRE(st[2] == 1);  // unique involution -I
        REQUIRE(st[4] == 6);
        REQUIRE(st[6] == 8);
        REQUIRE(st[3] == 8);
    }
    SECTION("identity is element 0 and labels are row lists") {
        Group g = build_from_matrices(2, 3, {{1, 1, 0, 1}});
        REQUIRE(g.order() == 3);
        REQUIRE(g.label(0) == "[[1,0],[0,1]]");
    }
    SECTION("rejects composite characteristic") {
        REQUIRE_THROWS_AS(build_from_matrices(2, 4, {{1, 1, 0, 1}}), NotPrime);
    }
    SECTION("rejects singular generators") {
        REQUIRE_THROWS_AS(build_from_matrices(2, 3, {{1, 1, 1, 1}}),
                          SingularGenerator);
    }
}

TEST_CASE("cayley table export round-trips") {
    Group s3 = build_from_permutations(3, {{1, 2, 0}, {1, 0, 2}});
    auto table = cayley_table(s3);
    REQUIRE(table.size() == 6);
    Group back = build_from_table(table);
    REQUIRE(back.order() == 6);
    REQUIRE(stats_map(back) == stats_map(s3));
}

TEST_CASE("element order bookkeeping matches direct computation") {
    Group g = build_from_matrices(2, 3, {{1, 1, 0, 1}, {0, 2, 1, 0}});
    for (Elem x = 0; x < g.order(); ++x) {
        Elem acc = x;
        std::int64_t k = 1;
        while (acc != 0) {
            acc = g.mul(acc, x);
            ++k;
        }
        REQUIRE(g.element_order(x) == k);
        REQUIRE(g.order() % k == 0);  // Lagrange for cyclic subgroups
    }
}

TEST_CASE("direct products") {
    Group s3 = build_from_permutations(3, {{1, 2, 0}, {1, 0, 2}});
    Group z2 = build_from_table({{0, 1}, {1, 0}});
    Group p = direct_product(s3, z2);
    REQUIRE(p.order() == 12);
    auto st = stats_map(p);
    REQUIRE(st[1] == 1);
    REQUIRE(st[2] == 7);
    REQUIRE(st[3] == 2);
    REQUIRE(st[6] == 2);
}

TEST_CASE("semidirect products with an explicit action") {
    // [Z_3] x| Z_4, the generator of Z_4 inverting: the dicyclic group of
    // order 12 with a unique involution
    Group z3 = build_from_table({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
    Group z4 = build_from_table(
        {{0, 1, 2, 3}, {1, 2, 3, 0}, {2, 3, 0, 1}, {3, 0, 1, 2}});
    GroupAction act;
    act.actor = z4;
    act.target = z3;
    act.images.resize(4);
    for (int h = 0; h < 4; ++h)
        for (Elem x = 0; x < 3; ++x)
            act.images[static_cast<std::size_t>(h)].push_back(h % 2 == 0 ? x : Elem((3 - x) % 3));
    Group g = semidirect_product(z3, z4, act);
    REQUIRE(g.order() == 12);
    auto st = stats_map(g);
    REQUIRE(st[2] == 1);  // unique involution
    REQUIRE(st[4] == 6);
    REQUIRE(st[3] == 2);
    REQUIRE(st[6] == 2);

    SECTION("broken actions are rejected") {
        GroupAction bad = act;
        bad.images[1] = {0, 1, 2};  // order-4 generator acting trivially
        REQUIRE_THROWS_AS(semidirect_product(z3, z4, bad), InvalidAction);
        GroupAction notperm = act;
        notperm.images[1] = {0, 1, 1};
        REQUIRE_THROWS_AS(semidirect_product(z3, z4, notperm), InvalidAction);
    }
}

TEST_CASE("structured groups: Heisenberg blocks") {
    StructuredSpec spec;
    spec.blocks = {{detail::StructuredBlock::Kind::heis, 3, 3}};
    Group h3 = build_structured(spec);
    REQUIRE(h3.order() == 27);
    auto st = stats_map(h3);
    REQUIRE(st[1] == 1);
    REQUIRE(st[3] == 26);  // exponent 3
    // center = third coordinate: commutes with everything
    Elem c = structured_element(h3, {0, 0, 1});
    for (Elem x = 0; x < 27; ++x) REQUIRE(h3.mul(c, x) == h3.mul(x, c));
    // nonabelian: the two generators do not commute
    Elem a = structured_element(h3, {1, 0, 0});
    Elem b = structured_element(h3, {0, 1, 0});
    REQUIRE(h3.mul(a, b) != h3.mul(b, a));
    REQUIRE(h3.commutator(a, b) == c);

    SECTION("even characteristic is rejected") {
        StructuredSpec bad;
        bad.blocks = {{detail::StructuredBlock::Kind::heis, 2, 3}};
        REQUIRE_THROWS_AS(build_structured(bad), InvalidParams);
    }
}

TEST_CASE("structured groups: matrix actions on vector blocks") {
    // [E_4] x| Z_3 with an order-3 matrix: the alternating group shape
    StructuredSpec spec;
    spec.blocks = {{detail::StructuredBlock::Kind::vec, 2, 2}};
    spec.top_orders = {3};
    spec.action = {{Mat{2, 2, {0, 1, 1, 1}}}};
    Group g = build_structured(spec);
    REQUIRE(g.order() == 12);
    auto st = stats_map(g);
    REQUIRE(st[2] == 3);
    REQUIRE(st[3] == 8);

    SECTION("matrix whose order does not divide the top order is rejected") {
        StructuredSpec bad = spec;
        bad.top_orders = {2};
        REQUIRE_THROWS_AS(build_structured(bad), InvalidAction);
    }
    SECTION("singular action matrix is rejected") {
        StructuredSpec bad = spec;
        bad.action = {{Mat{2, 2, {1, 1, 1, 1}}}};
        REQUIRE_THROWS_AS(build_structured(bad), InvalidAction);
    }
}

TEST_CASE("number theory helpers") {
    REQUIRE(factorize(360).to_string() == "2^3*3^2*5");
    REQUIRE(factorize(1).factors.empty());
    REQUIRE_THROWS_AS(factorize(0), InvalidParams);
    REQUIRE(is_prime(2));
    REQUIRE(is_prime(97));
    REQUIRE(!is_prime(91));
    REQUIRE(is_squarefree(30));
    REQUIRE(!is_squarefree(12));
    REQUIRE(multiplicative_order(3, 2) == 1);
    REQUIRE(multiplicative_order(5, 3) == 2);
    REQUIRE(multiplicative_order(2, 7) == 3);
    REQUIRE_THROWS_AS(multiplicative_order(4, 7), NotPrime);
    REQUIRE(pi_part(360, {2, 5}) == 40);
    REQUIRE(gl_order(2, 3) == 48);
    REQUIRE(gl_order(3, 2) == 168);
    REQUIRE(gl_order(2, 7) == 2016);
    Mat m{2, 3, {0, 2, 1, 0}};
    REQUIRE(mat_det(m) == 1);
    REQUIRE(mat_order(m, 24) == 4);
    REQUIRE(mat_pow(m, 4) == Mat::identity(2, 3));
}
