#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <vector>

#include "hallschmidt/constructions.hpp"
#include "hallschmidt/lattice.hpp"
#include "hallschmidt/predicates.hpp"

using namespace hs;

namespace {

Group sl23() { return build_from_matrices(2, 3, {{1, 1, 0, 1}, {0, 2, 1, 0}}); }

// Reference definition of a normal p-complement: the normal closure of all
// elements of order coprime to p must have exactly the p-free order.
bool has_normal_p_complement(const Group& g, std::int64_t p) {
    std::int64_t target = g.order();
    while (target % p == 0) target /= p;
    std::vector<Elem> seeds;
    for (Elem x = 1; x < g.order(); ++x)
        if (g.element_order(x) % p != 0) seeds.push_back(x);
    if (seeds.empty()) return target == 1;
    return normal_closure(g, seeds).order == target;
}

}  // namespace

TEST_CASE("nilpotency") {
    REQUIRE(is_nilpotent(cyclic_group(12)));
    REQUIRE(is_nilpotent(dihedral_group(4)));
    REQUIRE(is_nilpotent(heisenberg_group(3)));
    REQUIRE(is_nilpotent(direct_product(dihedral_group(4), cyclic_group(3))));
    REQUIRE(!is_nilpotent(symmetric_group(3)));
    REQUIRE(!is_nilpotent(alternating_group(4)));
    REQUIRE(!is_nilpotent(dihedral_group(6)));
}

TEST_CASE("the two nilpotency criteria agree on every subgroup of S_4") {
    Group s4 = symmetric_group(4);
    LatticeView v = all_subgroups(s4);
    for (const auto& s : v.subgroups) {
        SubgroupView sub = as_group(s);
        INFO("subgroup of order " << s.order);
        REQUIRE(is_nilpotent_sub(s) == is_nilpotent_by_commuting(sub.group));
        REQUIRE(is_nilpotent_sub(s) == is_nilpotent(sub.group));
    }
}

TEST_CASE("commutativity flags") {
    REQUIRE(is_abelian(cyclic_group(15)));
    REQUIRE(!is_abelian(dihedral_group(3)));
    REQUIRE(is_cyclic(cyclic_group(15)));
    REQUIRE(!is_cyclic(elementary_abelian_group(2, 2)));
    REQUIRE(is_cyclic(direct_product(cyclic_group(3), cyclic_group(5))));
    REQUIRE(is_elementary_abelian_sub(full_subgroup(elementary_abelian_group(2, 3))));
    REQUIRE(is_elementary_abelian_sub(full_subgroup(cyclic_group(5))));
    REQUIRE(!is_elementary_abelian_sub(full_subgroup(cyclic_group(4))));
    REQUIRE(!is_elementary_abelian_sub(trivial_subgroup(cyclic_group(4))));
    REQUIRE(!is_elementary_abelian_sub(full_subgroup(cyclic_group(6))));
}

TEST_CASE("solvability and metabelian groups") {
    REQUIRE(is_solvable(symmetric_group(4)));
    REQUIRE(is_solvable(sl23()));
    REQUIRE(!is_solvable(alternating_group(5)));
    REQUIRE(!is_solvable(symmetric_group(5)));
    REQUIRE(is_metabelian(symmetric_group(3)));
    REQUIRE(is_metabelian(alternating_group(4)));
    REQUIRE(is_metabelian(dihedral_group(4)));
    REQUIRE(!is_metabelian(symmetric_group(4)));
}

TEST_CASE("extraspecial groups") {
    REQUIRE(is_extraspecial_sub(full_subgroup(dihedral_group(4))));
    REQUIRE(is_extraspecial_sub(full_subgroup(heisenberg_group(3))));
    REQUIRE(is_extraspecial_sub(full_subgroup(heisenberg_group(5))));
    REQUIRE(!is_extraspecial_sub(full_subgroup(cyclic_group(8))));
    REQUIRE(!is_extraspecial_sub(full_subgroup(elementary_abelian_group(2, 3))));
    REQUIRE(!is_extraspecial_sub(full_subgroup(symmetric_group(3))));
}

TEST_CASE("structure flag bundle") {
    StructureFlags f = structure_flags(full_subgroup(dihedral_group(4)));
    REQUIRE(!f.cyclic);
    REQUIRE(!f.abelian);
    REQUIRE(!f.elementary_abelian);
    REQUIRE(f.extraspecial);
    REQUIRE(f.metabelian);
    REQUIRE(f.exponent == 4);

    StructureFlags c = structure_flags(full_subgroup(cyclic_group(6)));
    REQUIRE(c.cyclic);
    REQUIRE(c.abelian);
    REQUIRE(!c.elementary_abelian);
    REQUIRE(c.exponent == 6);
}

TEST_CASE("Hall subgroup test by order") {
    Group s4 = symmetric_group(4);
    REQUIRE(is_hall_in(sylow_subgroup(s4, 2), s4.order()));
    REQUIRE(is_hall_in(sylow_subgroup(s4, 3), s4.order()));
    LatticeView v = all_subgroups(s4);
    bool found6 = false;
    for (const auto& s : v.subgroups)
        if (s.order == 6) {
            REQUIRE(!is_hall_in(s, s4.order()));  // index 4 shares the prime 2
            found6 = true;
        }
    REQUIRE(found6);
    REQUIRE(is_hall_in(full_subgroup(s4), s4.order()));
    REQUIRE(is_hall_in(trivial_subgroup(s4), s4.order()));
}

TEST_CASE("p-closure and p-nilpotency on known groups") {
    Group s3 = symmetric_group(3);
    REQUIRE(is_p_nilpotent(s3, 2));
    REQUIRE(!is_p_nilpotent(s3, 3));
    REQUIRE(is_p_closed(s3, 3));
    REQUIRE(!is_p_closed(s3, 2));

    Group a4 = alternating_group(4);
    REQUIRE(is_p_closed(a4, 2));
    REQUIRE(is_p_nilpotent(a4, 3));
    REQUIRE(!is_p_nilpotent(a4, 2));
    REQUIRE(!is_p_closed(a4, 3));

    Group z12 = cyclic_group(12);
    for (std::int64_t p : {2, 3}) {
        REQUIRE(is_p_closed(z12, p));
        REQUIRE(is_p_nilpotent(z12, p));
        REQUIRE(is_p_decomposable(z12, p));
    }

    REQUIRE(!is_p_decomposable(s3, 2));
    REQUIRE(!is_p_decomposable(s3, 3));
    Group a45 = direct_product(alternating_group(4), cyclic_group(5));
    REQUIRE(is_p_decomposable(a45, 5));
    REQUIRE(!is_p_decomposable(a45, 2));

    PStructure ps = p_structure(s3, 3);
    REQUIRE(ps.p == 3);
    REQUIRE(ps.closed);
    REQUIRE(!ps.nilpotent_p);
    REQUIRE(!ps.decomposable);
}

TEST_CASE("p-nilpotency matches the normal-complement definition") {
    std::vector<Group> groups{symmetric_group(3), symmetric_group(4),
                              alternating_group(4), alternating_group(5),
                              cyclic_group(30),    dihedral_group(6),
                              sl23()};
    for (const Group& g : groups)
        for (std::int64_t p : factorize(g.order()).primes()) {
            INFO("order " << g.order() << ", p = " << p);
            REQUIRE(is_p_nilpotent(g, p) == has_normal_p_complement(g, p));
        }
}

TEST_CASE("Sylow tower search") {
    SECTION("groups with a tower, greedy prime order from the bottom") {
        auto t1 = has_sylow_tower(symmetric_group(3));
        REQUIRE(t1.has_value());
        REQUIRE(t1->primes == std::vector<std::int64_t>{3, 2});

        auto t2 = has_sylow_tower(cyclic_group(12));
        REQUIRE(t2.has_value());
        REQUIRE(t2->primes == std::vector<std::int64_t>{3, 2});

        auto t3 = has_sylow_tower(alternating_group(4));
        REQUIRE(t3.has_value());
        REQUIRE(t3->primes == std::vector<std::int64_t>{2, 3});

        auto t4 = has_sylow_tower(direct_product(alternating_group(4), cyclic_group(5)));
        REQUIRE(t4.has_value());
        REQUIRE(t4->primes == std::vector<std::int64_t>{5, 2, 3});

        auto t5 = has_sylow_tower(sl23());
        REQUIRE(t5.has_value());
        REQUIRE(t5->primes == std::vector<std::int64_t>{2, 3});
    }
    SECTION("groups without a tower") {
        REQUIRE(!has_sylow_tower(symmetric_group(4)).has_value());
        REQUIRE(!has_sylow_tower(alternating_group(5)).has_value());
    }
    SECTION("every produced tower validates") {
        for (const Group& g :
             {symmetric_group(3), cyclic_group(12), alternating_group(4),
              cyclic_group(60), dihedral_group(15), sl23()}) {
            auto t = has_sylow_tower(g);
            REQUIRE(t.has_value());
            std::string why;
            INFO(why);
            REQUIRE(validate_sylow_tower(g, *t, &why));
            // term chain is ascending with the advertised stage sizes
            std::int64_t prev = 1;
            for (std::size_t i = 0; i < t->terms.size(); ++i) {
                REQUIRE(t->terms[i].order % prev == 0);
                prev = t->terms[i].order;
            }
            REQUIRE(prev == g.order());
        }
    }
    SECTION("tampered towers are rejected with a reason") {
        Group a4 = alternating_group(4);
        auto t = has_sylow_tower(a4);
        REQUIRE(t.has_value());
        SylowTower bad = *t;
        bad.primes = {3, 2};
        std::string why;
        REQUIRE(!validate_sylow_tower(a4, bad, &why));
        REQUIRE(!why.empty());
        SylowTower missing = *t;
        missing.terms.pop_back();
        missing.primes.pop_back();
        REQUIRE(!validate_sylow_tower(a4, missing, &why));
        REQUIRE(!why.empty());
    }
}

TEST_CASE("squarefree order") {
    REQUIRE(order_squarefree(cyclic_group(30)));
    REQUIRE(!order_squarefree(cyclic_group(12)));
}
