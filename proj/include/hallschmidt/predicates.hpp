// Group-theoretic predicates on subgroup masks: nilpotency, solvability,
// commutativity flags, p-closure / p-nilpotency, Hall conditions, and Sylow
// tower search.  Everything runs on masks so large ambient groups work too.
#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <vector>

#include "lattice.hpp"
#include "subgroup.hpp"

namespace hs {

// Nilpotent iff every Sylow subgroup is normal.
inline bool is_nilpotent_sub(const SubgroupSet& s) {
    if (s.order == 1) return true;
    for (const PrimePower& pp : factorize(s.order).factors) {
        SubgroupSet p = sylow_in(s.ambient, s, pp.prime);
        if (!is_invariant_under(p, s.gens)) return false;
    }
    return true;
}

inline bool is_nilpotent(const Group& g) { return is_nilpotent_sub(full_subgroup(g)); }

// Independent nilpotency criterion used for cross-checking: every pair of
// elements with coprime orders commutes.  Quadratic, only for small groups.
inline bool is_nilpotent_by_commuting(const Group& g) {
    for (Elem a = 0; a < g.order(); ++a)
        for (Elem b = Elem(a + 1); b < g.order(); ++b) {
            if (std::gcd(g.element_order(a), g.element_order(b)) != 1) continue;
            if (g.mul(a, b) != g.mul(b, a)) return false;
        }
    return true;
}

inline bool is_abelian_sub(const SubgroupSet& s) {
    for (Elem a : s.gens)
        for (Elem b : s.gens)
            if (s.ambient.mul(a, b) != s.ambient.mul(b, a)) return false;
    return true;
}

inline bool is_abelian(const Group& g) { return is_abelian_sub(full_subgroup(g)); }

inline bool is_cyclic_sub(const SubgroupSet& s) {
    std::int64_t best = 0;
    s.mask.for_each([&](std::int32_t i) {
        best = std::max<std::int64_t>(best, s.ambient.element_order(Elem(i)));
    });
    return best == s.order;
}

inline bool is_cyclic(const Group& g) { return is_cyclic_sub(full_subgroup(g)); }

// Nontrivial, abelian, and all non-identity elements share one prime order.
inline bool is_elementary_abelian_sub(const SubgroupSet& s) {
    if (s.order == 1 || !is_abelian_sub(s)) return false;
    std::int64_t p = 0;
    bool ok = true;
    s.mask.for_each([&](std::int32_t i) {
        if (i == 0) return;
        std::int64_t d = s.ambient.element_order(Elem(i));
        if (p == 0) p = d;
        if (d != p) ok = false;
    });
    return ok && is_prime(p);
}

inline bool is_solvable_sub(const SubgroupSet& s) {
    SubgroupSet cur = s;
    for (;;) {
        SubgroupSet next = derived_of(cur);
        if (next.order == 1) return true;
        if (next.order == cur.order) return false;
        cur = std::move(next);
    }
}

inline bool is_solvable(const Group& g) { return is_solvable_sub(full_subgroup(g)); }

// Derived subgroup abelian.
inline bool is_metabelian_sub(const SubgroupSet& s) { return is_abelian_sub(derived_of(s)); }

inline bool is_metabelian(const Group& g) { return is_metabelian_sub(full_subgroup(g)); }

// p-group with center = derived = Frattini of prime order.
inline bool is_extraspecial_sub(const SubgroupSet& s) {
    PrimeFactorization f = factorize(s.order);
    if (f.factors.size() != 1) return false;
    std::int64_t p = f.factors[0].prime;
    SubgroupSet z = center_of(s);
    if (z.order != p) return false;
    SubgroupSet d = derived_of(s);
    if (!(d.mask == z.mask)) return false;
    SubgroupSet phi = frattini_pgroup(s, p);
    return phi.mask == z.mask;
}

struct StructureFlags {
    bool cyclic = false, abelian = false, elementary_abelian = false;
    bool extraspecial = false, metabelian = false;
    std::int64_t exponent = 1;
};

inline StructureFlags structure_flags(const SubgroupSet& s) {
    StructureFlags f;
    f.cyclic = is_cyclic_sub(s);
    f.abelian = f.cyclic || is_abelian_sub(s);
    f.elementary_abelian = is_elementary_abelian_sub(s);
    f.extraspecial = is_prime_power(s.order) && is_extraspecial_sub(s);
    f.metabelian = f.abelian || is_metabelian_sub(s);
    f.exponent = exponent_of(s);
    return f;
}

// gcd(|S|, |T:S|) = 1, i.e. S is a Hall subgroup of T.
inline bool is_hall_in(const SubgroupSet& s, std::int64_t ambient_order) {
    return std::gcd(s.order, ambient_order / s.order) == 1;
}

// Sylow p-subgroup normal.
inline bool is_p_closed(const Group& g, std::int64_t p) {
    return is_normal(g, sylow_subgroup(g, p));
}

// Has a normal p-complement, i.e. the normal closure of the Sylow
// subgroups for every other prime has p-free order.
inline bool is_p_nilpotent(const Group& g, std::int64_t p) {
    std::int64_t target = g.order();
    while (target % p == 0) target /= p;
    if (target == 1) return true;
    std::vector<Elem> seeds;
    for (const PrimePower& pp : factorize(g.order()).factors) {
        if (pp.prime == p) continue;
        for (Elem x : sylow_subgroup(g, pp.prime).gens) seeds.push_back(x);
    }
    return normal_closure(g, seeds).order == target;
}

// Direct factorisation G = P x K with P the Sylow p-subgroup: both the
// Sylow subgroup and a p-complement must be normal.
inline bool is_p_decomposable(const Group& g, std::int64_t p) {
    return is_p_closed(g, p) && is_p_nilpotent(g, p);
}

struct PStructure {
    std::int64_t p = 0;
    bool closed = false, nilpotent_p = false, decomposable = false;
};

inline PStructure p_structure(const Group& g, std::int64_t p) {
    PStructure s;
    s.p = p;
    s.closed = is_p_closed(g, p);
    s.nilpotent_p = is_p_nilpotent(g, p);
    s.decomposable = s.closed && s.nilpotent_p;
    return s;
}

// --- Sylow towers ------------------------------------------------------------

// A Sylow tower: an ascending normal series 1 < T_1 < ... < T_k = G in
// which each stage quotient is a full Sylow subgroup, one prime per stage.
// `primes` records the realized order from the bottom of the series up, and
// terms[i] is T_{i+1} as a subgroup of the original group.
struct SylowTower {
    std::vector<std::int64_t> primes;
    std::vector<SubgroupSet> terms;
};

// Greedy construction: at each stage, take the largest prime whose Sylow
// subgroup of the current quotient is normal, then pass to the quotient.
// Groups with a tower in some prime order keep one in every quotient, and
// any tower's bottom stage is a normal Sylow subgroup, so the greedy choice
// never needs backtracking.
inline std::optional<SylowTower> has_sylow_tower(const Group& g, const Caps& caps = {}) {
    SylowTower tower;
    Group cur = g;
    // comp[x]: image of the original element x in the current quotient;
    // lift[i]: a fixed preimage in g of quotient element i.
    std::vector<Elem> comp(static_cast<std::size_t>(g.order()));
    std::vector<Elem> lift(static_cast<std::size_t>(g.order()));
    for (std::int64_t i = 0; i < g.order(); ++i) {
        comp[static_cast<std::size_t>(i)] = Elem(i);
        lift[static_cast<std::size_t>(i)] = Elem(i);
    }
    std::vector<Elem> term_gens;
    while (cur.order() > 1) {
        std::vector<std::int64_t> primes = factorize(cur.order()).primes();
        std::sort(primes.rbegin(), primes.rend());
        bool advanced = false;
        for (std::int64_t p : primes) {
            SubgroupSet syl = sylow_subgroup(cur, p);
            if (!is_normal(cur, syl)) continue;
            tower.primes.push_back(p);
            for (Elem s : syl.gens) term_gens.push_back(lift[static_cast<std::size_t>(s)]);
            SubgroupSet term;
            term.ambient = g;
            term.mask = Bitset(static_cast<std::size_t>(g.order()));
            for (std::int64_t x = 0; x < g.order(); ++x)
                if (syl.contains(comp[static_cast<std::size_t>(x)])) term.mask.set(static_cast<std::size_t>(x));
            term.order = std::int64_t(term.mask.count());
            term.gens = term_gens;
            tower.terms.push_back(std::move(term));
            Quotient qt = quotient(cur, syl, caps);
            std::vector<Elem> nlift(static_cast<std::size_t>(qt.group.order()));
            for (std::int64_t i = 0; i < qt.group.order(); ++i)
                nlift[static_cast<std::size_t>(i)] = lift[static_cast<std::size_t>(qt.reps[static_cast<std::size_t>(i)])];
            lift = std::move(nlift);
            for (std::int64_t x = 0; x < g.order(); ++x)
                comp[static_cast<std::size_t>(x)] = qt.proj[static_cast<std::size_t>(comp[static_cast<std::size_t>(x)])];
            cur = qt.group;
            advanced = true;
            break;
        }
        if (!advanced) return std::nullopt;
    }
    return tower;
}

// Independent re-validation of a tower: terms form an ascending chain of
// normal subgroups whose stage quotients realize the full Sylow part for
// each prime, the primes are pairwise distinct, and the chain is generated
// by its recorded generators.
inline bool validate_sylow_tower(const Group& g, const SylowTower& t,
                                 std::string* why = nullptr) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    PrimeFactorization f = factorize(g.order());
    if (t.primes.size() != t.terms.size()) return fail("prime/term count mismatch");
    if (t.primes.size() != f.factors.size()) return fail("stage count does not cover all primes");
    for (std::size_t i = 0; i < t.primes.size(); ++i)
        for (std::size_t j = i + 1; j < t.primes.size(); ++j)
            if (t.primes[i] == t.primes[j]) return fail("repeated prime");
    std::int64_t prev = 1;
    Bitset prev_mask(static_cast<std::size_t>(g.order()));
    prev_mask.set(0);
    for (std::size_t i = 0; i < t.terms.size(); ++i) {
        const SubgroupSet& term = t.terms[i];
        if (!prev_mask.subset_of(term.mask)) return fail("chain is not ascending");
        if (closure(g, term.gens).mask != term.mask)
            return fail("term generators do not generate the recorded term");
        if (!is_normal(g, term)) return fail("term not normal in the whole group");
        if (term.order % prev != 0 || term.order / prev != f.part(t.primes[i]))
            return fail("stage quotient is not the full Sylow part for its prime");
        prev = term.order;
        prev_mask = term.mask;
    }
    if (prev != g.order()) return fail("chain does not reach the whole group");
    return true;
}

inline bool order_squarefree(const Group& g) { return is_squarefree(g.order()); }

}  // namespace hs
