// Full subgroup lattice of a (small) group, built by closing the set of
// cyclic prime-power subgroups under pairwise joins.  Every subgroup is a
// join of such atoms, and every intermediate join is itself a subgroup, so
// the worklist sweep below is complete.
#pragma once

#include <algorithm>
#include <unordered_map>
#include <vector>

#include "subgroup.hpp"

namespace hs {

struct LatticeLimits {
    std::int64_t max_order = 2500;       // refuse groups larger than this
    std::int64_t max_subgroups = 200000; // refuse lattices larger than this
};

struct LatticeView {
    Group group;
    std::vector<SubgroupSet> subgroups;   // order ascending, then mask order
    std::vector<Bitset> subs_of;          // subs_of[i] over indices j : S_j <= S_i (reflexive)
    std::vector<Bitset> sups_of;          // sups_of[i] over indices j : S_i <= S_j (reflexive)
    std::vector<std::vector<int>> classes;  // conjugacy classes of subgroups, each ascending
    std::vector<int> class_of;

    std::size_t size() const { return subgroups.size(); }
    int trivial_index() const { return 0; }
    int full_index() const { return int(subgroups.size()) - 1; }

    int index_of(const Bitset& mask) const {
        auto it = by_hash_.find(mask.hash());
        if (it == by_hash_.end()) return -1;
        for (int i : it->second)
            if (subgroups[static_cast<std::size_t>(i)].mask == mask) return i;
        return -1;
    }

    std::unordered_map<std::size_t, std::vector<int>> by_hash_;
};

inline LatticeView all_subgroups(const Group& g, const LatticeLimits& limits = {}) {
    if (g.order() > limits.max_order)
        throw LatticeCapExceeded("group of order " + std::to_string(g.order()) +
                                 " exceeds lattice limit " +
                                 std::to_string(limits.max_order));
    // atoms: distinct cyclic subgroups of prime-power order
    std::vector<SubgroupSet> atoms;
    {
        std::unordered_map<std::size_t, std::vector<int>> seen;
        for (std::int64_t x = 1; x < g.order(); ++x) {
            if (!is_prime_power(g.element_order(Elem(x)))) continue;
            SubgroupSet c = closure(g, {Elem(x)});
            auto& bucket = seen[c.mask.hash()];
            bool dup = false;
            for (int i : bucket)
                if (atoms[static_cast<std::size_t>(i)].mask == c.mask) {
                    dup = true;
                    break;
                }
            if (!dup) {
                bucket.push_back(int(atoms.size()));
                atoms.push_back(std::move(c));
            }
        }
    }
    LatticeView view;
    view.group = g;
    auto& subs = view.subgroups;
    std::unordered_map<std::size_t, std::vector<int>> by_hash;
    auto find = [&](const Bitset& mask) {
        auto it = by_hash.find(mask.hash());
        if (it == by_hash.end()) return -1;
        for (int i : it->second)
            if (subs[static_cast<std::size_t>(i)].mask == mask) return i;
        return -1;
    };
    auto add = [&](SubgroupSet&& s) {
        int idx = find(s.mask);
        if (idx >= 0) return false;
        if (std::int64_t(subs.size()) >= limits.max_subgroups)
            throw LatticeCapExceeded("more than " +
                                     std::to_string(limits.max_subgroups) +
                                     " subgroups");
        by_hash[s.mask.hash()].push_back(int(subs.size()));
        subs.push_back(std::move(s));
        return true;
    };
    add(trivial_subgroup(g));
    for (const SubgroupSet& a : atoms) {
        SubgroupSet copy = a;
        add(std::move(copy));
    }
    // worklist: every (subgroup, atom) pair exactly once
    for (std::size_t i = 0; i < subs.size(); ++i) {
        for (const SubgroupSet& a : atoms) {
            if (a.mask.subset_of(subs[i].mask)) continue;
            SubgroupSet j = join(subs[i], {a.gens[0]});
            add(std::move(j));
        }
    }
    std::sort(subs.begin(), subs.end(), [](const SubgroupSet& x, const SubgroupSet& y) {
        if (x.order != y.order) return x.order < y.order;
        return x.mask.set_less(y.mask);
    });
    view.by_hash_.clear();
    for (std::size_t i = 0; i < subs.size(); ++i)
        view.by_hash_[subs[i].mask.hash()].push_back(int(i));

    // containment (indices are order-sorted, so only look upward)
    std::size_t ns = subs.size();
    view.subs_of.assign(ns, Bitset(ns));
    view.sups_of.assign(ns, Bitset(ns));
    for (std::size_t i = 0; i < ns; ++i) {
        view.subs_of[i].set(i);
        view.sups_of[i].set(i);
        for (std::size_t j = i + 1; j < ns; ++j) {
            if (subs[j].order % subs[i].order != 0 || subs[j].order == subs[i].order)
                continue;
            if (subs[i].mask.subset_of(subs[j].mask)) {
                view.subs_of[j].set(i);
                view.sups_of[i].set(j);
            }
        }
    }
    // conjugacy classes of subgroups (orbit sweep under generator conjugation)
    view.class_of.assign(ns, -1);
    for (std::size_t i = 0; i < ns; ++i) {
        if (view.class_of[i] >= 0) continue;
        int cid = int(view.classes.size());
        std::vector<int> orbit{int(i)};
        view.class_of[i] = cid;
        for (std::size_t head = 0; head < orbit.size(); ++head) {
            const SubgroupSet& s = subs[static_cast<std::size_t>(orbit[head])];
            for (Elem c : g.generators()) {
                SubgroupSet t = conjugate_subgroup(s, c);
                int ti = view.index_of(t.mask);
                if (ti < 0) throw Error("conjugate of a subgroup missing from lattice");
                if (view.class_of[static_cast<std::size_t>(ti)] < 0) {
                    view.class_of[static_cast<std::size_t>(ti)] = cid;
                    orbit.push_back(ti);
                }
            }
        }
        std::sort(orbit.begin(), orbit.end());
        view.classes.push_back(std::move(orbit));
    }
    return view;
}

// Proper subgroups covered only by the whole group.
inline std::vector<int> maximal_subgroup_indices(const LatticeView& v) {
    std::vector<int> out;
    for (std::size_t i = 0; i + 1 < v.size(); ++i)
        if (v.sups_of[i].count() == 2) out.push_back(int(i));
    return out;
}

inline std::vector<int> normal_subgroup_indices(const LatticeView& v) {
    std::vector<int> out;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (is_normal(v.group, v.subgroups[i])) out.push_back(int(i));
    return out;
}

// Nontrivial normal subgroups containing no smaller nontrivial normal subgroup.
inline std::vector<int> minimal_normal_indices(const LatticeView& v) {
    std::vector<char> normal(v.size(), 0);
    for (int i : normal_subgroup_indices(v)) normal[static_cast<std::size_t>(i)] = 1;
    std::vector<int> out;
    for (std::size_t i = 1; i < v.size(); ++i) {
        if (!normal[i]) continue;
        bool minimal = true;
        v.subs_of[i].for_each([&](std::int32_t j) {
            if (j != 0 && static_cast<std::size_t>(j) != i && normal[static_cast<std::size_t>(j)]) minimal = false;
        });
        if (minimal) out.push_back(int(i));
    }
    return out;
}

// Frattini subgroup as the intersection of the maximal subgroups.
inline SubgroupSet frattini_subgroup(const LatticeView& v) {
    std::vector<int> maxs = maximal_subgroup_indices(v);
    if (maxs.empty()) return full_subgroup(v.group);  // only the trivial group
    Bitset meet = v.subgroups[static_cast<std::size_t>(maxs[0])].mask;
    for (std::size_t i = 1; i < maxs.size(); ++i)
        meet &= v.subgroups[static_cast<std::size_t>(maxs[i])].mask;
    return subgroup_from_mask(v.group, meet);
}

// Frattini subgroup of a p-group P without touching the lattice:
// Phi(P) = P' * <g^p : g generator>, since p-th powers are multiplicative
// modulo the commutator subgroup.
inline SubgroupSet frattini_pgroup(const SubgroupSet& p_sub, std::int64_t p) {
    if (!is_prime_power(p_sub.order) && p_sub.order != 1)
        throw InvalidParams("not a p-group");
    SubgroupSet der = derived_of(p_sub);
    std::vector<Elem> seeds = der.gens;
    for (Elem g : p_sub.gens) seeds.push_back(p_sub.ambient.power(g, p));
    // the result contains P', hence is already normal in P; a plain closure works
    return closure(p_sub.ambient, seeds);
}

// Indices of subgroups whose order is exactly the pi-part of |G|.
inline std::vector<int> hall_subgroup_indices(const LatticeView& v,
                                              const std::vector<std::int64_t>& pi) {
    std::int64_t target = pi_part(v.group.order(), pi);
    std::vector<int> out;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v.subgroups[i].order == target) out.push_back(int(i));
    return out;
}

}  // namespace hs
