// Subgroups as membership bitmasks over a fixed ambient group, with the
// closure algorithms everything else is built on.  All routines here work
// directly on masks, so they stay usable for ambient groups too large for a
// dense multiplication table.
#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "bitset.hpp"
#include "group.hpp"
#include "numbers.hpp"

namespace hs {

struct SubgroupSet {
    Group ambient;
    Bitset mask;
    std::int64_t order = 0;
    std::vector<Elem> gens;  // honest generating set (empty for the trivial subgroup)

    bool contains(Elem x) const { return mask.test(static_cast<std::size_t>(x)); }
    std::vector<Elem> members() const {
        std::vector<Elem> out;
        out.reserve(static_cast<std::size_t>(order));
        mask.for_each([&](std::size_t i) { out.push_back(Elem(i)); });
        return out;
    }
    bool is_trivial() const { return order == 1; }
    bool is_full() const { return order == ambient.order(); }
};

namespace detail {

// Drops identities and duplicates while preserving first-seen order.
inline std::vector<Elem> normalize_seeds(const std::vector<Elem>& seeds) {
    std::vector<Elem> out;
    for (Elem s : seeds) {
        if (s == 0) continue;
        if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
    }
    return out;
}

// Right-multiplication BFS: extends `mask` (and its member queue) until it
// is closed under multiplication by every seed.  The queue must initially
// hold every element already in the mask.
inline void closure_bfs(const Group& g, Bitset& mask, std::vector<Elem>& queue,
                        const std::vector<Elem>& seeds) {
    std::size_t head = 0;
    while (head < queue.size()) {
        Elem w = queue[head++];
        for (Elem s : seeds) {
            Elem t = g.mul(w, s);
            if (!mask.test(static_cast<std::size_t>(t))) {
                mask.set(static_cast<std::size_t>(t));
                queue.push_back(t);
            }
        }
    }
}

}  // namespace detail

inline SubgroupSet trivial_subgroup(const Group& g) {
    SubgroupSet s;
    s.ambient = g;
    s.mask = Bitset(static_cast<std::size_t>(g.order()));
    s.mask.set(0);
    s.order = 1;
    return s;
}

inline SubgroupSet full_subgroup(const Group& g) {
    SubgroupSet s;
    s.ambient = g;
    s.mask = Bitset(static_cast<std::size_t>(g.order()));
    for (std::int64_t i = 0; i < g.order(); ++i) s.mask.set(static_cast<std::size_t>(i));
    s.order = g.order();
    s.gens = g.generators();
    return s;
}

// Subgroup generated by the seeds.
inline SubgroupSet closure(const Group& g, const std::vector<Elem>& seeds) {
    SubgroupSet s = trivial_subgroup(g);
    s.gens = detail::normalize_seeds(seeds);
    std::vector<Elem> queue{0};
    detail::closure_bfs(g, s.mask, queue, s.gens);
    s.order = std::int64_t(queue.size());
    return s;
}

// Join <base, extra>: closure seeded with the already-closed base mask.
inline SubgroupSet join(const SubgroupSet& base, const std::vector<Elem>& extra) {
    SubgroupSet s;
    s.ambient = base.ambient;
    s.mask = base.mask;
    s.gens = base.gens;
    for (Elem x : detail::normalize_seeds(extra))
        if (std::find(s.gens.begin(), s.gens.end(), x) == s.gens.end())
            s.gens.push_back(x);
    std::vector<Elem> queue = base.members();
    detail::closure_bfs(base.ambient, s.mask, queue, s.gens);
    s.order = std::int64_t(queue.size());
    return s;
}

// Smallest subgroup containing the seeds that is stable under conjugation by
// every element of `conjugators`.  With conjugators = generators of the
// ambient group this is the normal closure.  Rounds: close, conjugate the
// current generating set, adjoin anything that escaped, repeat.
inline SubgroupSet conjugation_closure(const Group& g, const std::vector<Elem>& seeds,
                                       const std::vector<Elem>& conjugators) {
    std::vector<Elem> gen = detail::normalize_seeds(seeds);
    for (;;) {
        SubgroupSet h = closure(g, gen);
        std::vector<Elem> add;
        for (Elem s : gen)
            for (Elem c : conjugators) {
                Elem t = g.conj(c, s);
                if (!h.contains(t) &&
                    std::find(add.begin(), add.end(), t) == add.end())
                    add.push_back(t);
            }
        if (add.empty()) return h;
        for (Elem t : add) gen.push_back(t);
    }
}

inline SubgroupSet normal_closure(const Group& g, const std::vector<Elem>& seeds) {
    return conjugation_closure(g, seeds, g.generators());
}

inline SubgroupSet conjugate_subgroup(const SubgroupSet& s, Elem g) {
    SubgroupSet out;
    out.ambient = s.ambient;
    out.mask = Bitset(static_cast<std::size_t>(s.ambient.order()));
    s.mask.for_each([&](std::size_t i) {
        out.mask.set(static_cast<std::size_t>(s.ambient.conj(g, Elem(i))));
    });
    out.order = s.order;
    for (Elem x : s.gens) out.gens.push_back(s.ambient.conj(g, x));
    return out;
}

// Recovers a small generating set for a mask already known to be a subgroup
// (e.g. an intersection of subgroups, or a centralizer scan).  Throws if the
// mask turns out not to be closed.
inline SubgroupSet subgroup_from_mask(const Group& g, const Bitset& mask) {
    SubgroupSet s = trivial_subgroup(g);
    std::vector<Elem> queue{0};
    bool grew = true;
    while (grew) {
        grew = false;
        for (std::size_t i = 0; i < static_cast<std::size_t>(g.order()); ++i) {
            if (mask.test(i) && !s.mask.test(i)) {
                s.gens.push_back(Elem(i));
                detail::closure_bfs(g, s.mask, queue, s.gens);
                grew = true;
                break;
            }
        }
    }
    if (!(s.mask == mask))
        throw Error("mask is not multiplicatively closed");
    s.order = std::int64_t(queue.size());
    return s;
}

// Does every conjugate of s by the given elements stay inside s?  Because s
// is generated by s.gens, it suffices to conjugate the generators.
inline bool is_invariant_under(const SubgroupSet& s, const std::vector<Elem>& conjugators) {
    for (Elem c : conjugators)
        for (Elem x : s.gens)
            if (!s.contains(s.ambient.conj(c, x))) return false;
    return true;
}

inline bool is_normal(const Group& g, const SubgroupSet& s) {
    return is_invariant_under(s, g.generators());
}

inline bool is_normal_in(const SubgroupSet& outer, const SubgroupSet& inner) {
    return is_invariant_under(inner, outer.gens);
}

// {h in domain : h commutes with every target}
inline SubgroupSet centralizer_in(const Group& g, const SubgroupSet& domain,
                                  const std::vector<Elem>& targets) {
    Bitset mask(static_cast<std::size_t>(g.order()));
    domain.mask.for_each([&](std::size_t i) {
        Elem h = Elem(i);
        for (Elem t : targets)
            if (g.mul(h, t) != g.mul(t, h)) return;
        mask.set(i);
    });
    return subgroup_from_mask(g, mask);
}

inline SubgroupSet center(const Group& g) {
    return centralizer_in(g, full_subgroup(g), g.generators());
}

inline SubgroupSet center_of(const SubgroupSet& s) {
    return centralizer_in(s.ambient, s, s.gens);
}

// {h in domain : h k h^-1 = k as a set}
inline SubgroupSet normalizer_in(const Group& g, const SubgroupSet& domain,
                                 const SubgroupSet& k) {
    Bitset mask(static_cast<std::size_t>(g.order()));
    domain.mask.for_each([&](std::size_t i) {
        Elem h = Elem(i);
        for (Elem x : k.gens)
            if (!k.contains(g.conj(h, x))) return;
        mask.set(i);
    });
    return subgroup_from_mask(g, mask);
}

// Commutator subgroup [s,s]: conjugation-stable closure of the generator
// commutators.
inline SubgroupSet derived_of(const SubgroupSet& s) {
    std::vector<Elem> comms;
    for (Elem a : s.gens)
        for (Elem b : s.gens) {
            Elem c = s.ambient.commutator(a, b);
            if (c != 0) comms.push_back(c);
        }
    return conjugation_closure(s.ambient, comms, s.gens);
}

inline SubgroupSet derived_subgroup(const Group& g) { return derived_of(full_subgroup(g)); }

// G >= G' >= G'' >= ... down to the last repeated term.
inline std::vector<SubgroupSet> derived_series(const Group& g) {
    std::vector<SubgroupSet> series{full_subgroup(g)};
    for (;;) {
        SubgroupSet next = derived_of(series.back());
        if (next.order == series.back().order) return series;
        series.push_back(std::move(next));
    }
}

// Sylow p-subgroup of s, grown by repeated normalizer steps: a p-subgroup
// K that is not yet Sylow has a p-element outside K in its normalizer, and
// adjoining one multiplies |K| by a power of p.
inline SubgroupSet sylow_in(const Group& g, const SubgroupSet& s, std::int64_t p) {
    std::int64_t target = 1;
    {
        std::int64_t m = s.order;
        while (m % p == 0) {
            m /= p;
            target *= p;
        }
    }
    SubgroupSet k = trivial_subgroup(g);
    if (target == 1) return k;
    auto is_p_element = [&](Elem x) {
        std::int32_t d = g.element_order(x);
        while (d % p == 0) d = std::int32_t(d / p);
        return d == 1 && x != 0;
    };
    s.mask.for_each_until([&](std::size_t i) {
        if (is_p_element(Elem(i))) {
            k = closure(g, {Elem(i)});
            return true;
        }
        return false;
    });
    while (k.order < target) {
        SubgroupSet nk = normalizer_in(g, s, k);
        Elem z = -1;
        nk.mask.for_each_until([&](std::size_t i) {
            if (!k.contains(Elem(i)) && is_p_element(Elem(i))) {
                z = Elem(i);
                return true;
            }
            return false;
        });
        if (z < 0) throw Error("Sylow growth stalled");  // cannot happen in a group
        k = join(k, {z});
    }
    return k;
}

inline SubgroupSet sylow_subgroup(const Group& g, std::int64_t p) {
    return sylow_in(g, full_subgroup(g), p);
}

// Largest normal p-subgroup: intersect a Sylow p-subgroup with its
// conjugates under the generators until the mask stabilises.
inline SubgroupSet p_core(const Group& g, std::int64_t p) {
    SubgroupSet x = sylow_subgroup(g, p);
    bool changed = true;
    while (changed) {
        changed = false;
        for (Elem c : g.generators()) {
            SubgroupSet cx = conjugate_subgroup(x, c);
            Bitset meet = x.mask;
            meet &= cx.mask;
            if (!(meet == x.mask)) {
                x = subgroup_from_mask(g, meet);
                changed = true;
            }
        }
    }
    return x;
}

// Largest normal nilpotent subgroup: the product of the p-cores.
inline SubgroupSet fitting_subgroup(const Group& g) {
    std::vector<Elem> seeds;
    for (const PrimePower& pp : factorize(g.order()).factors) {
        SubgroupSet c = p_core(g, pp.prime);
        for (Elem x : c.gens) seeds.push_back(x);
    }
    return closure(g, seeds);
}

inline std::int64_t exponent_of(const SubgroupSet& s) {
    std::int64_t e = 1;
    s.mask.for_each([&](std::size_t i) {
        e = std::lcm(e, std::int64_t(s.ambient.element_order(Elem(i))));
    });
    return e;
}

// --- quotient ----------------------------------------------------------------

struct Quotient {
    Group group;              // the quotient as a table-backed group
    std::vector<Elem> proj;   // ambient element -> quotient index
    std::vector<Elem> reps;   // quotient index -> least ambient representative
};

// G/N as an explicit group.  Throws NotNormal (with a conjugator/member
// witness) if N is not normal, OrderCapExceeded if the quotient is too large
// to hold as a table.
inline Quotient quotient(const Group& g, const SubgroupSet& n, const Caps& caps = {}) {
    for (Elem c : g.generators())
        for (Elem x : n.gens)
            if (!n.contains(g.conj(c, x)))
                throw NotNormal("conjugate of a member escapes the subgroup", c, x);
    std::int64_t q = g.order() / n.order;
    if (q > caps.table_cap)
        throw OrderCapExceeded("quotient of size " + std::to_string(q));
    Quotient out;
    out.proj.assign(static_cast<std::size_t>(g.order()), -1);
    std::vector<Elem> nm = n.members();
    for (std::int64_t x = 0; x < g.order(); ++x) {
        if (out.proj[static_cast<std::size_t>(x)] >= 0) continue;
        Elem id = Elem(out.reps.size());
        out.reps.push_back(Elem(x));
        for (Elem m : nm) out.proj[static_cast<std::size_t>(g.mul(Elem(x), m))] = id;
    }
    std::vector<std::vector<Elem>> table(static_cast<std::size_t>(q), std::vector<Elem>(static_cast<std::size_t>(q)));
    std::vector<std::string> labels(static_cast<std::size_t>(q));
    for (std::int64_t i = 0; i < q; ++i) {
        labels[static_cast<std::size_t>(i)] = g.label(out.reps[static_cast<std::size_t>(i)]) + "N";
        for (std::int64_t j = 0; j < q; ++j)
            table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                out.proj[static_cast<std::size_t>(g.mul(out.reps[static_cast<std::size_t>(i)], out.reps[static_cast<std::size_t>(j)]))];
    }
    out.group = build_from_table(table, labels, caps);
    return out;
}

// --- standalone view of a subgroup -------------------------------------------

struct SubgroupView {
    Group group;                    // the subgroup as a group in its own right
    std::vector<Elem> to_ambient;   // view index -> ambient index
};

inline SubgroupView as_group(const SubgroupSet& s, const Caps& caps = {}) {
    if (s.order > caps.table_cap)
        throw OrderCapExceeded("subgroup of size " + std::to_string(s.order));
    SubgroupView v;
    v.to_ambient = s.members();  // ascending, so ambient identity 0 lands at index 0
    std::vector<std::int64_t> back(static_cast<std::size_t>(s.ambient.order()), -1);
    for (std::size_t i = 0; i < v.to_ambient.size(); ++i)
        back[static_cast<std::size_t>(v.to_ambient[i])] = std::int64_t(i);
    std::int64_t n = s.order;
    std::vector<std::vector<Elem>> table(static_cast<std::size_t>(n), std::vector<Elem>(static_cast<std::size_t>(n)));
    std::vector<std::string> labels(static_cast<std::size_t>(n));
    for (std::int64_t i = 0; i < n; ++i) {
        labels[static_cast<std::size_t>(i)] = s.ambient.label(v.to_ambient[static_cast<std::size_t>(i)]);
        for (std::int64_t j = 0; j < n; ++j)
            table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = Elem(back[static_cast<std::size_t>(
                s.ambient.mul(v.to_ambient[static_cast<std::size_t>(i)], v.to_ambient[static_cast<std::size_t>(j)]))]);
    }
    v.group = build_from_table(table, labels, caps);
    return v;
}

}  // namespace hs
