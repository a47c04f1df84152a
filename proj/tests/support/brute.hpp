// Independent subgroup enumerator used to cross-check the lattice builder
// on small groups: closes every generating subset of size <= 4 and collects
// the distinct results.  Four generators cover every subgroup that can occur
// in a group of order <= 24 (the extreme case, an elementary abelian group
// of order 16, needs exactly four).
#pragma once

#include <set>
#include <vector>

#include "hallschmidt/subgroup.hpp"

namespace hs::test {

inline std::set<std::vector<Elem>> brute_subgroup_members(const Group& g) {
    std::set<std::vector<Elem>> out;
    std::int64_t n = g.order();
    std::vector<Elem> elems;
    for (Elem e = 0; e < n; ++e) elems.push_back(e);

    auto note = [&](const std::vector<Elem>& seeds) {
        out.insert(closure(g, seeds).members());
    };
    note({});
    for (std::size_t a = 0; a < elems.size(); ++a) {
        note({elems[a]});
        for (std::size_t b = a + 1; b < elems.size(); ++b) {
            note({elems[a], elems[b]});
            for (std::size_t c = b + 1; c < elems.size(); ++c) {
                note({elems[a], elems[b], elems[c]});
                for (std::size_t d = c + 1; d < elems.size(); ++d)
                    note({elems[a], elems[b], elems[c], elems[d]});
            }
        }
    }
    return out;
}

}  // namespace hs::test
