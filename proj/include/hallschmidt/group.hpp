// Core finite-group value type.
//
// A Group is an immutable handle over one of four element representations:
//   - table:       explicit Cayley table (small groups, file input)
//   - permutation: image arrays under composition
//   - matrix:      invertible matrices over a prime field
//   - structured:  mixed-radix coordinate tuples for (semi)direct products,
//                  elementary abelian blocks and extraspecial (Heisenberg)
//                  blocks with a twisting action of a cyclic top factor
//
// Elements are dense indices 0..n-1 with the identity always at index 0.
// Groups at or below `Caps::table_cap` carry a dense multiplication table
// (uint16 entries), so the hot path is one array load; larger groups
// multiply by formula.  All handles are cheap to copy and safe to share
// across threads once built.
#pragma once

#include <algorithm>
#include <cstdint>
#include <cstring>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "errors.hpp"
#include "numbers.hpp"

namespace hs {

using Elem = std::int32_t;

enum class ReprKind { table, permutation, matrix, structured };

inline const char* to_string(ReprKind k) {
    switch (k) {
        case ReprKind::table: return "table";
        case ReprKind::permutation: return "permutation";
        case ReprKind::matrix: return "matrix";
        default: return "structured-product";
    }
}

// Construction-time limits.  `element_cap` bounds closure enumeration,
// `table_cap` decides when a dense table is materialized, and the two
// associativity knobs control table validation cost.
struct Caps {
    std::int64_t element_cap = 500000;
    std::int32_t table_cap = 4096;
    std::int32_t assoc_exhaustive_cap = 512;
    std::int32_t assoc_samples = 100000;
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

struct GroupImpl {
    std::int64_t n = 0;
    ReprKind kind = ReprKind::table;
    std::vector<Elem> gens;
    std::vector<std::uint16_t> table;  // dense table iff n <= caps.table_cap
    std::vector<Elem> invs;
    std::vector<std::int32_t> orders;

    virtual ~GroupImpl() = default;
    virtual Elem fmul(Elem a, Elem b) const = 0;
    virtual Elem finv(Elem a) const = 0;
    virtual std::string label(Elem a) const {
        return "g" + std::to_string(a);
    }

    Elem mul(Elem a, Elem b) const {
        if (!table.empty()) return table[static_cast<std::size_t>(a) * n + b];
        return fmul(a, b);
    }

    // Populates table (when allowed), inverse array and element orders.
    // The table is filled by breadth-first chaining over the generators:
    // with a = parent*g we have a*b = parent*(g*b), so each new row costs
    // n lookups instead of n formula multiplications.
    void finalize(const Caps& caps) {
        // table-backed groups arrive with their table in place; building it
        // here would read the very array being overwritten
        if (table.empty() && n <= caps.table_cap && n <= 65535) build_table();
        invs.resize(static_cast<std::size_t>(n));
        for (Elem a = 0; a < n; ++a) invs[static_cast<std::size_t>(a)] = finv(a);
        compute_orders();
    }

    void build_table() {
        table.assign(static_cast<std::size_t>(n) * n, 0);
        std::vector<char> done(static_cast<std::size_t>(n), 0);
        auto row = [&](Elem a) { return table.data() + static_cast<std::size_t>(a) * n; };
        for (Elem b = 0; b < n; ++b) row(0)[b] = std::uint16_t(b);
        done[0] = 1;
        for (Elem g : gens) {
            if (done[static_cast<std::size_t>(g)]) continue;
            for (Elem b = 0; b < n; ++b) row(g)[b] = std::uint16_t(fmul(g, b));
            done[static_cast<std::size_t>(g)] = 1;
        }
        std::vector<Elem> queue{0};
        std::size_t head = 0;
        std::vector<char> seen(static_cast<std::size_t>(n), 0);
        seen[0] = 1;
        while (head < queue.size()) {
            Elem a = queue[head++];
            for (Elem g : gens) {
                Elem c = row(a)[g];
                if (seen[static_cast<std::size_t>(c)]) continue;
                seen[static_cast<std::size_t>(c)] = 1;
                if (!done[static_cast<std::size_t>(c)]) {
                    // c = a*g, so c*b = a*(g*b)
                    for (Elem b = 0; b < n; ++b) row(c)[b] = row(a)[row(g)[b]];
                    done[static_cast<std::size_t>(c)] = 1;
                }
                queue.push_back(c);
            }
        }
        for (Elem a = 0; a < n; ++a)
            if (!done[static_cast<std::size_t>(a)])  // disconnected from generators: fill directly
                for (Elem b = 0; b < n; ++b) row(a)[b] = std::uint16_t(fmul(a, b));
    }

    // Element orders via cyclic-subgroup sweeps: walking <g> once yields the
    // order of every power of g, so each cyclic subgroup is walked only once.
    void compute_orders() {
        orders.assign(static_cast<std::size_t>(n), 0);
        orders[0] = 1;
        std::vector<Elem> cycle;
        for (Elem g = 1; g < n; ++g) {
            if (orders[static_cast<std::size_t>(g)]) continue;
            cycle.clear();
            Elem x = g;
            while (x != 0) {
                cycle.push_back(x);
                x = mul(x, g);
            }
            std::int64_t d = std::int64_t(cycle.size()) + 1;
            for (std::size_t k = 1; k <= cycle.size(); ++k) {
                Elem y = cycle[k - 1];
                if (!orders[static_cast<std::size_t>(y)])
                    orders[static_cast<std::size_t>(y)] =
                        std::int32_t(d / std::gcd<std::int64_t>(d, std::int64_t(k)));
            }
        }
    }
};

struct TableImpl final : GroupImpl {
    std::vector<std::string> labels;

    Elem fmul(Elem a, Elem b) const override { return table[static_cast<std::size_t>(a) * n + b]; }
    Elem finv(Elem a) const override {
        for (Elem b = 0; b < n; ++b)
            if (fmul(a, b) == 0) return b;
        throw Error("element without inverse survived validation");
    }
    std::string label(Elem a) const override {
        if (!labels.empty()) return labels[static_cast<std::size_t>(a)];
        return "g" + std::to_string(a);
    }
};

struct PermImpl final : GroupImpl {
    int degree = 0;
    std::vector<std::uint8_t> elems;  // n * degree image arrays, sorted lex

    const std::uint8_t* at(Elem a) const { return elems.data() + static_cast<std::size_t>(a) * degree; }

    Elem index_of(const std::uint8_t* img) const {
        std::int64_t lo = 0, hi = n - 1;
        while (lo <= hi) {
            std::int64_t mid = (lo + hi) / 2;
            int c = std::memcmp(at(Elem(mid)), img, static_cast<std::size_t>(degree));
            if (c == 0) return Elem(mid);
            if (c < 0) lo = mid + 1; else hi = mid - 1;
        }
        throw Error("permutation product escaped the closed element set");
    }

    Elem fmul(Elem a, Elem b) const override {
        const std::uint8_t *pa = at(a), *pb = at(b);
        std::uint8_t buf[256];
        for (int i = 0; i < degree; ++i) buf[i] = pa[pb[i]];
        return index_of(buf);
    }
    Elem finv(Elem a) const override {
        const std::uint8_t* pa = at(a);
        std::uint8_t buf[256];
        for (int i = 0; i < degree; ++i) buf[pa[i]] = std::uint8_t(i);
        return index_of(buf);
    }
    std::string label(Elem a) const override {
        // cycle notation, 1-based points
        const std::uint8_t* img = at(a);
        std::vector<char> used(static_cast<std::size_t>(degree), 0);
        std::ostringstream os;
        bool any = false;
        for (int i = 0; i < degree; ++i) {
            if (used[static_cast<std::size_t>(i)] || img[i] == i) continue;
            os << "(";
            int j = i;
            bool first = true;
            while (!used[static_cast<std::size_t>(j)]) {
                used[static_cast<std::size_t>(j)] = 1;
                if (!first) os << " ";
                os << (j + 1);
                first = false;
                j = img[j];
            }
            os << ")";
            any = true;
        }
        return any ? os.str() : "id";
    }
};

struct MatrixImpl final : GroupImpl {
    int dim = 0;
    std::int64_t p = 0;
    std::vector<std::uint16_t> elems;   // n * dim*dim flattened, identity at 0
    std::vector<Elem> lex_order;        // element indices sorted by entry lex

    const std::uint16_t* at(Elem a) const {
        return elems.data() + static_cast<std::size_t>(a) * dim * dim;
    }

    Elem index_of(const std::uint16_t* m) const {
        int k = dim * dim;
        std::int64_t lo = 0, hi = n - 1;
        while (lo <= hi) {
            std::int64_t mid = (lo + hi) / 2;
            const std::uint16_t* q = at(lex_order[static_cast<std::size_t>(mid)]);
            int c = 0;
            for (int i = 0; i < k; ++i)
                if (q[i] != m[i]) { c = q[i] < m[i] ? -1 : 1; break; }
            if (c == 0) return lex_order[static_cast<std::size_t>(mid)];
            if (c < 0) lo = mid + 1; else hi = mid - 1;
        }
        throw Error("matrix product escaped the closed element set");
    }

    Elem fmul(Elem a, Elem b) const override {
        const std::uint16_t *ma = at(a), *mb = at(b);
        std::uint16_t buf[256];
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j) {
                std::int64_t s = 0;
                for (int k = 0; k < dim; ++k)
                    s += std::int64_t(ma[i * dim + k]) * mb[k * dim + j];
                buf[i * dim + j] = std::uint16_t(s % p);
            }
        return index_of(buf);
    }
    Elem finv(Elem a) const override {
        Mat m{dim, p, {}};
        m.a.assign(at(a), at(a) + dim * dim);
        Mat mi = mat_inverse(m);
        std::uint16_t buf[256];
        for (int i = 0; i < dim * dim; ++i) buf[i] = std::uint16_t(mi.a[static_cast<std::size_t>(i)]);
        return index_of(buf);
    }
    std::string label(Elem a) const override {
        const std::uint16_t* m = at(a);
        std::ostringstream os;
        os << "[";
        for (int i = 0; i < dim; ++i) {
            if (i) os << ",";
            os << "[";
            for (int j = 0; j < dim; ++j) {
                if (j) os << ",";
                os << m[i * dim + j];
            }
            os << "]";
        }
        os << "]";
        return os.str();
    }
};

}  // namespace detail

class Group {
public:
    Group() = default;
    explicit Group(std::shared_ptr<const detail::GroupImpl> impl)
        : impl_(std::move(impl)) {
        if (impl_ && !impl_->table.empty()) {
            tab_ = impl_->table.data();
            tabn_ = impl_->n;
        }
    }

    bool valid() const { return impl_ != nullptr; }
    std::int64_t order() const { return impl_->n; }
    ReprKind kind() const { return impl_->kind; }

    Elem mul(Elem a, Elem b) const {
        if (tab_) return tab_[static_cast<std::size_t>(a) * tabn_ + b];
        return impl_->fmul(a, b);
    }
    Elem inv(Elem a) const { return impl_->invs[static_cast<std::size_t>(a)]; }
    Elem conj(Elem g, Elem x) const { return mul(mul(g, x), inv(g)); }
    Elem commutator(Elem a, Elem b) const {
        return mul(mul(a, b), mul(inv(a), inv(b)));
    }

    Elem power(Elem a, std::int64_t e) const {
        std::int32_t d = element_order(a);
        e %= d;
        if (e < 0) e += d;
        Elem r = 0, base = a;
        while (e > 0) {
            if (e & 1) r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }

    std::int32_t element_order(Elem a) const { return impl_->orders[static_cast<std::size_t>(a)]; }
    const std::vector<std::int32_t>& element_orders() const { return impl_->orders; }
    const std::vector<Elem>& generators() const { return impl_->gens; }
    std::string label(Elem a) const { return impl_->label(a); }

    // Same underlying object (not isomorphism).
    bool same_as(const Group& o) const { return impl_ == o.impl_; }
    const detail::GroupImpl* impl() const { return impl_.get(); }

private:
    std::shared_ptr<const detail::GroupImpl> impl_;
    const std::uint16_t* tab_ = nullptr;
    std::int64_t tabn_ = 0;
};

// Full multiplication table of a group, row-major: t[a][b] = a*b.  Intended
// for exporting small groups and for rebuild round-trips.
inline std::vector<std::vector<Elem>> cayley_table(const Group& g) {
    std::int64_t n = g.order();
    std::vector<std::vector<Elem>> t(static_cast<std::size_t>(n), std::vector<Elem>(static_cast<std::size_t>(n)));
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b) t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = g.mul(a, b);
    return t;
}

// Multiset of element orders as (order, count) pairs, ascending.  Used as a
// cheap isomorphism-invariant signature.
inline std::vector<std::pair<std::int32_t, std::int64_t>> order_statistics(const Group& g) {
    std::vector<std::int32_t> o = g.element_orders();
    std::sort(o.begin(), o.end());
    std::vector<std::pair<std::int32_t, std::int64_t>> out;
    for (std::size_t i = 0; i < o.size();) {
        std::size_t j = i;
        while (j < o.size() && o[j] == o[i]) ++j;
        out.emplace_back(o[i], std::int64_t(j - i));
        i = j;
    }
    return out;
}

namespace detail {

// Greedy deterministic generating set: repeatedly adjoin the least element
// outside the span.  Bounded by log2(n) generators.
template <typename Mul>
inline std::vector<Elem> greedy_generators(std::int64_t n, Mul&& mul) {
    std::vector<Elem> gens;
    std::vector<char> in(static_cast<std::size_t>(n), 0);
    in[0] = 1;
    std::int64_t covered = 1;
    std::vector<Elem> members{0};
    while (covered < n) {
        Elem next = -1;
        for (Elem x = 0; x < n; ++x)
            if (!in[static_cast<std::size_t>(x)]) { next = x; break; }
        gens.push_back(next);
        // close members under right-multiplication by all gens
        std::vector<Elem> queue = members;
        in[static_cast<std::size_t>(next)] = 1;
        members.push_back(next);
        queue.push_back(next);
        ++covered;
        std::size_t head = 0;
        while (head < queue.size()) {
            Elem a = queue[head++];
            for (Elem g : gens) {
                Elem c = mul(a, g);
                if (!in[static_cast<std::size_t>(c)]) {
                    in[static_cast<std::size_t>(c)] = 1;
                    members.push_back(c);
                    queue.push_back(c);
                    ++covered;
                }
            }
        }
    }
    return gens;
}

}  // namespace detail

// --- builders ---------------------------------------------------------------

// Validates a full multiplication table and returns the group with the
// identity relocated to index 0.  Checks: shape, closure (latin square),
// identity, inverses, associativity (exhaustive up to
// caps.assoc_exhaustive_cap, deterministic sampling above).
inline Group build_from_table(const std::vector<std::vector<Elem>>& t,
                              const std::vector<std::string>& labels = {},
                              const Caps& caps = {}) {
    std::int64_t n = std::int64_t(t.size());
    if (n < 1) throw NotAGroup("empty table");
    if (n > caps.table_cap)
        throw OrderCapExceeded("table of size " + std::to_string(n) +
                               " exceeds table cap " + std::to_string(caps.table_cap));
    for (std::int64_t r = 0; r < n; ++r) {
        if (std::int64_t(t[static_cast<std::size_t>(r)].size()) != n)
            throw NotAGroup("row " + std::to_string(r) + " has wrong length");
        for (std::int64_t c = 0; c < n; ++c) {
            Elem v = t[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
            if (v < 0 || v >= n)
                throw NotAGroup("entry out of range at (" + std::to_string(r) + "," +
                                std::to_string(c) + ")");
        }
    }
    // latin square (gives cancellation, hence unique identity and inverses)
    std::vector<char> seen(static_cast<std::size_t>(n));
    for (std::int64_t r = 0; r < n; ++r) {
        std::fill(seen.begin(), seen.end(), 0);
        for (std::int64_t c = 0; c < n; ++c) {
            Elem v = t[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
            if (seen[static_cast<std::size_t>(v)])
                throw NotAGroup("row " + std::to_string(r) + " repeats element " +
                                std::to_string(v));
            seen[static_cast<std::size_t>(v)] = 1;
        }
    }
    for (std::int64_t c = 0; c < n; ++c) {
        std::fill(seen.begin(), seen.end(), 0);
        for (std::int64_t r = 0; r < n; ++r) {
            Elem v = t[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
            if (seen[static_cast<std::size_t>(v)])
                throw NotAGroup("column " + std::to_string(c) + " repeats element " +
                                std::to_string(v));
            seen[static_cast<std::size_t>(v)] = 1;
        }
    }
    Elem e = -1;
    for (std::int64_t cand = 0; cand < n; ++cand) {
        bool ok = true;
        for (std::int64_t x = 0; x < n && ok; ++x)
            ok = t[static_cast<std::size_t>(cand)][static_cast<std::size_t>(x)] == Elem(x) &&
                 t[static_cast<std::size_t>(x)][static_cast<std::size_t>(cand)] == Elem(x);
        if (ok) { e = Elem(cand); break; }
    }
    if (e < 0) throw NotAGroup("no identity element");
    for (std::int64_t x = 0; x < n; ++x) {
        bool has = false;
        for (std::int64_t y = 0; y < n && !has; ++y)
            has = t[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] == e;
        if (!has) throw NotAGroup("element " + std::to_string(x) + " has no inverse");
    }
    auto assoc_check = [&](Elem a, Elem b, Elem c) {
        Elem ab = t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
        Elem bc = t[static_cast<std::size_t>(b)][static_cast<std::size_t>(c)];
        if (t[static_cast<std::size_t>(ab)][static_cast<std::size_t>(c)] != t[static_cast<std::size_t>(a)][static_cast<std::size_t>(bc)])
            throw NotAGroup("associativity fails", {a, b, c});
    };
    if (n <= caps.assoc_exhaustive_cap) {
        for (Elem a = 0; a < n; ++a)
            for (Elem b = 0; b < n; ++b)
                for (Elem c = 0; c < n; ++c) assoc_check(a, b, c);
    } else {
        std::uint64_t state = 0x5eed0000ull ^ std::uint64_t(n);
        for (std::int32_t i = 0; i < caps.assoc_samples; ++i) {
            Elem a = Elem(detail::splitmix64(state) % std::uint64_t(n));
            Elem b = Elem(detail::splitmix64(state) % std::uint64_t(n));
            Elem c = Elem(detail::splitmix64(state) % std::uint64_t(n));
            assoc_check(a, b, c);
        }
    }
    // relocate identity to index 0 by swapping labels 0 <-> e
    auto relab = [&](Elem x) -> Elem { return x == e ? 0 : (x == 0 ? e : x); };
    auto impl = std::make_shared<detail::TableImpl>();
    impl->n = n;
    impl->kind = ReprKind::table;
    impl->table.assign(static_cast<std::size_t>(n) * n, 0);
    for (std::int64_t r = 0; r < n; ++r)
        for (std::int64_t c = 0; c < n; ++c)
            impl->table[static_cast<std::size_t>(relab(Elem(r))) * n + relab(Elem(c))] =
                std::uint16_t(relab(t[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]));
    if (!labels.empty()) {
        if (std::int64_t(labels.size()) != n)
            throw InvalidParams("label count does not match table size");
        impl->labels.resize(static_cast<std::size_t>(n));
        for (std::int64_t i = 0; i < n; ++i)
            impl->labels[static_cast<std::size_t>(relab(Elem(i)))] = labels[static_cast<std::size_t>(i)];
    }
    impl->gens = detail::greedy_generators(n, [&](Elem a, Elem b) {
        return Elem(impl->table[static_cast<std::size_t>(a) * n + b]);
    });
    impl->finalize(caps);
    return Group(impl);
}

// Closure of permutation generators (0-based image arrays) under
// composition; mul(a,b) applies b first.  Elements are canonically ordered
// lexicographically by image array, which puts the identity at index 0.
inline Group build_from_permutations(int degree,
                                     const std::vector<std::vector<Elem>>& gens,
                                     const Caps& caps = {}) {
    if (degree < 1 || degree > 255)
        throw InvalidParams("permutation degree must be in 1..255");
    if (gens.empty()) throw InvalidParams("at least one generator required");
    std::vector<std::vector<std::uint8_t>> g8;
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
        const auto& g = gens[gi];
        if (std::int64_t(g.size()) != degree)
            throw NotAPermutation("generator " + std::to_string(gi) +
                                  " has wrong length");
        std::vector<char> hit(static_cast<std::size_t>(degree), 0);
        std::vector<std::uint8_t> img(static_cast<std::size_t>(degree));
        for (int i = 0; i < degree; ++i) {
            if (g[static_cast<std::size_t>(i)] < 0 || g[static_cast<std::size_t>(i)] >= degree)
                throw NotAPermutation("generator " + std::to_string(gi) +
                                      " maps point " + std::to_string(i) +
                                      " out of range");
            if (hit[static_cast<std::size_t>(g[static_cast<std::size_t>(i)])])
                throw NotAPermutation("generator " + std::to_string(gi) +
                                      " repeats image " +
                                      std::to_string(g[static_cast<std::size_t>(i)]));
            hit[static_cast<std::size_t>(g[static_cast<std::size_t>(i)])] = 1;
            img[static_cast<std::size_t>(i)] = std::uint8_t(g[static_cast<std::size_t>(i)]);
        }
        g8.push_back(std::move(img));
    }

    struct VecHash {
        std::size_t operator()(const std::vector<std::uint8_t>& v) const {
            std::uint64_t h = 1469598103934665603ull;
            for (auto b : v) h = (h ^ b) * 1099511628211ull;
            return static_cast<std::size_t>(h);
        }
    };
    std::vector<std::vector<std::uint8_t>> elems;
    std::unordered_map<std::vector<std::uint8_t>, Elem, VecHash> index;
    std::vector<std::uint8_t> id(static_cast<std::size_t>(degree));
    for (int i = 0; i < degree; ++i) id[static_cast<std::size_t>(i)] = std::uint8_t(i);
    elems.push_back(id);
    index.emplace(id, 0);
    std::size_t head = 0;
    while (head < elems.size()) {
        std::vector<std::uint8_t> cur = elems[head++];
        for (const auto& g : g8) {
            std::vector<std::uint8_t> prod(static_cast<std::size_t>(degree));
            for (int i = 0; i < degree; ++i)
                prod[static_cast<std::size_t>(i)] = cur[g[static_cast<std::size_t>(i)]];  // cur∘g
            if (index.emplace(prod, Elem(elems.size())).second) {
                elems.push_back(std::move(prod));
                if (std::int64_t(elems.size()) > caps.element_cap)
                    throw OrderCapExceeded("permutation closure passed " +
                                           std::to_string(caps.element_cap));
            }
        }
    }
    std::sort(elems.begin(), elems.end());
    auto impl = std::make_shared<detail::PermImpl>();
    impl->n = std::int64_t(elems.size());
    impl->kind = ReprKind::permutation;
    impl->degree = degree;
    impl->elems.reserve(elems.size() * static_cast<std::size_t>(degree));
    for (const auto& el : elems)
        impl->elems.insert(impl->elems.end(), el.begin(), el.end());
    for (const auto& g : g8) {
        auto it = std::lower_bound(elems.begin(), elems.end(), g);
        Elem idx = Elem(it - elems.begin());
        if (std::find(impl->gens.begin(), impl->gens.end(), idx) == impl->gens.end())
            impl->gens.push_back(idx);
    }
    impl->finalize(caps);
    return Group(impl);
}

// Closure of invertible matrices over F_p.  Canonical order: identity
// first, remaining elements sorted lexicographically by flattened entries.
inline Group build_from_matrices(int dim, std::int64_t p,
                                 const std::vector<std::vector<std::int64_t>>& gens,
                                 const Caps& caps = {}) {
    if (!is_prime(p)) throw NotPrime("matrix field size " + std::to_string(p));
    if (p >= 65536) throw InvalidParams("matrix field size must stay below 2^16");
    if (dim < 1 || dim > 16) throw InvalidParams("matrix dimension must be in 1..16");
    if (gens.empty()) throw InvalidParams("at least one generator required");
    int k = dim * dim;
    std::vector<std::vector<std::uint16_t>> g16;
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
        if (std::int64_t(gens[gi].size()) != k)
            throw InvalidParams("generator " + std::to_string(gi) +
                                " has wrong entry count");
        Mat m{dim, p, {}};
        m.a.resize(static_cast<std::size_t>(k));
        std::vector<std::uint16_t> mm(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) {
            std::int64_t v = gens[gi][static_cast<std::size_t>(i)] % p;
            if (v < 0) v += p;
            m.a[static_cast<std::size_t>(i)] = v;
            mm[static_cast<std::size_t>(i)] = std::uint16_t(v);
        }
        if (mat_det(m) == 0)
            throw SingularGenerator("generator " + std::to_string(gi) +
                                    " has zero determinant mod " + std::to_string(p));
        g16.push_back(std::move(mm));
    }
    struct VecHash {
        std::size_t operator()(const std::vector<std::uint16_t>& v) const {
            std::uint64_t h = 1469598103934665603ull;
            for (auto b : v) h = (h ^ b) * 1099511628211ull;
            return static_cast<std::size_t>(h);
        }
    };
    std::vector<std::vector<std::uint16_t>> elems;
    std::unordered_map<std::vector<std::uint16_t>, Elem, VecHash> index;
    std::vector<std::uint16_t> id(static_cast<std::size_t>(k), 0);
    for (int i = 0; i < dim; ++i) id[static_cast<std::size_t>(i * dim + i)] = 1;
    elems.push_back(id);
    index.emplace(id, 0);
    std::size_t head = 0;
    while (head < elems.size()) {
        std::vector<std::uint16_t> cur = elems[head++];
        for (const auto& g : g16) {
            std::vector<std::uint16_t> prod(static_cast<std::size_t>(k));
            for (int i = 0; i < dim; ++i)
                for (int j = 0; j < dim; ++j) {
                    std::int64_t s = 0;
                    for (int l = 0; l < dim; ++l)
                        s += std::int64_t(cur[static_cast<std::size_t>(i * dim + l)]) *
                             g[static_cast<std::size_t>(l * dim + j)];
                    prod[static_cast<std::size_t>(i * dim + j)] = std::uint16_t(s % p);
                }
            if (index.emplace(prod, Elem(elems.size())).second) {
                elems.push_back(std::move(prod));
                if (std::int64_t(elems.size()) > caps.element_cap)
                    throw OrderCapExceeded("matrix closure passed " +
                                           std::to_string(caps.element_cap));
            }
        }
    }
    // canonical order: identity, then lex
    std::vector<std::vector<std::uint16_t>> rest;
    rest.reserve(elems.size() - 1);
    for (auto& el : elems)
        if (el != id) rest.push_back(std::move(el));
    std::sort(rest.begin(), rest.end());
    auto impl = std::make_shared<detail::MatrixImpl>();
    impl->n = std::int64_t(rest.size()) + 1;
    impl->kind = ReprKind::matrix;
    impl->dim = dim;
    impl->p = p;
    impl->elems.reserve(static_cast<std::size_t>(impl->n) * k);
    impl->elems.insert(impl->elems.end(), id.begin(), id.end());
    for (const auto& el : rest)
        impl->elems.insert(impl->elems.end(), el.begin(), el.end());
    impl->lex_order.resize(static_cast<std::size_t>(impl->n));
    for (Elem i = 0; i < impl->n; ++i) impl->lex_order[static_cast<std::size_t>(i)] = i;
    std::sort(impl->lex_order.begin(), impl->lex_order.end(), [&](Elem a, Elem b) {
        const std::uint16_t *pa = impl->at(a), *pb = impl->at(b);
        for (int i = 0; i < k; ++i)
            if (pa[i] != pb[i]) return pa[i] < pb[i];
        return false;
    });
    for (const auto& g : g16) {
        Elem idx = impl->index_of(g.data());
        if (std::find(impl->gens.begin(), impl->gens.end(), idx) == impl->gens.end())
            impl->gens.push_back(idx);
    }
    impl->finalize(caps);
    return Group(impl);
}

}  // namespace hs
