// Product constructions: direct products of arbitrary groups, semidirect
// products with an explicit automorphism action, and the coordinate-backed
// "structured" representation used for large extensions such as
// [extraspecial p-group] x| Z_k, where a dense table is out of reach.
#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "group.hpp"

namespace hs {

namespace detail {

struct DirectImpl final : GroupImpl {
    Group a, b;
    std::int64_t nb = 0;

    Elem fmul(Elem x, Elem y) const override {
        Elem xa = Elem(x / nb), xb = Elem(x % nb);
        Elem ya = Elem(y / nb), yb = Elem(y % nb);
        return Elem(std::int64_t(a.mul(xa, ya)) * nb + b.mul(xb, yb));
    }
    Elem finv(Elem x) const override {
        return Elem(std::int64_t(a.inv(Elem(x / nb))) * nb + b.inv(Elem(x % nb)));
    }
    std::string label(Elem x) const override {
        return "(" + a.label(Elem(x / nb)) + "," + b.label(Elem(x % nb)) + ")";
    }
};

struct SemidirectImpl final : GroupImpl {
    Group base, top;
    std::int64_t nt = 0;
    std::vector<std::vector<Elem>> act;  // act[h] : automorphism of base

    Elem fmul(Elem x, Elem y) const override {
        Elem xn = Elem(x / nt), xh = Elem(x % nt);
        Elem yn = Elem(y / nt), yh = Elem(y % nt);
        Elem tw = act[static_cast<std::size_t>(xh)][static_cast<std::size_t>(yn)];
        return Elem(std::int64_t(base.mul(xn, tw)) * nt + top.mul(xh, yh));
    }
    Elem finv(Elem x) const override {
        Elem xn = Elem(x / nt), xh = Elem(x % nt);
        Elem hi = top.inv(xh);
        return Elem(std::int64_t(act[static_cast<std::size_t>(hi)][static_cast<std::size_t>(base.inv(xn))]) * nt + hi);
    }
    std::string label(Elem x) const override {
        return "(" + base.label(Elem(x / nt)) + "," + top.label(Elem(x % nt)) + ")";
    }
};

// One coordinate block of a structured group.
struct StructuredBlock {
    enum class Kind { vec, heis };
    Kind kind;
    std::int64_t p;
    int dim;  // vec: F_p^dim; heis: 3 (triples mod p)

    std::int64_t size() const {
        std::int64_t s = 1;
        for (int i = 0; i < dim; ++i) s *= p;
        return s;
    }
};

// Elements are tuples (block coords ..., top coords); the cyclic top factors
// act on each block through a matrix.  For a Heisenberg block the matrix is
// an SL(2,p) action on the Frattini quotient, lifted to the whole block by a
// quadratic correction (see heis_apply); the lift fixes the center pointwise.
struct StructuredImpl final : GroupImpl {
    std::vector<StructuredBlock> blocks;
    std::vector<std::int64_t> top_orders;
    std::vector<std::vector<Mat>> act;  // act[top_index][block]
    std::vector<std::int64_t> strides;  // per coordinate, most significant first
    std::vector<std::int64_t> radix;    // per coordinate
    int ncoords = 0, ntopcoords = 0;
    std::int64_t top_count = 1;

    void decode(Elem x, std::int64_t* c) const {
        std::int64_t v = x;
        for (int i = 0; i < ncoords; ++i) {
            c[i] = v / strides[static_cast<std::size_t>(i)];
            v %= strides[static_cast<std::size_t>(i)];
        }
    }
    Elem encode(const std::int64_t* c) const {
        std::int64_t v = 0;
        for (int i = 0; i < ncoords; ++i) v += c[i] * strides[static_cast<std::size_t>(i)];
        return Elem(v);
    }

    std::int64_t top_index(const std::int64_t* c) const {
        std::int64_t t = 0;
        for (int i = 0; i < ntopcoords; ++i)
            t = t * top_orders[static_cast<std::size_t>(i)] + c[ncoords - ntopcoords + i];
        return t;
    }

    // Heisenberg multiplication: (a,b,c)(a',b',c') = (a+a', b+b', c+c'+a*b').
    static void heis_mul(std::int64_t p, const std::int64_t* x, const std::int64_t* y,
                         std::int64_t* out) {
        out[0] = (x[0] + y[0]) % p;
        out[1] = (x[1] + y[1]) % p;
        out[2] = (x[2] + y[2] + x[0] * y[1]) % p;
    }

    // Applies the lifted action of A in SL(2,p) to a Heisenberg triple:
    // (a,b) |-> A(a,b) on the Frattini quotient, with the center coordinate
    // corrected by f(v) = ((Av)_1 (Av)_2 - v_1 v_2) / 2 so the result is an
    // automorphism.  Requires det A = 1 and p odd.
    static void heis_apply(const Mat& A, const std::int64_t* v, std::int64_t* out) {
        std::int64_t p = A.p;
        std::int64_t a = (A.at(0, 0) * v[0] + A.at(0, 1) * v[1]) % p;
        std::int64_t b = (A.at(1, 0) * v[0] + A.at(1, 1) * v[1]) % p;
        std::int64_t inv2 = mod_pow(2, p - 2, p);
        std::int64_t corr = ((a * b - v[0] * v[1]) % p + p) % p * inv2 % p;
        out[0] = a;
        out[1] = b;
        out[2] = (v[2] + corr) % p;
    }

    Elem fmul(Elem x, Elem y) const override {
        std::int64_t cx[24], cy[24], cr[24];
        decode(x, cx);
        decode(y, cy);
        const auto& A = act[static_cast<std::size_t>(top_index(cx))];
        int off = 0;
        for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
            const auto& blk = blocks[bi];
            if (blk.kind == StructuredBlock::Kind::vec) {
                for (int i = 0; i < blk.dim; ++i) {
                    std::int64_t s = 0;
                    for (int j = 0; j < blk.dim; ++j)
                        s += A[bi].at(i, j) * cy[off + j];
                    cr[off + i] = (cx[off + i] + s) % blk.p;
                }
            } else {
                std::int64_t tw[3];
                heis_apply(A[bi], cy + off, tw);
                heis_mul(blk.p, cx + off, tw, cr + off);
            }
            off += blk.dim;
        }
        for (int i = 0; i < ntopcoords; ++i)
            cr[off + i] = (cx[off + i] + cy[off + i]) % top_orders[static_cast<std::size_t>(i)];
        return encode(cr);
    }

    Elem finv(Elem x) const override {
        std::int64_t cx[24], ci[24], cr[24];
        decode(x, cx);
        int off = 0;
        for (const auto& blk : blocks) {
            if (blk.kind == StructuredBlock::Kind::vec) {
                for (int i = 0; i < blk.dim; ++i)
                    ci[off + i] = (blk.p - cx[off + i]) % blk.p;
            } else {
                ci[off + 0] = (blk.p - cx[off + 0]) % blk.p;
                ci[off + 1] = (blk.p - cx[off + 1]) % blk.p;
                ci[off + 2] = ((blk.p - cx[off + 2]) + cx[off + 0] * cx[off + 1]) % blk.p;
            }
            off += blk.dim;
        }
        std::int64_t ti[24];
        for (int i = 0; i < ntopcoords; ++i) {
            ci[off + i] = (top_orders[static_cast<std::size_t>(i)] - cx[off + i]) %
                          top_orders[static_cast<std::size_t>(i)];
            ti[i] = ci[off + i];
        }
        // (n,h)^-1 = (alpha_{h^-1}(n^-1), h^-1)
        std::int64_t hidx = 0;
        for (int i = 0; i < ntopcoords; ++i)
            hidx = hidx * top_orders[static_cast<std::size_t>(i)] + ti[i];
        const auto& A = act[static_cast<std::size_t>(hidx)];
        off = 0;
        for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
            const auto& blk = blocks[bi];
            if (blk.kind == StructuredBlock::Kind::vec) {
                for (int i = 0; i < blk.dim; ++i) {
                    std::int64_t s = 0;
                    for (int j = 0; j < blk.dim; ++j)
                        s += A[bi].at(i, j) * ci[off + j];
                    cr[off + i] = s % blk.p;
                }
            } else {
                heis_apply(A[bi], ci + off, cr + off);
            }
            off += blk.dim;
        }
        for (int i = 0; i < ntopcoords; ++i) cr[off + i] = ci[off + i];
        return encode(cr);
    }

    std::string label(Elem x) const override {
        std::int64_t c[24];
        decode(x, c);
        std::ostringstream os;
        os << "(";
        for (int i = 0; i < ncoords - ntopcoords; ++i) {
            if (i) os << ",";
            os << c[i];
        }
        if (ntopcoords) {
            if (ncoords > ntopcoords) os << ";";
            for (int i = 0; i < ntopcoords; ++i) {
                if (i) os << ",";
                os << c[ncoords - ntopcoords + i];
            }
        }
        os << ")";
        return os.str();
    }
};

}  // namespace detail

inline Group direct_product(const Group& a, const Group& b, const Caps& caps = {}) {
    if (a.order() * b.order() > caps.element_cap)
        throw OrderCapExceeded("direct product order " +
                               std::to_string(a.order() * b.order()));
    auto impl = std::make_shared<detail::DirectImpl>();
    impl->n = a.order() * b.order();
    impl->kind = ReprKind::structured;
    impl->a = a;
    impl->b = b;
    impl->nb = b.order();
    for (Elem g : a.generators()) impl->gens.push_back(Elem(std::int64_t(g) * impl->nb));
    for (Elem g : b.generators()) impl->gens.push_back(g);
    impl->finalize(caps);
    return Group(impl);
}

// Action of `actor` on `target` by automorphisms: images[h] is the
// permutation of target indices induced by h.
struct GroupAction {
    Group actor, target;
    std::vector<std::vector<Elem>> images;
};

// Validates that an action is by automorphisms and is a homomorphism from
// the actor.  Exhaustive for small targets, sampled (deterministically)
// above the associativity cap.
inline void validate_action(const GroupAction& act, const Caps& caps = {}) {
    std::int64_t nn = act.target.order(), nh = act.actor.order();
    if (std::int64_t(act.images.size()) != nh)
        throw InvalidAction("image count does not match actor order");
    for (std::int64_t h = 0; h < nh; ++h) {
        const auto& img = act.images[static_cast<std::size_t>(h)];
        if (std::int64_t(img.size()) != nn)
            throw InvalidAction("image of actor element " + std::to_string(h) +
                                " has wrong length");
        std::vector<char> hit(static_cast<std::size_t>(nn), 0);
        for (std::int64_t x = 0; x < nn; ++x) {
            if (img[static_cast<std::size_t>(x)] < 0 || img[static_cast<std::size_t>(x)] >= nn ||
                hit[static_cast<std::size_t>(img[static_cast<std::size_t>(x)])])
                throw InvalidAction("actor element " + std::to_string(h) +
                                    " does not act bijectively");
            hit[static_cast<std::size_t>(img[static_cast<std::size_t>(x)])] = 1;
        }
        if (img[0] != 0)
            throw InvalidAction("actor element " + std::to_string(h) +
                                " moves the identity");
    }
    for (Elem x = 0; x < nn; ++x)
        if (act.images[0][static_cast<std::size_t>(x)] != x)
            throw InvalidAction("identity of the actor acts nontrivially");
    auto check_aut = [&](std::int64_t h, Elem x, Elem y) {
        const auto& img = act.images[static_cast<std::size_t>(h)];
        if (img[static_cast<std::size_t>(act.target.mul(x, y))] !=
            act.target.mul(img[static_cast<std::size_t>(x)], img[static_cast<std::size_t>(y)]))
            throw InvalidAction("actor element " + std::to_string(h) +
                                " is not an automorphism (fails at " +
                                std::to_string(x) + "," + std::to_string(y) + ")");
    };
    auto check_hom = [&](Elem h1, Elem h2, Elem x) {
        Elem lhs = act.images[static_cast<std::size_t>(act.actor.mul(h1, h2))][static_cast<std::size_t>(x)];
        Elem rhs = act.images[static_cast<std::size_t>(h1)]
                             [static_cast<std::size_t>(act.images[static_cast<std::size_t>(h2)][static_cast<std::size_t>(x)])];
        if (lhs != rhs)
            throw InvalidAction("action is not a homomorphism at actor pair (" +
                                std::to_string(h1) + "," + std::to_string(h2) + ")");
    };
    if (nn <= caps.assoc_exhaustive_cap) {
        for (std::int64_t h = 0; h < nh; ++h)
            for (Elem x = 0; x < nn; ++x)
                for (Elem y = 0; y < nn; ++y) check_aut(h, x, y);
        for (Elem h1 = 0; h1 < nh; ++h1)
            for (Elem h2 = 0; h2 < nh; ++h2)
                for (Elem x = 0; x < nn; ++x) check_hom(h1, h2, x);
    } else {
        std::uint64_t state = 0xac710000ull ^ std::uint64_t(nn * 31 + nh);
        for (std::int32_t i = 0; i < caps.assoc_samples; ++i) {
            std::int64_t h = std::int64_t(detail::splitmix64(state) % std::uint64_t(nh));
            Elem x = Elem(detail::splitmix64(state) % std::uint64_t(nn));
            Elem y = Elem(detail::splitmix64(state) % std::uint64_t(nn));
            check_aut(h, x, y);
            Elem h2 = Elem(detail::splitmix64(state) % std::uint64_t(nh));
            check_hom(Elem(h), h2, x);
        }
    }
}

// Semidirect product [target] x| actor with the given action:
// (n1,h1)(n2,h2) = (n1 * h1(n2), h1 h2).
inline Group semidirect_product(const Group& base, const Group& top,
                                const GroupAction& act, const Caps& caps = {}) {
    if (!act.actor.same_as(top) || !act.target.same_as(base))
        throw InvalidAction("action endpoints do not match the given groups");
    if (base.order() * top.order() > caps.element_cap)
        throw OrderCapExceeded("semidirect product order " +
                               std::to_string(base.order() * top.order()));
    validate_action(act, caps);
    auto impl = std::make_shared<detail::SemidirectImpl>();
    impl->n = base.order() * top.order();
    impl->kind = ReprKind::structured;
    impl->base = base;
    impl->top = top;
    impl->nt = top.order();
    impl->act = act.images;
    for (Elem g : base.generators()) impl->gens.push_back(Elem(std::int64_t(g) * impl->nt));
    for (Elem g : top.generators()) impl->gens.push_back(g);
    impl->finalize(caps);
    return Group(impl);
}

// --- structured builder ------------------------------------------------------

struct StructuredSpec {
    std::vector<detail::StructuredBlock> blocks;
    std::vector<std::int64_t> top_orders;
    // action[t][b]: matrix of top generator t on block b (vec: dim x dim
    // invertible; heis: 2x2 with determinant 1)
    std::vector<std::vector<Mat>> action;
};

inline Group build_structured(const StructuredSpec& spec, const Caps& caps = {}) {
    auto impl = std::make_shared<detail::StructuredImpl>();
    impl->kind = ReprKind::structured;
    impl->blocks = spec.blocks;
    impl->top_orders = spec.top_orders;
    std::int64_t n = 1;
    for (const auto& blk : impl->blocks) {
        if (!is_prime(blk.p)) throw NotPrime("block modulus " + std::to_string(blk.p));
        if (blk.kind == detail::StructuredBlock::Kind::heis) {
            if (blk.p == 2) throw InvalidParams("Heisenberg block requires an odd prime");
            if (blk.dim != 3) throw InvalidParams("Heisenberg block must have 3 coordinates");
        }
        if (blk.dim < 1 || blk.dim > 8)
            throw InvalidParams("block dimension out of range");
        n *= blk.size();
        impl->ncoords += blk.dim;
    }
    for (std::int64_t k : spec.top_orders) {
        if (k < 1) throw InvalidParams("top factor order must be positive");
        n *= k;
        impl->ncoords += 1;
        impl->ntopcoords += 1;
        impl->top_count *= k;
    }
    if (impl->ncoords > 24) throw InvalidParams("too many coordinates");
    if (n > caps.element_cap)
        throw OrderCapExceeded("structured group order " + std::to_string(n));
    impl->n = n;
    // strides (most significant coordinate first)
    impl->radix.clear();
    for (const auto& blk : impl->blocks)
        for (int i = 0; i < blk.dim; ++i) impl->radix.push_back(blk.p);
    for (std::int64_t k : spec.top_orders) impl->radix.push_back(k);
    impl->strides.assign(impl->radix.size(), 1);
    for (int i = impl->ncoords - 2; i >= 0; --i)
        impl->strides[static_cast<std::size_t>(i)] =
            impl->strides[static_cast<std::size_t>(i + 1)] * impl->radix[static_cast<std::size_t>(i + 1)];

    // validate the per-generator matrices, then expand to one matrix set per
    // top tuple
    std::size_t nblocks = impl->blocks.size();
    std::size_t ntop = spec.top_orders.size();
    if (spec.action.size() != ntop && !(ntop == 0 && spec.action.empty()))
        throw InvalidAction("need one action row per top factor");
    for (std::size_t t = 0; t < ntop; ++t) {
        if (spec.action[t].size() != nblocks)
            throw InvalidAction("need one action matrix per block");
        for (std::size_t b = 0; b < nblocks; ++b) {
            const auto& blk = impl->blocks[b];
            const Mat& m = spec.action[t][b];
            int want = blk.kind == detail::StructuredBlock::Kind::vec ? blk.dim : 2;
            if (m.dim != want || m.p != blk.p)
                throw InvalidAction("action matrix shape mismatch");
            if (mat_det(m) == 0) throw InvalidAction("action matrix is singular");
            if (blk.kind == detail::StructuredBlock::Kind::heis && mat_det(m) != 1)
                throw InvalidAction(
                    "Heisenberg action must have determinant 1 to fix the center");
            if (!(mat_pow(m, spec.top_orders[t]) == Mat::identity(want, blk.p)))
                throw InvalidAction("action matrix order does not divide the top order");
            for (std::size_t t2 = 0; t2 < t; ++t2)
                if (!(mat_mul(spec.action[t][b], spec.action[t2][b]) ==
                      mat_mul(spec.action[t2][b], spec.action[t][b])))
                    throw InvalidAction("top factor actions do not commute");
        }
    }
    impl->act.resize(static_cast<std::size_t>(impl->top_count));
    std::vector<std::int64_t> tt(ntop, 0);
    for (std::int64_t ti = 0; ti < impl->top_count; ++ti) {
        std::int64_t v = ti;
        for (std::size_t i = ntop; i-- > 0;) {
            tt[i] = v % spec.top_orders[i];
            v /= spec.top_orders[i];
        }
        auto& row = impl->act[static_cast<std::size_t>(ti)];
        row.reserve(nblocks);
        for (std::size_t b = 0; b < nblocks; ++b) {
            const auto& blk = impl->blocks[b];
            int want = blk.kind == detail::StructuredBlock::Kind::vec ? blk.dim : 2;
            Mat m = Mat::identity(want, blk.p);
            for (std::size_t t = 0; t < ntop; ++t)
                m = mat_mul(m, mat_pow(spec.action[t][b], tt[t]));
            row.push_back(std::move(m));
        }
    }
    // generators: block unit coordinates, then one per top factor
    int off = 0;
    for (const auto& blk : impl->blocks) {
        int use = blk.kind == detail::StructuredBlock::Kind::heis ? 2 : blk.dim;
        for (int i = 0; i < use; ++i) {
            std::vector<std::int64_t> c(static_cast<std::size_t>(impl->ncoords), 0);
            c[static_cast<std::size_t>(off + i)] = 1;
            impl->gens.push_back(impl->encode(c.data()));
        }
        off += blk.dim;
    }
    for (int i = 0; i < impl->ntopcoords; ++i) {
        std::vector<std::int64_t> c(static_cast<std::size_t>(impl->ncoords), 0);
        c[static_cast<std::size_t>(off + i)] = 1;
        impl->gens.push_back(impl->encode(c.data()));
    }
    impl->finalize(caps);
    return Group(impl);
}

// Index of the element with the given coordinates in a structured group.
inline Elem structured_element(const Group& g, const std::vector<std::int64_t>& coords) {
    auto* impl = dynamic_cast<const detail::StructuredImpl*>(g.impl());
    if (!impl) throw InvalidParams("group is not coordinate-backed");
    if (std::int64_t(coords.size()) != impl->ncoords)
        throw InvalidParams("coordinate count mismatch");
    std::vector<std::int64_t> c(coords);
    for (int i = 0; i < impl->ncoords; ++i) {
        c[static_cast<std::size_t>(i)] %= impl->radix[static_cast<std::size_t>(i)];
        if (c[static_cast<std::size_t>(i)] < 0) c[static_cast<std::size_t>(i)] += impl->radix[static_cast<std::size_t>(i)];
    }
    return impl->encode(c.data());
}

}  // namespace hs
