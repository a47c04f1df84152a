// Named group builders: cyclic/dihedral/symmetric/alternating families,
// Heisenberg groups, general linear groups with Singer cycles, and the
// parameterized extensions used by the verifier's corpus (elementary-abelian
// bases under cyclic actions, the order-p^3*q*r family, and the
// small-counterexample triple).
#pragma once

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "products.hpp"
#include "subgroup.hpp"

namespace hs {

inline Group cyclic_group(std::int64_t n, const Caps& caps = {}) {
    if (n < 1) throw InvalidParams("cyclic group order must be positive");
    if (n == 1) return build_from_table({{0}}, {"e"}, caps);
    StructuredSpec spec;
    spec.top_orders = {n};
    spec.action = {{}};
    return build_structured(spec, caps);
}

inline Group elementary_abelian_group(std::int64_t p, int k, const Caps& caps = {}) {
    if (!is_prime(p)) throw NotPrime("elementary abelian base " + std::to_string(p));
    if (k < 1 || k > 8) throw InvalidParams("elementary abelian rank out of range");
    StructuredSpec spec;
    spec.blocks = {{detail::StructuredBlock::Kind::vec, p, k}};
    return build_structured(spec, caps);
}

inline Group dihedral_group(int n, const Caps& caps = {}) {
    if (n < 3) throw InvalidParams("dihedral parameter must be at least 3");
    if (n > 255) throw InvalidParams("dihedral parameter too large");
    std::vector<Elem> rot(static_cast<std::size_t>(n)), refl(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        rot[static_cast<std::size_t>(i)] = Elem((i + 1) % n);
        refl[static_cast<std::size_t>(i)] = Elem((n - i) % n);
    }
    return build_from_permutations(n, {rot, refl}, caps);
}

inline Group symmetric_group(int n, const Caps& caps = {}) {
    if (n < 1) throw InvalidParams("symmetric degree must be positive");
    if (n > 255) throw InvalidParams("symmetric degree too large");
    std::vector<std::vector<Elem>> gens;
    if (n >= 2) {
        std::vector<Elem> cyc(static_cast<std::size_t>(n)), swap01(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            cyc[static_cast<std::size_t>(i)] = Elem((i + 1) % n);
            swap01[static_cast<std::size_t>(i)] = Elem(i);
        }
        swap01[0] = 1;
        swap01[1] = 0;
        gens = {cyc, swap01};
    } else {
        gens = {{0}};
    }
    return build_from_permutations(std::max(n, 1), gens, caps);
}

inline Group alternating_group(int n, const Caps& caps = {}) {
    if (n < 1) throw InvalidParams("alternating degree must be positive");
    if (n > 255) throw InvalidParams("alternating degree too large");
    std::vector<std::vector<Elem>> gens;
    if (n >= 3) {
        std::vector<Elem> tri(static_cast<std::size_t>(n)), big(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            tri[static_cast<std::size_t>(i)] = Elem(i);
            big[static_cast<std::size_t>(i)] = Elem(i);
        }
        tri[0] = 1;
        tri[1] = 2;
        tri[2] = 0;
        if (n % 2 == 1) {
            for (int i = 0; i < n; ++i) big[static_cast<std::size_t>(i)] = Elem((i + 1) % n);
        } else {
            // (1 2 ... n-1), fixing point 0: an (n-1)-cycle, even for n even
            for (int i = 1; i < n; ++i) big[static_cast<std::size_t>(i)] = Elem(i % (n - 1) + 1);
        }
        gens = {tri, big};
    } else {
        gens.push_back(std::vector<Elem>(static_cast<std::size_t>(std::max(n, 1)), 0));
        for (int i = 0; i < n; ++i) gens.back()[static_cast<std::size_t>(i)] = Elem(i);
    }
    return build_from_permutations(std::max(n, 1), gens, caps);
}

inline Group heisenberg_group(std::int64_t p, const Caps& caps = {}) {
    StructuredSpec spec;
    spec.blocks = {{detail::StructuredBlock::Kind::heis, p, 3}};
    return build_structured(spec, caps);
}

// [Z_n] x| Z_m where the generator of Z_m acts by x -> x^k.  Requires
// gcd(k, n) = 1 and k^m = 1 (mod n).
inline Group cyclic_semidirect_cyclic(std::int64_t n, std::int64_t m, std::int64_t k,
                                      const Caps& caps = {}) {
    if (n < 1 || m < 1) throw InvalidParams("cyclic factor orders must be positive");
    k = ((k % n) + n) % n;
    if (std::gcd(k, n) != 1) throw InvalidAction("exponent action is not invertible");
    Group base = cyclic_group(n, caps);
    Group top = cyclic_group(m, caps);
    GroupAction act;
    act.actor = top;
    act.target = base;
    act.images.assign(static_cast<std::size_t>(m), std::vector<Elem>(static_cast<std::size_t>(n)));
    std::int64_t kpow = 1 % n;
    for (std::int64_t h = 0; h < m; ++h) {
        for (std::int64_t x = 0; x < n; ++x)
            act.images[static_cast<std::size_t>(h)][static_cast<std::size_t>(x)] = Elem(x * kpow % n);
        kpow = kpow * k % n;
    }
    if (kpow != 1 % n)
        throw InvalidAction("exponent action order does not divide the top order");
    return semidirect_product(base, top, act, caps);
}

namespace detail {

// polynomial helpers over F_p; coefficients ascending, monic leading 1
inline std::int64_t poly_eval(const std::vector<std::int64_t>& a, std::int64_t x,
                              std::int64_t p) {
    std::int64_t v = 0;
    for (std::size_t i = a.size(); i-- > 0;) v = (v * x + a[i]) % p;
    return v;
}

inline bool poly_has_root(const std::vector<std::int64_t>& a, std::int64_t p) {
    for (std::int64_t x = 0; x < p; ++x)
        if (poly_eval(a, x, p) == 0) return true;
    return false;
}

// x^2 + bx + c irreducible over F_p: for odd p the discriminant b^2 - 4c
// must be a quadratic non-residue (Euler's criterion); for p = 2, no root.
inline bool quadratic_irreducible(std::int64_t b, std::int64_t c, std::int64_t p) {
    if (p == 2) return !poly_has_root({c, b, 1}, 2);
    std::int64_t disc = ((b * b - 4 * c) % p + p) % p;
    if (disc == 0) return false;
    return mod_pow(disc, (p - 1) / 2, p) == p - 1;
}

// remainder of a monic quartic modulo x^2 + bx + c; true if divisible
inline bool quartic_divisible_by(const std::vector<std::int64_t>& a, std::int64_t b,
                                 std::int64_t c, std::int64_t p) {
    // reduce with x^2 = -bx - c: carry (hi, lo) coefficients down from x^4
    std::int64_t r3 = a[3], r2 = a[2], r1 = a[1], r0 = a[0];
    // x^4 = (x^2)^2 = b^2 x^2 + 2bc x + c^2 - ... do it stepwise instead:
    // start with quotient digits q2 = 1 (leading), then subtract
    std::int64_t q2 = 1;
    r3 = ((r3 - q2 * b) % p + p) % p;
    r2 = ((r2 - q2 * c) % p + p) % p;
    std::int64_t q1 = r3;
    r2 = ((r2 - q1 * b) % p + p) % p;
    r1 = ((r1 - q1 * c) % p + p) % p;
    std::int64_t q0 = r2;
    r1 = ((r1 - q0 * b) % p + p) % p;
    r0 = ((r0 - q0 * c) % p + p) % p;
    return r1 == 0 && r0 == 0;
}

inline bool poly_irreducible(const std::vector<std::int64_t>& a, int n, std::int64_t p) {
    switch (n) {
        case 1: return true;
        case 2: return quadratic_irreducible(a[1], a[0], p);
        case 3: return !poly_has_root(a, p);
        case 4: {
            if (poly_has_root(a, p)) return false;
            for (std::int64_t b = 0; b < p; ++b)
                for (std::int64_t c = 0; c < p; ++c)
                    if (quadratic_irreducible(b, c, p) &&
                        quartic_divisible_by(a, b, c, p))
                        return false;
            return true;
        }
        default: throw InvalidParams("irreducibility test limited to degree <= 4");
    }
}

}  // namespace detail

// Companion matrix of a primitive degree-n polynomial over F_p: a cyclic
// generator of order p^n - 1 (a Singer cycle of GL(n,p)).  Candidates are
// screened for irreducibility, then the order is verified directly.
inline Mat primitive_companion(int n, std::int64_t p) {
    if (!is_prime(p)) throw NotPrime("field characteristic " + std::to_string(p));
    if (n < 1 || n > 4) throw InvalidParams("primitive polynomial degree out of range");
    std::int64_t target = 1;
    for (int i = 0; i < n; ++i) target *= p;
    target -= 1;  // p^n - 1
    std::vector<std::int64_t> cs(static_cast<std::size_t>(n), 0);  // x^n = cs[n-1] x^(n-1) + ... + cs[0]
    for (;;) {
        if (cs[0] != 0) {  // constant 0 would make the companion singular
            std::vector<std::int64_t> monic(static_cast<std::size_t>(n) + 1, 0);
            monic[static_cast<std::size_t>(n)] = 1;
            for (int i = 0; i < n; ++i) monic[static_cast<std::size_t>(i)] = (p - cs[static_cast<std::size_t>(i)]) % p;
            if (detail::poly_irreducible(monic, n, p)) {
                Mat c{n, p, std::vector<std::int64_t>(static_cast<std::size_t>(n * n), 0)};
                for (int i = 1; i < n; ++i) c.at(i, i - 1) = 1;
                for (int i = 0; i < n; ++i) c.at(i, n - 1) = cs[static_cast<std::size_t>(i)];
                if (mat_order(c, target) == target) return c;
            }
        }
        int i = 0;
        while (i < n && ++cs[static_cast<std::size_t>(i)] == p) cs[static_cast<std::size_t>(i++)] = 0;
        if (i == n)
            throw PrimitivePolynomialNotFound("degree " + std::to_string(n) + " over F_" +
                                              std::to_string(p));
    }
}

// Full general linear group over F_p, enumerated: generated by a
// transvection, a basis cycle, and (for p > 2) a primitive-root scaling of
// the first coordinate.  The span is verified against the closed-form order.
inline Group general_linear_group(int n, std::int64_t p, const Caps& caps = {}) {
    if (!is_prime(p)) throw NotPrime("field characteristic " + std::to_string(p));
    if (n < 2 || n > 4) throw InvalidParams("general linear dimension out of range");
    std::int64_t want = gl_order(n, p);
    if (want > caps.element_cap)
        throw OrderCapExceeded("general linear group order " + std::to_string(want));
    std::vector<std::vector<std::int64_t>> gens;
    {
        std::vector<std::int64_t> t(static_cast<std::size_t>(n * n), 0);
        for (int i = 0; i < n; ++i) t[static_cast<std::size_t>(i * n + i)] = 1;
        t[1] = 1;  // I + E_01
        gens.push_back(t);
        std::vector<std::int64_t> c(static_cast<std::size_t>(n * n), 0);
        for (int i = 0; i < n; ++i) c[static_cast<std::size_t>(((i + 1) % n) * n + i)] = 1;
        gens.push_back(c);
    }
    if (p > 2) {
        std::int64_t zeta = 0;
        for (std::int64_t g = 2; g < p && zeta == 0; ++g) {
            std::int64_t v = g, k = 1;
            while (v != 1) {
                v = v * g % p;
                ++k;
            }
            if (k == p - 1) zeta = g;
        }
        std::vector<std::int64_t> d(static_cast<std::size_t>(n * n), 0);
        for (int i = 0; i < n; ++i) d[static_cast<std::size_t>(i * n + i)] = 1;
        d[0] = zeta;
        gens.push_back(d);
    }
    Group g = build_from_matrices(n, p, gens, caps);
    if (g.order() != want)
        throw Error("general linear generators spanned order " +
                    std::to_string(g.order()) + ", expected " + std::to_string(want));
    return g;
}

// The primes dividing p^n - 1 but none of p^k - 1 for 0 < k < n.
inline std::vector<std::int64_t> lemma7_pi(int n, std::int64_t p) {
    if (!is_prime(p)) throw NotPrime("field characteristic " + std::to_string(p));
    if (n < 1) throw InvalidParams("exponent must be positive");
    std::int64_t pn = 1;
    for (int i = 0; i < n; ++i) pn *= p;
    std::vector<std::int64_t> pi;
    for (std::int64_t q : factorize(pn - 1).primes()) {
        bool primitive = true;
        std::int64_t pk = 1;
        for (int k = 1; k < n; ++k) {
            pk *= p;
            if ((pk - 1) % q == 0) {
                primitive = false;
                break;
            }
        }
        if (primitive) pi.push_back(q);
    }
    return pi;
}

// Data for the cyclic-Hall-subgroup check in GL(n,p): the Singer generator,
// the prime set, and the power of the Singer cycle whose order is the
// pi-part of |GL(n,p)| (equal to the pi-part of p^n - 1, as primes in pi
// divide no other factor of the order product).
struct Lemma7Data {
    int n = 0;
    std::int64_t p = 0;
    std::vector<std::int64_t> pi;
    std::int64_t gl = 0;          // |GL(n,p)|
    std::int64_t singer_order = 0;  // p^n - 1
    std::int64_t hall_order = 0;  // pi-part
    Mat singer{0, 0, {}};
    Mat hall_gen{0, 0, {}};
};

inline Lemma7Data lemma7_data(int n, std::int64_t p) {
    Lemma7Data d;
    d.n = n;
    d.p = p;
    d.pi = lemma7_pi(n, p);
    d.gl = gl_order(n, p);
    d.singer_order = 1;
    for (int i = 0; i < n; ++i) d.singer_order *= p;
    d.singer_order -= 1;
    d.hall_order = pi_part(d.singer_order, d.pi);
    d.singer = primitive_companion(n, p);
    d.hall_gen = mat_pow(d.singer, d.singer_order / d.hall_order);
    return d;
}

// [E_{p^n}] x| (cyclic tops), the generic matrix-action extension.
inline Group semidirect_matrix_group(std::int64_t p, int n, const std::vector<Mat>& acts,
                                     const std::vector<std::int64_t>& top_orders,
                                     const Caps& caps = {}) {
    if (acts.size() != top_orders.size())
        throw InvalidParams("need one action matrix per top factor");
    StructuredSpec spec;
    spec.blocks = {{detail::StructuredBlock::Kind::vec, p, n}};
    spec.top_orders = top_orders;
    for (const Mat& m : acts) spec.action.push_back({m});
    return build_structured(spec, caps);
}

// [heis(p)] x| Z_k acting through an SL(2,p) matrix on the Frattini quotient.
inline Group heisenberg_semidirect(std::int64_t p, std::int64_t top_order, const Mat& m,
                                   const Caps& caps = {}) {
    StructuredSpec spec;
    spec.blocks = {{detail::StructuredBlock::Kind::heis, p, 3}};
    spec.top_orders = {top_order};
    spec.action = {{m}};
    return build_structured(spec, caps);
}

// --- the p^3*q*r family ------------------------------------------------------

// Parameter report for the extraspecial-base family: p, q, r prime with q, r
// odd and distinct, and p of multiplicative order 2 mod q and mod r
// (equivalently q and r divide p + 1, so qr divides p^2 - 1 and the Singer
// power s has determinant 1 and acts fixed-point-freely on E_{p^2}).
struct Example2Params {
    std::int64_t p = 0, q = 0, r = 0;
    std::int64_t p2m1 = 0;  // p^2 - 1
    PrimeFactorization p2m1_factors;
    std::int64_t power = 0;    // exponent: s = singer^power
    std::int64_t s_order = 0;  // = q*r
    std::int64_t s_det = 0;    // = 1
    Mat singer{0, 0, {}};
    Mat s{0, 0, {}};
};

inline Example2Params example2_check_params(std::int64_t p, std::int64_t q,
                                            std::int64_t r) {
    if (!is_prime(p) || !is_prime(q) || !is_prime(r))
        throw NotPrime("all three parameters must be prime");
    if (q == 2 || r == 2) throw InvalidParams("q and r must be odd");
    if (q == r) throw InvalidParams("q and r must be distinct");
    if (p == q || p == r) throw InvalidParams("p must differ from q and r");
    if (multiplicative_order(p, q) != 2)
        throw InvalidParams("p must have order 2 mod q (got order " +
                            std::to_string(multiplicative_order(p, q)) + ")");
    if (multiplicative_order(p, r) != 2)
        throw InvalidParams("p must have order 2 mod r (got order " +
                            std::to_string(multiplicative_order(p, r)) + ")");
    Example2Params e;
    e.p = p;
    e.q = q;
    e.r = r;
    e.p2m1 = p * p - 1;
    e.p2m1_factors = factorize(e.p2m1);
    e.power = e.p2m1 / (q * r);
    e.singer = primitive_companion(2, p);
    e.s = mat_pow(e.singer, e.power);
    e.s_order = mat_order(e.s, e.p2m1);
    e.s_det = mat_det(e.s);
    return e;
}

// The group T = [heis(p)] x| (Z_q x Z_r) together with the subgroups the
// targeted checks interrogate.  Only feasible when p^3*q*r fits the element
// cap; use example2_check_params alone for larger parameters.
struct Example2 {
    Example2Params params;
    Group t;
    SubgroupSet p_part;     // the Heisenberg base, order p^3
    SubgroupSet phi_p;      // its center/Frattini/derived subgroup, order p
    SubgroupSet pq_sub;     // [P]<y_q>, order p^3 * q
    SubgroupSet pr_sub;     // [P]<y_r>, order p^3 * r
    SubgroupSet nilpotent_part;  // Phi(P) x <y_q> x <y_r>, order p*q*r
    Elem y_q = -1, y_r = -1;
};

inline Example2 example2_analog(std::int64_t p, std::int64_t q, std::int64_t r,
                                const Caps& caps = {}) {
    Example2 e;
    e.params = example2_check_params(p, q, r);
    StructuredSpec spec;
    spec.blocks = {{detail::StructuredBlock::Kind::heis, p, 3}};
    spec.top_orders = {q, r};
    spec.action = {{mat_pow(e.params.s, r)}, {mat_pow(e.params.s, q)}};
    e.t = build_structured(spec, caps);
    Elem ea = structured_element(e.t, {1, 0, 0, 0, 0});
    Elem eb = structured_element(e.t, {0, 1, 0, 0, 0});
    Elem ec = structured_element(e.t, {0, 0, 1, 0, 0});
    e.y_q = structured_element(e.t, {0, 0, 0, 1, 0});
    e.y_r = structured_element(e.t, {0, 0, 0, 0, 1});
    e.p_part = closure(e.t, {ea, eb});
    e.phi_p = closure(e.t, {ec});
    e.pq_sub = closure(e.t, {ea, eb, e.y_q});
    e.pr_sub = closure(e.t, {ea, eb, e.y_r});
    e.nilpotent_part = closure(e.t, {ec, e.y_q, e.y_r});
    return e;
}

// Scan primes p in ascending order for the smallest one admitting two
// distinct odd prime divisors of p + 1; records the divisors seen at every
// prime along the way.
struct Example2Search {
    std::int64_t first = -1;
    std::vector<std::pair<std::int64_t, std::vector<std::int64_t>>> tried;
};

inline Example2Search example2_minimal_search(std::int64_t bound = 100) {
    Example2Search out;
    for (std::int64_t p = 2; p < bound; ++p) {
        if (!is_prime(p)) continue;
        std::vector<std::int64_t> odd;
        for (std::int64_t q : factorize(p + 1).primes())
            if (q % 2 == 1) odd.push_back(q);
        out.tried.push_back({p, odd});
        if (odd.size() >= 2) {
            out.first = p;
            break;
        }
    }
    return out;
}

// --- the elementary-abelian tower family -------------------------------------

// k in 1..3 blocks acted on by Z_3: E_4 (companion of x^2+x+1), then E_25
// (a power of the Singer cycle of GL(2,5)), then Z_7 (multiplication by 2).
// An optional fourth block E_121 uses a power of the Singer cycle of
// GL(2,11).  Orders: 12, 300, 2100, 254100.
inline Group example3_group(int k, bool include_e121 = false, const Caps& caps = {}) {
    if (k < 1 || k > 3) throw InvalidParams("block count must be between 1 and 3");
    StructuredSpec spec;
    spec.top_orders = {3};
    spec.action = {{}};
    spec.blocks.push_back({detail::StructuredBlock::Kind::vec, 2, 2});
    spec.action[0].push_back(Mat{2, 2, {0, 1, 1, 1}});
    if (k >= 2) {
        spec.blocks.push_back({detail::StructuredBlock::Kind::vec, 5, 2});
        spec.action[0].push_back(mat_pow(primitive_companion(2, 5), 8));
    }
    if (k >= 3) {
        spec.blocks.push_back({detail::StructuredBlock::Kind::vec, 7, 1});
        spec.action[0].push_back(Mat{1, 7, {2}});
    }
    if (include_e121) {
        spec.blocks.push_back({detail::StructuredBlock::Kind::vec, 11, 2});
        spec.action[0].push_back(mat_pow(primitive_companion(2, 11), 40));
    }
    return build_structured(spec, caps);
}

// The membership-is-not-product-closed triple: two members whose direct
// product has a Schmidt subgroup of order 6 and index 2, hence not Hall.
struct Remark1 {
    Group a;        // S_3
    Group b;        // Z_2
    Group product;  // S_3 x Z_2
};

inline Remark1 remark1_counterexample(const Caps& caps = {}) {
    Remark1 r;
    r.a = symmetric_group(3, caps);
    r.b = cyclic_group(2, caps);
    r.product = direct_product(r.a, r.b, caps);
    return r;
}

// --- construction specs (config-file syntax) ---------------------------------

struct ConstructionSpec {
    std::string kind;
    std::vector<std::int64_t> params;
};

// Parses "kind" or "kind(a,b,...)" with integer arguments.
inline ConstructionSpec parse_construction(const std::string& line) {
    ConstructionSpec spec;
    std::size_t i = 0, n = line.size();
    auto skip_ws = [&] {
        while (i < n && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    };
    skip_ws();
    while (i < n && (std::isalnum(static_cast<unsigned char>(line[i])) || line[i] == '_'))
        spec.kind.push_back(line[i++]);
    if (spec.kind.empty()) throw ConfigError("empty construction name in '" + line + "'");
    skip_ws();
    if (i == n) return spec;
    if (line[i] != '(') throw ConfigError("expected '(' in construction '" + line + "'");
    ++i;
    for (;;) {
        skip_ws();
        if (i < n && line[i] == ')' && spec.params.empty()) break;
        bool neg = false;
        if (i < n && (line[i] == '-' || line[i] == '+')) neg = line[i++] == '-';
        if (i >= n || !std::isdigit(static_cast<unsigned char>(line[i])))
            throw ConfigError("expected integer argument in construction '" + line + "'");
        std::int64_t v = 0;
        while (i < n && std::isdigit(static_cast<unsigned char>(line[i])))
            v = v * 10 + (line[i++] - '0');
        spec.params.push_back(neg ? -v : v);
        skip_ws();
        if (i < n && line[i] == ',') {
            ++i;
            continue;
        }
        break;
    }
    if (i >= n || line[i] != ')')
        throw ConfigError("expected ')' in construction '" + line + "'");
    ++i;
    skip_ws();
    if (i != n) throw ConfigError("trailing text in construction '" + line + "'");
    return spec;
}

inline const std::vector<std::string>& construction_kinds() {
    static const std::vector<std::string> kinds = {
        "cyclic",      "elementary_abelian", "dihedral",  "symmetric",
        "alternating", "heisenberg",         "general_linear",
        "semidirect_matrix", "example2_analog", "example3", "remark1"};
    return kinds;
}

// Builds the group for a single-group construction spec.  remark1 and
// example2_analog expand to multiple / targeted corpus entries and are
// handled by the corpus layer; here remark1 yields the product group and
// example2_analog the full extension.
inline Group build_construction(const ConstructionSpec& spec, const Caps& caps = {}) {
    auto want = [&](std::size_t lo, std::size_t hi) {
        if (spec.params.size() < lo || spec.params.size() > hi)
            throw ConfigError("construction '" + spec.kind + "' takes " +
                              (lo == hi ? std::to_string(lo)
                                        : std::to_string(lo) + ".." + std::to_string(hi)) +
                              " argument(s), got " + std::to_string(spec.params.size()));
    };
    const auto& ps = spec.params;
    if (spec.kind == "cyclic") {
        want(1, 1);
        return cyclic_group(ps[0], caps);
    }
    if (spec.kind == "elementary_abelian") {
        want(2, 2);
        return elementary_abelian_group(ps[0], int(ps[1]), caps);
    }
    if (spec.kind == "dihedral") {
        want(1, 1);
        return dihedral_group(int(ps[0]), caps);
    }
    if (spec.kind == "symmetric") {
        want(1, 1);
        return symmetric_group(int(ps[0]), caps);
    }
    if (spec.kind == "alternating") {
        want(1, 1);
        return alternating_group(int(ps[0]), caps);
    }
    if (spec.kind == "heisenberg") {
        want(1, 1);
        return heisenberg_group(ps[0], caps);
    }
    if (spec.kind == "general_linear") {
        want(2, 2);
        return general_linear_group(int(ps[0]), ps[1], caps);
    }
    if (spec.kind == "semidirect_matrix") {
        // p, n, top_order, then n^2 matrix entries (row major)
        if (ps.size() < 3)
            throw ConfigError("semidirect_matrix needs p, n, top_order, entries");
        std::int64_t p = ps[0];
        int n = int(ps[1]);
        if (n < 1 || n > 8) throw ConfigError("semidirect_matrix dimension out of range");
        if (std::int64_t(ps.size()) != 3 + std::int64_t(n) * n)
            throw ConfigError("semidirect_matrix expects " +
                              std::to_string(3 + n * n) + " arguments for n=" +
                              std::to_string(n));
        Mat m{n, p, std::vector<std::int64_t>(ps.begin() + 3, ps.end())};
        for (auto& v : m.a) v = ((v % p) + p) % p;
        return semidirect_matrix_group(p, n, {m}, {ps[2]}, caps);
    }
    if (spec.kind == "example2_analog") {
        want(3, 3);
        return example2_analog(ps[0], ps[1], ps[2], caps).t;
    }
    if (spec.kind == "example3") {
        want(1, 2);
        return example3_group(int(ps[0]), ps.size() > 1 && ps[1] != 0, caps);
    }
    if (spec.kind == "remark1") {
        want(0, 0);
        return remark1_counterexample(caps).product;
    }
    throw ConfigError("unknown construction '" + spec.kind + "'");
}

}  // namespace hs
