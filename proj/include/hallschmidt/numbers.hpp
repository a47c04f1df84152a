// Elementary number theory and small dense matrices over prime fields.
// Everything here works on 64-bit integers; inputs stay far below the range
// where trial division would hurt.
#pragma once

#include <cstdint>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"

namespace hs {

struct PrimePower {
    std::int64_t prime;
    int exponent;
    bool operator==(const PrimePower&) const = default;
};

// Prime factorization with primes in ascending order.
struct PrimeFactorization {
    std::int64_t n = 1;
    std::vector<PrimePower> factors;

    std::vector<std::int64_t> primes() const {
        std::vector<std::int64_t> out;
        for (const auto& f : factors) out.push_back(f.prime);
        return out;
    }

    // Largest power of p dividing n (1 when p does not divide n).
    std::int64_t part(std::int64_t p) const {
        for (const auto& f : factors)
            if (f.prime == p) {
                std::int64_t r = 1;
                for (int i = 0; i < f.exponent; ++i) r *= p;
                return r;
            }
        return 1;
    }

    std::string to_string() const {
        if (factors.empty()) return "1";
        std::ostringstream os;
        for (std::size_t i = 0; i < factors.size(); ++i) {
            if (i) os << "*";
            os << factors[i].prime;
            if (factors[i].exponent > 1) os << "^" << factors[i].exponent;
        }
        return os.str();
    }
};

inline PrimeFactorization factorize(std::int64_t n) {
    if (n < 1) throw InvalidParams("factorize requires n >= 1");
    PrimeFactorization out;
    out.n = n;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) { n /= p; ++e; }
            out.factors.push_back({p, e});
        }
    }
    if (n > 1) out.factors.push_back({n, 1});
    return out;
}

inline bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

inline bool is_prime_power(std::int64_t n) {
    return n > 1 && factorize(n).factors.size() == 1;
}

inline bool is_squarefree(std::int64_t n) {
    if (n < 1) throw InvalidParams("squarefree test requires n >= 1");
    for (const auto& f : factorize(n).factors)
        if (f.exponent > 1) return false;
    return true;
}

// Product of the p-parts of n over p in pi.
inline std::int64_t pi_part(std::int64_t n, const std::vector<std::int64_t>& pi) {
    auto f = factorize(n);
    std::int64_t r = 1;
    for (std::int64_t p : pi) r *= f.part(p);
    return r;
}

inline std::int64_t mod_pow(std::int64_t base, std::int64_t exp, std::int64_t mod) {
    std::int64_t r = 1 % mod;
    base %= mod;
    if (base < 0) base += mod;
    while (exp > 0) {
        if (exp & 1) r = (__int128)r * base % mod;
        base = (__int128)base * base % mod;
        exp >>= 1;
    }
    return r;
}

// Order of p in the multiplicative group modulo q.  Both arguments must be
// prime and distinct (so p is invertible mod q).
inline int multiplicative_order(std::int64_t p, std::int64_t q) {
    if (!is_prime(p)) throw NotPrime("p = " + std::to_string(p));
    if (!is_prime(q)) throw NotPrime("q = " + std::to_string(q));
    if (p == q) throw InvalidParams("multiplicative_order requires p != q");
    std::int64_t x = p % q;
    int m = 1;
    while (x != 1) {
        x = x * p % q;
        ++m;
        if (m > q) throw Error("multiplicative order diverged");  // unreachable
    }
    return m;
}

// --- dense matrices over F_p -------------------------------------------------

struct Mat {
    int dim = 0;
    std::int64_t p = 0;
    std::vector<std::int64_t> a;  // row-major

    static Mat identity(int dim, std::int64_t p) {
        Mat m{dim, p, std::vector<std::int64_t>(static_cast<std::size_t>(dim) * dim, 0)};
        for (int i = 0; i < dim; ++i) m.at(i, i) = 1;
        return m;
    }

    std::int64_t& at(int r, int c) { return a[static_cast<std::size_t>(r) * dim + c]; }
    std::int64_t at(int r, int c) const { return a[static_cast<std::size_t>(r) * dim + c]; }

    bool operator==(const Mat&) const = default;
};

inline Mat mat_mul(const Mat& x, const Mat& y) {
    Mat r{x.dim, x.p, std::vector<std::int64_t>(static_cast<std::size_t>(x.dim) * x.dim, 0)};
    for (int i = 0; i < x.dim; ++i)
        for (int k = 0; k < x.dim; ++k) {
            std::int64_t v = x.at(i, k);
            if (!v) continue;
            for (int j = 0; j < x.dim; ++j)
                r.at(i, j) = (r.at(i, j) + v * y.at(k, j)) % x.p;
        }
    return r;
}

inline Mat mat_pow(Mat base, std::int64_t e) {
    Mat r = Mat::identity(base.dim, base.p);
    while (e > 0) {
        if (e & 1) r = mat_mul(r, base);
        base = mat_mul(base, base);
        e >>= 1;
    }
    return r;
}

// Determinant by Gaussian elimination over F_p.
inline std::int64_t mat_det(Mat m) {
    std::int64_t det = 1;
    for (int col = 0; col < m.dim; ++col) {
        int pivot = -1;
        for (int r = col; r < m.dim; ++r)
            if (m.at(r, col) % m.p != 0) { pivot = r; break; }
        if (pivot < 0) return 0;
        if (pivot != col) {
            for (int c = 0; c < m.dim; ++c) std::swap(m.at(pivot, c), m.at(col, c));
            det = (m.p - det) % m.p;
        }
        std::int64_t inv = mod_pow(m.at(col, col), m.p - 2, m.p);
        det = det * m.at(col, col) % m.p;
        for (int r = col + 1; r < m.dim; ++r) {
            std::int64_t f = m.at(r, col) * inv % m.p;
            if (!f) continue;
            for (int c = col; c < m.dim; ++c)
                m.at(r, c) = (m.at(r, c) - f * m.at(col, c) % m.p + m.p) % m.p;
        }
    }
    return det % m.p;
}

inline Mat mat_inverse(const Mat& m) {
    int d = m.dim;
    Mat aug{d, m.p, std::vector<std::int64_t>(static_cast<std::size_t>(d) * d)};
    aug.a = m.a;
    Mat inv = Mat::identity(d, m.p);
    for (int col = 0; col < d; ++col) {
        int pivot = -1;
        for (int r = col; r < d; ++r)
            if (aug.at(r, col) % m.p != 0) { pivot = r; break; }
        if (pivot < 0) throw SingularGenerator("matrix not invertible mod " + std::to_string(m.p));
        if (pivot != col)
            for (int c = 0; c < d; ++c) {
                std::swap(aug.at(pivot, c), aug.at(col, c));
                std::swap(inv.at(pivot, c), inv.at(col, c));
            }
        std::int64_t f = mod_pow(aug.at(col, col), m.p - 2, m.p);
        for (int c = 0; c < d; ++c) {
            aug.at(col, c) = aug.at(col, c) * f % m.p;
            inv.at(col, c) = inv.at(col, c) * f % m.p;
        }
        for (int r = 0; r < d; ++r) {
            if (r == col) continue;
            std::int64_t g = aug.at(r, col) % m.p;
            if (!g) continue;
            for (int c = 0; c < d; ++c) {
                aug.at(r, c) = (aug.at(r, c) - g * aug.at(col, c) % m.p + m.p) % m.p;
                inv.at(r, c) = (inv.at(r, c) - g * inv.at(col, c) % m.p + m.p) % m.p;
            }
        }
    }
    return inv;
}

// Multiplicative order of an invertible matrix, verified against the
// factorization of `group_order` (an exponent bound, e.g. |GL(n,p)| or
// p^n - 1 for Singer elements).
inline std::int64_t mat_order(const Mat& m, std::int64_t exponent_bound) {
    if (!(mat_pow(m, exponent_bound) == Mat::identity(m.dim, m.p)))
        throw InvalidParams("matrix order does not divide the stated bound");
    std::int64_t ord = exponent_bound;
    for (const auto& f : factorize(exponent_bound).factors)
        for (int i = 0; i < f.exponent; ++i) {
            if (mat_pow(m, ord / f.prime) == Mat::identity(m.dim, m.p))
                ord /= f.prime;
            else
                break;
        }
    return ord;
}

// |GL(n,p)| = p^{n(n-1)/2} * prod_{i=1..n} (p^i - 1).
inline std::int64_t gl_order(int n, std::int64_t p) {
    std::int64_t r = 1;
    for (int i = 0; i < n * (n - 1) / 2; ++i) r *= p;
    std::int64_t pk = 1;
    for (int i = 1; i <= n; ++i) {
        pk *= p;
        r *= (pk - 1);
    }
    return r;
}

}  // namespace hs
