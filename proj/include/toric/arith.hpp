#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace toric {

// All library arithmetic is exact: arbitrary-precision integers (GMP) and,
// where division is unavoidable, arbitrary-precision rationals.
using Int = mpz_class;
using Rat = mpq_class;
using IVec = std::vector<Int>;

inline int sgn(const Int& x) { return mpz_sgn(x.get_mpz_t()); }

inline Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

inline Int gcd_int(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

// g = gcd(a,b) together with p,q such that p*a + q*b = g.
inline Int xgcd(const Int& a, const Int& b, Int& p, Int& q) {
    Int g;
    mpz_gcdext(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

// Floor division (rounds toward -infinity), exact for canonical HNF residues.
inline Int fdiv(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

// Exact division; caller guarantees divisibility.
inline Int divexact(const Int& a, const Int& b) {
    Int q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Int gcd_vec(const IVec& v) {
    Int g = 0;
    for (const Int& x : v) g = gcd_int(g, x);
    return g;
}

inline bool is_zero_vec(const IVec& v) {
    for (const Int& x : v)
        if (x != 0) return false;
    return true;
}

inline int first_nonzero(const IVec& v) {
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) return static_cast<int>(i);
    return -1;
}

// Sign convention used across all basis sets and encoding vectors:
// first nonzero coordinate positive.
inline IVec sign_canonical(IVec v) {
    int k = first_nonzero(v);
    if (k >= 0 && v[static_cast<std::size_t>(k)] < 0)
        for (Int& x : v) x = -x;
    return v;
}

inline IVec negate_vec(IVec v) {
    for (Int& x : v) x = -x;
    return v;
}

inline Int one_norm(const IVec& v) {
    Int s = 0;
    for (const Int& x : v) s += abs_int(x);
    return s;
}

inline Int dot(const IVec& a, const IVec& b) {
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// Conformal (sign-compatible componentwise) divisibility: g <= v in the
// order v' <= v iff v'^+ <= v^+ and v'^- <= v^-.
inline bool conformal_leq(const IVec& g, const IVec& v) {
    for (std::size_t i = 0; i < g.size(); ++i) {
        int sg = sgn(g[i]);
        if (sg == 0) continue;
        int sv = sgn(v[i]);
        if (sg != sv) return false;
        if (abs_int(g[i]) > abs_int(v[i])) return false;
    }
    return true;
}

inline bool lex_less(const IVec& a, const IVec& b) {
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
        int c = cmp(a[i], b[i]);
        if (c != 0) return c < 0;
    }
    return a.size() < b.size();
}

inline std::string vec_to_string(const IVec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i].get_str();
    }
    s += ")";
    return s;
}

// Thrown when a configurable work budget is exhausted; carries a description
// of the partial progress instead of silently truncating.
class budget_exceeded : public std::runtime_error {
  public:
    explicit budget_exceeded(const std::string& what) : std::runtime_error(what) {}
};

struct Budget {
    long max_vectors = 100000;       // cap on basis-set size during completion
    Int max_coord = Int("1000000000000000000000000000000");  // cap on |entry|
    long max_fiber = 1000000;        // cap on enumerated fiber points
};

}  // namespace toric
