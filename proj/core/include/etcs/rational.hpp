#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

#include "etcs/error.hpp"

namespace etcs {

using Int = mpz_class;
using Rat = mpq_class;

inline int sgn(const Int& x) { return mpz_sgn(x.get_mpz_t()); }
inline int sgn(const Rat& x) { return mpq_sgn(x.get_mpq_t()); }
inline int sgn(double x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

inline Rat make_rat(const Int& num, const Int& den) {
    if (sgn(den) == 0) fail_input("zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat make_rat(long num, long den = 1) {
    return make_rat(Int(num), Int(den));
}

inline Int rat_num(const Rat& r) { return r.get_num(); }
inline Int rat_den(const Rat& r) { return r.get_den(); }

inline bool is_integral(const Rat& r) { return rat_den(r) == 1; }

inline Rat rat_abs(const Rat& r) { return sgn(r) < 0 ? Rat(-r) : r; }

// Euclidean floor of a rational (towards minus infinity).
inline Int rat_floor(const Rat& r) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), rat_num(r).get_mpz_t(), rat_den(r).get_mpz_t());
    return q;
}

// x mod m for integers, result in [0, m).
inline Int int_mod(const Int& x, const Int& m) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    return r;
}

// Renders "p/q" with q > 0 and gcd(p, q) = 1; plain "p" when integral.
inline std::string rat_to_string(const Rat& r) {
    if (is_integral(r)) return rat_num(r).get_str();
    return rat_num(r).get_str() + "/" + rat_den(r).get_str();
}

// Parses "p" or "p/q". Returns nullopt on malformed text.
inline std::optional<Rat> rat_from_string(const std::string& s) {
    if (s.empty()) return std::nullopt;
    Rat r;
    if (mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0) return std::nullopt;
    if (sgn(rat_den(r)) <= 0) return std::nullopt;
    r.canonicalize();
    return r;
}

inline double rat_to_double(const Rat& r) { return r.get_d(); }

} // namespace etcs
