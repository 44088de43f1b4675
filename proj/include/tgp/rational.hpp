#pragma once

#include <gmpxx.h>

#include <string>

namespace tgp {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat rat(long n) { return Rat(n); }
inline Rat rat(const Int& n) { return Rat(n); }

// mpq_class does not canonicalise two-argument constructions on its own.
inline Rat rat(const Int& num, const Int& den) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Rat rat(long num, long den) { return rat(Int(num), Int(den)); }

inline Int int_pow(const Int& base, unsigned long exp) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

// Negative exponents invert; base must be nonzero in that case.
inline Rat rat_pow(const Rat& base, long exp) {
    if (exp >= 0) {
        return Rat(int_pow(base.get_num(), static_cast<unsigned long>(exp)),
                   int_pow(base.get_den(), static_cast<unsigned long>(exp)));
    }
    Rat inv = 1 / base;
    return rat_pow(inv, -exp);
}

inline std::string to_string(const Rat& q) { return q.get_str(); }
inline std::string to_string(const Int& n) { return n.get_str(); }

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

}  // namespace tgp
