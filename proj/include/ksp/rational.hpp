#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace ksp {

// Exact rational scalar. Backed by GMP; mpq_class keeps values canonical
// (lowest terms, positive denominator) after canonicalize().
using Rational = mpq_class;
using Integer = mpz_class;

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw error("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Integer factorial(int n) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return f;
}

inline Integer binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return b;
}

// "p/q" form, or just "p" for integers.
inline std::string rat_str(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline Rational rat_parse(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0) throw error("cannot parse rational: " + s);
    r.canonicalize();
    return r;
}

}  // namespace ksp
