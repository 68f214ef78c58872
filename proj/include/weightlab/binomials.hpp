#pragma once

#include "weightlab/errors.hpp"
#include "weightlab/rational.hpp"

namespace weightlab {

// Generalized binomial coefficient binom(x, i) = x(x-1)...(x-i+1) / i! for any
// rational x and non-negative integer i.
inline Rational binom_general(const Rational& x, long i) {
    if (i < 0) throw IndexOutOfRange("binom_general needs i >= 0");
    Rational num(1);
    Rational den(1);
    for (long k = 0; k < i; ++k) {
        num *= x - Rational(k);
        den *= Rational(k + 1);
    }
    return num / den;
}

// Piecewise falling/rising factorial ratio:
//   ell >= 0:  1 / ((nu+1)(nu+2)...(nu+ell))
//   ell <  0:  nu(nu-1)...(nu+ell+1)
// For ell >= 1 a vanishing factor nu+k is a genuine pole.
inline Rational gamma_ratio(const Rational& nu, long ell) {
    if (ell >= 0) {
        Rational den(1);
        for (long k = 1; k <= ell; ++k) {
            Rational f = nu + Rational(k);
            if (f.is_zero())
                throw DivisionByZero("gamma_ratio pole at nu + " + std::to_string(k));
            den *= f;
        }
        return Rational(1) / den;
    }
    Rational num(1);
    for (long k = 0; k > ell; --k) num *= nu + Rational(k);
    return num;
}

inline Rational factorial(long n) {
    Rational r(1);
    for (long k = 2; k <= n; ++k) r *= Rational(k);
    return r;
}

}  // namespace weightlab
