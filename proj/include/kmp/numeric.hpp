#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace kmp {

// Exact arithmetic base types. All coefficients in this library are
// arbitrary-precision; no floating point is used anywhere.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw std::domain_error("make_rat: zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline std::string to_string(const Int& v) { return v.get_str(); }
inline std::string to_string(const Rat& v) { return v.get_str(); }

// Thrown on invalid user input (bad JSON, axiom violations, out-of-range
// options). CLI maps this to exit code 1.
class InputError : public std::runtime_error {
  public:
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// Thrown when a computation contradicts an identity that is supposed to be
// unconditional (e.g. an inexact numerator division). Indicates a bug, never
// a user error. CLI maps this to exit code 2.
class TheoremViolation : public std::runtime_error {
  public:
    explicit TheoremViolation(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace kmp
