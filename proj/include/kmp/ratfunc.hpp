#pragma once

#include <limits>
#include <ostream>

#include "kmp/polynomial.hpp"

namespace kmp {

/**
 * Rational function in t as a normalized quotient of two IntPolys.
 *
 * Every value is kept in the unique canonical form:
 *   - gcd(num, den) = 1 over the rationals (primitive parts coprime in Z[t]),
 *   - the integer gcd of all coefficients across num and den jointly is 1,
 *   - the lowest-degree nonzero coefficient of den is positive.
 * Equality of canonical representatives is field-wise equality.
 */
class RatFunc {
  public:
    // degree() of the zero function
    static constexpr int kDegreeNegInf = std::numeric_limits<int>::min();

    RatFunc() : num_(), den_(IntPoly::one()) {}

    RatFunc(IntPoly num, IntPoly den) : num_(std::move(num)), den_(std::move(den)) { canonicalize(); }

    explicit RatFunc(IntPoly num) : num_(std::move(num)), den_(IntPoly::one()) {}

    static RatFunc from_int(long v) { return RatFunc(IntPoly::constant(Int(v))); }
    static RatFunc one() { return from_int(1); }

    const IntPoly& num() const { return num_; }
    const IntPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_one(); }

    // deg num - deg den; independent of the representative
    int degree() const { return is_zero() ? kDegreeNegInf : num_.degree() - den_.degree(); }

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    RatFunc operator-() const {
        RatFunc r = *this;
        r.num_ = -r.num_;
        return r;
    }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) throw std::domain_error("division by zero rational function");
        return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
    }

    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    RatFunc inverse() const {
        if (is_zero()) throw std::domain_error("inverse of zero rational function");
        return RatFunc(den_, num_);
    }

    // integer power, negative exponents allowed for nonzero values
    RatFunc pow(int e) const {
        if (e < 0) return inverse().pow(-e);
        return RatFunc(num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)));
    }

    Rat eval(const Rat& q) const {
        Rat d = den_.eval(q);
        if (d == 0) throw std::domain_error("pole at evaluation point");
        return num_.eval(q) / d;
    }

    friend std::ostream& operator<<(std::ostream& os, const RatFunc& f) {
        os << "(" << f.num_ << ")";
        if (!f.den_.is_one()) os << " / (" << f.den_ << ")";
        return os;
    }

  private:
    void canonicalize() {
        if (den_.is_zero()) throw std::domain_error("division by zero polynomial");
        if (num_.is_zero()) {
            den_ = IntPoly::one();
            return;
        }
        IntPoly g = IntPoly::gcd(num_, den_);
        num_ = *IntPoly::div_exact(num_, g);
        den_ = *IntPoly::div_exact(den_, g);
        if (den_.lowest() < 0) {
            num_ = -num_;
            den_ = -den_;
        }
    }

    IntPoly num_;
    IntPoly den_;
};

// Canonical representative of num/den.
inline RatFunc rf_normalize(IntPoly num, IntPoly den) { return RatFunc(std::move(num), std::move(den)); }

}  // namespace kmp
