#pragma once

#include <algorithm>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <vector>

#include "kmp/numeric.hpp"

namespace kmp {

/**
 * Dense univariate polynomial in t with arbitrary-precision integer
 * coefficients, stored ascending (coeffs[k] is the coefficient of t^k).
 *
 * Canonical form: no trailing zero coefficient; the zero polynomial is the
 * empty coefficient vector. This representation is fixed project-wide.
 */
class IntPoly {
  public:
    IntPoly() = default;

    explicit IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

    IntPoly(std::initializer_list<long> coeffs) {
        c_.reserve(coeffs.size());
        for (long v : coeffs) c_.emplace_back(v);
        trim();
    }

    static IntPoly constant(Int v) {
        IntPoly p;
        if (v != 0) p.c_.push_back(std::move(v));
        return p;
    }

    static IntPoly one() { return constant(1); }

    // coeff * t^k
    static IntPoly monomial(int k, Int coeff = Int(1)) {
        IntPoly p;
        if (coeff != 0) {
            p.c_.assign(static_cast<size_t>(k) + 1, Int(0));
            p.c_.back() = std::move(coeff);
        }
        return p;
    }

    // 1 - t^k, the building block of every closed form in this library
    static IntPoly one_minus_tk(int k) {
        IntPoly p = monomial(k, Int(-1));
        p.c_[0] = 1;
        return p;
    }

    // 1 + t + ... + t^(k-1)  ==  (t^k - 1)/(t - 1)
    static IntPoly geometric(int k) {
        IntPoly p;
        p.c_.assign(static_cast<size_t>(k), Int(1));
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }

    // degree of the zero polynomial is -1
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    const std::vector<Int>& coeffs() const { return c_; }

    const Int& coeff(size_t k) const {
        static const Int zero(0);
        return k < c_.size() ? c_[k] : zero;
    }

    const Int& leading() const {
        if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
        return c_.back();
    }

    // lowest-degree nonzero coefficient (canonical form has no leading zeros,
    // but low-order zeros are possible, e.g. t^2 + t)
    const Int& lowest() const {
        for (const Int& v : c_)
            if (v != 0) return v;
        throw std::domain_error("lowest coefficient of zero polynomial");
    }

    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const IntPoly& a, const IntPoly& b) { return !(a == b); }

    IntPoly operator-() const {
        IntPoly r = *this;
        for (Int& v : r.c_) v = -v;
        return r;
    }

    friend IntPoly operator+(const IntPoly& a, const IntPoly& b) {
        IntPoly r;
        r.c_.resize(std::max(a.c_.size(), b.c_.size()), Int(0));
        for (size_t i = 0; i < a.c_.size(); ++i) r.c_[i] = a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) r.c_[i] += b.c_[i];
        r.trim();
        return r;
    }

    friend IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + (-b); }

    friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        IntPoly r;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, Int(0));
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
        }
        r.trim();
        return r;
    }

    friend IntPoly operator*(const IntPoly& a, const Int& s) {
        if (s == 0) return {};
        IntPoly r = a;
        for (Int& v : r.c_) v *= s;
        return r;
    }

    IntPoly& operator+=(const IntPoly& o) { return *this = *this + o; }
    IntPoly& operator-=(const IntPoly& o) { return *this = *this - o; }
    IntPoly& operator*=(const IntPoly& o) { return *this = *this * o; }

    IntPoly pow(unsigned e) const {
        IntPoly r = one();
        IntPoly base = *this;
        while (e) {
            if (e & 1u) r *= base;
            base *= base;
            e >>= 1u;
        }
        return r;
    }

    Rat eval(const Rat& x) const {
        Rat acc(0);
        for (size_t i = c_.size(); i-- > 0;) {
            acc *= x;
            acc += Rat(c_[i]);
        }
        return acc;
    }

    Int eval(const Int& x) const {
        Int acc(0);
        for (size_t i = c_.size(); i-- > 0;) {
            acc *= x;
            acc += c_[i];
        }
        return acc;
    }

    // gcd of all coefficients, non-negative; content of 0 is 0
    Int content() const {
        Int g(0);
        for (const Int& v : c_) {
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
            if (g == 1) break;
        }
        return g;
    }

    // this / content, with positive leading coefficient
    IntPoly primitive_part() const {
        if (is_zero()) return {};
        Int g = content();
        if (c_.back() < 0) g = -g;
        IntPoly r = *this;
        for (Int& v : r.c_) v /= g;
        return r;
    }

    // Exact quotient over Z; nullopt if b does not divide a in Z[t].
    static std::optional<IntPoly> div_exact(const IntPoly& a, const IntPoly& b) {
        if (b.is_zero()) throw std::domain_error("polynomial division by zero");
        if (a.is_zero()) return IntPoly{};
        if (a.degree() < b.degree()) return std::nullopt;
        std::vector<Int> rem = a.c_;
        std::vector<Int> quot(a.c_.size() - b.c_.size() + 1, Int(0));
        const Int& lead = b.c_.back();
        for (size_t k = quot.size(); k-- > 0;) {
            Int& top = rem[k + b.c_.size() - 1];
            if (top == 0) continue;
            if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) return std::nullopt;
            Int q = top / lead;
            for (size_t j = 0; j < b.c_.size(); ++j) rem[k + j] -= q * b.c_[j];
            quot[k] = std::move(q);
        }
        for (const Int& v : rem)
            if (v != 0) return std::nullopt;
        return IntPoly(std::move(quot));
    }

    /**
     * Polynomial gcd over Z[t] via primitive pseudo-remainder sequence.
     * Result is canonical: primitive-part gcd times the content gcd, with
     * positive leading coefficient. gcd(0, b) = |b|-normalized b.
     */
    static IntPoly gcd(IntPoly a, IntPoly b) {
        if (a.is_zero()) return b.is_zero() ? IntPoly{} : b.primitive_part() * b.content();
        if (b.is_zero()) return a.primitive_part() * a.content();
        Int cont;
        mpz_gcd(cont.get_mpz_t(), a.content().get_mpz_t(), b.content().get_mpz_t());
        a = a.primitive_part();
        b = b.primitive_part();
        if (a.degree() < b.degree()) std::swap(a, b);
        while (!b.is_zero()) {
            IntPoly r = pseudo_rem(a, b);
            a = std::move(b);
            b = r.primitive_part();
        }
        return a.primitive_part() * cont;
    }

    friend std::ostream& operator<<(std::ostream& os, const IntPoly& p) {
        os << p.str();
        return os;
    }

    // human-readable form, e.g. "2*t^6 - t^5 + 1" (descending) or
    // "1 - t^5 + 2*t^6" (ascending)
    std::string str(bool ascending = false) const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (size_t n = 0; n < c_.size(); ++n) {
            size_t i = ascending ? n : c_.size() - 1 - n;
            const Int& v = c_[i];
            if (v == 0) continue;
            Int a = abs(v);
            if (first) {
                if (v < 0) os << "-";
                first = false;
            } else {
                os << (v < 0 ? " - " : " + ");
            }
            if (a != 1 || i == 0) os << a.get_str();
            if (i > 0) {
                if (a != 1) os << "*";
                os << "t";
                if (i > 1) os << "^" << i;
            }
        }
        return os.str();
    }

  private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    // Pseudo-remainder of a by b: scales by powers of lead(b) so that the
    // elimination stays in Z[t]. The exact scaling is irrelevant here because
    // the caller reduces to the primitive part after each step.
    static IntPoly pseudo_rem(IntPoly a, const IntPoly& b) {
        const Int& lb = b.leading();
        while (!a.is_zero() && a.degree() >= b.degree()) {
            int k = a.degree() - b.degree();
            Int top = a.leading();
            a = a * lb - b * IntPoly::monomial(k, top);
        }
        return a;
    }

    std::vector<Int> c_;
};

// LCM over the rationals, returned with content 1 and positive leading
// coefficient. lcm of the empty list is 1.
inline IntPoly poly_lcm(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) throw std::domain_error("poly_lcm of zero polynomial");
    IntPoly pa = a.primitive_part(), pb = b.primitive_part();
    IntPoly g = IntPoly::gcd(pa, pb);
    auto q = IntPoly::div_exact(pa, g);
    if (!q) throw std::logic_error("poly_lcm: gcd does not divide");
    return (*q * pb).primitive_part();
}

inline IntPoly poly_lcm(std::span<const IntPoly> ps) {
    IntPoly l = IntPoly::one();
    for (const IntPoly& p : ps) l = poly_lcm(l, p);
    return l;
}

}  // namespace kmp
