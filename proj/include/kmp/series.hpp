#pragma once

#include <vector>

#include "kmp/ratfunc.hpp"

namespace kmp {

/**
 * Power series truncated at order N, with exact rational coefficients
 * (coefficients of t^0 .. t^N). Arithmetic on two series truncates to the
 * smaller order.
 */
class TruncSeries {
  public:
    TruncSeries() : c_(1, Rat(0)) {}

    explicit TruncSeries(int order) : c_(static_cast<size_t>(order) + 1, Rat(0)) {
        if (order < 0) throw std::domain_error("negative series order");
    }

    explicit TruncSeries(std::vector<Rat> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) throw std::domain_error("empty series");
    }

    static TruncSeries from_poly(const IntPoly& p, int order) {
        TruncSeries s(order);
        for (size_t k = 0; k < s.c_.size(); ++k) s.c_[k] = Rat(p.coeff(k));
        return s;
    }

    // Taylor expansion of f at t = 0. Requires den(0) != 0.
    static TruncSeries from_ratfunc(const RatFunc& f, int order) {
        const Int& d0 = f.den().coeff(0);
        if (d0 == 0) throw std::domain_error("pole at origin");
        TruncSeries s(order);
        for (int k = 0; k <= order; ++k) {
            Rat acc(f.num().coeff(static_cast<size_t>(k)));
            for (int j = 1; j <= k; ++j) acc -= Rat(f.den().coeff(static_cast<size_t>(j))) * s.c_[k - j];
            s.c_[k] = acc / Rat(d0);
        }
        return s;
    }

    int order() const { return static_cast<int>(c_.size()) - 1; }

    const std::vector<Rat>& coeffs() const { return c_; }

    const Rat& coeff(int k) const {
        static const Rat zero(0);
        return k >= 0 && k <= order() ? c_[static_cast<size_t>(k)] : zero;
    }

    friend bool operator==(const TruncSeries& a, const TruncSeries& b) { return a.c_ == b.c_; }
    friend bool operator!=(const TruncSeries& a, const TruncSeries& b) { return !(a == b); }

    TruncSeries truncated(int order) const {
        if (order >= this->order()) return *this;
        return TruncSeries(std::vector<Rat>(c_.begin(), c_.begin() + order + 1));
    }

    TruncSeries operator-() const {
        TruncSeries r = *this;
        for (Rat& v : r.c_) v = -v;
        return r;
    }

    friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
        TruncSeries r(std::min(a.order(), b.order()));
        for (int k = 0; k <= r.order(); ++k) r.c_[k] = a.c_[k] + b.c_[k];
        return r;
    }

    friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) { return a + (-b); }

    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
        TruncSeries r(std::min(a.order(), b.order()));
        for (int k = 0; k <= r.order(); ++k) {
            Rat acc(0);
            for (int j = 0; j <= k; ++j) acc += a.c_[j] * b.c_[k - j];
            r.c_[k] = acc;
        }
        return r;
    }

    // multiplicative inverse; requires a nonzero constant term
    TruncSeries inverse() const {
        if (c_[0] == 0) throw std::domain_error("series inverse: zero constant term");
        TruncSeries r(order());
        r.c_[0] = Rat(1) / c_[0];
        for (int k = 1; k <= order(); ++k) {
            Rat acc(0);
            for (int j = 1; j <= k; ++j) acc += c_[j] * r.c_[k - j];
            r.c_[k] = -acc / c_[0];
        }
        return r;
    }

    TruncSeries pow(long long e) const {
        TruncSeries base = e < 0 ? inverse() : *this;
        unsigned long long n = static_cast<unsigned long long>(e < 0 ? -e : e);
        TruncSeries r(order());
        r.c_[0] = 1;
        while (n) {
            if (n & 1u) r = r * base;
            base = base * base;
            n >>= 1u;
        }
        return r;
    }

    bool all_integral() const {
        for (const Rat& v : c_)
            if (v.get_den() != 1) return false;
        return true;
    }

  private:
    std::vector<Rat> c_;
};

// first N+1 Taylor coefficients of f at t = 0
inline TruncSeries rf_series(const RatFunc& f, int order) { return TruncSeries::from_ratfunc(f, order); }

}  // namespace kmp
