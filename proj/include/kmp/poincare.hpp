#pragma once

#include <bit>
#include <fstream>
#include <mutex>
#include <span>

#include "kmp/cartan.hpp"
#include "kmp/series.hpp"

namespace kmp {

// P(A) for a finite-type degree list: prod (t^d - 1)/(t - 1), expanded
inline IntPoly finite_poincare(std::span<const int> degrees) {
    IntPoly p = IntPoly::one();
    for (int d : degrees) p *= IntPoly::geometric(d);
    return p;
}

// Product over all components of a classified all-finite matrix.
inline IntPoly finite_poincare(const TypeClass& tc) {
    if (!tc.all_finite()) throw std::invalid_argument("finite_poincare: non-finite component");
    IntPoly p = IntPoly::one();
    for (const auto& c : tc.components) p *= finite_poincare(c.degrees);
    return p;
}

// Bott's product formula: the series of the untwisted affine extension of a
// finite-type base with the given degrees, P(base) * prod 1/(1 - t^(d-1)).
inline RatFunc bott_affine(std::span<const int> base_degrees) {
    IntPoly den = IntPoly::one();
    for (int d : base_degrees) den *= IntPoly::one_minus_tk(d - 1);
    return RatFunc(finite_poincare(base_degrees), den);
}

/**
 * Closed form for an n x n Cartan matrix whose rank-2 principal sub-matrices
 * all have the same series P2:
 *   (1+t) P2 / ( (n-1)(n-2)/2 t P2 - (n+1)(n-2)/2 P2 + n(n-1)/2 (1+t) ).
 */
inline RatFunc uniform_closed_form(const RatFunc& P2, int n) {
    if (n < 2) throw std::invalid_argument("uniform_closed_form: n must be >= 2");
    RatFunc one_plus_t(IntPoly{1, 1});
    RatFunc c1 = RatFunc::from_int(static_cast<long>(n - 1) * (n - 2) / 2);
    RatFunc c2 = RatFunc::from_int(static_cast<long>(n + 1) * (n - 2) / 2);
    RatFunc c3 = RatFunc::from_int(static_cast<long>(n) * (n - 1) / 2);
    RatFunc t(IntPoly{0, 1});
    return one_plus_t * P2 / (c1 * t * P2 - c2 * P2 + c3 * one_plus_t);
}

struct PoincareResult {
    RatFunc series;
    TypeClass type;
    // LCM numerator normal form (L, Q') with P = L / Q'; filled on demand for
    // non-finite matrices by Engine::lcm_numerator_form.
    std::optional<std::pair<IntPoly, RatFunc>> numerator_form;
};

/**
 * The Poincare series engine. Solves the Steinberg identity
 *   sum over I subset of S of (-1)^|I| P(A)/P_I(A) = 0
 * for P(A) of any non-finite indecomposable matrix, bottoming out at the
 * finite-type closed form; disconnected matrices multiply componentwise.
 *
 * Sub-matrix series are memoized across calls, keyed by normalized matrix
 * bytes (normalization preserves the series). The cache supports concurrent
 * insert-or-get; cached values are immutable once stored.
 */
class Engine {
  public:
    static constexpr int kRankGuard = 16;

    PoincareResult poincare(const CartanMatrix& A) {
        PoincareResult r;
        r.type = classify(A);
        r.series = series_of(A);
        return r;
    }

    // P(A) as a canonical rational function; product over components
    RatFunc series_of(const CartanMatrix& A) {
        if (A.rank() > kRankGuard)
            throw InputError("rank " + std::to_string(A.rank()) + " exceeds the guard of " +
                             std::to_string(kRankGuard) + " (2^n sub-matrices)");
        RatFunc p = RatFunc::one();
        for (const auto& comp : A.components()) p *= connected_series(A.submatrix(comp));
        return p;
    }

    // P of the principal sub-matrix A_I (0-based indices)
    RatFunc subset_series(const CartanMatrix& A, const std::vector<int>& I) {
        if (I.empty()) return RatFunc::one();
        return series_of(A.submatrix(I));
    }

    // P(A) / P_I(A), the series of the generalized flag manifold attached
    // to I; a polynomial with non-negative coefficients for finite type
    RatFunc quotient_series(const CartanMatrix& A, const std::vector<int>& I) {
        return series_of(A) / subset_series(A, I);
    }

    TypeClass classify(const CartanMatrix& A) {
        std::lock_guard<std::mutex> lock(mutex_);
        return detail::classify_with_cache(A, kinds_);
    }

    Kind kind_of(const CartanMatrix& connected) {
        std::lock_guard<std::mutex> lock(mutex_);
        return detail::kind_of_connected(connected, kinds_);
    }

    // dimension of the flag manifold of A: sum of (d_i - 1) when all
    // components are finite, nullopt (= infinity) otherwise
    std::optional<long long> dim_flag(const CartanMatrix& A) { return classify(A).dim_flag; }

    /**
     * LCM numerator normal form of a non-finite matrix: L is the least
     * common multiple of the Poincare polynomials of all finite-type
     * principal sub-matrices, and Q' = L / P(A). The numerator of P always
     * divides L, so Q' is asserted to be a polynomial up to the canonical
     * scalar; failure is reported as a TheoremViolation.
     */
    std::pair<IntPoly, RatFunc> lcm_numerator_form(const CartanMatrix& A) {
        TypeClass tc = classify(A);
        if (tc.all_finite()) throw InputError("finite type: P(A) is already a polynomial");
        const int n = A.rank();
        if (n > kRankGuard) throw InputError("rank exceeds guard");
        IntPoly L = IntPoly::one();
        for (unsigned mask = 1; mask < (1u << n); ++mask) {
            std::vector<int> idx = mask_to_indices(mask, n);
            CartanMatrix sub = A.submatrix(idx);
            TypeClass sub_tc = classify(sub);
            if (!sub_tc.all_finite()) continue;
            L = poly_lcm(L, finite_poincare(sub_tc));
        }
        RatFunc P = series_of(A);
        RatFunc Q = RatFunc(L) / P;
        if (Q.den().degree() != 0)
            throw TheoremViolation("numerator LCM division is inexact for matrix " + A.key());
        return {L, Q};
    }

    // --- cache persistence (binary, versioned header) ---

    void save_cache(const std::string& path) const {
        std::lock_guard<std::mutex> lock(mutex_);
        std::ofstream out(path, std::ios::binary | std::ios::trunc);
        if (!out) return;
        out.write(kCacheMagic, 4);
        write_u32(out, kCacheVersion);
        write_u32(out, static_cast<uint32_t>(series_.size()));
        for (const auto& [key, value] : series_) {
            write_str(out, key);
            write_poly(out, value.num());
            write_poly(out, value.den());
        }
    }

    void load_cache(const std::string& path) {
        std::ifstream in(path, std::ios::binary);
        if (!in) return;
        char magic[4];
        in.read(magic, 4);
        if (!in || std::string(magic, 4) != kCacheMagic) return;
        uint32_t version = read_u32(in);
        if (!in || version != kCacheVersion) return;
        uint32_t count = read_u32(in);
        std::lock_guard<std::mutex> lock(mutex_);
        for (uint32_t i = 0; i < count && in; ++i) {
            std::string key = read_str(in);
            IntPoly num = read_poly(in);
            IntPoly den = read_poly(in);
            if (!in || den.is_zero()) return;
            series_.emplace(std::move(key), RatFunc(std::move(num), std::move(den)));
        }
    }

    size_t cache_size() const {
        std::lock_guard<std::mutex> lock(mutex_);
        return series_.size();
    }

    static std::vector<int> mask_to_indices(unsigned mask, int n) {
        std::vector<int> idx;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) idx.push_back(i);
        return idx;
    }

  private:
    RatFunc connected_series(const CartanMatrix& A) {
        std::string key = A.normalized().key();
        {
            std::lock_guard<std::mutex> lock(mutex_);
            if (auto it = series_.find(key); it != series_.end()) return it->second;
        }
        RatFunc p;
        Kind kind = kind_of(A);
        if (kind == Kind::Finite) {
            p = RatFunc(finite_poincare(detail::recognize_finite(A).second));
        } else {
            // solve the alternating identity for P: the sum over proper
            // subsets of (-1)^|I| / P_I equals (-1)^(n+1) / P
            const int n = A.rank();
            RatFunc sum;
            for (unsigned mask = 0; mask + 1 < (1u << n); ++mask) {
                RatFunc term = subset_series(A, mask_to_indices(mask, n)).inverse();
                if (std::popcount(mask) % 2)
                    sum -= term;
                else
                    sum += term;
            }
            p = RatFunc::from_int(n % 2 ? 1 : -1) / sum;
        }
        std::lock_guard<std::mutex> lock(mutex_);
        return series_.emplace(std::move(key), std::move(p)).first->second;
    }

    static constexpr const char* kCacheMagic = "KMPC";
    static constexpr uint32_t kCacheVersion = 1;

    static void write_u32(std::ostream& out, uint32_t v) {
        unsigned char b[4] = {static_cast<unsigned char>(v), static_cast<unsigned char>(v >> 8),
                              static_cast<unsigned char>(v >> 16), static_cast<unsigned char>(v >> 24)};
        out.write(reinterpret_cast<const char*>(b), 4);
    }

    static uint32_t read_u32(std::istream& in) {
        unsigned char b[4] = {};
        in.read(reinterpret_cast<char*>(b), 4);
        return static_cast<uint32_t>(b[0]) | (static_cast<uint32_t>(b[1]) << 8) |
               (static_cast<uint32_t>(b[2]) << 16) | (static_cast<uint32_t>(b[3]) << 24);
    }

    static void write_str(std::ostream& out, const std::string& s) {
        write_u32(out, static_cast<uint32_t>(s.size()));
        out.write(s.data(), static_cast<std::streamsize>(s.size()));
    }

    static std::string read_str(std::istream& in) {
        uint32_t len = read_u32(in);
        if (!in || len > (1u << 24)) {
            in.setstate(std::ios::failbit);
            return {};
        }
        std::string s(len, '\0');
        in.read(s.data(), len);
        return s;
    }

    static void write_poly(std::ostream& out, const IntPoly& p) {
        write_u32(out, static_cast<uint32_t>(p.coeffs().size()));
        for (const Int& c : p.coeffs()) write_str(out, c.get_str());
    }

    static IntPoly read_poly(std::istream& in) {
        uint32_t len = read_u32(in);
        if (!in || len > (1u << 20)) {
            in.setstate(std::ios::failbit);
            return {};
        }
        std::vector<Int> c;
        c.reserve(len);
        for (uint32_t i = 0; i < len && in; ++i) {
            std::string s = read_str(in);
            if (s.empty()) s = "0";
            c.emplace_back(s);
        }
        return IntPoly(std::move(c));
    }

    mutable std::mutex mutex_;
    std::unordered_map<std::string, RatFunc> series_;
    detail::KindCache kinds_;
};

}  // namespace kmp
