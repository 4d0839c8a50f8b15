#pragma once

#include <bit>

#include "kmp/poincare.hpp"

namespace kmp {

/**
 * Report for Kac's positivity test: C(t) = P(A) (1-t)^n (1-t^2)^(-eps) with
 * eps = 1 for symmetrizable A, and B(t) = 1 - 1/C(t). The conjecture asserts
 * b_k >= 0 for all k; first_negative records the first counter-coefficient.
 */
struct KacReport {
    bool symmetrizable = false;
    bool in_scope = true;  // false when A is not of indefinite type
    TruncSeries C;
    TruncSeries B;
    std::optional<std::pair<int, Rat>> first_negative;
};

inline KacReport kac_check(Engine& engine, const CartanMatrix& A, int order) {
    if (order < 2) throw InputError("kac_check needs order >= 2");
    KacReport rep;
    rep.symmetrizable = A.symmetrizer().has_value();
    TypeClass tc = engine.classify(A);
    rep.in_scope = tc.components.size() == 1 && tc.components[0].kind == Kind::Indefinite;
    RatFunc C = engine.series_of(A) * RatFunc(IntPoly::one_minus_tk(1)).pow(A.rank());
    if (rep.symmetrizable) C = C / RatFunc(IntPoly::one_minus_tk(2));
    rep.C = rf_series(C, order);
    TruncSeries one = TruncSeries::from_poly(IntPoly::one(), order);
    rep.B = one - rep.C.inverse();
    for (int k = 0; k <= order; ++k) {
        if (rep.B.coeff(k) < 0) {
            rep.first_negative = {k, rep.B.coeff(k)};
            break;
        }
    }
    return rep;
}

/**
 * Strictly descending sequence of index subsets S = I_0 > I_1 > ... > I_r
 * (all nonempty), annotated with the type kind of each sub-matrix.
 */
struct Chain {
    std::vector<std::vector<int>> subsets;  // subsets[0] is the full index set
    std::vector<Kind> kinds;

    int length() const { return static_cast<int>(subsets.size()) - 1; }

    // every A_I along the chain is of non-finite type
    bool is_infinite() const {
        for (Kind k : kinds)
            if (k == Kind::Finite) return false;
        return true;
    }

    // all but the last non-finite, and the last a singleton
    bool is_quasi_infinite() const {
        if (subsets.back().size() != 1) return false;
        for (size_t i = 0; i + 1 < kinds.size(); ++i)
            if (kinds[i] == Kind::Finite) return false;
        return true;
    }
};

/**
 * Weight of a chain in the expansion of 1/P(A):
 *   H_T = (prod_{j=1..r} (-1)^|I_j| / (t^D(I_{j-1}) + (-1)^(|I_{j-1}|+1)))
 *         * 1 / (t^D(I_r) + (-1)^(|I_r|+1)),
 * where D(I) is the flag dimension of A_I and t^infinity = 0. dims[j] is
 * D(I_j), nullopt encoding infinity.
 */
inline RatFunc chain_weight(const Chain& chain, std::span<const std::optional<long long>> dims) {
    if (dims.size() != chain.subsets.size())
        throw std::invalid_argument("chain_weight: one dimension per subset required");
    auto denom = [&](size_t j) {
        long long sz = static_cast<long long>(chain.subsets[j].size());
        IntPoly d = IntPoly::constant(Int(sz % 2 ? 1 : -1));  // (-1)^(|I|+1)
        if (dims[j].has_value()) d += IntPoly::monomial(static_cast<int>(*dims[j]));
        return RatFunc(d);
    };
    RatFunc h = RatFunc::one();
    for (size_t j = 1; j < chain.subsets.size(); ++j) {
        long long sz = static_cast<long long>(chain.subsets[j].size());
        h *= RatFunc::from_int(sz % 2 ? -1 : 1) / denom(j - 1);
    }
    return h / denom(chain.subsets.size() - 1);
}

inline constexpr int kChainRankGuard = 12;

/**
 * Exhaustive enumeration of the infinite and quasi-infinite chains of a
 * non-finite Cartan matrix, by descending-subset DFS over non-finite
 * subsets (a chain cannot stay infinite once a finite-type subset occurs,
 * and a quasi-infinite chain is such a prefix plus one singleton).
 */
inline std::pair<std::vector<Chain>, std::vector<Chain>> chains(Engine& engine, const CartanMatrix& A) {
    const int n = A.rank();
    if (n > kChainRankGuard)
        throw InputError("chain enumeration refused beyond rank " + std::to_string(kChainRankGuard));
    TypeClass tc = engine.classify(A);
    if (tc.all_finite()) throw InputError("chains are defined for affine or indefinite matrices");

    std::vector<char> kind_memo(1u << n, -1);
    auto kind_of_mask = [&](unsigned mask) {
        char& slot = kind_memo[mask];
        if (slot < 0) {
            CartanMatrix sub = A.submatrix(Engine::mask_to_indices(mask, n));
            TypeClass stc = engine.classify(sub);
            Kind k = Kind::Affine;
            if (stc.all_finite()) {
                k = Kind::Finite;
            } else {
                for (const auto& c : stc.components)
                    if (c.kind == Kind::Indefinite) k = Kind::Indefinite;
            }
            slot = static_cast<char>(k);
        }
        return static_cast<Kind>(slot);
    };

    std::vector<Chain> infinite, quasi;
    std::vector<unsigned> path;
    std::vector<Kind> kinds;

    auto emit = [&](bool with_singleton, unsigned singleton_bit) {
        Chain c;
        for (unsigned m : path) c.subsets.push_back(Engine::mask_to_indices(m, n));
        c.kinds = kinds;
        if (with_singleton) {
            c.subsets.push_back(Engine::mask_to_indices(singleton_bit, n));
            c.kinds.push_back(Kind::Finite);
            quasi.push_back(std::move(c));
        } else {
            infinite.push_back(std::move(c));
        }
    };

    // DFS over strictly descending non-finite subsets, rooted at S
    auto dfs = [&](auto&& self, unsigned current) -> void {
        emit(false, 0);
        for (int i = 0; i < n; ++i) {
            unsigned bit = 1u << i;
            if (current & bit) emit(true, bit);
        }
        // proper nonempty submasks of current
        for (unsigned sub = (current - 1) & current; sub; sub = (sub - 1) & current) {
            if (kind_of_mask(sub) == Kind::Finite) continue;
            path.push_back(sub);
            kinds.push_back(kind_of_mask(sub));
            self(self, sub);
            path.pop_back();
            kinds.pop_back();
        }
    };

    unsigned full = (1u << n) - 1u;
    path.push_back(full);
    kinds.push_back(kind_of_mask(full));
    dfs(dfs, full);
    return {std::move(infinite), std::move(quasi)};
}

// enumerate every chain (no type restriction) and sum the weights; the
// expansion identity says the sum equals 1/P(A)
inline RatFunc chain_expansion_sum(Engine& engine, const CartanMatrix& A) {
    const int n = A.rank();
    if (n > 8) throw InputError("full chain expansion refused beyond rank 8");
    std::vector<std::optional<long long>> dim_of_mask(1u << n);
    for (unsigned mask = 1; mask < (1u << n); ++mask)
        dim_of_mask[mask] = engine.dim_flag(A.submatrix(Engine::mask_to_indices(mask, n)));

    RatFunc total;
    Chain chain;
    std::vector<std::optional<long long>> dims;
    auto dfs = [&](auto&& self, unsigned current) -> void {
        total += chain_weight(chain, dims);
        for (unsigned sub = (current - 1) & current; sub; sub = (sub - 1) & current) {
            chain.subsets.push_back(Engine::mask_to_indices(sub, n));
            dims.push_back(dim_of_mask[sub]);
            self(self, sub);
            chain.subsets.pop_back();
            dims.pop_back();
        }
    };
    unsigned full = (1u << n) - 1u;
    chain.subsets.push_back(Engine::mask_to_indices(full, n));
    dims.push_back(dim_of_mask[full]);
    dfs(dfs, full);
    return total;
}

/**
 * K0 = signed count of infinite chains (each weight is +-1), K1 = the
 * integer multiplying 1/(1+t) over quasi-infinite chains. Computed by
 * subset DP rather than explicit enumeration:
 *   G(J) = 1 - sum of G(J') over non-finite J' strictly below J,
 *   H(J) = |J| - sum of H(J'),
 * with K0 = (-1)^(n+1) G(S) and K1 = (-1)^n H(S). The pair decides the
 * degree of P(A): K0 != 0 forces deg 0 and K1 != 0 (with K0 = 0) forces
 * deg 1; degree outside {0,1} requires both to vanish.
 */
struct KInvariants {
    long long K0 = 0;
    long long K1 = 0;
    int degree = 0;        // rf degree of P(A), for cross-validation
    bool consistent = true;
};

inline KInvariants k_invariants(Engine& engine, const CartanMatrix& A) {
    const int n = A.rank();
    if (n > kChainRankGuard) throw InputError("k_invariants refused beyond rank 12");
    if (!A.is_connected()) throw InputError("k_invariants requires a connected matrix");
    TypeClass tc = engine.classify(A);
    if (tc.all_finite()) throw InputError("k_invariants requires affine or indefinite type");

    unsigned full = (1u << n) - 1u;
    std::vector<bool> nonfinite(full + 1, false);
    for (unsigned mask = 1; mask <= full; ++mask) {
        CartanMatrix sub = A.submatrix(Engine::mask_to_indices(mask, n));
        nonfinite[mask] = !engine.classify(sub).all_finite();
    }
    std::vector<long long> G(full + 1, 0), H(full + 1, 0);
    for (unsigned mask = 1; mask <= full; ++mask) {
        if (!nonfinite[mask]) continue;
        long long g = 1, h = std::popcount(mask);
        for (unsigned sub = (mask - 1) & mask; sub; sub = (sub - 1) & mask) {
            if (!nonfinite[sub]) continue;
            g -= G[sub];
            h -= H[sub];
        }
        G[mask] = g;
        H[mask] = h;
    }
    KInvariants r;
    r.K0 = (n % 2 ? 1 : -1) * G[full];
    r.K1 = (n % 2 ? -1 : 1) * H[full];
    r.degree = engine.series_of(A).degree();
    if (r.K0 != 0)
        r.consistent = r.degree == 0;
    else if (r.K1 != 0)
        r.consistent = r.degree == 1;
    else
        r.consistent = r.degree != 0 && r.degree != 1;
    return r;
}

// Degree test for the conjectured bound 0 <= deg P(A) <= 1 on connected
// infinite-dimensional matrices.
struct ClrReport {
    int degree = 0;
    bool holds = false;
};

inline ClrReport clr_check(Engine& engine, const CartanMatrix& A) {
    if (!A.is_connected()) throw InputError("clr_check requires a connected matrix");
    if (engine.classify(A).all_finite()) throw InputError("conjecture scope excludes finite type");
    ClrReport r;
    r.degree = engine.series_of(A).degree();
    r.holds = r.degree >= 0 && r.degree <= 1;
    return r;
}

/**
 * Cyclotomic-style factorization of f(t) = P(Gamma) (1-t)^n: unique signed
 * exponents e_k with f = prod_k (1-t^k)^(e_k), obtained by peeling the
 * lowest unresolved order. The homotopy index i_k is |e_k|; the sign is kept
 * so the series reconstructs exactly.
 */
struct HomotopyIndices {
    std::map<int, long long> exponents;  // k -> e_k, nonzero entries only
    int order = 0;

    long long index(int k) const {
        auto it = exponents.find(k);
        return it == exponents.end() ? 0 : (it->second < 0 ? -it->second : it->second);
    }

    std::map<int, long long> indices() const {
        std::map<int, long long> m;
        for (const auto& [k, e] : exponents) m[k] = e < 0 ? -e : e;
        return m;
    }

    // prod (1-t^k)^(e_k) to the stored order; equals P(Gamma) (1-t)^n
    TruncSeries reconstruct() const {
        TruncSeries f = TruncSeries::from_poly(IntPoly::one(), order);
        for (const auto& [k, e] : exponents)
            f = f * TruncSeries::from_poly(IntPoly::one_minus_tk(k), order).pow(e);
        return f;
    }
};

inline HomotopyIndices homotopy_indices(Engine& engine, const CoxeterGraph& g, int order) {
    if (order < 1) throw InputError("homotopy_indices needs order >= 1");
    RatFunc P = engine.series_of(g.to_cartan());
    RatFunc f_rf = P * RatFunc(IntPoly::one_minus_tk(1)).pow(g.vertices());
    TruncSeries f = rf_series(f_rf, order);
    HomotopyIndices hi;
    hi.order = order;
    for (int k = 1; k <= order; ++k) {
        const Rat& c = f.coeff(k);
        if (c == 0) continue;
        if (c.get_den() != 1 || !c.get_num().fits_slong_p())
            throw std::logic_error("homotopy peeling hit a non-integer or oversized coefficient");
        long long e = -c.get_num().get_si();
        hi.exponents[k] = e;
        // strip the factor (1-t^k)^e
        f = f * TruncSeries::from_poly(IntPoly::one_minus_tk(k), order).pow(-e);
    }
    return hi;
}

// Poincare series of the Coxeter group attached to a multigraph; edge
// multiplicities >= 4 behave identically (they all give m = infinity).
inline RatFunc pc_invariant(Engine& engine, const CoxeterGraph& g) {
    return engine.series_of(g.to_cartan());
}

/**
 * Distinct-series survey over all zero-free rank-n matrices in normal form,
 * one representative per multiset of rank-2 types (the series depends only
 * on the multiset of below-diagonal products). expected is the multiset
 * count binom(n(n-1)/2 + 3, 3); the conjecture asserts distinct == expected.
 */
struct KnSurvey {
    int n = 0;
    long long distinct = 0;
    long long expected = 0;
    bool holds = false;
    std::map<std::string, RatFunc> witnesses;  // multiset -> series
};

inline KnSurvey kn_survey(Engine& engine, int n) {
    if (n < 2 || n > 6) throw InputError("kn_survey supports 2 <= n <= 6");
    KnSurvey s;
    s.n = n;
    const int m = n * (n - 1) / 2;
    s.expected = static_cast<long long>(m + 3) * (m + 2) * (m + 1) / 6;

    std::vector<int> products(m, 1);
    std::map<std::string, std::string> seen;  // series key -> multiset key
    auto emit = [&]() {
        std::vector<int> entries(static_cast<size_t>(n) * n, 0);
        for (int i = 0; i < n; ++i) entries[static_cast<size_t>(i) * n + i] = 2;
        int pos = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                entries[static_cast<size_t>(i) * n + j] = -1;
                entries[static_cast<size_t>(j) * n + i] = -products[pos++];
            }
        CartanMatrix A(n, std::move(entries));
        RatFunc p = engine.series_of(A);
        std::string mkey;
        for (int v : products) mkey += std::to_string(v);
        s.witnesses.emplace(mkey, p);
        seen.emplace(p.num().str() + "|" + p.den().str(), mkey);
    };
    // non-decreasing product vectors enumerate the multisets
    auto rec = [&](auto&& self, int pos, int low) -> void {
        if (pos == m) {
            emit();
            return;
        }
        for (int v = low; v <= 4; ++v) {
            products[pos] = v;
            self(self, pos + 1, v);
        }
    };
    rec(rec, 0, 1);
    s.distinct = static_cast<long long>(seen.size());
    s.holds = s.distinct == s.expected;
    return s;
}

}  // namespace kmp
