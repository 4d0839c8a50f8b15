#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "kmp/numeric.hpp"

namespace kmp {

/**
 * Generalized Cartan matrix: square integer matrix with
 *   (1) a_ii = 2,  (2) a_ij <= 0 for i != j,  (3) a_ij = 0  <=>  a_ji = 0.
 * Construction validates the axioms and throws InputError naming the
 * offending entry.
 */
class CartanMatrix {
  public:
    CartanMatrix(int n, std::vector<int> entries) : n_(n), a_(std::move(entries)) {
        if (n_ <= 0) throw InputError("Cartan matrix must have positive rank");
        if (a_.size() != static_cast<size_t>(n_) * n_) throw InputError("Cartan matrix is not square");
        for (int i = 0; i < n_; ++i) {
            if (at(i, i) != 2)
                throw InputError("Cartan axiom violated: a[" + std::to_string(i + 1) + "][" +
                                 std::to_string(i + 1) + "] must be 2");
            for (int j = 0; j < n_; ++j) {
                if (i == j) continue;
                if (at(i, j) > 0)
                    throw InputError("Cartan axiom violated: a[" + std::to_string(i + 1) + "][" +
                                     std::to_string(j + 1) + "] must be non-positive");
                if ((at(i, j) == 0) != (at(j, i) == 0))
                    throw InputError("Cartan axiom violated: a[" + std::to_string(i + 1) + "][" +
                                     std::to_string(j + 1) + "] = 0 without a[" + std::to_string(j + 1) +
                                     "][" + std::to_string(i + 1) + "] = 0");
            }
        }
    }

    static CartanMatrix from_rows(const std::vector<std::vector<int>>& rows) {
        int n = static_cast<int>(rows.size());
        std::vector<int> flat;
        flat.reserve(static_cast<size_t>(n) * n);
        for (const auto& r : rows) {
            if (static_cast<int>(r.size()) != n) throw InputError("Cartan matrix is not square");
            flat.insert(flat.end(), r.begin(), r.end());
        }
        return CartanMatrix(n, std::move(flat));
    }

    int rank() const { return n_; }
    int at(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }

    friend bool operator==(const CartanMatrix& a, const CartanMatrix& b) {
        return a.n_ == b.n_ && a.a_ == b.a_;
    }

    // principal sub-matrix on the given 0-based indices (ascending)
    CartanMatrix submatrix(const std::vector<int>& idx) const {
        std::vector<int> e;
        e.reserve(idx.size() * idx.size());
        for (int i : idx)
            for (int j : idx) e.push_back(at(i, j));
        return CartanMatrix(static_cast<int>(idx.size()), std::move(e));
    }

    // deterministic byte key, used for memoization
    std::string key() const {
        std::string s = std::to_string(n_);
        s += ';';
        for (int v : a_) {
            s += std::to_string(v);
            s += ',';
        }
        return s;
    }

    // Coxeter exponent m_ij: 2,3,4,6 for products 0,1,2,3 and 0 (= infinity)
    // for products >= 4
    int coxeter_m(int i, int j) const {
        if (i == j) return 1;
        switch (at(i, j) * at(j, i)) {
            case 0: return 2;
            case 1: return 3;
            case 2: return 4;
            case 3: return 6;
            default: return 0;
        }
    }

    /**
     * Normal form (*): for i < j the above-diagonal entry is 0 or -1 and the
     * below-diagonal entry carries the product, clamped to 4 when the product
     * exceeds 4. The Poincare series is unchanged (only the products
     * a_ij * a_ji enter the Weyl group presentation). Idempotent.
     */
    CartanMatrix normalized() const {
        std::vector<int> e = a_;
        for (int i = 0; i < n_; ++i) {
            for (int j = i + 1; j < n_; ++j) {
                int p = at(i, j) * at(j, i);
                if (p > 4) p = 4;
                e[static_cast<size_t>(i) * n_ + j] = p == 0 ? 0 : -1;
                e[static_cast<size_t>(j) * n_ + i] = -p;
            }
        }
        return CartanMatrix(n_, std::move(e));
    }

    // connected components of the graph with an edge i-j iff a_ij != 0,
    // each sorted, listed in order of smallest member
    std::vector<std::vector<int>> components() const {
        std::vector<bool> seen(n_, false);
        std::vector<std::vector<int>> comps;
        for (int s = 0; s < n_; ++s) {
            if (seen[s]) continue;
            std::vector<int> comp, stack{s};
            seen[s] = true;
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                comp.push_back(v);
                for (int w = 0; w < n_; ++w)
                    if (!seen[w] && at(v, w) != 0) {
                        seen[w] = true;
                        stack.push_back(w);
                    }
            }
            std::sort(comp.begin(), comp.end());
            comps.push_back(std::move(comp));
        }
        return comps;
    }

    bool is_connected() const { return components().size() == 1; }

    // exact determinant (Bareiss fraction-free elimination)
    Int det() const {
        std::vector<Int> m;
        m.reserve(a_.size());
        for (int v : a_) m.emplace_back(v);
        Int prev(1);
        int sign = 1;
        for (int k = 0; k < n_ - 1; ++k) {
            if (m[static_cast<size_t>(k) * n_ + k] == 0) {
                int p = -1;
                for (int i = k + 1; i < n_; ++i)
                    if (m[static_cast<size_t>(i) * n_ + k] != 0) {
                        p = i;
                        break;
                    }
                if (p < 0) return Int(0);
                for (int j = 0; j < n_; ++j)
                    std::swap(m[static_cast<size_t>(k) * n_ + j], m[static_cast<size_t>(p) * n_ + j]);
                sign = -sign;
            }
            for (int i = k + 1; i < n_; ++i) {
                for (int j = k + 1; j < n_; ++j) {
                    Int v = m[static_cast<size_t>(i) * n_ + j] * m[static_cast<size_t>(k) * n_ + k] -
                            m[static_cast<size_t>(i) * n_ + k] * m[static_cast<size_t>(k) * n_ + j];
                    m[static_cast<size_t>(i) * n_ + j] = v / prev;
                }
                m[static_cast<size_t>(i) * n_ + k] = 0;
            }
            prev = m[static_cast<size_t>(k) * n_ + k];
        }
        Int d = m[static_cast<size_t>(n_ - 1) * n_ + n_ - 1];
        return sign < 0 ? Int(-d) : d;
    }

    /**
     * Symmetrizability test: positive rationals d_i with d_i a_ij = d_j a_ji
     * exist iff ratio propagation along a spanning forest is consistent on
     * every non-tree edge. Returns the witness diagonal, scaled to the
     * smallest positive integers per component; nullopt if not symmetrizable.
     */
    std::optional<std::vector<Int>> symmetrizer() const {
        std::vector<Rat> d(n_, Rat(0));
        for (const auto& comp : components()) {
            d[comp[0]] = 1;
            std::vector<int> queue{comp[0]};
            for (size_t qi = 0; qi < queue.size(); ++qi) {
                int v = queue[qi];
                for (int w : comp) {
                    if (w == v || at(v, w) == 0) continue;
                    Rat need = d[v] * Rat(at(v, w)) / Rat(at(w, v));
                    if (d[w] == 0) {
                        d[w] = need;
                        queue.push_back(w);
                    } else if (d[w] * Rat(at(w, v)) != d[v] * Rat(at(v, w))) {
                        return std::nullopt;
                    }
                }
            }
            Int scale(1);
            for (int v : comp) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), d[v].get_den().get_mpz_t());
            Int g(0);
            for (int v : comp) {
                d[v] *= Rat(scale);
                mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d[v].get_num().get_mpz_t());
            }
            for (int v : comp) d[v] /= Rat(g);
        }
        std::vector<Int> w;
        w.reserve(n_);
        for (const Rat& v : d) w.push_back(v.get_num());
        return w;
    }

  private:
    int n_;
    std::vector<int> a_;
};

/**
 * Undirected multigraph without self-loops; edge multiplicities attach a
 * Coxeter exponent to each vertex pair (multiplicity 0,1,2,3,>=4 gives
 * m = 2,3,4,6,infinity).
 */
class CoxeterGraph {
  public:
    explicit CoxeterGraph(int n) : n_(n) {
        if (n <= 0) throw InputError("Coxeter graph must have at least one vertex");
    }

    // 0-based vertices
    void set_multiplicity(int i, int j, int mult) {
        if (i == j) throw InputError("Coxeter graph has no self-loops");
        if (mult < 0) throw InputError("edge multiplicity must be non-negative");
        if (i < 0 || j < 0 || i >= n_ || j >= n_) throw InputError("edge vertex out of range");
        if (i > j) std::swap(i, j);
        if (mult == 0)
            mult_.erase({i, j});
        else
            mult_[{i, j}] = mult;
    }

    int multiplicity(int i, int j) const {
        if (i > j) std::swap(i, j);
        auto it = mult_.find({i, j});
        return it == mult_.end() ? 0 : it->second;
    }

    int vertices() const { return n_; }
    const std::map<std::pair<int, int>, int>& edges() const { return mult_; }

    // Cartan matrix in normal form (*): multiplicity 0,1,2,3,>=4 maps to the
    // pair (0,0), (-1,-1), (-2,-1), (-3,-1), (-4,-1)
    CartanMatrix to_cartan() const {
        std::vector<int> e(static_cast<size_t>(n_) * n_, 0);
        for (int i = 0; i < n_; ++i) e[static_cast<size_t>(i) * n_ + i] = 2;
        for (const auto& [pair, mult] : mult_) {
            auto [i, j] = pair;
            int m = std::min(mult, 4);
            e[static_cast<size_t>(i) * n_ + j] = -1;  // i < j
            e[static_cast<size_t>(j) * n_ + i] = -m;
        }
        return CartanMatrix(n_, std::move(e));
    }

  private:
    int n_;
    std::map<std::pair<int, int>, int> mult_;
};

// Coxeter graph of a Cartan matrix (edge multiplicity = product, clamped at 4)
inline CoxeterGraph coxeter_graph_of(const CartanMatrix& A) {
    CoxeterGraph g(A.rank());
    for (int i = 0; i < A.rank(); ++i)
        for (int j = i + 1; j < A.rank(); ++j) {
            int p = A.at(i, j) * A.at(j, i);
            if (p > 0) g.set_multiplicity(i, j, std::min(p, 4));
        }
    return g;
}

enum class Kind { Finite, Affine, Indefinite };

inline const char* kind_name(Kind k) {
    switch (k) {
        case Kind::Finite: return "finite";
        case Kind::Affine: return "affine";
        default: return "indefinite";
    }
}

struct ComponentType {
    std::vector<int> support;  // 0-based indices into the parent matrix
    Kind kind = Kind::Indefinite;
    std::string label;         // catalog label for finite components, e.g. "D5"
    std::vector<int> degrees;  // degrees of basic invariants for finite components
};

/**
 * Per-component classification of a Cartan matrix. dim_flag is the complex
 * dimension of the flag manifold, sum of (d_i - 1) over all degrees when
 * every component is finite; nullopt encodes infinity.
 */
struct TypeClass {
    std::vector<ComponentType> components;
    std::optional<long long> dim_flag;

    bool all_finite() const { return dim_flag.has_value(); }
};

namespace detail {

/**
 * Recognize a connected finite-type Cartan matrix against the catalog
 * {A_k, B_k(=C_k), D_k, E6, E7, E8, F4, G2} by the shape of its Coxeter
 * graph, and return the catalog label plus the degree list. The catalog is
 * complete, so failure to match a minor-verified finite matrix is an
 * internal error.
 */
inline std::pair<std::string, std::vector<int>> recognize_finite(const CartanMatrix& A) {
    const int n = A.rank();
    auto fail = []() -> std::pair<std::string, std::vector<int>> {
        throw std::logic_error("finite-type component matches no catalog entry");
    };
    if (n == 1) return {"A1", {2}};
    std::vector<std::vector<int>> adj(n);
    int edges4 = 0, edges6 = 0, edgesInf = 0;
    std::pair<int, int> heavy{-1, -1};
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            int m = A.coxeter_m(i, j);
            if (m == 2) continue;
            adj[i].push_back(j);
            adj[j].push_back(i);
            if (m == 4) {
                ++edges4;
                heavy = {i, j};
            } else if (m == 6) {
                ++edges6;
            } else if (m == 0) {
                ++edgesInf;
            }
        }
    if (edgesInf > 0) fail();
    std::vector<int> branch;
    for (int v = 0; v < n; ++v)
        if (adj[v].size() >= 3) branch.push_back(v);

    if (edges6 > 0) {
        if (n != 2 || edges6 != 1) fail();
        return {"G2", {2, 6}};
    }
    if (edges4 > 0) {
        if (edges4 != 1 || !branch.empty()) fail();
        auto [i, j] = heavy;
        if (adj[i].size() == 1 || adj[j].size() == 1) {
            std::vector<int> degs;
            for (int k = 1; k <= n; ++k) degs.push_back(2 * k);
            return {"B" + std::to_string(n), degs};  // B_n and C_n share this entry
        }
        if (n != 4) fail();
        return {"F4", {2, 6, 8, 12}};
    }
    if (!branch.empty()) {
        if (branch.size() != 1 || adj[branch[0]].size() != 3) fail();
        int c = branch[0];
        std::vector<int> lens;
        for (int s : adj[c]) {
            int len = 1, prev = c, cur = s;
            while (true) {
                int next = -1;
                for (int w : adj[cur])
                    if (w != prev) {
                        if (next != -1) fail();
                        next = w;
                    }
                if (next == -1) break;
                prev = cur;
                cur = next;
                ++len;
            }
            lens.push_back(len);
        }
        std::sort(lens.begin(), lens.end());
        if (lens[0] == 1 && lens[1] == 1) {
            std::vector<int> degs;
            for (int k = 1; k < n; ++k) degs.push_back(2 * k);
            degs.push_back(n);
            std::sort(degs.begin(), degs.end());
            return {"D" + std::to_string(n), degs};
        }
        if (lens == std::vector<int>{1, 2, 2}) return {"E6", {2, 5, 6, 8, 9, 12}};
        if (lens == std::vector<int>{1, 2, 3}) return {"E7", {2, 6, 8, 10, 12, 14, 18}};
        if (lens == std::vector<int>{1, 2, 4}) return {"E8", {2, 8, 12, 14, 18, 20, 24, 30}};
        fail();
    }
    // simply-laced path
    std::vector<int> degs;
    for (int k = 2; k <= n + 1; ++k) degs.push_back(k);
    return {"A" + std::to_string(n), degs};
}

using KindCache = std::unordered_map<std::string, Kind>;

/**
 * Kac trichotomy for a connected Cartan matrix, by exact integer minors:
 * finite iff every principal minor is positive, affine iff every proper
 * principal minor is positive and det = 0, indefinite otherwise. Evaluated
 * recursively: the proper-minor condition holds iff every maximal proper
 * principal sub-matrix has only finite components.
 */
inline Kind kind_of_connected(const CartanMatrix& A, KindCache& cache) {
    std::string key = A.key();
    if (auto it = cache.find(key); it != cache.end()) return it->second;
    const int n = A.rank();
    bool proper_ok = true;
    for (int drop = 0; drop < n && proper_ok; ++drop) {
        std::vector<int> idx;
        idx.reserve(n - 1);
        for (int i = 0; i < n; ++i)
            if (i != drop) idx.push_back(i);
        if (idx.empty()) break;
        CartanMatrix sub = A.submatrix(idx);
        for (const auto& comp : sub.components()) {
            if (kind_of_connected(sub.submatrix(comp), cache) != Kind::Finite) {
                proper_ok = false;
                break;
            }
        }
    }
    Kind k = Kind::Indefinite;
    if (proper_ok) {
        Int d = A.det();
        if (d > 0)
            k = Kind::Finite;
        else if (d == 0)
            k = Kind::Affine;
    }
    cache.emplace(std::move(key), k);
    return k;
}

inline TypeClass classify_with_cache(const CartanMatrix& A, KindCache& cache) {
    TypeClass tc;
    long long dim = 0;
    bool finite = true;
    for (auto& comp : A.components()) {
        CartanMatrix sub = A.submatrix(comp);
        ComponentType ct;
        ct.support = comp;
        ct.kind = kind_of_connected(sub, cache);
        if (ct.kind == Kind::Finite) {
            auto [label, degs] = recognize_finite(sub);
            ct.label = std::move(label);
            ct.degrees = std::move(degs);
            for (int d : ct.degrees) dim += d - 1;
        } else {
            finite = false;
        }
        tc.components.push_back(std::move(ct));
    }
    if (finite) tc.dim_flag = dim;
    return tc;
}

}  // namespace detail

inline TypeClass classify(const CartanMatrix& A) {
    detail::KindCache cache;
    return detail::classify_with_cache(A, cache);
}

}  // namespace kmp
