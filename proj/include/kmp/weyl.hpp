#pragma once

#include <unordered_map>

#include "kmp/cartan.hpp"

namespace kmp {

/**
 * counts[k] = number of Weyl group elements of length exactly k, up to the
 * BFS depth. truncated is set when the element cap stopped the search early,
 * in which case counts beyond the completed depth are unreliable.
 */
struct LengthCounts {
    std::vector<long long> counts;
    bool truncated = false;
    int depth = 0;

    friend bool operator==(const LengthCounts& a, const LengthCounts& b) {
        return a.counts == b.counts && a.truncated == b.truncated && a.depth == b.depth;
    }
};

namespace detail {

/**
 * Brute-force enumeration of the Weyl group in its integer geometric
 * representation: sigma_i(e_j) = e_j - a_ij e_i on the rank-n lattice of
 * column vectors, so generator i is the identity matrix with row i replaced
 * by (delta_ij - a_ij). The representation is faithful and BFS depth in the
 * Cayley graph (right multiplication by generators) equals Coxeter length.
 * Matrix entries are arbitrary-precision; dedup is by exact entry equality.
 */
class WeylBfs {
  public:
    WeylBfs(const CartanMatrix& A, int max_depth, size_t cap)
        : n_(A.rank()), A_(A), max_depth_(max_depth), cap_(cap) {
        run();
    }

    // depth of every visited element, keyed by matrix bytes
    const std::unordered_map<std::string, int>& depths() const { return depths_; }
    const std::vector<std::vector<Int>>& elements() const { return elements_; }
    bool truncated() const { return truncated_; }
    int completed_depth() const { return completed_depth_; }

    std::vector<Int> times_generator(const std::vector<Int>& w, int i) const {
        // (w * sigma_i)[r][c] = w[r][c] - w[r][i] * a[i][c]
        std::vector<Int> v = w;
        for (int r = 0; r < n_; ++r) {
            const Int& wri = w[static_cast<size_t>(r) * n_ + i];
            if (wri == 0) continue;
            for (int c = 0; c < n_; ++c)
                v[static_cast<size_t>(r) * n_ + c] -= wri * A_.at(i, c);
        }
        return v;
    }

    static std::string key_of(const std::vector<Int>& m) {
        std::string s;
        for (const Int& v : m) {
            s += v.get_str();
            s += ',';
        }
        return s;
    }

    LengthCounts counts() const {
        LengthCounts lc;
        lc.depth = max_depth_;
        lc.truncated = truncated_;
        lc.counts.assign(static_cast<size_t>(max_depth_) + 1, 0);
        for (const auto& [key, d] : depths_) ++lc.counts[static_cast<size_t>(d)];
        return lc;
    }

  private:
    void run() {
        std::vector<Int> id(static_cast<size_t>(n_) * n_, Int(0));
        for (int i = 0; i < n_; ++i) id[static_cast<size_t>(i) * n_ + i] = 1;
        std::vector<std::vector<Int>> frontier{id};
        depths_.emplace(key_of(id), 0);
        elements_.push_back(id);
        completed_depth_ = 0;
        for (int depth = 1; depth <= max_depth_; ++depth) {
            std::vector<std::vector<Int>> next;
            for (const auto& w : frontier) {
                for (int i = 0; i < n_; ++i) {
                    std::vector<Int> v = times_generator(w, i);
                    std::string key = key_of(v);
                    if (depths_.contains(key)) continue;
                    if (depths_.size() >= cap_) {
                        truncated_ = true;
                        return;
                    }
                    depths_.emplace(std::move(key), depth);
                    elements_.push_back(v);
                    next.push_back(std::move(v));
                }
            }
            frontier = std::move(next);
            completed_depth_ = depth;
            if (frontier.empty()) break;  // finite group exhausted
        }
    }

    int n_;
    CartanMatrix A_;
    int max_depth_;
    size_t cap_;
    bool truncated_ = false;
    int completed_depth_ = 0;
    std::unordered_map<std::string, int> depths_;
    std::vector<std::vector<Int>> elements_;
};

}  // namespace detail

inline constexpr size_t kDefaultBfsCap = 5'000'000;

// Length-generating counts of W(A) to the given depth.
inline LengthCounts weyl_counts(const CartanMatrix& A, int depth, size_t cap = kDefaultBfsCap) {
    if (depth < 0) throw InputError("BFS depth must be non-negative");
    return detail::WeylBfs(A, depth, cap).counts();
}

/**
 * Counts of minimal-length coset representatives of W/W_I per length: the
 * elements w with l(w sigma_i) > l(w) for every i in I. The descent test
 * compares BFS depths: w sigma_i has length l(w) +- 1, and it was visited at
 * depth l(w) - 1 exactly when it is shorter.
 */
inline LengthCounts coset_counts(const CartanMatrix& A, const std::vector<int>& I, int depth,
                                 size_t cap = kDefaultBfsCap) {
    if (depth < 0) throw InputError("BFS depth must be non-negative");
    for (int i : I)
        if (i < 0 || i >= A.rank()) throw InputError("subset index out of range");
    detail::WeylBfs bfs(A, depth, cap);
    LengthCounts lc;
    lc.depth = depth;
    lc.truncated = bfs.truncated();
    lc.counts.assign(static_cast<size_t>(depth) + 1, 0);
    for (const auto& w : bfs.elements()) {
        int d = bfs.depths().at(detail::WeylBfs::key_of(w));
        bool minimal = true;
        for (int i : I) {
            auto it = bfs.depths().find(detail::WeylBfs::key_of(bfs.times_generator(w, i)));
            if (it != bfs.depths().end() && it->second < d) {
                minimal = false;
                break;
            }
        }
        if (minimal) ++lc.counts[static_cast<size_t>(d)];
    }
    return lc;
}

}  // namespace kmp
