#pragma once

#include <random>

#include "kmp/cartan.hpp"

// Shared test matrices, named after the shape of their Coxeter graphs.
namespace fixtures {

using kmp::CartanMatrix;
using kmp::CoxeterGraph;

// Rank-4 pair with zero entries sharing the same below-diagonal multiset;
// their series differ, witnessing that zero-freeness matters.
inline CartanMatrix r4_sparse_a() {
    return CartanMatrix::from_rows({{2, -1, -1, -1}, {-1, 2, 0, -1}, {-2, 0, 2, -1}, {-3, -3, -1, 2}});
}
inline CartanMatrix r4_sparse_b() {
    return CartanMatrix::from_rows({{2, 0, -1, -1}, {0, 2, -1, -1}, {-1, -1, 2, -1}, {-2, -3, -3, 2}});
}

// The same pair with the zero pairs replaced by (-4,-1); now the series agree.
inline CartanMatrix r4_dense_a() {
    return CartanMatrix::from_rows({{2, -1, -1, -1}, {-1, 2, -1, -1}, {-2, -4, 2, -1}, {-3, -3, -1, 2}});
}
inline CartanMatrix r4_dense_b() {
    return CartanMatrix::from_rows({{2, -1, -1, -1}, {-4, 2, -1, -1}, {-1, -1, 2, -1}, {-2, -3, -3, 2}});
}

// triangle on 1,2,3 plus a triple-bond tail at 3; indefinite of rank 4
inline CartanMatrix triangle_tail() {
    return CartanMatrix::from_rows({{2, -1, -1, 0}, {-1, 2, -1, 0}, {-1, -1, 2, -1}, {0, 0, -3, 2}});
}

// path 1-2-3-4 with a double-bond branch 3-5; indefinite of rank 5
inline CartanMatrix path_fork_double() {
    return CartanMatrix::from_rows(
        {{2, -1, 0, 0, 0}, {-1, 2, -1, 0, 0}, {0, -1, 2, -1, -2}, {0, 0, -1, 2, 0}, {0, 0, -1, 0, 2}});
}

// triangle graph with edge multiplicities 2, 3, 4
inline CoxeterGraph graph_234() {
    CoxeterGraph g(3);
    g.set_multiplicity(0, 1, 2);
    g.set_multiplicity(0, 2, 3);
    g.set_multiplicity(1, 2, 4);
    return g;
}

// 5-cycle on 1,2,3,4,5 with a pendant vertex 6 at 5; symmetric, rank 6
inline CartanMatrix pentagon_tail() {
    return CartanMatrix::from_rows({{2, -1, 0, 0, -1, 0},
                                    {-1, 2, -1, 0, 0, 0},
                                    {0, -1, 2, -1, 0, 0},
                                    {0, 0, -1, 2, -1, 0},
                                    {-1, 0, 0, -1, 2, -1},
                                    {0, 0, 0, 0, -1, 2}});
}

// star with center 2: legs 1, 5, 6 of length one and 3-4 of length two
inline CartanMatrix star_legs() {
    return CartanMatrix::from_rows({{2, -1, 0, 0, 0, 0},
                                    {-1, 2, -1, 0, -1, -1},
                                    {0, -1, 2, -1, 0, 0},
                                    {0, 0, -1, 2, 0, 0},
                                    {0, -1, 0, 0, 2, 0},
                                    {0, -1, 0, 0, 0, 2}});
}

// 4-cycle with bond products 4, 1, 2, 1; its series has degree 4
inline CartanMatrix cycle4_heavy() {
    return CartanMatrix::from_rows({{2, -1, 0, -1}, {-4, 2, -1, 0}, {0, -1, 2, -1}, {-1, 0, -2, 2}});
}

// K4 minus one edge, with products 1, 1, 4, 2, 2; its series has degree 2
inline CartanMatrix dense4_heavy() {
    return CartanMatrix::from_rows({{2, -1, -1, 0}, {-1, 2, -1, -1}, {-1, -4, 2, -1}, {0, -2, -2, 2}});
}

// triangle with exactly one product->=4 pair {1,2}; K1 = -1 configuration
inline CartanMatrix triangle_one_heavy() {
    return CartanMatrix::from_rows({{2, -4, -1}, {-1, 2, -1}, {-1, -1, 2}});
}

// Random GCM in normal form (*) with below-diagonal entries in [-4, -1]
// (zero_free) or [-4, 0]; optionally resampled until connected.
inline CartanMatrix random_gcm(std::mt19937& rng, int rank, bool zero_free, bool connected) {
    std::uniform_int_distribution<int> entry(zero_free ? 1 : 0, 4);
    while (true) {
        std::vector<int> e(static_cast<size_t>(rank) * rank, 0);
        for (int i = 0; i < rank; ++i) e[static_cast<size_t>(i) * rank + i] = 2;
        for (int i = 0; i < rank; ++i)
            for (int j = i + 1; j < rank; ++j) {
                int p = entry(rng);
                e[static_cast<size_t>(i) * rank + j] = p == 0 ? 0 : -1;
                e[static_cast<size_t>(j) * rank + i] = -p;
            }
        CartanMatrix A(rank, std::move(e));
        if (!connected || A.is_connected()) return A;
    }
}

// Random GCM with free pair orientations (not in normal form), products <= 6.
inline CartanMatrix random_gcm_raw(std::mt19937& rng, int rank) {
    std::uniform_int_distribution<int> pick(0, 6);
    std::uniform_int_distribution<int> flip(0, 1);
    std::vector<int> e(static_cast<size_t>(rank) * rank, 0);
    for (int i = 0; i < rank; ++i) e[static_cast<size_t>(i) * rank + i] = 2;
    static const std::pair<int, int> kPairs[] = {{0, 0},  {-1, -1}, {-2, -1}, {-3, -1},
                                                 {-4, -1}, {-5, -1}, {-3, -2}};
    for (int i = 0; i < rank; ++i)
        for (int j = i + 1; j < rank; ++j) {
            auto [a, b] = kPairs[pick(rng)];
            if (flip(rng)) std::swap(a, b);
            e[static_cast<size_t>(i) * rank + j] = a;
            e[static_cast<size_t>(j) * rank + i] = b;
        }
    return CartanMatrix(rank, std::move(e));
}

}  // namespace fixtures
