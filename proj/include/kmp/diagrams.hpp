#pragma once

#include "kmp/cartan.hpp"

namespace kmp {

/**
 * Standard Dynkin diagram constructors. Families: 'A' (n >= 1), 'B'/'C'
 * (n >= 2), 'D' (n >= 4), 'E' (6..8), 'F' (4), 'G' (2). B and C transpose
 * each other and have the same Weyl group.
 */
inline CartanMatrix dynkin(char family, int n) {
    auto make = [](int n) {
        std::vector<int> e(static_cast<size_t>(n) * n, 0);
        for (int i = 0; i < n; ++i) e[static_cast<size_t>(i) * n + i] = 2;
        return e;
    };
    auto bond = [](std::vector<int>& e, int n, int i, int j, int aij = -1, int aji = -1) {
        e[static_cast<size_t>(i) * n + j] = aij;
        e[static_cast<size_t>(j) * n + i] = aji;
    };
    switch (family) {
        case 'A': {
            if (n < 1) throw InputError("A_n needs n >= 1");
            auto e = make(n);
            for (int i = 0; i + 1 < n; ++i) bond(e, n, i, i + 1);
            return CartanMatrix(n, std::move(e));
        }
        case 'B': {
            if (n < 2) throw InputError("B_n needs n >= 2");
            auto e = make(n);
            for (int i = 0; i + 2 < n; ++i) bond(e, n, i, i + 1);
            bond(e, n, n - 2, n - 1, -2, -1);
            return CartanMatrix(n, std::move(e));
        }
        case 'C': {
            if (n < 2) throw InputError("C_n needs n >= 2");
            auto e = make(n);
            for (int i = 0; i + 2 < n; ++i) bond(e, n, i, i + 1);
            bond(e, n, n - 2, n - 1, -1, -2);
            return CartanMatrix(n, std::move(e));
        }
        case 'D': {
            if (n < 4) throw InputError("D_n needs n >= 4");
            auto e = make(n);
            for (int i = 0; i + 2 < n; ++i) bond(e, n, i, i + 1);
            bond(e, n, n - 3, n - 1);
            return CartanMatrix(n, std::move(e));
        }
        case 'E': {
            if (n < 6 || n > 8) throw InputError("E_n needs n in 6..8");
            auto e = make(n);
            for (int i = 0; i + 2 < n; ++i) bond(e, n, i, i + 1);  // path 0..n-2
            bond(e, n, 2, n - 1);                                  // branch at the third node
            return CartanMatrix(n, std::move(e));
        }
        case 'F': {
            if (n != 4) throw InputError("F_n exists only for n = 4");
            auto e = make(4);
            bond(e, 4, 0, 1);
            bond(e, 4, 1, 2, -2, -1);
            bond(e, 4, 2, 3);
            return CartanMatrix(4, std::move(e));
        }
        case 'G': {
            if (n != 2) throw InputError("G_n exists only for n = 2");
            return CartanMatrix(2, {2, -1, -3, 2});
        }
        default: throw InputError(std::string("unknown family '") + family + "'");
    }
}

/**
 * Untwisted affine extension X_n^(1) of the finite family, with the affine
 * node last. Rank is n + 1.
 */
inline CartanMatrix untwisted_affine(char family, int n) {
    auto extend = [](const CartanMatrix& base, const std::vector<std::pair<int, std::pair<int, int>>>& links) {
        int n = base.rank() + 1;
        std::vector<int> e(static_cast<size_t>(n) * n, 0);
        for (int i = 0; i < base.rank(); ++i)
            for (int j = 0; j < base.rank(); ++j) e[static_cast<size_t>(i) * n + j] = base.at(i, j);
        e[static_cast<size_t>(n - 1) * n + n - 1] = 2;
        for (auto& [v, pair] : links) {
            e[static_cast<size_t>(v) * n + n - 1] = pair.first;
            e[static_cast<size_t>(n - 1) * n + v] = pair.second;
        }
        return CartanMatrix(n, std::move(e));
    };
    switch (family) {
        case 'A':
            if (n == 1) return CartanMatrix(2, {2, -2, -2, 2});
            if (n < 2) throw InputError("affine A_n needs n >= 1");
            // cycle: affine node joins both ends
            return extend(dynkin('A', n), {{0, {-1, -1}}, {n - 1, {-1, -1}}});
        case 'B':
            if (n < 3) throw InputError("affine B_n needs n >= 3");
            // second fork arm at the simply-laced end
            return extend(dynkin('B', n), {{1, {-1, -1}}});
        case 'C':
            if (n < 2) throw InputError("affine C_n needs n >= 2");
            // double bond toward the interior at node 0
            return extend(dynkin('C', n), {{0, {-1, -2}}});
        case 'D':
            if (n < 4) throw InputError("affine D_n needs n >= 4");
            return extend(dynkin('D', n), {{1, {-1, -1}}});
        case 'E':
            if (n == 6) return extend(dynkin('E', 6), {{5, {-1, -1}}});  // attach to the branch tip
            if (n == 7) return extend(dynkin('E', 7), {{0, {-1, -1}}});
            if (n == 8) return extend(dynkin('E', 8), {{6, {-1, -1}}});
            throw InputError("affine E_n needs n in 6..8");
        case 'F':
            if (n != 4) throw InputError("affine F_n exists only for n = 4");
            return extend(dynkin('F', 4), {{0, {-1, -1}}});
        case 'G':
            if (n != 2) throw InputError("affine G_n exists only for n = 2");
            return extend(dynkin('G', 2), {{0, {-1, -1}}});
        default: throw InputError(std::string("unknown family '") + family + "'");
    }
}

}  // namespace kmp
