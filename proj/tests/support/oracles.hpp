#pragma once

// Independent oracle implementations for tests. Nothing here calls the
// library's enumeration, SNF, or homology paths: cubes come from naive
// corner filtering, ranks from fraction-free elimination, posets from
// exhaustive closure of upper-triangular relations.

#include <algorithm>
#include <set>
#include <vector>

#include "posettop/int_matrix.hpp"
#include "posettop/poset.hpp"

namespace oracles {

using posettop::ElementId;
using posettop::Int;
using posettop::IntMatrix;
using posettop::Poset;

/// All order-preserving maps Q_1^n -> P by filtering every |P|^(2^n) corner
/// assignment against monotonicity on the cover edges of the mask cube.
inline std::vector<std::vector<ElementId>> brute_force_cubes(const Poset& P, int n) {
    const int N = P.size();
    const int size = 1 << n;
    std::vector<std::vector<ElementId>> out;
    std::vector<ElementId> corners(static_cast<std::size_t>(size), 0);
    auto monotone = [&] {
        for (int m = 0; m < size; ++m)
            for (int b = 0; b < n; ++b)
                if (!(m & (1 << b)) &&
                    !P.leq(corners[static_cast<std::size_t>(m)],
                           corners[static_cast<std::size_t>(m | (1 << b))]))
                    return false;
        return true;
    };
    for (;;) {
        if (monotone()) out.push_back(corners);
        int i = size - 1;
        while (i >= 0 && corners[static_cast<std::size_t>(i)] == N - 1) {
            corners[static_cast<std::size_t>(i)] = 0;
            --i;
        }
        if (i < 0) break;
        ++corners[static_cast<std::size_t>(i)];
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline bool brute_force_degenerate(const std::vector<ElementId>& corners, int n) {
    for (int b = 0; b < n; ++b) {
        bool equal = true;
        for (int m = 0; m < (1 << n) && equal; ++m)
            if (!(m & (1 << b)))
                equal = corners[static_cast<std::size_t>(m)] ==
                        corners[static_cast<std::size_t>(m | (1 << b))];
        if (equal) return true;
    }
    return false;
}

/// Rank over Q by fraction-free (Bareiss-style) row elimination.
inline int fraction_free_rank(const IntMatrix& A) {
    auto m = A.to_dense();
    const int rows = A.rows(), cols = A.cols();
    int rank = 0;
    Int prev = 1;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[static_cast<std::size_t>(pivot)], m[static_cast<std::size_t>(rank)]);
        for (int r = rank + 1; r < rows; ++r) {
            for (int c = col + 1; c < cols; ++c)
                m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
                    (m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] *
                         m[static_cast<std::size_t>(rank)][static_cast<std::size_t>(col)] -
                     m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] *
                         m[static_cast<std::size_t>(rank)][static_cast<std::size_t>(c)]) /
                    prev;
            m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] = 0;
        }
        prev = m[static_cast<std::size_t>(rank)][static_cast<std::size_t>(col)];
        ++rank;
    }
    return rank;
}

/// Every poset on k labeled elements whose ids form a linear extension:
/// transitive closures of all subsets of the strict upper triangle,
/// deduplicated. Covers all isomorphism classes for k <= 6.
inline std::vector<Poset> all_small_posets(int k) {
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) slots.emplace_back(i, j);
    std::vector<std::string> labels;
    for (int i = 0; i < k; ++i) labels.push_back("p" + std::to_string(i));

    std::set<std::vector<bool>> seen;
    std::vector<Poset> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << slots.size()); ++mask) {
        std::vector<std::pair<std::string, std::string>> pairs;
        for (std::size_t s = 0; s < slots.size(); ++s)
            if (mask & (std::size_t{1} << s))
                pairs.emplace_back(labels[static_cast<std::size_t>(slots[s].first)],
                                   labels[static_cast<std::size_t>(slots[s].second)]);
        Poset P = Poset::from_relations(labels, pairs);
        std::vector<bool> key;
        key.reserve(static_cast<std::size_t>(k) * static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) key.push_back(P.leq(i, j));
        if (seen.insert(std::move(key)).second) out.push_back(std::move(P));
    }
    return out;
}

}  // namespace oracles
