#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "posettop/errors.hpp"

namespace posettop {

using ElementId = std::int32_t;

/// Square boolean matrix packed into 64-bit words, one word row stride.
/// Rows act as subsets of {0..n-1}; used for order relations and for fast
/// pointwise-dominance tests during cube enumeration.
class BitMatrix {
public:
    BitMatrix() = default;
    explicit BitMatrix(int n)
        : n_(n), words_(n == 0 ? 0 : (n + 63) / 64), bits_(static_cast<std::size_t>(n) * words_, 0) {}

    int size() const { return n_; }
    int words_per_row() const { return words_; }

    bool get(int i, int j) const {
        return (bits_[static_cast<std::size_t>(i) * words_ + (j >> 6)] >> (j & 63)) & 1;
    }
    void set(int i, int j) {
        bits_[static_cast<std::size_t>(i) * words_ + (j >> 6)] |= std::uint64_t{1} << (j & 63);
    }
    void clear(int i, int j) {
        bits_[static_cast<std::size_t>(i) * words_ + (j >> 6)] &= ~(std::uint64_t{1} << (j & 63));
    }

    std::span<const std::uint64_t> row(int i) const {
        return {bits_.data() + static_cast<std::size_t>(i) * words_, static_cast<std::size_t>(words_)};
    }
    std::span<std::uint64_t> row(int i) {
        return {bits_.data() + static_cast<std::size_t>(i) * words_, static_cast<std::size_t>(words_)};
    }

    /// row(dst) |= row(src)
    void or_row(int dst, int src) {
        auto d = row(dst);
        auto s = row(src);
        for (int w = 0; w < words_; ++w) d[w] |= s[w];
    }

    bool operator==(const BitMatrix&) const = default;

private:
    int n_ = 0;
    int words_ = 0;
    std::vector<std::uint64_t> bits_;
};

/// Finite poset: opaque string labels, dense integer ids assigned in input
/// order, the full order relation as a bit matrix, and the transitively
/// reduced cover relation (Hasse edges).
///
/// Immutable after construction; safe for concurrent reads.
class Poset {
public:
    /// Builds a poset from any generating set of strict-order pairs.
    /// Computes the transitive closure, rejects cycles, and stores the
    /// transitive reduction as covers.
    static Poset from_relations(std::vector<std::string> labels,
                                const std::vector<std::pair<std::string, std::string>>& pairs);

    /// Builds from an explicit reflexive-transitive order matrix. The matrix
    /// must already be a partial order (checked).
    static Poset from_order_matrix(std::vector<std::string> labels, BitMatrix leq);

    int size() const { return static_cast<int>(labels_.size()); }
    const std::string& label(ElementId x) const { return labels_[static_cast<std::size_t>(x)]; }
    const std::vector<std::string>& labels() const { return labels_; }
    ElementId id_of(const std::string& label) const;  // UnknownLabel if absent

    bool leq(ElementId x, ElementId y) const { return leq_.get(x, y); }
    bool lt(ElementId x, ElementId y) const { return x != y && leq_.get(x, y); }

    /// Hasse edges (x, y) with x covered by y, sorted.
    const std::vector<std::pair<ElementId, ElementId>>& covers() const { return covers_; }

    /// Rows of the order matrix: up_row(x) is the bitset of {y : x <= y},
    /// down_row(x) the bitset of {y : y <= x}.
    const BitMatrix& up_rows() const { return leq_; }
    const BitMatrix& down_rows() const { return geq_; }

    std::vector<ElementId> down_set(ElementId x) const;
    std::vector<ElementId> up_set(ElementId x) const;
    std::vector<ElementId> strict_down_set(ElementId x) const;
    std::vector<ElementId> strict_up_set(ElementId x) const;

    /// All maximal-by-inclusion chains, each as an increasing element list.
    /// (Maximal chains are exactly the cover paths from a minimal to a
    /// maximal element.)
    std::vector<std::vector<ElementId>> maximal_chains() const;

    /// n when every maximal chain has n+1 elements, otherwise absent.
    std::optional<int> homogeneity() const;

    /// Dimension of U_x for homogeneous posets. Throws NotHomogeneous.
    int degree(ElementId x) const;

    std::optional<ElementId> maximum() const;
    std::optional<ElementId> minimum() const;

    /// Subposet induced by the given elements, labels preserved.
    Poset restrict(const std::vector<ElementId>& keep) const;

    bool operator==(const Poset& other) const {
        return labels_ == other.labels_ && leq_ == other.leq_;
    }

private:
    std::vector<std::string> labels_;
    BitMatrix leq_;   // leq_.get(x, y)  <=>  x <= y
    BitMatrix geq_;   // transpose of leq_
    std::vector<std::pair<ElementId, ElementId>> covers_;

    void finalize();  // derives geq_, covers_; validates order axioms
};

/// Componentwise product order; element (p, q) gets label "(lp,lq)" and
/// index p*|Q|+q.
Poset product(const Poset& P, const Poset& Q);

/// The zigzag segment I_p: elements 0..p, covers (2i, 2i+1) and (2j, 2j-1).
Poset fence(int p);

/// Iterated removal of beat points (elements whose strict down-set has a
/// maximum or strict up-set has a minimum); returns the core, a
/// homotopy-equivalent subposet.
Poset remove_beat_points(const Poset& P);

/// Random poset: each strict upper-triangular pair (i, j), i < j, is drawn
/// independently with the given probability (row-major order over i then j,
/// one unit_draw per pair), then closed and reduced. Deterministic in seed.
Poset random_poset(int n, double density, std::uint64_t seed);

/// Connectivity of the comparability graph.
bool is_connected(const Poset& P);

/// Adjoins a new global maximum labeled `top_label` (must be fresh).
Poset adjoin_maximum(const Poset& P, const std::string& top_label = "TOP");

}  // namespace posettop
