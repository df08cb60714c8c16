#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "posettop/int_matrix.hpp"
#include "posettop/poset.hpp"
#include "posettop/snf.hpp"

namespace posettop {

/// An n-cube of a poset: an order-preserving map Q_1^n -> P stored as 2^n
/// corner values indexed by bit vectors (bit i-1 of the index is coordinate
/// i). A cube's canonical identity is its corner tuple.
struct Cube {
    int n = 0;
    std::vector<ElementId> corners;  // size 1 << n

    bool operator==(const Cube&) const = default;
    bool operator<(const Cube& o) const { return corners < o.corners; }
};

/// f_i^- (plus = false) or f_i^+ (plus = true); fixes coordinate i (1-based)
/// to 0 or 1.
Cube face(const Cube& sigma, int i, bool plus);

/// True iff f_i^- = f_i^+ for some axis i.
bool is_degenerate(const Cube& sigma);

/// Integer chain of nondegenerate cubes of one dimension, keyed by canonical
/// corner tuple.
struct CubicalChain {
    int n = 0;
    std::map<std::vector<ElementId>, long long> coeffs;

    void add(const std::vector<ElementId>& corners, long long v);
    bool is_zero() const { return coeffs.empty(); }
    bool operator==(const CubicalChain&) const = default;
};

/// Alternating face sum with degenerate faces dropped.
CubicalChain boundary_chain(const Cube& sigma);
CubicalChain boundary_chain(const CubicalChain& chain);

struct CornerHash {
    std::size_t operator()(const std::vector<ElementId>& key) const {
        std::size_t h = 1469598103934665603ull;
        for (ElementId v : key) {
            h ^= static_cast<std::size_t>(static_cast<std::uint32_t>(v));
            h *= 1099511628211ull;
        }
        return h;
    }
};

/// All nondegenerate n-cubes in canonical (lexicographic corner-tuple) order
/// with O(1) index lookup, plus counts of the full enumeration.
struct CubeBasis {
    int n = 0;
    std::vector<Cube> cubes;
    std::unordered_map<std::vector<ElementId>, int, CornerHash> index;
    std::size_t degenerate_count = 0;
    std::size_t total_count = 0;

    int find(const std::vector<ElementId>& corners) const {
        auto it = index.find(corners);
        return it == index.end() ? -1 : it->second;
    }
};

struct EnumerationCaps {
    std::size_t max_cubes = 1'000'000;  // per dimension, counting degenerate cubes
};

/// Lazily enumerated cube levels of a fixed poset with cached boundary
/// matrices. Dimension n is built by pairing (n-1)-cubes: an n-cube is
/// (sigma-, sigma+) with sigma- pointwise <= sigma+; the upper half is
/// enumerated corner-by-corner against precomputed order rows.
class CubeComplex {
public:
    explicit CubeComplex(Poset P, EnumerationCaps caps = {});

    const Poset& poset() const { return poset_; }
    const CubeBasis& basis(int n);
    /// Boundary matrix C_n -> C_{n-1} over the nondegenerate bases; n = 0
    /// yields the zero map onto the trivial group (0 rows).
    const IntMatrix& boundary_matrix(int n);

    /// Chain expressed in basis coordinates. Throws if a key is missing.
    std::vector<Int> chain_coordinates(const CubicalChain& chain);

private:
    Poset poset_;
    EnumerationCaps caps_;
    std::vector<std::vector<Cube>> levels_;  // all cubes, degenerate included
    std::map<int, CubeBasis> bases_;
    std::map<int, IntMatrix> matrices_;

    void build_to(int n);
};

CubeBasis enumerate_cubes(const Poset& P, int n, const EnumerationCaps& caps = {});

/// Boundary matrix over explicit bases: one column per nondegenerate n-cube,
/// expanded in the (n-1)-basis.
IntMatrix cubical_boundary_matrix(const CubeBasis& rows, const CubeBasis& cols);

/// Homology groups H_0 .. H_max_dim; degree max_dim enumerates one extra
/// cube level for its boundary-in.
std::vector<HomologyGroup> cubical_homology(const Poset& P, int max_dim,
                                            const EnumerationCaps& caps = {});

/// {"cube": [corner labels...], "coeff": k} list.
std::string chain_to_json(const Poset& P, const CubicalChain& chain);

}  // namespace posettop
