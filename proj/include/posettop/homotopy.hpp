#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "posettop/cubical.hpp"
#include "posettop/poset.hpp"
#include "posettop/snf.hpp"

namespace posettop {

/// Based zigzag loop: value(x) = basepoint for |x| >= radius, with the
/// interior values stored for positions -(radius-1)..(radius-1). The stored
/// radius is a declared bound, not necessarily minimal.
struct Loop {
    ElementId basepoint = 0;
    int radius = 0;
    std::vector<ElementId> values;  // size max(0, 2*radius - 1)

    static Loop constant(ElementId basepoint) { return Loop{basepoint, 0, {}}; }

    ElementId value(int x) const {
        if (x <= -radius || x >= radius) return basepoint;
        return values[static_cast<std::size_t>(x + radius - 1)];
    }
    /// Re-declares the loop with a larger radius (values unchanged).
    Loop padded_to(int R) const;
    int minimal_radius() const;

    bool operator==(const Loop&) const = default;
};

/// Pointwise equality of the underlying maps (radius declarations ignored).
bool same_loop(const Loop& f, const Loop& g);

struct LoopValidation {
    bool valid = true;
    std::vector<std::string> violations;
};

/// Checks the zigzag conditions value(2i) <= value(2i +- 1) (with basepoint
/// outside the support box) and structural consistency.
LoopValidation validate_loop(const Poset& P, const Loop& f);

/// Loop product per the shift formula, re-centered symmetrically. Declared
/// radii are first padded up to even numbers: the zigzag only admits even
/// translations, and this keeps the result a genuine loop. Result radius is
/// the sum of the padded radii.
Loop concat(const Poset& P, const Loop& f, const Loop& g);

/// inverse(f)(x) = f(-x).
Loop inverse(const Loop& f);

/// Monotone map from a product of fences I_{p_1} x ... x I_{p_n}.
struct GridMap {
    std::vector<int> dims;          // p_1..p_n; axis i has p_i + 1 grid points
    std::vector<ElementId> values;  // row-major, first axis slowest

    int order() const { return static_cast<int>(dims.size()); }
    std::size_t point_count() const;
    ElementId at(const std::vector<int>& x) const;

    bool operator==(const GridMap&) const = default;
};

/// Checks monotonicity against the product-of-fences order.
bool grid_is_monotone(const Poset& P, const GridMap& g);

/// T_r: recenters the loop onto I_{4r} (support shifted into (r, 3r)).
GridMap translate(const Loop& f);

/// Cell-sum chain of a grid map (n <= 3). Each unit cell is read with its
/// fence-minimal corner at bit vector 0..0 — coordinates whose base index is
/// odd are reflected — and weighted by (-1)^{#odd base coordinates}; without
/// the reflection an odd-based cell is order-reversing and not a cube at
/// all, and this is the unique local convention that makes the boundary
/// telescope to zero on loops. Degenerate cells drop out. Any p_i = 0 gives
/// the zero chain.
CubicalChain phi(const Poset& P, const GridMap& g);

struct HurewiczResult {
    CubicalChain chain;        // phi(T_r f); verified to be a 1-cycle
    HomologyGroup group;       // H_1^Cube of the poset
    HomologyCoordinates cls;   // class of the chain in SNF homology coordinates

    bool is_zero_class() const { return cls.is_zero(); }
};

/// h^D([f]) = [phi(T_r f)] with explicit class coordinates.
HurewiczResult hurewicz(const Poset& P, const Loop& f, const EnumerationCaps& caps = {});

/// Rows of loops with consecutive rows pointwise comparable; first row the
/// input (padded), last row the constant basepoint loop.
struct HomotopyCertificate {
    std::vector<Loop> rows;
};

bool validate_certificate(const Poset& P, const HomotopyCertificate& cert, const Loop& input);

enum class NullHomotopyStatus {
    Found,
    ExhaustedWithinBounds,  // whole radius-capped loop graph searched, no path
    StepCapReached,
};

struct NullHomotopyResult {
    NullHomotopyStatus status = NullHomotopyStatus::StepCapReached;
    std::optional<HomotopyCertificate> certificate;
    std::size_t states_explored = 0;
};

/// BFS over valid loops of radius <= radius_cap, edges joining pointwise
/// comparable loops (duplicating rows legitimizes any up/down parity
/// pattern, so plain comparability adjacency is complete). Absence within
/// bounds is an honest outcome, not a proof of non-nullity.
NullHomotopyResult null_homotopy_search(const Poset& P, const Loop& f, int radius_cap,
                                        std::size_t step_cap);

/// All valid loops of the same declared radius that dominate f pointwise
/// (up = true) or are dominated by it (up = false), excluding f itself.
std::vector<Loop> comparable_loops(const Poset& P, const Loop& f, bool up);

/// H_1^Cube(P), the abelianization of the first discrete homotopy group.
HomologyGroup pi1_abelianized(const Poset& P, const EnumerationCaps& caps = {});

/// "b > d < a > c < b": odd-length word of labels; '>' steps up (even -> odd
/// position), '<' steps down; first = last = basepoint. Comparators must
/// alternate starting with '>' at the leftmost (even) position.
Loop parse_loop_literal(const Poset& P, const std::string& text);
std::string loop_literal(const Poset& P, const Loop& f);

/// {"basepoint": "b", "values": {"-1": "d", "0": "a", "1": "c"}}
Loop loop_from_json(const Poset& P, const std::string& text);
std::string loop_to_json(const Poset& P, const Loop& f);

}  // namespace posettop
