#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "posettop/int_matrix.hpp"

namespace posettop {

/// Smith normal form D = U * A * V with unimodular U, V and a diagonal D
/// whose nonzero entries are nonnegative and form a divisibility chain.
struct SNFResult {
    IntMatrix U;  // rows x rows
    IntMatrix D;  // rows x cols
    IntMatrix V;  // cols x cols
    int rank = 0;

    std::vector<Int> invariant_factors() const;  // nonzero diagonal of D
    /// Recomputes U*A*V and checks it equals D, |det U| = |det V| = 1,
    /// d_i >= 0 and the divisibility chain.
    bool verify(const IntMatrix& A) const;
};

/// Exact SNF with transforms. Deterministic: pivots are chosen as the
/// smallest nonzero absolute value, ties broken by lowest row then lowest
/// column index.
SNFResult smith_normal_form(const IntMatrix& A);

/// Invariant factors (nonzero, divisibility-chained) without transforms.
/// Columns are first absorbed into an integer column-staircase basis of the
/// image lattice (a unimodular column reduction), so matrices with far more
/// columns than rows stay cheap; the small accumulator is then diagonalized.
std::vector<Int> smith_invariants(const IntMatrix& A);

int integer_rank(const IntMatrix& A);

/// Fraction-free (Bareiss) determinant of a square matrix.
Int determinant(const IntMatrix& A);

/// Integer solution x of A*x = b, or nullopt when none exists.
std::optional<std::vector<Int>> in_integer_image(const IntMatrix& A, std::span<const Int> b);
/// Same, reusing a precomputed SNF of A.
std::optional<std::vector<Int>> in_integer_image(const SNFResult& snf, std::span<const Int> b);

/// Lattice basis of Ker(A) as columns of a cols(A) x (cols(A)-rank) matrix
/// (the trailing columns of V).
IntMatrix kernel_lattice_basis(const IntMatrix& A);
IntMatrix kernel_lattice_basis(const SNFResult& snf);

/// Finitely generated abelian group: Z^betti + sum of Z/t for the torsion
/// coefficients (each >= 2, each dividing the next).
struct HomologyGroup {
    int betti = 0;
    std::vector<Int> torsion;

    bool is_trivial() const { return betti == 0 && torsion.empty(); }
    std::string to_string() const;
    bool operator==(const HomologyGroup&) const = default;
};

/// Ker d_n / Im d_np1. Verifies d_n * d_np1 = 0 (NotAComplex otherwise).
HomologyGroup homology_from_boundaries(const IntMatrix& d_n, const IntMatrix& d_np1);

/// Canonical coordinates of a homology class in the SNF presentation of
/// Ker d_n / Im d_np1: one coordinate per torsion factor (normalized to
/// [0, t)) and one integer per free factor.
struct HomologyCoordinates {
    std::vector<Int> torsion_coords;
    std::vector<Int> free_coords;

    bool is_zero() const;
    bool operator==(const HomologyCoordinates&) const = default;
};

/// Degree-fixed homology presentation with cycle coordinates. Construction
/// pins a cycle-lattice basis (from SNF of d_n) and the boundary lattice
/// expressed in those coordinates.
class HomologyBasis {
public:
    HomologyBasis(const IntMatrix& d_n, const IntMatrix& d_np1);

    const HomologyGroup& group() const { return group_; }
    /// cols = cycle lattice basis vectors (chain coordinates).
    const IntMatrix& cycle_basis() const { return kernel_; }
    /// Boundary lattice generators in cycle-basis coordinates.
    const IntMatrix& boundaries_in_cycle_coords() const { return B_; }

    /// Cycle-basis coordinates of a cycle; nullopt if the chain is not a
    /// cycle (integral coordinates always exist for cycles: the kernel
    /// lattice is saturated).
    std::optional<std::vector<Int>> cycle_coordinates(std::span<const Int> chain) const;

    /// Class of a cycle given in cycle-basis coordinates.
    HomologyCoordinates reduce(std::span<const Int> cycle_coords) const;

    const SNFResult& boundary_snf() const { return snf_B_; }

private:
    IntMatrix kernel_;
    SNFResult snf_kernel_;  // for coordinate solves
    IntMatrix B_;
    SNFResult snf_B_;
    HomologyGroup group_;
};

}  // namespace posettop
