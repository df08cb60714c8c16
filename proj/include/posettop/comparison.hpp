#pragma once

#include <map>
#include <vector>

#include "posettop/cubical.hpp"
#include "posettop/simplicial.hpp"
#include "posettop/snf.hpp"

namespace posettop {

/// Integer chain of simplices keyed by canonical vertex list.
struct SimplicialChain {
    int dim = 0;
    std::map<std::vector<ElementId>, long long> coeffs;

    void add(const std::vector<ElementId>& vertices, long long v);
    bool is_zero() const { return coeffs.empty(); }
};

/// The comparison chain map: a signed sum over the n! monotone corner paths
/// of the cube, with degenerate vertex lists (repeats) dropped. Enforces
/// n <= 6. Degenerate cubes map to zero.
SimplicialChain psi(const Cube& sigma);

/// Matrix of psi on the nondegenerate bases: rows = n-simplices of K (which
/// must be the order complex of the same poset), columns = n-cubes.
IntMatrix psi_matrix(const CubeBasis& cubes, const SimplicialComplex& K);

/// The induced map psi_*: H_p^Cube -> H_p^Simpl in SNF homology coordinates,
/// with exact injectivity/surjectivity decisions.
struct InducedMapReport {
    int degree = 0;
    HomologyGroup cube;
    HomologyGroup simpl;
    bool injective = false;
    bool surjective = false;
    /// psi of the cubical cycle basis, written in the simplicial cycle basis.
    IntMatrix map_on_cycle_coords;
    /// Columns = canonical coordinates (torsion then free) of the images of
    /// the cubical cycle-basis vectors in the SNF presentation of H^Simpl.
    std::vector<HomologyCoordinates> column_classes;

    bool iso() const { return injective && surjective; }
    std::string status() const {
        if (iso()) return "iso";
        if (surjective) return "surjective";
        if (injective) return "injective";
        return "other";
    }
};

InducedMapReport induced_map(const Poset& P, int p, const EnumerationCaps& caps = {});

/// Advisory pseudo-manifold check: every (m-1)-simplex lies in exactly two
/// m-simplices, m = dim K.
bool is_pseudo_manifold(const SimplicialComplex& K);

}  // namespace posettop
