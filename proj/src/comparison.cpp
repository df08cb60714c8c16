#include "posettop/comparison.hpp"

#include <algorithm>
#include <numeric>

namespace posettop {

void SimplicialChain::add(const std::vector<ElementId>& vertices, long long v) {
    if (v == 0) return;
    auto it = coeffs.find(vertices);
    if (it == coeffs.end()) {
        coeffs.emplace(vertices, v);
    } else {
        it->second += v;
        if (it->second == 0) coeffs.erase(it);
    }
}

SimplicialChain psi(const Cube& sigma) {
    const int n = sigma.n;
    if (n > 6) throw Error("psi supports n <= 6 (factorial permutation sum)");
    SimplicialChain out;
    out.dim = n;
    if (n == 0) {
        out.add({sigma.corners[0]}, 1);
        return out;
    }
    std::vector<int> tau(static_cast<std::size_t>(n));
    std::iota(tau.begin(), tau.end(), 1);
    do {
        long long sign = 1;
        for (std::size_t i = 0; i < tau.size(); ++i)
            for (std::size_t j = i + 1; j < tau.size(); ++j)
                if (tau[i] > tau[j]) sign = -sign;
        // Corner path: flip coordinate tau(i) from 0 to 1 at step i.
        std::vector<ElementId> verts;
        verts.reserve(static_cast<std::size_t>(n) + 1);
        unsigned mask = 0;
        verts.push_back(sigma.corners[0]);
        bool degenerate = false;
        for (int i = 0; i < n && !degenerate; ++i) {
            mask |= 1u << (tau[static_cast<std::size_t>(i)] - 1);
            ElementId v = sigma.corners[mask];
            if (v == verts.back())
                degenerate = true;  // repeats are consecutive along a monotone path
            else
                verts.push_back(v);
        }
        if (!degenerate) out.add(verts, sign);
    } while (std::next_permutation(tau.begin(), tau.end()));
    return out;
}

IntMatrix psi_matrix(const CubeBasis& cubes, const SimplicialComplex& K) {
    const int n = cubes.n;
    IntMatrix M(static_cast<int>(K.simplices(n).size()), static_cast<int>(cubes.cubes.size()));
    for (int c = 0; c < static_cast<int>(cubes.cubes.size()); ++c) {
        SimplicialChain chain = psi(cubes.cubes[static_cast<std::size_t>(c)]);
        for (const auto& [verts, v] : chain.coeffs) {
            const int r = K.index_of(verts);
            if (r < 0)
                throw InternalInvariantViolation(
                    "psi produced a vertex chain that is not a simplex of the order complex");
            M.add_to(r, c, v);
        }
    }
    return M;
}

InducedMapReport induced_map(const Poset& P, int p, const EnumerationCaps& caps) {
    CubeComplex cx(P, caps);
    const SimplicialComplex K = order_complex(P);

    HomologyBasis cube_h(cx.boundary_matrix(p), cx.boundary_matrix(p + 1));
    HomologyBasis simpl_h(simplicial_boundary_matrix(K, p), simplicial_boundary_matrix(K, p + 1));

    InducedMapReport rep;
    rep.degree = p;
    rep.cube = cube_h.group();
    rep.simpl = simpl_h.group();

    const IntMatrix psi_p = psi_matrix(cx.basis(p), K);
    const IntMatrix& Zc = cube_h.cycle_basis();    // chains x zc
    const int zc = Zc.cols();
    const int zs = simpl_h.cycle_basis().cols();

    // Images of the cubical cycle basis, in simplicial cycle coordinates.
    IntMatrix M(zs, zc);
    for (int j = 0; j < zc; ++j) {
        auto img = psi_p.apply(Zc.dense_column(j));
        auto y = simpl_h.cycle_coordinates(img);
        if (!y)
            throw InternalInvariantViolation("psi of a cycle is not a simplicial cycle");
        for (int r = 0; r < zs; ++r)
            if ((*y)[static_cast<std::size_t>(r)] != 0) M.set(r, j, (*y)[static_cast<std::size_t>(r)]);
        rep.column_classes.push_back(simpl_h.reduce(*y));
    }
    rep.map_on_cycle_coords = M;

    const IntMatrix& Bs = simpl_h.boundaries_in_cycle_coords();
    const IntMatrix& Bc = cube_h.boundaries_in_cycle_coords();

    // Surjective iff psi(cycles) and simplicial boundaries integrally span
    // the simplicial cycle lattice.
    const IntMatrix stacked = IntMatrix::hstack(M, Bs);
    const SNFResult stacked_snf = smith_normal_form(stacked);
    rep.surjective = true;
    for (int i = 0; i < zs && rep.surjective; ++i) {
        std::vector<Int> e(static_cast<std::size_t>(zs), 0);
        e[static_cast<std::size_t>(i)] = 1;
        rep.surjective = in_integer_image(stacked_snf, e).has_value();
    }

    // Injective iff every cycle sent into the boundary lattice is itself a
    // boundary: project Ker[M | -Bs] to the cycle part and test membership
    // in Im(Bc).
    IntMatrix neg = IntMatrix::hstack(M, Bs);
    for (int c = zc; c < neg.cols(); ++c) {
        auto col = neg.dense_column(c);
        for (int r = 0; r < neg.rows(); ++r)
            if (col[static_cast<std::size_t>(r)] != 0) neg.set(r, c, -col[static_cast<std::size_t>(r)]);
    }
    const IntMatrix ker = kernel_lattice_basis(neg);
    const SNFResult bc_snf = smith_normal_form(Bc);
    rep.injective = true;
    for (int j = 0; j < ker.cols() && rep.injective; ++j) {
        auto full = ker.dense_column(j);
        std::vector<Int> x(full.begin(), full.begin() + zc);
        rep.injective = in_integer_image(bc_snf, x).has_value();
    }
    return rep;
}

bool is_pseudo_manifold(const SimplicialComplex& K) {
    const int m = K.dim();
    if (m < 1) return false;
    for (const auto& f : K.simplices(m - 1)) {
        int count = 0;
        for (const auto& s : K.simplices(m)) {
            if (std::includes(s.vertices.begin(), s.vertices.end(), f.vertices.begin(),
                              f.vertices.end(), [&](ElementId a, ElementId b) {
                                  return K.rank()[static_cast<std::size_t>(a)] <
                                         K.rank()[static_cast<std::size_t>(b)];
                              }))
                ++count;
        }
        if (count != 2) return false;
    }
    return true;
}

}  // namespace posettop
