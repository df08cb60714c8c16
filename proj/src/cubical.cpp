#include "posettop/cubical.hpp"

#include <algorithm>
#include <bit>

#include "json.hpp"

namespace posettop {

Cube face(const Cube& sigma, int i, bool plus) {
    const int n = sigma.n;
    if (i < 1 || i > n) throw Error("face axis out of range");
    const int b = i - 1;
    Cube out;
    out.n = n - 1;
    out.corners.resize(std::size_t{1} << (n - 1));
    const int low_mask = (1 << b) - 1;
    for (int m = 0; m < (1 << (n - 1)); ++m) {
        const int full = (m & low_mask) | ((plus ? 1 : 0) << b) | ((m >> b) << (b + 1));
        out.corners[static_cast<std::size_t>(m)] = sigma.corners[static_cast<std::size_t>(full)];
    }
    return out;
}

bool is_degenerate(const Cube& sigma) {
    const int n = sigma.n;
    for (int b = 0; b < n; ++b) {
        bool equal = true;
        for (int m = 0; m < (1 << n) && equal; ++m) {
            if (m & (1 << b)) continue;
            equal = sigma.corners[static_cast<std::size_t>(m)] ==
                    sigma.corners[static_cast<std::size_t>(m | (1 << b))];
        }
        if (equal) return true;
    }
    return false;
}

void CubicalChain::add(const std::vector<ElementId>& corners, long long v) {
    if (v == 0) return;
    auto it = coeffs.find(corners);
    if (it == coeffs.end()) {
        coeffs.emplace(corners, v);
    } else {
        it->second += v;
        if (it->second == 0) coeffs.erase(it);
    }
}

CubicalChain boundary_chain(const Cube& sigma) {
    CubicalChain out;
    out.n = sigma.n - 1;
    long long sign = 1;
    for (int i = 1; i <= sigma.n; ++i) {
        sign = -sign;  // (-1)^i
        Cube minus = face(sigma, i, false);
        Cube plus = face(sigma, i, true);
        if (!is_degenerate(minus)) out.add(minus.corners, sign);
        if (!is_degenerate(plus)) out.add(plus.corners, -sign);
    }
    return out;
}

CubicalChain boundary_chain(const CubicalChain& chain) {
    CubicalChain out;
    out.n = chain.n - 1;
    for (const auto& [corners, coeff] : chain.coeffs) {
        Cube sigma{chain.n, corners};
        CubicalChain b = boundary_chain(sigma);
        for (const auto& [k, v] : b.coeffs) out.add(k, v * coeff);
    }
    return out;
}

CubeComplex::CubeComplex(Poset P, EnumerationCaps caps) : poset_(std::move(P)), caps_(caps) {}

void CubeComplex::build_to(int n) {
    if (static_cast<int>(levels_.size()) > n) return;
    const Poset& P = poset_;
    const int N = P.size();
    const int words = P.up_rows().words_per_row();

    if (levels_.empty()) {
        std::vector<Cube> level0;
        level0.reserve(static_cast<std::size_t>(N));
        for (ElementId x = 0; x < N; ++x) level0.push_back(Cube{0, {x}});
        levels_.push_back(std::move(level0));
    }

    while (static_cast<int>(levels_.size()) <= n) {
        const int k = static_cast<int>(levels_.size());  // building k-cubes
        const std::vector<Cube>& below = levels_[static_cast<std::size_t>(k - 1)];
        const std::size_t half = std::size_t{1} << (k - 1);
        std::vector<Cube> level;

        // DFS state: candidate bitsets per corner of the upper half.
        std::vector<std::uint64_t> cand(static_cast<std::size_t>(words) * half);
        std::vector<ElementId> upper(half);
        for (const Cube& lo : below) {
            // upper[m] ranges over elements dominating lo.corners[m] and all
            // already-chosen upper corners covered by m.
            std::size_t m = 0;
            std::vector<int> cursor(half, -1);
            auto recompute = [&](std::size_t mm) {
                auto dst = cand.begin() + static_cast<std::ptrdiff_t>(mm * words);
                auto base = P.up_rows().row(lo.corners[mm]);
                std::copy(base.begin(), base.end(), dst);
                for (int b = 0; b < k - 1; ++b) {
                    if (!(mm & (std::size_t{1} << b))) continue;
                    auto prev = P.up_rows().row(upper[mm ^ (std::size_t{1} << b)]);
                    for (int w = 0; w < words; ++w) dst[w] &= prev[w];
                }
            };
            recompute(0);
            for (;;) {
                // advance cursor[m] to the next candidate element
                int next = -1;
                for (int v = cursor[m] + 1; v < N; ++v) {
                    const auto* row = &cand[m * static_cast<std::size_t>(words)];
                    if ((row[v >> 6] >> (v & 63)) & 1) {
                        next = v;
                        break;
                    }
                }
                if (next < 0) {
                    if (m == 0) break;  // exhausted this lower half
                    cursor[m] = -1;
                    --m;
                    continue;
                }
                cursor[m] = next;
                upper[m] = static_cast<ElementId>(next);
                if (m + 1 == half) {
                    Cube c;
                    c.n = k;
                    c.corners.resize(half * 2);
                    std::copy(lo.corners.begin(), lo.corners.end(), c.corners.begin());
                    std::copy(upper.begin(), upper.end(), c.corners.begin() + static_cast<std::ptrdiff_t>(half));
                    level.push_back(std::move(c));
                    if (level.size() > caps_.max_cubes)
                        throw CapExceeded(caps_.max_cubes, level.size());
                } else {
                    ++m;
                    recompute(m);
                }
            }
        }
        levels_.push_back(std::move(level));
    }
}

const CubeBasis& CubeComplex::basis(int n) {
    auto it = bases_.find(n);
    if (it != bases_.end()) return it->second;
    build_to(n);
    CubeBasis b;
    b.n = n;
    const auto& level = levels_[static_cast<std::size_t>(n)];
    b.total_count = level.size();
    for (const Cube& c : level) {
        if (n >= 1 && is_degenerate(c)) {
            ++b.degenerate_count;
            continue;
        }
        b.index.emplace(c.corners, static_cast<int>(b.cubes.size()));
        b.cubes.push_back(c);
    }
    return bases_.emplace(n, std::move(b)).first->second;
}

IntMatrix cubical_boundary_matrix(const CubeBasis& rows, const CubeBasis& cols) {
    if (rows.n != cols.n - 1) throw Error("cubical_boundary_matrix: basis dimension mismatch");
    IntMatrix M(static_cast<int>(rows.cubes.size()), static_cast<int>(cols.cubes.size()));
    for (int c = 0; c < static_cast<int>(cols.cubes.size()); ++c) {
        CubicalChain b = boundary_chain(cols.cubes[static_cast<std::size_t>(c)]);
        for (const auto& [corners, v] : b.coeffs) {
            const int r = rows.find(corners);
            if (r < 0)
                throw InternalInvariantViolation("face of an enumerated cube missing from basis");
            M.add_to(r, c, v);
        }
    }
    return M;
}

const IntMatrix& CubeComplex::boundary_matrix(int n) {
    auto it = matrices_.find(n);
    if (it != matrices_.end()) return it->second;
    if (n == 0) {
        const auto& b0 = basis(0);
        return matrices_.emplace(0, IntMatrix(0, static_cast<int>(b0.cubes.size())))
            .first->second;
    }
    const CubeBasis& below = basis(n - 1);
    const CubeBasis& here = basis(n);
    return matrices_.emplace(n, cubical_boundary_matrix(below, here)).first->second;
}

std::vector<Int> CubeComplex::chain_coordinates(const CubicalChain& chain) {
    const CubeBasis& b = basis(chain.n);
    std::vector<Int> out(b.cubes.size(), 0);
    for (const auto& [corners, v] : chain.coeffs) {
        const int i = b.find(corners);
        if (i < 0) throw Error("chain contains a cube outside the nondegenerate basis");
        out[static_cast<std::size_t>(i)] = v;
    }
    return out;
}

CubeBasis enumerate_cubes(const Poset& P, int n, const EnumerationCaps& caps) {
    CubeComplex cx(P, caps);
    return cx.basis(n);
}

std::vector<HomologyGroup> cubical_homology(const Poset& P, int max_dim,
                                            const EnumerationCaps& caps) {
    if (max_dim < 0) throw Error("cubical_homology requires max_dim >= 0");
    CubeComplex cx(P, caps);
    std::vector<HomologyGroup> out;
    for (int p = 0; p <= max_dim; ++p)
        out.push_back(homology_from_boundaries(cx.boundary_matrix(p), cx.boundary_matrix(p + 1)));
    return out;
}

std::string chain_to_json(const Poset& P, const CubicalChain& chain) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [corners, coeff] : chain.coeffs) {
        nlohmann::json cube = nlohmann::json::array();
        for (ElementId x : corners) cube.push_back(P.label(x));
        arr.push_back({{"cube", cube}, {"coeff", coeff}});
    }
    return arr.dump();
}

}  // namespace posettop
