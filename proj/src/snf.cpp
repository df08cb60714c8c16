#include "posettop/snf.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <utility>

namespace posettop {

namespace {

using Dense = std::vector<std::vector<Int>>;

Dense dense_identity(int n) {
    Dense m(static_cast<std::size_t>(n), std::vector<Int>(static_cast<std::size_t>(n), 0));
    for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
    return m;
}

/// Elimination workspace. Row operations mirror into U (left transform),
/// column operations into V (right transform); either may be absent.
struct Work {
    Dense A;
    Dense* U = nullptr;
    Dense* V = nullptr;
    int rows = 0, cols = 0;

    void row_swap(int i, int j) {
        if (i == j) return;
        std::swap(A[static_cast<std::size_t>(i)], A[static_cast<std::size_t>(j)]);
        if (U) std::swap((*U)[static_cast<std::size_t>(i)], (*U)[static_cast<std::size_t>(j)]);
    }
    void row_addmul(int i, int j, const Int& q) {  // row_i += q * row_j
        auto& ri = A[static_cast<std::size_t>(i)];
        auto& rj = A[static_cast<std::size_t>(j)];
        for (int c = 0; c < cols; ++c)
            if (rj[static_cast<std::size_t>(c)] != 0)
                ri[static_cast<std::size_t>(c)] += q * rj[static_cast<std::size_t>(c)];
        if (U) {
            auto& ui = (*U)[static_cast<std::size_t>(i)];
            auto& uj = (*U)[static_cast<std::size_t>(j)];
            for (std::size_t c = 0; c < ui.size(); ++c)
                if (uj[c] != 0) ui[c] += q * uj[c];
        }
    }
    void row_negate(int i) {
        for (auto& v : A[static_cast<std::size_t>(i)]) v = -v;
        if (U)
            for (auto& v : (*U)[static_cast<std::size_t>(i)]) v = -v;
    }
    void col_swap(int i, int j) {
        if (i == j) return;
        for (int r = 0; r < rows; ++r)
            std::swap(A[static_cast<std::size_t>(r)][static_cast<std::size_t>(i)],
                      A[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)]);
        if (V)
            for (auto& row : *V)
                std::swap(row[static_cast<std::size_t>(i)], row[static_cast<std::size_t>(j)]);
    }
    void col_addmul(int i, int j, const Int& q) {  // col_i += q * col_j
        for (int r = 0; r < rows; ++r) {
            auto& rr = A[static_cast<std::size_t>(r)];
            if (rr[static_cast<std::size_t>(j)] != 0)
                rr[static_cast<std::size_t>(i)] += q * rr[static_cast<std::size_t>(j)];
        }
        if (V)
            for (auto& row : *V)
                if (row[static_cast<std::size_t>(j)] != 0)
                    row[static_cast<std::size_t>(i)] += q * row[static_cast<std::size_t>(j)];
    }

    const Int& at(int i, int j) const {
        return A[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }

    /// Diagonalizes the submatrix starting at (t0, t0). Pivot rule: smallest
    /// nonzero absolute value, ties by lowest row then lowest column; the
    /// pivot is re-selected after every remainder-producing reduction, and a
    /// full clearing pass runs only once all pivot row/column entries are
    /// exact multiples. The pivot is also made to divide the entire trailing
    /// submatrix, so the diagonal comes out divisibility-chained and entry
    /// growth stays controlled.
    void diagonalize_from(int t0) {
        for (int t = t0;; ++t) {
            for (;;) {
                int pr = -1, pc = -1;
                for (int i = t; i < rows; ++i)
                    for (int j = t; j < cols; ++j) {
                        const Int& v = at(i, j);
                        if (v == 0) continue;
                        if (pr < 0 || abs(v) < abs(at(pr, pc))) pr = i, pc = j;
                    }
                if (pr < 0) return;
                row_swap(t, pr);
                col_swap(t, pc);
                const Int pivot = at(t, t);

                // Reduce one non-multiple in the pivot column or row, then
                // re-select: the new remainder is strictly smaller.
                bool remainder = false;
                for (int i = t + 1; i < rows && !remainder; ++i)
                    if (at(i, t) % pivot != 0) {
                        row_addmul(i, t, -(at(i, t) / pivot));
                        remainder = true;
                    }
                for (int j = t + 1; j < cols && !remainder; ++j)
                    if (at(t, j) % pivot != 0) {
                        col_addmul(j, t, -(at(t, j) / pivot));
                        remainder = true;
                    }
                if (remainder) continue;

                for (int i = t + 1; i < rows; ++i)
                    if (at(i, t) != 0) row_addmul(i, t, -(at(i, t) / pivot));
                for (int j = t + 1; j < cols; ++j)
                    if (at(t, j) != 0) col_addmul(j, t, -(at(t, j) / pivot));

                // Pull any non-multiple of the pivot into its row; the next
                // round then shrinks the pivot to a divisor of it.
                bool clean = true;
                for (int i = t + 1; i < rows && clean; ++i)
                    for (int j = t + 1; j < cols && clean; ++j)
                        if (at(i, j) % pivot != 0) {
                            row_addmul(t, i, 1);
                            clean = false;
                        }
                if (clean) break;
            }
            if (at(t, t) < 0) row_negate(t);
        }
    }

    Int& diag(int i) { return A[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)]; }

    int rank() const {
        const int m = std::min(rows, cols);
        int r = 0;
        while (r < m && A[static_cast<std::size_t>(r)][static_cast<std::size_t>(r)] != 0) ++r;
        return r;
    }

    /// Restores d_i | d_{i+1} on the diagonal via 2x2 gcd/lcm steps. Each fix
    /// strictly decreases d_i, so the sweep terminates.
    void fix_divisibility() {
        const int r = rank();
        bool changed = true;
        while (changed) {
            changed = false;
            for (int i = 0; i + 1 < r; ++i) {
                if (diag(i + 1) % diag(i) == 0) continue;
                changed = true;
                const int j = i + 1;
                col_addmul(i, j, 1);  // A[j][i] = d_j; the 2x2 block is now dense
                for (;;) {
                    Int& off_r = A[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
                    if (off_r != 0) {
                        Int q = off_r / diag(i);
                        if (q != 0) row_addmul(j, i, -q);
                        if (A[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] != 0) {
                            row_swap(i, j);
                            continue;
                        }
                    }
                    Int& off_c = A[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                    if (off_c != 0) {
                        Int q = off_c / diag(i);
                        if (q != 0) col_addmul(j, i, -q);
                        if (A[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] != 0) {
                            col_swap(i, j);
                            continue;
                        }
                    }
                    break;
                }
                if (diag(i) < 0) row_negate(i);
                if (diag(j) < 0) row_negate(j);
            }
        }
    }
};

struct SparseCol {
    std::map<int, Int> entries;  // row -> value, nonzero
};

void axpy(SparseCol& dst, const SparseCol& src, const Int& q) {
    if (q == 0) return;
    for (const auto& [r, v] : src.entries) {
        auto it = dst.entries.find(r);
        if (it == dst.entries.end()) {
            dst.entries.emplace(r, q * v);
        } else {
            it->second += q * v;
            if (it->second == 0) dst.entries.erase(it);
        }
    }
}

SparseCol combine(const SparseCol& a, const Int& ca, const SparseCol& b, const Int& cb) {
    SparseCol out;
    axpy(out, a, ca);
    axpy(out, b, cb);
    return out;
}

/// Extended gcd: returns (g, x, y) with x*a + y*b = g, g > 0 for (a,b) != 0.
std::tuple<Int, Int, Int> egcd(Int a, Int b) {
    Int x0 = 1, y0 = 0, x1 = 0, y1 = 1;
    while (b != 0) {
        Int q = a / b;
        Int r = a - q * b;
        a = std::exchange(b, r);
        Int nx = x0 - q * x1;
        Int ny = y0 - q * y1;
        x0 = std::exchange(x1, nx);
        y0 = std::exchange(y1, ny);
    }
    if (a < 0) return {-a, -x0, -y0};
    return {a, x0, y0};
}

}  // namespace

SNFResult smith_normal_form(const IntMatrix& Ain) {
    Work w;
    w.rows = Ain.rows();
    w.cols = Ain.cols();
    w.A = Ain.to_dense();
    Dense U = dense_identity(w.rows);
    Dense V = dense_identity(w.cols);
    w.U = &U;
    w.V = &V;
    w.diagonalize_from(0);
    w.fix_divisibility();

    SNFResult out;
    out.U = IntMatrix::from_dense(U);
    out.V = IntMatrix::from_dense(V);
    out.D = IntMatrix::from_dense(w.A);
    out.rank = w.rank();
#ifndef NDEBUG
    if (out.U.multiply(Ain).multiply(out.V) != out.D)
        throw InternalInvariantViolation("SNF transform identity U*A*V = D failed");
#endif
    return out;
}

std::vector<Int> SNFResult::invariant_factors() const {
    std::vector<Int> d;
    for (int i = 0; i < rank; ++i) d.push_back(D.get(i, i));
    return d;
}

bool SNFResult::verify(const IntMatrix& A) const {
    if (U.multiply(A).multiply(V) != D) return false;
    Int du = determinant(U), dv = determinant(V);
    if (du != 1 && du != -1) return false;
    if (dv != 1 && dv != -1) return false;
    auto d = invariant_factors();
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (d[i] <= 0) return false;
        if (i + 1 < d.size() && d[i + 1] % d[i] != 0) return false;
    }
    const int m = std::min(D.rows(), D.cols());
    for (int i = 0; i < D.rows(); ++i)
        for (int j = 0; j < D.cols(); ++j)
            if (i != j && D.get(i, j) != 0) return false;
    for (int i = rank; i < m; ++i)
        if (D.get(i, i) != 0) return false;
    return true;
}

std::vector<Int> smith_invariants(const IntMatrix& A) {
    // Absorb columns into a staircase basis of the image lattice. Every step
    // is a unimodular combination of two generators, so the lattice (hence
    // rank and invariant factors) is preserved exactly.
    std::map<int, SparseCol> basis;  // topmost-row pivot -> column
    for (int c = 0; c < A.cols(); ++c) {
        SparseCol col;
        for (const auto& [r, v] : A.column(c)) col.entries.emplace(r, v);
        while (!col.entries.empty()) {
            const int p = col.entries.begin()->first;
            auto it = basis.find(p);
            if (it == basis.end()) {
                basis.emplace(p, std::move(col));
                break;
            }
            SparseCol& b = it->second;
            const Int a = b.entries.begin()->second;
            const Int v = col.entries.begin()->second;
            if (v % a == 0) {
                axpy(col, b, -(v / a));
            } else {
                auto [g, x, y] = egcd(a, v);
                SparseCol nb = combine(b, x, col, y);
                SparseCol nc = combine(col, a / g, b, -(v / g));
                it->second = std::move(nb);
                col = std::move(nc);
            }
        }
    }
    if (basis.empty()) return {};

    // Diagonalize the (rows x rank) accumulator.
    Work w;
    w.rows = A.rows();
    w.cols = static_cast<int>(basis.size());
    w.A.assign(static_cast<std::size_t>(w.rows),
               std::vector<Int>(static_cast<std::size_t>(w.cols), 0));
    {
        int c = 0;
        for (const auto& [p, col] : basis) {
            for (const auto& [r, v] : col.entries)
                w.A[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
            ++c;
        }
    }
    w.diagonalize_from(0);
    w.fix_divisibility();
    std::vector<Int> out;
    for (int i = 0; i < w.rank(); ++i) out.push_back(w.diag(i));
    return out;
}

int integer_rank(const IntMatrix& A) { return static_cast<int>(smith_invariants(A).size()); }

Int determinant(const IntMatrix& A) {
    if (A.rows() != A.cols()) throw Error("determinant requires a square matrix");
    const int n = A.rows();
    if (n == 0) return 1;
    Dense m = A.to_dense();
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] == 0) {
            int swap_row = -1;
            for (int i = k + 1; i < n; ++i)
                if (m[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] != 0) {
                    swap_row = i;
                    break;
                }
            if (swap_row < 0) return 0;
            std::swap(m[static_cast<std::size_t>(k)], m[static_cast<std::size_t>(swap_row)]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    (m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
                         m[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] -
                     m[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] *
                         m[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)]) /
                    prev;
            }
        prev = m[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)];
    }
    return sign * m[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(n - 1)];
}

std::optional<std::vector<Int>> in_integer_image(const SNFResult& snf, std::span<const Int> b) {
    const int rows = snf.D.rows();
    const int cols = snf.D.cols();
    if (static_cast<int>(b.size()) != rows) throw Error("in_integer_image: dimension mismatch");
    std::vector<Int> c = snf.U.apply(b);
    std::vector<Int> y(static_cast<std::size_t>(cols), 0);
    for (int i = 0; i < rows; ++i) {
        if (i < snf.rank) {
            const Int d = snf.D.get(i, i);
            if (c[static_cast<std::size_t>(i)] % d != 0) return std::nullopt;
            y[static_cast<std::size_t>(i)] = c[static_cast<std::size_t>(i)] / d;
        } else if (c[static_cast<std::size_t>(i)] != 0) {
            return std::nullopt;
        }
    }
    return snf.V.apply(y);
}

std::optional<std::vector<Int>> in_integer_image(const IntMatrix& A, std::span<const Int> b) {
    return in_integer_image(smith_normal_form(A), b);
}

IntMatrix kernel_lattice_basis(const SNFResult& snf) {
    const int cols = snf.V.rows();
    const int k = cols - snf.rank;
    IntMatrix out(cols, k);
    for (int j = 0; j < k; ++j)
        for (int r = 0; r < cols; ++r) {
            Int v = snf.V.get(r, snf.rank + j);
            if (v != 0) out.set(r, j, std::move(v));
        }
    return out;
}

IntMatrix kernel_lattice_basis(const IntMatrix& A) {
    return kernel_lattice_basis(smith_normal_form(A));
}

std::string HomologyGroup::to_string() const {
    if (is_trivial()) return "0";
    std::ostringstream out;
    bool first = true;
    if (betti == 1) {
        out << "Z";
        first = false;
    } else if (betti > 1) {
        out << "Z^" << betti;
        first = false;
    }
    for (const auto& t : torsion) {
        if (!first) out << " + ";
        out << "Z/" << t;
        first = false;
    }
    return out.str();
}

HomologyGroup homology_from_boundaries(const IntMatrix& d_n, const IntMatrix& d_np1) {
    if (d_n.cols() != d_np1.rows())
        throw Error("homology_from_boundaries: chain group dimension mismatch");
    if (!d_n.multiply(d_np1).is_zero())
        throw NotAComplex("boundary composition d_n * d_{n+1} is nonzero");
    const int rank_n = integer_rank(d_n);
    auto inv = smith_invariants(d_np1);
    HomologyGroup g;
    g.betti = d_n.cols() - rank_n - static_cast<int>(inv.size());
    for (auto& d : inv)
        if (d > 1) g.torsion.push_back(d);
    return g;
}

bool HomologyCoordinates::is_zero() const {
    for (const auto& v : torsion_coords)
        if (v != 0) return false;
    for (const auto& v : free_coords)
        if (v != 0) return false;
    return true;
}

HomologyBasis::HomologyBasis(const IntMatrix& d_n, const IntMatrix& d_np1) {
    if (d_n.cols() != d_np1.rows())
        throw Error("HomologyBasis: chain group dimension mismatch");
    if (!d_n.multiply(d_np1).is_zero())
        throw NotAComplex("boundary composition d_n * d_{n+1} is nonzero");
    auto snf_d = smith_normal_form(d_n);
    kernel_ = kernel_lattice_basis(snf_d);
    snf_kernel_ = smith_normal_form(kernel_);
    // Boundary generators are cycles, so their kernel coordinates exist.
    B_ = IntMatrix(kernel_.cols(), d_np1.cols());
    for (int c = 0; c < d_np1.cols(); ++c) {
        auto col = d_np1.dense_column(c);
        auto y = in_integer_image(snf_kernel_, col);
        if (!y)
            throw InternalInvariantViolation(
                "boundary column is not in the cycle lattice despite d*d = 0");
        for (int r = 0; r < B_.rows(); ++r)
            if ((*y)[static_cast<std::size_t>(r)] != 0)
                B_.set(r, c, (*y)[static_cast<std::size_t>(r)]);
    }
    snf_B_ = smith_normal_form(B_);
    group_.betti = B_.rows() - snf_B_.rank;
    for (const auto& d : snf_B_.invariant_factors())
        if (d > 1) group_.torsion.push_back(d);
}

std::optional<std::vector<Int>> HomologyBasis::cycle_coordinates(std::span<const Int> chain) const {
    return in_integer_image(snf_kernel_, chain);
}

HomologyCoordinates HomologyBasis::reduce(std::span<const Int> cycle_coords) const {
    std::vector<Int> c = snf_B_.U.apply(cycle_coords);
    HomologyCoordinates out;
    for (int i = 0; i < snf_B_.rank; ++i) {
        const Int d = snf_B_.D.get(i, i);
        if (d > 1) {
            Int v = c[static_cast<std::size_t>(i)] % d;
            if (v < 0) v += d;
            out.torsion_coords.push_back(std::move(v));
        }
    }
    for (int i = snf_B_.rank; i < B_.rows(); ++i)
        out.free_coords.push_back(c[static_cast<std::size_t>(i)]);
    return out;
}

}  // namespace posettop
