// Acceptance suite: one numbered criterion per function, each printing a
// single PASS/FAIL line (with sub-check details on failure). Run with no
// arguments for all criteria, or with a criterion number. Exit code = number
// of failed criteria.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "posettop/builtins.hpp"
#include "posettop/comparison.hpp"
#include "posettop/cubical.hpp"
#include "posettop/homotopy.hpp"
#include "posettop/miner.hpp"
#include "posettop/rng.hpp"
#include "posettop/simplicial.hpp"
#include "posettop/snf.hpp"
#include "support/oracles.hpp"

using namespace posettop;
using Clock = std::chrono::steady_clock;

namespace {

struct Criterion {
    bool pass = true;
    std::vector<std::string> notes;

    void check(bool ok, const std::string& what) {
        if (!ok) pass = false;
        notes.push_back(std::string(ok ? "ok   " : "FAIL ") + what);
    }
};

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::vector<Poset> random_family(std::uint64_t base_seed, int count, int max_size,
                                 double density) {
    std::mt19937_64 gen(base_seed);
    std::vector<Poset> out;
    for (int i = 0; i < count; ++i) {
        const int n = 2 + static_cast<int>(bounded_draw(gen, static_cast<std::uint64_t>(max_size - 1)));
        out.push_back(random_poset(n, density, mix64(base_seed ^ static_cast<std::uint64_t>(i))));
    }
    return out;
}

Loop random_loop(const Poset& P, ElementId bp, int radius, std::mt19937_64& gen) {
    for (int attempt = 0; attempt < 500; ++attempt) {
        Loop f;
        f.basepoint = bp;
        f.radius = radius;
        if (radius > 0) f.values.assign(static_cast<std::size_t>(2 * radius - 1), bp);
        bool ok = true;
        for (int x = -(radius - 1); x <= radius - 1 && ok; ++x) {
            const ElementId prev = f.value(x - 1);
            std::vector<ElementId> cands;
            for (ElementId v = 0; v < P.size(); ++v) {
                const bool pair_ok = (x - 1) % 2 == 0 ? P.leq(prev, v) : P.leq(v, prev);
                if (!pair_ok) continue;
                if (x == radius - 1) {
                    const bool wall_ok = x % 2 == 0 ? P.leq(v, bp) : P.leq(bp, v);
                    if (!wall_ok) continue;
                }
                cands.push_back(v);
            }
            if (cands.empty())
                ok = false;
            else
                f.values[static_cast<std::size_t>(x + radius - 1)] =
                    cands[bounded_draw(gen, cands.size())];
        }
        if (ok && validate_loop(P, f).valid) return f;
    }
    return Loop::constant(bp);
}

Poset random_bipartite(std::mt19937_64& gen) {
    const int nb = 1 + static_cast<int>(bounded_draw(gen, 5));
    const int nt = 1 + static_cast<int>(bounded_draw(gen, 5));
    std::vector<std::string> labels;
    for (int i = 0; i < nb; ++i) labels.push_back("u" + std::to_string(i));
    for (int j = 0; j < nt; ++j) labels.push_back("v" + std::to_string(j));
    std::vector<std::pair<std::string, std::string>> pairs;
    for (int i = 0; i < nb; ++i)
        for (int j = 0; j < nt; ++j)
            if (unit_draw(gen) < 0.45)
                pairs.emplace_back("u" + std::to_string(i), "v" + std::to_string(j));
    for (int i = 0; i < nb; ++i)
        pairs.emplace_back("u" + std::to_string(i),
                           "v" + std::to_string(bounded_draw(gen, static_cast<std::uint64_t>(nt))));
    for (int j = 0; j < nt; ++j)
        pairs.emplace_back("u" + std::to_string(bounded_draw(gen, static_cast<std::uint64_t>(nb))),
                           "v" + std::to_string(j));
    return Poset::from_relations(std::move(labels), pairs);
}

bool chain_map_identity(const Poset& P, int max_n) {
    CubeComplex cx(P);
    auto K = order_complex(P);
    for (int n = 1; n <= max_n; ++n) {
        auto lhs = simplicial_boundary_matrix(K, n).multiply(psi_matrix(cx.basis(n), K));
        auto rhs = psi_matrix(cx.basis(n - 1), K).multiply(cx.boundary_matrix(n));
        if (!(lhs == rhs)) return false;
    }
    return true;
}

// ---- criteria ----

Criterion criterion1() {
    Criterion c;
    const auto t0 = Clock::now();
    auto P = builtin_poset("chain3");
    auto h = cubical_homology(P, 1);
    c.check(h[1] == HomologyGroup{0, {}}, "H_1^Cube(chain3) = 0");

    Cube sigma{2, {P.id_of("a"), P.id_of("b"), P.id_of("a"), P.id_of("c")}};
    auto b = boundary_chain(sigma);
    std::map<std::vector<ElementId>, long long> want{
        {{P.id_of("a"), P.id_of("b")}, 1},
        {{P.id_of("b"), P.id_of("c")}, 1},
        {{P.id_of("a"), P.id_of("c")}, -1}};
    c.check(b.coeffs == want, "d2(a,b,a,c) = (a,b)+(b,c)-(a,c) exactly");
    const double dt = seconds_since(t0);
    c.check(dt < 1.0, "runtime < 1 s (" + std::to_string(dt) + ")");
    return c;
}

Criterion criterion2() {
    Criterion c;
    const auto t0 = Clock::now();
    auto P = builtin_poset("sphere6");
    CubeComplex cx(P);
    const auto& b1 = cx.basis(1);
    std::vector<Int> alpha(b1.cubes.size(), 0);
    auto idx = [&](const char* u, const char* v) { return b1.find({P.id_of(u), P.id_of(v)}); };
    alpha[static_cast<std::size_t>(idx("a", "e"))] = 1;
    alpha[static_cast<std::size_t>(idx("b", "e"))] = -1;
    alpha[static_cast<std::size_t>(idx("b", "f"))] = 1;
    alpha[static_cast<std::size_t>(idx("a", "f"))] = -1;

    bool cycle = true;
    for (const auto& v : cx.boundary_matrix(1).apply(alpha)) cycle = cycle && v == 0;
    c.check(cycle, "alpha = (a,e)-(b,e)+(b,f)-(a,f) is a 1-cycle");

    auto solve = in_integer_image(cx.boundary_matrix(2), alpha);
    std::string detail = "in_integer_image(d2, alpha) = none";
    if (solve) {
        const bool exact = cx.boundary_matrix(2).apply(*solve) == alpha;
        detail += " -- actual: an integer preimage exists (verified d2*x = alpha exactly: " +
                  std::string(exact ? "yes" : "no") + ")";
    }
    c.check(!solve.has_value(), detail);

    auto h = cubical_homology(P, 1);
    c.check(!(h[1] == HomologyGroup{0, {}}),
            "H_1^Cube(sphere6) != 0 -- actual: " + h[1].to_string());

    auto K = order_complex(P);
    auto hs = simplicial_homology(K, 2);
    c.check(hs[1] == HomologyGroup{0, {}}, "H_1^Simpl(K(sphere6)) = 0");
    c.check(hs[2] == HomologyGroup{1, {}}, "H_2^Simpl(K(sphere6)) = Z");
    const double dt = seconds_since(t0);
    c.check(dt < 5.0, "runtime < 5 s (" + std::to_string(dt) + ")");
    return c;
}

Criterion criterion3() {
    Criterion c;
    const auto t0 = Clock::now();
    auto P = builtin_poset("circle4");
    auto h = cubical_homology(P, 1);
    c.check(h[1] == HomologyGroup{1, {}}, "H_1^Cube(circle4) = Z");

    Loop e{P.id_of("b"), 2, {P.id_of("d"), P.id_of("a"), P.id_of("c")}};
    auto he = hurewicz(P, e);
    c.check(he.cls.free_coords.size() == 1 && abs(he.cls.free_coords[0]) == 1,
            "hurewicz(e) has class coefficient +-1");

    auto hee = hurewicz(P, concat(P, e, inverse(e)));
    c.check(hee.is_zero_class(), "hurewicz(e * e^-1) = 0");

    for (int p : {0, 1}) {
        auto rep = induced_map(P, p);
        c.check(rep.iso(), "psi_* iso in degree " + std::to_string(p));
    }
    const double dt = seconds_since(t0);
    c.check(dt < 1.0, "runtime < 1 s (" + std::to_string(dt) + ")");
    return c;
}

Criterion criterion4() {
    Criterion c;
    for (auto name : {"chain3", "circle4", "sphere6", "max5"})
        c.check(chain_map_identity(builtin_poset(name), 3),
                std::string("chain-map identity, n in {1,2,3}: ") + name);
    auto family = random_family(0x9e3779b9u, 50, 7, 0.35);
    bool all = true;
    for (const auto& P : family) all = all && chain_map_identity(P, 3);
    c.check(all, "chain-map identity, n in {1,2,3}: 50 random posets of <= 7 elements");
    return c;
}

Criterion criterion5() {
    Criterion c;
    const auto t0 = Clock::now();
    for (auto name : {"circle4", "sphere6"}) {
        auto P = builtin_poset(name);
        CubeComplex cx(P);
        const IntMatrix& d2 = cx.boundary_matrix(2);
        const SNFResult d2_snf = smith_normal_form(d2);
        std::mt19937_64 gen(0x10ab5eedULL ^ static_cast<std::uint64_t>(P.size()));
        bool cycles = true, padding = true, steps = true;
        int pairs = 0;
        for (int t = 0; t < 25; ++t) {
            const ElementId bp = static_cast<ElementId>(bounded_draw(gen, P.size()));
            const int r = 1 + static_cast<int>(bounded_draw(gen, 4));
            Loop f = random_loop(P, bp, r, gen);
            auto chain = phi(P, translate(f));
            cycles = cycles && boundary_chain(chain).is_zero();
            padding = padding && phi(P, translate(f.padded_to(f.radius + 2))).coeffs == chain.coeffs;
            for (bool up : {true, false}) {
                auto nbrs = comparable_loops(P, f, up);
                if (nbrs.empty()) continue;
                const Loop& g = nbrs[bounded_draw(gen, nbrs.size())];
                auto diff = phi(P, translate(f.padded_to(g.radius)));
                for (auto& [k, v] : phi(P, translate(g)).coeffs) diff.add(k, -v);
                std::vector<Int> vec = cx.chain_coordinates(diff);
                steps = steps && in_integer_image(d2_snf, vec).has_value();
                ++pairs;
            }
        }
        c.check(cycles, std::string("d phi(T_r f) = 0 for 25 random loops: ") + name);
        c.check(padding, std::string("padding invariance of phi . T: ") + name);
        c.check(steps && pairs > 0,
                std::string("comparable pairs: phi difference in Im d2 (") +
                    std::to_string(pairs) + " pairs): " + name);
    }
    const double dt = seconds_since(t0);
    c.check(dt < 30.0, "runtime < 30 s (" + std::to_string(dt) + ")");
    return c;
}

Criterion criterion6() {
    Criterion c;
    auto family = random_family(0xc0ffee11u, 50, 7, 0.35);
    bool vanish = true, preserved = true;
    for (const auto& P : family) {
        auto withmax = adjoin_maximum(P);
        auto h = cubical_homology(withmax, 2);
        vanish = vanish && h[1] == HomologyGroup{0, {}} && h[2] == HomologyGroup{0, {}};
        auto core = remove_beat_points(P);
        preserved = preserved && cubical_homology(P, 2) == cubical_homology(core, 2) &&
                    simplicial_homology(order_complex(P), 2) ==
                        simplicial_homology(order_complex(core), 2);
    }
    c.check(vanish, "adjoined maximum forces H_1 = H_2 = 0 (50 random posets)");
    c.check(preserved, "beat-point removal preserves Betti/torsion in degrees <= 2");
    return c;
}

Criterion criterion7() {
    Criterion c;
    std::mt19937_64 gen(0xd15c0u);
    bool agree = true, iso = true, all_hom = true;
    for (int t = 0; t < 25; ++t) {
        auto P = random_bipartite(gen);
        all_hom = all_hom && P.homogeneity() == 1;
        for (int p : {0, 1, 2}) {
            auto rep = induced_map(P, p);
            agree = agree && rep.cube == rep.simpl;
            iso = iso && rep.iso();
        }
    }
    c.check(all_hom, "generated posets are homogeneous of dimension 1");
    c.check(agree, "cube and simplicial Betti/torsion agree in all degrees (25 posets)");
    c.check(iso, "psi_* reports iso in all degrees");
    return c;
}

Criterion criterion8() {
    Criterion c;
    std::size_t posets = 0;
    bool all = true;
    for (int k = 1; k <= 6 && all; ++k) {
        for (const auto& P : oracles::all_small_posets(k)) {
            ++posets;
            CubeComplex cx(P);
            for (int n = 1; n <= 2 && all; ++n) {
                auto brute = oracles::brute_force_cubes(P, n);
                const auto& basis = cx.basis(n);
                if (basis.total_count != brute.size()) all = false;
                std::vector<std::vector<ElementId>> nondeg;
                for (auto& t : brute)
                    if (!oracles::brute_force_degenerate(t, n)) nondeg.push_back(t);
                if (basis.cubes.size() != nondeg.size()) all = false;
                for (std::size_t i = 0; all && i < nondeg.size(); ++i)
                    if (basis.cubes[i].corners != nondeg[i]) all = false;
            }
            if (!all) break;
        }
    }
    c.check(all, "recursive enumeration = brute-force corner filtering, n in {1,2}, all " +
                     std::to_string(posets) + " posets on <= 6 elements");
    return c;
}

Criterion criterion9() {
    Criterion c;
    std::mt19937_64 gen(0x5eedf00dULL);
    bool verified = true, ranks = true;
    for (int t = 0; t < 200; ++t) {
        const int r = 1 + static_cast<int>(bounded_draw(gen, 20));
        const int cols = 1 + static_cast<int>(bounded_draw(gen, 20));
        IntMatrix A(r, cols);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < cols; ++j) {
                const long long v = static_cast<long long>(bounded_draw(gen, 19)) - 9;
                if (v != 0) A.set(i, j, v);
            }
        auto s = smith_normal_form(A);
        verified = verified && s.verify(A);
        ranks = ranks && s.rank == oracles::fraction_free_rank(A);
    }
    c.check(verified, "U*A*V = D, unimodularity, nonneg divisibility chain (200 matrices)");
    c.check(ranks, "rank agrees with fraction-free elimination");
    return c;
}

Criterion criterion10() {
    Criterion c;
    auto P = builtin_poset("circle4");
    auto f = parse_loop_literal(P, "b > c < a > c < b");
    auto found = null_homotopy_search(P, f, 3, 100000);
    c.check(found.status == NullHomotopyStatus::Found,
            "reduce finds a certificate for b > c < a > c < b (radius_cap 3, step_cap 1e5)");
    c.check(found.certificate && validate_certificate(P, *found.certificate, f),
            "the emitted certificate re-validates");

    Loop e{P.id_of("b"), 2, {P.id_of("d"), P.id_of("a"), P.id_of("c")}};
    auto not_found = null_homotopy_search(P, e, 3, 100000);
    c.check(not_found.status != NullHomotopyStatus::Found &&
                not_found.status == NullHomotopyStatus::ExhaustedWithinBounds,
            "e returns NotFoundWithinBounds at radius_cap 3");
    c.check(!hurewicz(P, e).is_zero_class(), "hurewicz(e) != 0 certifies non-nullity");

    // every certificate the search emits re-validates
    std::mt19937_64 gen(0xcafeULL);
    bool all_valid = true;
    for (auto name : {"circle4", "max5"}) {
        auto Q = builtin_poset(name);
        for (int t = 0; t < 10; ++t) {
            auto g = random_loop(Q, static_cast<ElementId>(bounded_draw(gen, Q.size())),
                                 1 + static_cast<int>(bounded_draw(gen, 2)), gen);
            auto res = null_homotopy_search(Q, g, g.radius + 1, 50000);
            if (res.status == NullHomotopyStatus::Found)
                all_valid = all_valid && validate_certificate(Q, *res.certificate, g);
        }
    }
    c.check(all_valid, "random emitted certificates re-validate");
    return c;
}

}  // namespace

int main(int argc, char** argv) {
    const std::vector<std::pair<int, Criterion (*)()>> table{
        {1, criterion1}, {2, criterion2}, {3, criterion3}, {4, criterion4}, {5, criterion5},
        {6, criterion6}, {7, criterion7}, {8, criterion8}, {9, criterion9}, {10, criterion10}};
    int only = 0;
    if (argc > 1) only = std::atoi(argv[1]);

    int failures = 0;
    for (const auto& [num, fn] : table) {
        if (only != 0 && num != only) continue;
        const auto t0 = Clock::now();
        Criterion res;
        try {
            res = fn();
        } catch (const std::exception& e) {
            res.pass = false;
            res.notes.push_back(std::string("FAIL exception: ") + e.what());
        }
        const double dt = seconds_since(t0);
        std::printf("CRITERION %d: %s (%.2f s)\n", num, res.pass ? "PASS" : "FAIL", dt);
        if (!res.pass)
            for (const auto& n : res.notes) std::printf("    %s\n", n.c_str());
        if (!res.pass) ++failures;
    }
    return failures;
}
