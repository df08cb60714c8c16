#include "posettop/homotopy.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <unordered_map>

#include "json.hpp"

namespace posettop {

namespace {

bool even_pos(int x) { return x % 2 == 0; }

}  // namespace

Loop Loop::padded_to(int R) const {
    if (R < radius) throw Error("padded_to cannot shrink the declared radius");
    Loop out;
    out.basepoint = basepoint;
    out.radius = R;
    if (R > 0) {
        out.values.resize(static_cast<std::size_t>(2 * R - 1), basepoint);
        for (int x = -(radius - 1); x <= radius - 1; ++x)
            out.values[static_cast<std::size_t>(x + R - 1)] = value(x);
    }
    return out;
}

int Loop::minimal_radius() const {
    int r = 0;
    for (int x = -(radius - 1); x <= radius - 1; ++x)
        if (value(x) != basepoint) r = std::max(r, std::abs(x) + 1);
    return r;
}

bool same_loop(const Loop& f, const Loop& g) {
    if (f.basepoint != g.basepoint) return false;
    const int R = std::max(f.radius, g.radius);
    for (int x = -R; x <= R; ++x)
        if (f.value(x) != g.value(x)) return false;
    return true;
}

LoopValidation validate_loop(const Poset& P, const Loop& f) {
    LoopValidation out;
    auto fail = [&](std::string msg) {
        out.valid = false;
        out.violations.push_back(std::move(msg));
    };
    if (f.basepoint < 0 || f.basepoint >= P.size()) {
        fail("basepoint id out of range");
        return out;
    }
    if (f.radius < 0) fail("negative radius");
    const std::size_t expect = f.radius > 0 ? static_cast<std::size_t>(2 * f.radius - 1) : 0;
    if (f.values.size() != expect) {
        fail("values size does not match declared radius");
        return out;
    }
    for (ElementId v : f.values)
        if (v < 0 || v >= P.size()) {
            fail("value id out of range");
            return out;
        }
    for (int x = -f.radius - 1; x <= f.radius; ++x) {
        const ElementId lo = f.value(x);
        const ElementId hi = f.value(x + 1);
        if (even_pos(x)) {
            if (!P.leq(lo, hi))
                fail("zigzag violated at (" + std::to_string(x) + "," + std::to_string(x + 1) +
                     "): " + P.label(lo) + " is not <= " + P.label(hi));
        } else {
            if (!P.leq(hi, lo))
                fail("zigzag violated at (" + std::to_string(x) + "," + std::to_string(x + 1) +
                     "): " + P.label(hi) + " is not <= " + P.label(lo));
        }
    }
    return out;
}

Loop concat(const Poset& P, const Loop& f, const Loop& g) {
    if (f.basepoint != g.basepoint)
        throw BasepointMismatch("concat requires a common basepoint");
    const int rf = f.radius + (f.radius % 2);
    const int rg = g.radius + (g.radius % 2);
    const int R = rf + rg;
    Loop out;
    out.basepoint = f.basepoint;
    out.radius = R;
    if (R > 0) out.values.resize(static_cast<std::size_t>(2 * R - 1), f.basepoint);
    for (int x = -(R - 1); x <= R - 1; ++x) {
        const ElementId v = (x <= rf - rg) ? f.value(x + rg) : g.value(x - rf);
        out.values[static_cast<std::size_t>(x + R - 1)] = v;
    }
    auto check = validate_loop(P, out);
    if (!check.valid)
        throw InternalInvariantViolation("concat produced an invalid loop: " +
                                         check.violations.front());
    return out;
}

Loop inverse(const Loop& f) {
    Loop out = f;
    std::reverse(out.values.begin(), out.values.end());
    return out;
}

std::size_t GridMap::point_count() const {
    std::size_t n = 1;
    for (int p : dims) n *= static_cast<std::size_t>(p) + 1;
    return n;
}

ElementId GridMap::at(const std::vector<int>& x) const {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < dims.size(); ++i)
        idx = idx * (static_cast<std::size_t>(dims[i]) + 1) + static_cast<std::size_t>(x[i]);
    return values[idx];
}

bool grid_is_monotone(const Poset& P, const GridMap& g) {
    const int n = g.order();
    std::vector<int> x(static_cast<std::size_t>(n), 0);
    for (;;) {
        for (int i = 0; i < n; ++i) {
            if (x[static_cast<std::size_t>(i)] + 1 > g.dims[static_cast<std::size_t>(i)]) continue;
            std::vector<int> y = x;
            ++y[static_cast<std::size_t>(i)];
            const ElementId a = g.at(x), b = g.at(y);
            const bool ok = even_pos(x[static_cast<std::size_t>(i)]) ? P.leq(a, b) : P.leq(b, a);
            if (!ok) return false;
        }
        int i = n - 1;
        while (i >= 0 && x[static_cast<std::size_t>(i)] == g.dims[static_cast<std::size_t>(i)]) {
            x[static_cast<std::size_t>(i)] = 0;
            --i;
        }
        if (i < 0) return true;
        ++x[static_cast<std::size_t>(i)];
    }
}

GridMap translate(const Loop& f) {
    const int r = f.radius;
    GridMap g;
    g.dims = {4 * r};
    g.values.resize(static_cast<std::size_t>(4 * r) + 1);
    for (int i = 0; i <= 4 * r; ++i)
        g.values[static_cast<std::size_t>(i)] = f.value(i - 2 * r);
    return g;
}

CubicalChain phi(const Poset& P, const GridMap& g) {
    const int n = g.order();
    if (n < 1 || n > 3) throw Error("phi supports grid maps of order 1..3");
    if (!grid_is_monotone(P, g))
        throw NonMonotoneInput("grid map violates the product-fence order");
    CubicalChain out;
    out.n = n;
    for (int p : g.dims)
        if (p == 0) return out;

    std::vector<int> x(static_cast<std::size_t>(n), 0);
    std::vector<int> corner_pos(static_cast<std::size_t>(n));
    Cube cube;
    cube.n = n;
    cube.corners.resize(std::size_t{1} << n);
    for (;;) {
        int odd = 0;
        for (int i = 0; i < n; ++i)
            if (!even_pos(x[static_cast<std::size_t>(i)])) ++odd;
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            for (int i = 0; i < n; ++i) {
                const int bit = (mask >> i) & 1;
                const int xi = x[static_cast<std::size_t>(i)];
                corner_pos[static_cast<std::size_t>(i)] = xi + (even_pos(xi) ? bit : 1 - bit);
            }
            cube.corners[mask] = g.at(corner_pos);
        }
        if (!is_degenerate(cube)) out.add(cube.corners, (odd % 2 == 0) ? 1 : -1);

        int i = n - 1;
        while (i >= 0 && x[static_cast<std::size_t>(i)] == g.dims[static_cast<std::size_t>(i)] - 1) {
            x[static_cast<std::size_t>(i)] = 0;
            --i;
        }
        if (i < 0) break;
        ++x[static_cast<std::size_t>(i)];
    }
    return out;
}

HurewiczResult hurewicz(const Poset& P, const Loop& f, const EnumerationCaps& caps) {
    auto check = validate_loop(P, f);
    if (!check.valid) throw Error("hurewicz requires a valid loop: " + check.violations.front());
    HurewiczResult out;
    out.chain = phi(P, translate(f));
    if (!boundary_chain(out.chain).is_zero())
        throw InternalInvariantViolation("phi(T_r f) has nonzero boundary");

    CubeComplex cx(P, caps);
    HomologyBasis h1(cx.boundary_matrix(1), cx.boundary_matrix(2));
    out.group = h1.group();
    std::vector<Int> v = cx.chain_coordinates(out.chain);
    auto y = h1.cycle_coordinates(v);
    if (!y) throw InternalInvariantViolation("phi(T_r f) is not in the cycle lattice");
    out.cls = h1.reduce(*y);
    return out;
}

bool validate_certificate(const Poset& P, const HomotopyCertificate& cert, const Loop& input) {
    if (cert.rows.empty()) return false;
    if (!same_loop(cert.rows.front(), input)) return false;
    const Loop& last = cert.rows.back();
    if (!same_loop(last, Loop::constant(last.basepoint))) return false;
    for (std::size_t k = 0; k < cert.rows.size(); ++k) {
        if (cert.rows[k].basepoint != input.basepoint) return false;
        if (!validate_loop(P, cert.rows[k]).valid) return false;
        if (k == 0) continue;
        const Loop& a = cert.rows[k - 1];
        const Loop& b = cert.rows[k];
        const int R = std::max(a.radius, b.radius);
        bool le = true, ge = true;
        for (int x = -R; x <= R; ++x) {
            le = le && P.leq(a.value(x), b.value(x));
            ge = ge && P.leq(b.value(x), a.value(x));
        }
        if (!le && !ge) return false;
    }
    return true;
}

namespace {

/// Enumerates the valid loops comparable to `state` in one direction.
void comparable_neighbors(const Poset& P, ElementId bp, int R,
                          const std::vector<ElementId>& state, bool up,
                          std::vector<std::vector<ElementId>>& out) {
    const int len = 2 * R - 1;
    std::vector<ElementId> cur(static_cast<std::size_t>(len));
    // DFS over positions; candidates must dominate (or be dominated by) the
    // old value and respect the zigzag against the previous position and the
    // basepoint walls at +-R.
    auto ok_pair = [&](int x, ElementId left, ElementId right) {
        return even_pos(x) ? P.leq(left, right) : P.leq(right, left);
    };
    auto rec = [&](auto&& self, int pos) -> void {
        if (pos == len) {
            if (cur != state) out.push_back(cur);
            return;
        }
        const int x = pos - (R - 1);
        const ElementId old = state[static_cast<std::size_t>(pos)];
        const ElementId left = pos == 0 ? bp : cur[static_cast<std::size_t>(pos - 1)];
        for (ElementId v = 0; v < P.size(); ++v) {
            if (up ? !P.leq(old, v) : !P.leq(v, old)) continue;
            if (!ok_pair(x - 1, left, v)) continue;
            if (pos == len - 1 && !ok_pair(x, v, bp)) continue;
            cur[static_cast<std::size_t>(pos)] = v;
            self(self, pos + 1);
        }
    };
    rec(rec, 0);
}

}  // namespace

std::vector<Loop> comparable_loops(const Poset& P, const Loop& f, bool up) {
    auto check = validate_loop(P, f);
    if (!check.valid)
        throw Error("comparable_loops requires a valid loop: " + check.violations.front());
    const int R = std::max(f.radius, 1);
    const Loop padded = f.padded_to(R);
    std::vector<std::vector<ElementId>> states;
    comparable_neighbors(P, f.basepoint, R, padded.values, up, states);
    std::vector<Loop> out;
    out.reserve(states.size());
    for (auto& s : states) out.push_back(Loop{f.basepoint, R, std::move(s)});
    return out;
}

NullHomotopyResult null_homotopy_search(const Poset& P, const Loop& f, int radius_cap,
                                        std::size_t step_cap) {
    auto check = validate_loop(P, f);
    if (!check.valid)
        throw Error("null_homotopy_search requires a valid loop: " + check.violations.front());
    if (radius_cap < f.radius) throw Error("radius_cap smaller than the loop radius");
    if (step_cap < 1) throw Error("step_cap must be >= 1");

    NullHomotopyResult res;
    const ElementId bp = f.basepoint;
    const int R = std::max(radius_cap, 1);
    const Loop start_loop = f.padded_to(R);
    const std::vector<ElementId> start = start_loop.values;
    const std::vector<ElementId> target(static_cast<std::size_t>(2 * R - 1), bp);

    auto emit = [&](std::vector<int> path_indices, const std::vector<std::vector<ElementId>>& pool) {
        HomotopyCertificate cert;
        for (int idx : path_indices) cert.rows.push_back(Loop{bp, R, pool[static_cast<std::size_t>(idx)]});
        if (!validate_certificate(P, cert, f))
            throw InternalInvariantViolation("null-homotopy certificate failed re-validation");
        res.certificate = std::move(cert);
        res.status = NullHomotopyStatus::Found;
    };

    std::vector<std::vector<ElementId>> pool{start};
    std::unordered_map<std::vector<ElementId>, int, CornerHash> seen;
    seen.emplace(start, 0);
    std::vector<int> parent{-1};
    std::deque<int> queue{0};
    res.states_explored = 1;

    auto backtrack = [&](int idx) {
        std::vector<int> path;
        for (int i = idx; i >= 0; i = parent[static_cast<std::size_t>(i)]) path.push_back(i);
        std::reverse(path.begin(), path.end());
        return path;
    };

    if (start == target) {
        emit(backtrack(0), pool);
        return res;
    }

    std::vector<std::vector<ElementId>> neighbors;
    while (!queue.empty()) {
        const int cur = queue.front();
        queue.pop_front();
        neighbors.clear();
        comparable_neighbors(P, bp, R, pool[static_cast<std::size_t>(cur)], true, neighbors);
        comparable_neighbors(P, bp, R, pool[static_cast<std::size_t>(cur)], false, neighbors);
        for (auto& nb : neighbors) {
            if (seen.count(nb)) continue;
            if (res.states_explored >= step_cap) {
                res.status = NullHomotopyStatus::StepCapReached;
                return res;
            }
            ++res.states_explored;
            const int idx = static_cast<int>(pool.size());
            pool.push_back(nb);
            seen.emplace(std::move(nb), idx);
            parent.push_back(cur);
            if (pool[static_cast<std::size_t>(idx)] == target) {
                emit(backtrack(idx), pool);
                return res;
            }
            queue.push_back(idx);
        }
    }
    res.status = NullHomotopyStatus::ExhaustedWithinBounds;
    return res;
}

HomologyGroup pi1_abelianized(const Poset& P, const EnumerationCaps& caps) {
    if (!is_connected(P))
        throw NotConnected("pi1_abelianized requires a comparability-connected poset");
    return cubical_homology(P, 1, caps)[1];
}

Loop parse_loop_literal(const Poset& P, const std::string& text) {
    std::istringstream in(text);
    std::vector<std::string> tokens;
    std::string tok;
    while (in >> tok) tokens.push_back(tok);
    if (tokens.empty()) throw ParseError("empty loop literal");
    if (tokens.size() % 2 == 0) throw ParseError("loop literal must alternate label, comparator");
    const int count = static_cast<int>(tokens.size() + 1) / 2;  // labels
    const int r = count - 1 == 0 ? 0 : (count - 1) / 2;
    if (count > 1 && count % 2 == 0)
        throw ParseError("loop literal needs an odd number of labels (symmetric support)");
    Loop f;
    f.radius = r;
    if (r > 0) f.values.resize(static_cast<std::size_t>(2 * r - 1));
    std::vector<ElementId> labels(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        const std::string& l = tokens[static_cast<std::size_t>(2 * i)];
        try {
            labels[static_cast<std::size_t>(i)] = P.id_of(l);
        } catch (const UnknownLabel&) {
            throw ParseError("loop literal uses unknown element: " + l);
        }
        if (i > 0) {
            const std::string& sep = tokens[static_cast<std::size_t>(2 * i - 1)];
            const int x = -r + (i - 1);  // position of the left label
            const std::string expect = even_pos(x) ? ">" : "<";
            if (sep != expect)
                throw ParseError("comparator " + std::to_string(i) + " must be '" + expect +
                                 "' to match the zigzag");
        }
    }
    f.basepoint = labels.front();
    if (labels.back() != f.basepoint)
        throw ParseError("loop literal must start and end at the basepoint");
    for (int x = -(r - 1); x <= r - 1; ++x)
        f.values[static_cast<std::size_t>(x + r - 1)] = labels[static_cast<std::size_t>(x + r)];
    return f;
}

std::string loop_literal(const Poset& P, const Loop& f) {
    std::ostringstream out;
    for (int x = -f.radius; x <= f.radius; ++x) {
        if (x > -f.radius) out << (even_pos(x - 1) ? " > " : " < ");
        out << P.label(f.value(x));
    }
    return out.str();
}

Loop loop_from_json(const Poset& P, const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid loop JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("basepoint") || !j["basepoint"].is_string())
        throw ParseError("loop JSON requires a \"basepoint\" string");
    Loop f;
    try {
        f.basepoint = P.id_of(j["basepoint"].get<std::string>());
    } catch (const UnknownLabel& e) {
        throw ParseError(e.what());
    }
    std::map<int, ElementId> vals;
    if (j.contains("values")) {
        if (!j["values"].is_object()) throw ParseError("loop \"values\" must be an object");
        for (const auto& [key, v] : j["values"].items()) {
            int pos = 0;
            try {
                pos = std::stoi(key);
            } catch (...) {
                throw ParseError("loop value position is not an integer: " + key);
            }
            if (!v.is_string()) throw ParseError("loop values must be element labels");
            try {
                vals[pos] = P.id_of(v.get<std::string>());
            } catch (const UnknownLabel& e) {
                throw ParseError(e.what());
            }
        }
    }
    int r = 0;
    for (const auto& [pos, v] : vals)
        if (v != f.basepoint) r = std::max(r, std::abs(pos) + 1);
    f.radius = r;
    if (r > 0) {
        f.values.resize(static_cast<std::size_t>(2 * r - 1), f.basepoint);
        for (const auto& [pos, v] : vals)
            if (std::abs(pos) <= r - 1) f.values[static_cast<std::size_t>(pos + r - 1)] = v;
    }
    return f;
}

std::string loop_to_json(const Poset& P, const Loop& f) {
    nlohmann::json j;
    j["basepoint"] = P.label(f.basepoint);
    nlohmann::json vals = nlohmann::json::object();
    for (int x = -(f.radius - 1); x <= f.radius - 1; ++x)
        if (f.value(x) != f.basepoint) vals[std::to_string(x)] = P.label(f.value(x));
    j["values"] = vals;
    return j.dump();
}

}  // namespace posettop
