#include "posettop/poset.hpp"

#include <algorithm>
#include <random>
#include <unordered_map>
#include <unordered_set>

#include "posettop/rng.hpp"

namespace posettop {

namespace {

void transitive_close(BitMatrix& m) {
    const int n = m.size();
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            if (m.get(i, k)) m.or_row(i, k);
}

}  // namespace

Poset Poset::from_relations(std::vector<std::string> labels,
                            const std::vector<std::pair<std::string, std::string>>& pairs) {
    std::unordered_map<std::string, ElementId> index;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (!index.emplace(labels[i], static_cast<ElementId>(i)).second)
            throw DuplicateLabel("duplicate label: " + labels[i]);
    }
    const int n = static_cast<int>(labels.size());
    BitMatrix leq(n);
    for (int i = 0; i < n; ++i) leq.set(i, i);
    for (const auto& [a, b] : pairs) {
        auto ia = index.find(a);
        auto ib = index.find(b);
        if (ia == index.end()) throw UnknownLabel("unknown label: " + a);
        if (ib == index.end()) throw UnknownLabel("unknown label: " + b);
        if (ia->second == ib->second)
            throw CycleDetected("relation " + a + " < " + b + " implies a cycle");
        leq.set(ia->second, ib->second);
    }
    transitive_close(leq);
    Poset P;
    P.labels_ = std::move(labels);
    P.leq_ = std::move(leq);
    P.finalize();
    return P;
}

Poset Poset::from_order_matrix(std::vector<std::string> labels, BitMatrix leq) {
    std::unordered_set<std::string> seen;
    for (const auto& l : labels)
        if (!seen.insert(l).second) throw DuplicateLabel("duplicate label: " + l);
    const int n = static_cast<int>(labels.size());
    for (int i = 0; i < n; ++i) {
        if (!leq.get(i, i)) throw Error("order matrix not reflexive");
        for (int j = 0; j < n; ++j)
            if (leq.get(i, j))
                for (int k = 0; k < n; ++k)
                    if (leq.get(j, k) && !leq.get(i, k)) throw Error("order matrix not transitive");
    }
    Poset P;
    P.labels_ = std::move(labels);
    P.leq_ = std::move(leq);
    P.finalize();
    return P;
}

void Poset::finalize() {
    const int n = size();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (leq_.get(i, j) && leq_.get(j, i))
                throw CycleDetected("relations imply a cycle through " + labels_[i] + " and " +
                                    labels_[j]);

    geq_ = BitMatrix(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (leq_.get(i, j)) geq_.set(j, i);

    // Cover pairs: strict pairs with empty strict interval. The interval test
    // intersects the strict up-row of x with the strict down-row of y.
    covers_.clear();
    const int words = leq_.words_per_row();
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            if (x == y || !leq_.get(x, y)) continue;
            auto up = leq_.row(x);
            auto down = geq_.row(y);
            bool between = false;
            for (int w = 0; w < words && !between; ++w) {
                std::uint64_t common = up[w] & down[w];
                if ((x >> 6) == w) common &= ~(std::uint64_t{1} << (x & 63));
                if ((y >> 6) == w) common &= ~(std::uint64_t{1} << (y & 63));
                between = common != 0;
            }
            if (!between) covers_.emplace_back(x, y);
        }
    }
    std::sort(covers_.begin(), covers_.end());
}

ElementId Poset::id_of(const std::string& label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == label) return static_cast<ElementId>(i);
    throw UnknownLabel("unknown label: " + label);
}

std::vector<ElementId> Poset::down_set(ElementId x) const {
    std::vector<ElementId> out;
    for (int y = 0; y < size(); ++y)
        if (leq_.get(y, x)) out.push_back(y);
    return out;
}

std::vector<ElementId> Poset::up_set(ElementId x) const {
    std::vector<ElementId> out;
    for (int y = 0; y < size(); ++y)
        if (leq_.get(x, y)) out.push_back(y);
    return out;
}

std::vector<ElementId> Poset::strict_down_set(ElementId x) const {
    auto out = down_set(x);
    std::erase(out, x);
    return out;
}

std::vector<ElementId> Poset::strict_up_set(ElementId x) const {
    auto out = up_set(x);
    std::erase(out, x);
    return out;
}

std::vector<std::vector<ElementId>> Poset::maximal_chains() const {
    const int n = size();
    std::vector<std::vector<ElementId>> succ(n);
    std::vector<bool> has_pred(n, false);
    for (auto [a, b] : covers_) {
        succ[a].push_back(b);
        has_pred[b] = true;
    }
    std::vector<std::vector<ElementId>> out;
    std::vector<ElementId> path;
    auto dfs = [&](auto&& self, ElementId v) -> void {
        path.push_back(v);
        if (succ[v].empty()) {
            out.push_back(path);
        } else {
            for (ElementId w : succ[v]) self(self, w);
        }
        path.pop_back();
    };
    for (int v = 0; v < n; ++v)
        if (!has_pred[v]) dfs(dfs, v);
    return out;
}

std::optional<int> Poset::homogeneity() const {
    if (size() == 0) return std::nullopt;
    auto chains = maximal_chains();
    const std::size_t card = chains.front().size();
    for (const auto& c : chains)
        if (c.size() != card) return std::nullopt;
    return static_cast<int>(card) - 1;
}

int Poset::degree(ElementId x) const {
    if (!homogeneity())
        throw NotHomogeneous("degree is defined only for homogeneous posets");
    // Longest cover path into x; in a homogeneous poset this is the rank.
    std::vector<int> depth(size(), 0);
    // covers_ is sorted by (a, b); process in a topological sweep.
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto [a, b] : covers_) {
            if (depth[b] < depth[a] + 1) {
                depth[b] = depth[a] + 1;
                changed = true;
            }
        }
    }
    return depth[x];
}

std::optional<ElementId> Poset::maximum() const {
    for (int x = 0; x < size(); ++x) {
        bool top = true;
        for (int y = 0; y < size() && top; ++y) top = leq_.get(y, x);
        if (top) return x;
    }
    return std::nullopt;
}

std::optional<ElementId> Poset::minimum() const {
    for (int x = 0; x < size(); ++x) {
        bool bottom = true;
        for (int y = 0; y < size() && bottom; ++y) bottom = leq_.get(x, y);
        if (bottom) return x;
    }
    return std::nullopt;
}

Poset Poset::restrict(const std::vector<ElementId>& keep) const {
    std::vector<std::string> labels;
    labels.reserve(keep.size());
    for (ElementId x : keep) labels.push_back(labels_[static_cast<std::size_t>(x)]);
    BitMatrix leq(static_cast<int>(keep.size()));
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t j = 0; j < keep.size(); ++j)
            if (leq_.get(keep[i], keep[j])) leq.set(static_cast<int>(i), static_cast<int>(j));
    return from_order_matrix(std::move(labels), std::move(leq));
}

Poset product(const Poset& P, const Poset& Q) {
    const int np = P.size(), nq = Q.size();
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(np) * nq);
    for (int p = 0; p < np; ++p)
        for (int q = 0; q < nq; ++q)
            labels.push_back("(" + P.label(p) + "," + Q.label(q) + ")");
    BitMatrix leq(np * nq);
    for (int p = 0; p < np; ++p)
        for (int q = 0; q < nq; ++q)
            for (int p2 = 0; p2 < np; ++p2)
                for (int q2 = 0; q2 < nq; ++q2)
                    if (P.leq(p, p2) && Q.leq(q, q2)) leq.set(p * nq + q, p2 * nq + q2);
    return Poset::from_order_matrix(std::move(labels), std::move(leq));
}

Poset fence(int p) {
    if (p < 0) throw Error("fence requires p >= 0");
    std::vector<std::string> labels;
    std::vector<std::pair<std::string, std::string>> pairs;
    for (int i = 0; i <= p; ++i) labels.push_back(std::to_string(i));
    for (int i = 0; i + 1 <= p; i += 2) pairs.emplace_back(std::to_string(i), std::to_string(i + 1));
    for (int j = 2; j <= p; j += 2) pairs.emplace_back(std::to_string(j), std::to_string(j - 1));
    return Poset::from_relations(std::move(labels), pairs);
}

Poset remove_beat_points(const Poset& P) {
    Poset cur = P;
    for (;;) {
        int beat = -1;
        for (int x = 0; x < cur.size() && beat < 0; ++x) {
            auto down = cur.strict_down_set(x);
            if (!down.empty()) {
                for (ElementId m : down) {
                    bool top = true;
                    for (ElementId y : down) top = top && cur.leq(y, m);
                    if (top) {
                        beat = x;
                        break;
                    }
                }
            }
            if (beat >= 0) break;
            auto up = cur.strict_up_set(x);
            if (!up.empty()) {
                for (ElementId m : up) {
                    bool bottom = true;
                    for (ElementId y : up) bottom = bottom && cur.leq(m, y);
                    if (bottom) {
                        beat = x;
                        break;
                    }
                }
            }
        }
        if (beat < 0) return cur;
        std::vector<ElementId> keep;
        for (int x = 0; x < cur.size(); ++x)
            if (x != beat) keep.push_back(x);
        cur = cur.restrict(keep);
    }
}

Poset random_poset(int n, double density, std::uint64_t seed) {
    if (n < 1) throw Error("random_poset requires n >= 1");
    std::mt19937_64 gen(seed);
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back("x" + std::to_string(i));
    std::vector<std::pair<std::string, std::string>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (unit_draw(gen) < density) pairs.emplace_back(labels[i], labels[j]);
    return Poset::from_relations(std::move(labels), pairs);
}

bool is_connected(const Poset& P) {
    const int n = P.size();
    if (n == 0) return false;
    std::vector<int> comp(n);
    for (int i = 0; i < n; ++i) comp[i] = i;
    auto find = [&](int x) {
        while (comp[x] != x) x = comp[x] = comp[comp[x]];
        return x;
    };
    for (auto [a, b] : P.covers()) comp[find(a)] = find(b);
    const int root = find(0);
    for (int i = 1; i < n; ++i)
        if (find(i) != root) return false;
    return true;
}

Poset adjoin_maximum(const Poset& P, const std::string& top_label) {
    std::vector<std::string> labels = P.labels();
    for (const auto& l : labels)
        if (l == top_label) throw DuplicateLabel("top label already present: " + top_label);
    labels.push_back(top_label);
    std::vector<std::pair<std::string, std::string>> pairs;
    for (auto [a, b] : P.covers()) pairs.emplace_back(P.label(a), P.label(b));
    for (const auto& l : P.labels()) pairs.emplace_back(l, top_label);
    return Poset::from_relations(std::move(labels), pairs);
}

}  // namespace posettop
