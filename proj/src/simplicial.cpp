#include "posettop/simplicial.hpp"

#include <algorithm>
#include <set>

#include "json.hpp"
#include "posettop/snf.hpp"

namespace posettop {

namespace {

/// All nonempty proper subsets of a canonical vertex list, canonical order.
std::vector<std::vector<ElementId>> proper_faces(const std::vector<ElementId>& s) {
    std::vector<std::vector<ElementId>> out;
    const std::size_t k = s.size();
    if (k <= 1) return out;
    for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << k); ++mask) {
        std::vector<ElementId> f;
        for (std::size_t i = 0; i < k; ++i)
            if (mask & (std::size_t{1} << i)) f.push_back(s[i]);
        out.push_back(std::move(f));
    }
    return out;
}

}  // namespace

SimplicialComplex SimplicialComplex::from_simplices(
    std::vector<std::string> vertex_labels, const std::vector<std::vector<ElementId>>& simplices,
    std::vector<int> rank) {
    SimplicialComplex K;
    K.vertex_labels_ = std::move(vertex_labels);
    const int n = K.vertex_count();
    if (rank.empty()) {
        rank.resize(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) rank[static_cast<std::size_t>(i)] = i;
    }
    if (static_cast<int>(rank.size()) != n) throw Error("vertex rank size mismatch");
    K.rank_ = std::move(rank);

    std::set<std::vector<ElementId>> closed;
    for (const auto& raw : simplices) {
        auto s = K.canonical(raw);
        closed.insert(s);
        for (auto& f : proper_faces(s)) closed.insert(std::move(f));
    }
    for (const auto& s : closed) {
        const int d = static_cast<int>(s.size()) - 1;
        if (static_cast<int>(K.by_dim_.size()) <= d) {
            K.by_dim_.resize(static_cast<std::size_t>(d) + 1);
            K.index_.resize(static_cast<std::size_t>(d) + 1);
        }
        for (ElementId v : s)
            if (v < 0 || v >= n) throw Error("simplex vertex out of range");
        K.by_dim_[static_cast<std::size_t>(d)].push_back(Simplex{s});
    }
    for (std::size_t d = 0; d < K.by_dim_.size(); ++d) {
        auto& list = K.by_dim_[d];
        std::sort(list.begin(), list.end());
        for (std::size_t i = 0; i < list.size(); ++i)
            K.index_[d].emplace(list[i].vertices, static_cast<int>(i));
    }
    return K;
}

std::vector<ElementId> SimplicialComplex::canonical(std::vector<ElementId> vertices) const {
    if (vertices.empty()) throw Error("empty simplex");
    std::sort(vertices.begin(), vertices.end(), [&](ElementId a, ElementId b) {
        return rank_[static_cast<std::size_t>(a)] < rank_[static_cast<std::size_t>(b)];
    });
    for (std::size_t i = 0; i + 1 < vertices.size(); ++i)
        if (vertices[i] == vertices[i + 1]) throw Error("repeated vertex in simplex");
    return vertices;
}

std::size_t SimplicialComplex::simplex_count() const {
    std::size_t n = 0;
    for (const auto& l : by_dim_) n += l.size();
    return n;
}

const std::vector<Simplex>& SimplicialComplex::simplices(int d) const {
    static const std::vector<Simplex> empty;
    if (d < 0 || d >= static_cast<int>(by_dim_.size())) return empty;
    return by_dim_[static_cast<std::size_t>(d)];
}

bool SimplicialComplex::contains(const std::vector<ElementId>& vertices) const {
    return index_of(vertices) >= 0;
}

int SimplicialComplex::index_of(const std::vector<ElementId>& vertices) const {
    const int d = static_cast<int>(vertices.size()) - 1;
    if (d < 0 || d >= static_cast<int>(index_.size())) return -1;
    auto it = index_[static_cast<std::size_t>(d)].find(vertices);
    return it == index_[static_cast<std::size_t>(d)].end() ? -1 : it->second;
}

SimplicialComplex SimplicialComplex::from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid complex JSON: ") + e.what());
    }
    nlohmann::json maximal;
    if (j.is_array())
        maximal = j;
    else if (j.is_object() && j.contains("maximal_simplices"))
        maximal = j["maximal_simplices"];
    else
        throw ParseError("complex JSON must be a list of maximal simplices");
    std::set<std::string> labels;
    for (const auto& s : maximal) {
        if (!s.is_array() || s.empty()) throw ParseError("each simplex must be a nonempty array");
        for (const auto& v : s) {
            if (!v.is_string()) throw ParseError("simplex vertices must be strings");
            labels.insert(v.get<std::string>());
        }
    }
    std::vector<std::string> vertex_labels(labels.begin(), labels.end());
    std::unordered_map<std::string, ElementId> ids;
    for (std::size_t i = 0; i < vertex_labels.size(); ++i)
        ids.emplace(vertex_labels[i], static_cast<ElementId>(i));
    std::vector<std::vector<ElementId>> simplices;
    for (const auto& s : maximal) {
        std::vector<ElementId> ident;
        for (const auto& v : s) ident.push_back(ids.at(v.get<std::string>()));
        simplices.push_back(std::move(ident));
    }
    return from_simplices(std::move(vertex_labels), simplices);
}

std::string SimplicialComplex::to_json() const {
    // Maximal simplices: those that are a proper face of nothing.
    nlohmann::json arr = nlohmann::json::array();
    for (int d = dim(); d >= 0; --d) {
        for (const auto& s : simplices(d)) {
            bool maximal = true;
            for (int dd = d + 1; dd <= dim() && maximal; ++dd)
                for (const auto& t : simplices(dd)) {
                    if (std::includes(t.vertices.begin(), t.vertices.end(), s.vertices.begin(),
                                      s.vertices.end(),
                                      [&](ElementId a, ElementId b) {
                                          return rank_[static_cast<std::size_t>(a)] <
                                                 rank_[static_cast<std::size_t>(b)];
                                      })) {
                        maximal = false;
                        break;
                    }
                }
            if (maximal) {
                nlohmann::json js = nlohmann::json::array();
                for (ElementId v : s.vertices) js.push_back(vertex_label(v));
                arr.push_back(js);
            }
        }
    }
    return arr.dump();
}

std::string SimplicialComplex::to_dot() const {
    std::string out = "graph skeleton {\n";
    for (int v = 0; v < vertex_count(); ++v) out += "  \"" + vertex_label(v) + "\";\n";
    for (const auto& e : simplices(1))
        out += "  \"" + vertex_label(e.vertices[0]) + "\" -- \"" + vertex_label(e.vertices[1]) +
               "\";\n";
    out += "}\n";
    return out;
}

SimplicialComplex order_complex(const Poset& P) {
    if (P.size() == 0) throw Error("order complex of an empty poset");
    const int n = P.size();
    // Linear extension (Kahn, smallest id first) fixes the vertex rank.
    std::vector<int> indeg(static_cast<std::size_t>(n), 0);
    for (auto [a, b] : P.covers()) ++indeg[static_cast<std::size_t>(b)];
    std::vector<int> rank(static_cast<std::size_t>(n), -1);
    std::vector<bool> placed(static_cast<std::size_t>(n), false);
    for (int pos = 0; pos < n; ++pos) {
        int pick = -1;
        for (int v = 0; v < n && pick < 0; ++v)
            if (!placed[static_cast<std::size_t>(v)] && indeg[static_cast<std::size_t>(v)] == 0)
                pick = v;
        placed[static_cast<std::size_t>(pick)] = true;
        rank[static_cast<std::size_t>(pick)] = pos;
        for (auto [a, b] : P.covers())
            if (a == pick) --indeg[static_cast<std::size_t>(b)];
    }

    // Enumerate all chains by DFS in rank order.
    std::vector<ElementId> by_rank(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) by_rank[static_cast<std::size_t>(rank[static_cast<std::size_t>(v)])] = v;

    std::vector<std::vector<ElementId>> chains;
    std::vector<ElementId> cur;
    auto dfs = [&](auto&& self, ElementId last) -> void {
        chains.push_back(cur);
        for (int pos = rank[static_cast<std::size_t>(last)] + 1; pos < n; ++pos) {
            ElementId w = by_rank[static_cast<std::size_t>(pos)];
            if (P.lt(last, w)) {
                cur.push_back(w);
                self(self, w);
                cur.pop_back();
            }
        }
    };
    for (int pos = 0; pos < n; ++pos) {
        ElementId v = by_rank[static_cast<std::size_t>(pos)];
        cur.push_back(v);
        dfs(dfs, v);
        cur.pop_back();
    }
    return SimplicialComplex::from_simplices(P.labels(), chains, rank);
}

Poset face_poset(const SimplicialComplex& K) {
    std::vector<std::string> labels;
    std::vector<std::vector<ElementId>> all;
    for (int d = 0; d <= K.dim(); ++d)
        for (const auto& s : K.simplices(d)) {
            std::string l = "{";
            for (std::size_t i = 0; i < s.vertices.size(); ++i) {
                if (i) l += ",";
                l += K.vertex_label(s.vertices[i]);
            }
            l += "}";
            labels.push_back(std::move(l));
            all.push_back(s.vertices);
        }
    auto by_rank = [&](ElementId a, ElementId b) {
        return K.rank()[static_cast<std::size_t>(a)] < K.rank()[static_cast<std::size_t>(b)];
    };
    std::vector<std::pair<std::string, std::string>> pairs;
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = 0; j < all.size(); ++j) {
            if (all[i].size() + 1 != all[j].size()) continue;
            if (std::includes(all[j].begin(), all[j].end(), all[i].begin(), all[i].end(), by_rank))
                pairs.emplace_back(labels[i], labels[j]);
        }
    return Poset::from_relations(std::move(labels), pairs);
}

IntMatrix simplicial_boundary_matrix(const SimplicialComplex& K, int n) {
    const auto& rows = K.simplices(n - 1);
    const auto& cols = K.simplices(n);
    if (n == 0) return IntMatrix(0, static_cast<int>(cols.size()));
    IntMatrix M(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (int c = 0; c < static_cast<int>(cols.size()); ++c) {
        const auto& s = cols[static_cast<std::size_t>(c)].vertices;
        long long sign = 1;
        for (std::size_t i = 0; i < s.size(); ++i, sign = -sign) {
            std::vector<ElementId> f;
            f.reserve(s.size() - 1);
            for (std::size_t k = 0; k < s.size(); ++k)
                if (k != i) f.push_back(s[k]);
            const int r = K.index_of(f);
            if (r < 0) throw InternalInvariantViolation("complex not face-closed");
            M.add_to(r, c, sign);
        }
    }
    return M;
}

std::vector<HomologyGroup> simplicial_homology(const SimplicialComplex& K, int max_dim) {
    std::vector<HomologyGroup> out;
    for (int p = 0; p <= max_dim; ++p)
        out.push_back(homology_from_boundaries(simplicial_boundary_matrix(K, p),
                                               simplicial_boundary_matrix(K, p + 1)));
    return out;
}

namespace {

/// Free faces of an explicit simplex set, ordered (dim B desc, B lex, A lex).
std::vector<std::pair<std::vector<ElementId>, std::vector<ElementId>>> free_face_pairs(
    const std::set<std::vector<ElementId>>& cur) {
    std::map<std::vector<ElementId>, std::pair<int, std::vector<ElementId>>> cofaces;
    for (const auto& s : cur)
        for (auto& f : proper_faces(s)) {
            auto& e = cofaces[f];
            e.first += 1;
            e.second = s;
        }
    std::vector<std::pair<std::vector<ElementId>, std::vector<ElementId>>> out;
    for (const auto& [f, e] : cofaces)
        if (e.first == 1 && cur.count(f)) out.emplace_back(f, e.second);
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
        if (x.first.size() != y.first.size()) return x.first.size() > y.first.size();
        if (x.first != y.first) return x.first < y.first;
        return x.second < y.second;
    });
    return out;
}

}  // namespace

std::vector<std::pair<Simplex, Simplex>> free_faces(const SimplicialComplex& K) {
    std::set<std::vector<ElementId>> cur;
    for (int d = 0; d <= K.dim(); ++d)
        for (const auto& s : K.simplices(d)) cur.insert(s.vertices);
    std::vector<std::pair<Simplex, Simplex>> out;
    for (auto& [f, m] : free_face_pairs(cur)) out.push_back({Simplex{f}, Simplex{m}});
    return out;
}

namespace {

bool collapse_dfs(std::set<std::vector<ElementId>>& cur, std::vector<CollapseStep>& steps,
                  std::size_t budget, std::size_t& nodes, bool& budget_hit) {
    if (cur.size() == 1 && cur.begin()->size() == 1) return true;
    auto candidates = free_face_pairs(cur);
    for (const auto& [f, m] : candidates) {
        if (nodes >= budget) {
            budget_hit = true;
            return false;
        }
        ++nodes;
        cur.erase(f);
        cur.erase(m);
        steps.push_back({Simplex{f}, Simplex{m}});
        if (collapse_dfs(cur, steps, budget, nodes, budget_hit)) return true;
        steps.pop_back();
        cur.insert(f);
        cur.insert(m);
        if (budget_hit) return false;
    }
    return false;
}

}  // namespace

CollapseResult collapse_search(const SimplicialComplex& K, std::size_t budget) {
    if (budget < 1) throw Error("collapse_search requires budget >= 1");
    CollapseResult res;
    std::set<std::vector<ElementId>> cur;
    for (int d = 0; d <= K.dim(); ++d)
        for (const auto& s : K.simplices(d)) cur.insert(s.vertices);
    if (cur.size() == 1 && cur.begin()->size() == 1) {
        res.status = CollapseStatus::Collapsed;
        res.certificate.emplace();
        return res;
    }
    if (free_face_pairs(cur).empty()) {
        res.status = CollapseStatus::NoFreeFaces;
        return res;
    }
    std::vector<CollapseStep> steps;
    bool budget_hit = false;
    const bool found = collapse_dfs(cur, steps, budget, res.nodes_expanded, budget_hit);
    if (found) {
        if (!verify_collapse_certificate(K, steps))
            throw InternalInvariantViolation("collapse certificate failed re-verification");
        res.status = CollapseStatus::Collapsed;
        res.certificate = std::move(steps);
    } else {
        res.status = budget_hit ? CollapseStatus::BudgetExhausted : CollapseStatus::SearchExhausted;
    }
    return res;
}

bool verify_collapse_certificate(const SimplicialComplex& K,
                                 const std::vector<CollapseStep>& steps) {
    std::set<std::vector<ElementId>> cur;
    for (int d = 0; d <= K.dim(); ++d)
        for (const auto& s : K.simplices(d)) cur.insert(s.vertices);
    auto by_rank = [&](ElementId a, ElementId b) {
        return K.rank()[static_cast<std::size_t>(a)] < K.rank()[static_cast<std::size_t>(b)];
    };
    for (const auto& step : steps) {
        const auto& B = step.free_face.vertices;
        const auto& A = step.maximal.vertices;
        if (!cur.count(B) || !cur.count(A)) return false;
        if (A.size() != B.size() + 1) return false;
        if (!std::includes(A.begin(), A.end(), B.begin(), B.end(), by_rank)) return false;
        // B must be a proper face of A and of nothing else.
        for (const auto& s : cur) {
            if (s == A || s.size() <= B.size()) continue;
            if (std::includes(s.begin(), s.end(), B.begin(), B.end(), by_rank)) return false;
        }
        cur.erase(B);
        cur.erase(A);
    }
    return cur.size() == 1 && cur.begin()->size() == 1;
}

std::string collapse_certificate_to_json(const SimplicialComplex& K,
                                         const std::vector<CollapseStep>& steps) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& s : steps) {
        nlohmann::json f = nlohmann::json::array(), m = nlohmann::json::array();
        for (ElementId v : s.free_face.vertices) f.push_back(K.vertex_label(v));
        for (ElementId v : s.maximal.vertices) m.push_back(K.vertex_label(v));
        arr.push_back({{"free", f}, {"maximal", m}});
    }
    return arr.dump();
}

}  // namespace posettop
