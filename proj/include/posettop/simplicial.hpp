#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "posettop/int_matrix.hpp"
#include "posettop/poset.hpp"
#include "posettop/snf.hpp"

namespace posettop {

/// Vertex list, strictly increasing in the complex's vertex rank order. For
/// order complexes the rank is a linear extension of the poset, so each
/// simplex is listed in its intrinsic chain order.
struct Simplex {
    std::vector<ElementId> vertices;

    int dim() const { return static_cast<int>(vertices.size()) - 1; }
    bool operator==(const Simplex&) const = default;
    bool operator<(const Simplex& o) const { return vertices < o.vertices; }
};

struct SimplexHash {
    std::size_t operator()(const std::vector<ElementId>& v) const {
        std::size_t h = 1469598103934665603ull;
        for (ElementId x : v) {
            h ^= static_cast<std::size_t>(static_cast<std::uint32_t>(x));
            h *= 1099511628211ull;
        }
        return h;
    }
};

/// Finite simplicial complex, face-closed, simplices grouped by dimension
/// and lexicographically sorted within each dimension. Immutable after
/// construction.
class SimplicialComplex {
public:
    /// Builds the closure of the given simplices. Vertex ranks default to id
    /// order; order complexes pass a linear extension instead.
    static SimplicialComplex from_simplices(std::vector<std::string> vertex_labels,
                                            const std::vector<std::vector<ElementId>>& simplices,
                                            std::vector<int> rank = {});

    /// Parses {"vertices": [...]?, "maximal_simplices": [["a","b"],...]} or a
    /// bare JSON array of label lists.
    static SimplicialComplex from_json(const std::string& text);

    int vertex_count() const { return static_cast<int>(vertex_labels_.size()); }
    const std::string& vertex_label(ElementId v) const {
        return vertex_labels_[static_cast<std::size_t>(v)];
    }
    const std::vector<std::string>& vertex_labels() const { return vertex_labels_; }

    /// -1 for the empty complex.
    int dim() const { return static_cast<int>(by_dim_.size()) - 1; }
    std::size_t simplex_count() const;
    const std::vector<Simplex>& simplices(int d) const;
    bool contains(const std::vector<ElementId>& vertices) const;
    /// Index of a simplex within its dimension's sorted basis; -1 if absent.
    int index_of(const std::vector<ElementId>& vertices) const;

    /// Sorts raw vertices into rank order; rejects repeats.
    std::vector<ElementId> canonical(std::vector<ElementId> vertices) const;

    const std::vector<int>& rank() const { return rank_; }

    std::string to_json() const;
    /// DOT of the 1-skeleton.
    std::string to_dot() const;

    bool operator==(const SimplicialComplex&) const = default;

private:
    std::vector<std::string> vertex_labels_;
    std::vector<int> rank_;  // rank_[vertex id] = sort position
    std::vector<std::vector<Simplex>> by_dim_;
    std::vector<std::unordered_map<std::vector<ElementId>, int, SimplexHash>> index_;
};

/// Order complex K(P): simplices are the nonempty chains of P, each carried
/// in poset order. Vertices are P's elements with the same ids.
SimplicialComplex order_complex(const Poset& P);

/// Poset of simplices ordered by face inclusion; element labels are
/// "{v1,v2,...}" in rank order.
Poset face_poset(const SimplicialComplex& K);

/// Boundary matrix C_n -> C_{n-1} with the alternating-sum signs over the
/// intrinsic vertex order; bases are the lexicographically sorted simplex
/// lists. n = 0 yields a 0-row matrix.
IntMatrix simplicial_boundary_matrix(const SimplicialComplex& K, int n);

std::vector<HomologyGroup> simplicial_homology(const SimplicialComplex& K, int max_dim);

/// All pairs (B, A) where A is the unique simplex properly containing B;
/// A is then automatically maximal with dim A = dim B + 1.
std::vector<std::pair<Simplex, Simplex>> free_faces(const SimplicialComplex& K);

struct CollapseStep {
    Simplex free_face;
    Simplex maximal;
};

enum class CollapseStatus {
    Collapsed,        // certificate to a point found
    NoFreeFaces,      // no free face at the start: definitively non-collapsible
    SearchExhausted,  // every branch failed within budget (also definitive)
    BudgetExhausted,  // undecided: ran out of nodes
};

struct CollapseResult {
    CollapseStatus status = CollapseStatus::BudgetExhausted;
    std::optional<std::vector<CollapseStep>> certificate;  // present when Collapsed
    std::size_t nodes_expanded = 0;
};

/// Greedy free-face collapse with backtracking; candidates ordered by
/// (dim B descending, B lex, A lex). Every returned certificate is replayed
/// through verify_collapse_certificate before being emitted.
CollapseResult collapse_search(const SimplicialComplex& K, std::size_t budget = 1'000'000);

bool verify_collapse_certificate(const SimplicialComplex& K,
                                 const std::vector<CollapseStep>& steps);

std::string collapse_certificate_to_json(const SimplicialComplex& K,
                                         const std::vector<CollapseStep>& steps);

}  // namespace posettop
