#include "doctest.h"

#include <set>

#include "posettop/builtins.hpp"
#include "posettop/simplicial.hpp"
#include "posettop/snf.hpp"
#include "support/oracles.hpp"

using namespace posettop;

namespace {

std::set<std::vector<std::string>> simplex_labels(const SimplicialComplex& K, int d) {
    std::set<std::vector<std::string>> out;
    for (const auto& s : K.simplices(d)) {
        std::vector<std::string> l;
        for (ElementId v : s.vertices) l.push_back(K.vertex_label(v));
        out.insert(l);
    }
    return out;
}

/// Chain counting by direct subset filtering, independent of order_complex.
std::size_t count_chains(const Poset& P, int card) {
    std::size_t count = 0;
    std::vector<int> pick;
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(pick.size()) == card) {
            ++count;
            return;
        }
        for (int v = start; v < P.size(); ++v) {
            bool comparable = true;
            for (int u : pick) comparable = comparable && (P.leq(u, v) || P.leq(v, u));
            if (comparable) {
                pick.push_back(v);
                self(self, v + 1);
                pick.pop_back();
            }
        }
    };
    rec(rec, 0);
    return count;
}

}  // namespace

TEST_CASE("order complex of a chain is a full simplex") {
    auto K = order_complex(builtin_poset("chain3"));
    CHECK(K.simplex_count() == 7);
    CHECK(K.dim() == 2);
    CHECK(simplex_labels(K, 2) == std::set<std::vector<std::string>>{{"a", "b", "c"}});
}

TEST_CASE("order complex of circle4 is a 4-cycle") {
    auto K = order_complex(builtin_poset("circle4"));
    CHECK(K.simplices(0).size() == 4);
    CHECK(K.simplices(1).size() == 4);
    CHECK(K.dim() == 1);
    CHECK(simplex_labels(K, 1) == std::set<std::vector<std::string>>{
                                      {"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}});
}

TEST_CASE("order complex of sphere6 is the octahedron boundary") {
    auto K = order_complex(builtin_poset("sphere6"));
    CHECK(K.simplices(0).size() == 6);
    CHECK(K.simplices(1).size() == 12);
    CHECK(K.simplices(2).size() == 8);
    CHECK(K.dim() == 2);
}

TEST_CASE("simplex counts match subset-filter chain counts") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        auto P = random_poset(7, 0.35, seed);
        auto K = order_complex(P);
        for (int d = 0; d <= K.dim() + 1; ++d)
            CHECK(K.simplices(d).size() == count_chains(P, d + 1));
    }
}

TEST_CASE("order complex respects poset order even when ids are shuffled") {
    // c < a in a poset listed out of order: the simplex must read [c, a].
    auto P = Poset::from_relations({"a", "c"}, {{"c", "a"}});
    auto K = order_complex(P);
    REQUIRE(K.simplices(1).size() == 1);
    const auto& e = K.simplices(1)[0].vertices;
    CHECK(K.vertex_label(e[0]) == "c");
    CHECK(K.vertex_label(e[1]) == "a");
}

TEST_CASE("face poset") {
    auto edge = SimplicialComplex::from_simplices({"a", "b"}, {{0, 1}});
    auto FP = face_poset(edge);
    CHECK(FP.size() == 3);
    CHECK(FP.maximum().has_value());
    CHECK(FP.label(*FP.maximum()) == "{a,b}");

    auto full = order_complex(builtin_poset("chain3"));
    auto FP2 = face_poset(full);
    CHECK(FP2.size() == 7);
    CHECK(FP2.homogeneity() == 2);

    auto pt = order_complex(Poset::from_relations({"x"}, {}));
    CHECK(face_poset(pt).size() == 1);
}

TEST_CASE("boundary matrices") {
    auto edge = SimplicialComplex::from_simplices({"a", "b"}, {{0, 1}});
    auto d1 = simplicial_boundary_matrix(edge, 1);
    CHECK(d1.get(0, 0) == -1);  // a
    CHECK(d1.get(1, 0) == 1);   // b

    auto tri = order_complex(builtin_poset("chain3"));
    auto d2 = simplicial_boundary_matrix(tri, 2);
    REQUIRE(d2.cols() == 1);
    // rows are the edges ab, ac, bc in lex order: [b,c] - [a,c] + [a,b]
    CHECK(d2.get(0, 0) == 1);
    CHECK(d2.get(1, 0) == -1);
    CHECK(d2.get(2, 0) == 1);

    auto octa = order_complex(builtin_poset("sphere6"));
    CHECK(simplicial_boundary_matrix(octa, 1)
              .multiply(simplicial_boundary_matrix(octa, 2))
              .is_zero());
}

TEST_CASE("boundary composition vanishes on random order complexes") {
    for (std::uint64_t seed = 20; seed < 30; ++seed) {
        auto K = order_complex(random_poset(6, 0.4, seed));
        for (int n = 1; n <= K.dim(); ++n)
            CHECK(simplicial_boundary_matrix(K, n)
                      .multiply(simplicial_boundary_matrix(K, n + 1))
                      .is_zero());
    }
}

TEST_CASE("simplicial homology of the standard models") {
    auto circle = simplicial_homology(order_complex(builtin_poset("circle4")), 1);
    CHECK(circle[0] == HomologyGroup{1, {}});
    CHECK(circle[1] == HomologyGroup{1, {}});

    auto sphere = simplicial_homology(order_complex(builtin_poset("sphere6")), 2);
    CHECK(sphere[0] == HomologyGroup{1, {}});
    CHECK(sphere[1] == HomologyGroup{0, {}});
    CHECK(sphere[2] == HomologyGroup{1, {}});
}

TEST_CASE("free faces") {
    auto tri = order_complex(builtin_poset("chain3"));
    auto ff = free_faces(tri);
    bool found = false;
    for (auto& [b, a] : ff)
        if (b.vertices == std::vector<ElementId>{0, 1} && a.vertices.size() == 3) found = true;
    CHECK(found);

    CHECK(free_faces(order_complex(builtin_poset("sphere6"))).empty());

    auto edge = SimplicialComplex::from_simplices({"a", "b"}, {{0, 1}});
    CHECK(free_faces(edge).size() == 2);
}

TEST_CASE("collapse of the full 2-simplex") {
    auto tri = order_complex(builtin_poset("chain3"));
    auto res = collapse_search(tri);
    REQUIRE(res.status == CollapseStatus::Collapsed);
    CHECK(res.certificate->size() == 3);
    CHECK(verify_collapse_certificate(tri, *res.certificate));
}

TEST_CASE("octahedron is definitively non-collapsible") {
    auto res = collapse_search(order_complex(builtin_poset("sphere6")));
    CHECK(res.status == CollapseStatus::NoFreeFaces);
}

TEST_CASE("order complexes of posets with a maximum collapse") {
    std::vector<Poset> cases{builtin_poset("max5"), builtin_poset("chain4")};
    for (std::uint64_t seed = 40; seed < 44; ++seed)
        cases.push_back(adjoin_maximum(random_poset(6, 0.3, seed)));
    for (const auto& P : cases) {
        auto K = order_complex(P);
        auto res = collapse_search(K);
        REQUIRE(res.status == CollapseStatus::Collapsed);
        CHECK(verify_collapse_certificate(K, *res.certificate));
    }
}

TEST_CASE("tampered certificates are rejected") {
    auto tri = order_complex(builtin_poset("chain3"));
    auto res = collapse_search(tri);
    REQUIRE(res.status == CollapseStatus::Collapsed);
    auto bad = *res.certificate;
    std::swap(bad[0], bad[2]);
    CHECK_FALSE(verify_collapse_certificate(tri, bad));
    auto truncated = *res.certificate;
    truncated.pop_back();
    CHECK_FALSE(verify_collapse_certificate(tri, truncated));
}

TEST_CASE("budget exhaustion is reported distinctly") {
    auto tri = order_complex(builtin_poset("chain4"));
    auto res = collapse_search(tri, 1);
    CHECK(res.status == CollapseStatus::BudgetExhausted);
}

TEST_CASE("complex json round trip") {
    auto K = order_complex(builtin_poset("sphere6"));
    auto J = SimplicialComplex::from_json(K.to_json());
    CHECK(J.simplices(2).size() == 8);
    CHECK(J.simplex_count() == K.simplex_count());
    CHECK_THROWS_AS(SimplicialComplex::from_json("{\"nope\": 1}"), ParseError);
    CHECK_THROWS_AS(SimplicialComplex::from_json("[[]]"), ParseError);
}

TEST_CASE("collapse certificate json") {
    auto tri = order_complex(builtin_poset("chain3"));
    auto res = collapse_search(tri);
    REQUIRE(res.certificate.has_value());
    auto json = collapse_certificate_to_json(tri, *res.certificate);
    CHECK(json.find("\"free\"") != std::string::npos);
    CHECK(json.find("\"maximal\"") != std::string::npos);
}

TEST_CASE("dot export of the 1-skeleton") {
    auto K = order_complex(builtin_poset("circle4"));
    auto dot = K.to_dot();
    CHECK(dot.find("\"a\" -- \"c\"") != std::string::npos);
}

TEST_CASE("order complex dimension equals homogeneity for homogeneous posets") {
    for (auto name : {"circle4", "sphere6", "chain3"}) {
        auto P = builtin_poset(name);
        REQUIRE(P.homogeneity().has_value());
        CHECK(order_complex(P).dim() == *P.homogeneity());
    }
}
