#include <catch2/catch_amalgamated.hpp>

#include "corpus.hpp"
#include "symgraph/homology.hpp"
#include "symgraph/sym_product.hpp"

using namespace symgraph;

namespace {

unsigned long long stirling2(int m, int k) {
    if (m == 0 && k == 0) return 1;
    if (m == 0 || k == 0) return 0;
    return stirling2(m - 1, k - 1) + k * stirling2(m - 1, k);
}
unsigned long long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    unsigned long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// cell count of the n-fold product of a single edge in dimension d:
// choose which positions hold the arrow, a vertex value for the rest, and an
// ordered partition of the arrow positions into d blocks
unsigned long long product_f_oracle(int n, int d) {
    unsigned long long total = 0;
    for (int m = d; m <= n; ++m) {
        unsigned long long ordered_partitions = corpus::factorial(d) * stirling2(m, d);
        if (d == 0 && m > 0) ordered_partitions = 0;
        total += binom(n, m) * (1ull << (n - m)) * ordered_partitions;
    }
    return total;
}

}  // namespace

TEST_CASE("product complex of a single edge") {
    CHECK(f_vector(product_complex(corpus::edge(), 1).complex) ==
          std::vector<std::size_t>{2, 1});
    CHECK(f_vector(product_complex(corpus::edge(), 2).complex) ==
          std::vector<std::size_t>{4, 5, 2});
    ProductComplex p3 = product_complex(corpus::edge(), 3);
    CHECK(f_vector(p3.complex) == std::vector<std::size_t>{8, 19, 18, 6});
    CHECK_FALSE(validate(p3.complex).has_value());

    for (int n = 1; n <= 4; ++n) {
        auto f = f_vector(product_complex(corpus::edge(), n).complex);
        for (int d = 0; d <= n; ++d) {
            CAPTURE(n, d);
            CHECK(f[d] == product_f_oracle(n, d));
        }
    }
}

TEST_CASE("sym_complex matches brute-force counts") {
    CHECK(f_vector(sym_complex(corpus::edge(), 2).complex) ==
          std::vector<std::size_t>{3, 3, 1});
    CHECK(f_vector(sym_complex(corpus::cycle2(), 2).complex) ==
          std::vector<std::size_t>{3, 7, 4});
    CHECK(f_vector(sym_complex(corpus::path2(), 2).complex) ==
          std::vector<std::size_t>{6, 9, 4});
    // closed form for the single edge: f_k = C(n+1, k+1)
    for (int n = 1; n <= 8; ++n) {
        auto f = f_vector(sym_complex(corpus::edge(), n).complex);
        REQUIRE(f.size() == static_cast<std::size_t>(n) + 1);
        for (int k = 0; k <= n; ++k) CHECK(f[k] == binom(n + 1, k + 1));
    }
}

TEST_CASE("sym_complex conventions") {
    SECTION("n = 0 gives the one-point complex") {
        SymComplex pt = sym_complex(corpus::cycle4(), 0);
        CHECK(f_vector(pt.complex) == std::vector<std::size_t>{1});
    }
    SECTION("top dimension is n when the graph has an arrow") {
        for (int n = 1; n <= 3; ++n)
            CHECK(sym_complex(corpus::zigzag(), n).complex.top_dimension() == n);
    }
    SECTION("cells are lexicographic in the concatenated (a, r) vector") {
        SymComplex sc = sym_complex(corpus::edge(), 2);
        REQUIRE(sc.cells[0].size() == 3);
        CHECK(sc.cells[0][0].a == std::vector<int>{0, 2});
        CHECK(sc.cells[0][1].a == std::vector<int>{1, 1});
        CHECK(sc.cells[0][2].a == std::vector<int>{2, 0});
    }
}

TEST_CASE("sym_face applies the three-case rule") {
    OrientedGraph g = corpus::edge();
    SymCell c{{0, 0}, {{1, 1}}};
    CHECK(sym_face(g, c, 0) == SymCell{{1, 0}, {{1}}});
    CHECK(sym_face(g, c, 1) == SymCell{{0, 0}, {{2}}});
    CHECK(sym_face(g, c, 2) == SymCell{{0, 1}, {{1}}});
    CHECK_THROWS_AS(sym_face(g, c, 3), error);
    CHECK_THROWS_AS(sym_face(g, SymCell{{2, 0}, {{}}}, 0), error);
}

namespace {

// orbit labels are a bijection onto the direct cells, commuting with faces
void check_quotient_matches_direct(const OrientedGraph& g, int n) {
    SymComplex direct = sym_complex(g, n);
    SymQuotient quot = quotient_sym(g, n);
    REQUIRE(f_vector(direct.complex) == f_vector(quot.complex));
    for (int dim = 0; dim <= direct.complex.top_dimension(); ++dim) {
        for (std::size_t c = 0; c < direct.complex.size(dim); ++c) {
            auto ref = quot.complex.find(direct.complex.key(dim, c));
            REQUIRE(ref.has_value());
            REQUIRE(ref->first == dim);
            if (dim > 0)
                for (int i = 0; i <= dim; ++i)
                    CHECK(quot.complex.key(dim - 1, quot.complex.face(dim, ref->second, i)) ==
                          direct.complex.key(dim - 1, direct.complex.face(dim, c, i)));
        }
    }
}

}  // namespace

TEST_CASE("quotient construction agrees with the direct one") {
    check_quotient_matches_direct(corpus::edge(), 2);
    check_quotient_matches_direct(corpus::edge(), 3);
    check_quotient_matches_direct(corpus::cycle2(), 2);
    check_quotient_matches_direct(corpus::zigzag(), 2);
    CHECK(f_vector(quotient_sym(corpus::cycle2(), 2).complex) ==
          std::vector<std::size_t>{3, 7, 4});

    SECTION("also for arbitrary orientations") {
        // the identification does not need bipartiteness
        for (const OrientedGraph& g : corpus::all_multigraphs_upto(3, 3))
            for (int n = 1; n <= 2; ++n) check_quotient_matches_direct(g, n);
    }
}

TEST_CASE("built complexes validate") {
    for (const auto& [name, g] : corpus::bipartite_corpus()) {
        CAPTURE(name);
        for (int n = 0; n <= 3; ++n) CHECK_FALSE(validate(sym_complex(g, n).complex).has_value());
        for (int n = 1; n <= 2; ++n) {
            CHECK_FALSE(validate(product_complex(g, n).complex).has_value());
            CHECK_FALSE(validate(quotient_sym(g, n).complex).has_value());
        }
    }
}

TEST_CASE("simplicial_for_all_n follows the tree criterion") {
    CHECK(simplicial_for_all_n(corpus::edge()));
    CHECK_FALSE(simplicial_for_all_n(corpus::cycle2()));
    CHECK(simplicial_for_all_n(corpus::path2()));
    // the 2-cycle already fails directly at n = 1
    CHECK_FALSE(is_simplicial(sym_complex(corpus::cycle2(), 1).complex));
}

TEST_CASE("minimal_span") {
    OrientedGraph g = corpus::edge();
    CHECK(minimal_span(g, {{"v", 0}, {"w", 1}}) ==
          OrientedGraph::make({"v"}, {}));
    CHECK(minimal_span(g, {{"v", 0}, {"w", 0}}) == g);
    CHECK(minimal_span(corpus::path2(), {{"v1", 0}, {"w", 0}, {"v2", 1}}) ==
          OrientedGraph::make({"v1", "w"}, {{{"g1", "v1", "w"}}}));
    CHECK_THROWS_WITH(minimal_span(g, {{"v", 0}}),
                      Catch::Matchers::ContainsSubstring("missing vertex 'w'"));
}

TEST_CASE("skeleton_complex") {
    SECTION("unique minimum leaves a point") {
        SkeletonResult sk = skeleton_complex(corpus::edge(), {{"v", 0}, {"w", 1}}, 3);
        CHECK(f_vector(sk.skeleton.complex) == std::vector<std::size_t>{1});
    }
    SECTION("equal weights keep the full symmetric product") {
        SkeletonResult sk = skeleton_complex(corpus::edge(), {{"v", 0}, {"w", 0}}, 2);
        CHECK(f_vector(sk.skeleton.complex) == std::vector<std::size_t>{3, 3, 1});
    }
    SECTION("induced weights are the multiset sums") {
        SkeletonResult sk =
            skeleton_complex(corpus::path2(), {{"v1", 0}, {"w", 0}, {"v2", 1}}, 2);
        CHECK(f_vector(sk.skeleton.complex) == std::vector<std::size_t>{3, 3, 1});
        CHECK(sk.min_weight == 0);
        std::map<std::string, long long> expected{
            {"{v1:2|}", 0},      {"{v1:1,w:1|}", 0},  {"{w:2|}", 0},
            {"{v1:1,v2:1|}", 1}, {"{v2:1,w:1|}", 1},  {"{v2:2|}", 2}};
        CHECK(sk.induced_weights == expected);
    }
}

TEST_CASE("weight-minimal span of the symmetric product is the symmetric product of the span") {
    for (const auto& [name, g] : corpus::bipartite_corpus()) {
        const int V = g.vertex_count();
        // a couple of representative weight vectors rather than the full cube
        std::vector<std::vector<long long>> weight_sets;
        weight_sets.push_back(std::vector<long long>(V, 0));
        std::vector<long long> mixed(V);
        for (int v = 0; v < V; ++v) mixed[v] = v % 2;
        weight_sets.push_back(mixed);
        for (const auto& wv : weight_sets) {
            VertexWeights w;
            for (int v = 0; v < V; ++v) w[g.vertex_name(v)] = wv[v];
            const int n = 2;
            CAPTURE(name, wv);
            SymComplex full = sym_complex(g, n);
            SkeletonResult sk = skeleton_complex(g, w, n);
            long long lo = n * sk.min_weight;
            std::vector<std::string> min_vertices;
            for (const auto& key : full.complex.keys(0))
                if (sk.induced_weights.at(key) == lo) min_vertices.push_back(key);
            DeltaComplex span = vertex_span(full.complex, min_vertices);
            CHECK(f_vector(span) == f_vector(sk.skeleton.complex));
            for (int dim = 0; dim <= span.top_dimension(); ++dim)
                CHECK(span.keys(dim) == sk.skeleton.complex.keys(dim));
        }
    }
}

TEST_CASE("facet rules agree between strata and symmetric cells") {
    for (const auto& [name, g] : corpus::bipartite_corpus()) {
        const int n = 3;
        for (unsigned mask = 1; mask < (1u << (n + 1)); ++mask) {
            std::vector<int> members;
            for (int m = 1; m <= n + 1; ++m)
                if (mask & (1u << (m - 1))) members.push_back(m);
            if (members.size() < 2) continue;
            IndexSet J(n, members);
            CAPTURE(name, J.to_string());
            for (const auto& idx : enumerate_strata(g, J)) {
                SymCell cell = sym_cell_of(idx);
                for (int k = 1; k <= J.size(); ++k) {
                    auto [I, facet] = stratum_facet(g, J, idx, k);
                    CHECK(sym_face(g, cell, k - 1) == sym_cell_of(facet));
                }
            }
        }
    }
}

TEST_CASE("builders refuse oversized instances") {
    CHECK_THROWS_WITH(sym_complex(corpus::edge(), 60),
                      Catch::Matchers::ContainsSubstring("exceeds the limit"));
    CHECK_THROWS_WITH(product_complex(corpus::edge(), 12),
                      Catch::Matchers::ContainsSubstring("exceeds the limit"));
    // the bound is a configurable knob, both ways
    CHECK_THROWS_AS(sym_complex(corpus::edge(), 5, 10), error);
    CHECK_NOTHROW(sym_complex(corpus::edge(), 5, 100'000));
}
