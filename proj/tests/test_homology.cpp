#include <catch2/catch_amalgamated.hpp>

#include "corpus.hpp"
#include "symgraph/homology.hpp"
#include "symgraph/sym_product.hpp"

using namespace symgraph;

namespace {

// Classical two-triangle model of the projective plane: vertices v, w;
// a loop-shaped edge e0 at v and a doubled edge e1, e2 from v to w.
DeltaComplex projective_plane() {
    DeltaComplex dc;
    dc.add_vertex("v");
    dc.add_vertex("w");
    dc.add_cell("e0", {"v", "v"});
    dc.add_cell("e1", {"v", "w"});
    dc.add_cell("e2", {"v", "w"});
    dc.add_cell("T0", {"e0", "e1", "e2"});
    dc.add_cell("T1", {"e0", "e2", "e1"});
    return dc;
}

bool torsion_free(const HomologyResult& h) {
    for (const auto& degree : h.torsion)
        if (!degree.empty()) return false;
    return true;
}

// independent count of connected components of the 1-skeleton
std::size_t skeleton_components(const DeltaComplex& dc) {
    std::vector<std::size_t> parent(dc.size(0));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    if (dc.top_dimension() >= 1)
        for (std::size_t e = 0; e < dc.size(1); ++e)
            parent[find(dc.face(1, e, 0))] = find(dc.face(1, e, 1));
    std::size_t comps = 0;
    for (std::size_t v = 0; v < dc.size(0); ++v)
        if (find(v) == v) ++comps;
    return comps;
}

}  // namespace

TEST_CASE("homology of small symmetric products") {
    SECTION("Sym^2 of an edge is contractible") {
        HomologyResult h = homology(sym_complex(corpus::edge(), 2).complex);
        CHECK(h.betti == std::vector<long long>{1, 0, 0});
        CHECK(torsion_free(h));
    }
    SECTION("Sym^2 of an even 2-cycle is a circle up to homotopy") {
        HomologyResult h = homology(sym_complex(corpus::cycle2(), 2).complex);
        CHECK(h.betti == std::vector<long long>{1, 1, 0});
        CHECK(torsion_free(h));
    }
}

TEST_CASE("projective plane has 2-torsion in degree one") {
    DeltaComplex rp2 = projective_plane();
    REQUIRE_FALSE(validate(rp2).has_value());
    CHECK(boundaries_compose_to_zero(rp2));
    HomologyResult h = homology(rp2);
    CHECK(h.betti == std::vector<long long>{1, 0, 0});
    REQUIRE(h.torsion[1].size() == 1);
    CHECK(h.torsion[1][0] == 2);
    CHECK(h.torsion[0].empty());
    CHECK(h.torsion[2].empty());
    // rank-nullity survives the torsion: chi = 2 - 3 + 2 = 1 - 0 + 0
    CHECK(euler_characteristic(rp2) == h.betti[0] - h.betti[1] + h.betti[2]);
}

TEST_CASE("boundaries compose to zero on built complexes") {
    for (const auto& [name, g] : corpus::bipartite_corpus()) {
        CAPTURE(name);
        CHECK(boundaries_compose_to_zero(sym_complex(g, 3).complex));
        CHECK(boundaries_compose_to_zero(product_complex(g, 2).complex));
    }
}

TEST_CASE("euler characteristic equals the alternating betti sum") {
    for (const auto& [name, g] : corpus::bipartite_corpus()) {
        for (int n = 1; n <= 3; ++n) {
            CAPTURE(name, n);
            SymComplex sc = sym_complex(g, n);
            HomologyResult h = homology(sc.complex);
            long long alt = 0;
            for (std::size_t k = 0; k < h.betti.size(); ++k)
                alt += (k % 2 == 0 ? 1 : -1) * h.betti[k];
            CHECK(alt == euler_characteristic(sc.complex));
        }
    }
}

TEST_CASE("betti_0 counts the components of the 1-skeleton") {
    // Sym^2 of two disjoint edges splits into three pieces
    OrientedGraph two = OrientedGraph::make({"v", "w", "x", "y"},
                                            {{{"g", "v", "w"}, {"h", "x", "y"}}});
    SymComplex sc = sym_complex(two, 2);
    HomologyResult h = homology(sc.complex);
    CHECK(skeleton_components(sc.complex) == 3);
    CHECK(h.betti[0] == 3);

    for (const auto& [name, g] : corpus::bipartite_corpus()) {
        CAPTURE(name);
        SymComplex s = sym_complex(g, 2);
        CHECK(static_cast<std::size_t>(homology(s.complex).betti[0]) ==
              skeleton_components(s.complex));
    }
}

TEST_CASE("homology does not depend on the thread count") {
    SymComplex sc = sym_complex(corpus::cycle4(), 3);
    HomologyResult one = homology(sc.complex, 1);
    HomologyResult many = homology(sc.complex, 4);
    CHECK(one.betti == many.betti);
    CHECK(one.torsion == many.torsion);
}
