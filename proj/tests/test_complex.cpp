#include "doctest.h"

#include "cryst/catalog.hpp"
#include "cryst/complex.hpp"
#include "cryst/io.hpp"
#include "fixtures.hpp"

using namespace cryst;

namespace {

// Independent route to the face numbers of a realized graph: faces of
// dimension d-k correspond to components of k-color residues.
FVector f_vector_from_residues(const ColoredGraph& g) {
    FVector fv;
    fv.dim = g.dim();
    const std::uint32_t full = (1u << (g.dim() + 1)) - 1u;
    for (int k = 0; k <= g.dim(); ++k) fv.f[k] = 0;
    for (std::uint32_t bits = 0; bits <= full; ++bits) {
        int size = __builtin_popcount(bits);
        if (size > g.dim()) continue;
        fv.f[g.dim() - size] += g_count(g, ColorSet(bits));
    }
    return fv;
}

} // namespace

TEST_CASE("realize the two-vertex graph") {
    CellComplex c = realize(catalog("s4"));
    CHECK(c.facet_count() == 2);
    FVector fv = f_vector(c);
    CHECK(fv.f == std::array<long long, 5>{5, 10, 10, 5, 2});
    CHECK(fv.euler() == 2);
    CHECK(orientable(c));
}

TEST_CASE("face counts agree with residue counts") {
    for (const char* name : {"s4", "cp2", "s2xs2"}) {
        ColoredGraph g = catalog(name);
        CellComplex c = realize(g);
        CHECK(f_vector(c) == f_vector_from_residues(g));
    }
    ColoredGraph z = fixtures::s3_criteria_but_z();
    CHECK(f_vector(realize(z)) == f_vector_from_residues(z));
}

TEST_CASE("realized cp2 complex") {
    CellComplex c = realize(catalog("cp2"));
    CHECK(c.facet_count() == 8);
    FVector fv = f_vector(c);
    CHECK(fv.f == std::array<long long, 5>{5, 10, 20, 20, 8});
    CHECK(fv.euler() == 3);
}

TEST_CASE("dual graph round trip") {
    for (const char* name : {"s4", "cp2", "s2xs2"}) {
        ColoredGraph g = catalog(name);
        ColoredGraph back = dual_graph_coloring(realize(g));
        CHECK(are_isomorphic(back, g));
    }
    CHECK_THROWS_WITH_AS(dual_graph_coloring(boundary_of_simplex(4)),
                         doctest::Contains("NotContracted"), Error);
}

TEST_CASE("boundary of a simplex") {
    CellComplex c = boundary_of_simplex(4);
    CHECK(c.facet_count() == 6);
    FVector fv = f_vector(c);
    CHECK(fv.f == std::array<long long, 5>{6, 15, 20, 15, 6});
    CHECK(fv.euler() == 2);
    CHECK(validate(c).pseudotriangulation);
    CHECK(orientable(c));
}

TEST_CASE("vertex links") {
    CellComplex s4 = realize(catalog("s4"));
    VertexClasses vc = vertex_classes(s4);
    CHECK(vc.count == 5);
    for (int v = 0; v < 5; ++v) {
        CellComplex link = vertex_link(s4, v);
        CHECK(link.dim() == 3);
        CHECK(link.facet_count() == 2);
        CHECK(is_closed(link));
    }

    CellComplex cp2 = realize(catalog("cp2"));
    VertexClasses vc2 = vertex_classes(cp2);
    CHECK(vc2.count == 5);
    for (int v = 0; v < 5; ++v) {
        CellComplex link = vertex_link(cp2, v);
        CHECK(link.facet_count() == 8); // contracted: every facet meets every vertex
        CHECK(is_closed(link));
        CHECK(is_dual_connected(link));
        CHECK(abelianize(pi1_complex(link)).trivial());
    }
}

TEST_CASE("validation tiers") {
    CHECK(validate(realize(catalog("cp2"))).pseudotriangulation);
    CHECK(validate(realize(catalog("cp2"))).link_status == SphereStatus::sphere);

    // Unglue one face: closedness fails but the cell structure is fine.
    CellComplex c = boundary_of_simplex(4);
    auto gl = c.gluings();
    Gluing g0 = gl[0][0];
    gl[0][0] = Gluing{};
    gl[g0.facet][g0.face] = Gluing{};
    ValidationReport rep = validate(CellComplex(4, gl));
    CHECK(rep.cell_complex_ok);
    CHECK_FALSE(rep.weak_pseudomanifold);
    CHECK(rep.failure.find("unglued") != std::string::npos);

    // A two-facet 1-dimensional complex with both slots glued is a circle.
    std::vector<std::array<Gluing, 5>> circle(2);
    circle[0][0] = Gluing{1, 0, identity_perm()};
    circle[0][1] = Gluing{1, 1, identity_perm()};
    circle[1][0] = Gluing{0, 0, identity_perm()};
    circle[1][1] = Gluing{0, 1, identity_perm()};
    CHECK(validate(CellComplex(1, circle)).pseudotriangulation);

    // Gluing a facet to itself identifies two of its faces: tier 1 fails.
    std::vector<std::array<Gluing, 5>> selfglue(2);
    Perm swap01 = identity_perm();
    std::swap(swap01[0], swap01[1]);
    selfglue[0][0] = Gluing{0, 1, swap01};
    selfglue[0][1] = Gluing{0, 0, swap01};
    for (int i = 2; i <= 4; ++i) {
        selfglue[0][i] = Gluing{1, static_cast<std::int8_t>(i), identity_perm()};
        selfglue[1][i] = Gluing{0, static_cast<std::int8_t>(i), identity_perm()};
    }
    selfglue[1][0] = Gluing{1, 1, swap01};
    selfglue[1][1] = Gluing{1, 0, swap01};
    ValidationReport bad = validate(CellComplex(4, selfglue));
    CHECK_FALSE(bad.cell_complex_ok);
    CHECK(bad.fail_facet >= 0);
}

TEST_CASE("barycentric subdivision") {
    CellComplex s4 = realize(catalog("s4"));
    CellComplex sub = barycentric_subdivision(s4);
    CHECK(sub.facet_count() == 240);
    CHECK(f_vector(sub).euler() == 2);
    // Flags have pairwise distinct vertices; subdividing yields a complex
    // whose vertex count is the total face count of the original.
    FVector orig = f_vector(s4);
    long long total_faces = 0;
    for (int k = 0; k <= 4; ++k) total_faces += orig.f[k];
    CHECK(f_vector(sub).f[0] == total_faces);
    CHECK(validate(sub).cell_complex_ok);

    CellComplex cp2sub = barycentric_subdivision(realize(catalog("cp2")));
    CHECK(cp2sub.facet_count() == 960);
    CHECK(f_vector(cp2sub).euler() == 3);
}

TEST_CASE("pi1 of realized complexes matches the graph presentations") {
    CHECK(abelianize(pi1_complex(realize(catalog("s4")))).trivial());
    CHECK(abelianize(pi1_complex(realize(catalog("cp2")))).trivial());

    // The three-sphere graph with pi1 = Z: complex route agrees.
    ColoredGraph z = fixtures::s3_criteria_but_z();
    Abelianization via_complex = abelianize(pi1_complex(realize(z)));
    Abelianization via_graph = abelianize(pi1_presentation(z, 0, 1));
    CHECK(via_complex == via_graph);
    CHECK(via_complex.free_rank == 1);

    ColoredGraph z2 = fixtures::s3_criteria_but_z2();
    CHECK(abelianize(pi1_complex(realize(z2))) == abelianize(pi1_presentation(z2, 0, 1)));
}

TEST_CASE("pst format round trip") {
    for (const char* name : {"s4", "cp2"}) {
        CellComplex c = realize(catalog(name));
        std::string text = write_pst(c);
        CellComplex back = parse_pst(text);
        CHECK(back == c);
        CHECK(write_pst(back) == text);
    }
    CellComplex sub = barycentric_subdivision(realize(catalog("s4")));
    CHECK(parse_pst(write_pst(sub)) == sub);

    // Non-involutive gluings are rejected on load.
    CHECK_THROWS_AS(parse_pst("pst 4 2\n1:01234 1:01234 1:01234 1:01234 1:01234\n"
                              "0:01234 0:01234 0:01234 0:01234 0:14234\n"),
                    Error);
}
