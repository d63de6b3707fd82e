#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "embcert/complex.hpp"
#include "embcert/errors.hpp"
#include "embcert/homology.hpp"
#include "embcert/obstruction.hpp"
#include "test_util.hpp"

using embcert::ArgumentError;
using embcert::battery;
using embcert::generate_spec;
using embcert::InequalityReport;
using embcert::Rational;
using embcert::SearchBudget;
using embcert::SimplicialComplex;
using embcert::Target;
using embcert::Verdict;
using testutil::find_check;
using testutil::from;

namespace {

void check_values(const InequalityReport& rep, long long lnum, long long lden,
                  long long rnum, long long rden) {
    REQUIRE(rep.lhs.has_value());
    REQUIRE(rep.rhs.has_value());
    CHECK(*rep.lhs == Rational::of(lnum, lden));
    CHECK(*rep.rhs == Rational::of(rnum, rden));
}

} // namespace

TEST_CASE("cycle packing bound") {
    const auto k5 = embcert::check_cycle_packing(generate_spec("complete_graph:5"));
    CHECK(k5.applicable);
    check_values(k5, 21, 1, 20, 1);
    CHECK(k5.violated());

    const auto k7 = embcert::check_cycle_packing(generate_spec("complete_graph:7"));
    check_values(k7, 48, 1, 42, 1);
    CHECK(k7.violated());

    const auto sphere =
        embcert::check_cycle_packing(generate_spec("simplex_boundary:3"));
    check_values(sphere, 8, 1, 8, 1);
    CHECK(*sphere.satisfied);
    CHECK(*sphere.tight);

    // No top cycles: the licensing theorem says nothing.
    const auto edge = embcert::check_cycle_packing(from({{"a", "b"}}));
    CHECK_FALSE(edge.applicable);
}

TEST_CASE("girth-morse bounds") {
    // d = 1, k = 1 on K5 with girth 3: f_1 <= 3 (n - 2).
    const auto k5 =
        embcert::check_girth_morse(generate_spec("complete_graph:5"), 1);
    check_values(k5, 10, 1, 9, 1);
    CHECK(k5.violated());

    const auto sphere_exact =
        embcert::check_girth_morse_exact(generate_spec("simplex_boundary:3"));
    check_values(sphere_exact, 4, 1, 4, 1);
    CHECK(*sphere_exact.tight);

    const auto four_sphere_exact =
        embcert::check_girth_morse_exact(generate_spec("simplex_boundary:4"));
    check_values(four_sphere_exact, 5, 1, 5, 1);
    CHECK(*four_sphere_exact.tight);

    // Even or out-of-range k is rejected by the gate.
    CHECK_FALSE(embcert::check_girth_morse(generate_spec("complete_graph:5"), 2)
                    .applicable);
    CHECK_FALSE(embcert::check_girth_morse(generate_spec("complete_graph:5"), 3)
                    .applicable);
}

TEST_CASE("truncated girth-morse bounds dominate the exact form") {
    std::mt19937 rng(61);
    auto corpus = testutil::generator_corpus();
    for (int i = 0; i < 20; ++i)
        corpus.push_back(testutil::random_complex(rng, 7, 8, 5));
    for (const auto& sigma : corpus) {
        const auto exact = embcert::check_girth_morse_exact(sigma);
        if (!exact.applicable) continue;
        for (int k = 1; k <= sigma.dim(); k += 2) {
            const auto truncated = embcert::check_girth_morse(sigma, k);
            REQUIRE(truncated.applicable);
            CHECK(*exact.rhs <= *truncated.rhs);
        }
    }
}

TEST_CASE("ridge defect bound") {
    const auto sphere =
        embcert::check_ridge_defect(generate_spec("simplex_boundary:3"));
    check_values(sphere, 4, 1, 10, 1);
    CHECK(*sphere.satisfied);

    const auto k5 = embcert::check_ridge_defect(generate_spec("complete_graph:5"));
    check_values(k5, 10, 1, 9, 1);
    CHECK(k5.violated());

    // Solid triangle: beta_1 = 0 (the 2-face fills the edge cycle), so the
    // reported bound is 2 * (3 - 0 - 1) = 4; inapplicable since beta_2 = 0.
    const auto triangle = embcert::check_ridge_defect(from({{"a", "b", "c"}}));
    CHECK_FALSE(triangle.applicable);
    check_values(triangle, 1, 1, 4, 1);
}

TEST_CASE("balanced pair") {
    const auto octa = generate_spec("cross_polytope_boundary:3");
    const auto pair = embcert::check_balanced_pair(octa);
    REQUIRE(pair.size() == 2);
    CHECK(pair[0].name == "balanced-cycle-packing");
    check_values(pair[0], 8, 1, 8, 1);
    CHECK(*pair[0].tight);
    CHECK(pair[1].name == "balanced-morse");
    check_values(pair[1], 8, 1, 8, 1);
    CHECK(*pair[1].tight);

    // K4 1-skeleton is not 3-colorable.
    const auto sphere = embcert::check_balanced_pair(generate_spec("simplex_boundary:3"));
    CHECK_FALSE(sphere[0].applicable);
    CHECK_FALSE(sphere[1].applicable);

    const auto c4 = embcert::check_balanced_pair(generate_spec("cycle:4"));
    CHECK(c4[0].applicable);
    check_values(c4[0], 4, 1, 4, 1);
    CHECK(*c4[0].tight);
}

TEST_CASE("codim-0 checks") {
    const auto triangle = embcert::check_codim0(from({{"a", "b", "c"}}));
    const auto& ridge = triangle[0];
    CHECK(ridge.name == "codim0-ridge");
    check_values(ridge, 1, 1, 1, 1);
    CHECK(*ridge.tight);
    const auto& vertex2 = triangle[2];
    CHECK(vertex2.name == "codim0-d2-vertex");
    check_values(vertex2, 1, 1, 1, 1);
    CHECK(*vertex2.tight);

    const auto sphere = embcert::check_codim0(generate_spec("simplex_boundary:3"));
    check_values(sphere[0], 4, 1, 3, 1);
    CHECK(sphere[0].violated()); // a 2-sphere does not embed into the plane
    CHECK(sphere[1].name == "codim0-skeleton-packing");
    check_values(sphere[1], 12, 1, 12, 1);
    CHECK(*sphere[1].tight);

    // Solid tetrahedron in R^3: everything tight or satisfied.
    const auto solid = embcert::check_codim0(generate_spec("simplex_skeleton:4:3"));
    check_values(solid[0], 1, 1, 1, 1);
    CHECK(*solid[0].tight);
    const auto& vertex3 = solid[2];
    CHECK(vertex3.name == "codim0-d3-vertex");
    check_values(vertex3, 1, 1, 1, 1);
}

TEST_CASE("low-dimensional codim-1 checks") {
    const auto sphere = embcert::check_low_dim_codim1(generate_spec("simplex_boundary:3"));
    REQUIRE(sphere.size() == 3);
    CHECK(sphere[0].name == "d2-connected-bound");
    check_values(sphere[0], 4, 1, 4, 1);
    CHECK(*sphere[0].tight);
    CHECK(sphere[1].name == "d2-vertex-bound");
    check_values(sphere[1], 4, 1, 4, 1);

    const auto octa =
        embcert::check_low_dim_codim1(generate_spec("cross_polytope_boundary:3"));
    const auto& balanced_vertex = octa[2];
    CHECK(balanced_vertex.name == "d2-balanced-vertex-bound");
    check_values(balanced_vertex, 8, 1, 8, 1);
    CHECK(*balanced_vertex.tight);

    const auto four_sphere =
        embcert::check_low_dim_codim1(generate_spec("simplex_boundary:4"));
    REQUIRE(four_sphere.size() == 4);
    CHECK(four_sphere[0].name == "d3-connected-bound");
    check_values(four_sphere[0], 5, 1, 5, 1);
    CHECK(*four_sphere[0].tight);
    // beta_1 = 0 activates the simply-connected proxy form.
    CHECK(four_sphere[3].name == "d3-simply-connected-bound");
    CHECK(four_sphere[3].applicable);
    check_values(four_sphere[3], 5, 1, 15, 1);

    // Graphs have no low-dimensional forms.
    CHECK(embcert::check_low_dim_codim1(generate_spec("complete_graph:5")).empty());
}

TEST_CASE("grunbaum density bound") {
    const auto sphere = embcert::check_grunbaum(generate_spec("simplex_boundary:3"));
    CHECK(sphere.applicable);
    check_values(sphere, 4, 1, 16, 3);
    CHECK(*sphere.satisfied);

    // K5 sits exactly on the graph bound; the packing bound catches it while
    // this one does not.
    const auto k5 = embcert::check_grunbaum(generate_spec("complete_graph:5"));
    check_values(k5, 10, 1, 10, 1);
    CHECK(*k5.satisfied);
    CHECK(*k5.tight);

    const auto k7 = embcert::check_grunbaum(generate_spec("complete_graph:7"));
    check_values(k7, 21, 1, 16, 1);
    CHECK(k7.violated());

    const auto pendant = embcert::check_grunbaum(from({{"a", "b", "c"}, {"c", "d"}}));
    CHECK_FALSE(pendant.applicable);
}

TEST_CASE("sperner ratio sanity") {
    const auto k5 = embcert::check_sperner(generate_spec("complete_graph:5"), 1, 0);
    CHECK(k5.sanity);
    check_values(k5, 2, 1, 2, 1);
    CHECK(*k5.tight);

    const auto sphere = embcert::check_sperner(generate_spec("simplex_boundary:3"), 2, 1);
    check_values(sphere, 2, 3, 2, 3);
    CHECK(*sphere.tight);

    // A full simplex is tight in every pair.
    const auto full = generate_spec("simplex_skeleton:5:4");
    for (int i = 1; i <= 4; ++i)
        for (int j = 0; j < i; ++j) {
            const auto rep = embcert::check_sperner(full, i, j);
            CHECK(*rep.tight);
        }

    CHECK_FALSE(embcert::check_sperner(generate_spec("complete_graph:5"), 0, 1)
                    .applicable);
}

TEST_CASE("battery: non-planar graphs are obstructed") {
    for (const char* spec : {"complete_graph:5", "complete_graph:6",
                             "complete_graph:7", "complete_bipartite:3:3"}) {
        const auto verdict = battery(generate_spec(spec), Target::Codim1);
        CHECK(verdict.verdict == Verdict::Obstructed);
        CHECK(verdict.inequality_obstructed);
    }
    const auto k33 = battery(generate_spec("complete_bipartite:3:3"), Target::Codim1);
    const auto& packing = find_check(k33, "cycle-packing");
    check_values(packing, 20, 1, 18, 1);
    CHECK(packing.violated());
}

TEST_CASE("battery: planar graphs and spheres are not obstructed") {
    for (const char* spec :
         {"complete_graph:4", "cycle:4", "simplex_boundary:2",
          "simplex_boundary:3", "simplex_boundary:4", "simplex_boundary:5",
          "cross_polytope_boundary:3", "cross_polytope_boundary:4",
          "cross_polytope_boundary:5"}) {
        const auto verdict = battery(generate_spec(spec), Target::Codim1);
        CHECK(verdict.verdict == Verdict::NoObstruction);
    }
}

TEST_CASE("battery: trees including the single edge are never obstructed") {
    std::mt19937 rng(71);
    std::vector<SimplicialComplex> trees{testutil::path_graph(2),
                                         testutil::path_graph(5),
                                         testutil::star_graph(4)};
    for (int i = 0; i < 8; ++i)
        trees.push_back(testutil::random_tree(rng, 2 + i));
    for (const auto& tree : trees) {
        const auto verdict = battery(tree, Target::Codim1);
        CHECK(verdict.verdict == Verdict::NoObstruction);
    }
}

TEST_CASE("battery: projective plane fires only through torsion") {
    const auto rp2 = generate_spec("rp2_6");

    const auto codim1 = battery(rp2, Target::Codim1);
    CHECK_FALSE(codim1.inequality_obstructed);
    for (const auto& rep : codim1.reports) CHECK_FALSE(rep.violated());
    const auto& packing = find_check(codim1, "cycle-packing");
    check_values(packing, 20, 1, 20, 1);
    CHECK(*packing.tight);
    REQUIRE(codim1.torsion.has_value());
    CHECK(codim1.verdict == Verdict::Obstructed);

    const auto sphere = battery(rp2, Target::Sphere);
    CHECK(sphere.verdict == Verdict::Obstructed);
    CHECK(sphere.reports.empty());
    REQUIRE(sphere.torsion.has_value());
    CHECK(sphere.torsion->factors == std::vector<long long>{2});
}

TEST_CASE("battery: codim-0 verdicts") {
    CHECK(battery(generate_spec("simplex_boundary:3"), Target::Codim0).verdict ==
          Verdict::Obstructed);
    CHECK(battery(from({{"a", "b", "c"}}), Target::Codim0).verdict ==
          Verdict::NoObstruction);
}

TEST_CASE("battery: sphere target needs dimension 2 to say anything") {
    const auto graphs = battery(generate_spec("complete_graph:5"), Target::Sphere);
    CHECK(graphs.verdict == Verdict::NoObstruction);
    CHECK(graphs.reports.empty());
}

TEST_CASE("battery rejects dimension 0 input") {
    CHECK_THROWS_AS(battery(from({{"a"}, {"b"}}), Target::Codim1), ArgumentError);
}

TEST_CASE("monotone weakening: a forced weak bound never creates a violation") {
    SearchBudget weak;
    weak.girth_kernel_cap = 0; // force the fallback bound everywhere
    for (const char* spec :
         {"complete_graph:5", "complete_graph:6", "complete_bipartite:3:3",
          "simplex_boundary:3", "cross_polytope_boundary:3", "rp2_6"}) {
        const auto sigma = generate_spec(spec);
        const auto exact = battery(sigma, Target::Codim1);
        const auto weakened = battery(sigma, Target::Codim1, weak);
        for (const auto& rep : weakened.reports) {
            if (!rep.violated()) continue;
            const auto& exact_rep = find_check(exact, rep.name);
            CHECK(exact_rep.violated());
        }
        // Weakening may only flip OBSTRUCTED to NO_OBSTRUCTION.
        if (weakened.verdict == Verdict::Obstructed)
            CHECK(exact.verdict == Verdict::Obstructed);
    }
}

TEST_CASE("K5 stays obstructed under the weak girth bound") {
    SearchBudget weak;
    weak.girth_kernel_cap = 0;
    const auto verdict = battery(generate_spec("complete_graph:5"), Target::Codim1, weak);
    CHECK(verdict.verdict == Verdict::Obstructed);
    const auto& packing = find_check(verdict, "cycle-packing");
    CHECK(packing.weak_girth);
    check_values(packing, 21, 1, 20, 1); // d+2 = 3 equals the true girth here
}

TEST_CASE("skeleton-of-manifold workflow on the 7-vertex torus") {
    const auto torus = testutil::torus7();
    CHECK(embcert::betti_vector(torus) == std::vector<long long>{1, 2, 1});

    const auto verdict = embcert::skeleton_of_manifold_battery(torus);
    CHECK(verdict.verdict == Verdict::Obstructed);
    CHECK(verdict.d == 1); // the skeleton K7
    const auto& packing = find_check(verdict, "cycle-packing");
    check_values(packing, 48, 1, 42, 1);
    CHECK(packing.violated());
    // Grunbaum's bound is also violated by K7, as the comparison goes.
    const auto& density = find_check(verdict, "grunbaum-density");
    check_values(density, 21, 1, 16, 1);
    CHECK(density.violated());

    CHECK_THROWS_AS(embcert::skeleton_of_manifold_battery(generate_spec("moebius5")),
                    ArgumentError);
    CHECK_THROWS_AS(embcert::skeleton_of_manifold_battery(
                        generate_spec("complete_graph:5")),
                    ArgumentError);
}

TEST_CASE("sanity rows never drive a verdict") {
    std::mt19937 rng(79);
    for (int i = 0; i < 20; ++i) {
        const auto sigma = testutil::random_complex(rng, 7, 8, 5);
        const auto verdict = battery(sigma, Target::Codim1);
        for (const auto& rep : verdict.reports) {
            if (!rep.sanity || !rep.applicable) continue;
            CHECK(*rep.satisfied); // Sperner holds for every complex
        }
        bool licensed_violation = false;
        for (const auto& rep : verdict.reports)
            if (!rep.sanity && rep.violated()) licensed_violation = true;
        CHECK(verdict.inequality_obstructed == licensed_violation);
        CHECK((verdict.verdict == Verdict::Obstructed) ==
              (licensed_violation || verdict.torsion.has_value()));
    }
}

TEST_CASE("reports expose exact integer pairs for re-verification") {
    const auto verdict = battery(generate_spec("complete_graph:5"), Target::Codim1);
    for (const auto& rep : verdict.reports) {
        if (!rep.applicable) continue;
        REQUIRE(rep.lhs.has_value());
        REQUIRE(rep.rhs.has_value());
        CHECK(rep.lhs->den > 0);
        CHECK(rep.rhs->den > 0);
        const bool recomputed =
            static_cast<__int128>(rep.lhs->num) * rep.rhs->den <=
            static_cast<__int128>(rep.rhs->num) * rep.lhs->den;
        CHECK(recomputed == *rep.satisfied);
    }
}
