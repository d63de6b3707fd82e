#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "embcert/complex.hpp"
#include "embcert/errors.hpp"
#include "embcert/gf2.hpp"
#include "embcert/homology.hpp"
#include "test_util.hpp"

using embcert::ArgumentError;
using embcert::betti_vector;
using embcert::boundary_matrix;
using embcert::generate_spec;
using embcert::homology_profile;
using embcert::integral_torsion;
using embcert::SimplicialComplex;
using embcert::skeleton_identity;
using embcert::smith_invariant_factors;
using testutil::from;

TEST_CASE("boundary matrix of a single triangle") {
    const auto m = boundary_matrix(from({{"a", "b", "c"}}), 2);
    CHECK(m.rows() == 3);
    CHECK(m.cols() == 1);
    for (std::size_t r = 0; r < 3; ++r) CHECK(m.get(r, 0));
}

TEST_CASE("boundary matrix of the tetrahedron boundary sphere") {
    const auto m = boundary_matrix(generate_spec("simplex_boundary:3"), 2);
    CHECK(m.rows() == 6);
    CHECK(m.cols() == 4);
    // Every edge of the sphere lies in exactly two triangles.
    for (std::size_t r = 0; r < 6; ++r) CHECK(m.row(r).popcount() == 2);
}

TEST_CASE("boundary of boundary vanishes over GF(2)") {
    std::mt19937 rng(5);
    auto corpus = testutil::generator_corpus();
    for (int i = 0; i < 15; ++i)
        corpus.push_back(testutil::random_complex(rng, 7, 8, 5, 2));
    for (const auto& sigma : corpus) {
        for (int k = 2; k <= sigma.dim(); ++k) {
            const auto upper = boundary_matrix(sigma, k);
            const auto lower = boundary_matrix(sigma, k - 1);
            for (std::size_t c = 0; c < upper.cols(); ++c) {
                embcert::gf2::BitVector col(upper.rows());
                for (std::size_t r = 0; r < upper.rows(); ++r)
                    if (upper.get(r, c)) col.set(r);
                CHECK_FALSE(lower.multiply(col).any());
            }
        }
    }
    CHECK_THROWS_AS(boundary_matrix(corpus[0], 0), ArgumentError);
    CHECK_THROWS_AS(boundary_matrix(corpus[0], corpus[0].dim() + 1),
                    ArgumentError);
}

TEST_CASE("Betti vectors of named complexes") {
    CHECK(betti_vector(generate_spec("complete_graph:5")) ==
          std::vector<long long>{1, 6});
    CHECK(betti_vector(generate_spec("simplex_boundary:3")) ==
          std::vector<long long>{1, 0, 1});
    CHECK(betti_vector(generate_spec("suspension:complete_bipartite:3:3"))[2] == 4);
    CHECK(betti_vector(generate_spec("cross_polytope_boundary:3")) ==
          std::vector<long long>{1, 0, 1});
    // Two components.
    CHECK(betti_vector(from({{"a", "b"}, {"c", "d"}}))[0] == 2);
}

TEST_CASE("Morse quantities of the tetrahedron boundary") {
    const auto prof = homology_profile(generate_spec("simplex_boundary:3"));
    CHECK(prof.delta == std::vector<long long>{3, 6, 3});
    CHECK(prof.chi == std::vector<long long>{0, 3, 3});
    CHECK(prof.beta[2] == prof.f[2] - prof.chi[2]);
}

TEST_CASE("Morse quantities of the octahedron boundary") {
    const auto prof = homology_profile(generate_spec("cross_polytope_boundary:3"));
    CHECK(prof.delta == std::vector<long long>{5, 12, 7});
    CHECK(prof.chi[2] == 7);
}

TEST_CASE("Morse quantities of K5") {
    const auto prof = homology_profile(generate_spec("complete_graph:5"));
    CHECK(prof.chi[1] == 4);
    CHECK(prof.delta[0] == 4);
}

TEST_CASE("Euler-Poincare and strong Morse across the corpus") {
    std::mt19937 rng(17);
    auto corpus = testutil::generator_corpus();
    for (int i = 0; i < 40; ++i)
        corpus.push_back(testutil::random_complex(rng, 7, 9, 5));
    for (const auto& sigma : corpus) {
        const auto prof = homology_profile(sigma); // throws on violation
        long long euler_beta = 0;
        for (int k = 0; k <= prof.d; ++k)
            euler_beta += (k % 2 ? -prof.beta[k] : prof.beta[k]);
        CHECK(prof.euler() == euler_beta);
        for (long long c : prof.chi) CHECK(c >= 0);
    }
}

TEST_CASE("skeleton identity on named complexes") {
    const auto sphere = skeleton_identity(generate_spec("simplex_boundary:3"));
    CHECK(sphere.lhs == 4);
    CHECK(sphere.rhs == 4);
    CHECK(sphere.holds);

    const auto triangle = skeleton_identity(from({{"a", "b", "c"}}));
    CHECK(triangle.lhs == 1);
    CHECK(triangle.holds);

    // f_2 = beta_2 - beta_1 + beta_1(skeleton): 18 = 4 - 0 + 14.
    const auto susp = generate_spec("suspension:complete_bipartite:3:3");
    CHECK(skeleton_identity(susp).holds);
    CHECK(betti_vector(embcert::skeleton(susp, 1))[1] == 14);
}

TEST_CASE("Betti numbers are invariant under barycentric subdivision") {
    for (const char* spec :
         {"complete_graph:4", "cycle:5", "simplex_boundary:3",
          "complete_bipartite:3:3", "moebius5", "rp2_6"}) {
        const auto sigma = generate_spec(spec);
        if (sigma.vertex_count() > 8) continue;
        CHECK(betti_vector(embcert::barycentric_subdivision(sigma)) ==
              betti_vector(sigma));
    }
}

TEST_CASE("Smith normal form of small integer matrices") {
    CHECK(smith_invariant_factors({{1, 0}, {0, 1}}) ==
          std::vector<long long>{1, 1});
    CHECK(smith_invariant_factors({{2, 0}, {0, 3}}) ==
          std::vector<long long>{1, 6});
    CHECK(smith_invariant_factors({{2, 4}, {4, 8}}) ==
          std::vector<long long>{2});
    CHECK(smith_invariant_factors({{0, 0}, {0, 0}}).empty());
    CHECK(smith_invariant_factors({{6, 4}, {4, 6}}) ==
          std::vector<long long>{2, 10});
}

TEST_CASE("Smith normal form matches the independent oracle on boundary maps") {
    std::mt19937 rng(23);
    auto corpus = testutil::generator_corpus();
    for (int i = 0; i < 10; ++i)
        corpus.push_back(testutil::random_complex(rng, 6, 7, 4, 2));
    for (const auto& sigma : corpus) {
        for (int k = 1; k <= sigma.dim(); ++k) {
            const auto m = embcert::integer_boundary_matrix(sigma, k);
            CHECK(smith_invariant_factors(m) == testutil::snf_oracle(m));
        }
    }
}

TEST_CASE("Smith normal form detects overflow instead of wrapping") {
    const long long big = (1LL << 62) + 12345;
    CHECK_THROWS_AS(
        smith_invariant_factors({{big, big - 3}, {big - 5, big - 11}}),
        embcert::OverflowError);
}

TEST_CASE("integral torsion of spheres and graphs is trivial") {
    CHECK(integral_torsion(generate_spec("simplex_boundary:3"), 1).empty());
    CHECK(integral_torsion(generate_spec("complete_graph:5"), 0).empty());
}

TEST_CASE("integral torsion of the projective plane is [2]") {
    const auto rp2 = generate_spec("rp2_6");
    CHECK(integral_torsion(rp2, 1) == std::vector<long long>{2});
    // Cross-check against the independent Smith form.
    const auto m = embcert::integer_boundary_matrix(rp2, 2);
    std::vector<long long> oracle_torsion;
    for (long long v : testutil::snf_oracle(m))
        if (v > 1) oracle_torsion.push_back(v);
    CHECK(oracle_torsion == std::vector<long long>{2});

    CHECK_THROWS_AS(integral_torsion(rp2, 2), ArgumentError);
}

TEST_CASE("torsion obstruction certificates") {
    const auto rp2_cert = embcert::torsion_obstruction(generate_spec("rp2_6"));
    REQUIRE(rp2_cert.has_value());
    CHECK(rp2_cert->homology_dim == 1);
    CHECK(rp2_cert->factors == std::vector<long long>{2});

    CHECK_FALSE(embcert::torsion_obstruction(generate_spec("simplex_boundary:3"))
                    .has_value());

    // Suspension shifts the torsion up one degree.
    const auto susp_cert =
        embcert::torsion_obstruction(generate_spec("suspension:rp2_6"));
    REQUIRE(susp_cert.has_value());
    CHECK(susp_cert->homology_dim == 2);
    CHECK(susp_cert->factors == std::vector<long long>{2});

    CHECK_THROWS_AS(embcert::torsion_obstruction(generate_spec("complete_graph:5")),
                    ArgumentError);
}

TEST_CASE("mod-2 rank never exceeds the integer rank") {
    std::mt19937 rng(31);
    auto corpus = testutil::generator_corpus();
    for (int i = 0; i < 10; ++i)
        corpus.push_back(testutil::random_complex(rng, 7, 8, 5));
    for (const auto& sigma : corpus) {
        for (int k = 1; k <= sigma.dim(); ++k) {
            const auto integer_rank =
                smith_invariant_factors(embcert::integer_boundary_matrix(sigma, k))
                    .size();
            const auto mod2_rank = embcert::gf2::rank(boundary_matrix(sigma, k));
            CHECK(mod2_rank <= integer_rank);
        }
    }
}

TEST_CASE("profile torsion spans all lower dimensions") {
    const auto prof = homology_profile(generate_spec("suspension:rp2_6"), true);
    REQUIRE(prof.torsion.has_value());
    REQUIRE(prof.torsion->size() == 3);
    CHECK((*prof.torsion)[0].empty());
    CHECK((*prof.torsion)[1].empty());
    CHECK((*prof.torsion)[2] == std::vector<long long>{2});
}
