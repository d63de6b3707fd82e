#pragma once

#include <optional>
#include <vector>

#include "embcert/complex.hpp"
#include "embcert/gf2.hpp"

namespace embcert {

/// Per-dimension face counts, Z2 Betti numbers and the derived Morse-type
/// quantities. Betti convention is non-reduced: beta_0 counts connected
/// components. chi[j] stores the alternating partial sum indexed j-1 in the
/// usual notation, so chi[0] = 0 and chi[d] = f_d - beta_d.
struct HomologyProfile {
    int d = -1;
    std::vector<long long> f;     // f_0..f_d
    std::vector<long long> beta;  // beta_0..beta_d
    std::vector<long long> delta; // delta_j = f_j - beta_j
    std::vector<long long> chi;   // chi[j], j = 0..d
    // torsion[k]: invariant factors > 1 of integral H_k, k = 0..d-1.
    // Present only when requested.
    std::optional<std::vector<std::vector<long long>>> torsion;

    long long euler() const;
};

/// Boundary operator over GF(2): rows are (k-1)-faces, columns k-faces,
/// both in canonical sorted order. Requires 1 <= k <= dim.
gf2::BitMatrix boundary_matrix(const SimplicialComplex& sigma, int k);

/// beta_k over Z2 via rank-nullity; rank of the 0th and (d+1)st boundary
/// operators is taken as zero. Requires 0 <= k <= dim.
long long betti_z2(const SimplicialComplex& sigma, int k);

/// (beta_0, ..., beta_d). Requires dim >= 0.
std::vector<long long> betti_vector(const SimplicialComplex& sigma);

/// Full profile. Panics (InternalError) if any chi comes out negative or if
/// Euler-Poincare fails, since both are theorems. Requires dim >= 0.
HomologyProfile homology_profile(const SimplicialComplex& sigma,
                                 bool with_torsion = false);

/// delta and chi sequences, same consistency checks as homology_profile.
struct MorseQuantities {
    std::vector<long long> delta;
    std::vector<long long> chi;
};
MorseQuantities morse_quantities(const SimplicialComplex& sigma);

/// Both sides of the skeleton face-count identity
/// f_d = beta_d - beta_{d-1} + beta_{d-1}(codim-1 skeleton).
/// Holds on every complex; exposed for cross-checks. Requires dim >= 1.
struct SkeletonIdentity {
    long long lhs = 0; // f_d
    long long rhs = 0;
    bool holds = false;
};
SkeletonIdentity skeleton_identity(const SimplicialComplex& sigma);

/// Smith normal form diagonal of an integer matrix (all entries, including
/// ones and zeros trimmed to the rank). Throws OverflowError instead of
/// wrapping around.
std::vector<long long> smith_invariant_factors(
    std::vector<std::vector<long long>> m);

/// Invariant factors > 1 of the integral homology H_k, read off the Smith
/// normal form of the (k+1)st integer boundary matrix. Requires
/// 0 <= k < dim.
std::vector<long long> integral_torsion(const SimplicialComplex& sigma, int k);

/// Integer boundary matrix with the standard orientation: faces ordered by
/// sorted vertex lists, sign (-1)^i for dropping the i-th vertex.
std::vector<std::vector<long long>> integer_boundary_matrix(
    const SimplicialComplex& sigma, int k);

/// Torsion obstruction: a d-complex whose (d-1)st integral homology has
/// torsion does not embed topologically into the (d+1)-sphere. Requires
/// dim >= 2.
struct TorsionCertificate {
    int homology_dim = 0;                // d-1
    std::vector<long long> factors;      // invariant factors > 1
};
std::optional<TorsionCertificate> torsion_obstruction(
    const SimplicialComplex& sigma);

} // namespace embcert
