// Boundary operators, Z2 Betti numbers, Morse quantities, torsion.

#include "embcert/homology.hpp"

#include <string>

#include "embcert/errors.hpp"

namespace embcert {

long long HomologyProfile::euler() const {
    long long e = 0;
    for (int k = 0; k <= d; ++k) e += (k % 2 ? -f[k] : f[k]);
    return e;
}

gf2::BitMatrix boundary_matrix(const SimplicialComplex& sigma, int k) {
    if (k < 1 || k > sigma.dim())
        throw ArgumentError("boundary_matrix: k = " + std::to_string(k) +
                            " out of range");
    const auto& rows = sigma.faces(k - 1);
    const auto& cols = sigma.faces(k);
    gf2::BitMatrix m(rows.size(), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        const Simplex& face = cols[c];
        for (std::size_t i = 0; i < face.vertices.size(); ++i) {
            const auto pos = sigma.face_position(k - 1, face.without(i));
            if (!pos)
                throw InternalError("boundary_matrix: missing subface");
            m.set(*pos, c);
        }
    }
    return m;
}

namespace {

// rank of the k-th boundary operator, with the conventions rank d0 = 0 and
// rank d_{d+1} = 0.
std::vector<std::size_t> boundary_ranks(const SimplicialComplex& sigma) {
    const int d = sigma.dim();
    std::vector<std::size_t> r(d + 2, 0);
    for (int k = 1; k <= d; ++k) r[k] = gf2::rank(boundary_matrix(sigma, k));
    return r;
}

} // namespace

long long betti_z2(const SimplicialComplex& sigma, int k) {
    if (k < 0 || k > sigma.dim())
        throw ArgumentError("betti_z2: k = " + std::to_string(k) +
                            " out of range");
    return betti_vector(sigma)[k];
}

std::vector<long long> betti_vector(const SimplicialComplex& sigma) {
    const int d = sigma.dim();
    if (d < 0) throw ArgumentError("betti_vector: empty complex");
    const auto r = boundary_ranks(sigma);
    std::vector<long long> beta(d + 1);
    for (int k = 0; k <= d; ++k)
        beta[k] = sigma.face_count(k) - static_cast<long long>(r[k]) -
                  static_cast<long long>(r[k + 1]);
    return beta;
}

HomologyProfile homology_profile(const SimplicialComplex& sigma,
                                 bool with_torsion) {
    const int d = sigma.dim();
    if (d < 0) throw ArgumentError("homology_profile: empty complex");

    HomologyProfile p;
    p.d = d;
    p.f = sigma.f_vector();
    const auto ranks = boundary_ranks(sigma);
    p.beta.resize(d + 1);
    p.delta.resize(d + 1);
    for (int k = 0; k <= d; ++k) {
        p.beta[k] = p.f[k] - static_cast<long long>(ranks[k]) -
                    static_cast<long long>(ranks[k + 1]);
        p.delta[k] = p.f[k] - p.beta[k];
    }

    // chi[j] = delta_{j-1} - delta_{j-2} + ...; equals rank of the j-th
    // boundary operator, which is the consistency check below.
    p.chi.assign(d + 1, 0);
    for (int j = 1; j <= d; ++j) {
        long long s = 0;
        for (int i = 1; i <= j; ++i) s += (i % 2 ? p.delta[j - i] : -p.delta[j - i]);
        p.chi[j] = s;
        if (s < 0 || s != static_cast<long long>(ranks[j]))
            throw InternalError("homology_profile: chi inconsistent with rank");
    }

    long long euler_beta = 0;
    for (int k = 0; k <= d; ++k) euler_beta += (k % 2 ? -p.beta[k] : p.beta[k]);
    if (p.euler() != euler_beta)
        throw InternalError("homology_profile: Euler-Poincare violated");
    if (p.beta[d] != p.f[d] - p.chi[d])
        throw InternalError("homology_profile: top Betti identity violated");

    if (with_torsion) {
        std::vector<std::vector<long long>> tor;
        for (int k = 0; k + 1 <= d; ++k) tor.push_back(integral_torsion(sigma, k));
        p.torsion = std::move(tor);
    }
    return p;
}

MorseQuantities morse_quantities(const SimplicialComplex& sigma) {
    const HomologyProfile p = homology_profile(sigma);
    return MorseQuantities{p.delta, p.chi};
}

SkeletonIdentity skeleton_identity(const SimplicialComplex& sigma) {
    const int d = sigma.dim();
    if (d < 1) throw ArgumentError("skeleton_identity: dimension must be >= 1");
    const auto beta = betti_vector(sigma);
    const auto skel_beta = betti_vector(skeleton(sigma, d - 1));
    SkeletonIdentity id;
    id.lhs = sigma.face_count(d);
    id.rhs = beta[d] - beta[d - 1] + skel_beta[d - 1];
    id.holds = (id.lhs == id.rhs);
    return id;
}

std::vector<std::vector<long long>> integer_boundary_matrix(
    const SimplicialComplex& sigma, int k) {
    if (k < 1 || k > sigma.dim())
        throw ArgumentError("integer_boundary_matrix: k out of range");
    const auto& rows = sigma.faces(k - 1);
    const auto& cols = sigma.faces(k);
    std::vector<std::vector<long long>> m(rows.size(),
                                          std::vector<long long>(cols.size(), 0));
    for (std::size_t c = 0; c < cols.size(); ++c) {
        const Simplex& face = cols[c];
        for (std::size_t i = 0; i < face.vertices.size(); ++i) {
            const auto pos = sigma.face_position(k - 1, face.without(i));
            if (!pos)
                throw InternalError("integer_boundary_matrix: missing subface");
            m[*pos][c] = (i % 2 ? -1 : 1);
        }
    }
    return m;
}

std::vector<long long> integral_torsion(const SimplicialComplex& sigma, int k) {
    if (k < 0 || k >= sigma.dim())
        throw ArgumentError("integral_torsion: k = " + std::to_string(k) +
                            " out of range (need 0 <= k < dim)");
    const auto diag = smith_invariant_factors(integer_boundary_matrix(sigma, k + 1));
    std::vector<long long> factors;
    for (long long v : diag)
        if (v > 1) factors.push_back(v);
    return factors;
}

std::optional<TorsionCertificate> torsion_obstruction(
    const SimplicialComplex& sigma) {
    const int d = sigma.dim();
    if (d < 2)
        throw ArgumentError("torsion_obstruction: dimension must be >= 2");
    auto factors = integral_torsion(sigma, d - 1);
    if (factors.empty()) return std::nullopt;
    return TorsionCertificate{d - 1, std::move(factors)};
}

} // namespace embcert
