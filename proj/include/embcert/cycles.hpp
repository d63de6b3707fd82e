#pragma once

#include <optional>
#include <string>
#include <vector>

#include "embcert/complex.hpp"
#include "embcert/gf2.hpp"

namespace embcert {

/// Caps for the exact searches. Enumeration is exponential in the kernel
/// dimension, so each search refuses to start past its cap instead of
/// silently approximating.
struct SearchBudget {
    int girth_kernel_cap = 22;
    int basis_kernel_cap = 14;
    long long max_nodes = 20'000'000;
};

/// A nonzero top cycle of minimum support. Coordinates index the d-faces in
/// canonical order.
struct GirthWitness {
    long long weight = 0;
    gf2::BitVector cycle;
};

/// Minimum-support nonzero d-cycle, or nullopt when the cycle space is
/// trivial. Exhaustive Gray-code walk over all 2^r - 1 kernel combinations
/// with incremental XOR and popcount; exits early once the unconditional
/// floor d+2 is reached. Throws BudgetError when r exceeds the girth cap.
std::optional<GirthWitness> min_weight_cycle(const SimplicialComplex& sigma,
                                             const SearchBudget& budget = {});

/// Girth: weight of a minimum nonzero d-cycle, or d+2 by convention when
/// beta_d = 0. Always >= d+2. Throws BudgetError like min_weight_cycle.
long long girth(const SimplicialComplex& sigma, const SearchBudget& budget = {});

/// Girth, degraded gracefully: exact when the enumeration fits the budget,
/// otherwise a verified lower bound (2^{d+1} for balanced complexes, d+2
/// otherwise) with exact = false. Never throws BudgetError.
struct GirthBound {
    long long value = 0;
    bool exact = false;
    std::optional<gf2::BitVector> witness; // present when exact and beta_d > 0
};
GirthBound girth_lower_bound(const SimplicialComplex& sigma,
                             const SearchBudget& budget = {});

/// The counting refutation: no m-complete basis can exist when
/// girth * beta_d > m * f_d, because a basis matrix would need at least
/// girth ones per row but admits at most m per column.
struct CountingRefutation {
    long long girth_bound = 0; // verified lower bound for the girth
    bool girth_exact = false;
    long long cycle_rank = 0;  // beta_d
    long long m = 0;
    long long top_faces = 0;   // f_d
    long long lhs() const { return girth_bound * cycle_rank; }
    long long rhs() const { return m * top_faces; }
};
std::optional<CountingRefutation> counting_refutation(
    const SimplicialComplex& sigma, long long m, const SearchBudget& budget = {});

/// Witness basis for the m-complete property: linearly independent top
/// cycles, one per homology generator, with every d-face used at most m
/// times across supports.
struct CycleBasisCertificate {
    long long m = 0;
    std::vector<gf2::BitVector> cycles;
};

enum class McStatus { Yes, No, Unknown };

struct McResult {
    McStatus status = McStatus::Unknown;
    std::optional<CycleBasisCertificate> witness; // on Yes
    std::optional<CountingRefutation> refutation; // on No by counting
    std::string note;
};

/// Exact decision procedure for the existence of an m-complete basis of the
/// top Z2 homology. Candidates are all nonzero kernel vectors sorted by
/// (weight, canonical order); backtracking keeps per-face usage <= m and
/// prunes with the counting bound. No means the search space was exhausted
/// or the counting refutation fired; Unknown is the budget channel.
McResult m_complete_basis(const SimplicialComplex& sigma, long long m,
                          const SearchBudget& budget = {});

/// Validates a claimed certificate: every cycle nonzero and in ker d_d,
/// independent, count equal to beta_d, per-face usage <= m.
bool validate_basis_certificate(const SimplicialComplex& sigma,
                                const CycleBasisCertificate& cert);

} // namespace embcert
