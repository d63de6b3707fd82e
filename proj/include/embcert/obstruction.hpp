#pragma once

#include <optional>
#include <string>
#include <vector>

#include "embcert/complex.hpp"
#include "embcert/cycles.hpp"
#include "embcert/homology.hpp"

namespace embcert {

/// Exact rational as an integer pair, den > 0. Comparisons cross-multiply
/// in 128-bit arithmetic, so no floating point is ever involved.
struct Rational {
    long long num = 0;
    long long den = 1;

    static Rational of(long long num, long long den = 1);
    friend bool operator==(const Rational& a, const Rational& b);
    friend bool operator<=(const Rational& a, const Rational& b);
};

/// One evaluated face-number inequality. When a hypothesis gate fails,
/// applicable is false, satisfied/tight stay empty and reason says why;
/// lhs/rhs are still reported whenever they are well defined.
struct InequalityReport {
    std::string name;     // stable identifier, see the schema doc
    std::string rule;     // the inequality with symbolic sides
    bool applicable = false;
    std::string reason;   // gate outcome
    bool sanity = false;  // holds for every complex; never part of a verdict
    std::optional<Rational> lhs, rhs;
    std::optional<bool> satisfied; // lhs <= rhs, by cross-multiplication
    std::optional<bool> tight;     // equality
    bool weak_girth = false;       // girth replaced by a verified lower bound

    bool violated() const { return applicable && satisfied && !*satisfied; }
};

enum class Target { Codim1, Codim0, Sphere };

enum class Verdict { Obstructed, NoObstruction };

std::string to_string(Target t);
std::string to_string(Verdict v);
std::string target_space(Target t, int d); // e.g. "R^3" or "S^3"

/// Aggregated result of the inequality battery for one target. OBSTRUCTED
/// means some applicable licensed inequality is violated or the torsion
/// obstruction fired; NO_OBSTRUCTION never claims embeddability.
struct ObstructionVerdict {
    Target target = Target::Codim1;
    int d = 0;
    Verdict verdict = Verdict::NoObstruction;
    std::vector<InequalityReport> reports;   // canonical order
    std::vector<std::string> violated;       // names of violated reports
    std::optional<TorsionCertificate> torsion;
    std::optional<GirthWitness> girth_witness;
    GirthBound girth{0, false, std::nullopt};
    bool girth_relevant = false;  // some girth-based check was applicable
    bool balanced = false;
    bool inequality_obstructed = false; // violations excluding torsion
};

// ---- individual checks -----------------------------------------------------
// Every girth-derived bound is gated on beta_d >= 1: with no top cycles the
// licensing theorems say nothing, and small examples (a single edge) show
// the raw inequalities can fail on embeddable complexes.

/// g * (beta_d + 1) <= 2 * f_d.
InequalityReport check_cycle_packing(const SimplicialComplex& sigma,
                                     const SearchBudget& budget = {});

/// f_d <= g/(g-2) * (delta_{d-1} - delta_{d-2} + ... + delta_{d-k} - 1)
/// for odd k, 1 <= k <= d.
InequalityReport check_girth_morse(const SimplicialComplex& sigma, int k,
                                   const SearchBudget& budget = {});

/// The exact-chi form: f_d <= g/(g-2) * (chi_{d-1} - 1).
InequalityReport check_girth_morse_exact(const SimplicialComplex& sigma,
                                         const SearchBudget& budget = {});

/// f_d <= (d+2)/d * (f_{d-1} - beta_{d-1} - 1).
InequalityReport check_ridge_defect(const SimplicialComplex& sigma);

/// For balanced complexes: 2^d (beta_d + 1) <= f_d and
/// f_d <= 2^d/(2^d - 1) * (chi_{d-1} - 1).
std::vector<InequalityReport> check_balanced_pair(const SimplicialComplex& sigma);

/// Codim-0 set: f_d <= 2/(d+1) f_{d-1} - 1, the skeleton packing bound, and
/// the vertex-count forms for d = 2 (f_2 <= 2n-5) and d = 3
/// (f_3 <= n(n-3)/2 - 1).
std::vector<InequalityReport> check_codim0(const SimplicialComplex& sigma);

/// Low-dimensional codim-1 set (d = 2 and d = 3 forms).
std::vector<InequalityReport> check_low_dim_codim1(const SimplicialComplex& sigma);

/// Grunbaum's density bound for pure complexes; a violation rules out PL
/// embedding into every (d+1)-manifold. d = 1 uses f_1 <= 3 f_0 - 5.
InequalityReport check_grunbaum(const SimplicialComplex& sigma);

/// Sperner ratio f_i / f_j <= C(n, i+1) / C(n, j+1) for i > j. Holds for
/// all complexes; a violation signals corrupted input or a bug.
InequalityReport check_sperner(const SimplicialComplex& sigma, int i, int j);

/// Runs every applicable check for the target and aggregates the verdict.
/// The codim-1 battery also includes the torsion obstruction (topological
/// embedding into R^{d+1} factors through S^{d+1}).
ObstructionVerdict battery(const SimplicialComplex& sigma, Target target,
                           const SearchBudget& budget = {});

/// Convenience workflow: given a closed pseudomanifold M of dimension d+1,
/// runs the codim-1 battery on its d-skeleton.
ObstructionVerdict skeleton_of_manifold_battery(const SimplicialComplex& m,
                                                const SearchBudget& budget = {});

} // namespace embcert
