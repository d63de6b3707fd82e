// The exact-arithmetic inequality battery and its applicability gates.

#include "embcert/obstruction.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "embcert/errors.hpp"

namespace embcert {

Rational Rational::of(long long num, long long den) {
    if (den == 0) throw InternalError("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    return Rational{num, den};
}

bool operator==(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num) * b.den ==
           static_cast<__int128>(b.num) * a.den;
}

bool operator<=(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num) * b.den <=
           static_cast<__int128>(b.num) * a.den;
}

std::string to_string(Target t) {
    switch (t) {
        case Target::Codim1: return "codim1";
        case Target::Codim0: return "codim0";
        case Target::Sphere: return "sphere";
    }
    return "?";
}

std::string to_string(Verdict v) {
    return v == Verdict::Obstructed ? "OBSTRUCTED" : "NO_OBSTRUCTION";
}

std::string target_space(Target t, int d) {
    switch (t) {
        case Target::Codim1: return "R^" + std::to_string(d + 1);
        case Target::Codim0: return "R^" + std::to_string(d);
        case Target::Sphere: return "S^" + std::to_string(d + 1);
    }
    return "?";
}

namespace {

long long binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    __int128 acc = 1;
    for (long long i = 1; i <= k; ++i) {
        acc = acc * (n - k + i) / i;
        if (acc > (static_cast<__int128>(1) << 62))
            throw OverflowError("binomial coefficient overflow");
    }
    return static_cast<long long>(acc);
}

// Precomputed inputs shared by the checks of one battery run.
struct Ctx {
    const SimplicialComplex& sigma;
    HomologyProfile prof;
    int d;
    long long n;
    bool balanced;
    GirthBound girth{0, false, std::nullopt};

    explicit Ctx(const SimplicialComplex& s)
        : sigma(s), prof(homology_profile(s)), d(s.dim()), n(s.face_count(0)),
          balanced(s.dim() >= 1 && balanced_coloring(s).has_value()) {}

    long long f(int k) const { return k == -1 ? 1 : (k < 0 || k > d ? 0 : prof.f[k]); }
    long long beta(int k) const { return k < 0 || k > d ? 0 : prof.beta[k]; }
    long long chi_top() const { return prof.chi[d]; } // chi_{d-1}
};

void finish(InequalityReport& rep) {
    if (rep.applicable && rep.lhs && rep.rhs) {
        rep.satisfied = (*rep.lhs <= *rep.rhs);
        rep.tight = (*rep.lhs == *rep.rhs);
    }
}

struct Gate {
    bool ok = true;
    std::string reason = "applicable";

    Gate& require(bool cond, const std::string& why) {
        if (ok && !cond) {
            ok = false;
            reason = why;
        }
        return *this;
    }
};

Gate top_cycles_gate(const Ctx& c) {
    Gate g;
    g.require(c.beta(c.d) >= 1,
              "requires beta_d >= 1 (no top-dimensional cycles)");
    return g;
}

// Truncated alternating sum delta_{d-1} - delta_{d-2} + ... +- delta_{d-k}.
long long truncated_sum(const Ctx& c, int k) {
    long long s = 0;
    for (int i = 1; i <= k; ++i)
        s += (i % 2 ? c.prof.delta[c.d - i] : -c.prof.delta[c.d - i]);
    return s;
}

InequalityReport eval_cycle_packing(const Ctx& c) {
    InequalityReport rep;
    rep.name = "cycle-packing";
    rep.rule = "g * (beta_d + 1) <= 2 * f_d";
    const Gate gate = top_cycles_gate(c);
    rep.applicable = gate.ok;
    rep.reason = gate.reason;
    rep.weak_girth = !c.girth.exact;
    rep.lhs = Rational::of(c.girth.value * (c.beta(c.d) + 1));
    rep.rhs = Rational::of(2 * c.f(c.d));
    finish(rep);
    return rep;
}

InequalityReport eval_girth_morse(const Ctx& c, int k) {
    InequalityReport rep;
    rep.name = "girth-morse-k" + std::to_string(k);
    rep.rule = "f_d <= g/(g-2) * (delta_{d-1} - ... + delta_{d-" +
               std::to_string(k) + "} - 1), odd k";
    Gate gate = top_cycles_gate(c);
    gate.require(k >= 1 && k % 2 == 1, "k must be odd and >= 1");
    gate.require(k <= c.d, "k must be at most d");
    rep.applicable = gate.ok;
    rep.reason = gate.reason;
    rep.weak_girth = !c.girth.exact;
    if (k >= 1 && k <= c.d) {
        const long long g = c.girth.value;
        rep.lhs = Rational::of(c.f(c.d));
        rep.rhs = Rational::of(g * (truncated_sum(c, k) - 1), g - 2);
    }
    finish(rep);
    return rep;
}

InequalityReport eval_girth_morse_exact(const Ctx& c) {
    InequalityReport rep;
    rep.name = "girth-morse-exact";
    rep.rule = "f_d <= g/(g-2) * (chi_{d-1} - 1)";
    const Gate gate = top_cycles_gate(c);
    rep.applicable = gate.ok;
    rep.reason = gate.reason;
    rep.weak_girth = !c.girth.exact;
    const long long g = c.girth.value;
    rep.lhs = Rational::of(c.f(c.d));
    rep.rhs = Rational::of(g * (c.chi_top() - 1), g - 2);
    finish(rep);
    return rep;
}

InequalityReport eval_ridge_defect(const Ctx& c) {
    InequalityReport rep;
    rep.name = "ridge-defect";
    rep.rule = "f_d <= (d+2)/d * (f_{d-1} - beta_{d-1} - 1)";
    const Gate gate = top_cycles_gate(c);
    rep.applicable = gate.ok;
    rep.reason = gate.reason;
    rep.lhs = Rational::of(c.f(c.d));
    rep.rhs = Rational::of((c.d + 2) * (c.f(c.d - 1) - c.beta(c.d - 1) - 1), c.d);
    finish(rep);
    return rep;
}

std::vector<InequalityReport> eval_balanced_pair(const Ctx& c) {
    std::vector<InequalityReport> out;
    {
        InequalityReport rep;
        rep.name = "balanced-cycle-packing";
        rep.rule = "2^d * (beta_d + 1) <= f_d (balanced complexes)";
        Gate gate;
        gate.require(c.balanced, "requires a (d+1)-colorable 1-skeleton");
        gate.require(c.beta(c.d) >= 1,
                     "requires beta_d >= 1 (no top-dimensional cycles)");
        rep.applicable = gate.ok;
        rep.reason = gate.reason;
        rep.lhs = Rational::of((1LL << c.d) * (c.beta(c.d) + 1));
        rep.rhs = Rational::of(c.f(c.d));
        finish(rep);
        out.push_back(std::move(rep));
    }
    {
        InequalityReport rep;
        rep.name = "balanced-morse";
        rep.rule = "f_d <= 2^d/(2^d - 1) * (chi_{d-1} - 1) (balanced complexes)";
        Gate gate;
        gate.require(c.balanced, "requires a (d+1)-colorable 1-skeleton");
        gate.require(c.beta(c.d) >= 1,
                     "requires beta_d >= 1 (no top-dimensional cycles)");
        rep.applicable = gate.ok;
        rep.reason = gate.reason;
        const long long p = 1LL << c.d;
        rep.lhs = Rational::of(c.f(c.d));
        rep.rhs = Rational::of(p * (c.chi_top() - 1), p - 1);
        finish(rep);
        out.push_back(std::move(rep));
    }
    return out;
}

std::vector<InequalityReport> eval_low_dim_codim1(const Ctx& c) {
    std::vector<InequalityReport> out;
    const bool connected = c.beta(0) == 1;

    if (c.d == 2) {
        {
            InequalityReport rep;
            rep.name = "d2-connected-bound";
            rep.rule = "f_2 <= 2 * (f_1 - beta_1 - n) (connected)";
            Gate gate;
            gate.require(connected, "requires a connected complex (beta_0 = 1)");
            gate.require(c.beta(2) >= 1,
                         "requires beta_2 >= 1 (no top-dimensional cycles)");
            rep.applicable = gate.ok;
            rep.reason = gate.reason;
            rep.lhs = Rational::of(c.f(2));
            rep.rhs = Rational::of(2 * (c.f(1) - c.beta(1) - c.n));
            finish(rep);
            out.push_back(std::move(rep));
        }
        {
            InequalityReport rep;
            rep.name = "d2-vertex-bound";
            rep.rule = "f_2 <= n * (n - 3)";
            Gate gate;
            gate.require(c.beta(2) >= 1,
                         "requires beta_2 >= 1 (no top-dimensional cycles)");
            rep.applicable = gate.ok;
            rep.reason = gate.reason;
            rep.lhs = Rational::of(c.f(2));
            rep.rhs = Rational::of(c.n * (c.n - 3));
            finish(rep);
            out.push_back(std::move(rep));
        }
        {
            InequalityReport rep;
            rep.name = "d2-balanced-vertex-bound";
            rep.rule = "f_2 <= 4/9 * (n^2 - 3n) (connected, balanced)";
            Gate gate;
            gate.require(connected, "requires a connected complex (beta_0 = 1)");
            gate.require(c.balanced, "requires a 3-colorable 1-skeleton");
            gate.require(c.beta(2) >= 1,
                         "requires beta_2 >= 1 (no top-dimensional cycles)");
            rep.applicable = gate.ok;
            rep.reason = gate.reason;
            rep.lhs = Rational::of(c.f(2));
            rep.rhs = Rational::of(4 * (c.n * c.n - 3 * c.n), 9);
            finish(rep);
            out.push_back(std::move(rep));
        }
    }

    if (c.d == 3) {
        {
            InequalityReport rep;
            rep.name = "d3-connected-bound";
            rep.rule =
                "f_3 <= 5/3 * (f_2 - f_1 - beta_2 + beta_1 + n - 2) (connected)";
            Gate gate;
            gate.require(connected, "requires a connected complex (beta_0 = 1)");
            gate.require(c.beta(3) >= 1,
                         "requires beta_3 >= 1 (no top-dimensional cycles)");
            rep.applicable = gate.ok;
            rep.reason = gate.reason;
            rep.lhs = Rational::of(c.f(3));
            rep.rhs = Rational::of(
                5 * (c.f(2) - c.f(1) - c.beta(2) + c.beta(1) + c.n - 2), 3);
            finish(rep);
            out.push_back(std::move(rep));
        }
        {
            InequalityReport rep;
            rep.name = "d3-cycle-defect-bound";
            rep.rule = "f_3 <= 5/3 * (f_2 + beta_1 - 1) (connected)";
            Gate gate;
            gate.require(connected, "requires a connected complex (beta_0 = 1)");
            gate.require(c.beta(3) >= 1,
                         "requires beta_3 >= 1 (no top-dimensional cycles)");
            rep.applicable = gate.ok;
            rep.reason = gate.reason;
            rep.lhs = Rational::of(c.f(3));
            rep.rhs = Rational::of(5 * (c.f(2) + c.beta(1) - 1), 3);
            finish(rep);
            out.push_back(std::move(rep));
        }
        {
            InequalityReport rep;
            rep.name = "d3-vertex-bound";
            rep.rule = "f_3 <= 5/3 * (C(n,3) + n - 2) (connected)";
            Gate gate;
            gate.require(connected, "requires a connected complex (beta_0 = 1)");
            gate.require(c.beta(3) >= 1,
                         "requires beta_3 >= 1 (no top-dimensional cycles)");
            rep.applicable = gate.ok;
            rep.reason = gate.reason;
            rep.lhs = Rational::of(c.f(3));
            rep.rhs = Rational::of(5 * (binomial(c.n, 3) + c.n - 2), 3);
            finish(rep);
            out.push_back(std::move(rep));
        }
        {
            InequalityReport rep;
            rep.name = "d3-simply-connected-bound";
            rep.rule = "f_3 <= 5/3 * (f_2 - 1) "
                       "(connected; pi_1-triviality proxied by beta_1(Z2) = 0)";
            Gate gate;
            gate.require(connected, "requires a connected complex (beta_0 = 1)");
            gate.require(c.beta(1) == 0,
                         "requires beta_1(Z2) = 0 (computable proxy for a "
                         "simply connected complex)");
            gate.require(c.beta(3) >= 1,
                         "requires beta_3 >= 1 (no top-dimensional cycles)");
            rep.applicable = gate.ok;
            rep.reason = gate.reason;
            rep.lhs = Rational::of(c.f(3));
            rep.rhs = Rational::of(5 * (c.f(2) - 1), 3);
            finish(rep);
            out.push_back(std::move(rep));
        }
    }
    return out;
}

InequalityReport eval_grunbaum(const Ctx& c) {
    InequalityReport rep;
    rep.name = "grunbaum-density";
    Gate gate;
    gate.require(is_pure(c.sigma), "requires a pure complex");
    rep.applicable = gate.ok;
    rep.reason = gate.ok
        ? "applicable; a violation excludes every (d+1)-manifold as target"
        : gate.reason;
    if (c.d == 1) {
        rep.rule = "f_1 <= 3 * f_0 - 5";
        rep.lhs = Rational::of(c.f(1));
        rep.rhs = Rational::of(3 * c.f(0) - 5);
    } else {
        rep.rule = "f_d <= 6/(d+1) * f_{d-1} - 10/(d(d+1)) * f_{d-2}";
        const long long den = static_cast<long long>(c.d) * (c.d + 1);
        rep.lhs = Rational::of(c.f(c.d));
        rep.rhs = Rational::of(6 * c.d * c.f(c.d - 1) - 10 * c.f(c.d - 2), den);
    }
    finish(rep);
    return rep;
}

InequalityReport eval_sperner(const Ctx& c, int i, int j) {
    InequalityReport rep;
    rep.name = "sperner-ratio-" + std::to_string(i) + "-" + std::to_string(j);
    rep.rule = "f_i / f_j <= C(n,i+1) / C(n,j+1)";
    rep.sanity = true;
    Gate gate;
    gate.require(i > j && j >= 0 && i <= c.d, "requires d >= i > j >= 0");
    gate.require(gate.ok && c.f(j) > 0, "requires f_j > 0");
    rep.applicable = gate.ok;
    rep.reason = gate.ok ? "sanity: holds for every complex" : gate.reason;
    if (gate.ok) {
        rep.lhs = Rational::of(c.f(i), c.f(j));
        rep.rhs = Rational::of(binomial(c.n, i + 1), binomial(c.n, j + 1));
    }
    finish(rep);
    return rep;
}

std::vector<InequalityReport> eval_codim0(const Ctx& c) {
    std::vector<InequalityReport> out;
    {
        InequalityReport rep;
        rep.name = "codim0-ridge";
        rep.rule = "f_d <= 2/(d+1) * f_{d-1} - 1";
        rep.applicable = true;
        rep.reason = "applicable";
        rep.lhs = Rational::of(c.f(c.d));
        rep.rhs = Rational::of(2 * c.f(c.d - 1) - (c.d + 1), c.d + 1);
        finish(rep);
        out.push_back(std::move(rep));
    }
    {
        // Packing bound applied to the codimension-one skeleton, which also
        // lies in R^d. Uses the skeleton's own girth floor d+1.
        InequalityReport rep;
        rep.name = "codim0-skeleton-packing";
        rep.rule = "(d+1) * (beta_{d-1}(skeleton) + 1) <= 2 * f_{d-1}";
        Gate gate;
        gate.require(c.d >= 2, "requires d >= 2 (skeleton must have cycles)");
        long long skel_beta = 0;
        if (c.d >= 2) {
            skel_beta = betti_vector(skeleton(c.sigma, c.d - 1))[c.d - 1];
            gate.require(skel_beta >= 1,
                         "requires beta_{d-1}(skeleton) >= 1");
            rep.lhs = Rational::of((c.d + 1) * (skel_beta + 1));
            rep.rhs = Rational::of(2 * c.f(c.d - 1));
        }
        rep.applicable = gate.ok;
        rep.reason = gate.reason;
        finish(rep);
        out.push_back(std::move(rep));
    }
    if (c.d == 2) {
        InequalityReport rep;
        rep.name = "codim0-d2-vertex";
        rep.rule = "f_2 <= 2n - 5";
        rep.applicable = true;
        rep.reason = "applicable";
        rep.lhs = Rational::of(c.f(2));
        rep.rhs = Rational::of(2 * c.n - 5);
        finish(rep);
        out.push_back(std::move(rep));
    }
    if (c.d == 3) {
        InequalityReport rep;
        rep.name = "codim0-d3-vertex";
        rep.rule = "f_3 <= n(n-3)/2 - 1";
        rep.applicable = true;
        rep.reason = "applicable";
        rep.lhs = Rational::of(c.f(3));
        rep.rhs = Rational::of(c.n * (c.n - 3) - 2, 2);
        finish(rep);
        out.push_back(std::move(rep));
    }
    return out;
}

Ctx make_ctx(const SimplicialComplex& sigma) {
    if (sigma.dim() < 1)
        throw ArgumentError("obstruction checks need dimension >= 1");
    return Ctx(sigma);
}

void fill_exact_girth(Ctx& c, const SearchBudget& budget) {
    c.girth = girth_lower_bound(c.sigma, budget);
}

void fill_weak_girth(Ctx& c) {
    const long long floor = c.d + 2;
    const long long balanced_floor = c.balanced ? (1LL << (c.d + 1)) : floor;
    if (c.beta(c.d) == 0) {
        c.girth = GirthBound{floor, true, std::nullopt}; // convention value
    } else {
        c.girth = GirthBound{std::max(floor, balanced_floor), false, std::nullopt};
    }
}

} // namespace

InequalityReport check_cycle_packing(const SimplicialComplex& sigma,
                                     const SearchBudget& budget) {
    Ctx c = make_ctx(sigma);
    fill_exact_girth(c, budget);
    return eval_cycle_packing(c);
}

InequalityReport check_girth_morse(const SimplicialComplex& sigma, int k,
                                   const SearchBudget& budget) {
    Ctx c = make_ctx(sigma);
    fill_exact_girth(c, budget);
    return eval_girth_morse(c, k);
}

InequalityReport check_girth_morse_exact(const SimplicialComplex& sigma,
                                         const SearchBudget& budget) {
    Ctx c = make_ctx(sigma);
    fill_exact_girth(c, budget);
    return eval_girth_morse_exact(c);
}

InequalityReport check_ridge_defect(const SimplicialComplex& sigma) {
    return eval_ridge_defect(make_ctx(sigma));
}

std::vector<InequalityReport> check_balanced_pair(const SimplicialComplex& sigma) {
    return eval_balanced_pair(make_ctx(sigma));
}

std::vector<InequalityReport> check_codim0(const SimplicialComplex& sigma) {
    return eval_codim0(make_ctx(sigma));
}

std::vector<InequalityReport> check_low_dim_codim1(const SimplicialComplex& sigma) {
    return eval_low_dim_codim1(make_ctx(sigma));
}

InequalityReport check_grunbaum(const SimplicialComplex& sigma) {
    return eval_grunbaum(make_ctx(sigma));
}

InequalityReport check_sperner(const SimplicialComplex& sigma, int i, int j) {
    return eval_sperner(make_ctx(sigma), i, j);
}

ObstructionVerdict battery(const SimplicialComplex& sigma, Target target,
                           const SearchBudget& budget) {
    Ctx c = make_ctx(sigma);

    ObstructionVerdict out;
    out.target = target;
    out.d = c.d;
    out.balanced = c.balanced;

    if (target == Target::Codim0) {
        out.reports = eval_codim0(c);
    } else if (target == Target::Codim1) {
        // Cheap checks first (f-vector and Betti only).
        std::vector<InequalityReport> cheap;
        cheap.push_back(eval_ridge_defect(c));
        for (auto& r : eval_balanced_pair(c)) cheap.push_back(std::move(r));
        for (auto& r : eval_low_dim_codim1(c)) cheap.push_back(std::move(r));
        cheap.push_back(eval_grunbaum(c));
        for (int k = 1; k <= c.d; ++k) cheap.push_back(eval_sperner(c, k, k - 1));

        bool cheap_violation = false;
        for (const auto& r : cheap)
            if (!r.sanity && r.violated()) cheap_violation = true;

        // The exhaustive girth enumeration is the one expensive step; skip
        // it when a violation is already established and fall back to the
        // verified lower bound (the girth checks stay sound either way).
        if (cheap_violation)
            fill_weak_girth(c);
        else
            fill_exact_girth(c, budget);
        out.girth = c.girth;
        if (c.girth.exact && c.girth.witness)
            out.girth_witness =
                GirthWitness{c.girth.value, *c.girth.witness};

        out.reports.push_back(eval_cycle_packing(c));
        for (int k = 1; k <= c.d; k += 2)
            out.reports.push_back(eval_girth_morse(c, k));
        out.reports.push_back(eval_girth_morse_exact(c));
        for (auto& r : cheap) out.reports.push_back(std::move(r));
        out.girth_relevant = c.beta(c.d) >= 1;
    }

    // Torsion fires for both the sphere target and codim-1 (embedding into
    // R^{d+1} factors through S^{d+1}).
    if ((target == Target::Sphere || target == Target::Codim1) && c.d >= 2)
        out.torsion = torsion_obstruction(sigma);

    for (const auto& r : out.reports)
        if (!r.sanity && r.violated()) out.violated.push_back(r.name);
    out.inequality_obstructed = !out.violated.empty();
    out.verdict = (out.inequality_obstructed || out.torsion.has_value())
                      ? Verdict::Obstructed
                      : Verdict::NoObstruction;
    return out;
}

ObstructionVerdict skeleton_of_manifold_battery(const SimplicialComplex& m,
                                                const SearchBudget& budget) {
    if (m.dim() < 2)
        throw ArgumentError(
            "skeleton-of-manifold: the pseudomanifold must have dimension >= 2");
    if (ridge_regularity(m) != RidgeRegularity::Closed)
        throw ArgumentError(
            "skeleton-of-manifold: input is not a closed pseudomanifold");

    // Closed pseudomanifold facet relation: (D+1) f_D = 2 f_{D-1}.
    const int dd = m.dim();
    if ((dd + 1) * m.face_count(dd) != 2 * m.face_count(dd - 1))
        throw InternalError("closed pseudomanifold violates the facet relation");

    return battery(skeleton(m, dd - 1), Target::Codim1, budget);
}

} // namespace embcert
