// Girth and m-complete basis searches over the top-dimensional cycle space.
//
// Input complexes carry no (d+1)-faces, so the top homology is exactly
// ker d_d and every basis of it consists of kernel vectors.

#include "embcert/cycles.hpp"

#include <algorithm>
#include <bit>

#include "embcert/errors.hpp"
#include "embcert/homology.hpp"

namespace embcert {

namespace {

std::vector<gf2::BitVector> top_kernel(const SimplicialComplex& sigma) {
    const int d = sigma.dim();
    if (d < 1) throw ArgumentError("top cycle space needs dimension >= 1");
    return gf2::kernel_basis(boundary_matrix(sigma, d));
}

} // namespace

std::optional<GirthWitness> min_weight_cycle(const SimplicialComplex& sigma,
                                             const SearchBudget& budget) {
    const auto kernel = top_kernel(sigma);
    if (kernel.empty()) return std::nullopt;

    const int r = static_cast<int>(kernel.size());
    if (r > budget.girth_kernel_cap)
        throw BudgetError("min_weight_cycle: kernel dimension " +
                              std::to_string(r) + " exceeds the girth cap " +
                              std::to_string(budget.girth_kernel_cap),
                          budget.girth_kernel_cap);

    const long long floor = sigma.dim() + 2;
    gf2::BitVector current(kernel[0].size());
    gf2::BitVector best;
    long long best_weight = -1;

    const std::uint64_t total = (std::uint64_t{1} << r) - 1;
    for (std::uint64_t i = 1; i <= total; ++i) {
        current ^= kernel[std::countr_zero(i)]; // Gray-code step
        const long long w = static_cast<long long>(current.popcount());
        if (best_weight < 0 || w < best_weight ||
            (w == best_weight && gf2::BitVector::canonical_less(current, best))) {
            best_weight = w;
            best = current;
            if (best_weight == floor) break;
        }
    }
    return GirthWitness{best_weight, std::move(best)};
}

long long girth(const SimplicialComplex& sigma, const SearchBudget& budget) {
    const auto witness = min_weight_cycle(sigma, budget);
    if (!witness) return sigma.dim() + 2;
    return witness->weight;
}

GirthBound girth_lower_bound(const SimplicialComplex& sigma,
                             const SearchBudget& budget) {
    try {
        const auto witness = min_weight_cycle(sigma, budget);
        if (!witness) return GirthBound{sigma.dim() + 2, true, std::nullopt};
        return GirthBound{witness->weight, true, witness->cycle};
    } catch (const BudgetError&) {
        // Verified lower bounds: d+2 always; 2^{d+1} for balanced complexes
        // (a balanced complex with a top cycle contains a balanced closed
        // pseudomanifold, which has at least 2^{d+1} facets).
        const int d = sigma.dim();
        long long bound = d + 2;
        if (balanced_coloring(sigma).has_value())
            bound = std::max(bound, 1LL << (d + 1));
        return GirthBound{bound, false, std::nullopt};
    }
}

std::optional<CountingRefutation> counting_refutation(
    const SimplicialComplex& sigma, long long m, const SearchBudget& budget) {
    const int d = sigma.dim();
    if (d < 1) throw ArgumentError("counting_refutation: dimension must be >= 1");
    if (m < 1) throw ArgumentError("counting_refutation: m must be >= 1");

    const gf2::BitMatrix bd = boundary_matrix(sigma, d);
    const long long f_d = sigma.face_count(d);
    const long long r = f_d - static_cast<long long>(gf2::rank(bd));
    if (r == 0) return std::nullopt;

    const GirthBound g = girth_lower_bound(sigma, budget);
    CountingRefutation ref{g.value, g.exact, r, m, f_d};
    if (ref.lhs() > ref.rhs()) return ref;
    return std::nullopt;
}

namespace {

struct BasisSearch {
    const std::vector<gf2::BitVector>& candidates;
    const std::vector<long long>& weights;
    long long m;
    long long ones_budget; // m * f_d
    std::size_t need;      // beta_d cycles to pick
    long long max_nodes;

    std::vector<int> usage;              // per d-face multiplicity
    std::vector<gf2::BitVector> picked;
    long long total_ones = 0;
    long long nodes = 0;
    bool aborted = false;

    bool usage_fits(const gf2::BitVector& c) const {
        for (std::size_t face : c.support())
            if (usage[face] + 1 > m) return false;
        return true;
    }

    void apply(const gf2::BitVector& c) {
        for (std::size_t face : c.support()) ++usage[face];
        total_ones += static_cast<long long>(c.popcount());
        picked.push_back(c);
    }

    void undo(const gf2::BitVector& c) {
        for (std::size_t face : c.support()) --usage[face];
        total_ones -= static_cast<long long>(c.popcount());
        picked.pop_back();
    }

    bool dfs(std::size_t start) {
        if (picked.size() == need) return true;
        const long long remaining = static_cast<long long>(need - picked.size());
        for (std::size_t i = start; i < candidates.size(); ++i) {
            if (++nodes > max_nodes) {
                aborted = true;
                return false;
            }
            // Weights ascend, so every later candidate costs at least
            // weights[i] ones; prune the whole tail at once.
            if (total_ones + remaining * weights[i] > ones_budget) return false;
            const gf2::BitVector& c = candidates[i];
            if (!usage_fits(c)) continue;
            if (gf2::is_in_span(picked, c)) continue;
            apply(c);
            if (dfs(i + 1)) return true;
            undo(c);
            if (aborted) return false;
        }
        return false;
    }
};

} // namespace

McResult m_complete_basis(const SimplicialComplex& sigma, long long m,
                          const SearchBudget& budget) {
    const int d = sigma.dim();
    if (d < 1) throw ArgumentError("m_complete_basis: dimension must be >= 1");
    if (m < 1) throw ArgumentError("m_complete_basis: m must be >= 1");

    const auto kernel = top_kernel(sigma);
    const int r = static_cast<int>(kernel.size());
    if (r == 0) {
        McResult res;
        res.status = McStatus::Yes;
        res.witness = CycleBasisCertificate{m, {}};
        res.note = "trivial: no top-dimensional cycles";
        return res;
    }

    if (auto ref = counting_refutation(sigma, m, budget)) {
        McResult res;
        res.status = McStatus::No;
        res.refutation = *ref;
        res.note = "counting refutation: girth*rank exceeds m*f_d";
        return res;
    }

    if (r > budget.basis_kernel_cap) {
        McResult res;
        res.status = McStatus::Unknown;
        res.note = "kernel dimension " + std::to_string(r) +
                   " exceeds the basis search cap " +
                   std::to_string(budget.basis_kernel_cap);
        return res;
    }

    // All nonzero kernel vectors, ordered by (weight, canonical bits) so the
    // witness is reproducible.
    std::vector<gf2::BitVector> candidates;
    candidates.reserve((std::size_t{1} << r) - 1);
    gf2::BitVector current(kernel[0].size());
    const std::uint64_t total = (std::uint64_t{1} << r) - 1;
    for (std::uint64_t i = 1; i <= total; ++i) {
        current ^= kernel[std::countr_zero(i)];
        candidates.push_back(current);
    }
    std::sort(candidates.begin(), candidates.end(),
              [](const gf2::BitVector& a, const gf2::BitVector& b) {
                  const auto wa = a.popcount(), wb = b.popcount();
                  if (wa != wb) return wa < wb;
                  return gf2::BitVector::canonical_less(a, b);
              });
    std::vector<long long> weights;
    weights.reserve(candidates.size());
    for (const auto& c : candidates)
        weights.push_back(static_cast<long long>(c.popcount()));

    BasisSearch search{candidates,
                       weights,
                       m,
                       m * sigma.face_count(d),
                       static_cast<std::size_t>(r),
                       budget.max_nodes,
                       std::vector<int>(sigma.faces(d).size(), 0),
                       {},
                       0,
                       0,
                       false};

    McResult res;
    if (search.dfs(0)) {
        res.status = McStatus::Yes;
        res.witness = CycleBasisCertificate{m, std::move(search.picked)};
    } else if (search.aborted) {
        res.status = McStatus::Unknown;
        res.note = "node cap " + std::to_string(budget.max_nodes) + " exhausted";
    } else {
        res.status = McStatus::No;
        res.note = "exhaustive search: no independent selection stays within "
                   "multiplicity " + std::to_string(m);
    }
    return res;
}

bool validate_basis_certificate(const SimplicialComplex& sigma,
                                const CycleBasisCertificate& cert) {
    const int d = sigma.dim();
    if (d < 1) return false;
    const gf2::BitMatrix bd = boundary_matrix(sigma, d);
    const long long beta_d =
        sigma.face_count(d) - static_cast<long long>(gf2::rank(bd));
    if (static_cast<long long>(cert.cycles.size()) != beta_d) return false;

    gf2::EchelonBasis independent;
    std::vector<long long> usage(sigma.faces(d).size(), 0);
    for (const auto& c : cert.cycles) {
        if (!c.any()) return false;
        if (c.size() != static_cast<std::size_t>(sigma.face_count(d))) return false;
        if (bd.multiply(c).any()) return false;
        if (!independent.insert(c)) return false;
        for (std::size_t face : c.support())
            if (++usage[face] > cert.m) return false;
    }
    return true;
}

} // namespace embcert
