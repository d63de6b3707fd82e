#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace embcert {

using VertexId = std::int32_t;

/// A face: strictly increasing vertex ids. Sorted order is the canonical
/// form; every constructor enforces it.
struct Simplex {
    std::vector<VertexId> vertices;

    int dim() const { return static_cast<int>(vertices.size()) - 1; }

    /// Canonicalizes (sorts) and rejects repeated vertices.
    static Simplex of(std::vector<VertexId> vs);

    /// Face obtained by dropping the vertex at position i.
    Simplex without(std::size_t i) const;

    bool contains(const Simplex& other) const;

    auto operator<=>(const Simplex&) const = default;
};

/// Finite abstract simplicial complex in facet-list form. Downward closure
/// is computed at construction and the object is immutable afterwards, so
/// shared concurrent reads are safe.
///
/// Convention: f_{-1} = 1 (the empty face). An empty complex has dim() = -1.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    /// Builds from token lists, one facet per entry. Vertex ids are assigned
    /// by first appearance; contained faces are absorbed silently.
    /// A repeated token within one facet is an input error naming the line.
    static SimplicialComplex from_facets(
        const std::vector<std::vector<std::string>>& facet_lines);

    /// Builds from already-canonical id simplices and their labels.
    static SimplicialComplex from_simplices(std::vector<std::string> labels,
                                            std::vector<Simplex> candidates);

    int dim() const { return dim_; }
    int vertex_count() const { return static_cast<int>(labels_.size()); }

    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(VertexId v) const { return labels_[v]; }

    /// Inclusion-maximal faces, sorted.
    const std::vector<Simplex>& facets() const { return facets_; }

    /// All k-faces, sorted; valid for 0 <= k <= dim().
    const std::vector<Simplex>& faces(int k) const;

    /// f_k, with f_{-1} = 1 and f_k = 0 outside [-1, dim()].
    long long face_count(int k) const;

    /// (f_0, ..., f_d).
    std::vector<long long> f_vector() const;

    /// Position of s in faces(k), or nullopt.
    std::optional<std::size_t> face_position(int k, const Simplex& s) const;

    bool contains(const Simplex& s) const;

private:
    int dim_ = -1;
    std::vector<std::string> labels_;
    std::vector<Simplex> facets_;
    std::vector<std::vector<Simplex>> faces_; // per dimension 0..dim_
};

// ---- constructions -------------------------------------------------------

/// k-skeleton: all faces of dimension <= k. Preserves f_i for i <= k.
SimplicialComplex skeleton(const SimplicialComplex& sigma, int k);

/// Join: facets are unions of facet pairs. Vertex label sets must be
/// disjoint. join(empty, B) = B.
SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b);

/// Cone and suspension: joins with one resp. two fresh apex vertices.
/// Fresh labels are generated so they never collide with existing ones.
SimplicialComplex cone(const SimplicialComplex& sigma);
SimplicialComplex suspension(const SimplicialComplex& sigma);

/// Barycentric subdivision: vertices are the nonempty faces, facets the
/// maximal chains of the face poset.
SimplicialComplex barycentric_subdivision(const SimplicialComplex& sigma);

// ---- predicates ----------------------------------------------------------

/// True iff all facets share the top dimension.
bool is_pure(const SimplicialComplex& sigma);

enum class RidgeRegularity {
    Closed,            // pure, every (d-1)-face in exactly 2 facets
    WithBoundary,      // pure, every (d-1)-face in <= 2 facets, some in 1
    NonPseudomanifold,
};

RidgeRegularity ridge_regularity(const SimplicialComplex& sigma);

/// Proper (d+1)-coloring of the 1-skeleton if one exists, found by exact
/// backtracking (vertices by decreasing degree, first admissible color), so
/// the result is deterministic. Requires dim >= 1.
std::optional<std::vector<int>> balanced_coloring(const SimplicialComplex& sigma);

// ---- generators ----------------------------------------------------------

/// Deterministic labeled generator families:
///   complete_graph:n            complete_bipartite:a:b      cycle:n
///   simplex_skeleton:n:k        simplex_boundary:m
///   cross_polytope_boundary:m   moebius5                    rp2_6
///   suspension:<family>:<params...>   (alias suspension_of)
SimplicialComplex generate(const std::string& family,
                           const std::vector<std::string>& params);

/// Parses "family:p1:p2" (an optional leading "gen:" is accepted).
SimplicialComplex generate_spec(std::string_view spec);

// ---- facet file format ----------------------------------------------------

/// Text format: UTF-8, '#' starts a comment to end of line, each non-blank
/// line is one facet as whitespace-separated vertex tokens.
/// Fails with line-numbered input errors; a file with no facets is an error.
SimplicialComplex parse_facet_stream(std::istream& in);

/// Serializes in the same format (canonical facet order, labels preserved).
std::string to_facet_string(const SimplicialComplex& sigma,
                            const std::string& header_comment = "");

/// FNV-1a hash of the canonicalized facet list (labels and id facets).
std::uint64_t content_digest(const SimplicialComplex& sigma);
std::string content_digest_hex(const SimplicialComplex& sigma);

} // namespace embcert
