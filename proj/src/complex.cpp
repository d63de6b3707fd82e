// Facet-list simplicial complexes: construction, closure, predicates.

#include "embcert/complex.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <set>
#include <sstream>

#include "embcert/errors.hpp"

namespace embcert {

Simplex Simplex::of(std::vector<VertexId> vs) {
    std::sort(vs.begin(), vs.end());
    if (std::adjacent_find(vs.begin(), vs.end()) != vs.end())
        throw ArgumentError("simplex has a repeated vertex");
    return Simplex{std::move(vs)};
}

Simplex Simplex::without(std::size_t i) const {
    Simplex out;
    out.vertices.reserve(vertices.size() - 1);
    for (std::size_t j = 0; j < vertices.size(); ++j)
        if (j != i) out.vertices.push_back(vertices[j]);
    return out;
}

bool Simplex::contains(const Simplex& other) const {
    return std::includes(vertices.begin(), vertices.end(),
                         other.vertices.begin(), other.vertices.end());
}

SimplicialComplex SimplicialComplex::from_simplices(
    std::vector<std::string> labels, std::vector<Simplex> candidates) {
    SimplicialComplex out;
    out.labels_ = std::move(labels);

    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()),
                     candidates.end());

    // Keep inclusion-maximal simplices only.
    for (const Simplex& s : candidates) {
        bool maximal = true;
        for (const Simplex& t : candidates) {
            if (t.vertices.size() > s.vertices.size() && t.contains(s)) {
                maximal = false;
                break;
            }
        }
        if (maximal) out.facets_.push_back(s);
    }

    for (const Simplex& f : out.facets_)
        out.dim_ = std::max(out.dim_, f.dim());

    // Downward closure, one sorted duplicate-free list per dimension.
    if (out.dim_ >= 0) {
        out.faces_.resize(out.dim_ + 1);
        std::vector<std::set<Simplex>> per_dim(out.dim_ + 1);
        for (const Simplex& f : out.facets_) {
            // All nonempty subsets of f.
            const std::size_t n = f.vertices.size();
            for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
                Simplex sub;
                for (std::size_t i = 0; i < n; ++i)
                    if ((mask >> i) & 1u) sub.vertices.push_back(f.vertices[i]);
                per_dim[sub.dim()].insert(std::move(sub));
            }
        }
        for (int k = 0; k <= out.dim_; ++k)
            out.faces_[k].assign(per_dim[k].begin(), per_dim[k].end());
    }
    return out;
}

SimplicialComplex SimplicialComplex::from_facets(
    const std::vector<std::vector<std::string>>& facet_lines) {
    std::vector<std::string> labels;
    std::map<std::string, VertexId> id_of;
    std::vector<Simplex> candidates;

    for (std::size_t line = 0; line < facet_lines.size(); ++line) {
        const auto& tokens = facet_lines[line];
        if (tokens.empty())
            throw InputError("facet " + std::to_string(line + 1) + " is empty");
        std::vector<VertexId> vs;
        vs.reserve(tokens.size());
        for (const std::string& tok : tokens) {
            auto [it, inserted] =
                id_of.try_emplace(tok, static_cast<VertexId>(labels.size()));
            if (inserted) labels.push_back(tok);
            vs.push_back(it->second);
        }
        std::sort(vs.begin(), vs.end());
        if (std::adjacent_find(vs.begin(), vs.end()) != vs.end())
            throw InputError("facet " + std::to_string(line + 1) +
                             " repeats a vertex token");
        candidates.push_back(Simplex{std::move(vs)});
    }
    return from_simplices(std::move(labels), std::move(candidates));
}

const std::vector<Simplex>& SimplicialComplex::faces(int k) const {
    if (k < 0 || k > dim_)
        throw ArgumentError("faces: dimension " + std::to_string(k) +
                            " out of range");
    return faces_[k];
}

long long SimplicialComplex::face_count(int k) const {
    if (k == -1) return 1;
    if (k < -1 || k > dim_) return 0;
    return static_cast<long long>(faces_[k].size());
}

std::vector<long long> SimplicialComplex::f_vector() const {
    std::vector<long long> f;
    for (int k = 0; k <= dim_; ++k) f.push_back(face_count(k));
    return f;
}

std::optional<std::size_t> SimplicialComplex::face_position(
    int k, const Simplex& s) const {
    if (k < 0 || k > dim_) return std::nullopt;
    const auto& list = faces_[k];
    const auto it = std::lower_bound(list.begin(), list.end(), s);
    if (it == list.end() || *it != s) return std::nullopt;
    return static_cast<std::size_t>(it - list.begin());
}

bool SimplicialComplex::contains(const Simplex& s) const {
    return face_position(s.dim(), s).has_value();
}

// ---- constructions -------------------------------------------------------

SimplicialComplex skeleton(const SimplicialComplex& sigma, int k) {
    if (k < 0 || k > sigma.dim())
        throw ArgumentError("skeleton: dimension " + std::to_string(k) +
                            " out of range for a complex of dimension " +
                            std::to_string(sigma.dim()));
    std::vector<Simplex> candidates = sigma.faces(k);
    for (const Simplex& f : sigma.facets())
        if (f.dim() < k) candidates.push_back(f);
    return SimplicialComplex::from_simplices(sigma.labels(),
                                             std::move(candidates));
}

SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b) {
    if (a.facets().empty()) return b;
    if (b.facets().empty()) return a;

    std::set<std::string> seen(a.labels().begin(), a.labels().end());
    for (const std::string& l : b.labels())
        if (seen.count(l))
            throw ArgumentError("join: vertex label '" + l +
                                "' appears on both sides");

    std::vector<std::vector<std::string>> lines;
    for (const Simplex& f : a.facets()) {
        for (const Simplex& g : b.facets()) {
            std::vector<std::string> tokens;
            for (VertexId v : f.vertices) tokens.push_back(a.label(v));
            for (VertexId v : g.vertices) tokens.push_back(b.label(v));
            lines.push_back(std::move(tokens));
        }
    }
    return SimplicialComplex::from_facets(lines);
}

namespace {

std::string fresh_label(const SimplicialComplex& sigma, std::string base) {
    const auto& ls = sigma.labels();
    while (std::find(ls.begin(), ls.end(), base) != ls.end()) base += "'";
    return base;
}

SimplicialComplex points(const std::vector<std::string>& labels) {
    std::vector<std::vector<std::string>> lines;
    for (const std::string& l : labels) lines.push_back({l});
    return SimplicialComplex::from_facets(lines);
}

} // namespace

SimplicialComplex cone(const SimplicialComplex& sigma) {
    return join(sigma, points({fresh_label(sigma, "apex")}));
}

SimplicialComplex suspension(const SimplicialComplex& sigma) {
    const std::string s0 = fresh_label(sigma, "s0");
    const std::string s1 = fresh_label(sigma, "s1");
    return join(sigma, points({s0, s1}));
}

SimplicialComplex barycentric_subdivision(const SimplicialComplex& sigma) {
    if (sigma.dim() < 0) return sigma;

    // One new vertex per nonempty face, labeled by the joined tokens.
    std::map<Simplex, std::string> face_label;
    std::set<std::string> used;
    for (int k = 0; k <= sigma.dim(); ++k) {
        for (const Simplex& f : sigma.faces(k)) {
            std::string l;
            for (std::size_t i = 0; i < f.vertices.size(); ++i) {
                if (i) l += ".";
                l += sigma.label(f.vertices[i]);
            }
            while (!used.insert(l).second) l += "#";
            face_label[f] = std::move(l);
        }
    }

    // Maximal chains of the face poset: flags of facets, one per vertex
    // ordering of each facet.
    std::vector<std::vector<std::string>> lines;
    for (const Simplex& f : sigma.facets()) {
        std::vector<VertexId> perm = f.vertices;
        std::sort(perm.begin(), perm.end());
        do {
            std::vector<std::string> chain;
            Simplex prefix;
            for (VertexId v : perm) {
                prefix.vertices.push_back(v);
                Simplex canon = prefix;
                std::sort(canon.vertices.begin(), canon.vertices.end());
                chain.push_back(face_label.at(canon));
            }
            lines.push_back(std::move(chain));
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return SimplicialComplex::from_facets(lines);
}

// ---- predicates ----------------------------------------------------------

bool is_pure(const SimplicialComplex& sigma) {
    for (const Simplex& f : sigma.facets())
        if (f.dim() != sigma.dim()) return false;
    return true;
}

RidgeRegularity ridge_regularity(const SimplicialComplex& sigma) {
    if (!is_pure(sigma) || sigma.dim() < 0)
        return RidgeRegularity::NonPseudomanifold;
    if (sigma.dim() == 0) {
        // Ridges are the empty face; its degree is the vertex count.
        if (sigma.vertex_count() == 2) return RidgeRegularity::Closed;
        if (sigma.vertex_count() == 1) return RidgeRegularity::WithBoundary;
        return RidgeRegularity::NonPseudomanifold;
    }

    const int d = sigma.dim();
    std::map<Simplex, int> ridge_degree;
    for (const Simplex& f : sigma.faces(d))
        for (std::size_t i = 0; i < f.vertices.size(); ++i)
            ++ridge_degree[f.without(i)];

    bool some_boundary = false;
    for (const auto& [ridge, deg] : ridge_degree) {
        if (deg > 2) return RidgeRegularity::NonPseudomanifold;
        if (deg == 1) some_boundary = true;
    }
    return some_boundary ? RidgeRegularity::WithBoundary
                         : RidgeRegularity::Closed;
}

namespace {

bool color_backtrack(const std::vector<std::vector<int>>& adj,
                     const std::vector<int>& order, std::size_t pos,
                     int colors, std::vector<int>& color) {
    if (pos == order.size()) return true;
    const int v = order[pos];
    for (int c = 0; c < colors; ++c) {
        bool ok = true;
        for (int u : adj[v])
            if (color[u] == c) {
                ok = false;
                break;
            }
        if (!ok) continue;
        color[v] = c;
        if (color_backtrack(adj, order, pos + 1, colors, color)) return true;
        color[v] = -1;
    }
    return false;
}

} // namespace

std::optional<std::vector<int>> balanced_coloring(const SimplicialComplex& sigma) {
    if (sigma.dim() < 1)
        throw ArgumentError("balanced_coloring: dimension must be >= 1");

    const int n = sigma.vertex_count();
    std::vector<std::vector<int>> adj(n);
    for (const Simplex& e : sigma.faces(1)) {
        adj[e.vertices[0]].push_back(e.vertices[1]);
        adj[e.vertices[1]].push_back(e.vertices[0]);
    }

    std::vector<int> order(n);
    for (int v = 0; v < n; ++v) order[v] = v;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return adj[a].size() > adj[b].size();
    });

    std::vector<int> color(n, -1);
    if (color_backtrack(adj, order, 0, sigma.dim() + 1, color))
        return color;
    return std::nullopt;
}

// ---- facet file format ----------------------------------------------------

SimplicialComplex parse_facet_stream(std::istream& in) {
    std::vector<std::vector<std::string>> lines;
    std::vector<std::size_t> line_numbers;
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        if (const auto hash = raw.find('#'); hash != std::string::npos)
            raw.erase(hash);
        std::istringstream tok(raw);
        std::vector<std::string> tokens;
        std::string t;
        while (tok >> t) tokens.push_back(t);
        if (tokens.empty()) continue;
        lines.push_back(std::move(tokens));
        line_numbers.push_back(line_no);
    }
    if (lines.empty()) throw InputError("no facets found in input");
    try {
        return SimplicialComplex::from_facets(lines);
    } catch (const InputError& e) {
        // Map the facet index in the message back to the file line.
        for (std::size_t i = 0; i < lines.size(); ++i) {
            std::set<std::string> uniq(lines[i].begin(), lines[i].end());
            if (uniq.size() != lines[i].size())
                throw InputError("line " + std::to_string(line_numbers[i]) +
                                 ": facet repeats a vertex token");
        }
        throw;
    }
}

std::string to_facet_string(const SimplicialComplex& sigma,
                            const std::string& header_comment) {
    std::ostringstream out;
    if (!header_comment.empty()) out << "# " << header_comment << "\n";
    for (const Simplex& f : sigma.facets()) {
        for (std::size_t i = 0; i < f.vertices.size(); ++i) {
            if (i) out << ' ';
            out << sigma.label(f.vertices[i]);
        }
        out << '\n';
    }
    return out.str();
}

std::uint64_t content_digest(const SimplicialComplex& sigma) {
    // Canonical form independent of construction order: vertices ranked by
    // sorted label, facets as sorted rank tuples, listed sorted.
    std::vector<std::string> sorted_labels = sigma.labels();
    std::sort(sorted_labels.begin(), sorted_labels.end());
    std::map<std::string, std::size_t> rank;
    for (std::size_t i = 0; i < sorted_labels.size(); ++i)
        rank[sorted_labels[i]] = i;

    std::vector<std::vector<std::size_t>> facets;
    for (const Simplex& f : sigma.facets()) {
        std::vector<std::size_t> ids;
        for (VertexId v : f.vertices) ids.push_back(rank[sigma.label(v)]);
        std::sort(ids.begin(), ids.end());
        facets.push_back(std::move(ids));
    }
    std::sort(facets.begin(), facets.end());

    std::uint64_t h = 0xcbf29ce484222325ull; // FNV-1a offset basis
    auto mix = [&h](std::string_view s) {
        for (unsigned char c : s) {
            h ^= c;
            h *= 0x100000001b3ull;
        }
    };
    mix("v:");
    for (const std::string& l : sorted_labels) {
        mix(l);
        mix(";");
    }
    mix("f:");
    for (const auto& f : facets) {
        for (std::size_t v : f) {
            mix(std::to_string(v));
            mix(",");
        }
        mix(";");
    }
    return h;
}

std::string content_digest_hex(const SimplicialComplex& sigma) {
    static const char* digits = "0123456789abcdef";
    std::uint64_t h = content_digest(sigma);
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = digits[h & 0xf];
        h >>= 4;
    }
    return out;
}

} // namespace embcert
