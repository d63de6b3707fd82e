// Deterministic generator families and the "family:p1:p2" mini-language.

#include <charconv>
#include <string>
#include <vector>

#include "embcert/complex.hpp"
#include "embcert/errors.hpp"

namespace embcert {

namespace {

long long parse_positive(const std::string& family, const std::string& tok) {
    long long v = 0;
    const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (res.ec != std::errc{} || res.ptr != tok.data() + tok.size() || v <= 0)
        throw ArgumentError("generator " + family + ": parameter '" + tok +
                            "' must be a positive integer");
    return v;
}

long long parse_nonneg(const std::string& family, const std::string& tok) {
    long long v = 0;
    const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (res.ec != std::errc{} || res.ptr != tok.data() + tok.size() || v < 0)
        throw ArgumentError("generator " + family + ": parameter '" + tok +
                            "' must be a non-negative integer");
    return v;
}

void expect_params(const std::string& family,
                   const std::vector<std::string>& params, std::size_t count) {
    if (params.size() != count)
        throw ArgumentError("generator " + family + " expects " +
                            std::to_string(count) + " parameter(s), got " +
                            std::to_string(params.size()));
}

std::vector<std::string> number_labels(long long n, const std::string& prefix = "") {
    std::vector<std::string> out;
    for (long long i = 1; i <= n; ++i) out.push_back(prefix + std::to_string(i));
    return out;
}

SimplicialComplex complete_graph(long long n) {
    const auto ls = number_labels(n);
    std::vector<std::vector<std::string>> lines;
    if (n == 1) lines.push_back({ls[0]});
    for (long long i = 0; i < n; ++i)
        for (long long j = i + 1; j < n; ++j) lines.push_back({ls[i], ls[j]});
    return SimplicialComplex::from_facets(lines);
}

SimplicialComplex complete_bipartite(long long a, long long b) {
    const auto left = number_labels(a, "u");
    const auto right = number_labels(b, "v");
    std::vector<std::vector<std::string>> lines;
    for (const auto& u : left)
        for (const auto& v : right) lines.push_back({u, v});
    return SimplicialComplex::from_facets(lines);
}

SimplicialComplex cycle_graph(long long n) {
    if (n < 3)
        throw ArgumentError("generator cycle: need at least 3 vertices");
    const auto ls = number_labels(n);
    std::vector<std::vector<std::string>> lines;
    for (long long i = 0; i < n; ++i)
        lines.push_back({ls[i], ls[(i + 1) % n]});
    return SimplicialComplex::from_facets(lines);
}

SimplicialComplex simplex_skeleton(long long n, long long k) {
    if (k > n - 1)
        throw ArgumentError(
            "generator simplex_skeleton: k must be at most n-1");
    const auto ls = number_labels(n);
    std::vector<std::vector<std::string>> lines;
    // All (k+1)-subsets of {1..n}, lexicographic.
    std::vector<long long> idx(k + 1);
    for (long long i = 0; i <= k; ++i) idx[i] = i;
    while (true) {
        std::vector<std::string> face;
        for (long long i : idx) face.push_back(ls[i]);
        lines.push_back(std::move(face));
        long long pos = k;
        while (pos >= 0 && idx[pos] == n - (k + 1) + pos) --pos;
        if (pos < 0) break;
        ++idx[pos];
        for (long long i = pos + 1; i <= k; ++i) idx[i] = idx[i - 1] + 1;
    }
    return SimplicialComplex::from_facets(lines);
}

SimplicialComplex cross_polytope_boundary(long long m) {
    // m antipodal pairs; facets pick one vertex from each pair.
    std::vector<std::vector<std::string>> lines;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        std::vector<std::string> face;
        for (long long i = 0; i < m; ++i) {
            const bool plus = (mask >> i) & 1u;
            face.push_back((plus ? "p" : "m") + std::to_string(i + 1));
        }
        lines.push_back(std::move(face));
    }
    return SimplicialComplex::from_facets(lines);
}

SimplicialComplex moebius5() {
    // 5-vertex, 5-triangle Moebius strip.
    return SimplicialComplex::from_facets({
        {"1", "2", "3"},
        {"2", "3", "4"},
        {"3", "4", "5"},
        {"4", "5", "1"},
        {"5", "1", "2"},
    });
}

SimplicialComplex rp2_6() {
    // Minimal 6-vertex triangulation of the projective plane (antipodal
    // quotient of the icosahedron), f = (6, 15, 10).
    return SimplicialComplex::from_facets({
        {"1", "2", "3"},
        {"1", "3", "4"},
        {"1", "4", "5"},
        {"1", "5", "6"},
        {"1", "2", "6"},
        {"2", "3", "5"},
        {"3", "4", "6"},
        {"2", "4", "5"},
        {"3", "5", "6"},
        {"2", "4", "6"},
    });
}

} // namespace

SimplicialComplex generate(const std::string& family,
                           const std::vector<std::string>& params) {
    if (family == "complete_graph") {
        expect_params(family, params, 1);
        return complete_graph(parse_positive(family, params[0]));
    }
    if (family == "complete_bipartite") {
        expect_params(family, params, 2);
        return complete_bipartite(parse_positive(family, params[0]),
                                  parse_positive(family, params[1]));
    }
    if (family == "cycle") {
        expect_params(family, params, 1);
        return cycle_graph(parse_positive(family, params[0]));
    }
    if (family == "simplex_skeleton") {
        expect_params(family, params, 2);
        return simplex_skeleton(parse_positive(family, params[0]),
                                parse_nonneg(family, params[1]));
    }
    if (family == "simplex_boundary") {
        expect_params(family, params, 1);
        const long long m = parse_positive(family, params[0]);
        return simplex_skeleton(m + 1, m - 1);
    }
    if (family == "cross_polytope_boundary") {
        expect_params(family, params, 1);
        const long long m = parse_positive(family, params[0]);
        if (m > 20)
            throw ArgumentError("generator cross_polytope_boundary: m too large");
        return cross_polytope_boundary(m);
    }
    if (family == "moebius5") {
        expect_params(family, params, 0);
        return moebius5();
    }
    if (family == "rp2_6") {
        expect_params(family, params, 0);
        return rp2_6();
    }
    if (family == "suspension" || family == "suspension_of") {
        if (params.empty())
            throw ArgumentError("generator suspension: missing inner family");
        return suspension(generate(
            params[0], {params.begin() + 1, params.end()}));
    }
    throw ArgumentError("unknown generator family '" + family + "'");
}

SimplicialComplex generate_spec(std::string_view spec) {
    if (spec.starts_with("gen:")) spec.remove_prefix(4);
    std::vector<std::string> parts;
    while (!spec.empty()) {
        const auto colon = spec.find(':');
        parts.emplace_back(spec.substr(0, colon));
        if (colon == std::string_view::npos) break;
        spec.remove_prefix(colon + 1);
    }
    if (parts.empty()) throw ArgumentError("empty generator spec");
    return generate(parts[0], {parts.begin() + 1, parts.end()});
}

} // namespace embcert
