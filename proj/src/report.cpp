// JSON and text rendering of analysis results (schema doc: docs/report_schema.md).

#include "embcert/report.hpp"

#include <sstream>

#include "embcert/version.hpp"

namespace embcert::report {

namespace {

json rational_json(const Rational& r) { return json::array({r.num, r.den}); }

std::string rational_str(const Rational& r) {
    if (r.den == 1) return std::to_string(r.num);
    return std::to_string(r.num) + "/" + std::to_string(r.den);
}

json support_json(const gf2::BitVector& v) {
    json out = json::array();
    for (std::size_t i : v.support()) out.push_back(i);
    return out;
}

} // namespace

json envelope(const SimplicialComplex& sigma, const std::string& source) {
    return json{
        {"schema_version", kReportSchemaVersion},
        {"tool", "embcert"},
        {"version", kVersion},
        {"input", json{{"source", source},
                       {"digest", content_digest_hex(sigma)}}},
    };
}

json f_vector_json(const SimplicialComplex& sigma) {
    return json{
        {"dim", sigma.dim()},
        {"n", sigma.vertex_count()},
        {"f", sigma.f_vector()},
    };
}

json profile_json(const HomologyProfile& prof) {
    json out{
        {"betti", prof.beta},
        {"delta", prof.delta},
        {"chi", prof.chi},
        {"euler", prof.euler()},
    };
    if (prof.torsion) {
        json tor = json::array();
        for (const auto& factors : *prof.torsion) tor.push_back(factors);
        out["torsion"] = tor;
    }
    return out;
}

json check_json(const InequalityReport& rep) {
    json out{
        {"name", rep.name},
        {"rule", rep.rule},
        {"applicable", rep.applicable},
        {"reason", rep.reason},
        {"sanity", rep.sanity},
        {"weak_girth", rep.weak_girth},
    };
    if (rep.lhs) out["lhs"] = rational_json(*rep.lhs);
    if (rep.rhs) out["rhs"] = rational_json(*rep.rhs);
    if (rep.satisfied) out["satisfied"] = *rep.satisfied;
    if (rep.tight) out["tight"] = *rep.tight;
    return out;
}

json girth_json(const GirthBound& bound,
                const std::optional<GirthWitness>& witness) {
    json out{
        {"value", bound.value},
        {"exact", bound.exact},
    };
    if (witness) out["witness"] = support_json(witness->cycle);
    return out;
}

json torsion_json(const TorsionCertificate& cert) {
    return json{
        {"homology_dim", cert.homology_dim},
        {"factors", cert.factors},
        {"statement", "integral homology torsion obstructs topological "
                      "embedding into S^" +
                          std::to_string(cert.homology_dim + 2)},
    };
}

json verdict_json(const ObstructionVerdict& verdict) {
    json checks = json::array();
    for (const auto& rep : verdict.reports) checks.push_back(check_json(rep));
    json out{
        {"target", to_string(verdict.target)},
        {"space", target_space(verdict.target, verdict.d)},
        {"verdict", to_string(verdict.verdict)},
        {"violated", verdict.violated},
        {"inequality_obstructed", verdict.inequality_obstructed},
        {"balanced", verdict.balanced},
        {"checks", checks},
    };
    if (verdict.target != Target::Codim0 && verdict.girth_relevant)
        out["girth"] = girth_json(verdict.girth,
                                  verdict.girth_witness);
    if (verdict.torsion) out["torsion_certificate"] = torsion_json(*verdict.torsion);
    return out;
}

json mcomplete_json(const McResult& res) {
    json out;
    switch (res.status) {
        case McStatus::Yes: out["status"] = "yes"; break;
        case McStatus::No: out["status"] = "no"; break;
        case McStatus::Unknown: out["status"] = "unknown"; break;
    }
    out["note"] = res.note;
    if (res.witness) {
        json cycles = json::array();
        for (const auto& c : res.witness->cycles) cycles.push_back(support_json(c));
        out["witness"] = json{{"m", res.witness->m}, {"cycles", cycles}};
    }
    if (res.refutation) {
        const auto& r = *res.refutation;
        out["refutation"] = json{
            {"girth_bound", r.girth_bound}, {"girth_exact", r.girth_exact},
            {"cycle_rank", r.cycle_rank},   {"m", r.m},
            {"top_faces", r.top_faces},     {"lhs", r.lhs()},
            {"rhs", r.rhs()},
        };
    }
    return out;
}

std::string render_check_line(const InequalityReport& rep) {
    std::ostringstream out;
    std::string status;
    if (!rep.applicable)
        status = "inapplicable";
    else if (rep.sanity)
        status = *rep.satisfied ? "sanity-ok" : "SANITY-FAIL";
    else if (!*rep.satisfied)
        status = "VIOLATED";
    else
        status = *rep.tight ? "satisfied (tight)" : "satisfied";

    out << "  " << rep.name << ": ";
    if (rep.lhs && rep.rhs)
        out << rational_str(*rep.lhs) << " <= " << rational_str(*rep.rhs) << "  ";
    out << "[" << status << "]";
    if (rep.weak_girth && rep.applicable) out << " (girth lower bound)";
    if (!rep.applicable) out << " " << rep.reason;
    return out.str();
}

} // namespace embcert::report
