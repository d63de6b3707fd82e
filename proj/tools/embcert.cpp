// embcert: facet-list analysis and embeddability obstruction certificates.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "embcert/complex.hpp"
#include "embcert/cycles.hpp"
#include "embcert/errors.hpp"
#include "embcert/homology.hpp"
#include "embcert/obstruction.hpp"
#include "embcert/report.hpp"
#include "embcert/version.hpp"

namespace {

using embcert::ArgumentError;
using embcert::BudgetError;
using embcert::InputError;
using embcert::McStatus;
using embcert::SearchBudget;
using embcert::SimplicialComplex;
using embcert::Target;
using embcert::Verdict;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitObstructed = 1;
constexpr int kExitError = 2;
constexpr int kExitBudget = 3;

SimplicialComplex load_input(const std::string& input) {
    if (input.rfind("gen:", 0) == 0) return embcert::generate_spec(input);
    if (input == "-") return embcert::parse_facet_stream(std::cin);
    std::ifstream file(input);
    if (!file) throw InputError("cannot open '" + input + "'");
    return embcert::parse_facet_stream(file);
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream file(path);
    if (!file) throw InputError("cannot write '" + path + "'");
    file << text;
}

std::string ridge_name(embcert::RidgeRegularity r) {
    switch (r) {
        case embcert::RidgeRegularity::Closed: return "closed";
        case embcert::RidgeRegularity::WithBoundary: return "with-boundary";
        case embcert::RidgeRegularity::NonPseudomanifold:
            return "non-pseudomanifold";
    }
    return "?";
}

struct CommonOpts {
    std::string input;
    bool as_json = false;
    SearchBudget budget;
};

int cmd_info(const CommonOpts& opt) {
    const SimplicialComplex sigma = load_input(opt.input);
    if (sigma.dim() < 0) throw InputError("empty complex");

    const auto prof = embcert::homology_profile(sigma, /*with_torsion=*/true);
    const bool pure = embcert::is_pure(sigma);
    const auto ridge = embcert::ridge_regularity(sigma);
    std::optional<std::vector<int>> coloring;
    if (sigma.dim() >= 1) coloring = embcert::balanced_coloring(sigma);

    if (opt.as_json) {
        json out = embcert::report::envelope(sigma, opt.input);
        out["complex"] = embcert::report::f_vector_json(sigma);
        out["homology"] = embcert::report::profile_json(prof);
        json structure{
            {"pure", pure},
            {"ridge_regularity", ridge_name(ridge)},
        };
        if (sigma.dim() >= 1) structure["balanced"] = coloring.has_value();
        if (coloring) structure["coloring"] = *coloring;
        out["structure"] = structure;
        std::cout << out.dump(2) << "\n";
        return kExitOk;
    }

    std::cout << "input:      " << opt.input << "\n";
    std::cout << "digest:     " << embcert::content_digest_hex(sigma) << "\n";
    std::cout << "dim:        " << sigma.dim() << "\n";
    auto print_vec = [](const char* name, const std::vector<long long>& v) {
        std::cout << name << " (";
        for (std::size_t i = 0; i < v.size(); ++i)
            std::cout << (i ? "," : "") << v[i];
        std::cout << ")\n";
    };
    print_vec("f-vector:  ", prof.f);
    print_vec("betti(Z2): ", prof.beta);
    print_vec("delta:     ", prof.delta);
    print_vec("chi:       ", prof.chi);
    std::cout << "euler:      " << prof.euler() << "\n";
    std::cout << "pure:       " << (pure ? "yes" : "no") << "\n";
    std::cout << "ridges:     " << ridge_name(ridge) << "\n";
    std::cout << "balanced:   "
              << (sigma.dim() < 1 ? "n/a" : (coloring ? "yes" : "no")) << "\n";
    if (prof.torsion) {
        for (std::size_t k = 0; k < prof.torsion->size(); ++k) {
            if ((*prof.torsion)[k].empty()) continue;
            std::cout << "torsion H_" << k << ": [";
            const auto& fac = (*prof.torsion)[k];
            for (std::size_t i = 0; i < fac.size(); ++i)
                std::cout << (i ? "," : "") << fac[i];
            std::cout << "]\n";
        }
    }
    return kExitOk;
}

int cmd_obstruct(const CommonOpts& opt, const std::string& target_name,
                 bool skeleton_mode) {
    const SimplicialComplex sigma = load_input(opt.input);

    Target target = Target::Codim1;
    if (target_name == "codim0") target = Target::Codim0;
    else if (target_name == "sphere") target = Target::Sphere;
    else if (target_name != "codim1")
        throw ArgumentError("unknown target '" + target_name + "'");

    embcert::ObstructionVerdict verdict;
    SimplicialComplex analyzed;
    if (skeleton_mode) {
        if (target != Target::Codim1)
            throw ArgumentError("--skeleton-of-manifold implies --target codim1");
        verdict = embcert::skeleton_of_manifold_battery(sigma, opt.budget);
        analyzed = embcert::skeleton(sigma, sigma.dim() - 1);
    } else {
        verdict = embcert::battery(sigma, target, opt.budget);
        analyzed = sigma;
    }

    if (opt.as_json) {
        json out = embcert::report::envelope(analyzed, opt.input);
        out["complex"] = embcert::report::f_vector_json(analyzed);
        out["homology"] =
            embcert::report::profile_json(embcert::homology_profile(analyzed));
        out["battery"] = embcert::report::verdict_json(verdict);
        if (skeleton_mode) out["skeleton_of_manifold"] = true;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "target: " << embcert::target_space(verdict.target, verdict.d)
                  << (skeleton_mode ? " (skeleton of the given pseudomanifold)" : "")
                  << "\n";
        for (const auto& rep : verdict.reports)
            std::cout << embcert::report::render_check_line(rep) << "\n";
        if (verdict.torsion) {
            std::cout << "  torsion: H_" << verdict.torsion->homology_dim
                      << " has invariant factors [";
            for (std::size_t i = 0; i < verdict.torsion->factors.size(); ++i)
                std::cout << (i ? "," : "") << verdict.torsion->factors[i];
            std::cout << "]  [VIOLATED: torsion]\n";
        }
        std::cout << "verdict: " << embcert::to_string(verdict.verdict) << "\n";
    }
    return verdict.verdict == Verdict::Obstructed ? kExitObstructed : kExitOk;
}

int cmd_girth(const CommonOpts& opt) {
    const SimplicialComplex sigma = load_input(opt.input);
    const auto witness = embcert::min_weight_cycle(sigma, opt.budget);
    const long long g = witness ? witness->weight : sigma.dim() + 2;

    if (opt.as_json) {
        json out = embcert::report::envelope(sigma, opt.input);
        out["girth"] = json{{"value", g}, {"exact", true}};
        if (witness) {
            json supp = json::array();
            for (std::size_t i : witness->cycle.support()) supp.push_back(i);
            out["girth"]["witness"] = supp;
            out["girth"]["convention"] = false;
        } else {
            out["girth"]["convention"] = true;
        }
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << g << "\n";
        if (!witness)
            std::cout << "# no top-dimensional cycles; convention value d+2\n";
    }
    return kExitOk;
}

int cmd_mcomplete(const CommonOpts& opt, long long m) {
    const SimplicialComplex sigma = load_input(opt.input);
    const auto res = embcert::m_complete_basis(sigma, m, opt.budget);

    if (opt.as_json) {
        json out = embcert::report::envelope(sigma, opt.input);
        out["m"] = m;
        out["mcomplete"] = embcert::report::mcomplete_json(res);
        std::cout << out.dump(2) << "\n";
    } else {
        switch (res.status) {
            case McStatus::Yes: {
                std::cout << "Yes\n";
                for (const auto& c : res.witness->cycles) {
                    std::cout << "  cycle:";
                    for (std::size_t i : c.support()) {
                        const auto& face = sigma.faces(sigma.dim())[i];
                        std::cout << " {";
                        for (std::size_t j = 0; j < face.vertices.size(); ++j)
                            std::cout << (j ? " " : "")
                                      << sigma.label(face.vertices[j]);
                        std::cout << "}";
                    }
                    std::cout << "\n";
                }
                break;
            }
            case McStatus::No:
                std::cout << "No\n";
                if (res.refutation) {
                    const auto& r = *res.refutation;
                    std::cout << "  counting refutation: girth_bound("
                              << r.girth_bound << ") * rank(" << r.cycle_rank
                              << ") = " << r.lhs() << " > " << r.rhs() << " = m("
                              << r.m << ") * f_d(" << r.top_faces << ")\n";
                } else {
                    std::cout << "  " << res.note << "\n";
                }
                break;
            case McStatus::Unknown:
                std::cout << "Unknown\n  " << res.note << "\n";
                break;
        }
    }
    switch (res.status) {
        case McStatus::Yes: return kExitOk;
        case McStatus::No: return kExitObstructed;
        case McStatus::Unknown: return kExitBudget;
    }
    return kExitError;
}

int cmd_gen(const std::string& family, const std::vector<std::string>& params,
            const std::string& out_path) {
    const SimplicialComplex sigma = embcert::generate(family, params);
    std::string spec = family;
    for (const auto& p : params) spec += ":" + p;
    write_output(out_path, embcert::to_facet_string(sigma, "gen " + spec));
    return kExitOk;
}

int cmd_subdivide(const CommonOpts& opt, const std::string& out_path) {
    const SimplicialComplex sigma = load_input(opt.input);
    const SimplicialComplex sd = embcert::barycentric_subdivision(sigma);
    write_output(out_path,
                 embcert::to_facet_string(sd, "barycentric subdivision"));
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"embcert: homological obstruction certificates for "
                 "codimension-one embeddability of simplicial complexes"};
    app.set_version_flag("--version", embcert::kVersion);
    app.require_subcommand(1);

    CommonOpts opt;
    std::string target_name = "codim1";
    bool skeleton_mode = false;
    long long m = 2;
    std::string family;
    std::vector<std::string> params;
    std::string out_path;

    auto add_common = [&](CLI::App* sub, bool with_budget = true) {
        sub->add_option("input", opt.input,
                        "facet file, '-' for stdin, or gen:<family>:<params>")
            ->required();
        sub->add_flag("--json", opt.as_json, "emit a JSON report");
        if (with_budget) {
            sub->add_option("--girth-cap", opt.budget.girth_kernel_cap,
                            "max kernel dimension for exact girth");
            sub->add_option("--basis-cap", opt.budget.basis_kernel_cap,
                            "max kernel dimension for basis search");
            sub->add_option("--node-cap", opt.budget.max_nodes,
                            "backtracking node cap");
        }
    };

    CLI::App* info = app.add_subcommand("info", "f-vector, homology, structure");
    add_common(info, false);

    CLI::App* obstruct =
        app.add_subcommand("obstruct", "run the obstruction battery");
    add_common(obstruct);
    obstruct->add_option("--target", target_name, "codim1 | codim0 | sphere")
        ->check(CLI::IsMember({"codim1", "codim0", "sphere"}));
    obstruct->add_flag("--skeleton-of-manifold", skeleton_mode,
                       "input is a closed pseudomanifold; analyze its "
                       "codimension-one skeleton");

    CLI::App* girth_cmd =
        app.add_subcommand("girth", "minimum support of a nonzero top cycle");
    add_common(girth_cmd);

    CLI::App* mcomplete =
        app.add_subcommand("mcomplete", "search for an m-complete cycle basis");
    add_common(mcomplete);
    mcomplete->add_option("--m", m, "multiplicity bound")->required();

    CLI::App* gen = app.add_subcommand("gen", "write a generator family");
    gen->add_option("family", family, "generator family name")->required();
    gen->add_option("params", params, "family parameters");
    gen->add_option("-o,--output", out_path, "output file (default stdout)");

    CLI::App* subdivide =
        app.add_subcommand("subdivide", "barycentric subdivision");
    add_common(subdivide, false);
    subdivide->add_option("-o,--output", out_path,
                          "output file (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (info->parsed()) return cmd_info(opt);
        if (obstruct->parsed()) return cmd_obstruct(opt, target_name, skeleton_mode);
        if (girth_cmd->parsed()) return cmd_girth(opt);
        if (mcomplete->parsed()) return cmd_mcomplete(opt, m);
        if (gen->parsed()) return cmd_gen(family, params, out_path);
        if (subdivide->parsed()) return cmd_subdivide(opt, out_path);
    } catch (const BudgetError& e) {
        std::cerr << "budget exceeded: " << e.what() << " (cap " << e.cap()
                  << ")\n";
        return kExitBudget;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitError;
    } catch (const ArgumentError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
