// jtri: finite-dimensional Jordan/Lie algebra toolkit.
//
// Subcommands operate on JSON instance files (see README for the schema)
// and print machine-readable JSON reports to stdout. Exit codes:
//   0  all checks pass
//   2  a hypothesis of the requested check is violated by the input
//   3  a numerical residual exceeded its tolerance
//   4  I/O error or malformed file
//   1  anything else

#include <cmath>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "jtri/identities.hpp"
#include "jtri/instance.hpp"
#include "jtri/matrix_core.hpp"
#include "jtri/rng.hpp"
#include "jtri/serialize.hpp"
#include "jtri/spectral.hpp"
#include "jtri/triangularize.hpp"

namespace {

using jtri::cplx;
using jtri::json;

struct GlobalOpts {
    jtri::ToleranceConfig cfg;
    std::uint64_t seed = 0;
    std::string out;
    bool json_only = false;
};

void emit(const json& j, const GlobalOpts& g) {
    if (g.out.empty())
        std::cout << jtri::dump_json(j);
    else
        jtri::save_json(j, g.out);
}

void render_report(const jtri::IdentityReport& report, const GlobalOpts& g) {
    if (g.json_only)
        return;
    for (const auto& c : report.checks)
        std::cerr << (c.pass ? "  ok   " : "  FAIL ") << c.name
                  << "  residual=" << c.residual
                  << " threshold=" << c.threshold << "\n";
}

int report_exit(const jtri::IdentityReport& report) {
    return report.all_pass() ? 0 : 3;
}

jtri::GeneratorSet load_gens(const std::string& path) {
    return jtri::to_generator_set(jtri::load_instance(path));
}

// Worst-case merge: one entry per check name, max residual.
void merge_worst(jtri::IdentityReport& into, const jtri::IdentityReport& from) {
    for (const auto& c : from.checks) {
        bool found = false;
        for (auto& existing : into.checks)
            if (existing.name == c.name) {
                if (c.residual > existing.residual) {
                    existing.residual = c.residual;
                    existing.threshold = c.threshold;
                    existing.pass = c.pass;
                }
                found = true;
                break;
            }
        if (!found)
            into.checks.push_back(c);
    }
}

json error_json(const std::string& kind, const std::string& message) {
    return json{{"error", json{{"kind", kind}, {"message", message}}}};
}

jtri::IdentityReport adproj_report(const jtri::ComplexMatrix& a,
                                   std::optional<cplx> lambda,
                                   const jtri::ToleranceConfig& cfg) {
    const int n = a.dim();
    const jtri::SpectralDecomposition ad_dec = jtri::ad_riesz_all(a, cfg);
    const jtri::SpectralDecomposition a_dec = jtri::riesz_decomposition(a, cfg);
    const double pair_radius =
        cfg.cluster_tol * (1.0 + jtri::operator_norm(a));
    const double match_radius = jtri::ad_cluster_radius(a, cfg);
    const double threshold = cfg.residual_tol * n * n;

    jtri::IdentityReport report;
    bool matched = false;
    for (const auto& cluster : ad_dec.clusters) {
        if (lambda && std::abs(cluster.lambda - *lambda) > match_radius)
            continue;
        matched = true;
        const jtri::ComplexMatrix formula =
            jtri::adproj_formula_from(a_dec, cluster.lambda, pair_radius);
        const double diff = (formula - cluster.projection).max_abs();
        report.add("adproj lambda=(" + std::to_string(cluster.lambda.real()) +
                       "," + std::to_string(cluster.lambda.imag()) + ") mult=" +
                       std::to_string(cluster.multiplicity),
                   diff, threshold);
    }
    if (!matched)
        throw jtri::InvalidArgument(
            "lambda is not in the spectrum of ad(A) within cluster_tol");
    return report;
}

int cmd_verify_all(const std::string& path, const GlobalOpts& g) {
    const jtri::InstanceFile instance = jtri::load_instance(path);
    const jtri::GeneratorSet gens = jtri::to_generator_set(instance);
    const jtri::ToleranceConfig& cfg = g.cfg;
    json sections;
    bool hypothesis_violated = false;
    bool residual_failed = false;

    auto record_report = [&](const char* name, const jtri::IdentityReport& r) {
        sections[name] = jtri::to_json(r);
        if (!r.all_pass())
            residual_failed = true;
        render_report(r, g);
    };

    const jtri::AlgebraBasis jordan = jtri::jordan_closure(gens, cfg);
    sections["jordan_closure"] =
        json{{"dim", jordan.space.dim()}, {"log", jtri::to_json(jordan)["log"]}};

    try {
        record_report("trace_words", jtri::check_trace_words(jordan, cfg));
        record_report("ideal_trace_pairing",
                      jtri::check_ideal_trace_pairing(jordan, cfg));
    } catch (const jtri::HypothesisError& e) {
        sections["trace_words"] = error_json("hypothesis", e.what());
        hypothesis_violated = true;
    }

    {
        const auto& gs = gens.gens;
        auto pick = [&gs](std::size_t i) { return gs[i % gs.size()]; };
        record_report("jordan_identities",
                      jtri::check_jordan_identities(pick(0), pick(1), pick(2),
                                                    pick(3)));
        jtri::IdentityReport norms;
        for (std::size_t i = 0; i < gs.size(); ++i)
            merge_worst(norms,
                        jtri::check_norm_inequalities(pick(i), pick(i + 1)));
        record_report("norm_inequalities", norms);
    }

    try {
        const jtri::AlgebraBasis lie = jtri::lie_from_jordan(jordan, cfg);
        record_report("cartan", jtri::cartan_criterion(lie, cfg));
        if (!sections["cartan"].empty() &&
            !sections["cartan"][0]["pass"].get<bool>())
            hypothesis_violated = true;
    } catch (const jtri::Error& e) {
        sections["cartan"] = error_json("numerical", e.what());
        residual_failed = true;
    }

    record_report("adproj", adproj_report(gens.gens.front(), std::nullopt, cfg));

    try {
        const jtri::TriangularizationCertificate cert =
            jtri::triangularize(gens, cfg);
        sections["triangularize"] = jtri::to_json(cert);
    } catch (const jtri::HypothesisError& e) {
        sections["triangularize"] = error_json("hypothesis", e.what());
        hypothesis_violated = true;
    } catch (const jtri::NumericalError& e) {
        sections["triangularize"] = error_json("numerical", e.what());
        residual_failed = true;
    }

    {
        const auto witness = jtri::find_invariant_subspace(gens, cfg);
        const jtri::AlgebraBasis assoc = jtri::associative_closure(gens, cfg);
        const bool full = assoc.space.dim() == gens.dim * gens.dim;
        json reduce{{"reducible", witness.has_value()},
                    {"closure_dim", assoc.space.dim()}};
        if (witness)
            reduce["subspace"] = jtri::to_json(*witness);
        // Burnside consistency: NotReducible iff the closure is everything.
        if (witness.has_value() == full)
            residual_failed = true;
        sections["reduce"] = std::move(reduce);
    }

    const bool pass = !hypothesis_violated && !residual_failed;
    json out{{"label", instance.metadata.label},
             {"sections", std::move(sections)},
             {"pass", pass}};
    emit(out, g);
    if (hypothesis_violated)
        return 2;
    return pass ? 0 : 3;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite-dimensional Jordan/Lie triangularization toolkit"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand

    GlobalOpts g;
    app.add_option("--tol-rank", g.cfg.rank_tol, "singular value cutoff");
    app.add_option("--tol-cluster", g.cfg.cluster_tol,
                   "eigenvalue clustering radius");
    app.add_option("--tol-residual", g.cfg.residual_tol,
                   "identity-check threshold");
    app.add_option("--seed", g.seed, "random seed");
    app.add_option("--out", g.out, "write the JSON report to a file");
    app.add_flag("--json", g.json_only, "suppress human-readable tables");

    // gen-random
    auto* gen = app.add_subcommand("gen-random",
                                   "generate a hidden-triangularization "
                                   "instance (its conjugator is the oracle)");
    int gen_n = 0, gen_k = 1;
    double cond_cap = 100.0;
    bool hard = false;
    std::string gen_label;
    gen->add_option("--n", gen_n, "matrix dimension")->required();
    gen->add_option("--k", gen_k, "generator count");
    auto* cond_opt =
        gen->add_option("--cond-cap", cond_cap, "conjugator condition cap");
    gen->add_flag("--hard", hard, "raise the condition cap to 1e4");
    gen->add_option("--label", gen_label, "free-text label");

    auto add_instance_cmd = [&app](const char* name, const char* help,
                                   std::string& path) {
        auto* cmd = app.add_subcommand(name, help);
        cmd->add_option("instance", path, "instance file")->required();
        return cmd;
    };

    std::string close_path, lie_path, ideal_path, traces_path, ident_path,
        riesz_path, adproj_path, cartan_path, tri_path, reduce_path,
        verify_path;

    auto* close_cmd = add_instance_cmd("close", "closure of the generators",
                                       close_path);
    std::string close_kind = "jordan";
    close_cmd->add_option("--kind", close_kind, "jordan | lie | assoc");

    add_instance_cmd("lie", "Lie algebra generated by the Jordan closure",
                     lie_path);
    add_instance_cmd("ideal",
                     "Lie ideal of lie(J) generated by the Jordan closure",
                     ideal_path);

    auto* traces_cmd = add_instance_cmd(
        "check-traces", "trace of every word of length <= 4", traces_path);
    bool materialize_ideal = false;
    traces_cmd->add_flag("--materialize-ideal", materialize_ideal,
                         "also audit tr on the materialized ideal");

    auto* ident_cmd = app.add_subcommand(
        "check-identities", "the four universal anticommutator identities");
    ident_cmd->add_option("instance", ident_path, "instance file");
    int ident_random = 0, ident_dim = 5;
    ident_cmd->add_option("--random", ident_random,
                          "check this many seeded random quadruples");
    ident_cmd->add_option("--dim", ident_dim, "dimension for random mode");

    auto* riesz_cmd = add_instance_cmd(
        "riesz", "Riesz decomposition of one generator", riesz_path);
    int riesz_gen = 0;
    riesz_cmd->add_option("--gen", riesz_gen, "generator index");

    auto* adproj_cmd = add_instance_cmd(
        "adproj", "Riesz projections of ad(A) vs the multiplication formula",
        adproj_path);
    int adproj_gen = 0;
    std::vector<double> adproj_lambda;
    adproj_cmd->add_option("--gen", adproj_gen, "generator index");
    adproj_cmd->add_option("--lambda", adproj_lambda,
                           "re,im of one ad eigenvalue (default: all)")
        ->expected(2);

    add_instance_cmd("cartan", "trace-form criterion on lie(J)", cartan_path);
    add_instance_cmd("triangularize",
                     "invariant chain, unitary conjugator and residual",
                     tri_path);
    add_instance_cmd("reduce", "one invariant subspace or NotReducible",
                     reduce_path);
    add_instance_cmd("verify-all", "every applicable check, one report",
                     verify_path);

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) {
            if (hard && cond_opt->count() == 0)
                cond_cap = 1e4;
            jtri::InstanceFile f =
                jtri::make_hidden_instance(g.seed, gen_n, gen_k, cond_cap);
            if (!gen_label.empty())
                f.metadata.label = gen_label;
            emit(jtri::to_json(f), g);
            return 0;
        }
        if (app.got_subcommand("close")) {
            const jtri::GeneratorSet gens = load_gens(close_path);
            const jtri::AlgebraKind kind =
                jtri::algebra_kind_from_string(close_kind);
            jtri::AlgebraBasis basis;
            if (kind == jtri::AlgebraKind::jordan)
                basis = jtri::jordan_closure(gens, g.cfg);
            else if (kind == jtri::AlgebraKind::associative)
                basis = jtri::associative_closure(gens, g.cfg);
            else if (kind == jtri::AlgebraKind::lie)
                basis = jtri::lie_from_jordan(jtri::jordan_closure(gens, g.cfg),
                                              g.cfg);
            else
                throw jtri::InvalidArgument("close: kind must be jordan, lie "
                                            "or assoc");
            emit(jtri::to_json(basis), g);
            return 0;
        }
        if (app.got_subcommand("lie")) {
            const jtri::GeneratorSet gens = load_gens(lie_path);
            emit(jtri::to_json(jtri::lie_from_jordan(
                     jtri::jordan_closure(gens, g.cfg), g.cfg)),
                 g);
            return 0;
        }
        if (app.got_subcommand("ideal")) {
            const jtri::GeneratorSet gens = load_gens(ideal_path);
            const jtri::AlgebraBasis jordan = jtri::jordan_closure(gens, g.cfg);
            const jtri::AlgebraBasis lie = jtri::lie_from_jordan(jordan, g.cfg);
            emit(jtri::to_json(jtri::lie_ideal_generated(
                     lie, jordan.space.basis(), g.cfg)),
                 g);
            return 0;
        }
        if (app.got_subcommand("check-traces")) {
            const jtri::GeneratorSet gens = load_gens(traces_path);
            const jtri::AlgebraBasis jordan = jtri::jordan_closure(gens, g.cfg);
            jtri::IdentityReport report = jtri::check_trace_words(jordan, g.cfg);
            if (materialize_ideal)
                merge_worst(report,
                            jtri::check_ideal_trace_pairing(jordan, g.cfg));
            render_report(report, g);
            emit(jtri::to_json(report), g);
            return report_exit(report);
        }
        if (app.got_subcommand("check-identities")) {
            jtri::IdentityReport report;
            if (!ident_path.empty()) {
                const jtri::GeneratorSet gens = load_gens(ident_path);
                auto pick = [&gens](std::size_t i) {
                    return gens.gens[i % gens.gens.size()];
                };
                report = jtri::check_jordan_identities(pick(0), pick(1),
                                                       pick(2), pick(3));
            } else if (ident_random == 0) {
                throw jtri::InvalidArgument(
                    "check-identities needs an instance or --random COUNT");
            }
            if (ident_random > 0) {
                jtri::Rng rng(g.seed);
                for (int t = 0; t < ident_random; ++t) {
                    const auto a = jtri::gaussian_matrix(ident_dim, rng);
                    const auto b = jtri::gaussian_matrix(ident_dim, rng);
                    const auto c = jtri::gaussian_matrix(ident_dim, rng);
                    const auto d = jtri::gaussian_matrix(ident_dim, rng);
                    merge_worst(report,
                                jtri::check_jordan_identities(a, b, c, d));
                }
            }
            render_report(report, g);
            emit(jtri::to_json(report), g);
            return report_exit(report);
        }
        if (app.got_subcommand("riesz")) {
            const jtri::GeneratorSet gens = load_gens(riesz_path);
            if (riesz_gen < 0 ||
                riesz_gen >= static_cast<int>(gens.gens.size()))
                throw jtri::InvalidArgument("riesz: --gen out of range");
            emit(jtri::to_json(jtri::riesz_decomposition(
                     gens.gens[static_cast<std::size_t>(riesz_gen)], g.cfg)),
                 g);
            return 0;
        }
        if (app.got_subcommand("adproj")) {
            const jtri::GeneratorSet gens = load_gens(adproj_path);
            if (adproj_gen < 0 ||
                adproj_gen >= static_cast<int>(gens.gens.size()))
                throw jtri::InvalidArgument("adproj: --gen out of range");
            std::optional<cplx> lambda;
            if (!adproj_lambda.empty())
                lambda = cplx(adproj_lambda[0], adproj_lambda[1]);
            const jtri::IdentityReport report = adproj_report(
                gens.gens[static_cast<std::size_t>(adproj_gen)], lambda, g.cfg);
            render_report(report, g);
            emit(jtri::to_json(report), g);
            return report_exit(report);
        }
        if (app.got_subcommand("cartan")) {
            const jtri::GeneratorSet gens = load_gens(cartan_path);
            const jtri::AlgebraBasis lie = jtri::lie_from_jordan(
                jtri::jordan_closure(gens, g.cfg), g.cfg);
            const jtri::IdentityReport report =
                jtri::cartan_criterion(lie, g.cfg);
            render_report(report, g);
            emit(jtri::to_json(report), g);
            if (!report.checks.empty() && !report.checks.front().pass)
                return 2; // hypothesis violated
            return report_exit(report);
        }
        if (app.got_subcommand("triangularize")) {
            const jtri::GeneratorSet gens = load_gens(tri_path);
            try {
                emit(jtri::to_json(jtri::triangularize(gens, g.cfg)), g);
                return 0;
            } catch (const jtri::ChainStall& e) {
                json err = error_json("ChainStall", e.what());
                err["error"]["chain_dims"] = e.dims_so_far;
                err["error"]["stalled_link"] = jtri::to_json(e.stalled);
                emit(err, g);
                return 2;
            } catch (const jtri::NotNilpotent& e) {
                emit(error_json("NotNilpotent", e.what()), g);
                return 2;
            }
        }
        if (app.got_subcommand("reduce")) {
            const jtri::GeneratorSet gens = load_gens(reduce_path);
            const auto witness = jtri::find_invariant_subspace(gens, g.cfg);
            json out{{"reducible", witness.has_value()}};
            if (witness)
                out["subspace"] = jtri::to_json(*witness);
            else
                out["closure_dim"] = gens.dim * gens.dim;
            emit(out, g);
            return 0;
        }
        if (app.got_subcommand("verify-all"))
            return cmd_verify_all(verify_path, g);
        throw jtri::InvalidArgument("no subcommand");
    } catch (const jtri::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const jtri::HypothesisError& e) {
        std::cerr << "hypothesis violation: " << e.what() << "\n";
        return 2;
    } catch (const jtri::NumericalError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
