// Command-line front end: radial means, growth fits, boundary conjugation,
// Holder analysis, quasiregularity scans, and the verification suite.

#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "hqr/acceptance.hpp"
#include "hqr/analysis.hpp"
#include "hqr/boundary.hpp"
#include "hqr/catalog.hpp"
#include "hqr/means.hpp"
#include "hqr/series.hpp"

namespace {

using namespace hqr;

double parse_p(const std::string& s) {
    if (s == "inf") return std::numeric_limits<double>::infinity();
    const double p = std::stod(s);
    if (!(p > 0.0)) throw CLI::ValidationError("--p must be positive or 'inf'");
    return p;
}

std::pair<int, int> parse_j_range(const std::string& s) {
    const auto dots = s.find("..");
    if (dots == std::string::npos)
        throw CLI::ValidationError("--j expects j_min..j_max, e.g. 1..12");
    const int lo = std::stoi(s.substr(0, dots));
    const int hi = std::stoi(s.substr(dots + 2));
    if (lo < 0 || lo >= hi || hi > 14)
        throw CLI::ValidationError("--j requires 0 <= j_min < j_max <= 14");
    return {lo, hi};
}

bool is_csv_path(const std::string& subject) {
    return subject.size() > 4 && subject.rfind(".csv") == subject.size() - 4;
}

BoundarySignal load_boundary(const std::string& subject, std::size_t M) {
    if (is_csv_path(subject)) {
        std::ifstream in(subject);
        if (!in) throw std::runtime_error("cannot open " + subject);
        return read_signal_csv(in);
    }
    return build_boundary(parse_example_spec(subject), M);
}

// Subject resolution for means/growth: catalog analytic series, catalog
// harmonic map, or boundary CSV / boundary catalog name (via its Schwarz
// extension, so --part re is the Poisson extension of the data).
CircleSubject resolve_subject(const std::string& subject, Part part, std::size_t N,
                              std::size_t M) {
    const std::string label = subject + ":" + part_name(part);
    if (is_csv_path(subject)) {
        std::ifstream in(subject);
        if (!in) throw std::runtime_error("cannot open " + subject);
        return series_subject(schwarz_extension(read_signal_csv(in)), part, label);
    }
    const auto spec = parse_example_spec(subject);
    if (is_map_example(spec)) return map_subject(build_map(spec, N), part, label);
    if (is_boundary_example(spec))
        return series_subject(schwarz_extension(build_boundary(spec, M)), part, label);
    return series_subject(build_analytic(spec, N), part, label);
}

void emit(const std::string& text, const std::string& output) {
    if (output.empty() || output == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(output);
    if (!out) throw std::runtime_error("cannot open " + output + " for writing");
    out << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"harmonic quasiregular mapping laboratory"};
    app.require_subcommand(1);

    std::string subject, p_text = "2", j_text = "1..12", part_text = "re", output;
    // default N keeps the truncated tail below 1e-10 out to r = 1 - 2^-12
    std::size_t M = 4096, N = 131072, n_theta = 256;
    double alpha_claim = 0.5;
    unsigned seed = 1;

    auto add_common = [&](CLI::App* cmd, bool needs_subject) {
        if (needs_subject)
            cmd->add_option("--subject", subject, "catalog name or boundary CSV path")
                ->required();
        cmd->add_option("--j", j_text, "dyadic radius range j_min..j_max (r = 1 - 2^-j)");
        cmd->add_option("--M", M, "boundary / circle sample count (power of two)");
        cmd->add_option("--N", N, "series truncation degree");
        cmd->add_option("--output,-o", output, "output path (default stdout)");
    };

    auto* means_cmd = app.add_subcommand("means", "radial profile of integral means");
    add_common(means_cmd, true);
    means_cmd->add_option("--p", p_text, "exponent (> 0 or 'inf')");
    means_cmd->add_option("--part", part_text, "re | im | abs | full");

    auto* growth_cmd = app.add_subcommand("growth", "growth-exponent fit of a radial profile");
    add_common(growth_cmd, true);
    growth_cmd->add_option("--p", p_text, "exponent (> 0 or 'inf')");
    growth_cmd->add_option("--part", part_text, "re | im | abs | full");
    bool log_power = false;
    growth_cmd->add_flag("--log-power", log_power, "fit M_p^p against log(1/(1-r)) instead");

    auto* conj_cmd = app.add_subcommand("conjugate", "boundary values of the harmonic conjugate");
    add_common(conj_cmd, true);

    auto* holder_cmd = app.add_subcommand("holder", "modulus of continuity and Holder fit");
    add_common(holder_cmd, true);
    bool log_correction = false;
    holder_cmd->add_flag("--log-correction", log_correction,
                         "fit omega/delta against log(1/delta)");
    bool conjugate_first = false;
    holder_cmd->add_flag("--conjugate", conjugate_first,
                         "analyze the conjugate of the subject instead");

    auto* deriv_cmd = app.add_subcommand(
        "holder-derivative", "M_inf growth of F' for boundary data (predicts 1 - alpha)");
    add_common(deriv_cmd, true);
    deriv_cmd->add_option("--alpha", alpha_claim, "claimed Holder exponent in (0,1)");

    auto* qr_cmd = app.add_subcommand("qr", "quasiregularity constants k_hat, K_hat");
    add_common(qr_cmd, true);
    qr_cmd->add_option("--n-theta", n_theta, "circle samples for the dilatation scan (>= 64)");

    auto* verify_cmd = app.add_subcommand("verify", "run the full verification suite");
    verify_cmd->add_option("--seed", seed, "seed for the randomized checks (default 1)");

    auto* catalog_cmd = app.add_subcommand("catalog", "list catalog subjects");
    (void)catalog_cmd;

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand("catalog")) {
            std::cout << catalog_listing();
            return 0;
        }
        if (app.got_subcommand("verify")) {
            const auto results = run_acceptance(seed);
            bool all = true;
            std::cout << "# seed=" << seed << "\n";
            for (const auto& r : results) {
                std::cout << (r.pass ? "PASS" : "FAIL") << " " << r.id << " " << r.name << ": "
                          << r.detail << "\n";
                all = all && r.pass;
            }
            std::cout << (all ? "all criteria passed" : "criteria FAILED") << "\n";
            return all ? 0 : 1;
        }

        const auto [j_lo, j_hi] = parse_j_range(j_text);
        const auto grid = dyadic_r_grid(j_lo, j_hi);
        const double p = parse_p(p_text);
        const Part part = parse_part(part_text);

        if (app.got_subcommand("means")) {
            const auto subj = resolve_subject(subject, part, N, M);
            const auto prof =
                radial_profile(subj, p, grid, std::max(M, default_circle_samples(N)));
            std::ostringstream os;
            write_profile_csv(prof, os);
            emit(os.str(), output);
        } else if (app.got_subcommand("growth")) {
            const auto subj = resolve_subject(subject, part, N, M);
            const auto prof =
                radial_profile(subj, p, grid, std::max(M, default_circle_samples(N)));
            const Window win = window_from_j(std::max(j_lo, 3), j_hi);
            const auto fit =
                log_power ? fit_log_power(prof, win) : fit_growth_exponent(prof, win);
            emit(to_json(fit), output);
        } else if (app.got_subcommand("conjugate")) {
            const auto v = conjugate_signal(load_boundary(subject, M));
            std::ostringstream os;
            write_signal_csv(v, os);
            emit(os.str(), output);
        } else if (app.got_subcommand("holder")) {
            auto sig = load_boundary(subject, M);
            if (conjugate_first) sig = conjugate_signal(sig);
            std::vector<double> deltas;
            const double step = 2.0 * std::numbers::pi / static_cast<double>(sig.size());
            for (int l = 3; l <= 13; ++l) {
                const double d = std::numbers::pi * std::ldexp(1.0, -l);
                if (d >= step) deltas.push_back(d);  // stay above grid resolution
            }
            std::reverse(deltas.begin(), deltas.end());
            const auto moduli = modulus_of_continuity(sig, deltas);
            const auto fit = fit_holder_exponent(moduli, log_correction);
            std::ostringstream os;
            os << "delta,omega\n";
            for (const auto& [d, w] : moduli)
                os << format_double(d) << "," << format_double(w) << "\n";
            emit(os.str(), output);
            std::cout << to_json(fit);
        } else if (app.got_subcommand("holder-derivative")) {
            const auto u = load_boundary(subject, M);
            const Window win = window_from_j(std::max(j_lo, 3), j_hi);
            emit(to_json(holder_derivative_check(u, alpha_claim, grid, win)), output);
        } else if (app.got_subcommand("qr")) {
            const auto spec = parse_example_spec(subject);
            const auto f = build_map(spec, N);
            emit(to_json(qr_constants(f, grid, n_theta)), output);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
