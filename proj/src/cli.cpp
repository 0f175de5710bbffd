// Copyright 2026 The qdisc Authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qdisc/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "qdisc/error.hpp"
#include "qdisc/extremal.hpp"
#include "qdisc/oracles.hpp"
#include "qdisc/ordering.hpp"
#include "qdisc/verification.hpp"

namespace qdisc::cli {

namespace {

using nlohmann::json;

constexpr std::size_t kUsdRefinementSteps = 25;

std::string sig(double v, int digits) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return buf;
}

/// Machine formats carry 12 significant digits.
double round12(double v) { return std::stod(sig(v, 12)); }

std::string human(double v) { return sig(v, 4); }

json report_to_json(const MeasureReport &r) {
    json j = {{"name", r.measure_name},
              {"value", round12(r.value)},
              {"method", to_string(r.method)}};
    if (r.certificate_ok) {
        j["certificate_ok"] = *r.certificate_ok;
    }
    return j;
}

/// Writes through a sibling temp file and renames it into place.
bool write_atomically(const std::string &path, const std::string &content) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) {
            return false;
        }
        f << content;
        f.flush();
        if (!f) {
            std::error_code ignored;
            fs::remove(tmp, ignored);
            return false;
        }
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp, ec);
        return false;
    }
    return true;
}

} // namespace

std::vector<MeasureReport> compute_measures(const LoadedEnsemble &loaded) {
    std::vector<MeasureReport> out;
    const Ensemble &ens = loaded.ensemble;

    if (loaded.symmetric) {
        const auto &sym = *loaded.symmetric;
        out.push_back({"p_usd", p_usd_symmetric(sym), Method::ClosedForm, {}});
        const bool cert = optimality_certificate(ens, square_root_measurement(ens));
        out.push_back({"p_hyp", p_hyp_symmetric(sym), Method::ClosedForm, cert});
        out.push_back({"entropy", entropy_oracle(ens), Method::Oracle, {}});
        return out;
    }

    if (ens.size() == 2) {
        const auto params = two_state_params(ens);
        if (params.delta < 1.0) {
            out.push_back({"p_usd", jaeger_shimony(params.overlap, params.delta),
                           Method::ClosedForm, {}});
        }
        out.push_back({"p_hyp", helstrom_two_state(params.overlap, params.delta),
                       Method::ClosedForm, {}});
        out.push_back({"entropy",
                       ensemble_entropy_two_state(params.overlap, params.delta),
                       Method::ClosedForm, {}});
        return out;
    }

    if (is_linearly_independent(ens)) {
        out.push_back({"p_usd", usd_oracle(ens, kUsdRefinementSteps).average,
                       Method::Oracle, {}});
    } else {
        // Linearly dependent states admit no unambiguous discrimination.
        out.push_back({"p_usd", 0.0, Method::ClosedForm, {}});
    }
    try {
        const auto srm = square_root_measurement(ens);
        out.push_back({"p_hyp", hyp_success_probability(ens, srm), Method::Oracle,
                       optimality_certificate(ens, srm)});
    } catch (const Error &e) {
        if (e.code() != ErrorCode::SingularFrame) {
            throw;
        }
    }
    out.push_back({"entropy", entropy_oracle(ens), Method::Oracle, {}});
    return out;
}

int cmd_compute(const CliConfig &cfg, std::ostream &out, std::ostream &err) {
    if (!cfg.input_path) {
        err << "compute: --input is required\n";
        return kInputError;
    }
    std::optional<LoadedEnsemble> loaded;
    std::vector<MeasureReport> reports;
    try {
        loaded = load_ensemble_file(*cfg.input_path);
        reports = compute_measures(*loaded);
    } catch (const SchemaError &e) {
        err << "compute: " << *cfg.input_path << ": " << e.what() << '\n';
        return kInputError;
    } catch (const Error &e) {
        err << "compute: " << *cfg.input_path << ": " << e.what() << '\n';
        return kInvariantViolation;
    }
    const bool independent = is_linearly_independent(loaded->ensemble);

    if (cfg.format == Format::Json) {
        json measures = json::array();
        for (const auto &r : reports) {
            measures.push_back(report_to_json(r));
        }
        const json doc = {{"ensemble", ensemble_to_json(*loaded)},
                          {"normalization_scale", round12(loaded->scale)},
                          {"linearly_independent", independent},
                          {"measures", std::move(measures)}};
        out << doc.dump(2) << '\n';
        return kOk;
    }

    std::ostringstream text;
    if (loaded->symmetric) {
        text << "ensemble: symmetric, n = " << loaded->symmetric->n()
             << ", scale = " << human(loaded->scale) << '\n';
    } else {
        text << "ensemble: explicit, " << loaded->ensemble.size()
             << " states in dim " << loaded->ensemble.dim() << '\n';
    }
    text << "linearly independent: " << (independent ? "yes" : "no") << '\n';
    for (const auto &r : reports) {
        text << r.measure_name << " = " << human(r.value) << " ("
             << to_string(r.method);
        if (r.certificate_ok) {
            text << ", certificate " << (*r.certificate_ok ? "ok" : "failed");
        }
        text << ")\n";
    }
    out << text.str();
    return kOk;
}

int cmd_bounds(const CliConfig &cfg, std::ostream &out, std::ostream &err) {
    if (cfg.n < 2 || !(cfg.p_usd >= 0.0 && cfg.p_usd <= 1.0)) {
        err << "bounds: need n >= 2 and p_usd in [0, 1]\n";
        return kInputError;
    }
    const double lower = p_hyp_lower_bound(cfg.n, cfg.p_usd);
    const double upper = p_hyp_upper_bound(cfg.n, cfg.p_usd);
    const auto profile = extremum_profile(cfg.n, cfg.p_usd);

    if (cfg.format == Format::Json) {
        json rows = json::array();
        for (std::size_t i = 0; i < profile.size(); ++i) {
            rows.push_back({{"n0", i + 1}, {"p_hyp", round12(profile[i])}});
        }
        const json doc = {{"n", cfg.n},
                          {"p_usd", round12(cfg.p_usd)},
                          {"lower", round12(lower)},
                          {"upper", round12(upper)},
                          {"profile", std::move(rows)}};
        out << doc.dump(2) << '\n';
        return kOk;
    }
    out << "n = " << cfg.n << ", p_usd = " << human(cfg.p_usd) << '\n'
        << "lower bound (n0 = " << cfg.n - 1 << "): " << human(lower) << '\n'
        << "upper bound (n0 = 1): " << human(upper) << '\n'
        << "profile:\n";
    for (std::size_t i = 0; i < profile.size(); ++i) {
        out << "  n0 = " << i + 1 << ": " << human(profile[i]) << '\n';
    }
    return kOk;
}

int cmd_scan(const CliConfig &cfg, std::ostream &out, std::ostream &err) {
    if (cfg.n < 3 || cfg.p_usd_steps < 2 || cfg.epsilon_steps < 2) {
        err << "scan: need n >= 3 and at least 2 steps per axis\n";
        return kInputError;
    }
    const auto grid = figure1_grid(cfg.n, cfg.p_usd_steps, cfg.epsilon_steps);

    std::ostringstream body;
    if (cfg.format == Format::Json) {
        body << grid.to_json().dump() << '\n';
    } else {
        grid.write_csv(body);
    }

    std::ostream &summary_out = cfg.output_path ? out : err;
    if (cfg.output_path) {
        if (!write_atomically(*cfg.output_path, body.str())) {
            err << "scan: cannot write " << *cfg.output_path << '\n';
            return kIoError;
        }
    } else {
        out << body.str();
    }

    const auto s = summarize(grid);
    summary_out << "grid n = " << cfg.n << ", " << cfg.p_usd_steps << " x "
                << cfg.epsilon_steps << ": " << s.valid_cells << " valid cells, "
                << s.cells_above_one << " with ratio > 1 (fraction "
                << human(s.fraction_above_one()) << ")\n"
                << "max ratio " << human(s.max_ratio) << " at p_usd_1 = "
                << human(s.max_p_usd) << ", epsilon = " << human(s.max_epsilon)
                << '\n';
    return kOk;
}

WorkedExample reproduce_worked_example() {
    const auto [e1, e2] = build_candidate_pair(3, 0.5, 0.1);
    WorkedExample w;
    w.p_usd_1 = p_usd_symmetric(e1);
    w.p_usd_2 = p_usd_symmetric(e2);
    w.p_hyp_1 = p_hyp_symmetric(e1);
    w.p_hyp_2 = p_hyp_symmetric(e2);
    w.ratio = w.p_hyp_2 / w.p_hyp_1;
    w.witness = check_reversal(e1, e2).has_value();
    w.passed = std::abs(w.p_usd_1 - 0.5) <= 1e-12 &&
               std::abs(w.p_usd_2 - 0.4) <= 1e-12 &&
               std::abs(w.p_hyp_1 - 8.0 / 9.0) <= 1e-12 &&
               std::abs(w.p_hyp_2 - 0.943) <= 1e-3 && w.witness;
    return w;
}

int cmd_reproduce(std::ostream &out) {
    const auto w = reproduce_worked_example();
    out << "E1: n = 3, n0 = 2 (lower-bound ensemble)\n"
        << "E2: n = 3, n0 = 1 (upper-bound ensemble)\n"
        << "P_USD(E1) = " << human(w.p_usd_1) << '\n'
        << "P_USD(E2) = " << human(w.p_usd_2) << '\n'
        << "P_HYP(E1) = " << human(w.p_hyp_1) << " (expected 8/9)\n"
        << "P_HYP(E2) = " << human(w.p_hyp_2) << " (expected 0.943)\n"
        << "ratio P_HYP(E2) / P_HYP(E1) = " << human(w.ratio) << '\n'
        << "reversal witness: " << (w.witness ? "present" : "absent") << '\n'
        << (w.passed ? "PASS" : "FAIL") << '\n';
    return w.passed ? kOk : kVerificationFailure;
}

int cmd_verify(const CliConfig &cfg, std::ostream &out) {
    bool all = true;
    for (const auto &s : run_verification_suites(cfg.seed)) {
        all = all && s.passed;
        out << (s.passed ? "PASS " : "FAIL ") << s.name << " (" << s.cases
            << " cases)";
        if (cfg.verbose) {
            out << " worst deviation " << sig(s.worst_deviation, 3)
                << ", tolerance " << sig(s.tolerance, 3);
        }
        out << '\n';
    }
    out << (all ? "all suites passed" : "verification failed") << '\n';
    return all ? kOk : kVerificationFailure;
}

int run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err) {
    CLI::App app{"Distinguishability measures for pure-state ensembles", "qdisc"};
    app.require_subcommand(1);
    CliConfig cfg;
    std::string format;

    auto *compute = app.add_subcommand("compute", "Measures for an ensemble file");
    compute->add_option("--input", cfg.input_path, "Ensemble JSON file")->required();
    compute->add_option("--format", format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));

    auto *bounds = app.add_subcommand("bounds", "Extremal P_HYP bounds at fixed P_USD");
    bounds->add_option("--n", cfg.n, "Number of states")->required();
    bounds->add_option("--p-usd", cfg.p_usd, "Unambiguous discrimination probability")
        ->required();
    bounds->add_option("--format", format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));

    auto *scan = app.add_subcommand("scan", "Ratio grid over P_USD(E1) and epsilon");
    scan->add_option("--n", cfg.n, "Number of states");
    scan->add_option("--p-usd-steps", cfg.p_usd_steps, "P_USD(E1) axis points");
    scan->add_option("--epsilon-steps", cfg.epsilon_steps, "epsilon axis points");
    scan->add_option("--output", cfg.output_path, "Output file (stdout if omitted)");
    scan->add_option("--format", format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));

    auto *reproduce = app.add_subcommand("reproduce", "Check the n = 3 worked example");

    auto *verify = app.add_subcommand("verify", "Closed-form vs oracle suites");
    verify->add_option("--seed", cfg.seed, "Random seed");
    verify->add_flag("--verbose", cfg.verbose, "Print worst deviations");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError &e) {
        err << e.what() << '\n';
        return kInputError;
    }

    if (compute->parsed()) {
        cfg.subcommand = Subcommand::Compute;
        cfg.format = format == "json" ? Format::Json : Format::Text;
        return cmd_compute(cfg, out, err);
    }
    if (bounds->parsed()) {
        cfg.subcommand = Subcommand::Bounds;
        cfg.format = format == "json" ? Format::Json : Format::Text;
        return cmd_bounds(cfg, out, err);
    }
    if (scan->parsed()) {
        cfg.subcommand = Subcommand::Scan;
        cfg.format = format == "json" ? Format::Json : Format::Csv;
        return cmd_scan(cfg, out, err);
    }
    if (reproduce->parsed()) {
        cfg.subcommand = Subcommand::Reproduce;
        return cmd_reproduce(out);
    }
    cfg.subcommand = Subcommand::Verify;
    (void)verify;
    return cmd_verify(cfg, out);
}

} // namespace qdisc::cli
