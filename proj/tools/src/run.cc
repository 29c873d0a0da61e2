// Copyright 2026 The Scavenge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "scavenge/cli/run.h"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "scavenge/cli/output.h"
#include "scavenge/errors.h"
#include "scavenge/montecarlo.h"
#include "scavenge/strategies.h"

namespace scavenge::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr double kVerifySigmas = 4.0;

/// Everything a subcommand produces; emitted identically to stdout and files.
struct Report {
    Header header;
    Table table;
    std::string summary;
};

struct Options {
    int d = 2;
    int n = 1;
    std::int64_t k = 1;
    std::int64_t observers = 1;
    std::string encoding = "symmetric";
    std::optional<double> epsilon;
    std::string schedule;
    std::string system = "qudit";
    std::uint64_t trials = 10000;
    std::uint64_t samples = 100000;
    std::uint64_t seed = 0;
    int threads = 0;
    std::string k_grid = "log:1..1e6:25";
    std::string output;
    std::string format;
    std::string config;
};

Header make_header(Json params, Json seed = nullptr) {
    Header h;
    h.params = std::move(params);
    h.seed = std::move(seed);
    h.version = std::string(version());
    return h;
}

Report closed_form(const Options &o) {
    ProblemParams p;
    p.dim = o.d;
    p.copies = o.n;
    p.observers = std::max(o.k, o.observers);
    p.encoding = parse_encoding(o.encoding);
    p.validate();
    if (o.k < 1) {
        throw DomainError("closed-form: --k must be at least 1");
    }
    Report r;
    r.header = make_header(Json{{"subcommand", "closed-form"},
                                {"d", p.dim},
                                {"n", p.copies},
                                {"k", o.k},
                                {"encoding", std::string(encoding_name(p.encoding))}});
    r.table.columns = {"k", "delta", "fidelity"};
    double last = 0;
    for (std::int64_t k = 1; k <= o.k; ++k) {
        const double delta = greedy_shrink(p, k);
        last = fidelity_from_shrink(delta, p.dim);
        r.table.rows.push_back({k, delta, last});
    }
    r.summary = "F = " + format_number(last);
    return r;
}

Report egalitarian(const Options &o) {
    StrengthSchedule s;
    if (o.n == 1) {
        s = egalitarian_schedule_qudit(o.d, o.observers);
    } else {
        if (o.d != 2) {
            throw UnsupportedEncoding("egalitarian: N > 1 copies requires d = 2");
        }
        s = egalitarian_schedule_ncopy(o.n, o.observers);
    }
    Report r;
    r.header = make_header(
        Json{{"subcommand", "egalitarian"}, {"d", o.d}, {"n", o.n}, {"observers", o.observers}});
    r.table.columns = {"k", "epsilon", "fidelity"};
    for (std::size_t k = 0; k < s.strengths.size(); ++k) {
        r.table.rows.push_back({static_cast<std::int64_t>(k + 1), s.strengths[k], s.per_observer_fidelity[k]});
    }
    r.summary = "F = " + format_number(s.per_observer_fidelity.front());
    return r;
}

Report privileged(const Options &o) {
    ProblemParams p;
    p.dim = o.d;
    p.copies = o.n;
    p.observers = o.observers;
    if (p.copies > 1 && p.dim != 2) {
        throw UnsupportedEncoding("privileged: N > 1 copies requires d = 2");
    }
    PrivilegedOptimum opt;
    if (o.epsilon) {
        opt.strength = *o.epsilon;
        opt.shrink = privileged_delta(p, *o.epsilon);
        opt.fidelity = fidelity_from_shrink(opt.shrink, p.dim);
    } else {
        opt = privileged_optimize(p);
    }
    const double k = static_cast<double>(p.observers);
    Report r;
    Json params{{"subcommand", "privileged"}, {"d", p.dim}, {"n", p.copies}, {"observers", p.observers}};
    params["epsilon"] = o.epsilon ? Json(*o.epsilon) : Json("optimized");
    r.header = make_header(std::move(params));
    r.table.columns = {"epsilon", "delta", "fidelity", "epsilon_asym_large_k", "delta_asym_large_k"};
    if (p.copies == 1) {
        const auto asym = privileged_asymptotic_qudit(p.dim, k);
        r.table.rows.push_back({opt.strength, opt.shrink, opt.fidelity, asym.strength, asym.shrink});
    } else {
        const auto many_k = privileged_asymptotic_ncopy(p.copies, k, Regime::kManyObservers);
        const auto many_n = privileged_asymptotic_ncopy(p.copies, k, Regime::kManyCopies);
        r.table.columns.push_back("epsilon_asym_large_n");
        r.table.columns.push_back("delta_asym_large_n");
        r.table.rows.push_back(
            {opt.strength, opt.shrink, opt.fidelity, many_k.strength, many_k.shrink, many_n.strength, many_n.shrink});
    }
    r.summary = "F = " + format_number(opt.fidelity);
    return r;
}

Report simulate_cmd(const Options &o, std::ostream &err) {
    const bool spin = o.system == "spin";
    if (!spin && o.system != "qudit") {
        throw DomainError("simulate: --system must be qudit or spin");
    }
    std::string schedule = o.schedule.empty() ? (o.epsilon ? "constant" : "egalitarian") : o.schedule;
    SimConfig config;
    config.trials = o.trials;
    config.master_seed = o.seed;
    config.threads = o.threads;
    if (spin) {
        config.system = SpinSystem{o.n};
    } else {
        config.system = QuditSystem{o.d};
    }
    if (o.observers < 1) {
        throw DomainError("simulate: --observers must be at least 1");
    }
    if (schedule == "constant") {
        if (!o.epsilon) {
            throw DomainError("simulate: the constant schedule needs --epsilon");
        }
        config.strengths.assign(static_cast<std::size_t>(o.observers), *o.epsilon);
    } else if (schedule == "egalitarian") {
        config.strengths = spin ? egalitarian_schedule_ncopy(o.n, o.observers).strengths
                                : egalitarian_schedule_qudit(o.d, o.observers).strengths;
    } else if (schedule == "stochastic") {
        if (!spin) {
            throw DomainError("simulate: the stochastic schedule is defined for --system spin");
        }
        config.strengths = stochastic_schedule(o.n, o.observers).strengths;
        config.realization = Realization::kStochastic;
    } else {
        throw DomainError("simulate: --schedule must be constant, egalitarian or stochastic");
    }
    const std::vector<double> expected = spin ? forward_fidelities_ncopy(o.n, config.strengths, config.realization)
                                              : forward_fidelities_qudit(o.d, config.strengths);
    const SimResult result = simulate(config);
    if (result.trace_drift_events > 0) {
        err << "warning: " << result.trace_drift_events << " Kraus updates drifted in trace by more than 1e-9\n";
    }

    Report r;
    Json params{{"subcommand", "simulate"}, {"system", o.system}};
    if (spin) {
        params["n"] = o.n;
    } else {
        params["d"] = o.d;
    }
    params["observers"] = o.observers;
    params["schedule"] = schedule;
    if (o.epsilon) {
        params["epsilon"] = *o.epsilon;
    }
    params["trials"] = o.trials;
    r.header = make_header(std::move(params), Json(o.seed));
    r.table.columns = {"k", "epsilon", "mean", "stderr", "closed_form", "z"};
    std::string means;
    for (std::size_t k = 0; k < result.mean.size(); ++k) {
        const double se = result.standard_error[k];
        const double dev = result.mean[k] - expected[k];
        const double z = se > 0 ? dev / se : 0.0;
        r.table.rows.push_back(
            {static_cast<std::int64_t>(k + 1), config.strengths[k], result.mean[k], se, expected[k], z});
        means += (k ? ", " : "") + format_number(result.mean[k]);
    }
    r.summary = "F = " + means;
    return r;
}

Report verify_cmd(const Options &o) {
    const double eps = o.epsilon.value_or(1.0);
    Report r;
    r.header = make_header(
        Json{{"subcommand", "verify"}, {"d", o.d}, {"epsilon", eps}, {"samples", o.samples}}, Json(o.seed));
    r.table.columns = {"check", "estimate", "expected", "stderr", "z", "pass"};
    bool all_pass = true;
    auto add = [&](const std::string &name, double estimate, double expected, double se, double z, bool pass) {
        r.table.rows.push_back({name, estimate, expected, se, z, pass});
        all_pass = all_pass && pass;
    };
    auto z_of = [](double dev, double se) { return se > 0 ? std::abs(dev) / se : 0.0; };
    auto within = [](double dev, double se) { return std::abs(dev) <= std::max(kVerifySigmas * se, 1e-12); };

    const HaarMomentReport haar = verify_haar_moments(o.d, o.samples, o.seed);
    for (const auto &[name, group] : {std::pair{"haar_second_moments", &haar.second},
                                      std::pair{"haar_fourth_moments", &haar.fourth}}) {
        double worst_z = 0, worst_dev = 0, worst_se = 0;
        bool pass = true;
        for (const MomentEntry &e : *group) {
            pass = pass && e.within(kVerifySigmas);
            for (auto [dev, se] : {std::pair{std::abs(e.estimate.real() - e.expected.real()), e.stderr_real},
                                   std::pair{std::abs(e.estimate.imag() - e.expected.imag()), e.stderr_imag}}) {
                const double z = z_of(dev, se);
                if (z > worst_z || (worst_z == 0 && dev > worst_dev)) {
                    worst_z = z;
                    worst_dev = dev;
                    worst_se = se;
                }
            }
        }
        add(name, worst_dev, 0.0, worst_se, worst_z, pass);
    }

    const ChannelEstimate ch = estimate_channel_r(o.d, eps, o.samples, o.seed);
    const double r_exact = r_of_strength(eps, o.d);
    add("channel_r", ch.r, r_exact, ch.standard_error, z_of(ch.r - r_exact, ch.standard_error),
        within(ch.r - r_exact, ch.standard_error));

    const BlochShrinkEstimate bs = verify_bloch_shrink(o.d, eps, o.samples, o.seed);
    const double shrink_exact = eps / (o.d + 1.0);
    add("bloch_shrink", bs.shrink, shrink_exact, bs.shrink_stderr, z_of(bs.shrink - shrink_exact, bs.shrink_stderr),
        within(bs.shrink - shrink_exact, bs.shrink_stderr));
    double worst = 0, worst_se = 0;
    bool orth_pass = true;
    for (std::size_t c = 0; c < bs.orthogonal.size(); ++c) {
        orth_pass = orth_pass && within(bs.orthogonal[c], bs.orthogonal_stderr[c]);
        if (std::abs(bs.orthogonal[c]) > worst) {
            worst = std::abs(bs.orthogonal[c]);
            worst_se = bs.orthogonal_stderr[c];
        }
    }
    add("bloch_orthogonal", worst, 0.0, worst_se, bs.max_orthogonal_z, orth_pass);
    r.summary = std::string("status = ") + (all_pass ? "pass" : "fail");
    return r;
}

Report figure1(const Options &o) {
    const std::vector<std::int64_t> grid = parse_k_grid(o.k_grid);
    const std::vector<double> first = egalitarian_first_strengths_ncopy(o.n, grid.back());
    const double n = o.n;
    Report r;
    r.header = make_header(Json{{"subcommand", "figure1"}, {"n", o.n}, {"k_grid", o.k_grid}});
    r.table.columns = {"K", "delta_exact", "delta_asym_large_k", "delta_asym_large_n", "delta_stochastic"};
    for (std::int64_t k : grid) {
        const double kd = static_cast<double>(k);
        r.table.rows.push_back({k, first[static_cast<std::size_t>(k - 1)] * n / (n + 2.0),
                                egalitarian_asymptotic_shrink_ncopy(o.n, kd, Regime::kManyObservers),
                                egalitarian_asymptotic_shrink_ncopy(o.n, kd, Regime::kManyCopies),
                                stochastic_baseline(o.n, kd)});
    }
    r.summary = "rows = " + std::to_string(r.table.rows.size());
    return r;
}

void write_output(const Report &report, const std::string &path, std::string format) {
    if (format.empty()) {
        format = path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0 ? "json" : "csv";
    }
    if (format != "csv" && format != "json") {
        throw DomainError("--format must be csv or json");
    }
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) {
        throw DomainError("cannot open output file '" + path + "'");
    }
    if (format == "csv") {
        report.table.write_csv(file);
    } else {
        Json doc{{"header", report.header.to_json()}, {"rows", report.table.to_json()}};
        file << doc.dump(2) << '\n';
    }
    if (!file) {
        throw DomainError("failed writing output file '" + path + "'");
    }
}

// Appends "--key value" for every config entry whose flag is not already on the command line.
std::vector<std::string> merge_config(const std::vector<std::string> &args) {
    std::string path;
    for (std::size_t i = 1; i < args.size(); ++i) {
        if (args[i] == "--config" && i + 1 < args.size()) {
            path = args[i + 1];
        } else if (args[i].rfind("--config=", 0) == 0) {
            path = args[i].substr(9);
        }
    }
    if (path.empty()) {
        return args;
    }
    std::ifstream file(path);
    if (!file) {
        throw DomainError("cannot read config file '" + path + "'");
    }
    Json config;
    try {
        config = Json::parse(file);
    } catch (const Json::exception &e) {
        throw DomainError("config file '" + path + "' is not valid JSON: " + e.what());
    }
    if (!config.is_object()) {
        throw DomainError("config file must hold a JSON object");
    }
    std::vector<std::string> merged = args;
    for (const auto &[key, value] : config.items()) {
        const std::string flag = "--" + key;
        bool present = false;
        for (std::size_t i = 1; i < args.size(); ++i) {
            if (args[i] == flag || args[i].rfind(flag + "=", 0) == 0) {
                present = true;
            }
        }
        if (present || key == "config") {
            continue;
        }
        std::string text;
        if (value.is_string()) {
            text = value.get<std::string>();
        } else if (value.is_number_integer() || value.is_number_unsigned() || value.is_number_float()) {
            text = value.is_number_float() ? format_number(value.get<double>()) : value.dump();
        } else {
            throw DomainError("config entry '" + key + "' must be a string or a number");
        }
        merged.push_back(flag);
        merged.push_back(text);
    }
    return merged;
}

}  // namespace

int run(const std::vector<std::string> &raw_args, std::ostream &out, std::ostream &err) {
    Options o;
    CLI::App app{"Estimation fidelities of sequential observers measuring one quantum state", "scavenge"};
    app.require_subcommand(1);

    auto add_output = [&](CLI::App *sub) {
        sub->add_option("--output", o.output, "Write the result table to this file");
        sub->add_option("--format", o.format, "Output file format: csv or json (default from extension)");
        sub->add_option("--config", o.config, "JSON file with default flag values (flags win)");
    };

    auto *closed = app.add_subcommand("closed-form", "Greedy observers: per-observer fidelity in closed form");
    closed->add_option("--d", o.d, "Local dimension d");
    closed->add_option("--n", o.n, "Number of copies N");
    closed->add_option("--k", o.k, "Observer index k");
    closed->add_option("--encoding", o.encoding, "single, symmetric, optimal or copies-then-optimal");
    add_output(closed);

    auto *egal = app.add_subcommand("egalitarian", "Strength schedule giving all observers equal fidelity");
    egal->add_option("--d", o.d, "Local dimension d");
    egal->add_option("--n", o.n, "Number of qubit copies N (d = 2 when N > 1)");
    egal->add_option("--observers", o.observers, "Number of observers K");
    add_output(egal);

    auto *priv = app.add_subcommand("privileged", "Shared strength maximizing the last observer's fidelity");
    priv->add_option("--d", o.d, "Local dimension d");
    priv->add_option("--n", o.n, "Number of qubit copies N (d = 2 when N > 1)");
    priv->add_option("--observers", o.observers, "Number of observers K");
    priv->add_option("--epsilon", o.epsilon, "Evaluate at this strength instead of optimizing");
    add_output(priv);

    auto *sim = app.add_subcommand("simulate", "Monte Carlo simulation of a measurement chain");
    sim->add_option("--system", o.system, "qudit or spin");
    sim->add_option("--d", o.d, "Qudit dimension");
    sim->add_option("--n", o.n, "Number of qubit copies for the spin chain");
    sim->add_option("--observers", o.observers, "Number of observers K");
    sim->add_option("--epsilon", o.epsilon, "Strength for the constant schedule");
    sim->add_option("--schedule", o.schedule, "constant, egalitarian or stochastic");
    sim->add_option("--trials", o.trials, "Number of independent trials");
    sim->add_option("--seed", o.seed, "Master seed");
    sim->add_option("--threads", o.threads, "Worker threads (0 = all cores); results do not depend on it");
    add_output(sim);

    auto *ver = app.add_subcommand("verify", "Sampling checks of Haar moments, channel shrink and Bloch shrink");
    ver->add_option("--d", o.d, "Dimension");
    ver->add_option("--epsilon", o.epsilon, "Measurement strength (default 1)");
    ver->add_option("--samples", o.samples, "Number of samples per check");
    ver->add_option("--seed", o.seed, "Seed");
    add_output(ver);

    auto *fig = app.add_subcommand("figure1", "Egalitarian shrink versus number of observers for N copies");
    fig->add_option("--n", o.n, "Number of qubit copies N");
    fig->add_option("--k-grid", o.k_grid, "log:a..b:n or a comma-separated list of K values");
    add_output(fig);

    try {
        std::vector<std::string> args = merge_config(raw_args);
        std::vector<std::string> reversed(args.rbegin(), args.rend() - 1);
        app.parse(reversed);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    } catch (const DomainError &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        Report report;
        if (closed->parsed()) {
            report = closed_form(o);
        } else if (egal->parsed()) {
            report = egalitarian(o);
        } else if (priv->parsed()) {
            report = privileged(o);
        } else if (sim->parsed()) {
            report = simulate_cmd(o, err);
        } else if (ver->parsed()) {
            report = verify_cmd(o);
        } else {
            report = figure1(o);
        }
        if (!o.output.empty()) {
            write_output(report, o.output, o.format);
        } else if (!o.format.empty() && o.format != "csv" && o.format != "json") {
            throw DomainError("--format must be csv or json");
        }
        out << report.header.to_json().dump() << '\n';
        report.table.write_csv(out);
        out << report.summary << '\n';
        return kExitOk;
    } catch (const DomainError &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const UnsupportedEncoding &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const NumericError &e) {
        err << "numeric failure: " << e.what() << '\n';
        return kExitNumeric;
    } catch (const std::exception &e) {
        err << "numeric failure: " << e.what() << '\n';
        return kExitNumeric;
    }
}

int run(int argc, const char *const *argv) {
    std::vector<std::string> args(argv, argv + argc);
    return run(args, std::cout, std::cerr);
}

}  // namespace scavenge::cli
