// Copyright 2026 The gffdisk Authors
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

#include "gffdisk/cli.hpp"

#include <fstream>
#include <memory>
#include <set>
#include <sstream>
#include <stdexcept>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gffdisk/circles.hpp"
#include "gffdisk/field.hpp"
#include "gffdisk/spectral.hpp"
#include "gffdisk/suites.hpp"

namespace gffdisk {

namespace {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CommandOptions {
    int resolution = 65;
    std::string queries;
    double z0x = 0.0;
    double z0y = 0.0;
    std::vector<double> times{0.5, 1.0, 2.0};
    bool include_origin = false;
    std::string suite = "all";
    std::size_t replicates = 10000;
};

nlohmann::json load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot read config file '" + path + "'");
    try {
        nlohmann::json j = nlohmann::json::parse(in);
        if (!j.is_object()) throw std::invalid_argument("config file must hold a JSON object");
        return j;
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument("config file '" + path + "': " + e.what());
    }
}

// Takes `key` from the config file unless the flag was given on the command
// line.
class ConfigMerger {
public:
    explicit ConfigMerger(nlohmann::json config) : config_(std::move(config)) {}

    template <typename T>
    void take(const CLI::Option* flag, const std::string& key, T& target) {
        known_.insert(key);
        if (flag->count() > 0 || !config_.contains(key)) return;
        try {
            target = config_.at(key).get<T>();
        } catch (const nlohmann::json::exception& e) {
            throw std::invalid_argument("config key '" + key + "': " + e.what());
        }
    }

    void reject_unknown() const {
        for (const auto& [key, value] : config_.items())
            if (!known_.count(key)) throw std::invalid_argument("unknown config key '" + key + "'");
    }

private:
    nlohmann::json config_;
    std::set<std::string> known_;
};

void emit(const RunConfig& config, std::ostream& out, const std::string& text) {
    if (!config.output_path) {
        out << text;
        return;
    }
    std::ofstream file(*config.output_path, std::ios::binary);
    if (!file) throw IoError("cannot open output file '" + *config.output_path + "'");
    file << text;
    file.close();
    if (!file) throw IoError("failed writing output file '" + *config.output_path + "'");
}

std::shared_ptr<const SpectralBasis> make_basis(const RunConfig& c) {
    return std::make_shared<const SpectralBasis>(build_basis(c.n_max, c.k_max));
}

int cmd_basis(const RunConfig& c, std::ostream& out) {
    std::ostringstream os;
    write_basis(os, *make_basis(c), c.format);
    emit(c, out, os.str());
    return kExitOk;
}

int cmd_sample(const RunConfig& c, std::ostream& out) {
    std::ostringstream os;
    write_coefficients(os, sample_field(make_basis(c), c.seed), c.format);
    emit(c, out, os.str());
    return kExitOk;
}

int cmd_grid(const RunConfig& c, const CommandOptions& o, std::ostream& out) {
    if (o.resolution < 2) throw std::invalid_argument("--resolution must be >= 2");
    std::ostringstream os;
    write_grid(os, field_grid(sample_field(make_basis(c), c.seed), o.resolution), c.format);
    emit(c, out, os.str());
    return kExitOk;
}

int cmd_cov(const RunConfig& c, const CommandOptions& o, std::ostream& out) {
    if (o.queries.empty()) throw std::invalid_argument("cov requires --queries FILE");
    std::ifstream in(o.queries);
    if (!in) throw IoError("cannot read query file '" + o.queries + "'");
    std::vector<CovarianceRow> rows;
    for (const CovarianceQuery& q : read_queries(in)) rows.push_back(covariance_row(q));
    std::ostringstream os;
    write_covariance_table(os, rows, c.format);
    emit(c, out, os.str());
    return kExitOk;
}

int cmd_brownian(const RunConfig& c, const CommandOptions& o, std::ostream& out) {
    validate_times(o.times);
    const DiskPoint z0(o.z0x, o.z0y);
    const FieldSample s = sample_field(make_basis(c), c.seed);
    std::vector<double> times;
    if (o.include_origin) times.push_back(0.0);
    times.insert(times.end(), o.times.begin(), o.times.end());
    const std::vector<double> path = brownian_path(s, z0, o.times, o.include_origin);
    std::ostringstream os;
    write_brownian(os, times, path, c.format);
    emit(c, out, os.str());
    return kExitOk;
}

int cmd_verify(const RunConfig& c, const CommandOptions& o, std::ostream& out) {
    if (o.replicates < 100) throw std::invalid_argument("--replicates must be >= 100");
    SuiteConfig sc;
    sc.n_max = c.n_max;
    sc.k_max = c.k_max;
    sc.seed = c.seed;
    sc.quad = c.quad;
    sc.replicates = o.replicates;
    const auto basis = make_basis(c);
    std::vector<CheckResult> checks;
    if (o.suite != "statistical") checks = deterministic_suite(sc, *basis);
    if (o.suite != "deterministic")
        for (auto& r : statistical_suite(sc, *basis)) checks.push_back(std::move(r));
    std::ostringstream os;
    write_checks(os, checks, c.format);
    emit(c, out, os.str());
    return suite_exit_code(checks) == 0 ? kExitOk : kExitCheckFailed;
}

}  // namespace

void RunConfig::validate() const {
    if (n_max < 0) throw std::invalid_argument("--n-max must be >= 0");
    if (k_max < 1) throw std::invalid_argument("--k-max must be >= 1");
    quad.validate(n_max);
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Gaussian free field on the Poincare disk: sampling, circle averages, checks",
                 "gffdisk"};
    app.fallthrough();
    app.require_subcommand(1);

    RunConfig config;
    CommandOptions opts;
    std::string format = "csv";
    std::string out_path;
    std::string config_path;

    auto* o_nmax = app.add_option("--n-max", config.n_max, "Largest angular order")->capture_default_str();
    auto* o_kmax = app.add_option("--k-max", config.k_max, "Radial modes per order")->capture_default_str();
    auto* o_seed = app.add_option("--seed", config.seed, "Master seed")->capture_default_str();
    auto* o_qr = app.add_option("--quad-radial", config.quad.radial_nodes, "Radial quadrature nodes")
                     ->capture_default_str();
    auto* o_qa = app.add_option("--quad-angular", config.quad.angular_nodes, "Angular quadrature nodes")
                     ->capture_default_str();
    auto* o_fmt = app.add_option("--format", format, "Output format")
                      ->check(CLI::IsMember({"csv", "json"}))
                      ->capture_default_str();
    auto* o_out = app.add_option("--out", out_path, "Output file (default stdout)");
    app.add_option("--config", config_path, "JSON file with default settings");

    auto* basis = app.add_subcommand("basis", "Write the spectral basis manifest");
    auto* sample = app.add_subcommand("sample", "Write the sampled field coefficients");
    auto* grid = app.add_subcommand("grid", "Write the sampled field on a lattice");
    auto* o_res = grid->add_option("--resolution", opts.resolution, "Lattice points per side")
                      ->capture_default_str();
    auto* cov = app.add_subcommand("cov", "Tabulate circle-average covariances");
    auto* o_queries = cov->add_option("--queries", opts.queries, "CSV of z1x,z1y,rho1,z2x,z2y,rho2");
    auto* brownian = app.add_subcommand("brownian", "Write a Brownian path from circle averages");
    auto* o_z0x = brownian->add_option("--z0x", opts.z0x, "Center, real part")->capture_default_str();
    auto* o_z0y = brownian->add_option("--z0y", opts.z0y, "Center, imaginary part")->capture_default_str();
    auto* o_times = brownian->add_option("--times", opts.times, "Increasing positive times")
                        ->delimiter(',')
                        ->capture_default_str();
    auto* o_origin = brownian->add_flag("--include-origin", opts.include_origin, "Prepend B_0 = 0");
    auto* verify = app.add_subcommand("verify", "Run the verification suites");
    auto* o_suite = verify->add_option("--suite", opts.suite, "Which checks to run")
                        ->check(CLI::IsMember({"deterministic", "statistical", "all"}))
                        ->capture_default_str();
    auto* o_reps = verify->add_option("--replicates", opts.replicates, "Monte Carlo replicates")
                       ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "gffdisk: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        ConfigMerger merge(config_path.empty() ? nlohmann::json::object() : load_config(config_path));
        merge.take(o_nmax, "n_max", config.n_max);
        merge.take(o_kmax, "k_max", config.k_max);
        merge.take(o_seed, "seed", config.seed);
        merge.take(o_qr, "quad_radial", config.quad.radial_nodes);
        merge.take(o_qa, "quad_angular", config.quad.angular_nodes);
        merge.take(o_fmt, "format", format);
        merge.take(o_out, "out", out_path);
        merge.take(o_res, "resolution", opts.resolution);
        merge.take(o_queries, "queries", opts.queries);
        merge.take(o_z0x, "z0x", opts.z0x);
        merge.take(o_z0y, "z0y", opts.z0y);
        merge.take(o_times, "times", opts.times);
        merge.take(o_origin, "include_origin", opts.include_origin);
        merge.take(o_suite, "suite", opts.suite);
        merge.take(o_reps, "replicates", opts.replicates);
        merge.reject_unknown();

        config.format = parse_format(format);
        if (!out_path.empty()) config.output_path = out_path;
        if (opts.suite != "deterministic" && opts.suite != "statistical" && opts.suite != "all")
            throw std::invalid_argument("unknown suite '" + opts.suite + "'");
        config.validate();

        if (basis->parsed()) return cmd_basis(config, out);
        if (sample->parsed()) return cmd_sample(config, out);
        if (grid->parsed()) return cmd_grid(config, opts, out);
        if (cov->parsed()) return cmd_cov(config, opts, out);
        if (brownian->parsed()) return cmd_brownian(config, opts, out);
        if (verify->parsed()) return cmd_verify(config, opts, out);
        return kExitUsage;
    } catch (const IoError& e) {
        err << "gffdisk: " << e.what() << '\n';
        return kExitIo;
    } catch (const std::invalid_argument& e) {
        err << "gffdisk: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::domain_error& e) {
        err << "gffdisk: " << e.what() << '\n';
        return kExitUsage;
    }
}

}  // namespace gffdisk
