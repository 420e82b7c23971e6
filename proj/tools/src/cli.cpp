// Copyright 2026 The lcuqml Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "lcuqml_cli/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <Eigen/Core>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <numbers>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "lcuqml/encodings.hpp"
#include "lcuqml/errors.hpp"
#include "lcuqml/groupproj.hpp"
#include "lcuqml/harness.hpp"
#include "lcuqml/mnist.hpp"
#include "lcuqml/pooling.hpp"
#include "lcuqml/resnet.hpp"

namespace lcuqml::cli {
namespace {

namespace fs = std::filesystem;
using json = nlohmann::json;

class ConfigError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Raised when a verification subcommand finds a mismatch.
class CheckFailed : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

struct Result {
    Table table;
    json summary = json::object();
};

struct Field {
    std::string key;
    bool required = false;
    CLI::Option *option = nullptr;
    std::function<void(const json &)> from_json;
    std::function<json()> to_json;
};

struct Command {
    std::string name;
    CLI::App *app = nullptr;
    std::vector<Field> fields;
    std::function<Result()> run;
    /// Name of the field holding the master seed, if any.
    std::string seed_key = "seed";

    template <class T>
    void add(const std::string &key, T &ref, const std::string &desc, bool required = false) {
        std::string flag = "--" + key;
        std::replace(flag.begin(), flag.end(), '_', '-');
        CLI::Option *opt = nullptr;
        if constexpr (std::is_same_v<T, bool>) {
            opt = app->add_flag(flag, ref, desc);
        } else {
            opt = app->add_option(flag, ref, desc)->capture_default_str();
        }
        fields.push_back({key, required, opt, [&ref](const json &j) { ref = j.get<T>(); },
                          [&ref] { return json(ref); }});
    }
};

std::string join(const std::vector<int> &v, char sep) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        s += (i ? std::string(1, sep) : std::string()) + std::to_string(v[i]);
    }
    return s;
}

BoundaryMode parse_mode(const std::string &m) {
    if (m == "periodic") {
        return BoundaryMode::Periodic;
    }
    if (m == "zero_padded") {
        return BoundaryMode::ZeroPadded;
    }
    throw ConfigError("mode must be 'periodic' or 'zero_padded', got '" + m + "'");
}

ImageGrid uniform_random_image(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<double> px(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (auto &p : px) {
        p = u(rng);
    }
    return ImageGrid::from_pixels(n, std::move(px));
}

void write_outputs(const Command &cmd, const Result &res, const fs::path &out) {
    if (out.has_parent_path()) {
        fs::create_directories(out.parent_path());
    }
    {
        std::ofstream f(out);
        if (!f) {
            throw ConfigError("cannot write " + out.string());
        }
        for (std::size_t i = 0; i < res.table.header.size(); ++i) {
            f << (i ? "," : "") << res.table.header[i];
        }
        f << '\n';
        for (const auto &row : res.table.rows) {
            for (std::size_t i = 0; i < row.size(); ++i) {
                f << (i ? "," : "") << row[i];
            }
            f << '\n';
        }
    }
    json params = json::object();
    for (const auto &fld : cmd.fields) {
        params[fld.key] = fld.to_json();
    }
    json meta{
        {"experiment", cmd.name},
        {"parameters", params},
        {"summary", res.summary},
        {"csv", out.filename().string()},
        {"rows", res.table.rows.size()},
        {"versions",
         {{"lcuqml", LCUQML_VERSION},
          {"eigen", std::to_string(EIGEN_WORLD_VERSION) + "." + std::to_string(EIGEN_MAJOR_VERSION) + "." +
                        std::to_string(EIGEN_MINOR_VERSION)},
          {"cli11", CLI11_VERSION},
          {"compiler", __VERSION__}}},
    };
    if (!cmd.seed_key.empty()) {
        meta["seed"] = params[cmd.seed_key];
    }
    fs::path meta_path = out;
    meta_path.replace_extension(".json");
    std::ofstream m(meta_path);
    m << meta.dump(2) << '\n';
}

void apply_config(const Command &cmd, const json &cfg) {
    if (!cfg.is_object()) {
        throw ConfigError("config must be a JSON object");
    }
    if (cfg.contains("experiment") && cfg["experiment"] != cmd.name) {
        throw ConfigError("config is for experiment " + cfg["experiment"].dump() + ", not '" + cmd.name + "'");
    }
    std::set<std::string> known{"experiment", "out", "mnist_dir"};
    for (const auto &fld : cmd.fields) {
        known.insert(fld.key);
        if (!cfg.contains(fld.key)) {
            if (fld.required) {
                throw ConfigError("missing config field '" + fld.key + "' for " + cmd.name);
            }
            continue;
        }
        if (fld.option->count() > 0) {
            continue;
        }
        try {
            fld.from_json(cfg.at(fld.key));
        } catch (const json::exception &) {
            throw ConfigError("config field '" + fld.key + "' has the wrong type");
        }
    }
    for (const auto &[k, v] : cfg.items()) {
        if (!known.contains(k)) {
            throw ConfigError("unknown config field '" + k + "' for " + cmd.name);
        }
    }
}

} // namespace

int run_cli(int argc, const char *const *argv) {
    CLI::App app{"Residual layers, image pooling and group projections as LCU programs", "lcuqml"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string config_path;
    std::string out_path;
    std::string mnist_dir;
    app.add_option("--config", config_path, "JSON experiment config; command-line flags take precedence");
    app.add_option("--out", out_path, "CSV output path (default <subcommand>.csv); metadata goes next to it as .json");
    app.add_option("--mnist-dir", mnist_dir, "Directory with IDX files (else $MNIST_DIR, else the bundled subset)");

    std::vector<std::unique_ptr<Command>> commands;
    auto make = [&](const std::string &name, const std::string &desc) -> Command & {
        commands.push_back(std::make_unique<Command>());
        Command &c = *commands.back();
        c.name = name;
        c.app = app.add_subcommand(name, desc);
        return c;
    };

    // resnet-variance
    PlateauConfig plateau;
    {
        Command &c = make("resnet-variance", "Gradient variance with and without the residual connection");
        c.add("n_list", plateau.n_list, "Qubit counts", true);
        c.add("samples", plateau.samples, "Random parameter draws per n", true);
        c.add("sublayers_w1", plateau.sublayers_w1, "Sublayers in W1");
        c.add("sublayers_w2", plateau.sublayers_w2, "Sublayers in W2");
        c.add("generators_w1", plateau.generators_w1, "Two-qubit Pauli generators of W1");
        c.add("generators_w2", plateau.generators_w2, "Two-qubit Pauli generators of W2");
        c.add("observable", plateau.observable, "Leading Pauli letters of the observable");
        c.add("seed", plateau.seed, "Master seed", true);
        c.run = [&plateau] {
            Result r;
            r.table.header = {"model", "n", "grad_variance", "mean_abs_nonunitary", "samples", "seed"};
            std::vector<double> ns;
            for (int n : plateau.n_list) {
                ns.push_back(n);
            }
            for (bool residual : {true, false}) {
                PlateauConfig cfg = plateau;
                cfg.residual = residual;
                std::vector<double> lv;
                for (const auto &row : plateau_experiment(cfg)) {
                    r.table.rows.push_back({residual ? "residual" : "plain", std::to_string(row.n),
                                            num(row.grad_variance), num(row.mean_abs_nonunitary),
                                            std::to_string(row.samples), std::to_string(row.seed)});
                    lv.push_back(std::log(row.grad_variance));
                }
                if (ns.size() >= 2) {
                    r.summary[residual ? "log_variance_slope_residual" : "log_variance_slope_plain"] =
                        fitted_slope(ns, lv);
                }
            }
            return r;
        };
    }

    // resnet-ensemble
    struct {
        int layers = 3;
        int qubits = 2;
        double beta = 0.5;
        std::uint64_t seed = 1;
    } ens;
    {
        Command &c = make("resnet-ensemble", "Expand (I + W_L)...(I + W_1) W_0 into its weighted unitary terms");
        c.add("layers", ens.layers, "Residual layers L", true);
        c.add("qubits", ens.qubits, "Qubits", true);
        c.add("beta", ens.beta, "Residual strength");
        c.add("seed", ens.seed, "Master seed", true);
        c.run = [&ens] {
            if (ens.layers < 1 || ens.layers > 10 || ens.qubits < 1 || ens.qubits > 8) {
                throw ConfigError("need 1 <= layers <= 10 and 1 <= qubits <= 8");
            }
            const auto e = build_uniform_ensemble(ens.layers, ens.qubits, haar_sublayer_factory(ens.qubits),
                                                  ens.seed, ens.beta);
            const auto terms = expand_ensemble(e);
            const Eigen::Index dim = Eigen::Index{1} << ens.qubits;
            CMatrix sum = CMatrix::Zero(dim, dim);
            Result r;
            r.table.header = {"term", "included_layers", "depth", "weight"};
            for (std::size_t i = 0; i < terms.size(); ++i) {
                sum += terms[i].weight * terms[i].op;
                r.table.rows.push_back({std::to_string(i), join(terms[i].included_layers, ';'),
                                        std::to_string(terms[i].depth), num(terms[i].weight)});
            }
            double err = 0.0;
            for (Eigen::Index k = 0; k < dim; ++k) {
                const auto start = apply_circuit(prepare_basis_state(ens.qubits, static_cast<BasisIndex>(k)), e.w0);
                const auto fw = resnet_forward(e.layers, start);
                err = std::max(err, (fw.state.amplitudes() * std::sqrt(fw.pi_total) - sum.col(k)).cwiseAbs().maxCoeff());
            }
            r.summary["terms"] = terms.size();
            r.summary["max_operator_error"] = err;
            if (err >= 1e-9) {
                throw CheckFailed("expanded ensemble differs from the forward pass by " + num(err));
            }
            return r;
        };
    }

    // resnet-attempts
    struct {
        int max_layers = 3;
        int qubits = 3;
        std::vector<double> betas{0.5, 0.6, 0.7, 0.8, 0.9};
        std::uint64_t seed = 11;
    } att;
    {
        Command &c = make("resnet-attempts", "Expected repetitions until every residual layer succeeds");
        c.add("max_layers", att.max_layers, "Largest L", true);
        c.add("qubits", att.qubits, "Qubits", true);
        c.add("betas", att.betas, "Residual strengths");
        c.add("seed", att.seed, "Master seed", true);
        c.run = [&att] {
            Result r;
            r.table.header = {"layers", "beta", "expected_attempts", "bound_attempts"};
            for (int l = 1; l <= att.max_layers; ++l) {
                for (double beta : att.betas) {
                    const double lb = std::pow(beta_lower_bound(beta), l);
                    r.table.rows.push_back({std::to_string(l), num(beta),
                                            num(ensemble_expected_attempts(l, beta, att.qubits, att.seed)),
                                            lb > 0.0 ? num(1.0 / lb) : "inf"});
                }
            }
            return r;
        };
    }

    // pool-verify
    struct {
        int size = 8;
        int d = 3;
        std::string mode = "periodic";
        std::uint64_t seed = 1;
    } pv;
    {
        Command &c = make("pool-verify", "Pool a seeded random image by simulation and compare with the classical average");
        c.add("size", pv.size, "Image side N", true);
        c.add("d", pv.d, "Window side D", true);
        c.add("mode", pv.mode, "periodic or zero_padded");
        c.add("seed", pv.seed, "Image seed", true);
        c.run = [&pv] {
            if (pv.size < 1 || pv.size > 64) {
                throw ConfigError("size must lie in [1, 64]");
            }
            const PoolingSpec spec{pv.d, parse_mode(pv.mode)};
            const auto img = uniform_random_image(pv.size, pv.seed);
            const auto res = pool_image(img, spec);
            const auto oracle = classical_pool_oracle(img, spec);
            const int n = pv.size;
            const int side = res.grid.n_side;
            CVector got(n * n);
            CVector want(n * n);
            for (int x = 0; x < n; ++x) {
                for (int y = 0; y < n; ++y) {
                    got[x * n + y] = res.outcome.post_state[static_cast<BasisIndex>(x * side + y)];
                    want[x * n + y] = oracle.at(x, y);
                }
            }
            const double err = (got / got.norm() - want / want.norm()).cwiseAbs().maxCoeff();
            const double formula = pooling_success_probability(img, spec);
            Result r;
            r.table.header = {"size", "d", "mode", "seed", "grid_side", "pi_simulated", "pi_formula",
                              "max_amplitude_error"};
            r.table.rows.push_back({std::to_string(n), std::to_string(pv.d), pv.mode, std::to_string(pv.seed),
                                    std::to_string(side), num(res.outcome.pi_success), num(formula), num(err)});
            r.summary["max_amplitude_error"] = err;
            r.summary["pi_error"] = std::abs(formula - res.outcome.pi_success);
            if (err >= 1e-10 || std::abs(formula - res.outcome.pi_success) >= 1e-10) {
                throw CheckFailed("pooled state differs from the classical average");
            }
            return r;
        };
    }

    // pool-sweep
    struct {
        std::string sweep = "window";
        int images = 100;
        std::vector<int> d_values{2, 3, 4, 5, 6, 7, 8};
        std::vector<int> n_values{8, 16, 28};
        int d = 3;
        std::string mode = "periodic";
    } ps;
    {
        Command &c = make("pool-sweep", "Mean and spread of the pooling success probability over MNIST images");
        c.seed_key.clear();
        c.add("sweep", ps.sweep, "window (vary D) or size (vary N at fixed D)", true);
        c.add("images", ps.images, "Number of images", true);
        c.add("d_values", ps.d_values, "Window sides for the window sweep");
        c.add("n_values", ps.n_values, "Image sides for the size sweep");
        c.add("d", ps.d, "Window side for the size sweep");
        c.add("mode", ps.mode, "periodic or zero_padded");
        c.run = [&ps, &mnist_dir] {
            if (ps.images < 1) {
                throw ConfigError("images must be positive");
            }
            const auto imgs = load_mnist_grids(mnist_dir.empty() ? std::nullopt : std::optional<std::string>(mnist_dir),
                                               static_cast<std::size_t>(ps.images));
            std::vector<SweepRow> rows;
            if (ps.sweep == "window") {
                rows = sweep_over_window(imgs, ps.d_values, parse_mode(ps.mode));
            } else if (ps.sweep == "size") {
                rows = sweep_over_size(imgs, ps.n_values, ps.d, parse_mode(ps.mode));
            } else {
                throw ConfigError("sweep must be 'window' or 'size'");
            }
            Result r;
            r.table.header = {"parameter", "mean", "std", "n_images"};
            for (const auto &row : rows) {
                r.table.rows.push_back({num(row.parameter), num(row.mean), num(row.std), std::to_string(row.n_images)});
            }
            r.summary["images_loaded"] = imgs.size();
            return r;
        };
    }

    // project-verify
    struct {
        int group = 3;
        int qudit_bits = 1;
        int cases = 50;
        bool class_register = false;
        std::uint64_t seed = 1;
    } pj;
    {
        Command &c = make("project-verify", "Weighted irrep projections: LCU programs against direct summation");
        c.add("group", pj.group, "Symmetric group S_n, n in {2, 3, 4}", true);
        c.add("qudit_bits", pj.qudit_bits, "Qubits per permuted qudit");
        c.add("cases", pj.cases, "Random (weights, state) cases", true);
        c.add("class_register", pj.class_register, "Also run the conjugacy-class register pipeline");
        c.add("seed", pj.seed, "Master seed", true);
        c.run = [&pj] {
            if (pj.qudit_bits < 1 || pj.group * pj.qudit_bits > 8) {
                throw ConfigError("need qudit_bits >= 1 and group * qudit_bits <= 8");
            }
            const auto g = symmetric_group(pj.group);
            const auto rep = swap_rep(g, pj.qudit_bits);
            const int nq = pj.group * pj.qudit_bits;
            Result r;
            r.table.header = {"group", "case", "pi_simulated", "pi_single_projection_claim", "error_character_register",
                              "error_class_register"};
            double worst = 0.0;
            for (int k = 0; k < pj.cases; ++k) {
                const auto kk = static_cast<std::uint64_t>(k);
                const auto psi = haar_random_state(nq, derive_seed(pj.seed, 2 * kk));
                const CVector ar = haar_random_state(3, derive_seed(pj.seed, 2 * kk + 1)).amplitudes();
                ProjectionWeights w;
                std::vector<double> weights;
                std::vector<double> degrees;
                for (std::size_t i = 0; i < g.num_irreps(); ++i) {
                    w.a.push_back(ar[static_cast<Eigen::Index>(i)]);
                    weights.push_back(apply_projector(g, rep, i, psi).weight);
                    degrees.push_back(g.degree(i));
                }
                const CVector direct = direct_weighted_projection(g, rep, w, psi);
                const CVector want = direct / direct.norm();
                const auto out = run_lcu(build_projection_program(g, rep, w), psi);
                const double e1 = (out.post_state.amplitudes() - want).cwiseAbs().maxCoeff();
                std::string e2 = "";
                worst = std::max(worst, e1);
                if (pj.class_register) {
                    const auto cls = run_lcu(conjugacy_class_program(g, rep, w), psi);
                    const double e = (cls.post_state.amplitudes() - want).cwiseAbs().maxCoeff();
                    worst = std::max(worst, e);
                    e2 = num(e);
                }
                const auto p = projection_success_probability(w, weights, degrees);
                r.table.rows.push_back({"S" + std::to_string(pj.group), std::to_string(k), num(out.pi_success),
                                        num(p.single_projection_claim), num(e1), e2});
            }
            r.summary["max_error"] = worst;
            if (worst >= 1e-10) {
                throw CheckFailed("LCU projection differs from direct summation by " + num(worst));
            }
            return r;
        };
    }

    // rotinv-overlap
    struct {
        int clouds = 50;
        int angles = 20;
        std::uint64_t seed = 13;
    } ri;
    {
        Command &c = make("rotinv-overlap", "Overlap of 4-point clouds with rotated copies, raw and after the S_4 projection");
        c.add("clouds", ri.clouds, "Number of clouds", true);
        c.add("angles", ri.angles, "Angles in [0, pi]", true);
        c.add("seed", ri.seed, "Master seed", true);
        c.run = [&ri] {
            const auto rows = rotational_invariance_experiment(ri.clouds, ri.angles, ri.seed);
            Result r;
            r.table.header = {"theta", "overlap_invariant", "overlap_raw", "cloud_id"};
            double worst = 0.0;
            for (const auto &row : rows) {
                worst = std::max(worst, std::abs(row.overlap_invariant - 1.0));
                r.table.rows.push_back(
                    {num(row.theta), num(row.overlap_invariant), num(row.overlap_raw), std::to_string(row.cloud_id)});
            }
            r.summary["max_invariant_deviation"] = worst;
            if (worst > 1e-8) {
                throw CheckFailed("projected overlap deviates from 1 by " + num(worst));
            }
            return r;
        };
    }

    // alpha-sweep
    AlphaSweepConfig alpha;
    {
        Command &c = make("alpha-sweep", "Kernel SVM accuracy and effective dimension versus symmetric amplification");
        c.add("alphas", alpha.alphas, "Amplification strengths in [0, 1]");
        c.add("repetitions", alpha.repetitions, "Seeded repetitions", true);
        c.add("samples", alpha.samples, "Clouds per repetition", true);
        c.add("points_per_cloud", alpha.points_per_cloud, "Points per cloud (2 to 4)");
        c.add("svm_c", alpha.svm.c, "SVM box constraint C");
        c.add("svm_tol", alpha.svm.tol, "SMO tolerance");
        c.add("lcu_checks", alpha.lcu_checks, "Samples per repetition cross-checked with the LCU program");
        c.add("seed", alpha.seed, "Master seed", true);
        c.run = [&alpha] {
            const auto res = alpha_sweep_experiment(alpha);
            Result r;
            r.table.header = {"alpha", "mean_accuracy", "std_accuracy", "mean_effective_dimension",
                              "std_effective_dimension", "repetitions"};
            for (const auto &row : res.rows) {
                r.table.rows.push_back({num(row.alpha), num(row.mean_accuracy), num(row.std_accuracy),
                                        num(row.mean_effective_dimension), num(row.std_effective_dimension),
                                        std::to_string(row.repetitions)});
            }
            r.summary["max_lcu_deviation"] = res.max_lcu_deviation;
            r.summary["all_converged"] = res.all_converged;
            if (res.max_lcu_deviation >= 1e-10) {
                throw CheckFailed("LCU amplification differs from the direct path by " + num(res.max_lcu_deviation));
            }
            return r;
        };
    }

    if (argc > 1 && argv[1][0] != '-' && app.get_subcommand_no_throw(argv[1]) == nullptr) {
        std::cerr << "error: unknown subcommand '" << argv[1] << "'\n\n" << app.help();
        return kExitConfig;
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &) {
        std::cout << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp &) {
        std::cout << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        std::cerr << "error: " << e.what() << "\n\n" << app.help();
        return kExitConfig;
    }

    Command *cmd = nullptr;
    for (auto &c : commands) {
        if (c->app->parsed()) {
            cmd = c.get();
        }
    }
    try {
        if (!config_path.empty()) {
            std::ifstream f(config_path);
            if (!f) {
                throw ConfigError("cannot open config " + config_path);
            }
            json cfg;
            try {
                cfg = json::parse(f);
            } catch (const json::exception &e) {
                throw ConfigError(std::string("config is not valid JSON: ") + e.what());
            }
            apply_config(*cmd, cfg);
            if (out_path.empty() && cfg.contains("out")) {
                out_path = cfg["out"].get<std::string>();
            }
            if (mnist_dir.empty() && cfg.contains("mnist_dir")) {
                mnist_dir = cfg["mnist_dir"].get<std::string>();
            }
        }
        if (out_path.empty()) {
            out_path = cmd->name + ".csv";
        }
        Result res;
        int code = kExitOk;
        std::string failure;
        try {
            res = cmd->run();
        } catch (const CheckFailed &e) {
            failure = e.what();
            code = kExitNumerical;
        }
        if (code == kExitOk) {
            write_outputs(*cmd, res, out_path);
            std::cout << "wrote " << out_path << " (" << res.table.rows.size() << " rows)\n";
        } else {
            std::cerr << "error: " << failure << '\n';
        }
        return code;
    } catch (const ConfigError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const json::exception &e) {
        std::cerr << "error: bad config value: " << e.what() << '\n';
        return kExitConfig;
    } catch (const DomainError &e) {
        std::cerr << "error: invalid parameter: " << e.what() << '\n';
        return kExitConfig;
    } catch (const ValidationError &e) {
        std::cerr << "error: invalid input: " << e.what() << '\n';
        return kExitConfig;
    } catch (const PostSelectionImpossible &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const NumericalError &e) {
        std::cerr << "error: numerical failure: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const ConstructionError &e) {
        std::cerr << "error: construction failed: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitNumerical;
    }
}

} // namespace lcuqml::cli
