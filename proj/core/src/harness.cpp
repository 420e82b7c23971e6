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
#include "lcuqml/harness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "lcuqml/encodings.hpp"
#include "lcuqml/errors.hpp"
#include "lcuqml/groupproj.hpp"

namespace lcuqml {

KernelMatrix compute_kernel(const std::vector<Statevector> &states) {
    const auto n = static_cast<Eigen::Index>(states.size());
    KernelMatrix km;
    km.k = Eigen::MatrixXd::Identity(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        km.ids.push_back(static_cast<std::size_t>(i));
        const auto &a = states[static_cast<std::size_t>(i)];
        km.k(i, i) = std::norm(inner_product(a, a));
        for (Eigen::Index j = i + 1; j < n; ++j) {
            const auto &b = states[static_cast<std::size_t>(j)];
            if (a.dim() != b.dim()) {
                throw DomainError("kernel states must share a dimension");
            }
            km.k(i, j) = km.k(j, i) = std::norm(inner_product(a, b));
        }
    }
    return km;
}

void validate_kernel(const KernelMatrix &kernel) {
    const auto &k = kernel.k;
    if (k.rows() != k.cols()) {
        throw ValidationError("kernel must be square");
    }
    if ((k - k.transpose()).cwiseAbs().maxCoeff() > 1e-12) {
        throw ValidationError("kernel is not symmetric");
    }
    if ((k.diagonal().array() - 1.0).abs().maxCoeff() > 1e-10) {
        throw ValidationError("kernel diagonal differs from 1");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(k, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -1e-8) {
        throw ValidationError("kernel is not positive semidefinite");
    }
}

SvmModel svm_train(const KernelMatrix &kernel, const std::vector<int> &labels,
                   const std::vector<std::size_t> &train_idx, const SvmConfig &config) {
    const std::size_t m = train_idx.size();
    if (m == 0) {
        throw DomainError("empty training set");
    }
    if (config.c <= 0.0) {
        throw DomainError("C must be positive");
    }
    SvmModel model;
    model.train_idx = train_idx;
    model.alpha.assign(m, 0.0);
    model.labels.resize(m);
    for (std::size_t t = 0; t < m; ++t) {
        const int y = labels.at(train_idx[t]);
        if (y != 1 && y != -1) {
            throw DomainError("labels must be +1 or -1");
        }
        model.labels[t] = y;
    }
    const double c = config.c;
    constexpr double kTau = 1e-12;
    auto kern = [&](std::size_t a, std::size_t b) {
        return kernel.k(static_cast<Eigen::Index>(train_idx[a]), static_cast<Eigen::Index>(train_idx[b]));
    };
    auto &al = model.alpha;
    const auto &y = model.labels;
    // gradient of (1/2) a^T Q a - e^T a with Q_ab = y_a y_b K_ab
    std::vector<double> g(m, -1.0);
    auto is_up = [&](std::size_t t) { return (y[t] == 1 && al[t] < c) || (y[t] == -1 && al[t] > 0.0); };
    auto is_low = [&](std::size_t t) { return (y[t] == 1 && al[t] > 0.0) || (y[t] == -1 && al[t] < c); };

    int it = 0;
    for (; it < config.max_iterations; ++it) {
        double gmax = -std::numeric_limits<double>::infinity();
        double gmin = std::numeric_limits<double>::infinity();
        std::size_t i = m;
        std::size_t j = m;
        for (std::size_t t = 0; t < m; ++t) {
            const double v = -y[t] * g[t];
            if (is_up(t) && v > gmax) {
                gmax = v;
                i = t;
            }
            if (is_low(t) && v < gmin) {
                gmin = v;
                j = t;
            }
        }
        if (i == m || j == m || gmax - gmin < config.tol) {
            model.converged = true;
            break;
        }
        const double old_i = al[i];
        const double old_j = al[j];
        const double kij = kern(i, j);
        double quad = kern(i, i) + kern(j, j) - 2.0 * kij;
        if (quad <= 0.0) {
            quad = kTau;
        }
        if (y[i] != y[j]) {
            const double delta = (-g[i] - g[j]) / quad;
            const double diff = al[i] - al[j];
            al[i] += delta;
            al[j] += delta;
            if (diff > 0.0) {
                if (al[j] < 0.0) {
                    al[j] = 0.0;
                    al[i] = diff;
                }
            } else if (al[i] < 0.0) {
                al[i] = 0.0;
                al[j] = -diff;
            }
            if (diff > 0.0) {
                if (al[i] > c) {
                    al[i] = c;
                    al[j] = c - diff;
                }
            } else if (al[j] > c) {
                al[j] = c;
                al[i] = c + diff;
            }
        } else {
            const double delta = (g[i] - g[j]) / quad;
            const double sum = al[i] + al[j];
            al[i] -= delta;
            al[j] += delta;
            if (sum > c) {
                if (al[i] > c) {
                    al[i] = c;
                    al[j] = sum - c;
                }
            } else if (al[j] < 0.0) {
                al[j] = 0.0;
                al[i] = sum;
            }
            if (sum > c) {
                if (al[j] > c) {
                    al[j] = c;
                    al[i] = sum - c;
                }
            } else if (al[i] < 0.0) {
                al[i] = 0.0;
                al[j] = sum;
            }
        }
        const double di = al[i] - old_i;
        const double dj = al[j] - old_j;
        for (std::size_t t = 0; t < m; ++t) {
            g[t] += y[t] * (y[i] * kern(i, t) * di + y[j] * kern(j, t) * dj);
        }
    }
    model.iterations = it;

    double sum_free = 0.0;
    int n_free = 0;
    double ub = std::numeric_limits<double>::infinity();
    double lb = -std::numeric_limits<double>::infinity();
    for (std::size_t t = 0; t < m; ++t) {
        const double yg = y[t] * g[t];
        if (al[t] > 0.0 && al[t] < c) {
            sum_free += yg;
            ++n_free;
        } else if ((al[t] >= c && y[t] == -1) || (al[t] <= 0.0 && y[t] == 1)) {
            ub = std::min(ub, yg);
        } else {
            lb = std::max(lb, yg);
        }
    }
    if (n_free > 0) {
        model.rho = sum_free / n_free;
    } else if (std::isfinite(ub) && std::isfinite(lb)) {
        model.rho = (ub + lb) / 2.0;
    } else {
        model.rho = std::isfinite(ub) ? ub : (std::isfinite(lb) ? lb : 0.0);
    }
    return model;
}

int svm_predict(const SvmModel &model, const KernelMatrix &kernel, std::size_t sample) {
    double f = -model.rho;
    for (std::size_t t = 0; t < model.train_idx.size(); ++t) {
        if (model.alpha[t] != 0.0) {
            f += model.alpha[t] * model.labels[t] *
                 kernel.k(static_cast<Eigen::Index>(model.train_idx[t]), static_cast<Eigen::Index>(sample));
        }
    }
    return f >= 0.0 ? 1 : -1;
}

SvmResult svm_train_predict(const KernelMatrix &kernel, const std::vector<int> &labels,
                            const std::vector<std::size_t> &train_idx,
                            const std::vector<std::size_t> &test_idx, const SvmConfig &config) {
    if (test_idx.empty()) {
        throw DomainError("empty test set");
    }
    const SvmModel model = svm_train(kernel, labels, train_idx, config);
    int correct = 0;
    for (std::size_t s : test_idx) {
        correct += svm_predict(model, kernel, s) == labels.at(s) ? 1 : 0;
    }
    return {static_cast<double>(correct) / static_cast<double>(test_idx.size()), model.converged,
            model.iterations};
}

int effective_dimension(const std::vector<Statevector> &states, double variance_fraction) {
    if (states.size() < 2) {
        throw DomainError("effective dimension needs at least two states");
    }
    if (!(variance_fraction > 0.0 && variance_fraction <= 1.0)) {
        throw DomainError("variance fraction must lie in (0, 1]");
    }
    const auto d = static_cast<Eigen::Index>(states[0].dim());
    const auto m = static_cast<Eigen::Index>(states.size());
    Eigen::MatrixXd x(m, 2 * d);
    for (Eigen::Index i = 0; i < m; ++i) {
        const auto &a = states[static_cast<std::size_t>(i)].amplitudes();
        if (a.size() != d) {
            throw DomainError("states must share a dimension");
        }
        x.row(i).head(d) = a.real().transpose();
        x.row(i).tail(d) = a.imag().transpose();
    }
    x.rowwise() -= x.colwise().mean();
    const Eigen::MatrixXd cov = (x.transpose() * x) / static_cast<double>(m - 1);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(cov, Eigen::EigenvaluesOnly);
    Eigen::VectorXd ev = es.eigenvalues().reverse().cwiseMax(0.0);
    const double total = ev.sum();
    if (total <= 1e-14) {
        return 0;
    }
    double acc = 0.0;
    for (Eigen::Index k = 0; k < ev.size(); ++k) {
        acc += ev[k];
        if (acc >= variance_fraction * total * (1.0 - 1e-12)) {
            return static_cast<int>(k + 1);
        }
    }
    return static_cast<int>(ev.size());
}

namespace {

void mean_std(const std::vector<double> &v, double &mean, double &std) {
    mean = 0.0;
    for (double x : v) {
        mean += x;
    }
    mean /= static_cast<double>(v.size());
    double s = 0.0;
    for (double x : v) {
        s += (x - mean) * (x - mean);
    }
    std = std::sqrt(s / static_cast<double>(v.size()));
}

} // namespace

AlphaSweepResult alpha_sweep_experiment(const AlphaSweepConfig &config) {
    if (config.alphas.empty() || config.repetitions < 1 || config.samples < 4 || config.samples % 2 != 0) {
        throw DomainError("alpha sweep needs alphas, repetitions >= 1 and an even sample count >= 4");
    }
    for (double a : config.alphas) {
        if (!(a >= 0.0 && a <= 1.0)) {
            throw DomainError("alpha values must lie in [0, 1]");
        }
    }
    if (config.points_per_cloud < 2 || config.points_per_cloud > 4) {
        throw DomainError("points per cloud must be 2, 3 or 4");
    }
    const auto group = symmetric_group(config.points_per_cloud);
    const auto rep = swap_rep(group, 2);
    AlphaSweepResult result;
    const std::size_t na = config.alphas.size();
    std::vector<std::vector<double>> acc(na);
    std::vector<std::vector<double>> dim(na);

    for (int r = 0; r < config.repetitions; ++r) {
        const Dataset ds = normalize_to_angle_range(
            make_shape_dataset(config.samples / 2, config.points_per_cloud,
                               derive_seed(config.seed, static_cast<std::uint64_t>(r))));
        std::vector<Statevector> raw;
        raw.reserve(ds.samples.size());
        for (const auto &c : ds.samples) {
            raw.push_back(encode_cloud_iqp(c));
        }
        for (std::size_t ai = 0; ai < na; ++ai) {
            const double alpha = config.alphas[ai];
            std::vector<Statevector> states;
            states.reserve(raw.size());
            for (const auto &s : raw) {
                states.push_back(amplify_symmetric_direct(s, alpha, group, rep).state);
            }
            const int checks = std::min<int>(config.lcu_checks, static_cast<int>(raw.size()));
            for (int s = 0; s < checks; ++s) {
                const auto lcu = amplify_symmetric_subspace(raw[static_cast<std::size_t>(s)], alpha, group, rep);
                const double dev = (lcu.state.amplitudes() - states[static_cast<std::size_t>(s)].amplitudes())
                                       .cwiseAbs()
                                       .maxCoeff();
                result.max_lcu_deviation = std::max(result.max_lcu_deviation, dev);
            }
            const KernelMatrix k = compute_kernel(states);
            const SvmResult svm = svm_train_predict(k, ds.labels, ds.train_idx, ds.test_idx, config.svm);
            result.all_converged = result.all_converged && svm.converged;
            acc[ai].push_back(svm.accuracy);
            dim[ai].push_back(effective_dimension(states));
        }
    }
    for (std::size_t ai = 0; ai < na; ++ai) {
        AlphaSweepRow row;
        row.alpha = config.alphas[ai];
        row.repetitions = config.repetitions;
        mean_std(acc[ai], row.mean_accuracy, row.std_accuracy);
        mean_std(dim[ai], row.mean_effective_dimension, row.std_effective_dimension);
        result.rows.push_back(row);
    }
    return result;
}

} // namespace lcuqml
