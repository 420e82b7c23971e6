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
#include "lcuqml/encodings.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

#include "lcuqml/errors.hpp"

namespace lcuqml {

using std::numbers::pi;

Spherical to_spherical(const Eigen::Vector3d &p) {
    Spherical s;
    s.r = p.norm();
    if (s.r == 0.0) {
        return s;
    }
    s.theta = std::acos(std::clamp(p.z() / s.r, -1.0, 1.0));
    s.phi = std::atan2(p.y(), p.x());
    if (s.phi >= pi) {
        s.phi -= 2.0 * pi;
    }
    return s;
}

Eigen::Vector3d to_cartesian(const Spherical &s) {
    return {s.r * std::sin(s.theta) * std::cos(s.phi), s.r * std::sin(s.theta) * std::sin(s.phi),
            s.r * std::cos(s.theta)};
}

PointCloud PointCloud::from_cartesian(std::vector<Eigen::Vector3d> points, std::optional<int> label) {
    PointCloud c;
    c.spherical.reserve(points.size());
    for (const auto &p : points) {
        c.spherical.push_back(to_spherical(p));
    }
    c.points = std::move(points);
    c.label = label;
    return c;
}

Statevector bloch_encode(double theta, double phi) {
    CVector a(2);
    a << std::cos(theta / 2.0), std::polar(1.0, phi) * std::sin(theta / 2.0);
    return Statevector::from_amplitudes(std::move(a));
}

namespace {

CVector tensor_all(const std::vector<CVector> &parts) {
    CVector v = CVector::Ones(1);
    for (const auto &p : parts) {
        CVector next(v.size() * p.size());
        for (Eigen::Index i = 0; i < v.size(); ++i) {
            next.segment(i * p.size(), p.size()) = v[i] * p;
        }
        v = std::move(next);
    }
    return v;
}

} // namespace

Statevector encode_cloud_bloch(const PointCloud &cloud) {
    if (cloud.size() == 0) {
        throw DomainError("empty point cloud");
    }
    std::vector<CVector> parts;
    for (const auto &s : cloud.spherical) {
        parts.push_back(bloch_encode(s.theta, s.phi).amplitudes());
    }
    return Statevector::from_amplitudes(tensor_all(parts));
}

double iqp_entangling_angle(double x, double y, double z) {
    return 2.0 / (pi * pi) * (pi - x) * (pi - y) * (pi - z);
}

Circuit iqp_layer(double x, double y, double z, int q0, int q1) {
    return {gates::h(q0), gates::h(q1), gates::phase(q0, x), gates::phase(q1, y),
            gates::controlled_phase(q0, q1, iqp_entangling_angle(x, y, z))};
}

Statevector iqp_encode(double x, double y, double z) {
    Circuit c = iqp_layer(x, y, z);
    const Circuit again = c;
    c.insert(c.end(), again.begin(), again.end());
    return apply_circuit(Statevector(2), c);
}

Statevector encode_cloud_iqp(const PointCloud &cloud) {
    if (cloud.size() == 0) {
        throw DomainError("empty point cloud");
    }
    std::vector<CVector> parts;
    for (const auto &p : cloud.points) {
        parts.push_back(iqp_encode(p.x(), p.y(), p.z()).amplitudes());
    }
    return Statevector::from_amplitudes(tensor_all(parts));
}

double torus_scale() {
    // mean of |p| = sqrt(R^2 + r^2 + 2 R r cos v) over uniform v, midpoint rule
    constexpr int kSteps = 4096;
    const double a = kTorusMajorRadius * kTorusMajorRadius + kTorusMinorRadius * kTorusMinorRadius;
    const double b = 2.0 * kTorusMajorRadius * kTorusMinorRadius;
    double s = 0.0;
    for (int i = 0; i < kSteps; ++i) {
        s += std::sqrt(a + b * std::cos(2.0 * pi * (i + 0.5) / kSteps));
    }
    return 1.0 / (s / kSteps);
}

PointCloud sample_shape_cloud(Shape shape, int n_points, std::uint64_t seed) {
    if (n_points < 1) {
        throw DomainError("n_points must be >= 1");
    }
    std::mt19937_64 rng(seed);
    std::vector<Eigen::Vector3d> pts;
    pts.reserve(static_cast<std::size_t>(n_points));
    if (shape == Shape::Sphere) {
        std::normal_distribution<double> g(0.0, 1.0);
        while (static_cast<int>(pts.size()) < n_points) {
            Eigen::Vector3d v(g(rng), g(rng), g(rng));
            const double n = v.norm();
            if (n > 1e-12) {
                pts.push_back(v / n);
            }
        }
        return PointCloud::from_cartesian(std::move(pts), 1);
    }
    std::uniform_real_distribution<double> u(0.0, 2.0 * pi);
    const double scale = torus_scale();
    for (int i = 0; i < n_points; ++i) {
        const double a = u(rng);
        const double b = u(rng);
        const double ring = kTorusMajorRadius + kTorusMinorRadius * std::cos(b);
        pts.emplace_back(scale * ring * std::cos(a), scale * ring * std::sin(a),
                         scale * kTorusMinorRadius * std::sin(b));
    }
    return PointCloud::from_cartesian(std::move(pts), -1);
}

void split_dataset(Dataset &ds, double train_fraction, std::uint64_t seed) {
    if (!(train_fraction > 0.0 && train_fraction < 1.0)) {
        throw DomainError("train fraction must lie in (0, 1)");
    }
    std::vector<std::size_t> idx(ds.samples.size());
    for (std::size_t i = 0; i < idx.size(); ++i) {
        idx[i] = i;
    }
    std::mt19937_64 rng(seed);
    std::shuffle(idx.begin(), idx.end(), rng);
    const auto n_train = static_cast<std::size_t>(std::floor(train_fraction * static_cast<double>(idx.size()) + 1e-9));
    ds.train_idx.assign(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(n_train));
    ds.test_idx.assign(idx.begin() + static_cast<std::ptrdiff_t>(n_train), idx.end());
    std::sort(ds.train_idx.begin(), ds.train_idx.end());
    std::sort(ds.test_idx.begin(), ds.test_idx.end());
}

Dataset make_shape_dataset(int n_per_class, int n_points, std::uint64_t seed) {
    if (n_per_class < 1) {
        throw DomainError("n_per_class must be >= 1");
    }
    Dataset ds;
    for (int cls = 0; cls < 2; ++cls) {
        const Shape shape = cls == 0 ? Shape::Sphere : Shape::Torus;
        for (int i = 0; i < n_per_class; ++i) {
            const auto s = derive_seed(seed, static_cast<std::uint64_t>(cls * n_per_class + i));
            ds.samples.push_back(sample_shape_cloud(shape, n_points, s));
            ds.labels.push_back(cls == 0 ? 1 : -1);
        }
    }
    split_dataset(ds, 0.8, derive_seed(seed, 0xFFFFFFFFULL));
    return ds;
}

Dataset normalize_to_angle_range(const Dataset &ds) {
    Eigen::Vector3d lo = Eigen::Vector3d::Constant(std::numeric_limits<double>::infinity());
    Eigen::Vector3d hi = -lo;
    bool any = false;
    for (const auto &c : ds.samples) {
        for (const auto &p : c.points) {
            lo = lo.cwiseMin(p);
            hi = hi.cwiseMax(p);
            any = true;
        }
    }
    if (!any) {
        throw DomainError("cannot normalize an empty dataset");
    }
    Dataset out = ds;
    for (auto &c : out.samples) {
        std::vector<Eigen::Vector3d> pts;
        for (const auto &p : c.points) {
            Eigen::Vector3d q;
            for (int k = 0; k < 3; ++k) {
                const double span = hi[k] - lo[k];
                q[k] = span > 0.0 ? -pi / 2.0 + pi * (p[k] - lo[k]) / span : 0.0;
            }
            pts.push_back(q);
        }
        c = PointCloud::from_cartesian(std::move(pts), c.label);
    }
    return out;
}

Eigen::Matrix3d rotation_matrix(const Eigen::Vector3d &axis, double angle) {
    const double n = axis.norm();
    if (n < 1e-15) {
        throw DomainError("rotation axis must be nonzero");
    }
    const Eigen::Vector3d k = axis / n;
    Eigen::Matrix3d kx;
    kx << 0, -k.z(), k.y(), k.z(), 0, -k.x(), -k.y(), k.x(), 0;
    return Eigen::Matrix3d::Identity() + std::sin(angle) * kx + (1.0 - std::cos(angle)) * kx * kx;
}

PointCloud rotate_cloud(const PointCloud &cloud, const Eigen::Vector3d &axis, double angle) {
    const Eigen::Matrix3d r = rotation_matrix(axis, angle);
    std::vector<Eigen::Vector3d> pts;
    pts.reserve(cloud.size());
    for (const auto &p : cloud.points) {
        pts.push_back(r * p);
    }
    return PointCloud::from_cartesian(std::move(pts), cloud.label);
}

CMatrix su2_rotation(const Eigen::Vector3d &axis, double angle) {
    const double n = axis.norm();
    if (n < 1e-15) {
        throw DomainError("rotation axis must be nonzero");
    }
    const Eigen::Vector3d k = axis / n;
    const CMatrix ns = k.x() * pauli_matrix('X') + k.y() * pauli_matrix('Y') + k.z() * pauli_matrix('Z');
    return std::cos(angle / 2.0) * CMatrix::Identity(2, 2) - cplx(0.0, std::sin(angle / 2.0)) * ns;
}

Eigen::Vector3d random_axis(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g(0.0, 1.0);
    for (;;) {
        Eigen::Vector3d v(g(rng), g(rng), g(rng));
        if (v.norm() > 1e-12) {
            return v.normalized();
        }
    }
}

void write_dataset_csv(const Dataset &ds, const std::filesystem::path &path) {
    std::ofstream out(path);
    if (!out) {
        throw ValidationError("cannot write " + path.string());
    }
    out.precision(17);
    out << "cloud_id,label,x,y,z\n";
    for (std::size_t i = 0; i < ds.samples.size(); ++i) {
        const int label = i < ds.labels.size() ? ds.labels[i] : ds.samples[i].label.value_or(0);
        for (const auto &p : ds.samples[i].points) {
            out << i << ',' << label << ',' << p.x() << ',' << p.y() << ',' << p.z() << '\n';
        }
    }
}

Dataset read_dataset_csv(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw ValidationError("cannot read " + path.string());
    }
    std::string line;
    if (!std::getline(in, line) || line.rfind("cloud_id", 0) != 0) {
        throw ValidationError("dataset CSV must start with a cloud_id header");
    }
    Dataset ds;
    std::vector<std::vector<Eigen::Vector3d>> pts;
    long last = -1;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        std::replace(line.begin(), line.end(), ',', ' ');
        std::istringstream row(line);
        long id = 0;
        int label = 0;
        double x = 0, y = 0, z = 0;
        if (!(row >> id >> label >> x >> y >> z)) {
            throw ValidationError("malformed dataset row: " + line);
        }
        if (id != last) {
            pts.emplace_back();
            ds.labels.push_back(label);
            last = id;
        }
        pts.back().emplace_back(x, y, z);
    }
    for (std::size_t i = 0; i < pts.size(); ++i) {
        ds.samples.push_back(PointCloud::from_cartesian(std::move(pts[i]), ds.labels[i]));
    }
    return ds;
}

} // namespace lcuqml
