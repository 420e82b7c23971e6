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
/**
 * @file encodings.hpp
 * Point encoders, shape point clouds and 3D rotations.
 */
#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <vector>

#include "lcuqml/qsim.hpp"

namespace lcuqml {

struct Spherical {
    double r = 0.0;
    /// Polar angle in [0, pi].
    double theta = 0.0;
    /// Azimuth in [-pi, pi).
    double phi = 0.0;
};

Spherical to_spherical(const Eigen::Vector3d &p);
Eigen::Vector3d to_cartesian(const Spherical &s);

struct PointCloud {
    std::vector<Eigen::Vector3d> points;
    std::vector<Spherical> spherical;
    std::optional<int> label;

    static PointCloud from_cartesian(std::vector<Eigen::Vector3d> points,
                                     std::optional<int> label = std::nullopt);
    [[nodiscard]] std::size_t size() const { return points.size(); }
};

/// cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>.
Statevector bloch_encode(double theta, double phi);
/// Bloch encoding of each point's direction (radius ignored), point 0 on qubit 0.
Statevector encode_cloud_bloch(const PointCloud &cloud);

/// (2/pi^2)(pi - x)(pi - y)(pi - z).
double iqp_entangling_angle(double x, double y, double z);
/// H on both qubits, phase(x) on q0, phase(y) on q1, controlled-phase(phi(x, y, z)).
Circuit iqp_layer(double x, double y, double z, int q0 = 0, int q1 = 1);
/// Two iqp_layer applications on |00>.
Statevector iqp_encode(double x, double y, double z);
/// Product of iqp_encode per point, point i on qubits (2i, 2i+1).
Statevector encode_cloud_iqp(const PointCloud &cloud);

enum class Shape { Sphere, Torus };

inline constexpr double kTorusMajorRadius = 1.0;
inline constexpr double kTorusMinorRadius = 0.5;

/// Factor that brings the mean torus point magnitude to 1.
double torus_scale();

/// Sphere: uniform on the unit sphere. Torus: uniform angles, rescaled by torus_scale().
PointCloud sample_shape_cloud(Shape shape, int n_points, std::uint64_t seed);

struct Dataset {
    std::vector<PointCloud> samples;
    /// +1 for sphere, -1 for torus in generated sets.
    std::vector<int> labels;
    std::vector<std::size_t> train_idx;
    std::vector<std::size_t> test_idx;
};

/// n_per_class sphere clouds then n_per_class torus clouds, with an 80/20 split.
Dataset make_shape_dataset(int n_per_class, int n_points, std::uint64_t seed);
/// Seeded shuffle, first floor(train_fraction * n) samples train.
void split_dataset(Dataset &ds, double train_fraction, std::uint64_t seed);

/// Per-coordinate affine map onto [-pi/2, pi/2] over all points; constant coordinates map to 0.
Dataset normalize_to_angle_range(const Dataset &ds);

/// Rodrigues rotation about a (normalized) nonzero axis.
Eigen::Matrix3d rotation_matrix(const Eigen::Vector3d &axis, double angle);
PointCloud rotate_cloud(const PointCloud &cloud, const Eigen::Vector3d &axis, double angle);
/// exp(-i angle/2 n.sigma), the SU(2) lift of the rotation.
CMatrix su2_rotation(const Eigen::Vector3d &axis, double angle);
/// Unit vector from a seeded normal draw.
Eigen::Vector3d random_axis(std::uint64_t seed);

/// Columns: cloud_id,label,x,y,z.
void write_dataset_csv(const Dataset &ds, const std::filesystem::path &path);
Dataset read_dataset_csv(const std::filesystem::path &path);

} // namespace lcuqml
