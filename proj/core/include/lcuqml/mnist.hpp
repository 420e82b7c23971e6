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
 * @file mnist.hpp
 * IDX image/label reader.
 */
#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "lcuqml/pooling.hpp"

namespace lcuqml {

struct IdxImages {
    int rows = 0;
    int cols = 0;
    /// One byte per pixel, image-major.
    std::vector<std::uint8_t> data;
    [[nodiscard]] std::size_t count() const {
        return rows * cols == 0 ? 0 : data.size() / static_cast<std::size_t>(rows * cols);
    }
};

/// Reads a big-endian IDX3 file (magic 0x00000803). Throws ValidationError on a bad header or size.
IdxImages load_idx_images(const std::filesystem::path &path, std::size_t max_count = SIZE_MAX);
/// Reads an IDX1 label file (magic 0x00000801).
std::vector<std::uint8_t> load_idx_labels(const std::filesystem::path &path,
                                          std::size_t max_count = SIZE_MAX);

/// Square images with pixels scaled to [0, 1].
std::vector<ImageGrid> idx_to_grids(const IdxImages &images);

/// Paths tried in order: explicit directory, $MNIST_DIR, the compiled default.
std::filesystem::path locate_mnist_dir(const std::optional<std::string> &explicit_dir);

/// Image file inside a directory (train-images-idx3-ubyte or images-idx3-ubyte).
std::filesystem::path mnist_images_file(const std::filesystem::path &dir);
std::filesystem::path mnist_labels_file(const std::filesystem::path &dir);

/// First `count` images of the located dataset.
std::vector<ImageGrid> load_mnist_grids(const std::optional<std::string> &explicit_dir,
                                        std::size_t count);

} // namespace lcuqml
