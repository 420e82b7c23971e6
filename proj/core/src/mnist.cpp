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
#include "lcuqml/mnist.hpp"

#include <cstdlib>
#include <fstream>

#include "lcuqml/errors.hpp"

#ifndef LCUQML_DEFAULT_MNIST_DIR
#define LCUQML_DEFAULT_MNIST_DIR "data/mnist"
#endif

namespace lcuqml {

namespace {

std::uint32_t read_be32(std::istream &in) {
    unsigned char b[4];
    if (!in.read(reinterpret_cast<char *>(b), 4)) {
        throw ValidationError("truncated IDX header");
    }
    return (std::uint32_t{b[0]} << 24) | (std::uint32_t{b[1]} << 16) | (std::uint32_t{b[2]} << 8) |
           std::uint32_t{b[3]};
}

std::ifstream open_binary(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ValidationError("cannot open " + path.string());
    }
    return in;
}

std::vector<std::uint8_t> read_payload(std::istream &in, std::size_t n) {
    std::vector<std::uint8_t> out(n);
    if (n != 0 && !in.read(reinterpret_cast<char *>(out.data()), static_cast<std::streamsize>(n))) {
        throw ValidationError("IDX payload shorter than the header count");
    }
    return out;
}

} // namespace

IdxImages load_idx_images(const std::filesystem::path &path, std::size_t max_count) {
    auto in = open_binary(path);
    const std::uint32_t magic = read_be32(in);
    if (magic != 0x00000803U) {
        throw ValidationError("bad IDX image magic in " + path.string());
    }
    const std::uint32_t n = read_be32(in);
    const std::uint32_t rows = read_be32(in);
    const std::uint32_t cols = read_be32(in);
    if (rows == 0 || cols == 0 || rows > 4096 || cols > 4096) {
        throw ValidationError("implausible IDX image dimensions");
    }
    const std::size_t take = std::min<std::size_t>(n, max_count);
    IdxImages out;
    out.rows = static_cast<int>(rows);
    out.cols = static_cast<int>(cols);
    out.data = read_payload(in, take * rows * cols);
    return out;
}

std::vector<std::uint8_t> load_idx_labels(const std::filesystem::path &path, std::size_t max_count) {
    auto in = open_binary(path);
    if (read_be32(in) != 0x00000801U) {
        throw ValidationError("bad IDX label magic in " + path.string());
    }
    const std::uint32_t n = read_be32(in);
    return read_payload(in, std::min<std::size_t>(n, max_count));
}

std::vector<ImageGrid> idx_to_grids(const IdxImages &images) {
    if (images.rows != images.cols) {
        throw DomainError("only square images are supported");
    }
    const std::size_t px = static_cast<std::size_t>(images.rows) * static_cast<std::size_t>(images.cols);
    std::vector<ImageGrid> out;
    out.reserve(images.count());
    for (std::size_t i = 0; i < images.count(); ++i) {
        std::vector<double> p(px);
        for (std::size_t k = 0; k < px; ++k) {
            p[k] = images.data[i * px + k] / 255.0;
        }
        out.push_back(ImageGrid::from_pixels(images.rows, std::move(p)));
    }
    return out;
}

std::filesystem::path locate_mnist_dir(const std::optional<std::string> &explicit_dir) {
    if (explicit_dir && !explicit_dir->empty()) {
        return *explicit_dir;
    }
    if (const char *env = std::getenv("MNIST_DIR"); env != nullptr && *env != '\0') {
        return env;
    }
    return LCUQML_DEFAULT_MNIST_DIR;
}

namespace {

std::filesystem::path first_existing(const std::filesystem::path &dir,
                                     std::initializer_list<const char *> names) {
    for (const char *n : names) {
        if (std::filesystem::exists(dir / n)) {
            return dir / n;
        }
    }
    throw ValidationError("no IDX file found in " + dir.string());
}

} // namespace

std::filesystem::path mnist_images_file(const std::filesystem::path &dir) {
    return first_existing(dir, {"images-idx3-ubyte", "train-images-idx3-ubyte", "t10k-images-idx3-ubyte"});
}

std::filesystem::path mnist_labels_file(const std::filesystem::path &dir) {
    return first_existing(dir, {"labels-idx1-ubyte", "train-labels-idx1-ubyte", "t10k-labels-idx1-ubyte"});
}

std::vector<ImageGrid> load_mnist_grids(const std::optional<std::string> &explicit_dir,
                                        std::size_t count) {
    const auto dir = locate_mnist_dir(explicit_dir);
    auto grids = idx_to_grids(load_idx_images(mnist_images_file(dir), count));
    if (grids.size() < count) {
        throw ValidationError("dataset holds fewer images than requested");
    }
    return grids;
}

} // namespace lcuqml
