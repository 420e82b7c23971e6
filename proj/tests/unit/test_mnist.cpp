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
#include <catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "lcuqml/errors.hpp"
#include "lcuqml/mnist.hpp"

using namespace lcuqml;
namespace fs = std::filesystem;

namespace {

void put_u32(std::ofstream &f, std::uint32_t v) {
    const char b[4] = {static_cast<char>(v >> 24), static_cast<char>(v >> 16), static_cast<char>(v >> 8),
                       static_cast<char>(v)};
    f.write(b, 4);
}

fs::path write_idx(const std::string &name, std::uint32_t magic, std::vector<std::uint32_t> dims,
                   const std::vector<std::uint8_t> &bytes) {
    const auto path = fs::temp_directory_path() / name;
    std::ofstream f(path, std::ios::binary);
    put_u32(f, magic);
    for (auto d : dims) {
        put_u32(f, d);
    }
    f.write(reinterpret_cast<const char *>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    return path;
}

} // namespace

TEST_CASE("IDX images round trip") {
    std::vector<std::uint8_t> px(3 * 2 * 2);
    for (std::size_t i = 0; i < px.size(); ++i) {
        px[i] = static_cast<std::uint8_t>(i * 20);
    }
    const auto p = write_idx("lcuqml_img.idx", 0x803, {3, 2, 2}, px);
    const auto imgs = load_idx_images(p);
    CHECK(imgs.count() == 3);
    CHECK(imgs.rows == 2);
    CHECK(imgs.data == px);
    CHECK(load_idx_images(p, 2).count() == 2);
    const auto grids = idx_to_grids(imgs);
    REQUIRE(grids.size() == 3);
    CHECK(grids[1].n_side == 2);
    CHECK(grids[1].pixels[0] == 80.0 / 255.0);
    fs::remove(p);
}

TEST_CASE("IDX loader rejects malformed files") {
    const auto wrong = write_idx("lcuqml_bad.idx", 0x801, {3, 2, 2}, std::vector<std::uint8_t>(12));
    CHECK_THROWS_AS(load_idx_images(wrong), ValidationError);
    const auto short_file = write_idx("lcuqml_short.idx", 0x803, {3, 2, 2}, std::vector<std::uint8_t>(5));
    CHECK_THROWS_AS(load_idx_images(short_file), ValidationError);
    CHECK_THROWS(load_idx_images(fs::temp_directory_path() / "lcuqml_missing.idx"));
    fs::remove(wrong);
    fs::remove(short_file);
}

TEST_CASE("IDX labels") {
    const auto p = write_idx("lcuqml_lab.idx", 0x801, {4}, {7, 2, 1, 0});
    CHECK(load_idx_labels(p) == std::vector<std::uint8_t>{7, 2, 1, 0});
    CHECK_THROWS_AS(load_idx_labels(write_idx("lcuqml_lab2.idx", 0x803, {4}, {7, 2, 1, 0})), ValidationError);
    fs::remove(p);
    fs::remove(fs::temp_directory_path() / "lcuqml_lab2.idx");
}

TEST_CASE("bundled MNIST subset") {
    const std::string dir = std::string(LCUQML_TEST_DATA_DIR) + "/mnist";
    const auto grids = load_mnist_grids(dir, 100);
    REQUIRE(grids.size() == 100);
    CHECK(grids[0].n_side == 28);
    for (const auto &g : grids) {
        CHECK(g.norm_constant() > 0.0);
        for (double v : g.pixels) {
            CHECK(v >= 0.0);
            CHECK(v <= 1.0);
        }
    }
    const auto labels = load_idx_labels(mnist_labels_file(dir));
    CHECK(labels.size() >= 100);
    CHECK(locate_mnist_dir(dir) == fs::path(dir));
}
