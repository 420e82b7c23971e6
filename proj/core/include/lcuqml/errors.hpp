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
 * @file errors.hpp
 * Exception types shared by every module.
 */
#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace lcuqml {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Input object violates a structural invariant (unitarity, hermiticity, ...).
class ValidationError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Requested feature is outside the built-in coverage.
class UnsupportedError : public DomainError {
  public:
    using DomainError::DomainError;
};

/// A derived object (e.g. a completed unitary) failed its numerical checks.
class ConstructionError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Internal consistency check between two computation paths failed.
class NumericalError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/**
 * @brief Post-selection outcome has (numerically) zero probability.
 *
 * Carries the probability that was observed and, for multi-layer
 * pipelines, the zero-based index of the failing layer.
 */
class PostSelectionImpossible : public std::runtime_error {
  public:
    explicit PostSelectionImpossible(double probability,
                                     std::optional<std::size_t> layer = std::nullopt)
        : std::runtime_error(make_message(probability, layer)),
          probability_(probability), layer_(layer) {}

    [[nodiscard]] double probability() const noexcept { return probability_; }
    [[nodiscard]] std::optional<std::size_t> layer() const noexcept { return layer_; }

  private:
    static std::string make_message(double p, std::optional<std::size_t> layer) {
        std::string msg = "post-selection impossible (probability " + std::to_string(p) + ")";
        if (layer) {
            msg += " at layer " + std::to_string(*layer);
        }
        return msg;
    }
    double probability_;
    std::optional<std::size_t> layer_;
};

/// Probabilities below this value are treated as a failed post-selection.
inline constexpr double kPostSelectionThreshold = 1e-14;

} // namespace lcuqml
