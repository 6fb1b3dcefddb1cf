/**
 * Copyright 2026 The sloccsim Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#ifndef SLOCCSIM_ERRORS_HPP
#define SLOCCSIM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sloccsim {

struct ZeroNorm : std::runtime_error {
    explicit ZeroNorm(const std::string& what) : std::runtime_error(what) {}
};

struct DuplicateMode : std::runtime_error {
    explicit DuplicateMode(const std::string& what) : std::runtime_error(what) {}
};

struct UnknownMode : std::runtime_error {
    explicit UnknownMode(const std::string& what) : std::runtime_error(what) {}
};

struct EmptyPostselection : std::runtime_error {
    explicit EmptyPostselection(const std::string& what) : std::runtime_error(what) {}
};

struct UnsupportedSupport : std::runtime_error {
    explicit UnsupportedSupport(const std::string& what) : std::runtime_error(what) {}
};

struct IncompleteSettings : std::runtime_error {
    explicit IncompleteSettings(const std::string& what) : std::runtime_error(what) {}
};

struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Numeric contract broken (unitarity, density-operator validity, ...).
struct InvariantViolation : std::runtime_error {
    explicit InvariantViolation(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace sloccsim

#endif
