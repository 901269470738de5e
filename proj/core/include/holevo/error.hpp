// Copyright 2026 The holevo Authors
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

#ifndef HOLEVO_ERROR_HPP
#define HOLEVO_ERROR_HPP

#include <stdexcept>
#include <string>

namespace holevo {

/// Broad failure classes. The command-line tool maps each to an exit code.
enum class ErrorKind {
    validation,   ///< An input violates a documented precondition.
    convergence,  ///< An iterative solver stopped before meeting its tolerances.
    precision,    ///< A computation lost too much floating-point accuracy.
};

/// Single exception type thrown by the library.
///
/// The message always starts with the name of the operation that raised it,
/// followed by the violated condition, e.g. "anticomm_solve: d is not traceless".
class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

   private:
    ErrorKind kind_;
};

[[noreturn]] void throw_validation(const std::string& where, const std::string& what);
[[noreturn]] void throw_convergence(const std::string& where, const std::string& what);
[[noreturn]] void throw_precision(const std::string& where, const std::string& what);

const char* kind_name(ErrorKind kind);

}  // namespace holevo

#endif  // HOLEVO_ERROR_HPP
