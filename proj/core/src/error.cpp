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

#include "holevo/error.hpp"

namespace holevo {

void throw_validation(const std::string& where, const std::string& what) {
    throw Error(ErrorKind::validation, where + ": " + what);
}

void throw_convergence(const std::string& where, const std::string& what) {
    throw Error(ErrorKind::convergence, where + ": " + what);
}

void throw_precision(const std::string& where, const std::string& what) {
    throw Error(ErrorKind::precision, where + ": " + what);
}

const char* kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::validation:
            return "validation";
        case ErrorKind::convergence:
            return "convergence";
        case ErrorKind::precision:
            return "precision";
    }
    return "unknown";
}

}  // namespace holevo
