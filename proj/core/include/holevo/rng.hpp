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

#ifndef HOLEVO_RNG_HPP
#define HOLEVO_RNG_HPP

#include <array>
#include <cstdint>

namespace holevo {

/// Philox4x32-10 counter-based generator.
///
/// The key is the 64-bit seed and the high half of the counter names an
/// independent stream, so stream s of seed k is the same sequence no matter
/// which thread draws it or in what order.
class Philox {
   public:
    Philox(std::uint64_t seed, std::uint64_t stream);

    std::uint32_t next_u32();
    /// Uniform on [0, 1) with 53 random bits.
    double uniform();

    /// Raw block function, exposed for known-answer tests.
    static std::array<std::uint32_t, 4> block(std::array<std::uint32_t, 4> ctr, std::array<std::uint32_t, 2> key);

   private:
    void refill();

    std::array<std::uint32_t, 2> key_;
    std::array<std::uint32_t, 4> ctr_;
    std::array<std::uint32_t, 4> buf_{};
    int used_ = 4;
};

}  // namespace holevo

#endif  // HOLEVO_RNG_HPP
