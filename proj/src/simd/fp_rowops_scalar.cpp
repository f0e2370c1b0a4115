/*
   Copyright 2026 The skewmrd Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "skewmrd/simd/fp_rowops.hpp"

namespace skewmrd::simd {

namespace {

void axpy_scalar(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t c, std::uint32_t p, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        dst[i] = static_cast<std::uint32_t>((dst[i] + static_cast<std::uint64_t>(c) * src[i]) % p);
}

void scale_scalar(std::uint32_t* row, std::uint32_t c, std::uint32_t p, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) row[i] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(c) * row[i] % p);
}

}  // namespace

const FpRowKernels& scalar_kernels() noexcept {
    static const FpRowKernels k{"scalar", axpy_scalar, scale_scalar};
    return k;
}

}  // namespace skewmrd::simd
