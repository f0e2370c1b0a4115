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

#ifndef SKEWMRD_SIMD_FP_ROWOPS_HPP
#define SKEWMRD_SIMD_FP_ROWOPS_HPP

#include <cstddef>
#include <cstdint>

namespace skewmrd::simd {

/*
 * Row kernels for elimination over a prime field F_p with p < 2^16.
 * Entries are reduced residues in [0, p).
 *
 *   axpy:  dst[i] = (dst[i] + c * src[i]) mod p
 *   scale: row[i] = (c * row[i]) mod p
 */
struct FpRowKernels {
    const char* name;
    void (*axpy)(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t c, std::uint32_t p, std::size_t n);
    void (*scale)(std::uint32_t* row, std::uint32_t c, std::uint32_t p, std::size_t n);
};

constexpr std::uint32_t kMaxKernelPrime = 1u << 16;

const FpRowKernels& scalar_kernels() noexcept;
/// nullptr when the library was built without AVX2 support.
const FpRowKernels* avx2_kernels() noexcept;
bool cpu_has_avx2() noexcept;
/// Selected once per process: AVX2 when compiled in and supported by the CPU,
/// unless SKEWMRD_SIMD=scalar is set in the environment.
const FpRowKernels& active_kernels() noexcept;

}  // namespace skewmrd::simd

#endif
