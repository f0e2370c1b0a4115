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

// Compiled with -mavx2; only reached after a runtime CPU check.

#include <immintrin.h>

#include "skewmrd/simd/fp_rowops.hpp"

namespace skewmrd::simd {

namespace {

// Barrett reduction of eight 32-bit lanes x < 2^32 by p < 2^16, with m = floor(2^32 / p).
inline __m256i reduce(__m256i x, __m256i m, __m256i p) {
    __m256i q_even = _mm256_srli_epi64(_mm256_mul_epu32(x, m), 32);
    __m256i q_odd = _mm256_mul_epu32(_mm256_srli_epi64(x, 32), m);
    __m256i q = _mm256_blend_epi32(q_even, q_odd, 0xAA);
    __m256i r = _mm256_sub_epi32(x, _mm256_mullo_epi32(q, p));
    return _mm256_min_epu32(r, _mm256_sub_epi32(r, p));
}

inline std::uint32_t barrett_m(std::uint32_t p) { return static_cast<std::uint32_t>((std::uint64_t{1} << 32) / p); }

void axpy_avx2(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t c, std::uint32_t p, std::size_t n) {
    const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
    const __m256i vm = _mm256_set1_epi32(static_cast<int>(barrett_m(p)));
    const __m256i vc = _mm256_set1_epi32(static_cast<int>(c));
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        __m256i x = _mm256_add_epi32(d, _mm256_mullo_epi32(s, vc));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), reduce(x, vm, vp));
    }
    for (; i < n; ++i) dst[i] = static_cast<std::uint32_t>((dst[i] + static_cast<std::uint64_t>(c) * src[i]) % p);
}

void scale_avx2(std::uint32_t* row, std::uint32_t c, std::uint32_t p, std::size_t n) {
    const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
    const __m256i vm = _mm256_set1_epi32(static_cast<int>(barrett_m(p)));
    const __m256i vc = _mm256_set1_epi32(static_cast<int>(c));
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256i r = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(row + i), reduce(_mm256_mullo_epi32(r, vc), vm, vp));
    }
    for (; i < n; ++i) row[i] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(c) * row[i] % p);
}

}  // namespace

const FpRowKernels& avx2_kernels_impl() noexcept {
    static const FpRowKernels k{"avx2", axpy_avx2, scale_avx2};
    return k;
}

}  // namespace skewmrd::simd
