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

#include <cstdlib>
#include <cstring>

#include "skewmrd/simd/fp_rowops.hpp"

namespace skewmrd::simd {

#ifdef SKEWMRD_HAVE_AVX2
const FpRowKernels& avx2_kernels_impl() noexcept;
#endif

const FpRowKernels* avx2_kernels() noexcept {
#ifdef SKEWMRD_HAVE_AVX2
    return &avx2_kernels_impl();
#else
    return nullptr;
#endif
}

bool cpu_has_avx2() noexcept {
#if defined(__x86_64__) || defined(__i386__)
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

const FpRowKernels& active_kernels() noexcept {
    static const FpRowKernels* chosen = [] {
        const char* env = std::getenv("SKEWMRD_SIMD");
        bool force_scalar = env && std::strcmp(env, "scalar") == 0;
        const FpRowKernels* v = avx2_kernels();
        return (!force_scalar && v && cpu_has_avx2()) ? v : &scalar_kernels();
    }();
    return *chosen;
}

}  // namespace skewmrd::simd
