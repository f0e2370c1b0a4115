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

#ifndef SKEWMRD_RANK_LAB_HPP
#define SKEWMRD_RANK_LAB_HPP

#include <optional>
#include <string>

#include "code_factory.hpp"

namespace skewmrd {

/// Rank over E_hhat by Gaussian elimination.
template <class B>
int column_rank(const Matrix<B>& M);

template <class B>
struct RankCertificate {
    SkewPoly<B> element;
    int gaussian_rank = 0;
    int gcrd_degree = 0;
    int formula_rank = 0;  ///< k - gcrd_degree / m
    bool agrees() const noexcept { return gaussian_rank == formula_rank; }
};

/// Both sides of colrank(M_a) = k - deg(gcrd(a, h)) / m.
template <class B>
RankCertificate<B> rank_via_gcrd(const CodeSpec<B>& spec, const VfBasis<B>& basis, const SkewPoly<B>& a);

enum class DistanceMode { Exhaustive, GcrdExhaustive };
const char* to_string(DistanceMode mode) noexcept;

template <class B>
struct DistanceReport {
    int min_distance = 0;
    std::uint64_t argmin = 0;  ///< enumeration index of a codeword of minimal rank
    bool is_mrd = false;       ///< min_distance == k - l + 1
    long long dim = 0;         ///< dim_{F'} of the code
    long long singleton_rhs = 0;  ///< k (k - d + 1) [B : F']
    std::uint64_t codewords = 0;
};

/// [B : F'] = s d m [F : F'].
template <class B>
long long b_over_fprime(const CodeSpec<B>& spec);

/// Minimum rank over all nonzero codewords. `jobs` > 1 splits the index
/// range across threads; the argmin is the smallest index attaining the minimum.
template <class B>
DistanceReport<B> min_distance(const CodeSpec<B>& spec, const VfBasis<B>& basis, const SpreadSet<B>& set,
                               DistanceMode mode, std::uint64_t budget = 1u << 20, int jobs = 1);

enum class MrdVerdict { Mrd, NotMrd, Unknown };
const char* to_string(MrdVerdict v) noexcept;

template <class B>
struct MrdCertificate {
    MrdVerdict verdict = MrdVerdict::Unknown;
    std::string by;              ///< nu-zero, norm, exhaustive or unknown
    int bound = 0;               ///< k - l + 1
    int distance = 0;            ///< attained distance when known, 0 otherwise
    std::optional<SkewPoly<B>> witness;  ///< element of A of too small rank
    std::string note;
};

struct MrdOptions {
    std::uint64_t budget = 1u << 20;
    int jobs = 1;
    /// Declares the hypothesis that every monic polynomial similar to f has
    /// coefficients in E (needed by the norm criterion with cyclic algebra coefficients).
    bool assume_similar_in_E = false;
};

template <class B>
MrdCertificate<B> certify_mrd(const CodeSpec<B>& spec, const MrdOptions& options = {});

}  // namespace skewmrd

#endif
