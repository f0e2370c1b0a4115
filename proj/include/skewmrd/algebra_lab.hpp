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

#ifndef SKEWMRD_ALGEBRA_LAB_HPP
#define SKEWMRD_ALGEBRA_LAB_HPP

#include <optional>
#include <string>
#include <utility>

#include "code_factory.hpp"

namespace skewmrd {

/// (b + nu rho(b_0) t^m) c mod_r f on R_m (requires l = 1).
template <class B>
SkewPoly<B> circ(const CodeSpec<B>& spec, const SkewPoly<B>& b, const SkewPoly<B>& c);

/// F'-coordinates of an element of R_m and back.
template <class B>
std::vector<Elem<B>> algebra_coords(const CodeSpec<B>& spec, const SkewPoly<B>& p);
template <class B>
SkewPoly<B> algebra_element(const CodeSpec<B>& spec, const std::vector<Elem<B>>& c);

/*
 * A finite-dimensional algebra over F' given by structure constants:
 * table[p][q] holds the coordinates of e_p e_q.
 */
template <class B>
class StructureAlgebra {
   public:
    using Vec = std::vector<Elem<B>>;

    StructureAlgebra(const Field<B>& Fp, std::vector<std::vector<Vec>> table);
    static StructureAlgebra from_spec(const CodeSpec<B>& spec);

    const Field<B>& field() const noexcept { return *Fp_; }
    int dim() const noexcept { return static_cast<int>(table_.size()); }
    Vec mul(const Vec& x, const Vec& y) const;
    Matrix<B> left(const Vec& x) const;
    Matrix<B> right(const Vec& x) const;
    /// Product of the opposite algebra.
    StructureAlgebra opposite() const;
    /// Kaplansky's unital isotope x * y = R_e^{-1}(x) L_e^{-1}(y); unit e e.
    /// Empty when L_e or R_e is singular.
    std::optional<StructureAlgebra> unital_isotope(const Vec& e) const;
    std::optional<Vec> unit() const;

   private:
    const Field<B>* Fp_;
    std::vector<std::vector<Vec>> table_;
};

template <class B>
struct NucleiReport {
    using Vec = std::vector<Elem<B>>;
    std::vector<Vec> left, middle, right, center;
    bool isotope = false;  ///< computed on the unital isotope at e = 1
    int dim_left() const noexcept { return static_cast<int>(left.size()); }
    int dim_middle() const noexcept { return static_cast<int>(middle.size()); }
    int dim_right() const noexcept { return static_cast<int>(right.size()); }
    int dim_center() const noexcept { return static_cast<int>(center.size()); }
};

/// Nuclei and center from the associator and commutator linear systems.
template <class B>
NucleiReport<B> nuclei(const StructureAlgebra<B>& A);

/*
 * Nuclei of (R_m, ∘). For nu != 0 the product has no unit and its associator
 * nuclei collapse to 0, so they are taken on the unital isotope at e = 1,
 * which has the same nuclei up to isomorphism when the algebra is division.
 * PreconditionFailed when L_1 or R_1 is singular.
 */
template <class B>
NucleiReport<B> nuclei(const CodeSpec<B>& spec);

template <class B>
struct IdealiserReport {
    std::vector<Matrix<B>> left, right, centraliser, centre;  ///< centre = I_l ∩ C
};

/// I_l, I_r, centraliser and I_l ∩ centraliser of the F'-span of `gens` inside End_{F'}.
template <class B>
IdealiserReport<B> idealisers(const Field<B>& Fp, const std::vector<Matrix<B>>& gens);

/// Spread set matrices over E_hhat rewritten as F'-linear maps of E_hhat^k.
template <class B>
std::vector<Matrix<B>> flatten_spread(const CodeSpec<B>& spec, const SpreadSet<B>& set);

/// Left multiplications of the algebra on itself (one per basis element).
template <class B>
std::vector<Matrix<B>> left_spread(const StructureAlgebra<B>& A);

enum class DivisionVerdict { Division, NotDivision, Unknown };
const char* to_string(DivisionVerdict v) noexcept;

template <class B>
struct DivisionCertificate {
    DivisionVerdict verdict = DivisionVerdict::Unknown;
    std::string by;  ///< petit, norm, nu-outside-E, pair-scan, rank-scan or unknown
    std::optional<std::pair<SkewPoly<B>, SkewPoly<B>>> zero_divisors;
    std::string note;
};

struct DivisionOptions {
    std::uint64_t budget = 1u << 20;
    bool assume_similar_in_E = false;
    /// Criteria first (default) or go straight to the finite scans.
    bool criteria = true;
};

template <class B>
DivisionCertificate<B> check_division(const CodeSpec<B>& spec, const DivisionOptions& options = {});

/// Exhaustive search for b, c != 0 with b∘c = 0 over all pairs (finite F').
template <class B>
std::optional<std::pair<SkewPoly<B>, SkewPoly<B>>> zero_divisor_pair_scan(const CodeSpec<B>& spec,
                                                                        std::uint64_t budget = 1u << 24);

/// Exhaustive check that every nonzero L_b is invertible; returns a singular b and a kernel vector.
template <class B>
std::optional<std::pair<SkewPoly<B>, SkewPoly<B>>> singular_left_scan(const CodeSpec<B>& spec,
                                                                    std::uint64_t budget = 1u << 20);

/// Rf is a two-sided ideal.
template <class B>
bool is_right_invariant(const RingContext<B>& ctx, const SkewPoly<B>& f);

template <class B>
struct DivisorNormLaw {
    std::vector<SkewPoly<B>> divisors;  ///< monic right divisors of h of degree l m
    bool holds = true;                  ///< N(g_0) = N(a_0)^l for all of them
};

/// Scans the monic degree-lm right divisors of h (finite coefficients) and checks N_{K/F}(g_0) = N_{K/F}(a_0)^l.
template <class B>
DivisorNormLaw<B> divisor_norm_law(const RingContext<B>& ctx, const MclmReport<B>& report, int l,
                                   std::uint64_t budget = 1u << 22);

}  // namespace skewmrd

#endif
