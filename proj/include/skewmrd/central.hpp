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

#ifndef SKEWMRD_CENTRAL_HPP
#define SKEWMRD_CENTRAL_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "cyclic_algebra.hpp"
#include "field_poly.hpp"
#include "skew_poly.hpp"

namespace skewmrd {

/*
 * A skew polynomial ring D[t; sigma] together with the fields attached to
 * its center: C = Z(D), F = C ∩ Fix(sigma), the coefficient field (K for a
 * field D, the maximal subfield E of a cyclic algebra) and d = sqrt([D:C]).
 * All of them are tower members of the coefficient field, so F acts on the
 * flat coordinates of D block-wise.
 */
template <class B>
class RingContext {
   public:
    using Element = Elem<B>;
    using Poly = SkewPoly<B>;

    explicit RingContext(SkewRing<B> ring);

    const SkewRing<B>& ring() const noexcept { return ring_; }
    const DivisionRing<B>& D() const noexcept { return ring_.coeffs(); }
    const Field<B>& C() const noexcept { return D().center(); }
    /// K in the field case, E in the cyclic algebra case.
    const Field<B>& E() const noexcept { return D().coefficient_field(); }
    const Field<B>& F() const noexcept { return *F_; }
    FieldPtr<B> F_ptr() const;
    const CyclicAlgebra<B>* algebra() const noexcept { return algebra_; }
    int d() const noexcept { return d_; }
    int n() const noexcept { return ring_.n(); }
    bool is_field_case() const noexcept { return algebra_ == nullptr; }

    /// Coordinates of x in D over a tower member `sub` of E.
    std::vector<Element> coords_over(const Field<B>& sub, const Element& x) const;
    Element from_coords(const Field<B>& sub, const std::vector<Element>& c) const;
    /// Element of a tower member of E as an element of D.
    Element lift(const Field<B>& sub, const Element& c) const;
    std::optional<Element> restrict_to(const Field<B>& sub, const Element& x) const;
    /// c * x for c in a central subfield (or any subfield of E when D is a field).
    Element scale_sub(const Field<B>& sub, const Element& c, const Element& x) const;
    /// True when every coefficient of p lies in E.
    bool in_E(const Poly& p) const;

    /// Flattened F-coordinates of a polynomial of degree < len.
    std::vector<Element> poly_coords(const Poly& p, int len) const;
    Poly poly_from_coords(const std::vector<Element>& c, int len) const;
    /// g(u^{-1} t^n) for g with coefficients in F.
    Poly central_eval(const fpoly::Poly<B>& g) const;

   private:
    SkewRing<B> ring_;
    const Field<B>* F_;
    const CyclicAlgebra<B>* algebra_;
    int d_;
};

template <class B>
struct MclmReport {
    SkewPoly<B> f;
    SkewPoly<B> h;           ///< h = hhat(u^{-1} t^n)
    fpoly::Poly<B> hhat;     ///< monic over F, constant term first
    int m = 0;               ///< deg f
    int k = 0;               ///< deg h / m
    int s = 0;               ///< d m / deg hhat
    bool full_degree = false;  ///< deg h = d m n
    int deg_hhat() const noexcept { return static_cast<int>(hhat.size()) - 1; }
    int deg_h() const noexcept { return static_cast<int>(h.size()) - 1; }
};

/// Minimal central left multiple via the Krylov sequence X^i mod_r f, X = u^{-1} t^n.
template <class B>
MclmReport<B> mclm(const RingContext<B>& ctx, const SkewPoly<B>& f);

/// E_hhat = F[x]/(hhat) as an extension of F.
template <class B>
FieldPtr<B> ehat_field(const RingContext<B>& ctx, const MclmReport<B>& report,
                       ModulusCheck check = ModulusCheck::Verify);

enum class Irreducibility { Irreducible, Reducible, Unknown };
const char* to_string(Irreducibility v) noexcept;

template <class B>
struct IrreducibilityVerdict {
    Irreducibility verdict;
    std::optional<SkewPoly<B>> witness;  ///< proper monic right divisor when reducible
    const char* by;                      ///< degree, hhat, divisor-scan, budget or undecided
};

template <class B>
IrreducibilityVerdict<B> is_irreducible(const RingContext<B>& ctx, const SkewPoly<B>& f, const MclmReport<B>& report,
                                        std::uint64_t budget = 1u << 20);

/// First monic right divisor of f of the given degree in enumeration order
/// (finite coefficient rings only); BudgetExceeded when the scan is too large.
template <class B>
std::optional<SkewPoly<B>> find_right_divisor(const RingContext<B>& ctx, const SkewPoly<B>& f, int degree,
                                              std::uint64_t budget = 1u << 20);

/// Every monic right divisor of g of the given degree (finite coefficient rings only).
template <class B>
std::vector<SkewPoly<B>> all_right_divisors(const RingContext<B>& ctx, const SkewPoly<B>& g, int degree,
                                            std::uint64_t budget = 1u << 20);

/// Reduced norm N(f) in F[x]: determinant of left multiplication by f on the
/// right E[x]-module with basis {e^i t^j : i < d, j < n}.
template <class B>
fpoly::Poly<B> reduced_norm(const RingContext<B>& ctx, const SkewPoly<B>& f);

/// The constant-term identity relating a_0 and hhat(0) for full-degree f.
template <class B>
bool norm_constant_check(const RingContext<B>& ctx, const MclmReport<B>& report);

enum class Similarity { Similar, NotSimilar, Unknown };
const char* to_string(Similarity v) noexcept;

template <class B>
Similarity are_similar(const RingContext<B>& ctx, const SkewPoly<B>& f, const SkewPoly<B>& g,
                       std::uint64_t budget = 1u << 20);

}  // namespace skewmrd

#endif
