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

#ifndef SKEWMRD_SKEW_POLY_HPP
#define SKEWMRD_SKEW_POLY_HPP

#include <climits>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "automorphism.hpp"
#include "division_ring.hpp"

namespace skewmrd {

/// Coefficients over the ring, constant term first, trimmed.
template <class B>
using SkewPoly = std::vector<Elem<B>>;

/// deg(0).
inline constexpr int kMinusInfinity = INT_MIN;

/*
 * The ring R = D[t; sigma, delta] with t a = sigma(a) t + delta(a).
 * delta is optional and only supported by mul and the right division; every
 * structural algorithm downstream requires delta = 0.
 */
template <class B>
class SkewRing {
   public:
    using Element = Elem<B>;
    using Poly = SkewPoly<B>;
    using RingPtr = std::shared_ptr<const DivisionRing<B>>;

    explicit SkewRing(Automorphism<B> sigma);
    /// delta given by its values on the generators of the coefficient ring.
    SkewRing(Automorphism<B> sigma, const std::vector<Element>& delta_images);

    const DivisionRing<B>& coeffs() const noexcept { return sigma_.ring(); }
    const RingPtr& coeffs_ptr() const noexcept { return sigma_.ring_ptr(); }
    const Automorphism<B>& sigma() const noexcept { return sigma_; }
    bool has_delta() const noexcept { return delta_ != nullptr; }
    void require_no_delta(const char* what) const;
    /// Order of sigma modulo inner automorphisms.
    int n() const noexcept { return sigma_.order_mod_inner(); }
    const Element& u() const noexcept { return sigma_.inner_unit(); }

    Element apply_sigma(const Element& x, long long power = 1) const { return sigma_.apply(x, power); }
    Element apply_delta(const Element& x) const;

    // construction
    Poly zero() const { return {}; }
    Poly one() const { return {coeffs().one()}; }
    Poly constant(const Element& c) const;
    Poly t_power(int k) const;
    /// c t^k.
    Poly monomial(const Element& c, int k) const;
    /// (u^{-1} t^n)^k, the k-th power of the central variable.
    Poly central_power(int k) const;
    void trim(Poly& p) const;
    Poly trimmed(Poly p) const {
        trim(p);
        return p;
    }

    // queries
    static int degree(const Poly& p) noexcept { return p.empty() ? kMinusInfinity : static_cast<int>(p.size()) - 1; }
    bool is_zero(const Poly& p) const { return p.empty(); }
    bool is_monic(const Poly& p) const { return !p.empty() && coeffs().is_one(p.back()); }
    bool equal(const Poly& a, const Poly& b) const;
    const Element& lead(const Poly& p) const;
    Element coeff(const Poly& p, int i) const;

    // arithmetic
    Poly add(const Poly& a, const Poly& b) const;
    Poly sub(const Poly& a, const Poly& b) const;
    Poly neg(const Poly& a) const;
    Poly mul(const Poly& a, const Poly& b) const;
    /// c * p (coefficients multiplied on the left).
    Poly scale_left(const Element& c, const Poly& p) const;
    /// Monic normalization by the inverse leading coefficient on the left.
    Poly monic(const Poly& p) const;

    void right_divmod(const Poly& g, const Poly& f, Poly& q, Poly& r) const;
    void left_divmod(const Poly& g, const Poly& f, Poly& q, Poly& r) const;
    Poly mod_r(const Poly& g, const Poly& f) const;
    Poly mod_l(const Poly& g, const Poly& f) const;
    bool right_divides(const Poly& f, const Poly& g) const { return is_zero(mod_r(g, f)); }
    bool left_divides(const Poly& f, const Poly& g) const { return is_zero(mod_l(g, f)); }

    Poly gcrd(const Poly& a, const Poly& b) const;
    Poly lclm(const Poly& a, const Poly& b) const;

    /// Comma separated coefficient tokens, constant term first; "0" for the zero polynomial.
    std::string format(const Poly& p) const;
    Poly parse(std::string_view text) const;

   private:
    Poly mul_t_left(const Poly& p) const;  // t * p

    Automorphism<B> sigma_;
    std::shared_ptr<const std::vector<std::vector<typename B::value_type>>> delta_;  // columns: delta(basis_j)
};

extern template class SkewRing<PrimeBase>;
extern template class SkewRing<RationalBase>;

}  // namespace skewmrd

#endif
