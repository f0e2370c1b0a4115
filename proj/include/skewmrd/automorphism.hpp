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

#ifndef SKEWMRD_AUTOMORPHISM_HPP
#define SKEWMRD_AUTOMORPHISM_HPP

#include <memory>
#include <vector>

#include "division_ring.hpp"
#include "field.hpp"

namespace skewmrd {

/*
 * A ring automorphism of a coefficient ring. Automorphisms fix the prime
 * field, so they are linear over F_p (or Q) on the flat coordinates; the
 * map is stored as the matrix of images of the flat basis, which makes
 * application a plain matrix-vector product. Powers are cached up to the
 * order when the order is finite.
 *
 * The optional inner data (n, u) records sigma^n(z) = u z u^{-1} with u
 * fixed by sigma; for fields u = 1 and n is the order.
 */
template <class B>
class Automorphism {
   public:
    using Element = Elem<B>;
    using Scalar = typename B::value_type;
    using RingPtr = std::shared_ptr<const DivisionRing<B>>;

    /// `images` lists the images of ring->generators(), in order.
    static Automorphism from_images(RingPtr ring, const std::vector<Element>& images);
    static Automorphism identity(RingPtr ring);
    /// x -> x^(p^exponent) on a finite field.
    static Automorphism frobenius(RingPtr ring, long long exponent);

    const DivisionRing<B>& ring() const noexcept { return *ring_; }
    const RingPtr& ring_ptr() const noexcept { return ring_; }

    Element apply(const Element& x, long long power = 1) const;
    /// Images of the generators under this map.
    std::vector<Element> images() const;
    /// Smallest j > 0 with phi^j = id, or 0 when none exists below the search limit.
    int order() const noexcept { return order_; }
    bool is_identity() const noexcept { return order_ == 1; }
    bool equals(const Automorphism& o) const;

    /// this after o: x -> this(o(x)).
    Automorphism compose(const Automorphism& o) const;
    Automorphism power(long long k) const;
    Automorphism inverse() const { return power(-1); }

    /// Dimension over the prime field of {x in sub : phi(x) = x}.
    int fixed_dimension_in(const Field<B>& sub) const;
    /// True when phi is the identity on the tower member `sub` of the coefficient field.
    bool fixes_pointwise(const Field<B>& sub) const;
    /// Smallest j > 0 with phi^j the identity on `sub` (0 when not found).
    int order_on(const Field<B>& sub) const;

    int order_mod_inner() const noexcept { return n_; }
    const Element& inner_unit() const noexcept { return u_; }
    /// Records sigma^n = (z -> u z u^{-1}); validated on the basis, and u must be fixed.
    Automorphism with_inner(int n, Element u) const;

   private:
    using Mat = std::vector<std::vector<Scalar>>;  // column j = image of basis j
    Automorphism() = default;
    static Automorphism from_matrix(RingPtr ring, Mat m);
    Element apply_matrix(const Mat& m, const Element& x) const;
    Mat mat_mul(const Mat& a, const Mat& b) const;

    RingPtr ring_;
    std::shared_ptr<const std::vector<Mat>> powers_;  // powers 0..order-1 (finite order)
    std::shared_ptr<const Mat> forward_, backward_;
    int order_ = 0;
    int n_ = 0;
    Element u_;
};

extern template class Automorphism<PrimeBase>;
extern template class Automorphism<RationalBase>;

}  // namespace skewmrd

#endif
