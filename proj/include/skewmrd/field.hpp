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

#ifndef SKEWMRD_FIELD_HPP
#define SKEWMRD_FIELD_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "division_ring.hpp"

namespace skewmrd {

/// How the irreducibility of an extension modulus is established.
enum class ModulusCheck {
    Verify,  ///< must be proven irreducible, otherwise construction fails
    Assume,  ///< declared hypothesis; only verified where a decision procedure exists
};

/*
 * A field in an explicit tower F_p (or Q) = L_0 < L_1 < ... < L_r = this,
 * each step L_{i+1} = L_i[y_i]/(g_i). Elements of L_{i+1} are blocks of
 * L_i-elements (coefficients of y_i^0..y_i^{deg-1}), so every member of the
 * tower sits in this field as the coordinate prefix of its own dimension.
 */
template <class B>
class Field final : public DivisionRing<B>, public std::enable_shared_from_this<Field<B>> {
   public:
    using typename DivisionRing<B>::Element;
    using typename DivisionRing<B>::Scalar;
    using Ptr = std::shared_ptr<const Field>;

    static Ptr prime(B domain, std::string name);
    /// `modulus` holds base-field elements, constant term first, and must be monic.
    static Ptr extension(Ptr base, std::vector<Element> modulus, std::string generator_name,
                         ModulusCheck check = ModulusCheck::Verify);

    bool is_commutative() const noexcept override { return true; }
    bool is_prime() const noexcept { return base_ == nullptr; }
    const Ptr& base() const noexcept { return base_; }
    int degree() const noexcept { return static_cast<int>(modulus_.empty() ? 1 : modulus_.size() - 1); }
    const std::vector<Element>& modulus() const noexcept { return modulus_; }
    const std::string& generator_name() const noexcept { return gen_name_; }
    /// Tower members from the prime field up to this field.
    std::vector<const Field*> chain() const;
    /// True when `sub` is this field or one of the tower members below it.
    bool contains(const Field& sub) const noexcept;
    /// Degree [this : sub]; throws NotInTower when sub is not below this field.
    int index_over(const Field& sub) const;

    Element mul(const Element& a, const Element& b) const override;
    Element inv(const Element& a) const override;
    Element pow(const Element& a, const mpz_class& e) const;
    Element pow(const Element& a, long long e) const;
    /// The tower generator y of the top step (1 for prime fields).
    Element generator() const;

    /// Embeds an element of a tower member below this field.
    Element embed(const Field& sub, const Element& x) const;
    /// Returns x as an element of `sub` when it lies there.
    std::optional<Element> restrict_to(const Field& sub, const Element& x) const;
    /// Coordinates of x over the subfield `sub`: index_over(sub) elements of sub.
    std::vector<Element> coordinates_over(const Field& sub, const Element& x) const;
    Element from_coordinates(const Field& sub, const std::vector<Element>& coords) const;
    /// Multiplies block-wise by a scalar of a subfield.
    Element scale_by(const Field& sub, const Element& c, const Element& x) const;

    std::vector<std::string> generator_names() const override;
    std::vector<Element> generators() const override;
    std::vector<int> monomial(int flat_index) const override;
    const Field<B>& center() const noexcept override { return *this; }
    const Field<B>& coefficient_field() const noexcept override { return *this; }

    bool same_as(const Field& other) const noexcept { return this == &other; }

   private:
    Field(B domain, int dim, std::string name) : DivisionRing<B>(std::move(domain), dim, std::move(name)) {}

    Ptr base_;
    std::vector<Element> modulus_;
    std::string gen_name_;
};

template <class B>
using FieldPtr = typename Field<B>::Ptr;

extern template class Field<PrimeBase>;
extern template class Field<RationalBase>;

}  // namespace skewmrd

#endif
