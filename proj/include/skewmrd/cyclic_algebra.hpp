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

#ifndef SKEWMRD_CYCLIC_ALGEBRA_HPP
#define SKEWMRD_CYCLIC_ALGEBRA_HPP

#include <memory>
#include <optional>

#include "automorphism.hpp"
#include "field.hpp"

namespace skewmrd {

/*
 * The cyclic algebra (E/C, gamma, a): elements sum_{i<d} x_i e^i with x_i in E,
 * e z = gamma(z) e and e^d = a in C. Flat layout is d consecutive E-blocks.
 * Being a division algebra is a declared hypothesis, not verified here;
 * inv() fails with DivisionByZero on a zero divisor.
 */
template <class B>
class CyclicAlgebra final : public DivisionRing<B> {
   public:
    using typename DivisionRing<B>::Element;
    using Ptr = std::shared_ptr<const CyclicAlgebra>;

    /// `gamma_images` are the images of E's generators; C must be a tower member of E.
    static Ptr make(FieldPtr<B> E, FieldPtr<B> C, const std::vector<Element>& gamma_images, Element a,
                    std::string generator_name = "e");

    bool is_commutative() const noexcept override { return false; }
    int d() const noexcept { return d_; }
    const Field<B>& E() const noexcept { return *E_; }
    const FieldPtr<B>& E_ptr() const noexcept { return E_; }
    const Field<B>& C() const noexcept { return *C_; }
    const Element& a() const noexcept { return a_; }
    const Automorphism<B>& gamma() const noexcept { return *gamma_; }
    const std::string& generator_name() const noexcept { return gen_name_; }

    Element mul(const Element& x, const Element& y) const override;
    Element inv(const Element& x) const override;

    Element embed_E(const Element& z) const;
    std::optional<Element> restrict_E(const Element& x) const;
    /// E-coefficient of e^i.
    Element component(const Element& x, int i) const;
    Element from_components(const std::vector<Element>& parts) const;
    Element gen_e() const;

    std::vector<std::string> generator_names() const override;
    std::vector<Element> generators() const override;
    std::vector<int> monomial(int flat_index) const override;
    const Field<B>& center() const noexcept override { return *C_; }
    const Field<B>& coefficient_field() const noexcept override { return *E_; }

   private:
    CyclicAlgebra(FieldPtr<B> E, FieldPtr<B> C, int d, std::string name);

    FieldPtr<B> E_, C_;
    int d_;
    std::shared_ptr<const Automorphism<B>> gamma_;
    Element a_;
    std::string gen_name_;
};

extern template class CyclicAlgebra<PrimeBase>;
extern template class CyclicAlgebra<RationalBase>;

}  // namespace skewmrd

#endif
