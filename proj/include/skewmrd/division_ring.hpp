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

#ifndef SKEWMRD_DIVISION_RING_HPP
#define SKEWMRD_DIVISION_RING_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "base_domain.hpp"
#include "errors.hpp"

namespace skewmrd {

template <class B>
class Field;

/*
 * Common interface of the coefficient rings: prime fields, tower extensions
 * and cyclic algebras. Every element is a flat coordinate vector over the
 * base domain (F_p or Q) in the nested power basis, so addition and scalar
 * multiplication are coordinate-wise and only mul/inv are ring specific.
 */
template <class B>
class DivisionRing {
   public:
    using Domain = B;
    using Scalar = typename B::value_type;
    using Element = Elem<B>;

    virtual ~DivisionRing() = default;

    const B& domain() const noexcept { return domain_; }
    const std::string& name() const noexcept { return name_; }
    /// Dimension over the prime field (or over Q).
    int dimension() const noexcept { return dim_; }
    virtual bool is_commutative() const noexcept = 0;

    bool is_finite() const noexcept { return domain_.is_finite(); }
    /// Number of elements, or 0 when infinite or larger than 2^62.
    std::uint64_t size() const noexcept;

    Element zero() const { return Element(dim_, domain_.zero()); }
    Element one() const;
    Element from_int(long long v) const;
    Element from_scalar(const Scalar& s) const;
    /// Flat unit vector; basis(0) is the identity.
    Element basis(int i) const;

    Element add(const Element& a, const Element& b) const;
    Element sub(const Element& a, const Element& b) const;
    Element neg(const Element& a) const;
    Element scale(const Scalar& s, const Element& a) const;
    void add_into(Element& acc, const Element& b) const;
    virtual Element mul(const Element& a, const Element& b) const = 0;
    virtual Element inv(const Element& a) const = 0;
    Element div_right(const Element& a, const Element& b) const { return mul(a, inv(b)); }

    bool is_zero(const Element& a) const;
    bool is_one(const Element& a) const;
    bool equal(const Element& a, const Element& b) const;
    void check(const Element& a) const {
        require(static_cast<int>(a.size()) == dim_, ErrorKind::ContextMismatch,
                "element does not belong to " + name_);
    }

    /// Little-endian base-p index of a finite ring element.
    std::uint64_t index_of(const Element& a) const;
    Element from_index(std::uint64_t index) const;

    /// Generator names bottom-up, one per tower level (and "e" style names for algebras).
    virtual std::vector<std::string> generator_names() const = 0;
    /// Generators as elements of this ring, in generator_names() order.
    virtual std::vector<Element> generators() const = 0;
    /// Maps a flat basis index to its exponent vector (same order as generator_names()).
    virtual std::vector<int> monomial(int flat_index) const = 0;

    /// Finite rings use the integer index; infinite rings a monomial expression.
    std::string format(const Element& a) const;
    Element parse(std::string_view text) const;

    /// Center of the ring (the ring itself for fields).
    virtual const Field<B>& center() const noexcept = 0;
    /// Field whose flat layout the coordinates of this ring are built from
    /// (the ring itself for fields, the maximal subfield E for cyclic algebras).
    /// Any subfield of it acts block-wise on the flat coordinates.
    virtual const Field<B>& coefficient_field() const noexcept = 0;

   protected:
    DivisionRing(B domain, int dim, std::string name) : domain_(std::move(domain)), dim_(dim), name_(std::move(name)) {}

   private:
    B domain_;
    int dim_;
    std::string name_;
};

}  // namespace skewmrd

#endif
