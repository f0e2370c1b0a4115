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

#ifndef SKEWMRD_FIELD_POLY_HPP
#define SKEWMRD_FIELD_POLY_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

#include "field.hpp"

namespace skewmrd {

enum class Tristate { Yes, No, Unknown };

const char* to_string(Tristate t) noexcept;

/*
 * Dense univariate polynomials over a field of the tower, constant term
 * first, always trimmed (the zero polynomial is the empty vector).
 */
namespace fpoly {

template <class B>
using Poly = std::vector<Elem<B>>;

template <class B>
void trim(const Field<B>& F, Poly<B>& p);
template <class B>
int degree(const Poly<B>& p) noexcept {
    return static_cast<int>(p.size()) - 1;
}
template <class B>
Poly<B> add(const Field<B>& F, const Poly<B>& a, const Poly<B>& b);
template <class B>
Poly<B> sub(const Field<B>& F, const Poly<B>& a, const Poly<B>& b);
template <class B>
Poly<B> mul(const Field<B>& F, const Poly<B>& a, const Poly<B>& b);
template <class B>
Poly<B> scale(const Field<B>& F, const Elem<B>& c, const Poly<B>& a);
template <class B>
void divmod(const Field<B>& F, const Poly<B>& a, const Poly<B>& b, Poly<B>& q, Poly<B>& r);
template <class B>
Poly<B> mod(const Field<B>& F, const Poly<B>& a, const Poly<B>& b);
template <class B>
Poly<B> monic(const Field<B>& F, const Poly<B>& a);
/// Monic gcd; gcd(0,0) = 0.
template <class B>
Poly<B> gcd(const Field<B>& F, Poly<B> a, Poly<B> b);
/// Returns g = gcd(a,b) and s with s*a = g mod b (b nonconstant).
template <class B>
Poly<B> inverse_mod(const Field<B>& F, const Poly<B>& a, const Poly<B>& m);
template <class B>
Poly<B> powmod(const Field<B>& F, const Poly<B>& base, const mpz_class& e, const Poly<B>& m);
template <class B>
Elem<B> eval(const Field<B>& F, const Poly<B>& p, const Elem<B>& x);
template <class B>
bool equal(const Field<B>& F, const Poly<B>& a, const Poly<B>& b);
template <class B>
Poly<B> from_ints(const Field<B>& F, const std::vector<long long>& coeffs);

/// Irreducibility over F: Rabin's test on finite fields, Kronecker's method
/// over Q (small degrees), and a primitive-element characteristic polynomial
/// test over number fields. Unknown when no procedure decides within budget.
template <class B>
Tristate is_irreducible(const Field<B>& F, const Poly<B>& p);

/// Kronecker factor search over Q; returns a proper factor when one exists.
/// Unknown when the divisor enumeration exceeds the budget.
Tristate rational_irreducible(const std::vector<mpq_class>& p, std::vector<mpq_class>* factor = nullptr,
                              long long budget = 2'000'000);

template <class B>
std::string format(const Field<B>& F, const Poly<B>& p);

}  // namespace fpoly
}  // namespace skewmrd

#endif
