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

#include "skewmrd/tower.hpp"

#include "skewmrd/linalg.hpp"

namespace skewmrd {

template <class B>
Elem<B> relative_norm(const Field<B>& from, const Field<B>& to, const Elem<B>& x) {
    int r = from.index_over(to);
    from.check(x);
    Matrix<B> M(to, r, r);
    for (int j = 0; j < r; ++j) {
        auto col = from.coordinates_over(to, from.mul(x, from.basis(j * to.dimension())));
        for (int i = 0; i < r; ++i) M(i, j) = col[i];
    }
    return determinant(M);
}

template <class B>
FixedField<B> fix_field(const Automorphism<B>& phi, const Field<B>& ambient) {
    int dim = phi.fixed_dimension_in(ambient);
    for (const auto* f : ambient.chain())
        if (f->dimension() == dim && phi.fixes_pointwise(*f)) return {f, ambient.dimension() / dim};
    fail(ErrorKind::NotInTower, "the fixed field of the automorphism in " + ambient.name() + " (dimension " +
                                    std::to_string(dim) + ") is not a registered tower member");
}

template <class B>
FixedField<B> fix_field(const Automorphism<B>& phi) {
    const auto* F = dynamic_cast<const Field<B>*>(&phi.ring());
    require(F != nullptr, ErrorKind::PreconditionFailed, "fix_field needs an automorphism of a field");
    return fix_field(phi, *F);
}

template Elem<PrimeBase> relative_norm(const Field<PrimeBase>&, const Field<PrimeBase>&, const Elem<PrimeBase>&);
template Elem<RationalBase> relative_norm(const Field<RationalBase>&, const Field<RationalBase>&,
                                          const Elem<RationalBase>&);
template FixedField<PrimeBase> fix_field(const Automorphism<PrimeBase>&, const Field<PrimeBase>&);
template FixedField<RationalBase> fix_field(const Automorphism<RationalBase>&, const Field<RationalBase>&);
template FixedField<PrimeBase> fix_field(const Automorphism<PrimeBase>&);
template FixedField<RationalBase> fix_field(const Automorphism<RationalBase>&);

}  // namespace skewmrd
