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

#ifndef SKEWMRD_TOWER_HPP
#define SKEWMRD_TOWER_HPP

#include "automorphism.hpp"
#include "field.hpp"

namespace skewmrd {

/// N_{from/to}(x): determinant of multiplication by x on `from` as a `to`-space.
template <class B>
Elem<B> relative_norm(const Field<B>& from, const Field<B>& to, const Elem<B>& x);

template <class B>
struct FixedField {
    const Field<B>* field;
    int index;  ///< [ambient : fixed]
};

/// Fix(phi) inside `ambient` as a tower member of `ambient`; NotInTower when
/// the fixed subfield is not registered in the tower.
template <class B>
FixedField<B> fix_field(const Automorphism<B>& phi, const Field<B>& ambient);

/// fix_field with ambient = the field phi acts on.
template <class B>
FixedField<B> fix_field(const Automorphism<B>& phi);

}  // namespace skewmrd

#endif
