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

// Shared towers used across the test suites.

#ifndef SKEWMRD_TESTS_FIXTURES_HPP
#define SKEWMRD_TESTS_FIXTURES_HPP

#include <random>

#include "skewmrd/automorphism.hpp"
#include "skewmrd/cyclic_algebra.hpp"
#include "skewmrd/field.hpp"

namespace fx {

using namespace skewmrd;
using P = PrimeBase;
using Q = RationalBase;
using EP = Elem<P>;
using EQ = Elem<Q>;

template <class B>
inline std::vector<Elem<B>> consts(const Field<B>& F, std::initializer_list<long long> cs) {
    std::vector<Elem<B>> out;
    for (auto c : cs) out.push_back(F.from_int(c));
    return out;
}

inline FieldPtr<P> fp(std::uint32_t p) { return Field<P>::prime(PrimeBase(p), "F" + std::to_string(p)); }

struct Tower {
    FieldPtr<P> base, top;
};

/// F_4 = F_2(th), th^2 = th + 1.
inline Tower gf4() {
    auto F2 = fp(2);
    return {F2, Field<P>::extension(F2, consts(*F2, {1, 1, 1}), "th")};
}
/// F_8 = F_2(w), w^3 = w + 1.
inline Tower gf8() {
    auto F2 = fp(2);
    return {F2, Field<P>::extension(F2, consts(*F2, {1, 1, 0, 1}), "w")};
}
/// F_9 = F_3(g), g^2 = g + 1 (modulus x^2 + 2x + 2, g primitive).
inline Tower gf9() {
    auto F3 = fp(3);
    return {F3, Field<P>::extension(F3, consts(*F3, {2, 2, 1}), "g")};
}
/// F_16 = F_4(y), y^2 = y + th.
struct Tower3 {
    FieldPtr<P> F2, F4, F16;
};
inline Tower3 gf16() {
    auto t = gf4();
    std::vector<EP> mod{t.top->generator(), t.top->one(), t.top->one()};
    return {t.base, t.top, Field<P>::extension(t.top, mod, "y")};
}

struct Gauss {
    FieldPtr<Q> Q0, Qi;
};
inline Gauss qi() {
    auto Q0 = Field<Q>::prime(RationalBase(), "Q");
    return {Q0, Field<Q>::extension(Q0, consts(*Q0, {1, 0, 1}), "i")};
}

inline EQ qi_elem(const Field<Q>& K, mpq_class re, mpq_class im) {
    EQ x = K.zero();
    x[0] = re;
    x[1] = im;
    return x;
}

/// Q(i)(s), s^2 = 2, with the cyclic division algebra (E/Q(i), s -> -s, 5).
struct Quat {
    FieldPtr<Q> Q0, Qi, E;
    CyclicAlgebra<Q>::Ptr D;
};
inline Quat quat() {
    auto g = qi();
    auto E = Field<Q>::extension(g.Qi, consts(*g.Qi, {-2, 0, 1}), "s");
    auto gens = E->generators();
    std::vector<EQ> images{gens[0], E->neg(gens[1])};
    auto D = CyclicAlgebra<Q>::make(E, g.Qi, images, g.Qi->from_int(5));
    return {g.Q0, g.Qi, E, D};
}

template <class B>
Elem<B> random_elem(const DivisionRing<B>& R, std::mt19937_64& rng, int range = 5) {
    Elem<B> x = R.zero();
    std::uniform_int_distribution<int> dist(-range, range);
    for (auto& c : x) c = R.domain().from_int(dist(rng));
    return x;
}

template <class B>
Elem<B> random_nonzero(const DivisionRing<B>& R, std::mt19937_64& rng, int range = 5) {
    for (;;) {
        auto x = random_elem(R, rng, range);
        if (!R.is_zero(x)) return x;
    }
}

}  // namespace fx

#endif
