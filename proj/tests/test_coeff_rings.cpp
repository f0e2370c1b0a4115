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

#include <doctest.h>

#include "fixtures.hpp"
#include "skewmrd/field_poly.hpp"
#include "skewmrd/tower.hpp"

using namespace fx;

namespace {

// Carry-less multiplication of bit-encoded GF(2)[x] residues, reduced by `mod_bits`.
unsigned gf2_mul(unsigned a, unsigned b, unsigned mod_bits, int deg) {
    unsigned r = 0;
    for (int i = 0; i < deg; ++i)
        if (b >> i & 1) r ^= a << i;
    for (int i = 2 * deg - 2; i >= deg; --i)
        if (r >> i & 1) r ^= mod_bits << (i - deg);
    return r;
}

template <class B>
std::vector<Elem<B>> all_elements(const Field<B>& F) {
    std::vector<Elem<B>> out;
    for (std::uint64_t i = 0; i < F.size(); ++i) out.push_back(F.from_index(i));
    return out;
}

}  // namespace

TEST_CASE("F4 and F8 multiplication agree with carry-less arithmetic") {
    for (auto [tw, mod_bits, deg] : {std::tuple{gf4(), 0b111u, 2}, std::tuple{gf8(), 0b1011u, 3}}) {
        const auto& F = *tw.top;
        for (unsigned a = 0; a < F.size(); ++a)
            for (unsigned b = 0; b < F.size(); ++b)
                CHECK(F.index_of(F.mul(F.from_index(a), F.from_index(b))) == gf2_mul(a, b, mod_bits, deg));
    }
}

TEST_CASE("defining relations") {
    auto t = gf4();
    auto th = t.top->generator();
    CHECK(t.top->equal(t.top->mul(th, th), t.top->add(th, t.top->one())));
    auto g = qi();
    auto i = g.Qi->generator();
    CHECK(g.Qi->equal(g.Qi->mul(i, i), g.Qi->from_int(-1)));
}

TEST_CASE("inverses are exact") {
    for (auto F : {gf4().top, gf8().top, gf9().top, gf16().F16}) {
        for (auto& x : all_elements(*F)) {
            if (F->is_zero(x)) {
                CHECK_THROWS_AS(F->inv(x), Error);
                continue;
            }
            CHECK(F->is_one(F->mul(x, F->inv(x))));
        }
    }
    std::mt19937_64 rng(7);
    auto q = quat();
    for (int k = 0; k < 200; ++k) {
        auto x = random_nonzero(*q.E, rng);
        CHECK(q.E->is_one(q.E->mul(x, q.E->inv(x))));
        auto y = random_nonzero(*q.D, rng, 3);
        auto yi = q.D->inv(y);
        CHECK(q.D->is_one(q.D->mul(y, yi)));
        CHECK(q.D->is_one(q.D->mul(yi, y)));
    }
}

TEST_CASE("rational quaternions: e i = -i e") {
    auto g = qi();
    auto gens = g.Qi->generators();
    auto H = CyclicAlgebra<Q>::make(g.Qi, g.Q0, {g.Qi->neg(gens[0])}, g.Q0->from_int(-1));
    auto e = H->gen_e();
    auto i = H->embed_E(g.Qi->generator());
    auto ei = H->mul(e, i);
    CHECK(H->equal(ei, H->neg(H->mul(i, e))));
    CHECK(H->equal(H->mul(e, e), H->from_int(-1)));
    CHECK(H->format(ei) == "-i*e");
}

TEST_CASE("cyclic algebra is associative on basis triples") {
    auto q = quat();
    const auto& D = *q.D;
    for (int a = 0; a < D.dimension(); ++a)
        for (int b = 0; b < D.dimension(); ++b)
            for (int c = 0; c < D.dimension(); ++c) {
                auto x = D.basis(a), y = D.basis(b), z = D.basis(c);
                CHECK(D.equal(D.mul(D.mul(x, y), z), D.mul(x, D.mul(y, z))));
            }
    CHECK(D.equal(D.mul(D.gen_e(), D.gen_e()), D.from_int(5)));
}

TEST_CASE("Frobenius and conjugation") {
    auto t4 = gf4();
    auto fr = Automorphism<P>::frobenius(t4.top, 1);
    auto th = t4.top->generator();
    CHECK(t4.top->equal(fr.apply(th), t4.top->add(th, t4.top->one())));
    CHECK(fr.order() == 2);
    CHECK(t4.top->equal(fr.apply(th, -1), fr.apply(th)));

    auto t8 = gf8();
    auto fr8 = Automorphism<P>::frobenius(t8.top, 1);
    auto w = t8.top->generator();
    CHECK(t8.top->equal(fr8.apply(w), t8.top->mul(w, w)));
    CHECK(fr8.order() == 3);

    auto g = qi();
    auto conj = Automorphism<Q>::from_images(g.Qi, {g.Qi->neg(g.Qi->generator())});
    auto z = qi_elem(*g.Qi, 3, 2);
    CHECK(g.Qi->equal(conj.apply(z, 2), z));
    CHECK(g.Qi->equal(conj.apply(z), qi_elem(*g.Qi, 3, -2)));
    CHECK_THROWS_AS(Automorphism<Q>::from_images(g.Qi, {g.Qi->from_int(2)}), Error);
}

TEST_CASE("automorphisms are multiplicative") {
    auto t16 = gf16();
    std::vector<FieldPtr<P>> fields{gf4().top, gf8().top, gf9().top, t16.F16};
    for (const auto& F : fields) {
        for (int j = 1; j < F->dimension(); ++j) {
            auto phi = Automorphism<P>::frobenius(F, j);
            auto els = all_elements(*F);
            for (auto& x : els)
                for (auto& y : els) CHECK(F->equal(phi.apply(F->mul(x, y)), F->mul(phi.apply(x), phi.apply(y))));
        }
    }
    auto q = quat();
    std::mt19937_64 rng(3);
    auto gens = q.D->generators();
    // sigma: i -> -i, s -> s, e -> e
    auto sigma = Automorphism<Q>::from_images(q.D, {q.D->neg(gens[0]), gens[1], gens[2]});
    CHECK(sigma.order() == 2);
    for (int k = 0; k < 100; ++k) {
        auto x = random_elem(*q.D, rng, 3), y = random_elem(*q.D, rng, 3);
        CHECK(q.D->equal(sigma.apply(q.D->mul(x, y)), q.D->mul(sigma.apply(x), sigma.apply(y))));
    }
}

TEST_CASE("relative norms against products of conjugates") {
    auto check_tower = [](const Field<P>& L, const Field<P>& K) {
        int r = L.index_over(K);
        auto phi = Automorphism<P>::frobenius(
            std::static_pointer_cast<const Field<P>>(L.shared_from_this()), K.dimension());
        for (auto& x : all_elements(L)) {
            auto prod = L.one();
            for (int j = 0; j < r; ++j) prod = L.mul(prod, phi.apply(x, j));
            auto n = relative_norm(L, K, x);
            CHECK(L.equal(L.embed(K, n), prod));
        }
    };
    auto t4 = gf4();
    check_tower(*t4.top, *t4.base);
    auto t8 = gf8();
    check_tower(*t8.top, *t8.base);
    auto t9 = gf9();
    check_tower(*t9.top, *t9.base);
    auto t16 = gf16();
    check_tower(*t16.F16, *t16.F4);
    check_tower(*t16.F16, *t16.F2);

    CHECK(t4.base->is_one(relative_norm(*t4.top, *t4.base, t4.top->generator())));
    CHECK(t9.base->equal(relative_norm(*t9.top, *t9.base, t9.top->generator()), t9.base->from_int(2)));
    auto g = qi();
    CHECK(g.Q0->equal(relative_norm(*g.Qi, *g.Q0, qi_elem(*g.Qi, 1, 1)), g.Q0->from_int(2)));
}

TEST_CASE("norms compose along the tower, are multiplicative and power scalars") {
    auto t16 = gf16();
    const auto& L = *t16.F16;
    const auto& M = *t16.F4;
    const auto& K = *t16.F2;
    auto els = all_elements(L);
    for (auto& x : els) {
        auto step = relative_norm(M, K, relative_norm(L, M, x));
        CHECK(K.equal(step, relative_norm(L, K, x)));
        for (auto& y : els)
            CHECK(M.equal(relative_norm(L, M, L.mul(x, y)), M.mul(relative_norm(L, M, x), relative_norm(L, M, y))));
    }
    for (auto& c : all_elements(M)) CHECK(M.equal(relative_norm(L, M, L.embed(M, c)), M.pow(c, 2LL)));
    auto q = quat();
    std::mt19937_64 rng(11);
    for (int k = 0; k < 50; ++k) {
        auto x = random_elem(*q.E, rng), y = random_elem(*q.E, rng);
        CHECK(q.Q0->equal(relative_norm(*q.E, *q.Q0, q.E->mul(x, y)),
                          q.Q0->mul(relative_norm(*q.E, *q.Q0, x), relative_norm(*q.E, *q.Q0, y))));
        CHECK(q.Q0->equal(relative_norm(*q.Qi, *q.Q0, relative_norm(*q.E, *q.Qi, x)), relative_norm(*q.E, *q.Q0, x)));
    }
    CHECK_THROWS_AS(relative_norm(*t16.F2, *t16.F4, t16.F2->one()), Error);
}

TEST_CASE("fixed fields") {
    auto t4 = gf4();
    auto fr = fix_field(Automorphism<P>::frobenius(t4.top, 1));
    CHECK(fr.field == t4.base.get());
    CHECK(fr.index == 2);
    auto g = qi();
    auto id = fix_field(Automorphism<Q>::identity(g.Qi));
    CHECK(id.field == g.Qi.get());
    CHECK(id.index == 1);
    auto cj = fix_field(Automorphism<Q>::from_images(g.Qi, {g.Qi->neg(g.Qi->generator())}));
    CHECK(cj.field == g.Q0.get());
    CHECK(cj.index == 2);
    auto t16 = gf16();
    auto f2 = fix_field(Automorphism<P>::frobenius(t16.F16, 2));
    CHECK(f2.field == t16.F4.get());
    // Fix(sqrt2 -> -sqrt2, i -> -i) = Q(i sqrt2) is not in the tower
    auto q = quat();
    auto gens = q.E->generators();
    auto both = Automorphism<Q>::from_images(q.E, {q.E->neg(gens[0]), q.E->neg(gens[1])});
    CHECK_THROWS_AS(fix_field(both), Error);
}

TEST_CASE("moduli are checked") {
    auto F2 = fp(2);
    CHECK_THROWS_AS(Field<P>::extension(F2, consts(*F2, {1, 0, 1}), "x"), Error);
    auto g = qi();
    CHECK_THROWS_AS(Field<Q>::extension(g.Q0, consts(*g.Q0, {-4, 0, 1}), "x"), Error);
    CHECK_THROWS_AS(Field<Q>::extension(g.Qi, consts(*g.Qi, {1, 0, 1}), "x"), Error);
    CHECK_NOTHROW(Field<Q>::extension(g.Qi, consts(*g.Qi, {-2, 0, 1}), "x"));
    CHECK_THROWS_AS(Field<P>::extension(F2, consts(*F2, {1, 1, 0}), "x"), Error);  // not monic
}

TEST_CASE("Kronecker factor search over Q") {
    std::vector<mpq_class> x4p4{4, 0, 0, 0, 1}, x4p1{1, 0, 0, 0, 1}, minpoly{1, 0, -10, 0, 1}, cubic{-2, 0, 0, 1};
    std::vector<mpq_class> factor;
    CHECK(fpoly::rational_irreducible(x4p4, &factor) == Tristate::No);
    CHECK(factor.size() == 3);
    CHECK(fpoly::rational_irreducible(x4p1) == Tristate::Yes);
    CHECK(fpoly::rational_irreducible(minpoly) == Tristate::Yes);
    CHECK(fpoly::rational_irreducible(cubic) == Tristate::Yes);
    std::vector<mpq_class> half{mpq_class(1, 4), 0, 1};  // x^2 + 1/4
    CHECK(fpoly::rational_irreducible(half) == Tristate::Yes);
    std::vector<mpq_class> sq{mpq_class(-1, 4), 0, 1};
    CHECK(fpoly::rational_irreducible(sq) == Tristate::No);
}

TEST_CASE("text encodings round-trip") {
    auto t16 = gf16();
    for (auto& x : all_elements(*t16.F16)) CHECK(t16.F16->equal(t16.F16->parse(t16.F16->format(x)), x));
    CHECK(t16.F16->index_of(t16.F16->parse("y")) == 4);
    auto q = quat();
    std::mt19937_64 rng(5);
    for (int k = 0; k < 100; ++k) {
        auto x = random_elem(*q.D, rng, 4);
        x[3] = mpq_class(k, 7);
        x[3].canonicalize();
        CHECK(q.D->equal(q.D->parse(q.D->format(x)), x));
    }
    auto g = qi();
    CHECK(g.Qi->format(g.Qi->parse("3/2 - 2*i")) == "3/2-2*i");
    CHECK(g.Qi->format(g.Qi->parse("i^2")) == "-1");
    CHECK_THROWS_AS(g.Qi->parse("3+j"), Error);
    CHECK_THROWS_AS(g.Qi->parse(""), Error);
    CHECK_THROWS_AS(t16.F16->parse("16"), Error);
}
