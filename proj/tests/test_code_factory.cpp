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
#include "skewmrd/code_factory.hpp"

using namespace fx;

namespace {

template <class B>
Matrix<B> from_rows(const Field<B>& F, const std::vector<std::vector<Elem<B>>>& rows) {
    Matrix<B> M(F, static_cast<int>(rows.size()), static_cast<int>(rows.front().size()));
    for (int r = 0; r < M.rows(); ++r)
        for (int c = 0; c < M.cols(); ++c) M(r, c) = rows[r][c];
    return M;
}

template <class B>
void check_representation(const CodeSpec<B>& spec, std::mt19937_64& rng, int trials, int range) {
    const auto& R = spec.ctx.ring();
    auto basis = VfBasis<B>::build(spec);
    auto random_below = [&](int deg) {
        SkewPoly<B> p;
        for (int i = 0; i < deg; ++i) p.push_back(random_elem(R.coeffs(), rng, range));
        R.trim(p);
        return p;
    };
    for (int t = 0; t < trials; ++t) {
        auto a = random_below(spec.report.deg_h()), b = random_below(spec.report.deg_h());
        auto ab = R.mod_r(R.mul(a, b), spec.report.h);
        CHECK(matrix_of(spec, basis, a) * matrix_of(spec, basis, b) == matrix_of(spec, basis, ab));
        auto v = random_below(spec.m());
        auto alpha = random_elem(basis.ehat(), rng, range);
        auto lhs = R.mod_r(R.mul(a, basis.act(v, alpha)), spec.f);
        auto rhs = basis.act(R.mod_r(R.mul(a, v), spec.f), alpha);
        CHECK(R.equal(lhs, rhs));
    }
}

struct F4Code {
    Tower tw = gf4();
    Automorphism<P> frob = Automorphism<P>::frobenius(tw.top, 1);
    RingContext<P> ctx{SkewRing<P>{frob}};
    EP th = tw.top->generator();

    CodeSpec<P> spec(const EP& theta, const EP& nu, const Automorphism<P>& rho) const {
        const auto& K = *tw.top;
        return make_code_spec(ctx, SkewPoly<P>{K.neg(theta), K.zero(), K.one()}, 1, nu, rho);
    }
};

struct QiCode {
    Gauss g = qi();
    Automorphism<Q> conj = Automorphism<Q>::from_images(g.Qi, {g.Qi->neg(g.Qi->generator())});
    RingContext<Q> ctx{SkewRing<Q>{conj}};
    EQ i = g.Qi->generator();
};

}  // namespace

TEST_CASE("elements of A") {
    F4Code c;
    const auto& K = *c.tw.top;
    auto spec = c.spec(c.th, K.one(), Automorphism<P>::identity(c.tw.top));
    const auto& R = spec.ctx.ring();
    CHECK(R.is_zero(build_A_element(spec, {K.zero(), K.zero()})));
    CHECK(R.format(build_A_element(spec, {c.th, K.zero()})) == "2,0,2");
    CHECK_THROWS_AS(build_A_element(spec, {c.th}), Error);
    auto petit = c.spec(c.th, K.zero(), c.frob);
    CHECK(petit.ctx.ring().format(build_A_element(petit, {c.th, K.one()})) == "2,1");
    // dim_{F'} A = d^2 n m l [F:F']
    CHECK(spec.dim_A() == 4);
    CHECK(spec.dim_A() == spec.d() * spec.d() * spec.n() * spec.m() * spec.l * spec.f_over_fprime());
    CHECK(A_generators(spec).size() == 4);
}

TEST_CASE("code specs check their hypotheses") {
    F4Code c;
    const auto& K = *c.tw.top;
    auto id = Automorphism<P>::identity(c.tw.top);
    // t^2 + 1 is reducible
    CHECK_THROWS_AS(make_code_spec(c.ctx, SkewPoly<P>{K.one(), K.zero(), K.one()}, 1, K.zero(), id), Error);
    CHECK_NOTHROW(c.spec(c.th, K.zero(), id));
    // l must stay below k = 2
    CHECK_THROWS_AS(make_code_spec(c.ctx, SkewPoly<P>{c.th, K.zero(), K.one()}, 2, K.zero(), id), Error);
    CHECK_THROWS_AS(make_code_spec(c.ctx, SkewPoly<P>{c.th, K.one()}, 1, K.zero(), id), Error);
}

TEST_CASE("V_f bases") {
    F4Code c;
    const auto& K = *c.tw.top;
    auto spec = c.spec(c.th, K.zero(), Automorphism<P>::identity(c.tw.top));
    auto basis = VfBasis<P>::build(spec);
    REQUIRE(basis.k() == 2);
    CHECK(spec.ctx.ring().format(basis.residues()[0]) == "1");
    CHECK(spec.ctx.ring().format(basis.residues()[1]) == "0,1");

    QiCode q;
    const auto& Qi = *q.g.Qi;
    auto qspec = make_code_spec(q.ctx, SkewPoly<Q>{Qi.neg(q.i), Qi.zero(), Qi.one()}, 1, Qi.zero(), q.conj);
    auto qb = VfBasis<Q>::build(qspec);
    REQUIRE(qb.k() == 2);
    CHECK(qspec.ctx.ring().format(qb.residues()[0]) == "1");
    CHECK(qspec.ctx.ring().format(qb.residues()[1]) == "0,1");

    // coordinates invert from_coordinates
    std::mt19937_64 rng(4);
    for (int t = 0; t < 50; ++t) {
        std::vector<EQ> z{random_elem(qb.ehat(), rng), random_elem(qb.ehat(), rng)};
        auto w = qb.coordinates(qb.from_coordinates(z));
        CHECK(qb.ehat().equal(w[0], z[0]));
        CHECK(qb.ehat().equal(w[1], z[1]));
    }
}

TEST_CASE("matrix examples") {
    F4Code c;
    const auto& K = *c.tw.top;
    auto spec = c.spec(c.th, K.zero(), Automorphism<P>::identity(c.tw.top));
    auto basis = VfBasis<P>::build(spec);
    const auto& Eh = basis.ehat();
    CHECK(matrix_of(spec, basis, spec.ctx.ring().one()) == Matrix<P>::identity(Eh, 2));
    auto x = Eh.generator();
    CHECK(matrix_of(spec, basis, spec.ctx.ring().t_power(1)) == from_rows(Eh, {{Eh.zero(), x}, {Eh.one(), Eh.zero()}}));
    CHECK_THROWS_AS(matrix_of(spec, basis, spec.ctx.ring().t_power(4)), Error);
    // diag(theta, theta^2) for a = theta
    auto M = tn_theta_matrix(spec.ctx, Eh, {c.th, K.zero()}, K.neg(spec.f.front()), K.zero(), spec.rho);
    CHECK(M == from_rows(Eh, {{x, Eh.zero()}, {Eh.zero(), Eh.mul(x, x)}}));
    CHECK(tn_theta_matrix(spec.ctx, Eh, {K.zero(), K.zero()}, c.th, K.zero(), spec.rho).is_zero());
    CHECK_THROWS_AS(tn_theta_matrix(spec.ctx, Eh, {K.zero()}, c.th, K.zero(), spec.rho), Error);
}

TEST_CASE("closed form agrees with matrix_of exhaustively over F4 and F9") {
    auto sweep = [](const Tower& tw) {
        const auto& K = *tw.top;
        auto frob = Automorphism<P>::frobenius(tw.top, 1);
        RingContext<P> ctx{SkewRing<P>{frob}};
        const auto& R = ctx.ring();
        int instances = 0;
        for (std::uint64_t ti = 0; ti < K.size(); ++ti) {
            auto theta = K.from_index(ti);
            if (K.restrict_to(ctx.F(), theta)) continue;  // K = F(theta)
            SkewPoly<P> f{K.neg(theta), K.zero(), K.one()};
            auto rep = mclm(ctx, f);
            if (is_irreducible(ctx, f, rep).verdict != Irreducibility::Irreducible) continue;
            for (const auto& rho : {Automorphism<P>::identity(tw.top), frob})
                for (std::uint64_t vi = 0; vi < K.size(); ++vi) {
                    auto nu = K.from_index(vi);
                    auto spec = make_code_spec(ctx, f, 1, nu, rho);
                    auto basis = VfBasis<P>::build(spec);
                    ++instances;
                    for (std::uint64_t a0 = 0; a0 < K.size(); ++a0)
                        for (std::uint64_t a1 = 0; a1 < K.size(); ++a1) {
                            std::vector<EP> a{K.from_index(a0), K.from_index(a1)};
                            auto poly = build_A_element(spec, a);
                            auto lhs = tn_theta_matrix(ctx, basis.ehat(), a, theta, nu, rho);
                            CHECK(lhs == matrix_of(spec, basis, poly));
                        }
                }
            (void)R;
        }
        return instances;
    };
    CHECK(sweep(gf4()) > 0);
    CHECK(sweep(gf9()) > 0);
}

TEST_CASE("closed form over Q(i) and the displayed spread set") {
    QiCode q;
    const auto& K = *q.g.Qi;
    std::mt19937_64 rng(8);
    int checked = 0;
    for (int b = 1; b <= 3; ++b) {
        auto theta = K.mul(K.from_int(b), q.i);
        SkewPoly<Q> f{K.neg(theta), K.zero(), K.one()};
        for (const auto& rho : {Automorphism<Q>::identity(q.g.Qi), q.conj}) {
            auto nu = random_elem(K, rng, 3);
            auto spec = make_code_spec(q.ctx, f, 1, nu, rho);
            auto basis = VfBasis<Q>::build(spec);
            const auto& Eh = basis.ehat();
            // E_hhat = Q[x]/(x^2 + b^2) with x <-> b i
            auto to_eh = [&](const EQ& z) {
                auto x = Eh.generator();
                auto re = Eh.embed(*q.g.Q0, q.g.Q0->from_scalar(z[0]));
                auto im = Eh.mul(Eh.embed(*q.g.Q0, q.g.Q0->from_scalar(mpq_class(z[1] / b))), x);
                return Eh.add(re, im);
            };
            for (int t = 0; t < 17; ++t, ++checked) {
                auto z0 = random_elem(K, rng, 4), z1 = random_elem(K, rng, 4);
                auto top = K.mul(nu, rho.apply(z0));
                auto bar = [&](const EQ& z) { return q.conj.apply(z); };
                auto display = from_rows(Eh, {{to_eh(K.add(z0, K.mul(top, theta))), to_eh(K.mul(z1, theta))},
                                              {to_eh(bar(z1)), to_eh(K.add(bar(z0), K.mul(bar(top), theta)))}});
                auto a = build_A_element(spec, {z0, z1});
                CHECK(matrix_of(spec, basis, a) == display);
                CHECK(tn_theta_matrix(q.ctx, Eh, {z0, z1}, theta, nu, rho) == display);
            }
        }
    }
    CHECK(checked >= 100);

    auto latex = tn_theta_latex(2, "bi", [](int, const std::string& arg) { return "\\overline{" + arg + "}"; });
    CHECK(latex[0][0] == "z_0+\\nu\\rho(z_0)bi");
    CHECK(latex[0][1] == "z_1bi");
    CHECK(latex[1][0] == "\\overline{z_1}");
    CHECK(latex[1][1] == "\\overline{z_0}+\\overline{\\nu\\rho(z_0)}bi");
}

TEST_CASE("matrices represent R/Rh and are E_f-linear") {
    std::mt19937_64 rng(12);
    auto check = [&rng](const auto& spec, int trials, int range) { check_representation(spec, rng, trials, range); };
    F4Code c;
    check(c.spec(c.th, c.tw.top->one(), c.frob), 100, 3);
    auto t8 = gf8();
    RingContext<P> c8{SkewRing<P>{Automorphism<P>::frobenius(t8.top, 1)}};
    const auto& K8 = *t8.top;
    SkewPoly<P> f8{K8.generator(), K8.zero(), K8.zero(), K8.one()};
    check(make_code_spec(c8, f8, 2, K8.zero(), Automorphism<P>::identity(t8.top)), 40, 3);
    QiCode q;
    const auto& K = *q.g.Qi;
    check(make_code_spec(q.ctx, SkewPoly<Q>{K.neg(q.i), K.zero(), K.one()}, 1, K.one(), q.conj), 30, 3);

    // cyclic algebra coefficients: f in E[t;sigma] of full degree
    auto qa = quat();
    auto gens = qa.D->generators();
    RingContext<Q> dctx{SkewRing<Q>{Automorphism<Q>::from_images(qa.D, {qa.D->neg(gens[0]), gens[1], gens[2]})}};
    const auto& E = *qa.E;
    SkewPoly<Q> fd{dctx.lift(E, E.add(E.generator(), E.from_int(1))), dctx.lift(E, E.from_int(1)), qa.D->one()};
    auto rep = mclm(dctx, fd);
    REQUIRE(rep.full_degree);
    auto dspec = make_code_spec(dctx, fd, 1, qa.D->zero(), Automorphism<Q>::identity(qa.D));
    CHECK(dspec.k() == 4);
    check(dspec, 3, 1);
}

TEST_CASE("s > 1 stops before matrix emission") {
    // Over finite fields B is a finite division ring, hence commutative, so s = 1 always;
    // irreducibles with s > 1 only occur over infinite fields where they cannot be certified
    // here. The guard is exercised on a report with s forced to 2.
    F4Code c;
    auto spec = c.spec(c.th, c.tw.top->zero(), Automorphism<P>::identity(c.tw.top));
    spec.report.s = 2;
    try {
        VfBasis<P>::build(spec);
        FAIL("expected SNotOne");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::SNotOne);
    }
    std::mt19937_64 rng(6);
    auto t16 = gf16();
    RingContext<P> ctx{SkewRing<P>{Automorphism<P>::frobenius(t16.F16, 1)}};
    for (int k = 0; k < 40; ++k) {
        SkewPoly<P> f{random_nonzero(ctx.D(), rng), random_elem(ctx.D(), rng), ctx.D().one()};
        auto rep = mclm(ctx, f);
        if (is_irreducible(ctx, f, rep).verdict == Irreducibility::Irreducible) CHECK(rep.s == 1);
    }
}

TEST_CASE("code enumeration") {
    F4Code c;
    auto spec = c.spec(c.th, c.tw.top->zero(), Automorphism<P>::identity(c.tw.top));
    auto basis = VfBasis<P>::build(spec);
    auto set = spread_set(spec, basis);
    std::vector<Matrix<P>> seen;
    CHECK(enumerate_code<P>(spec, set, 1000, [&](const auto& coords, const Matrix<P>& M) {
              CHECK(M == matrix_of(spec, basis, A_from_coordinates(spec, coords)));
              seen.push_back(M);
          }) == 16);
    CHECK(seen.size() == 16);
    for (std::size_t i = 0; i < seen.size(); ++i)
        for (std::size_t j = i + 1; j < seen.size(); ++j) CHECK_FALSE(seen[i] == seen[j]);
    // linearity over F'
    std::mt19937_64 rng(2);
    for (int t = 0; t < 20; ++t) {
        auto ca = codeword_coordinates(spec, rng() % 16), cb = codeword_coordinates(spec, rng() % 16);
        std::vector<EP> sum;
        for (std::size_t p = 0; p < ca.size(); ++p) sum.push_back(spec.Fprime->add(ca[p], cb[p]));
        CHECK(combine(spec, set, sum) == combine(spec, set, ca) + combine(spec, set, cb));
    }
    int visited = 0;
    try {
        enumerate_code<P>(spec, set, 10, [&](const auto&, const auto&) { ++visited; });
        FAIL("expected BudgetExceeded");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::BudgetExceeded);
    }
    CHECK(visited == 10);

    QiCode q;
    const auto& K = *q.g.Qi;
    auto qspec = make_code_spec(q.ctx, SkewPoly<Q>{K.neg(q.i), K.zero(), K.one()}, 1, K.one(), q.conj);
    auto qset = spread_set(qspec, VfBasis<Q>::build(qspec));
    CHECK(qset.matrices.size() == 4);
    CHECK_THROWS_AS(code_size(qspec, 100), Error);
}
