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

#include "skewmrd/code_factory.hpp"

#include "skewmrd/tower.hpp"

namespace skewmrd {

template <class B>
CodeSpec<B> make_code_spec(RingContext<B> ctx, SkewPoly<B> f, int l, Elem<B> nu, Automorphism<B> rho,
                           std::uint64_t budget) {
    const auto& R = ctx.ring();
    R.require_no_delta("code construction");
    require(&rho.ring() == &ctx.D(), ErrorKind::ContextMismatch, "rho must act on the coefficient ring");
    ctx.D().check(nu);
    require(SkewRing<B>::degree(f) > 1, ErrorKind::PreconditionFailed, "f must have degree > 1");
    auto report = mclm(ctx, f);
    auto verdict = is_irreducible(ctx, f, report, budget);
    require(verdict.verdict != Irreducibility::Reducible, ErrorKind::NotIrreducible,
            "f is reducible (right divisor " + (verdict.witness ? R.format(*verdict.witness) : std::string("?")) + ")");
    require(verdict.verdict == Irreducibility::Irreducible, ErrorKind::Unknown,
            "irreducibility of f could not be decided");
    require(report.k > 1, ErrorKind::PreconditionFailed, "f is right-invariant (k = 1)");
    require(l >= 1 && l < report.k, ErrorKind::PreconditionFailed,
            "l must satisfy 0 < l < k = " + std::to_string(report.k));
    auto Fp = fix_field(rho, ctx.F()).field;
    CodeSpec<B> spec{std::move(ctx), std::move(f), l, std::move(nu), std::move(rho), std::move(report), Fp};
    return spec;
}

template <class B>
SkewPoly<B> build_A_element(const CodeSpec<B>& spec, const std::vector<Elem<B>>& d) {
    const int lm = spec.l * spec.m();
    require(static_cast<int>(d.size()) == lm, ErrorKind::LengthMismatch,
            "A needs " + std::to_string(lm) + " coefficients, got " + std::to_string(d.size()));
    const auto& D = spec.ctx.D();
    SkewPoly<B> a(d.begin(), d.end());
    a.push_back(D.mul(spec.nu, spec.rho.apply(d.front())));
    spec.ctx.ring().trim(a);
    return a;
}

namespace {

// Flat unit vectors starting each sub-block: an F'-basis of D (1 first).
template <class B>
std::vector<Elem<B>> block_basis(const DivisionRing<B>& D, const Field<B>& sub) {
    std::vector<Elem<B>> out;
    for (int b = 0; b < D.dimension(); b += sub.dimension()) out.push_back(D.basis(b));
    return out;
}

}  // namespace

template <class B>
std::vector<SkewPoly<B>> A_generators(const CodeSpec<B>& spec) {
    const auto& D = spec.ctx.D();
    const int lm = spec.l * spec.m();
    auto betas = block_basis(D, *spec.Fprime);
    std::vector<SkewPoly<B>> out;
    for (int i = 0; i < lm; ++i)
        for (const auto& beta : betas) {
            std::vector<Elem<B>> d(lm, D.zero());
            d[i] = beta;
            out.push_back(build_A_element(spec, d));
        }
    return out;
}

template <class B>
SkewPoly<B> A_from_coordinates(const CodeSpec<B>& spec, const std::vector<Elem<B>>& c) {
    const auto& D = spec.ctx.D();
    const int lm = spec.l * spec.m();
    const int per = D.dimension() / spec.Fprime->dimension();
    require(static_cast<int>(c.size()) == lm * per, ErrorKind::LengthMismatch, "wrong number of F' coordinates");
    std::vector<Elem<B>> d;
    for (int i = 0; i < lm; ++i)
        d.push_back(spec.ctx.from_coords(*spec.Fprime, std::vector<Elem<B>>(c.begin() + i * per, c.begin() + (i + 1) * per)));
    return build_A_element(spec, d);
}

template <class B>
VfBasis<B> VfBasis<B>::build(const CodeSpec<B>& spec) {
    require(spec.s() == 1, ErrorKind::SNotOne,
            "matrices need s = 1 (deg h = dmn); here s = " + std::to_string(spec.s()));
    VfBasis out(spec);
    const auto& ctx = spec.ctx;
    const auto& R = ctx.ring();
    const auto& F = ctx.F();
    const int m = spec.m();
    const int dh = spec.report.deg_hhat();
    out.ehat_ = ehat_field(ctx, spec.report);
    out.X_ = R.monomial(ctx.D().inv(R.u()), ctx.n());
    out.width_ = m * (ctx.D().dimension() / F.dimension());

    auto betas = block_basis(ctx.D(), F);
    EchelonBasis<B> span(F, out.width_);
    std::vector<std::vector<Elem<B>>> columns;
    for (int j = 0; out.k() < spec.k() && j < out.width_ + m; ++j)
        for (int b = 0; b < static_cast<int>(betas.size()) && out.k() < spec.k(); ++b) {
            auto cand = R.mod_r(R.monomial(betas[b], j), spec.f);
            if (span.express(ctx.poly_coords(cand, m))) continue;
            auto v = cand;
            for (int e = 0; e < dh; ++e) {
                auto row = ctx.poly_coords(v, m);
                span.insert(row);
                columns.push_back(std::move(row));
                v = R.mod_r(R.mul(v, out.X_), spec.f);
            }
            out.residues_.push_back(std::move(cand));
            out.labels_.emplace_back(j, b);
        }
    require(out.k() == spec.k() && span.size() == out.width_, ErrorKind::PreconditionFailed,
            "could not complete an E_f-basis of V_f");
    Matrix<B> P(F, out.width_, out.width_);
    for (int c = 0; c < out.width_; ++c)
        for (int r = 0; r < out.width_; ++r) P(r, c) = columns[c][r];
    auto inv = inverse(P);
    require(inv.has_value(), ErrorKind::PreconditionFailed, "basis residues are dependent");
    out.P_ = std::move(*inv);
    return out;
}

template <class B>
std::vector<Elem<B>> VfBasis<B>::coordinates(const SkewPoly<B>& v) const {
    const auto& F = ctx_.F();
    const int m = SkewRing<B>::degree(f_);
    auto c = P_.apply(ctx_.poly_coords(ctx_.ring().mod_r(v, f_), m));
    const int dh = ehat_->index_over(F);
    std::vector<Elem<B>> out;
    for (int i = 0; i < k(); ++i)
        out.push_back(ehat_->from_coordinates(F, std::vector<Elem<B>>(c.begin() + i * dh, c.begin() + (i + 1) * dh)));
    return out;
}

template <class B>
SkewPoly<B> VfBasis<B>::act(const SkewPoly<B>& v, const Elem<B>& z) const {
    const auto& R = ctx_.ring();
    auto zc = ehat_->coordinates_over(ctx_.F(), z);
    SkewPoly<B> acc, power = R.mod_r(v, f_);
    for (std::size_t e = 0; e < zc.size(); ++e) {
        if (e) power = R.mod_r(R.mul(power, X_), f_);
        acc = R.add(acc, R.scale_left(ctx_.lift(ctx_.F(), zc[e]), power));
    }
    return acc;
}

template <class B>
SkewPoly<B> VfBasis<B>::from_coordinates(const std::vector<Elem<B>>& c) const {
    require(static_cast<int>(c.size()) == k(), ErrorKind::LengthMismatch, "wrong number of coordinates");
    SkewPoly<B> acc;
    for (int i = 0; i < k(); ++i) acc = ctx_.ring().add(acc, act(residues_[i], c[i]));
    return acc;
}

template <class B>
Matrix<B> matrix_of(const CodeSpec<B>& spec, const VfBasis<B>& basis, const SkewPoly<B>& a) {
    const auto& R = spec.ctx.ring();
    require(SkewRing<B>::degree(a) < spec.report.deg_h(), ErrorKind::DegreeTooHigh,
            "deg a must be below deg h = " + std::to_string(spec.report.deg_h()));
    const int k = basis.k();
    Matrix<B> M(basis.ehat(), k, k);
    for (int j = 0; j < k; ++j) {
        auto col = basis.coordinates(R.mul(a, basis.residues()[j]));
        for (int i = 0; i < k; ++i) M(i, j) = std::move(col[i]);
    }
    return M;
}

template <class B>
SpreadSet<B> spread_set(const CodeSpec<B>& spec, const VfBasis<B>& basis) {
    SpreadSet<B> out;
    out.generators = A_generators(spec);
    for (const auto& g : out.generators) out.matrices.push_back(matrix_of(spec, basis, g));
    return out;
}

template <class B>
Matrix<B> combine(const CodeSpec<B>& spec, const SpreadSet<B>& set, const std::vector<Elem<B>>& c) {
    require(c.size() == set.matrices.size() && !c.empty(), ErrorKind::LengthMismatch, "wrong number of F' coordinates");
    const auto& Eh = set.matrices.front().field();
    Matrix<B> M(Eh, set.matrices.front().rows(), set.matrices.front().cols());
    for (std::size_t p = 0; p < c.size(); ++p) {
        if (spec.Fprime->is_zero(c[p])) continue;
        M = M + set.matrices[p].scaled(Eh.embed(*spec.Fprime, c[p]));
    }
    return M;
}

template <class B>
std::uint64_t code_size(const CodeSpec<B>& spec, std::uint64_t budget) {
    require(spec.Fprime->is_finite(), ErrorKind::InfiniteField, "exhaustive enumeration needs a finite F'");
    const std::uint64_t q = spec.Fprime->size();
    std::uint64_t total = 1;
    for (int i = 0; i < spec.dim_A(); ++i) {
        if (total > budget / q) return budget + 1;
        total *= q;
    }
    return total;
}

template <class B>
std::vector<Elem<B>> codeword_coordinates(const CodeSpec<B>& spec, std::uint64_t index) {
    const std::uint64_t q = spec.Fprime->size();
    std::vector<Elem<B>> c;
    for (int i = 0; i < spec.dim_A(); ++i, index /= q) c.push_back(spec.Fprime->from_index(index % q));
    return c;
}

template <class B>
std::uint64_t enumerate_code(const CodeSpec<B>& spec, const SpreadSet<B>& set, std::uint64_t budget,
                             const std::function<void(const std::vector<Elem<B>>&, const Matrix<B>&)>& visit) {
    const std::uint64_t total = code_size(spec, budget);
    const std::uint64_t stop = std::min(total, budget);
    for (std::uint64_t idx = 0; idx < stop; ++idx) {
        auto c = codeword_coordinates(spec, idx);
        visit(c, combine(spec, set, c));
    }
    require(total <= budget, ErrorKind::BudgetExceeded,
            "code enumeration stopped after " + std::to_string(stop) + " codewords (budget " + std::to_string(budget) +
                ")");
    return total;
}

template <class B>
Matrix<B> tn_theta_matrix(const RingContext<B>& ctx, const Field<B>& ehat, const std::vector<Elem<B>>& a,
                          const Elem<B>& theta, const Elem<B>& nu, const Automorphism<B>& rho) {
    require(ctx.is_field_case(), ErrorKind::PreconditionFailed, "closed form needs field coefficients");
    require(ctx.D().is_one(ctx.ring().u()), ErrorKind::PreconditionFailed, "closed form needs u = 1");
    const int n = ctx.n();
    require(static_cast<int>(a.size()) == n, ErrorKind::ShapeMismatch,
            "closed form needs " + std::to_string(n) + " coefficients a_0..a_{n-1}");
    const auto& K = ctx.E();
    const auto& F = ctx.F();
    require(ehat.index_over(F) == n, ErrorKind::ShapeMismatch, "E_hhat must have degree n over F");
    // powers of theta as an F-basis of K
    const int per = K.index_over(F);
    require(per == n, ErrorKind::PreconditionFailed, "closed form needs [K:F] = n");
    Matrix<B> T(F, n, n);
    Elem<B> pw = K.one();
    for (int e = 0; e < n; ++e) {
        auto c = K.coordinates_over(F, pw);
        for (int r = 0; r < n; ++r) T(r, e) = c[r];
        pw = K.mul(pw, theta);
    }
    auto Tinv = inverse(T);
    require(Tinv.has_value(), ErrorKind::PreconditionFailed, "theta does not generate K over F");
    auto to_ehat = [&](const Elem<B>& kappa) {
        return ehat.from_coordinates(F, Tinv->apply(K.coordinates_over(F, kappa)));
    };
    const auto& sigma = ctx.ring().sigma();
    auto top = K.mul(nu, rho.apply(a[0]));
    Matrix<B> M(ehat, n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            int i = ((r - c) % n + n) % n;
            auto v = sigma.apply(a[i], -r);
            if (r < c) v = K.mul(v, theta);
            if (r == c) v = K.add(v, K.mul(sigma.apply(top, -r), theta));
            M(r, c) = to_ehat(v);
        }
    return M;
}

std::vector<std::vector<std::string>> tn_theta_latex(int n, const std::string& theta,
                                                     const std::function<std::string(int, const std::string&)>& sigma) {
    auto z = [](int i) { return "z_" + std::to_string(i); };
    auto apply = [&](int r, const std::string& arg) {
        int p = ((n - r) % n + n) % n;
        return p == 0 ? arg : sigma(p, arg);
    };
    std::vector<std::vector<std::string>> out(n, std::vector<std::string>(n));
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            int i = ((r - c) % n + n) % n;
            std::string v = apply(r, z(i));
            if (r < c) v += theta;
            if (r == c) v += "+" + apply(r, "\\nu\\rho(" + z(0) + ")") + theta;
            out[r][c] = v;
        }
    return out;
}

#define SKEWMRD_CODE_INSTANTIATE(B)                                                                              \
    template struct CodeSpec<B>;                                                                                \
    template CodeSpec<B> make_code_spec<B>(RingContext<B>, SkewPoly<B>, int, Elem<B>, Automorphism<B>,          \
                                           std::uint64_t);                                                      \
    template SkewPoly<B> build_A_element<B>(const CodeSpec<B>&, const std::vector<Elem<B>>&);                   \
    template std::vector<SkewPoly<B>> A_generators<B>(const CodeSpec<B>&);                                      \
    template SkewPoly<B> A_from_coordinates<B>(const CodeSpec<B>&, const std::vector<Elem<B>>&);                \
    template class VfBasis<B>;                                                                                  \
    template Matrix<B> matrix_of<B>(const CodeSpec<B>&, const VfBasis<B>&, const SkewPoly<B>&);                 \
    template SpreadSet<B> spread_set<B>(const CodeSpec<B>&, const VfBasis<B>&);                                 \
    template Matrix<B> combine<B>(const CodeSpec<B>&, const SpreadSet<B>&, const std::vector<Elem<B>>&);        \
    template std::vector<Elem<B>> codeword_coordinates<B>(const CodeSpec<B>&, std::uint64_t);                   \
    template std::uint64_t code_size<B>(const CodeSpec<B>&, std::uint64_t);                                     \
    template std::uint64_t enumerate_code<B>(                                                                   \
        const CodeSpec<B>&, const SpreadSet<B>&, std::uint64_t,                                                 \
        const std::function<void(const std::vector<Elem<B>>&, const Matrix<B>&)>&);                             \
    template Matrix<B> tn_theta_matrix<B>(const RingContext<B>&, const Field<B>&, const std::vector<Elem<B>>&, \
                                          const Elem<B>&, const Elem<B>&, const Automorphism<B>&);

SKEWMRD_CODE_INSTANTIATE(PrimeBase)
SKEWMRD_CODE_INSTANTIATE(RationalBase)

}  // namespace skewmrd
