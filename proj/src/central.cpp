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

#include "skewmrd/central.hpp"

#include "skewmrd/linalg.hpp"
#include "skewmrd/tower.hpp"

namespace skewmrd {

const char* to_string(Irreducibility v) noexcept {
    switch (v) {
        case Irreducibility::Irreducible: return "yes";
        case Irreducibility::Reducible: return "no";
        default: return "unknown";
    }
}

const char* to_string(Similarity v) noexcept {
    switch (v) {
        case Similarity::Similar: return "similar";
        case Similarity::NotSimilar: return "not-similar";
        default: return "unknown";
    }
}

template <class B>
RingContext<B>::RingContext(SkewRing<B> ring)
    : ring_(std::move(ring)), algebra_(dynamic_cast<const CyclicAlgebra<B>*>(&ring_.coeffs())) {
    d_ = algebra_ ? algebra_->d() : 1;
    F_ = fix_field(ring_.sigma(), C()).field;
}

template <class B>
FieldPtr<B> RingContext<B>::F_ptr() const {
    return std::static_pointer_cast<const Field<B>>(F_->shared_from_this());
}

template <class B>
std::vector<typename RingContext<B>::Element> RingContext<B>::coords_over(const Field<B>& sub,
                                                                          const Element& x) const {
    require(E().contains(sub), ErrorKind::NotInTower, sub.name() + " is not below " + E().name());
    D().check(x);
    const int s = sub.dimension(), r = D().dimension() / s;
    std::vector<Element> out(r);
    for (int i = 0; i < r; ++i) out[i] = Element(x.begin() + i * s, x.begin() + (i + 1) * s);
    return out;
}

template <class B>
typename RingContext<B>::Element RingContext<B>::from_coords(const Field<B>& sub,
                                                              const std::vector<Element>& c) const {
    require(static_cast<int>(c.size()) * sub.dimension() == D().dimension(), ErrorKind::LengthMismatch,
            "coordinate count does not match");
    Element out;
    out.reserve(D().dimension());
    for (const auto& v : c) {
        sub.check(v);
        out.insert(out.end(), v.begin(), v.end());
    }
    return out;
}

template <class B>
typename RingContext<B>::Element RingContext<B>::lift(const Field<B>& sub, const Element& c) const {
    require(E().contains(sub), ErrorKind::NotInTower, sub.name() + " is not below " + E().name());
    sub.check(c);
    Element r = D().zero();
    std::copy(c.begin(), c.end(), r.begin());
    return r;
}

template <class B>
std::optional<typename RingContext<B>::Element> RingContext<B>::restrict_to(const Field<B>& sub,
                                                                             const Element& x) const {
    require(E().contains(sub), ErrorKind::NotInTower, sub.name() + " is not below " + E().name());
    D().check(x);
    for (int i = sub.dimension(); i < D().dimension(); ++i)
        if (!D().domain().is_zero(x[i])) return std::nullopt;
    return Element(x.begin(), x.begin() + sub.dimension());
}

template <class B>
typename RingContext<B>::Element RingContext<B>::scale_sub(const Field<B>& sub, const Element& c,
                                                            const Element& x) const {
    auto blocks = coords_over(sub, x);
    for (auto& b : blocks) b = sub.mul(c, b);
    return from_coords(sub, blocks);
}

template <class B>
bool RingContext<B>::in_E(const Poly& p) const {
    for (const auto& c : p)
        if (!restrict_to(E(), c)) return false;
    return true;
}

template <class B>
std::vector<typename RingContext<B>::Element> RingContext<B>::poly_coords(const Poly& p, int len) const {
    std::vector<Element> out;
    for (int i = 0; i < len; ++i)
        for (auto& c : coords_over(F(), ring_.coeff(p, i))) out.push_back(std::move(c));
    return out;
}

template <class B>
typename RingContext<B>::Poly RingContext<B>::poly_from_coords(const std::vector<Element>& c, int len) const {
    const int per = D().dimension() / F().dimension();
    require(static_cast<int>(c.size()) == per * len, ErrorKind::LengthMismatch, "coordinate count does not match");
    Poly p;
    for (int i = 0; i < len; ++i)
        p.push_back(from_coords(F(), std::vector<Element>(c.begin() + i * per, c.begin() + (i + 1) * per)));
    ring_.trim(p);
    return p;
}

template <class B>
typename RingContext<B>::Poly RingContext<B>::central_eval(const fpoly::Poly<B>& g) const {
    Poly x = ring_.monomial(D().inv(ring_.u()), n());
    Poly acc, power = ring_.one();
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (i) power = ring_.mul(power, x);
        acc = ring_.add(acc, ring_.scale_left(lift(F(), g[i]), power));
    }
    return acc;
}

template <class B>
MclmReport<B> mclm(const RingContext<B>& ctx, const SkewPoly<B>& f) {
    const auto& R = ctx.ring();
    R.require_no_delta("mclm");
    require(R.is_monic(f) && SkewRing<B>::degree(f) >= 1, ErrorKind::PreconditionFailed,
            "mclm needs a monic polynomial of positive degree");
    require(SkewRing<B>::degree(R.gcrd(f, R.t_power(1))) == 0, ErrorKind::NotCoprimeWithT, "(f,t)_r != 1");
    const Field<B>& F = ctx.F();
    const int m = SkewRing<B>::degree(f);
    const int width = m * ctx.D().dimension() / F.dimension();

    auto X = R.monomial(ctx.D().inv(R.u()), ctx.n());
    EchelonBasis<B> krylov(F, width);
    SkewPoly<B> r = R.mod_r(R.one(), f);
    MclmReport<B> rep;
    for (int i = 0;; ++i) {
        auto row = ctx.poly_coords(r, m);
        if (!krylov.insert(row)) {
            auto c = *krylov.express(row);
            for (int j = 0; j < i; ++j) rep.hhat.push_back(F.neg(c[j]));
            rep.hhat.push_back(F.one());
            break;
        }
        r = R.mod_r(R.mul(r, X), f);
    }
    rep.f = f;
    rep.m = m;
    rep.h = ctx.central_eval(rep.hhat);
    // k and s are only meaningful when f is irreducible; leave them 0 when the degrees do not divide
    const int dh = rep.deg_h();
    if (dh % m == 0 && (ctx.d() * m) % rep.deg_hhat() == 0) {
        rep.k = dh / m;
        rep.s = ctx.d() * m / rep.deg_hhat();
    }
    rep.full_degree = dh == ctx.d() * m * ctx.n();
    return rep;
}

template <class B>
FieldPtr<B> ehat_field(const RingContext<B>& ctx, const MclmReport<B>& report, ModulusCheck check) {
    auto names = ctx.D().generator_names();
    std::string name = "x";
    for (int k = 1; std::find(names.begin(), names.end(), name) != names.end(); ++k) name = "x" + std::to_string(k);
    return Field<B>::extension(ctx.F_ptr(), report.hhat, name, check);
}

namespace {

// Monic polynomial of the given degree with lower coefficients indexed by `idx` (mixed radix |D|).
template <class B>
SkewPoly<B> monic_from_index(const DivisionRing<B>& D, int degree, std::uint64_t idx) {
    SkewPoly<B> g;
    const std::uint64_t q = D.size();
    for (int i = 0; i < degree; ++i) {
        g.push_back(D.from_index(idx % q));
        idx /= q;
    }
    g.push_back(D.one());
    return g;
}

template <class B>
std::uint64_t count_monic(const DivisionRing<B>& D, int degree, std::uint64_t budget) {
    require(D.is_finite(), ErrorKind::InfiniteField, "divisor scans need a finite coefficient ring");
    std::uint64_t q = D.size(), total = 1;
    for (int i = 0; i < degree; ++i) {
        require(q != 0 && total <= budget / q, ErrorKind::BudgetExceeded,
                "divisor scan of degree " + std::to_string(degree) + " exceeds the budget");
        total *= q;
    }
    return total;
}

// A proper monic factor of g over F when one can be found.
template <class B>
std::optional<fpoly::Poly<B>> find_factor(const Field<B>& F, const fpoly::Poly<B>& g, std::uint64_t budget) {
    int n = static_cast<int>(g.size()) - 1;
    if (F.is_finite()) {
        for (int j = 1; j <= n / 2; ++j) {
            std::uint64_t total;
            try {
                total = count_monic<B>(F, j, budget);
            } catch (const Error&) {
                return std::nullopt;
            }
            for (std::uint64_t idx = 0; idx < total; ++idx) {
                auto cand = monic_from_index<B>(F, j, idx);
                if (fpoly::mod(F, g, cand).empty()) return cand;
            }
        }
        return std::nullopt;
    }
    if constexpr (std::is_same_v<B, RationalBase>) {
        if (F.is_prime()) {
            std::vector<mpq_class> q, factor;
            for (const auto& c : g) q.push_back(c[0]);
            if (fpoly::rational_irreducible(q, &factor) == Tristate::No) {
                fpoly::Poly<B> out;
                for (auto& c : factor) out.push_back(F.from_scalar(c));
                return fpoly::monic(F, out);
            }
        }
    }
    return std::nullopt;
}

}  // namespace

template <class B>
std::optional<SkewPoly<B>> find_right_divisor(const RingContext<B>& ctx, const SkewPoly<B>& f, int degree,
                                              std::uint64_t budget) {
    const auto& D = ctx.D();
    std::uint64_t total = count_monic(D, degree, budget);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        auto g = monic_from_index(D, degree, idx);
        if (ctx.ring().right_divides(g, f)) return g;
    }
    return std::nullopt;
}

template <class B>
std::vector<SkewPoly<B>> all_right_divisors(const RingContext<B>& ctx, const SkewPoly<B>& g, int degree,
                                            std::uint64_t budget) {
    const auto& D = ctx.D();
    std::uint64_t total = count_monic(D, degree, budget);
    std::vector<SkewPoly<B>> out;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        auto cand = monic_from_index(D, degree, idx);
        if (ctx.ring().right_divides(cand, g)) out.push_back(std::move(cand));
    }
    return out;
}

template <class B>
IrreducibilityVerdict<B> is_irreducible(const RingContext<B>& ctx, const SkewPoly<B>& f, const MclmReport<B>& report,
                                        std::uint64_t budget) {
    ctx.ring().require_no_delta("is_irreducible");
    const int m = SkewRing<B>::degree(f);
    if (m == 1) return {Irreducibility::Irreducible, std::nullopt, "degree"};
    auto hh = fpoly::is_irreducible(ctx.F(), report.hhat);
    if (hh == Tristate::No) {
        if (auto g = find_factor(ctx.F(), report.hhat, budget)) {
            // g(X) is not in Rf by minimality, and its cofactor is not either, so
            // gcrd(f, g(X)) is a proper right divisor
            auto w = ctx.ring().gcrd(f, ctx.central_eval(*g));
            return {Irreducibility::Reducible, w, "hhat"};
        }
    }
    if (hh == Tristate::Yes && report.full_degree) return {Irreducibility::Irreducible, std::nullopt, "hhat"};
    if (!ctx.D().is_finite()) return {Irreducibility::Unknown, std::nullopt, "undecided"};
    try {
        for (int j = 1; j < m; ++j)
            if (auto g = find_right_divisor(ctx, f, j, budget)) return {Irreducibility::Reducible, g, "divisor-scan"};
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::BudgetExceeded) throw;
        return {Irreducibility::Unknown, std::nullopt, "budget"};
    }
    return {Irreducibility::Irreducible, std::nullopt, "divisor-scan"};
}

namespace {

// Bareiss fraction-free determinant over the polynomial ring E[x].
template <class B>
fpoly::Poly<B> poly_determinant(const Field<B>& E, std::vector<std::vector<fpoly::Poly<B>>> M) {
    const int n = static_cast<int>(M.size());
    fpoly::Poly<B> prev{E.one()};
    bool negate = false;
    for (int k = 0; k < n - 1; ++k) {
        int piv = -1;
        for (int i = k; i < n; ++i)
            if (!M[i][k].empty()) {
                piv = i;
                break;
            }
        if (piv < 0) return {};
        if (piv != k) {
            std::swap(M[piv], M[k]);
            negate = !negate;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                auto num = fpoly::sub(E, fpoly::mul(E, M[k][k], M[i][j]), fpoly::mul(E, M[i][k], M[k][j]));
                fpoly::Poly<B> q, r;
                fpoly::divmod(E, num, prev, q, r);
                require(r.empty(), ErrorKind::PreconditionFailed, "inexact Bareiss division");
                M[i][j] = std::move(q);
            }
        prev = M[k][k];
    }
    auto det = M[n - 1][n - 1];
    return negate ? fpoly::scale(E, E.neg(E.one()), det) : det;
}

}  // namespace

template <class B>
fpoly::Poly<B> reduced_norm(const RingContext<B>& ctx, const SkewPoly<B>& f) {
    const auto& R = ctx.ring();
    R.require_no_delta("reduced_norm");
    const auto& D = ctx.D();
    const Field<B>& E = ctx.E();
    const int d = ctx.d(), n = ctx.n();
    const auto* A = ctx.algebra();
    if (A) require(ctx.in_E(f), ErrorKind::NotInE, "reduced norm formula needs f in E[t;sigma]");
    auto u = ctx.restrict_to(E, R.u());
    require(u.has_value(), ErrorKind::NotInE, "inner unit u must lie in E");
    const int N = d * n;
    std::vector<std::vector<fpoly::Poly<B>>> M(N, std::vector<fpoly::Poly<B>>(N));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < n; ++j) {
            auto ei = A ? A->from_components([&] {
                std::vector<Elem<B>> parts(d, E.zero());
                parts[i] = E.one();
                return parts;
            }())
                        : D.one();
            auto prod = R.mul(f, R.monomial(ei, j));
            const int col = i * n + j;
            for (int K = 0; K < static_cast<int>(prod.size()); ++K) {
                const int q = K / n, r = K % n;
                for (int b = 0; b < d; ++b) {
                    // z e^b t^K = e^b t^r * (u^q sigma^{-K}(gamma^{-b}(z))) x^q
                    Elem<B> z = A ? A->component(prod[K], b) : prod[K];
                    if (E.is_zero(z)) continue;
                    if (A) z = A->gamma().apply(z, -b);
                    auto moved = ctx.restrict_to(E, R.apply_sigma(ctx.lift(E, z), -K));
                    require(moved.has_value(), ErrorKind::NotInE, "sigma does not preserve E");
                    auto coef = E.mul(E.pow(*u, static_cast<long long>(q)), *moved);
                    auto& entry = M[b * n + r][col];
                    if (static_cast<int>(entry.size()) <= q) entry.resize(q + 1, E.zero());
                    E.add_into(entry[q], coef);
                }
            }
            for (auto& row : M) fpoly::trim(E, row[col]);
        }
    auto det = poly_determinant(E, M);
    fpoly::Poly<B> out;
    for (const auto& c : det) {
        auto in_F = E.restrict_to(ctx.F(), c);
        require(in_F.has_value(), ErrorKind::PreconditionFailed, "reduced norm coefficient outside F");
        out.push_back(*in_F);
    }
    return out;
}

template <class B>
bool norm_constant_check(const RingContext<B>& ctx, const MclmReport<B>& report) {
    require(report.full_degree, ErrorKind::PreconditionFailed, "norm constant check needs deg h = dmn");
    const auto& f = report.f;
    const Field<B>& E = ctx.E();
    const Field<B>& F = ctx.F();
    const int n = ctx.n(), m = report.m, d = ctx.d();
    if (!ctx.is_field_case()) require(ctx.in_E(f), ErrorKind::NotInE, "norm constant check needs f in E[t;sigma]");
    auto a0 = *ctx.restrict_to(E, f.front());
    auto am = *ctx.restrict_to(E, f.back());
    auto lhs = relative_norm(E, F, a0);
    const int r = m % n;
    long long sign_exp = ctx.is_field_case() ? static_cast<long long>(m) * (n - 1) : static_cast<long long>(d) * r * (n - 1);
    auto rhs = F.mul(relative_norm(E, F, am), report.hhat.front());
    if (sign_exp % 2) rhs = F.neg(rhs);
    // N_{E/C}(u)^m lives in C; compare inside C
    const Field<B>& C = ctx.C();
    auto u = ctx.restrict_to(E, ctx.ring().u());
    require(u.has_value(), ErrorKind::NotInE, "inner unit u must lie in E");
    auto nu = C.pow(relative_norm(E, C, *u), static_cast<long long>(m));
    return C.equal(C.embed(F, lhs), C.mul(nu, C.embed(F, rhs)));
}

template <class B>
Similarity are_similar(const RingContext<B>& ctx, const SkewPoly<B>& f, const SkewPoly<B>& g, std::uint64_t budget) {
    auto rf = mclm(ctx, f);
    auto rg = mclm(ctx, g);
    auto vf = is_irreducible(ctx, f, rf, budget);
    auto vg = is_irreducible(ctx, g, rg, budget);
    require(vf.verdict != Irreducibility::Reducible && vg.verdict != Irreducibility::Reducible,
            ErrorKind::NotIrreducible, "similarity is only decided for irreducible polynomials");
    if (vf.verdict == Irreducibility::Unknown || vg.verdict == Irreducibility::Unknown) return Similarity::Unknown;
    if (rf.m != rg.m) return Similarity::NotSimilar;
    return fpoly::equal(ctx.F(), rf.hhat, rg.hhat) ? Similarity::Similar : Similarity::NotSimilar;
}

#define SKEWMRD_CENTRAL_INSTANTIATE(B)                                                                         \
    template class RingContext<B>;                                                                            \
    template MclmReport<B> mclm<B>(const RingContext<B>&, const SkewPoly<B>&);                                \
    template FieldPtr<B> ehat_field<B>(const RingContext<B>&, const MclmReport<B>&, ModulusCheck);            \
    template IrreducibilityVerdict<B> is_irreducible<B>(const RingContext<B>&, const SkewPoly<B>&,             \
                                                        const MclmReport<B>&, std::uint64_t);                 \
    template std::optional<SkewPoly<B>> find_right_divisor<B>(const RingContext<B>&, const SkewPoly<B>&, int, \
                                                              std::uint64_t);                                 \
    template std::vector<SkewPoly<B>> all_right_divisors<B>(const RingContext<B>&, const SkewPoly<B>&, int,   \
                                                            std::uint64_t);                                   \
    template fpoly::Poly<B> reduced_norm<B>(const RingContext<B>&, const SkewPoly<B>&);                       \
    template bool norm_constant_check<B>(const RingContext<B>&, const MclmReport<B>&);                        \
    template Similarity are_similar<B>(const RingContext<B>&, const SkewPoly<B>&, const SkewPoly<B>&, std::uint64_t);

SKEWMRD_CENTRAL_INSTANTIATE(PrimeBase)
SKEWMRD_CENTRAL_INSTANTIATE(RationalBase)

}  // namespace skewmrd
