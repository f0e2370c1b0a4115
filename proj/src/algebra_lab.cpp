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

#include "skewmrd/algebra_lab.hpp"

#include "skewmrd/tower.hpp"

namespace skewmrd {

const char* to_string(DivisionVerdict v) noexcept {
    switch (v) {
        case DivisionVerdict::Division: return "yes";
        case DivisionVerdict::NotDivision: return "no";
        default: return "unknown";
    }
}

namespace {

template <class B>
void require_algebra(const CodeSpec<B>& spec) {
    require(spec.l == 1, ErrorKind::PreconditionFailed, "the algebra product needs l = 1");
}

template <class B>
std::vector<Elem<B>> unit_vector(const Field<B>& F, int n, int i) {
    std::vector<Elem<B>> v(n, F.zero());
    v[i] = F.one();
    return v;
}

template <class B>
void axpy(const Field<B>& F, std::vector<Elem<B>>& acc, const Elem<B>& c, const std::vector<Elem<B>>& x) {
    if (F.is_zero(c)) return;
    for (std::size_t i = 0; i < acc.size(); ++i)
        if (!F.is_zero(x[i])) F.add_into(acc[i], F.mul(c, x[i]));
}

template <class B>
std::vector<Matrix<B>> to_matrices(const Field<B>& F, int n, const std::vector<std::vector<Elem<B>>>& vecs) {
    std::vector<Matrix<B>> out;
    for (const auto& v : vecs) {
        Matrix<B> M(F, n, n);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) M(r, c) = v[r * n + c];
        out.push_back(std::move(M));
    }
    return out;
}

template <class B>
std::vector<std::vector<Elem<B>>> all_elements(const Field<B>& Fp, int N, std::uint64_t count) {
    const std::uint64_t q = Fp.size();
    std::vector<std::vector<Elem<B>>> out;
    out.reserve(count);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        std::vector<Elem<B>> v;
        std::uint64_t rest = idx;
        for (int i = 0; i < N; ++i, rest /= q) v.push_back(Fp.from_index(rest % q));
        out.push_back(std::move(v));
    }
    return out;
}

// |F'|^N, or budget + 1 when larger.
template <class B>
std::uint64_t algebra_size(const Field<B>& Fp, int N, std::uint64_t budget) {
    require(Fp.is_finite(), ErrorKind::InfiniteField, "exhaustive scans need a finite F'");
    std::uint64_t total = 1;
    for (int i = 0; i < N; ++i) {
        if (total > budget / Fp.size()) return budget + 1;
        total *= Fp.size();
    }
    return total;
}

}  // namespace

template <class B>
SkewPoly<B> circ(const CodeSpec<B>& spec, const SkewPoly<B>& b, const SkewPoly<B>& c) {
    require_algebra(spec);
    const auto& R = spec.ctx.ring();
    const int m = spec.m();
    require(SkewRing<B>::degree(b) < m && SkewRing<B>::degree(c) < m, ErrorKind::DegreeOutOfRange,
            "factors of the product must have degree < m = " + std::to_string(m));
    if (b.empty() || c.empty()) return {};
    auto lifted = R.add(b, R.monomial(spec.ctx.D().mul(spec.nu, spec.rho.apply(b.front())), m));
    return R.mod_r(R.mul(lifted, c), spec.f);
}

template <class B>
std::vector<Elem<B>> algebra_coords(const CodeSpec<B>& spec, const SkewPoly<B>& p) {
    const auto& D = spec.ctx.D();
    require(SkewRing<B>::degree(p) < spec.m(), ErrorKind::DegreeOutOfRange, "element of R_m expected");
    std::vector<Elem<B>> out;
    for (int i = 0; i < spec.m(); ++i) {
        auto c = spec.ctx.coords_over(*spec.Fprime, i < static_cast<int>(p.size()) ? p[i] : D.zero());
        out.insert(out.end(), c.begin(), c.end());
    }
    return out;
}

template <class B>
SkewPoly<B> algebra_element(const CodeSpec<B>& spec, const std::vector<Elem<B>>& c) {
    const int per = spec.ctx.D().dimension() / spec.Fprime->dimension();
    require(static_cast<int>(c.size()) == per * spec.m(), ErrorKind::LengthMismatch, "wrong number of coordinates");
    SkewPoly<B> p;
    for (int i = 0; i < spec.m(); ++i)
        p.push_back(spec.ctx.from_coords(*spec.Fprime,
                                         std::vector<Elem<B>>(c.begin() + i * per, c.begin() + (i + 1) * per)));
    spec.ctx.ring().trim(p);
    return p;
}

template <class B>
StructureAlgebra<B>::StructureAlgebra(const Field<B>& Fp, std::vector<std::vector<Vec>> table)
    : Fp_(&Fp), table_(std::move(table)) {
    for (const auto& row : table_)
        require(row.size() == table_.size(), ErrorKind::ShapeMismatch, "structure table must be square");
}

template <class B>
StructureAlgebra<B> StructureAlgebra<B>::from_spec(const CodeSpec<B>& spec) {
    require_algebra(spec);
    const auto& Fp = *spec.Fprime;
    const int N = spec.m() * (spec.ctx.D().dimension() / Fp.dimension());
    std::vector<SkewPoly<B>> basis;
    for (int p = 0; p < N; ++p) basis.push_back(algebra_element(spec, unit_vector(Fp, N, p)));
    std::vector<std::vector<Vec>> table(N);
    for (int p = 0; p < N; ++p)
        for (int q = 0; q < N; ++q) table[p].push_back(algebra_coords(spec, circ(spec, basis[p], basis[q])));
    return StructureAlgebra(Fp, std::move(table));
}

template <class B>
auto StructureAlgebra<B>::mul(const Vec& x, const Vec& y) const -> Vec {
    const int N = dim();
    Vec out(N, Fp_->zero());
    for (int p = 0; p < N; ++p) {
        if (Fp_->is_zero(x[p])) continue;
        for (int q = 0; q < N; ++q) {
            if (Fp_->is_zero(y[q])) continue;
            axpy(*Fp_, out, Fp_->mul(x[p], y[q]), table_[p][q]);
        }
    }
    return out;
}

template <class B>
Matrix<B> StructureAlgebra<B>::left(const Vec& x) const {
    const int N = dim();
    Matrix<B> M(*Fp_, N, N);
    for (int q = 0; q < N; ++q) {
        auto col = mul(x, unit_vector(*Fp_, N, q));
        for (int r = 0; r < N; ++r) M(r, q) = col[r];
    }
    return M;
}

template <class B>
Matrix<B> StructureAlgebra<B>::right(const Vec& x) const {
    const int N = dim();
    Matrix<B> M(*Fp_, N, N);
    for (int q = 0; q < N; ++q) {
        auto col = mul(unit_vector(*Fp_, N, q), x);
        for (int r = 0; r < N; ++r) M(r, q) = col[r];
    }
    return M;
}

template <class B>
StructureAlgebra<B> StructureAlgebra<B>::opposite() const {
    const int N = dim();
    std::vector<std::vector<Vec>> table(N, std::vector<Vec>(N));
    for (int p = 0; p < N; ++p)
        for (int q = 0; q < N; ++q) table[p][q] = table_[q][p];
    return StructureAlgebra(*Fp_, std::move(table));
}

template <class B>
std::optional<StructureAlgebra<B>> StructureAlgebra<B>::unital_isotope(const Vec& e) const {
    auto Linv = inverse(left(e));
    auto Rinv = inverse(right(e));
    if (!Linv || !Rinv) return std::nullopt;
    const int N = dim();
    std::vector<Vec> rcols, lcols;
    for (int p = 0; p < N; ++p) {
        rcols.push_back(Rinv->apply(unit_vector(*Fp_, N, p)));
        lcols.push_back(Linv->apply(unit_vector(*Fp_, N, p)));
    }
    std::vector<std::vector<Vec>> table(N);
    for (int p = 0; p < N; ++p)
        for (int q = 0; q < N; ++q) table[p].push_back(mul(rcols[p], lcols[q]));
    return StructureAlgebra(*Fp_, std::move(table));
}

template <class B>
auto StructureAlgebra<B>::unit() const -> std::optional<Vec> {
    // u e_q = e_q and e_q u = e_q for every q.
    const int N = dim();
    Matrix<B> A(*Fp_, 2 * N * N, N);
    Vec rhs(2 * N * N, Fp_->zero());
    for (int q = 0; q < N; ++q)
        for (int r = 0; r < N; ++r) {
            const int row = q * N + r;
            for (int p = 0; p < N; ++p) {
                A(row, p) = table_[p][q][r];
                A(N * N + row, p) = table_[q][p][r];
            }
            if (q == r) rhs[row] = rhs[N * N + row] = Fp_->one();
        }
    return solve(std::move(A), rhs);
}

template <class B>
NucleiReport<B> nuclei(const StructureAlgebra<B>& A) {
    using Vec = std::vector<Elem<B>>;
    const auto& F = A.field();
    const int N = A.dim();
    std::vector<Vec> e;
    for (int p = 0; p < N; ++p) e.push_back(unit_vector(F, N, p));
    std::vector<Vec> prod(N * N);
    for (int p = 0; p < N; ++p)
        for (int q = 0; q < N; ++q) prod[p * N + q] = A.mul(e[p], e[q]);
    // assoc[(p*N + q)*N + r] = (e_p e_q) e_r - e_p (e_q e_r)
    std::vector<Vec> assoc(static_cast<std::size_t>(N) * N * N);
    for (int p = 0; p < N; ++p)
        for (int q = 0; q < N; ++q)
            for (int r = 0; r < N; ++r) {
                auto lhs = A.mul(prod[p * N + q], e[r]);
                auto rhs = A.mul(e[p], prod[q * N + r]);
                for (int i = 0; i < N; ++i) lhs[i] = F.sub(lhs[i], rhs[i]);
                assoc[(static_cast<std::size_t>(p) * N + q) * N + r] = std::move(lhs);
            }
    auto at = [&](int p, int q, int r) -> const Vec& { return assoc[(static_cast<std::size_t>(p) * N + q) * N + r]; };

    // One block of N*N*N rows per condition; column p holds the coefficient of x_p.
    enum Slot { Left, Middle, Right };
    auto fill_assoc = [&](Matrix<B>& M, int offset, Slot slot) {
        for (int a = 0; a < N; ++a)
            for (int b = 0; b < N; ++b)
                for (int p = 0; p < N; ++p) {
                    const Vec& v = slot == Left ? at(p, a, b) : slot == Middle ? at(a, p, b) : at(a, b, p);
                    for (int i = 0; i < N; ++i) M(offset + (a * N + b) * N + i, p) = v[i];
                }
    };
    const int block = N * N * N;
    NucleiReport<B> rep;
    for (Slot slot : {Left, Middle, Right}) {
        Matrix<B> M(F, block, N);
        fill_assoc(M, 0, slot);
        (slot == Left ? rep.left : slot == Middle ? rep.middle : rep.right) = nullspace(std::move(M));
    }
    Matrix<B> M(F, 3 * block + N * N, N);
    fill_assoc(M, 0, Left);
    fill_assoc(M, block, Middle);
    fill_assoc(M, 2 * block, Right);
    for (int q = 0; q < N; ++q)
        for (int p = 0; p < N; ++p)
            for (int i = 0; i < N; ++i)
                M(3 * block + q * N + i, p) = F.sub(prod[p * N + q][i], prod[q * N + p][i]);
    rep.center = nullspace(std::move(M));
    return rep;
}

template <class B>
NucleiReport<B> nuclei(const CodeSpec<B>& spec) {
    auto A = StructureAlgebra<B>::from_spec(spec);
    if (A.unit()) return nuclei(A);
    auto iso = A.unital_isotope(algebra_coords(spec, spec.ctx.ring().one()));
    require(iso.has_value(), ErrorKind::PreconditionFailed, "1 is a zero divisor, no unital isotope at e = 1");
    auto rep = nuclei(*iso);
    rep.isotope = true;
    return rep;
}

template <class B>
IdealiserReport<B> idealisers(const Field<B>& F, const std::vector<Matrix<B>>& gens) {
    require(!gens.empty(), ErrorKind::EmptyCode, "spread set has no generators");
    const int N = gens.front().rows();
    const int NN = N * N;
    for (const auto& g : gens)
        require(g.rows() == N && g.cols() == N, ErrorKind::ShapeMismatch, "generators must be square of equal size");
    // Rows of W span the annihilator of span(gens) in F^{N x N}.
    Matrix<B> S(F, static_cast<int>(gens.size()), NN);
    for (std::size_t g = 0; g < gens.size(); ++g)
        for (int r = 0; r < N; ++r)
            for (int c = 0; c < N; ++c) S(static_cast<int>(g), r * N + c) = gens[g](r, c);
    auto W = nullspace(std::move(S));
    const int G = static_cast<int>(gens.size());
    const int nw = static_cast<int>(W.size());

    // Phi M_g in span: sum_{ij} w_ij sum_c Phi_ic M_g(c,j) = 0.
    auto left_rows = [&](Matrix<B>& M, int offset) {
        for (int g = 0; g < G; ++g)
            for (int w = 0; w < nw; ++w) {
                const int row = offset + g * nw + w;
                for (int i = 0; i < N; ++i)
                    for (int c = 0; c < N; ++c) {
                        auto acc = F.zero();
                        for (int j = 0; j < N; ++j)
                            if (!F.is_zero(W[w][i * N + j])) F.add_into(acc, F.mul(W[w][i * N + j], gens[g](c, j)));
                        M(row, i * N + c) = acc;
                    }
            }
    };
    // M_g Phi in span: sum_{ij} w_ij sum_r M_g(i,r) Phi_rj = 0.
    auto right_rows = [&](Matrix<B>& M, int offset) {
        for (int g = 0; g < G; ++g)
            for (int w = 0; w < nw; ++w) {
                const int row = offset + g * nw + w;
                for (int r = 0; r < N; ++r)
                    for (int j = 0; j < N; ++j) {
                        auto acc = F.zero();
                        for (int i = 0; i < N; ++i)
                            if (!F.is_zero(W[w][i * N + j])) F.add_into(acc, F.mul(W[w][i * N + j], gens[g](i, r)));
                        M(row, r * N + j) = acc;
                    }
            }
    };
    // Phi M_g - M_g Phi = 0.
    auto commute_rows = [&](Matrix<B>& M, int offset) {
        for (int g = 0; g < G; ++g)
            for (int i = 0; i < N; ++i)
                for (int j = 0; j < N; ++j) {
                    const int row = offset + (g * N + i) * N + j;
                    for (int c = 0; c < N; ++c) F.add_into(M(row, i * N + c), gens[g](c, j));
                    for (int r = 0; r < N; ++r) M(row, r * N + j) = F.sub(M(row, r * N + j), gens[g](i, r));
                }
    };

    IdealiserReport<B> rep;
    {
        Matrix<B> M(F, G * nw, NN);
        left_rows(M, 0);
        rep.left = to_matrices(F, N, nullspace(std::move(M)));
    }
    {
        Matrix<B> M(F, G * nw, NN);
        right_rows(M, 0);
        rep.right = to_matrices(F, N, nullspace(std::move(M)));
    }
    {
        Matrix<B> M(F, G * NN, NN);
        commute_rows(M, 0);
        rep.centraliser = to_matrices(F, N, nullspace(std::move(M)));
    }
    {
        Matrix<B> M(F, G * nw + G * NN, NN);
        left_rows(M, 0);
        commute_rows(M, G * nw);
        rep.centre = to_matrices(F, N, nullspace(std::move(M)));
    }
    return rep;
}

template <class B>
std::vector<Matrix<B>> flatten_spread(const CodeSpec<B>& spec, const SpreadSet<B>& set) {
    require(!set.matrices.empty(), ErrorKind::EmptyCode, "spread set has no matrices");
    const auto& Fp = *spec.Fprime;
    const Field<B>& Eh = set.matrices.front().field();
    const int k = set.matrices.front().rows();
    const int w = Eh.index_over(Fp);
    const int N = k * w;
    std::vector<Elem<B>> omega;
    for (int j = 0; j < w; ++j) omega.push_back(Eh.from_coordinates(Fp, unit_vector(Fp, w, j)));
    std::vector<Matrix<B>> out;
    for (const auto& M : set.matrices) {
        Matrix<B> G(Fp, N, N);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < w; ++j)
                for (int r = 0; r < k; ++r) {
                    auto c = Eh.coordinates_over(Fp, Eh.mul(M(r, i), omega[j]));
                    for (int t = 0; t < w; ++t) G(r * w + t, i * w + j) = c[t];
                }
        out.push_back(std::move(G));
    }
    return out;
}

template <class B>
std::vector<Matrix<B>> left_spread(const StructureAlgebra<B>& A) {
    std::vector<Matrix<B>> out;
    for (int p = 0; p < A.dim(); ++p) out.push_back(A.left(unit_vector(A.field(), A.dim(), p)));
    return out;
}

template <class B>
std::optional<std::pair<SkewPoly<B>, SkewPoly<B>>> zero_divisor_pair_scan(const CodeSpec<B>& spec,
                                                                        std::uint64_t budget) {
    require_algebra(spec);
    const auto A = StructureAlgebra<B>::from_spec(spec);
    const auto& Fp = A.field();
    const std::uint64_t total = algebra_size(Fp, A.dim(), budget);
    require(total <= budget / total, ErrorKind::BudgetExceeded, "pair scan exceeds the budget");
    const auto elems = all_elements(Fp, A.dim(), total);
    for (std::uint64_t i = 1; i < total; ++i) {
        const auto L = A.left(elems[i]);
        for (std::uint64_t j = 1; j < total; ++j) {
            auto v = L.apply(elems[j]);
            bool zero = true;
            for (const auto& x : v) zero = zero && Fp.is_zero(x);
            if (zero) return std::make_pair(algebra_element(spec, elems[i]), algebra_element(spec, elems[j]));
        }
    }
    return std::nullopt;
}

template <class B>
std::optional<std::pair<SkewPoly<B>, SkewPoly<B>>> singular_left_scan(const CodeSpec<B>& spec,
                                                                    std::uint64_t budget) {
    require_algebra(spec);
    const auto A = StructureAlgebra<B>::from_spec(spec);
    const auto& Fp = A.field();
    const std::uint64_t total = algebra_size(Fp, A.dim(), budget);
    require(total <= budget, ErrorKind::BudgetExceeded, "rank scan exceeds the budget");
    const auto elems = all_elements(Fp, A.dim(), total);
    for (std::uint64_t i = 1; i < total; ++i) {
        auto ker = nullspace(A.left(elems[i]));
        if (!ker.empty()) return std::make_pair(algebra_element(spec, elems[i]), algebra_element(spec, ker.front()));
    }
    return std::nullopt;
}

template <class B>
DivisionCertificate<B> check_division(const CodeSpec<B>& spec, const DivisionOptions& options) {
    require_algebra(spec);
    const auto& ctx = spec.ctx;
    DivisionCertificate<B> cert;
    auto accept = [&](const char* by) {
        cert.verdict = DivisionVerdict::Division;
        cert.by = by;
        return cert;
    };
    if (options.criteria) {
        if (ctx.D().is_zero(spec.nu)) return accept("petit");
        const Field<B>& E = ctx.E();
        const Field<B>& Fp = *spec.Fprime;
        const auto& a0 = spec.f.front();
        if (!spec.report.full_degree) {
            cert.note = "deg h < dmn";
        } else if (ctx.is_field_case()) {
            if (!Fp.is_one(Fp.mul(relative_norm(E, Fp, a0), relative_norm(E, Fp, spec.nu)))) return accept("norm");
            cert.note = "norm product equals 1";
        } else if (!ctx.in_E(spec.f)) {
            cert.note = "f has coefficients outside E";
        } else if (!options.assume_similar_in_E) {
            cert.note = "the E-criteria need the similar-in-E hypothesis";
        } else {
            bool rho_on_E = true;
            for (const auto& g : E.generators())
                rho_on_E = rho_on_E && ctx.restrict_to(E, spec.rho.apply(ctx.lift(E, g))).has_value();
            auto nu_E = ctx.restrict_to(E, spec.nu);
            if (!rho_on_E) {
                cert.note = "rho does not preserve E";
            } else if (!nu_E) {
                return accept("nu-outside-E");
            } else {
                auto lhs = Fp.mul(relative_norm(E, Fp, *ctx.restrict_to(E, a0)), relative_norm(E, Fp, *nu_E));
                if (!Fp.is_one(lhs)) return accept("norm");
                cert.note = "norm product equals 1";
            }
        }
    }
    if (!spec.Fprime->is_finite()) {
        cert.by = "unknown";
        return cert;
    }
    const int N = spec.m() * (ctx.D().dimension() / spec.Fprime->dimension());
    const std::uint64_t total = algebra_size(*spec.Fprime, N, options.budget);
    if (total > options.budget) {
        cert.by = "unknown";
        cert.note = "exhaustive scan exceeds the budget";
        return cert;
    }
    const bool pairs = total <= (1u << 10);
    cert.zero_divisors = pairs ? zero_divisor_pair_scan(spec, total * total) : singular_left_scan(spec, total);
    cert.by = pairs ? "pair-scan" : "rank-scan";
    cert.verdict = cert.zero_divisors ? DivisionVerdict::NotDivision : DivisionVerdict::Division;
    return cert;
}

template <class B>
bool is_right_invariant(const RingContext<B>& ctx, const SkewPoly<B>& f) {
    const auto& R = ctx.ring();
    if (!R.is_zero(R.mod_r(R.mul(f, R.t_power(1)), f))) return false;
    for (const auto& g : ctx.D().generators())
        if (!R.is_zero(R.mod_r(R.mul(f, R.constant(g)), f))) return false;
    return true;
}

template <class B>
DivisorNormLaw<B> divisor_norm_law(const RingContext<B>& ctx, const MclmReport<B>& report, int l,
                                   std::uint64_t budget) {
    require(ctx.is_field_case(), ErrorKind::PreconditionFailed, "the divisor norm law is stated over a field K");
    require(report.k > 0 && l >= 1 && l <= report.k, ErrorKind::PreconditionFailed, "need 1 <= l <= k");
    const Field<B>& K = ctx.E();
    const Field<B>& F = ctx.F();
    DivisorNormLaw<B> law;
    law.divisors = all_right_divisors(ctx, report.h, l * report.m, budget);
    const auto target = F.pow(relative_norm(K, F, report.f.front()), static_cast<long long>(l));
    for (const auto& g : law.divisors) law.holds = law.holds && F.equal(relative_norm(K, F, g.front()), target);
    return law;
}

#define SKEWMRD_ALGEBRA_INSTANTIATE(B)                                                                          \
    template SkewPoly<B> circ<B>(const CodeSpec<B>&, const SkewPoly<B>&, const SkewPoly<B>&);                  \
    template std::vector<Elem<B>> algebra_coords<B>(const CodeSpec<B>&, const SkewPoly<B>&);                   \
    template SkewPoly<B> algebra_element<B>(const CodeSpec<B>&, const std::vector<Elem<B>>&);                  \
    template class StructureAlgebra<B>;                                                                        \
    template NucleiReport<B> nuclei<B>(const StructureAlgebra<B>&);                                            \
    template NucleiReport<B> nuclei<B>(const CodeSpec<B>&);                                                    \
    template IdealiserReport<B> idealisers<B>(const Field<B>&, const std::vector<Matrix<B>>&);                 \
    template std::vector<Matrix<B>> flatten_spread<B>(const CodeSpec<B>&, const SpreadSet<B>&);                \
    template std::vector<Matrix<B>> left_spread<B>(const StructureAlgebra<B>&);                                \
    template std::optional<std::pair<SkewPoly<B>, SkewPoly<B>>> zero_divisor_pair_scan<B>(const CodeSpec<B>&, \
                                                                                          std::uint64_t);     \
    template std::optional<std::pair<SkewPoly<B>, SkewPoly<B>>> singular_left_scan<B>(const CodeSpec<B>&,     \
                                                                                      std::uint64_t);         \
    template DivisionCertificate<B> check_division<B>(const CodeSpec<B>&, const DivisionOptions&);             \
    template bool is_right_invariant<B>(const RingContext<B>&, const SkewPoly<B>&);                            \
    template DivisorNormLaw<B> divisor_norm_law<B>(const RingContext<B>&, const MclmReport<B>&, int, std::uint64_t);

SKEWMRD_ALGEBRA_INSTANTIATE(PrimeBase)
SKEWMRD_ALGEBRA_INSTANTIATE(RationalBase)

}  // namespace skewmrd
