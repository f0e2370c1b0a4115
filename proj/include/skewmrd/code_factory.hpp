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

#ifndef SKEWMRD_CODE_FACTORY_HPP
#define SKEWMRD_CODE_FACTORY_HPP

#include <functional>
#include <string>
#include <vector>

#include "central.hpp"
#include "linalg.hpp"

namespace skewmrd {

/*
 * Parameters of the space A = { d_0 + ... + d_{lm-1} t^{lm-1} + nu rho(d_0) t^{lm} }
 * built from an irreducible f, together with F' = Fix(rho) ∩ F.
 */
template <class B>
struct CodeSpec {
    RingContext<B> ctx;
    SkewPoly<B> f;
    int l = 1;
    Elem<B> nu;
    Automorphism<B> rho;
    MclmReport<B> report;
    const Field<B>* Fprime = nullptr;

    int m() const noexcept { return report.m; }
    int k() const noexcept { return report.k; }
    int s() const noexcept { return report.s; }
    int n() const noexcept { return ctx.n(); }
    int d() const noexcept { return ctx.d(); }
    /// [F : F'].
    int f_over_fprime() const { return ctx.F().index_over(*Fprime); }
    /// Number of F'-coordinates of an element of A.
    int dim_A() const { return l * m() * (ctx.D().dimension() / Fprime->dimension()); }
};

/// Checks the standing hypotheses (f monic irreducible of degree > 1, coprime
/// to t, 0 < l < k) and computes the mclm report once.
template <class B>
CodeSpec<B> make_code_spec(RingContext<B> ctx, SkewPoly<B> f, int l, Elem<B> nu, Automorphism<B> rho,
                           std::uint64_t budget = 1u << 20);

template <class B>
SkewPoly<B> build_A_element(const CodeSpec<B>& spec, const std::vector<Elem<B>>& d);

/// The F'-basis of A in coordinate order: position-major, then the F'-basis of D.
template <class B>
std::vector<SkewPoly<B>> A_generators(const CodeSpec<B>& spec);

/// sum_p c_p a^(p) for F'-coordinates c.
template <class B>
SkewPoly<B> A_from_coordinates(const CodeSpec<B>& spec, const std::vector<Elem<B>>& c);

/*
 * A basis b_1..b_k of V_f = R/Rf as a right E_f-module, where E_f acts through
 * z = zhat(u^{-1} t^n). Residues are picked greedily from beta t^j (beta running
 * over an F-basis of D, j = 0, 1, ...) and the coordinates are read off with
 * one inverse matrix over F whose columns are the residues b_i X^e.
 */
template <class B>
class VfBasis {
   public:
    static VfBasis build(const CodeSpec<B>& spec);

    int k() const noexcept { return static_cast<int>(residues_.size()); }
    const std::vector<SkewPoly<B>>& residues() const noexcept { return residues_; }
    /// (j, beta index) of each residue beta t^j.
    const std::vector<std::pair<int, int>>& labels() const noexcept { return labels_; }
    const Field<B>& ehat() const noexcept { return *ehat_; }
    const FieldPtr<B>& ehat_ptr() const noexcept { return ehat_; }

    /// E_hhat-coordinates of v + Rf.
    std::vector<Elem<B>> coordinates(const SkewPoly<B>& v) const;
    /// sum_i b_i zhat_i(X) mod_r f.
    SkewPoly<B> from_coordinates(const std::vector<Elem<B>>& c) const;
    /// Right action of an element of E_hhat on V_f.
    SkewPoly<B> act(const SkewPoly<B>& v, const Elem<B>& z) const;

   private:
    VfBasis(const CodeSpec<B>& spec) : ctx_(spec.ctx), f_(spec.f), P_(spec.ctx.F(), 0, 0) {}

    RingContext<B> ctx_;
    SkewPoly<B> f_;
    FieldPtr<B> ehat_;
    std::vector<SkewPoly<B>> residues_;
    std::vector<std::pair<int, int>> labels_;
    SkewPoly<B> X_;
    int width_ = 0;
    Matrix<B> P_;  // inverse of the coordinate matrix
};

/// Matrix over E_hhat of v -> a v mod_r f; needs deg a < deg h.
template <class B>
Matrix<B> matrix_of(const CodeSpec<B>& spec, const VfBasis<B>& basis, const SkewPoly<B>& a);

template <class B>
struct SpreadSet {
    std::vector<SkewPoly<B>> generators;
    std::vector<Matrix<B>> matrices;
};

template <class B>
SpreadSet<B> spread_set(const CodeSpec<B>& spec, const VfBasis<B>& basis);

/// sum_p c_p M_p for F'-coordinates c.
template <class B>
Matrix<B> combine(const CodeSpec<B>& spec, const SpreadSet<B>& set, const std::vector<Elem<B>>& c);

/// F'-coordinates of the codeword with the given enumeration index (little-endian digits).
template <class B>
std::vector<Elem<B>> codeword_coordinates(const CodeSpec<B>& spec, std::uint64_t index);

/// Number of codewords |F'|^dim_A, or BudgetExceeded when it exceeds the budget.
template <class B>
std::uint64_t code_size(const CodeSpec<B>& spec, std::uint64_t budget);

/// Visits codewords in index order. Stops after `budget` of them and throws
/// BudgetExceeded with the progress when the code is larger.
template <class B>
std::uint64_t enumerate_code(const CodeSpec<B>& spec, const SpreadSet<B>& set, std::uint64_t budget,
                             const std::function<void(const std::vector<Elem<B>>&, const Matrix<B>&)>& visit);

/*
 * Closed form of M_a for f = t^n - theta over K = F(theta), m = n, l = 1:
 * entry (r, c) is sigma^{-r}(a_{(r-c) mod n}), times theta above the
 * diagonal, and the diagonal gains sigma^{-r}(nu rho(a_0)) theta.
 * Entries are mapped into E_hhat through x <-> theta.
 */
template <class B>
Matrix<B> tn_theta_matrix(const RingContext<B>& ctx, const Field<B>& ehat, const std::vector<Elem<B>>& a,
                          const Elem<B>& theta, const Elem<B>& nu, const Automorphism<B>& rho);

/// The same closed form as LaTeX source with symbolic a_i = z_i. `sigma` renders
/// sigma^p applied to an argument.
std::vector<std::vector<std::string>> tn_theta_latex(int n, const std::string& theta,
                                                     const std::function<std::string(int, const std::string&)>& sigma);

}  // namespace skewmrd

#endif
