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

#include "skewmrd/cyclic_algebra.hpp"

#include "skewmrd/linalg.hpp"

namespace skewmrd {

template <class B>
CyclicAlgebra<B>::CyclicAlgebra(FieldPtr<B> E, FieldPtr<B> C, int d, std::string name)
    : DivisionRing<B>(E->domain(), E->dimension() * d, std::move(name)), E_(std::move(E)), C_(std::move(C)), d_(d) {}

template <class B>
typename CyclicAlgebra<B>::Ptr CyclicAlgebra<B>::make(FieldPtr<B> E, FieldPtr<B> C,
                                                      const std::vector<Element>& gamma_images, Element a,
                                                      std::string generator_name) {
    int d = E->index_over(*C);
    require(d >= 1, ErrorKind::PreconditionFailed, "cyclic algebra needs [E:C] >= 1");
    auto gamma = Automorphism<B>::from_images(E, gamma_images);
    require(gamma.fixes_pointwise(*C), ErrorKind::PreconditionFailed, "gamma must fix C pointwise");
    require(gamma.order() == d, ErrorKind::PreconditionFailed, "gamma must have order [E:C]");
    require(gamma.fixed_dimension_in(*E) == C->dimension(), ErrorKind::PreconditionFailed,
            "the fixed field of gamma must be C");
    C->check(a);
    require(!C->is_zero(a), ErrorKind::PreconditionFailed, "cyclic algebra parameter a must be nonzero");
    for (const auto& n : E->generator_names())
        require(n != generator_name, ErrorKind::PreconditionFailed, "generator name clash: " + generator_name);
    std::string name = "(" + E->name() + "/" + C->name() + ",gamma," + C->format(a) + ")";
    Ptr D(new CyclicAlgebra(E, C, d, name));
    auto* mut = const_cast<CyclicAlgebra*>(D.get());
    mut->gamma_ = std::make_shared<const Automorphism<B>>(std::move(gamma));
    mut->a_ = E->embed(*C, a);
    mut->gen_name_ = std::move(generator_name);
    return D;
}

template <class B>
typename CyclicAlgebra<B>::Element CyclicAlgebra<B>::component(const Element& x, int i) const {
    this->check(x);
    const int s = E_->dimension();
    return Element(x.begin() + i * s, x.begin() + (i + 1) * s);
}

template <class B>
typename CyclicAlgebra<B>::Element CyclicAlgebra<B>::from_components(const std::vector<Element>& parts) const {
    require(static_cast<int>(parts.size()) == d_, ErrorKind::LengthMismatch, "cyclic algebra needs d components");
    Element out;
    out.reserve(this->dimension());
    for (const auto& p : parts) {
        E_->check(p);
        out.insert(out.end(), p.begin(), p.end());
    }
    return out;
}

template <class B>
typename CyclicAlgebra<B>::Element CyclicAlgebra<B>::mul(const Element& x, const Element& y) const {
    this->check(x);
    this->check(y);
    std::vector<Element> xs(d_), ys(d_), out(d_, E_->zero());
    for (int i = 0; i < d_; ++i) {
        xs[i] = component(x, i);
        ys[i] = component(y, i);
    }
    for (int i = 0; i < d_; ++i) {
        if (E_->is_zero(xs[i])) continue;
        for (int j = 0; j < d_; ++j) {
            if (E_->is_zero(ys[j])) continue;
            // x_i e^i y_j e^j = x_i gamma^i(y_j) e^(i+j), and e^d = a is central
            auto t = E_->mul(xs[i], gamma_->apply(ys[j], i));
            int k = i + j;
            if (k >= d_) {
                t = E_->mul(t, a_);
                k -= d_;
            }
            E_->add_into(out[k], t);
        }
    }
    return from_components(out);
}

template <class B>
typename CyclicAlgebra<B>::Element CyclicAlgebra<B>::inv(const Element& x) const {
    require(!this->is_zero(x), ErrorKind::DivisionByZero, "inverse of zero in " + this->name());
    // y -> x y is C-linear; solve x y = 1 in C-coordinates
    const int c = C_->dimension(), n = this->dimension() / c;
    Matrix<B> M(*C_, n, n);
    for (int j = 0; j < n; ++j) {
        auto col = mul(x, this->basis(j * c));
        for (int i = 0; i < n; ++i) M(i, j) = Element(col.begin() + i * c, col.begin() + (i + 1) * c);
    }
    std::vector<Element> rhs(n, C_->zero());
    rhs[0] = C_->one();
    auto sol = solve(M, rhs);
    require(sol.has_value(), ErrorKind::DivisionByZero, "zero divisor in " + this->name());
    Element y;
    for (const auto& v : *sol) y.insert(y.end(), v.begin(), v.end());
    require(this->is_one(mul(x, y)), ErrorKind::DivisionByZero, "zero divisor in " + this->name());
    return y;
}

template <class B>
typename CyclicAlgebra<B>::Element CyclicAlgebra<B>::embed_E(const Element& z) const {
    E_->check(z);
    Element r = this->zero();
    std::copy(z.begin(), z.end(), r.begin());
    return r;
}

template <class B>
std::optional<typename CyclicAlgebra<B>::Element> CyclicAlgebra<B>::restrict_E(const Element& x) const {
    this->check(x);
    for (int i = E_->dimension(); i < this->dimension(); ++i)
        if (!this->domain().is_zero(x[i])) return std::nullopt;
    return component(x, 0);
}

template <class B>
typename CyclicAlgebra<B>::Element CyclicAlgebra<B>::gen_e() const {
    if (d_ == 1) return this->one();
    return this->basis(E_->dimension());
}

template <class B>
std::vector<std::string> CyclicAlgebra<B>::generator_names() const {
    auto names = E_->generator_names();
    names.push_back(gen_name_);
    return names;
}

template <class B>
std::vector<typename CyclicAlgebra<B>::Element> CyclicAlgebra<B>::generators() const {
    std::vector<Element> gens;
    for (const auto& g : E_->generators()) gens.push_back(embed_E(g));
    gens.push_back(gen_e());
    return gens;
}

template <class B>
std::vector<int> CyclicAlgebra<B>::monomial(int flat_index) const {
    auto exps = E_->monomial(flat_index % E_->dimension());
    exps.push_back(flat_index / E_->dimension());
    return exps;
}

template class CyclicAlgebra<PrimeBase>;
template class CyclicAlgebra<RationalBase>;

}  // namespace skewmrd
