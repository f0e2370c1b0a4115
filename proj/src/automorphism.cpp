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

#include "skewmrd/automorphism.hpp"

#include "skewmrd/linalg.hpp"

namespace skewmrd {

namespace {

constexpr int kOrderSearchLimit = 512;

template <class B>
Matrix<B> to_prime_matrix(const Field<B>& P, const std::vector<std::vector<typename B::value_type>>& cols, int rows,
                          int ncols) {
    Matrix<B> M(P, rows, ncols);
    for (int j = 0; j < ncols; ++j)
        for (int i = 0; i < rows; ++i) M(i, j)[0] = cols[j][i];
    return M;
}

}  // namespace

template <class B>
typename Automorphism<B>::Element Automorphism<B>::apply_matrix(const Mat& m, const Element& x) const {
    const B& D = ring_->domain();
    const int n = ring_->dimension();
    Element r = ring_->zero();
    for (int j = 0; j < n; ++j) {
        if (D.is_zero(x[j])) continue;
        const auto& col = m[j];
        for (int i = 0; i < n; ++i)
            if (!D.is_zero(col[i])) r[i] = D.add(r[i], D.mul(x[j], col[i]));
    }
    return r;
}

template <class B>
typename Automorphism<B>::Mat Automorphism<B>::mat_mul(const Mat& a, const Mat& b) const {
    // columns of a*b are a applied to the columns of b
    Mat r(b.size());
    for (std::size_t j = 0; j < b.size(); ++j) {
        Element col(b[j].begin(), b[j].end());
        auto img = apply_matrix(a, col);
        r[j].assign(img.begin(), img.end());
    }
    return r;
}

template <class B>
Automorphism<B> Automorphism<B>::from_matrix(RingPtr ring, Mat m) {
    Automorphism phi;
    phi.ring_ = std::move(ring);
    const int n = phi.ring_->dimension();
    const B& D = phi.ring_->domain();
    Mat id(n, std::vector<Scalar>(n, D.zero()));
    for (int i = 0; i < n; ++i) id[i][i] = D.one();
    auto same = [&](const Mat& x, const Mat& y) {
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < n; ++i)
                if (!D.equal(x[j][i], y[j][i])) return false;
        return true;
    };
    std::vector<Mat> powers{id};
    Mat cur = m;
    for (int j = 1; j <= kOrderSearchLimit; ++j) {
        if (same(cur, id)) {
            phi.order_ = j;
            break;
        }
        powers.push_back(cur);
        cur = phi.mat_mul(m, cur);
    }
    phi.forward_ = std::make_shared<const Mat>(m);
    if (phi.order_ > 0) {
        phi.backward_ = std::make_shared<const Mat>(powers[phi.order_ - 1]);
        powers.resize(phi.order_);
        phi.powers_ = std::make_shared<const std::vector<Mat>>(std::move(powers));
    } else {
        auto P = Field<B>::prime(D, "prime");
        auto inv = skewmrd::inverse(to_prime_matrix<B>(*P, m, n, n));
        require(inv.has_value(), ErrorKind::PreconditionFailed, "automorphism matrix is singular");
        Mat back(n, std::vector<Scalar>(n));
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < n; ++i) back[j][i] = (*inv)(i, j)[0];
        phi.backward_ = std::make_shared<const Mat>(std::move(back));
    }
    phi.n_ = phi.order_;
    phi.u_ = phi.ring_->one();
    return phi;
}

template <class B>
Automorphism<B> Automorphism<B>::from_images(RingPtr ring, const std::vector<Element>& images) {
    const auto& R = *ring;
    auto gens = R.generators();
    require(images.size() == gens.size(), ErrorKind::LengthMismatch,
            "automorphism of " + R.name() + " needs " + std::to_string(gens.size()) + " generator images");
    for (const auto& x : images) R.check(x);
    const int n = R.dimension();
    Mat m(n);
    std::vector<Element> basis_img(n);
    for (int i = 0; i < n; ++i) {
        auto exps = R.monomial(i);
        Element img = R.one();
        for (std::size_t g = 0; g < exps.size(); ++g)
            for (int k = 0; k < exps[g]; ++k) img = R.mul(img, images[g]);
        basis_img[i] = img;
        m[i].assign(img.begin(), img.end());
    }
    auto P = Field<B>::prime(R.domain(), "prime");
    require(rank(to_prime_matrix<B>(*P, m, n, n)) == n, ErrorKind::PreconditionFailed,
            "generator images do not define a bijection of " + R.name());
    Automorphism phi = from_matrix(ring, m);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            auto lhs = phi.apply(R.mul(R.basis(i), R.basis(j)));
            require(R.equal(lhs, R.mul(basis_img[i], basis_img[j])), ErrorKind::PreconditionFailed,
                    "generator images do not define a ring homomorphism of " + R.name());
        }
    return phi;
}

template <class B>
Automorphism<B> Automorphism<B>::identity(RingPtr ring) {
    return from_images(ring, ring->generators());
}

template <class B>
Automorphism<B> Automorphism<B>::frobenius(RingPtr ring, long long exponent) {
    const auto* F = dynamic_cast<const Field<B>*>(ring.get());
    require(F != nullptr && F->is_finite(), ErrorKind::PreconditionFailed, "Frobenius needs a finite field");
    long long dim = F->dimension();
    long long e = ((exponent % dim) + dim) % dim;
    mpz_class q;
    mpz_ui_pow_ui(q.get_mpz_t(), F->domain().characteristic(), static_cast<unsigned long>(e));
    std::vector<Element> images;
    for (const auto& g : F->generators()) images.push_back(F->pow(g, q));
    return from_images(ring, images);
}

template <class B>
typename Automorphism<B>::Element Automorphism<B>::apply(const Element& x, long long power) const {
    ring_->check(x);
    if (order_ > 0) {
        long long k = ((power % order_) + order_) % order_;
        if (k == 0) return x;
        return apply_matrix((*powers_)[k], x);
    }
    Element r = x;
    const Mat& m = power >= 0 ? *forward_ : *backward_;
    for (long long i = 0; i < (power >= 0 ? power : -power); ++i) r = apply_matrix(m, r);
    return r;
}

template <class B>
std::vector<typename Automorphism<B>::Element> Automorphism<B>::images() const {
    std::vector<Element> out;
    for (const auto& g : ring_->generators()) out.push_back(apply(g));
    return out;
}

template <class B>
bool Automorphism<B>::equals(const Automorphism& o) const {
    if (ring_ != o.ring_) return false;
    for (int i = 0; i < ring_->dimension(); ++i)
        if (!ring_->equal(apply(ring_->basis(i)), o.apply(ring_->basis(i)))) return false;
    return true;
}

template <class B>
Automorphism<B> Automorphism<B>::compose(const Automorphism& o) const {
    require(ring_ == o.ring_, ErrorKind::ContextMismatch, "composing automorphisms of different rings");
    return from_matrix(ring_, mat_mul(*forward_, *o.forward_));
}

template <class B>
Automorphism<B> Automorphism<B>::power(long long k) const {
    const int n = ring_->dimension();
    Mat m(n);
    for (int j = 0; j < n; ++j) {
        auto img = apply(ring_->basis(j), k);
        m[j].assign(img.begin(), img.end());
    }
    return from_matrix(ring_, std::move(m));
}

template <class B>
int Automorphism<B>::fixed_dimension_in(const Field<B>& sub) const {
    require(ring_->coefficient_field().contains(sub), ErrorKind::NotInTower,
            sub.name() + " is not in the tower of " + ring_->name());
    const int n = ring_->dimension(), s = sub.dimension();
    auto P = Field<B>::prime(ring_->domain(), "prime");
    Matrix<B> M(*P, n, s);
    for (int j = 0; j < s; ++j) {
        auto img = apply(ring_->basis(j));
        for (int i = 0; i < n; ++i) M(i, j)[0] = img[i];
        M(j, j)[0] = ring_->domain().sub(M(j, j)[0], ring_->domain().one());
    }
    return s - rank(M);
}

template <class B>
bool Automorphism<B>::fixes_pointwise(const Field<B>& sub) const {
    require(ring_->coefficient_field().contains(sub), ErrorKind::NotInTower,
            sub.name() + " is not in the tower of " + ring_->name());
    for (int j = 0; j < sub.dimension(); ++j)
        if (!ring_->equal(apply(ring_->basis(j)), ring_->basis(j))) return false;
    return true;
}

template <class B>
int Automorphism<B>::order_on(const Field<B>& sub) const {
    int limit = order_ > 0 ? order_ : kOrderSearchLimit;
    for (int j = 1; j <= limit; ++j) {
        bool ok = true;
        for (int i = 0; i < sub.dimension() && ok; ++i)
            ok = ring_->equal(apply(ring_->basis(i), j), ring_->basis(i));
        if (ok) return j;
    }
    return 0;
}

template <class B>
Automorphism<B> Automorphism<B>::with_inner(int n, Element u) const {
    const auto& R = *ring_;
    R.check(u);
    require(n > 0, ErrorKind::PreconditionFailed, "order modulo inner automorphisms must be positive");
    require(!R.is_zero(u), ErrorKind::PreconditionFailed, "inner unit u must be nonzero");
    require(R.equal(apply(u), u), ErrorKind::PreconditionFailed, "inner unit u must be fixed by the automorphism");
    auto uinv = R.inv(u);
    for (int i = 0; i < R.dimension(); ++i) {
        auto b = R.basis(i);
        require(R.equal(apply(b, n), R.mul(R.mul(u, b), uinv)), ErrorKind::PreconditionFailed,
                "sigma^" + std::to_string(n) + " is not conjugation by u");
    }
    Automorphism r(*this);
    r.n_ = n;
    r.u_ = std::move(u);
    return r;
}

template class Automorphism<PrimeBase>;
template class Automorphism<RationalBase>;

}  // namespace skewmrd
