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

#include "skewmrd/field.hpp"

#include <type_traits>

#include "skewmrd/field_poly.hpp"
#include "skewmrd/linalg.hpp"

namespace skewmrd {

template <class B>
typename Field<B>::Ptr Field<B>::prime(B domain, std::string name) {
    return Ptr(new Field(std::move(domain), 1, std::move(name)));
}

namespace {

// Characteristic polynomial over Q by Faddeev-LeVerrier, constant term first.
std::vector<mpq_class> charpoly(const std::vector<std::vector<mpq_class>>& A) {
    std::size_t n = A.size();
    std::vector<mpq_class> c(n + 1);
    c[n] = 1;
    std::vector<std::vector<mpq_class>> M(n, std::vector<mpq_class>(n)), AM(n, std::vector<mpq_class>(n));
    for (std::size_t k = 1; k <= n; ++k) {
        // M_k = A M_{k-1} + c_{n-k+1} I, with M_0 = 0
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                mpq_class s = 0;
                for (std::size_t l = 0; l < n; ++l) s += A[i][l] * M[l][j];
                AM[i][j] = s;
            }
        for (std::size_t i = 0; i < n; ++i) AM[i][i] += c[n - k + 1];
        M.swap(AM);
        mpq_class tr = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t l = 0; l < n; ++l) tr += A[i][l] * M[l][i];
        c[n - k] = -tr / static_cast<long>(k);
    }
    return c;
}

}  // namespace

template <class B>
typename Field<B>::Ptr Field<B>::extension(Ptr base, std::vector<Element> modulus, std::string generator_name,
                                           ModulusCheck check) {
    require(base != nullptr, ErrorKind::PreconditionFailed, "extension needs a base field");
    require(modulus.size() >= 2, ErrorKind::PreconditionFailed, "modulus must have degree at least 1");
    for (const auto& c : modulus) base->check(c);
    require(base->is_one(modulus.back()), ErrorKind::PreconditionFailed, "modulus must be monic");
    for (const auto* f : base->chain())
        require(f->is_prime() || f->generator_name() != generator_name, ErrorKind::PreconditionFailed,
                "generator name '" + generator_name + "' already used in the tower");

    int deg = static_cast<int>(modulus.size()) - 1;
    std::string name = base->name() + "(" + generator_name + ")";
    Ptr L(new Field(base->domain(), base->dimension() * deg, name));
    auto* mut = const_cast<Field*>(L.get());
    mut->base_ = base;
    mut->modulus_ = modulus;
    mut->gen_name_ = generator_name;

    if (deg == 1) return L;
    Tristate verdict = Tristate::Unknown;
    if (base->is_finite() || base->is_prime()) {
        verdict = fpoly::is_irreducible<B>(*base, modulus);
    } else if constexpr (std::is_same_v<B, RationalBase>) {
        // L is a field iff some element generates a degree-[L:Q] extension of Q:
        // test the characteristic polynomial of theta = y + c * (lower generators).
        auto gens = L->generators();
        for (int c = 0; c < 4 && verdict != Tristate::Yes; ++c) {
            Element theta = L->generator();
            for (std::size_t g = 0; g + 1 < gens.size(); ++g) theta = L->add(theta, L->scale(mpq_class(c + 1), gens[g]));
            int D = L->dimension();
            std::vector<std::vector<mpq_class>> A(D, std::vector<mpq_class>(D));
            for (int j = 0; j < D; ++j) {
                auto col = L->mul(theta, L->basis(j));
                for (int i = 0; i < D; ++i) A[i][j] = col[i];
            }
            if (fpoly::rational_irreducible(charpoly(A)) == Tristate::Yes) verdict = Tristate::Yes;
        }
    }
    if (verdict == Tristate::No)
        fail(ErrorKind::NotIrreducible, "modulus of " + name + " is reducible over " + base->name());
    if (verdict == Tristate::Unknown && check == ModulusCheck::Verify)
        fail(ErrorKind::NotIrreducible, "could not verify irreducibility of the modulus of " + name);
    return L;
}

template <class B>
std::vector<const Field<B>*> Field<B>::chain() const {
    std::vector<const Field*> c;
    for (const Field* f = this; f; f = f->base_.get()) c.push_back(f);
    return {c.rbegin(), c.rend()};
}

template <class B>
bool Field<B>::contains(const Field& sub) const noexcept {
    for (const Field* f = this; f; f = f->base_.get())
        if (f == &sub) return true;
    return false;
}

template <class B>
int Field<B>::index_over(const Field& sub) const {
    require(contains(sub), ErrorKind::NotInTower, sub.name() + " is not a subfield of " + this->name());
    return this->dimension() / sub.dimension();
}

template <class B>
typename Field<B>::Element Field<B>::mul(const Element& a, const Element& b) const {
    this->check(a);
    this->check(b);
    const B& D = this->domain();
    if (is_prime()) return Element{D.mul(a[0], b[0])};
    const Field& K = *base_;
    const int r = degree(), s = K.dimension();
    auto block = [s](const Element& x, int i) {
        return Element(x.begin() + static_cast<std::ptrdiff_t>(i) * s, x.begin() + static_cast<std::ptrdiff_t>(i + 1) * s);
    };
    std::vector<Element> ab(r), bb(r), prod(2 * r - 1, K.zero());
    for (int i = 0; i < r; ++i) {
        ab[i] = block(a, i);
        bb[i] = block(b, i);
    }
    for (int i = 0; i < r; ++i) {
        if (K.is_zero(ab[i])) continue;
        for (int j = 0; j < r; ++j)
            if (!K.is_zero(bb[j])) K.add_into(prod[i + j], K.mul(ab[i], bb[j]));
    }
    for (int k = 2 * r - 2; k >= r; --k) {
        if (K.is_zero(prod[k])) continue;
        for (int i = 0; i < r; ++i)
            if (!K.is_zero(modulus_[i])) prod[k - r + i] = K.sub(prod[k - r + i], K.mul(prod[k], modulus_[i]));
    }
    Element out;
    out.reserve(a.size());
    for (int i = 0; i < r; ++i) out.insert(out.end(), prod[i].begin(), prod[i].end());
    return out;
}

template <class B>
typename Field<B>::Element Field<B>::inv(const Element& a) const {
    require(!this->is_zero(a), ErrorKind::DivisionByZero, "inverse of zero in " + this->name());
    if (is_prime()) return Element{this->domain().inv(a[0])};
    const Field& K = *base_;
    std::vector<Element> as(degree());
    for (int i = 0; i < degree(); ++i) as[i] = Element(a.begin() + i * K.dimension(), a.begin() + (i + 1) * K.dimension());
    fpoly::trim(K, as);
    auto s = fpoly::inverse_mod<B>(K, as, modulus_);
    std::vector<Element> blocks(s.begin(), s.end());
    blocks.resize(degree(), K.zero());
    return from_coordinates(K, blocks);
}

template <class B>
typename Field<B>::Element Field<B>::pow(const Element& a, const mpz_class& e) const {
    if (e < 0) return pow(inv(a), mpz_class(-e));
    Element r = this->one(), x = a;
    std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = 0; i < bits; ++i) {
        if (mpz_tstbit(e.get_mpz_t(), i)) r = mul(r, x);
        if (i + 1 < bits) x = mul(x, x);
    }
    return r;
}

template <class B>
typename Field<B>::Element Field<B>::pow(const Element& a, long long e) const {
    return pow(a, mpz_class(static_cast<long>(e)));
}

template <class B>
typename Field<B>::Element Field<B>::generator() const {
    if (is_prime()) return this->one();
    return this->basis(base_->dimension());
}

template <class B>
typename Field<B>::Element Field<B>::embed(const Field& sub, const Element& x) const {
    require(contains(sub), ErrorKind::NotInTower, sub.name() + " is not a subfield of " + this->name());
    sub.check(x);
    Element r = this->zero();
    std::copy(x.begin(), x.end(), r.begin());
    return r;
}

template <class B>
std::optional<typename Field<B>::Element> Field<B>::restrict_to(const Field& sub, const Element& x) const {
    require(contains(sub), ErrorKind::NotInTower, sub.name() + " is not a subfield of " + this->name());
    this->check(x);
    for (int i = sub.dimension(); i < this->dimension(); ++i)
        if (!this->domain().is_zero(x[i])) return std::nullopt;
    return Element(x.begin(), x.begin() + sub.dimension());
}

template <class B>
std::vector<typename Field<B>::Element> Field<B>::coordinates_over(const Field& sub, const Element& x) const {
    int r = index_over(sub), s = sub.dimension();
    this->check(x);
    std::vector<Element> out(r);
    for (int i = 0; i < r; ++i) out[i] = Element(x.begin() + i * s, x.begin() + (i + 1) * s);
    return out;
}

template <class B>
typename Field<B>::Element Field<B>::from_coordinates(const Field& sub, const std::vector<Element>& coords) const {
    int r = index_over(sub);
    require(static_cast<int>(coords.size()) == r, ErrorKind::LengthMismatch, "wrong number of coordinates");
    Element out;
    out.reserve(this->dimension());
    for (const auto& c : coords) {
        sub.check(c);
        out.insert(out.end(), c.begin(), c.end());
    }
    return out;
}

template <class B>
typename Field<B>::Element Field<B>::scale_by(const Field& sub, const Element& c, const Element& x) const {
    auto coords = coordinates_over(sub, x);
    for (auto& v : coords) v = sub.mul(c, v);
    return from_coordinates(sub, coords);
}

template <class B>
std::vector<std::string> Field<B>::generator_names() const {
    std::vector<std::string> names;
    for (const auto* f : chain())
        if (!f->is_prime()) names.push_back(f->gen_name_);
    return names;
}

template <class B>
std::vector<typename Field<B>::Element> Field<B>::generators() const {
    std::vector<Element> gens;
    for (const auto* f : chain())
        if (!f->is_prime()) gens.push_back(embed(*f, f->generator()));
    return gens;
}

template <class B>
std::vector<int> Field<B>::monomial(int flat_index) const {
    std::vector<int> exps;
    for (const auto* f : chain()) {
        if (f->is_prime()) continue;
        exps.push_back(flat_index % f->degree());
        flat_index /= f->degree();
    }
    return exps;
}

template class Field<PrimeBase>;
template class Field<RationalBase>;

}  // namespace skewmrd
