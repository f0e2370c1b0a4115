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

#include "skewmrd/skew_poly.hpp"

#include <cctype>

namespace skewmrd {

template <class B>
SkewRing<B>::SkewRing(Automorphism<B> sigma) : sigma_(std::move(sigma)) {
    require(sigma_.order_mod_inner() > 0, ErrorKind::PreconditionFailed,
            "sigma must have finite order modulo inner automorphisms");
}

template <class B>
SkewRing<B>::SkewRing(Automorphism<B> sigma, const std::vector<Element>& delta_images) : SkewRing(std::move(sigma)) {
    const auto& R = coeffs();
    auto gens = R.generators();
    require(delta_images.size() == gens.size(), ErrorKind::LengthMismatch, "delta needs one value per generator");
    bool all_zero = true;
    for (const auto& v : delta_images) {
        R.check(v);
        all_zero = all_zero && R.is_zero(v);
    }
    if (all_zero) return;
    // extend by the sigma-Leibniz rule along each basis monomial m = g_1 g_1 ... g_r
    const int n = R.dimension();
    auto cols = std::make_shared<std::vector<std::vector<typename B::value_type>>>(n);
    for (int i = 0; i < n; ++i) {
        auto exps = R.monomial(i);
        Element m = R.one(), dm = R.zero();
        for (std::size_t g = 0; g < exps.size(); ++g)
            for (int k = 0; k < exps[g]; ++k) {
                dm = R.add(R.mul(sigma_.apply(m), delta_images[g]), R.mul(dm, gens[g]));
                m = R.mul(m, gens[g]);
            }
        (*cols)[i].assign(dm.begin(), dm.end());
    }
    delta_ = cols;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            auto a = R.basis(i), b = R.basis(j);
            auto lhs = apply_delta(R.mul(a, b));
            auto rhs = R.add(R.mul(sigma_.apply(a), apply_delta(b)), R.mul(apply_delta(a), b));
            require(R.equal(lhs, rhs), ErrorKind::PreconditionFailed, "delta is not a sigma-derivation");
        }
}

template <class B>
void SkewRing<B>::require_no_delta(const char* what) const {
    require(!has_delta(), ErrorKind::DeltaUnsupported, std::string(what) + " requires delta = 0");
}

template <class B>
typename SkewRing<B>::Element SkewRing<B>::apply_delta(const Element& x) const {
    const auto& R = coeffs();
    R.check(x);
    if (!delta_) return R.zero();
    const B& D = R.domain();
    Element r = R.zero();
    for (int j = 0; j < R.dimension(); ++j) {
        if (D.is_zero(x[j])) continue;
        for (int i = 0; i < R.dimension(); ++i) r[i] = D.add(r[i], D.mul(x[j], (*delta_)[j][i]));
    }
    return r;
}

template <class B>
void SkewRing<B>::trim(Poly& p) const {
    while (!p.empty() && coeffs().is_zero(p.back())) p.pop_back();
}

template <class B>
typename SkewRing<B>::Poly SkewRing<B>::constant(const Element& c) const {
    coeffs().check(c);
    return trimmed(Poly{c});
}

template <class B>
typename SkewRing<B>::Poly SkewRing<B>::monomial(const Element& c, int k) const {
    coeffs().check(c);
    if (coeffs().is_zero(c)) return {};
    Poly p(k + 1, coeffs().zero());
    p[k] = c;
    return p;
}

template <class B>
typename SkewRing<B>::Poly SkewRing<B>::t_power(int k) const {
    return monomial(coeffs().one(), k);
}

template <class B>
typename SkewRing<B>::Poly SkewRing<B>::central_power(int k) const {
    Poly x = monomial(coeffs().inv(u()), n());
    Poly r = one();
    for (int i = 0; i < k; ++i) r = mul(r, x);
    return r;
}

template <class B>
bool SkewRing<B>::equal(const Poly& a, const Poly& b) const {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!coeffs().equal(a[i], b[i])) return false;
    return true;
}

template <class B>
const typename SkewRing<B>::Element& SkewRing<B>::lead(const Poly& p) const {
    require(!p.empty(), ErrorKind::ZeroOperand, "leading coefficient of the zero polynomial");
    return p.back();
}

template <class B>
typename SkewRing<B>::Element SkewRing<B>::coeff(const Poly& p, int i) const {
    return i >= 0 && i < static_cast<int>(p.size()) ? p[i] : coeffs().zero();
}

template <class B>
typename SkewRing<B>::Poly SkewRing<B>::add(const Poly& a, const Poly& b) const {
    const auto& R = coeffs();
    Poly r(std::max(a.size(), b.size()), R.zero());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) R.add_into(r[i], b[i]);
    trim(r);
    return r;
}

template <class B>
typename SkewRing<B>::Poly SkewRing<B>::sub(const Poly& a, const Poly& b) const {
    const auto& R = coeffs();
    Poly r(std::max(a.size(), b.size()), R.zero());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = R.sub(r[i], b[i]);
    trim(r);
    return r;
}

template <class B>
typename SkewRing<B>::Poly SkewRing<B>::neg(const Poly& a) const {
    Poly r;
    r.reserve(a.size());
    for (const auto& c : a) r.push_back(coeffs().neg(c));
    return r;
}

template <class B>
typename SkewRing<B>::Poly SkewRing<B>::mul_t_left(const Poly& p) const {
    // t * sum b_j t^j = sum sigma(b_j) t^(j+1) + delta(b_j) t^j
    const auto& R = coeffs();
    Poly r(p.size() + 1, R.zero());
    for (std::size_t j = 0; j < p.size(); ++j) {
        R.add_into(r[j + 1], sigma_.apply(p[j]));
        if (delta_) R.add_into(r[j], apply_delta(p[j]));
    }
    trim(r);
    return r;
}

template <class B>
typename SkewRing<B>::Poly SkewRing<B>::mul(const Poly& a, const Poly& b) const {
    const auto& R = coeffs();
    if (a.empty() || b.empty()) return {};
    if (!delta_) {
        // a_i t^i b_j t^j = a_i sigma^i(b_j) t^(i+j)
        Poly r(a.size() + b.size() - 1, R.zero());
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (R.is_zero(a[i])) continue;
            for (std::size_t j = 0; j < b.size(); ++j) {
                if (R.is_zero(b[j])) continue;
                R.add_into(r[i + j], R.mul(a[i], sigma_.apply(b[j], static_cast<long long>(i))));
            }
        }
        trim(r);
        return r;
    }
    Poly r, tb = b;  // tb = t^i * b
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i > 0) tb = mul_t_left(tb);
        if (!R.is_zero(a[i])) r = add(r, scale_left(a[i], tb));
    }
    return r;
}

template <class B>
typename SkewRing<B>::Poly SkewRing<B>::scale_left(const Element& c, const Poly& p) const {
    Poly r;
    r.reserve(p.size());
    for (const auto& x : p) r.push_back(coeffs().mul(c, x));
    trim(r);
    return r;
}

template <class B>
typename SkewRing<B>::Poly SkewRing<B>::monic(const Poly& p) const {
    if (p.empty()) return p;
    return scale_left(coeffs().inv(p.back()), p);
}

template <class B>
void SkewRing<B>::right_divmod(const Poly& g, const Poly& f, Poly& q, Poly& r) const {
    require(!f.empty(), ErrorKind::DivisionByZero, "right division by the zero polynomial");
    const auto& R = coeffs();
    const int m = degree(f);
    r = trimmed(g);
    q.assign(r.size() > f.size() - 1 ? r.size() - f.size() + 1 : 0, R.zero());
    // cached sigma^k(lc f)^{-1}
    std::vector<Element> lead_inv(q.size());
    for (std::size_t k = 0; k < q.size(); ++k) lead_inv[k] = R.inv(sigma_.apply(f.back(), static_cast<long long>(k)));
    while (degree(r) >= m) {
        int k = degree(r) - m;
        auto c = R.mul(r.back(), lead_inv[k]);
        q[k] = R.add(q[k], c);
        Poly s = mul(monomial(c, k), f);
        r = sub(r, s);
        // the leading term cancels exactly; guard against a non-decreasing loop
        require(degree(r) < k + m, ErrorKind::PreconditionFailed, "right division did not reduce the degree");
    }
    trim(q);
}

template <class B>
void SkewRing<B>::left_divmod(const Poly& g, const Poly& f, Poly& q, Poly& r) const {
    require(!f.empty(), ErrorKind::DivisionByZero, "left division by the zero polynomial");
    const auto& R = coeffs();
    const int m = degree(f);
    r = trimmed(g);
    q.assign(r.size() > f.size() - 1 ? r.size() - f.size() + 1 : 0, R.zero());
    auto lead_inv = R.inv(f.back());
    while (degree(r) >= m) {
        int k = degree(r) - m;
        // f * c t^k has leading coefficient lc(f) sigma^m(c)
        auto c = sigma_.apply(R.mul(lead_inv, r.back()), -static_cast<long long>(m));
        q[k] = R.add(q[k], c);
        r = sub(r, mul(f, monomial(c, k)));
        require(degree(r) < k + m, ErrorKind::PreconditionFailed, "left division did not reduce the degree");
    }
    trim(q);
}

template <class B>
typename SkewRing<B>::Poly SkewRing<B>::mod_r(const Poly& g, const Poly& f) const {
    Poly q, r;
    right_divmod(g, f, q, r);
    return r;
}

template <class B>
typename SkewRing<B>::Poly SkewRing<B>::mod_l(const Poly& g, const Poly& f) const {
    Poly q, r;
    left_divmod(g, f, q, r);
    return r;
}

template <class B>
typename SkewRing<B>::Poly SkewRing<B>::gcrd(const Poly& a0, const Poly& b0) const {
    Poly a = trimmed(a0), b = trimmed(b0);
    require(!(a.empty() && b.empty()), ErrorKind::BothZero, "gcrd(0, 0) is undefined");
    while (!b.empty()) {
        Poly r = mod_r(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

template <class B>
typename SkewRing<B>::Poly SkewRing<B>::lclm(const Poly& a0, const Poly& b0) const {
    Poly a = trimmed(a0), b = trimmed(b0);
    require(!a.empty() && !b.empty(), ErrorKind::ZeroOperand, "lclm needs nonzero operands");
    // r_i = s_i a + t_i b; at termination s_{N+1} a = -t_{N+1} b is the lclm
    Poly r0 = a, r1 = b, s0 = one(), s1 = zero();
    while (!r1.empty()) {
        Poly q, r;
        right_divmod(r0, r1, q, r);
        Poly s = sub(s0, mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    return monic(mul(s1, a));
}

template <class B>
std::string SkewRing<B>::format(const Poly& p) const {
    if (p.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) out += ',';
        out += coeffs().format(p[i]);
    }
    return out;
}

template <class B>
typename SkewRing<B>::Poly SkewRing<B>::parse(std::string_view text) const {
    Poly p;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = text.find(',', start);
        auto token = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        p.push_back(coeffs().parse(token));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    trim(p);
    return p;
}

template class SkewRing<PrimeBase>;
template class SkewRing<RationalBase>;

}  // namespace skewmrd
