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

#include "skewmrd/field_poly.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace skewmrd {

const char* to_string(Tristate t) noexcept {
    switch (t) {
        case Tristate::Yes: return "yes";
        case Tristate::No: return "no";
        default: return "unknown";
    }
}

namespace fpoly {

template <class B>
void trim(const Field<B>& F, Poly<B>& p) {
    while (!p.empty() && F.is_zero(p.back())) p.pop_back();
}

template <class B>
Poly<B> add(const Field<B>& F, const Poly<B>& a, const Poly<B>& b) {
    Poly<B> r(std::max(a.size(), b.size()), F.zero());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) F.add_into(r[i], b[i]);
    trim(F, r);
    return r;
}

template <class B>
Poly<B> sub(const Field<B>& F, const Poly<B>& a, const Poly<B>& b) {
    Poly<B> r(std::max(a.size(), b.size()), F.zero());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = F.sub(r[i], b[i]);
    trim(F, r);
    return r;
}

template <class B>
Poly<B> mul(const Field<B>& F, const Poly<B>& a, const Poly<B>& b) {
    if (a.empty() || b.empty()) return {};
    Poly<B> r(a.size() + b.size() - 1, F.zero());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (F.is_zero(a[i])) continue;
        for (std::size_t j = 0; j < b.size(); ++j) F.add_into(r[i + j], F.mul(a[i], b[j]));
    }
    trim(F, r);
    return r;
}

template <class B>
Poly<B> scale(const Field<B>& F, const Elem<B>& c, const Poly<B>& a) {
    Poly<B> r;
    r.reserve(a.size());
    for (const auto& x : a) r.push_back(F.mul(c, x));
    trim(F, r);
    return r;
}

template <class B>
void divmod(const Field<B>& F, const Poly<B>& a, const Poly<B>& b, Poly<B>& q, Poly<B>& r) {
    require(!b.empty(), ErrorKind::DivisionByZero, "polynomial division by zero");
    r = a;
    trim(F, r);
    q.assign(r.size() >= b.size() ? r.size() - b.size() + 1 : 0, F.zero());
    auto lead_inv = F.inv(b.back());
    while (r.size() >= b.size()) {
        std::size_t shift = r.size() - b.size();
        auto c = F.mul(r.back(), lead_inv);
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) r[shift + i] = F.sub(r[shift + i], F.mul(c, b[i]));
        r.pop_back();
        trim(F, r);
    }
    trim(F, q);
}

template <class B>
Poly<B> mod(const Field<B>& F, const Poly<B>& a, const Poly<B>& b) {
    Poly<B> q, r;
    divmod(F, a, b, q, r);
    return r;
}

template <class B>
Poly<B> monic(const Field<B>& F, const Poly<B>& a) {
    if (a.empty()) return a;
    return scale(F, F.inv(a.back()), a);
}

template <class B>
Poly<B> gcd(const Field<B>& F, Poly<B> a, Poly<B> b) {
    trim(F, a);
    trim(F, b);
    while (!b.empty()) {
        auto r = mod(F, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(F, a);
}

template <class B>
Poly<B> inverse_mod(const Field<B>& F, const Poly<B>& a, const Poly<B>& m) {
    // extended Euclid tracking only the coefficient of a
    Poly<B> r0 = m, r1 = a, s0, s1{F.one()};
    trim(F, r1);
    require(!r1.empty(), ErrorKind::DivisionByZero, "inverse of zero residue");
    r1 = mod(F, r1, m);
    while (!r1.empty()) {
        Poly<B> q, r;
        divmod(F, r0, r1, q, r);
        auto s = sub(F, s0, mul(F, q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    require(r0.size() == 1, ErrorKind::DivisionByZero, "residue is not invertible modulo the given polynomial");
    return mod(F, scale(F, F.inv(r0[0]), s0), m);
}

template <class B>
Poly<B> powmod(const Field<B>& F, const Poly<B>& base, const mpz_class& e, const Poly<B>& m) {
    Poly<B> r{F.one()}, x = mod(F, base, m);
    r = mod(F, r, m);
    std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = 0; i < bits; ++i) {
        if (mpz_tstbit(e.get_mpz_t(), i)) r = mod(F, mul(F, r, x), m);
        if (i + 1 < bits) x = mod(F, mul(F, x, x), m);
    }
    return r;
}

template <class B>
Elem<B> eval(const Field<B>& F, const Poly<B>& p, const Elem<B>& x) {
    Elem<B> acc = F.zero();
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = F.add(F.mul(acc, x), *it);
    return acc;
}

template <class B>
bool equal(const Field<B>& F, const Poly<B>& a, const Poly<B>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!F.equal(a[i], b[i])) return false;
    return true;
}

template <class B>
Poly<B> from_ints(const Field<B>& F, const std::vector<long long>& coeffs) {
    Poly<B> p;
    for (auto c : coeffs) p.push_back(F.from_int(c));
    trim(F, p);
    return p;
}

namespace {

std::vector<int> prime_divisors(int n) {
    std::vector<int> ps;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) {
            ps.push_back(d);
            while (n % d == 0) n /= d;
        }
    if (n > 1) ps.push_back(n);
    return ps;
}

// Rabin: g of degree d is irreducible over F_q iff x^(q^d) = x mod g and
// gcd(x^(q^(d/r)) - x, g) = 1 for every prime r | d.
template <class B>
Tristate rabin(const Field<B>& F, const Poly<B>& g) {
    int d = degree<B>(g);
    mpz_class q = 1;
    for (int i = 0; i < F.dimension(); ++i) q *= F.domain().size();
    Poly<B> x{F.zero(), F.one()};
    std::vector<Poly<B>> frob(d + 1);  // frob[j] = x^(q^j) mod g
    frob[0] = mod(F, x, g);
    for (int j = 1; j <= d; ++j) frob[j] = powmod(F, frob[j - 1], q, g);
    if (!equal(F, frob[d], mod(F, x, g))) return Tristate::No;
    for (int r : prime_divisors(d)) {
        auto gg = gcd(F, sub(F, frob[d / r], x), g);
        if (degree<B>(gg) > 0) return Tristate::No;
    }
    return Tristate::Yes;
}

// integer helpers for Kronecker's method
std::vector<mpz_class> divisors(mpz_class v) {
    v = abs(v);
    std::vector<mpz_class> ds;
    for (mpz_class d = 1; d * d <= v; ++d)
        if (v % d == 0) {
            ds.push_back(d);
            if (d * d != v) ds.push_back(v / d);
        }
    return ds;
}

std::vector<mpq_class> rat_trim(std::vector<mpq_class> p) {
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
    return p;
}

bool rat_divides(const std::vector<mpq_class>& a, std::vector<mpq_class> b) {
    // does a divide b?
    while (b.size() >= a.size()) {
        mpq_class c = b.back() / a.back();
        std::size_t s = b.size() - a.size();
        for (std::size_t i = 0; i < a.size(); ++i) b[s + i] -= c * a[i];
        b.pop_back();
        b = rat_trim(b);
    }
    return b.empty();
}

}  // namespace

Tristate rational_irreducible(const std::vector<mpq_class>& p0, std::vector<mpq_class>* factor, long long budget) {
    auto p = rat_trim(p0);
    int n = static_cast<int>(p.size()) - 1;
    if (n <= 0) return Tristate::No;
    if (n == 1) return Tristate::Yes;
    // clear denominators
    mpz_class l = 1;
    for (const auto& c : p) l = lcm(l, mpz_class(c.get_den()));
    std::vector<mpz_class> z;
    for (const auto& c : p) z.push_back(mpz_class(c * l));
    auto value_at = [&](long x) {
        mpz_class acc = 0;
        for (auto it = z.rbegin(); it != z.rend(); ++it) acc = acc * x + *it;
        return acc;
    };
    for (int s = 1; s <= n / 2; ++s) {
        // s+1 interpolation points with nonzero values; a zero value is a rational root
        std::vector<long> xs;
        std::vector<std::vector<mpz_class>> choices;
        for (long t = 0; static_cast<int>(xs.size()) <= s; t = t <= 0 ? 1 - t : -t) {
            mpz_class v = value_at(t);
            if (v == 0) {
                if (factor) *factor = {mpq_class(-t), mpq_class(1)};
                return Tristate::No;
            }
            xs.push_back(t);
            auto ds = divisors(v);
            std::vector<mpz_class> signed_ds;
            for (auto& d : ds) {
                signed_ds.push_back(d);
                signed_ds.push_back(-d);
            }
            choices.push_back(std::move(signed_ds));
        }
        long double combos = 1;
        for (auto& c : choices) combos *= static_cast<long double>(c.size());
        if (combos > static_cast<long double>(budget)) return Tristate::Unknown;
        std::vector<std::size_t> idx(s + 1, 0);
        // the first value can be fixed positive (a factor and its negative both divide)
        while (true) {
            if (idx[0] % 2 == 0) {
                // Lagrange interpolation through (xs[j], choice)
                std::vector<mpq_class> poly(s + 1, 0);
                for (int j = 0; j <= s; ++j) {
                    std::vector<mpq_class> basis{1};
                    mpq_class denom = 1;
                    for (int k = 0; k <= s; ++k) {
                        if (k == j) continue;
                        std::vector<mpq_class> next(basis.size() + 1, 0);
                        for (std::size_t i = 0; i < basis.size(); ++i) {
                            next[i + 1] += basis[i];
                            next[i] -= basis[i] * xs[k];
                        }
                        basis.swap(next);
                        denom *= mpq_class(xs[j] - xs[k]);
                    }
                    mpq_class w = mpq_class(choices[j][idx[j]]) / denom;
                    for (std::size_t i = 0; i < basis.size(); ++i) poly[i] += w * basis[i];
                }
                poly = rat_trim(poly);
                bool integral = static_cast<int>(poly.size()) - 1 == s;
                for (auto& c : poly) integral = integral && c.get_den() == 1;
                if (integral && rat_divides(poly, p)) {
                    if (factor) *factor = poly;
                    return Tristate::No;
                }
            }
            int pos = 0;
            while (pos <= s && ++idx[pos] == choices[pos].size()) idx[pos++] = 0;
            if (pos > s) break;
        }
    }
    return Tristate::Yes;
}

template <class B>
Tristate is_irreducible(const Field<B>& F, const Poly<B>& p0) {
    Poly<B> p = p0;
    trim(F, p);
    int d = degree<B>(p);
    if (d <= 0) return Tristate::No;
    if (d == 1) return Tristate::Yes;
    if (F.is_finite()) return rabin(F, monic(F, p));
    if constexpr (std::is_same_v<B, RationalBase>) {
        if (F.is_prime()) {
            std::vector<mpq_class> q;
            for (const auto& c : p) q.push_back(c[0]);
            return rational_irreducible(q);
        }
        // over a number field K: p is irreducible iff K[y]/(p) is a field,
        // which Field::extension certifies by a characteristic polynomial over Q
        try {
            auto self = std::static_pointer_cast<const Field<B>>(F.shared_from_this());
            Field<B>::extension(self, monic(F, p), "__irr_probe", ModulusCheck::Verify);
            return Tristate::Yes;
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::NotIrreducible) throw;
        }
        // a root in K decides reducibility for quadratics and cubics
        return Tristate::Unknown;
    }
    return Tristate::Unknown;
}

template <class B>
std::string format(const Field<B>& F, const Poly<B>& p) {
    std::string out = "[";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) out += ',';
        out += F.format(p[i]);
    }
    return out + "]";
}

#define SKEWMRD_FPOLY_INSTANTIATE(B)                                                          \
    template void trim<B>(const Field<B>&, Poly<B>&);                                        \
    template Poly<B> add<B>(const Field<B>&, const Poly<B>&, const Poly<B>&);                \
    template Poly<B> sub<B>(const Field<B>&, const Poly<B>&, const Poly<B>&);                \
    template Poly<B> mul<B>(const Field<B>&, const Poly<B>&, const Poly<B>&);                \
    template Poly<B> scale<B>(const Field<B>&, const Elem<B>&, const Poly<B>&);              \
    template void divmod<B>(const Field<B>&, const Poly<B>&, const Poly<B>&, Poly<B>&, Poly<B>&); \
    template Poly<B> mod<B>(const Field<B>&, const Poly<B>&, const Poly<B>&);                \
    template Poly<B> monic<B>(const Field<B>&, const Poly<B>&);                              \
    template Poly<B> gcd<B>(const Field<B>&, Poly<B>, Poly<B>);                              \
    template Poly<B> inverse_mod<B>(const Field<B>&, const Poly<B>&, const Poly<B>&);        \
    template Poly<B> powmod<B>(const Field<B>&, const Poly<B>&, const mpz_class&, const Poly<B>&); \
    template Elem<B> eval<B>(const Field<B>&, const Poly<B>&, const Elem<B>&);               \
    template bool equal<B>(const Field<B>&, const Poly<B>&, const Poly<B>&);                 \
    template Poly<B> from_ints<B>(const Field<B>&, const std::vector<long long>&);           \
    template Tristate is_irreducible<B>(const Field<B>&, const Poly<B>&);                    \
    template std::string format<B>(const Field<B>&, const Poly<B>&);

SKEWMRD_FPOLY_INSTANTIATE(PrimeBase)
SKEWMRD_FPOLY_INSTANTIATE(RationalBase)

}  // namespace fpoly
}  // namespace skewmrd
