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

#include "skewmrd/division_ring.hpp"

#include <cctype>

namespace skewmrd {

template <class B>
std::uint64_t DivisionRing<B>::size() const noexcept {
    if (!is_finite()) return 0;
    std::uint64_t q = 1, p = domain_.size();
    for (int i = 0; i < dim_; ++i) {
        if (q > (std::uint64_t{1} << 62) / p) return 0;
        q *= p;
    }
    return q;
}

template <class B>
typename DivisionRing<B>::Element DivisionRing<B>::one() const {
    return basis(0);
}

template <class B>
typename DivisionRing<B>::Element DivisionRing<B>::from_int(long long v) const {
    Element r = zero();
    r[0] = domain_.from_int(v);
    return r;
}

template <class B>
typename DivisionRing<B>::Element DivisionRing<B>::from_scalar(const Scalar& s) const {
    Element r = zero();
    r[0] = s;
    return r;
}

template <class B>
typename DivisionRing<B>::Element DivisionRing<B>::basis(int i) const {
    Element r = zero();
    r.at(static_cast<std::size_t>(i)) = domain_.one();
    return r;
}

template <class B>
typename DivisionRing<B>::Element DivisionRing<B>::add(const Element& a, const Element& b) const {
    check(a);
    check(b);
    Element r(a);
    for (int i = 0; i < dim_; ++i) r[i] = domain_.add(a[i], b[i]);
    return r;
}

template <class B>
typename DivisionRing<B>::Element DivisionRing<B>::sub(const Element& a, const Element& b) const {
    check(a);
    check(b);
    Element r(a);
    for (int i = 0; i < dim_; ++i) r[i] = domain_.sub(a[i], b[i]);
    return r;
}

template <class B>
typename DivisionRing<B>::Element DivisionRing<B>::neg(const Element& a) const {
    check(a);
    Element r(a);
    for (auto& v : r) v = domain_.neg(v);
    return r;
}

template <class B>
typename DivisionRing<B>::Element DivisionRing<B>::scale(const Scalar& s, const Element& a) const {
    check(a);
    Element r(a);
    for (auto& v : r) v = domain_.mul(s, v);
    return r;
}

template <class B>
void DivisionRing<B>::add_into(Element& acc, const Element& b) const {
    check(acc);
    check(b);
    for (int i = 0; i < dim_; ++i) acc[i] = domain_.add(acc[i], b[i]);
}

template <class B>
bool DivisionRing<B>::is_zero(const Element& a) const {
    check(a);
    for (const auto& v : a)
        if (!domain_.is_zero(v)) return false;
    return true;
}

template <class B>
bool DivisionRing<B>::is_one(const Element& a) const {
    check(a);
    if (!domain_.is_one(a[0])) return false;
    for (int i = 1; i < dim_; ++i)
        if (!domain_.is_zero(a[i])) return false;
    return true;
}

template <class B>
bool DivisionRing<B>::equal(const Element& a, const Element& b) const {
    check(a);
    check(b);
    for (int i = 0; i < dim_; ++i)
        if (!domain_.equal(a[i], b[i])) return false;
    return true;
}

template <class B>
std::uint64_t DivisionRing<B>::index_of(const Element& a) const {
    check(a);
    require(is_finite(), ErrorKind::InfiniteField, "index encoding needs a finite ring");
    if constexpr (std::is_same_v<B, PrimeBase>) {
        std::uint64_t idx = 0, p = domain_.size();
        for (int i = dim_ - 1; i >= 0; --i) idx = idx * p + domain_.digit(a[i]);
        return idx;
    } else {
        fail(ErrorKind::InfiniteField, "index encoding needs a finite ring");
    }
}

template <class B>
typename DivisionRing<B>::Element DivisionRing<B>::from_index(std::uint64_t index) const {
    require(is_finite(), ErrorKind::InfiniteField, "index encoding needs a finite ring");
    if constexpr (std::is_same_v<B, PrimeBase>) {
        Element r = zero();
        std::uint64_t p = domain_.size();
        for (int i = 0; i < dim_; ++i) {
            r[i] = domain_.from_digit(index % p);
            index /= p;
        }
        require(index == 0, ErrorKind::Parse, "element index out of range for " + name_);
        return r;
    } else {
        fail(ErrorKind::InfiniteField, "index encoding needs a finite ring");
    }
}

template <class B>
std::string DivisionRing<B>::format(const Element& a) const {
    check(a);
    if (is_finite()) return std::to_string(index_of(a));
    auto names = generator_names();
    std::string out;
    for (int i = 0; i < dim_; ++i) {
        if (domain_.is_zero(a[i])) continue;
        auto exps = monomial(i);
        std::string factors;
        for (std::size_t g = 0; g < exps.size(); ++g) {
            if (exps[g] == 0) continue;
            if (!factors.empty()) factors += '*';
            factors += names[g];
            if (exps[g] > 1) factors += '^' + std::to_string(exps[g]);
        }
        std::string coef = domain_.format(a[i]);
        std::string term;
        if (factors.empty())
            term = coef;
        else if (domain_.is_one(a[i]))
            term = factors;
        else if (domain_.is_one(domain_.neg(a[i])))
            term = "-" + factors;
        else
            term = coef + "*" + factors;
        if (!out.empty() && term[0] != '-') out += '+';
        out += term;
    }
    return out.empty() ? "0" : out;
}

namespace {

// Recursive-descent reader for sums of products of numbers and generator powers.
template <class B>
class ExprReader {
   public:
    using Element = Elem<B>;
    ExprReader(const DivisionRing<B>& R, std::string_view s) : R_(R), s_(s), names_(R.generator_names()), gens_(R.generators()) {}

    Element run() {
        Element acc = R_.zero();
        skip();
        bool first = true;
        while (pos_ < s_.size()) {
            bool negative = false;
            if (s_[pos_] == '+' || s_[pos_] == '-') {
                negative = s_[pos_] == '-';
                ++pos_;
            } else if (!first) {
                error("expected '+' or '-'");
            }
            Element t = term();
            acc = negative ? R_.sub(acc, t) : R_.add(acc, t);
            first = false;
            skip();
        }
        if (first) error("empty expression");
        return acc;
    }

   private:
    [[noreturn]] void error(const std::string& msg) const {
        fail(ErrorKind::Parse, msg + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    Element term() {
        Element t = factor();
        skip();
        while (pos_ < s_.size() && s_[pos_] == '*') {
            ++pos_;
            t = R_.mul(t, factor());
            skip();
        }
        return t;
    }
    long long integer() {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) error("expected a number");
        if (pos_ - start > 17) error("number too long");
        return std::stoll(std::string(s_.substr(start, pos_ - start)));
    }
    Element factor() {
        skip();
        if (pos_ >= s_.size()) error("unexpected end");
        const B& D = R_.domain();
        if (std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            auto num = D.from_int(integer());
            skip();
            if (pos_ < s_.size() && s_[pos_] == '/') {
                ++pos_;
                skip();
                long long den = integer();
                if (D.is_zero(D.from_int(den))) error("zero denominator");
                num = D.mul(num, D.inv(D.from_int(den)));
            }
            return R_.from_scalar(num);
        }
        std::size_t start = pos_;
        while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
        if (start == pos_) error("unexpected character");
        std::string name(s_.substr(start, pos_ - start));
        std::size_t g = 0;
        while (g < names_.size() && names_[g] != name) ++g;
        if (g == names_.size()) {
            pos_ = start;
            error("unknown generator '" + name + "'");
        }
        long long e = 1;
        skip();
        if (pos_ < s_.size() && s_[pos_] == '^') {
            ++pos_;
            skip();
            e = integer();
        }
        Element r = R_.one();
        for (long long i = 0; i < e; ++i) r = R_.mul(r, gens_[g]);
        return r;
    }

    const DivisionRing<B>& R_;
    std::string_view s_;
    std::size_t pos_ = 0;
    std::vector<std::string> names_;
    std::vector<Element> gens_;
};

}  // namespace

template <class B>
typename DivisionRing<B>::Element DivisionRing<B>::parse(std::string_view text) const {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    bool digits = !text.empty();
    for (char c : text)
        if (!std::isdigit(static_cast<unsigned char>(c))) digits = false;
    if (digits && is_finite()) {
        if (text.size() > 18) fail(ErrorKind::Parse, "element index too long: '" + std::string(text) + "'");
        return from_index(std::stoull(std::string(text)));
    }
    return ExprReader<B>(*this, text).run();
}

template class DivisionRing<PrimeBase>;
template class DivisionRing<RationalBase>;

}  // namespace skewmrd
