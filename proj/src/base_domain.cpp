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

#include "skewmrd/base_domain.hpp"

#include <cctype>
#include <charconv>

#include "skewmrd/errors.hpp"

namespace skewmrd {

namespace {

bool is_prime(std::uint32_t p) {
    if (p < 2) return false;
    for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

}  // namespace

PrimeBase::PrimeBase(std::uint32_t p) : p_(p) {
    require(is_prime(p), ErrorKind::PreconditionFailed, "characteristic " + std::to_string(p) + " is not prime");
    require(p < (1u << 31), ErrorKind::PreconditionFailed, "characteristic too large");
}

PrimeBase::value_type PrimeBase::inv(value_type a) const {
    require(a != 0, ErrorKind::DivisionByZero, "inverse of zero");
    // extended Euclid on (a, p)
    std::int64_t t = 0, nt = 1, r = p_, nr = a;
    while (nr != 0) {
        std::int64_t q = r / nr;
        t -= q * nt;
        std::swap(t, nt);
        r -= q * nr;
        std::swap(r, nr);
    }
    return from_int(t);
}

PrimeBase::value_type PrimeBase::parse(std::string_view text) const {
    bool negative = !text.empty() && text.front() == '-';
    if (negative) text.remove_prefix(1);
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    require(ec == std::errc() && ptr == text.data() + text.size() && !text.empty(), ErrorKind::Parse,
            "bad integer '" + std::string(text) + "'");
    value_type r = static_cast<value_type>(v % p_);
    return negative ? neg(r) : r;
}

RationalBase::value_type RationalBase::inv(const value_type& a) const {
    require(sgn(a) != 0, ErrorKind::DivisionByZero, "inverse of zero");
    return 1 / a;
}

RationalBase::value_type RationalBase::parse(std::string_view text) const {
    std::string s(text);
    bool ok = !s.empty();
    for (char c : s)
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '/')) ok = false;
    require(ok, ErrorKind::Parse, "bad rational '" + s + "'");
    mpq_class q;
    try {
        q.set_str(s, 10);
    } catch (const std::invalid_argument&) {
        fail(ErrorKind::Parse, "bad rational '" + s + "'");
    }
    require(sgn(q.get_den()) != 0, ErrorKind::DivisionByZero, "zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

}  // namespace skewmrd
