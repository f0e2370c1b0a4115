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

#ifndef SKEWMRD_BASE_DOMAIN_HPP
#define SKEWMRD_BASE_DOMAIN_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/container/small_vector.hpp>

namespace skewmrd {

/// Scalars of a prime field F_p, stored reduced in [0, p).
class PrimeBase {
   public:
    using value_type = std::uint32_t;

    explicit PrimeBase(std::uint32_t p);

    std::uint32_t characteristic() const noexcept { return p_; }
    bool is_finite() const noexcept { return true; }
    std::uint64_t size() const noexcept { return p_; }

    value_type zero() const noexcept { return 0; }
    value_type one() const noexcept { return 1; }
    value_type from_int(long long v) const noexcept {
        long long r = v % static_cast<long long>(p_);
        return static_cast<value_type>(r < 0 ? r + p_ : r);
    }

    value_type add(value_type a, value_type b) const noexcept {
        value_type s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    value_type sub(value_type a, value_type b) const noexcept { return a >= b ? a - b : a + p_ - b; }
    value_type neg(value_type a) const noexcept { return a == 0 ? 0 : p_ - a; }
    value_type mul(value_type a, value_type b) const noexcept {
        return static_cast<value_type>(static_cast<std::uint64_t>(a) * b % p_);
    }
    value_type inv(value_type a) const;
    bool is_zero(value_type a) const noexcept { return a == 0; }
    bool is_one(value_type a) const noexcept { return a == 1; }
    bool equal(value_type a, value_type b) const noexcept { return a == b; }

    /// Digit used by the little-endian index encoding of finite field elements.
    std::uint64_t digit(value_type a) const noexcept { return a; }
    value_type from_digit(std::uint64_t d) const noexcept { return static_cast<value_type>(d % p_); }

    std::string format(value_type a) const { return std::to_string(a); }
    value_type parse(std::string_view text) const;

    bool operator==(const PrimeBase& o) const noexcept { return p_ == o.p_; }

   private:
    std::uint32_t p_;
};

/// Exact rationals.
class RationalBase {
   public:
    using value_type = mpq_class;

    std::uint32_t characteristic() const noexcept { return 0; }
    bool is_finite() const noexcept { return false; }
    std::uint64_t size() const noexcept { return 0; }

    value_type zero() const { return value_type(0); }
    value_type one() const { return value_type(1); }
    value_type from_int(long long v) const { return value_type(static_cast<long>(v)); }

    value_type add(const value_type& a, const value_type& b) const { return a + b; }
    value_type sub(const value_type& a, const value_type& b) const { return a - b; }
    value_type neg(const value_type& a) const { return -a; }
    value_type mul(const value_type& a, const value_type& b) const { return a * b; }
    value_type inv(const value_type& a) const;
    bool is_zero(const value_type& a) const { return sgn(a) == 0; }
    bool is_one(const value_type& a) const { return a == 1; }
    bool equal(const value_type& a, const value_type& b) const { return a == b; }

    std::string format(const value_type& a) const { return a.get_str(); }
    value_type parse(std::string_view text) const;

    bool operator==(const RationalBase&) const noexcept { return true; }
};

template <class B>
using Elem = boost::container::small_vector<typename B::value_type, 8>;

}  // namespace skewmrd

#endif
