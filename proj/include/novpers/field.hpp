/*
   Copyright 2026 The novpers authors

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

#ifndef NOVPERS_FIELD_HPP
#define NOVPERS_FIELD_HPP

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

#include "rational.hpp"

namespace novpers {

/// Prime field of order P.  All arithmetic is done in uint64 and reduced
/// mod P; P must be prime (checked once per instantiation).
template <std::uint32_t P>
class Fp {
    static_assert(P >= 2, "order must be at least 2");

public:
    Fp() : v_(0) {}
    Fp(long long v)
    {
        long long m = v % static_cast<long long>(P);
        if (m < 0) m += P;
        v_ = static_cast<std::uint64_t>(m);
    }

    static constexpr std::uint32_t order() { return P; }
    std::uint64_t rep() const { return v_; }

    friend Fp operator+(Fp a, Fp b) { return from_raw((a.v_ + b.v_) % P); }
    friend Fp operator-(Fp a, Fp b) { return from_raw((a.v_ + P - b.v_) % P); }
    friend Fp operator*(Fp a, Fp b) { return from_raw((a.v_ * b.v_) % P); }
    friend Fp operator/(Fp a, Fp b) { return a * b.inverse(); }
    Fp operator-() const { return from_raw(v_ == 0 ? 0 : P - v_); }
    Fp& operator+=(Fp o) { return *this = *this + o; }
    Fp& operator-=(Fp o) { return *this = *this - o; }
    Fp& operator*=(Fp o) { return *this = *this * o; }
    Fp& operator/=(Fp o) { return *this = *this / o; }

    Fp inverse() const
    {
        if (v_ == 0) throw std::domain_error("Fp: division by zero");
        // Extended Euclid on (v, P).
        long long t = 0, new_t = 1;
        long long r = P, new_r = static_cast<long long>(v_);
        while (new_r != 0) {
            long long q = r / new_r;
            long long tmp = t - q * new_t;
            t = new_t;
            new_t = tmp;
            tmp = r - q * new_r;
            r = new_r;
            new_r = tmp;
        }
        if (r != 1) throw std::domain_error("Fp: order is not prime");
        return Fp(t);
    }

    friend bool operator==(Fp a, Fp b) { return a.v_ == b.v_; }
    friend bool operator!=(Fp a, Fp b) { return a.v_ != b.v_; }
    friend std::ostream& operator<<(std::ostream& os, Fp a) { return os << a.v_; }

private:
    static Fp from_raw(std::uint64_t v)
    {
        Fp r;
        r.v_ = v;
        return r;
    }
    std::uint64_t v_;
};

/// Uniform access to the scalar operations the generic code needs.
template <class K>
struct field_traits;

template <>
struct field_traits<Rational> {
    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }
    static bool is_zero(const Rational& a) { return a == 0; }
    static Rational inv(const Rational& a)
    {
        if (a == 0) throw std::domain_error("rational division by zero");
        return Rational(1) / a;
    }
    static Rational from_int(long long v) { return Rational(v); }
    static std::string name() { return "Q"; }
    static std::string to_string(const Rational& a) { return novpers::to_string(a); }
    static Rational parse(const std::string& s) { return parse_rational(s); }
};

template <std::uint32_t P>
struct field_traits<Fp<P>> {
    static Fp<P> zero() { return Fp<P>(0); }
    static Fp<P> one() { return Fp<P>(1); }
    static bool is_zero(Fp<P> a) { return a == Fp<P>(0); }
    static Fp<P> inv(Fp<P> a) { return a.inverse(); }
    static Fp<P> from_int(long long v) { return Fp<P>(v); }
    static std::string name() { return "F" + std::to_string(P); }
    static std::string to_string(Fp<P> a) { return std::to_string(a.rep()); }
    static Fp<P> parse(const std::string& s) { return Fp<P>(std::stoll(s)); }
};

} // namespace novpers

#endif
