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

#ifndef NOVPERS_RATIONAL_HPP
#define NOVPERS_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace novpers {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Rational& r)
{
    std::ostringstream os;
    os << boost::multiprecision::numerator(r);
    if (boost::multiprecision::denominator(r) != 1)
        os << "/" << boost::multiprecision::denominator(r);
    return os.str();
}

/// Parses "a" or "a/b" with integer a, b.
inline Rational parse_rational(const std::string& s)
{
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(s));
        Integer num(s.substr(0, slash));
        Integer den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("not a rational: '" + s + "'");
    }
}

inline Integer floor_div(const Integer& a, const Integer& b)
{
    Integer q = a / b, r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

/// Largest integer n with n <= r.
inline Integer rational_floor(const Rational& r)
{
    return floor_div(boost::multiprecision::numerator(r),
                     boost::multiprecision::denominator(r));
}

inline Integer rational_ceil(const Rational& r) { return -rational_floor(-r); }

/// A rational extended by +/-infinity, used for valuations and filtration
/// levels of the zero vector.
class ExtRat {
public:
    enum class Kind : std::int8_t { NegInf = -1, Finite = 0, PosInf = 1 };

    ExtRat() : kind_(Kind::Finite), value_(0) {}
    ExtRat(Rational v) : kind_(Kind::Finite), value_(std::move(v)) {}
    ExtRat(int v) : kind_(Kind::Finite), value_(v) {}

    static ExtRat pos_inf() { return ExtRat(Kind::PosInf); }
    static ExtRat neg_inf() { return ExtRat(Kind::NegInf); }

    bool is_finite() const { return kind_ == Kind::Finite; }
    bool is_pos_inf() const { return kind_ == Kind::PosInf; }
    bool is_neg_inf() const { return kind_ == Kind::NegInf; }

    const Rational& finite() const
    {
        if (!is_finite()) throw std::logic_error("ExtRat: not finite");
        return value_;
    }

    ExtRat operator-() const
    {
        if (is_pos_inf()) return neg_inf();
        if (is_neg_inf()) return pos_inf();
        return ExtRat(-value_);
    }

    // Addition is only defined when it is unambiguous.
    ExtRat operator+(const ExtRat& o) const
    {
        if (is_finite() && o.is_finite()) return ExtRat(value_ + o.value_);
        if (is_pos_inf() && !o.is_neg_inf()) return pos_inf();
        if (is_neg_inf() && !o.is_pos_inf()) return neg_inf();
        if (o.is_pos_inf() && !is_neg_inf()) return pos_inf();
        if (o.is_neg_inf() && !is_pos_inf()) return neg_inf();
        throw std::logic_error("ExtRat: inf - inf");
    }

    ExtRat operator-(const ExtRat& o) const { return *this + (-o); }

    friend bool operator==(const ExtRat& a, const ExtRat& b)
    {
        if (a.kind_ != b.kind_) return false;
        return a.kind_ != Kind::Finite || a.value_ == b.value_;
    }
    friend bool operator!=(const ExtRat& a, const ExtRat& b) { return !(a == b); }
    friend bool operator<(const ExtRat& a, const ExtRat& b)
    {
        if (a.kind_ != b.kind_) return static_cast<int>(a.kind_) < static_cast<int>(b.kind_);
        return a.kind_ == Kind::Finite && a.value_ < b.value_;
    }
    friend bool operator<=(const ExtRat& a, const ExtRat& b) { return a < b || a == b; }
    friend bool operator>(const ExtRat& a, const ExtRat& b) { return b < a; }
    friend bool operator>=(const ExtRat& a, const ExtRat& b) { return b <= a; }

    friend std::ostream& operator<<(std::ostream& os, const ExtRat& e)
    {
        if (e.is_pos_inf()) return os << "inf";
        if (e.is_neg_inf()) return os << "-inf";
        return os << to_string(e.value_);
    }

private:
    explicit ExtRat(Kind k) : kind_(k), value_(0) {}
    Kind kind_;
    Rational value_;
};

inline std::string to_string(const ExtRat& e)
{
    std::ostringstream os;
    os << e;
    return os.str();
}

} // namespace novpers

#endif
