#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace xalg {

struct ArgumentError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ShapeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Exact rational scalar. Canonical form is maintained throughout:
/// denominator > 0 and gcd(|num|, den) = 1; zero is 0/1.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(static_cast<signed long>(n)) {}
    Rational(int n) : v_(static_cast<signed long>(n)) {}
    Rational(long num, long den) {
        if (den == 0) throw ArgumentError("rational with zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    /// Parses decimal "p", "-p" or "p/q". Throws ArgumentError otherwise.
    static Rational parse(const std::string& s) {
        auto digits = [](const std::string& t) {
            if (t.empty()) return false;
            for (char c : t)
                if (c < '0' || c > '9') return false;
            return true;
        };
        std::string body = (!s.empty() && s[0] == '-') ? s.substr(1) : s;
        auto slash = body.find('/');
        bool ok = slash == std::string::npos
                      ? digits(body)
                      : digits(body.substr(0, slash)) && digits(body.substr(slash + 1));
        if (!ok) throw ArgumentError("malformed rational literal: " + s);
        Rational r;
        try {
            r.v_ = mpq_class(s, 10);
        } catch (const std::invalid_argument&) {
            throw ArgumentError("malformed rational literal: " + s);
        }
        if (r.v_.get_den() == 0) throw ArgumentError("rational with zero denominator: " + s);
        r.v_.canonicalize();
        return r;
    }

    Rational operator-() const { return Rational(-v_); }
    Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_)); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_)); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_)); }
    Rational operator/(const Rational& o) const {
        if (o.is_zero()) throw ArgumentError("division by zero");
        return Rational(mpq_class(v_ / o.v_));
    }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

    bool operator==(const Rational& o) const { return v_ == o.v_; }
    bool operator!=(const Rational& o) const { return v_ != o.v_; }
    bool operator<(const Rational& o) const { return v_ < o.v_; }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }

    Rational inverse() const {
        if (is_zero()) throw ArgumentError("inverse of zero");
        return Rational(mpq_class(1 / v_));
    }

    std::string numerator_str() const { return v_.get_num().get_str(); }
    std::string denominator_str() const { return v_.get_den().get_str(); }
    /// "p/q" for non-integers, plain "p" otherwise.
    std::string str() const {
        return is_integer() ? v_.get_num().get_str() : v_.get_str();
    }
    /// True iff the numerator fits in a signed 64-bit integer (denominator 1).
    bool fits_int64() const {
        return is_integer() && v_.get_num().fits_slong_p();
    }
    long to_long() const { return v_.get_num().get_si(); }

private:
    explicit Rational(mpq_class v) : v_(std::move(v)) {}
    mpq_class v_;
};

inline Rational operator*(long a, const Rational& b) { return Rational(a) * b; }

}  // namespace xalg
