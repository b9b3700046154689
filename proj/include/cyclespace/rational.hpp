#ifndef CYCLESPACE_RATIONAL_HPP
#define CYCLESPACE_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace cyclespace {

/**
 * Exact rational number.
 *
 * Thin value wrapper around GMP's mpq_class. Every quantity in this library
 * that the underlying identities require to be exact (edge lengths, flow
 * lengths, area budgets) is a Rational; doubles appear only as display
 * approximations. Canonical form: denominator > 0, gcd(num, den) = 1.
 * Serialized form is decimal-free: "p" for integers, "p/q" otherwise.
 */
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(int n) : v_(static_cast<long>(n)) {}
    Rational(long long n);
    Rational(double) = delete;

    /// num/den, canonicalized. Throws std::domain_error if den == 0.
    Rational(long num, long den);

    /// Parses "p" or "p/q" with optional leading '-'. Throws std::invalid_argument.
    static Rational from_string(std::string_view s);

    std::string to_string() const;
    double to_double() const { return v_.get_d(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_positive() const { return sgn(v_) > 0; }
    bool is_negative() const { return sgn(v_) < 0; }
    bool is_integer() const { return v_.get_den() == 1; }

    Rational abs() const;

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const;

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    /// 2^(-e) for e >= 0; the geometric lengths of the example spaces.
    static Rational pow2(long e);

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    explicit Rational(mpq_class v) : v_(std::move(v)) {}
    mpq_class v_;
};

/// |f| * r convenience for flow-weighted lengths.
Rational scale(std::int64_t f, const Rational& r);

} // namespace cyclespace

#endif
