#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace dgratio {

using BigInt = boost::multiprecision::cpp_int;

/// Exact fraction kept in lowest terms with a positive denominator.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(std::int64_t n) : num_(n), den_(1) {}  // NOLINT: implicit by design of arithmetic use
    Rational(BigInt n, BigInt d);
    Rational(std::int64_t n, std::int64_t d) : Rational(BigInt(n), BigInt(d)) {}

    const BigInt& num() const noexcept { return num_; }
    const BigInt& den() const noexcept { return den_; }

    bool is_integer() const { return den_ == 1; }
    bool is_zero() const { return num_ == 0; }

    Rational reciprocal() const;

    Rational operator-() const;
    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    /// "p/q", or bare "p" for integers.
    std::string str() const;
    /// Always "p/q" (integers as "p/1").
    std::string fraction_str() const;

    /// Parses "p/q" or "p".
    static Rational parse(const std::string& text);

private:
    BigInt num_;
    BigInt den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace dgratio
