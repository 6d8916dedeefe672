#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace arw {

/// Arbitrary-precision signed integer on base-2^32 limbs.
/// Only the operations the exact-rational layer needs.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long v);

    /// Parses optional sign followed by decimal digits.
    static BigInt from_string(std::string_view text);

    bool is_zero() const { return sign_ == 0; }
    bool is_negative() const { return sign_ < 0; }
    int sign() const { return sign_; }

    BigInt operator-() const;
    BigInt abs() const;

    friend BigInt operator+(const BigInt& a, const BigInt& b);
    friend BigInt operator-(const BigInt& a, const BigInt& b);
    friend BigInt operator*(const BigInt& a, const BigInt& b);
    /// Truncating division, C semantics (rounds toward zero).
    friend BigInt operator/(const BigInt& a, const BigInt& b);
    friend BigInt operator%(const BigInt& a, const BigInt& b);
    static void divmod(const BigInt& u, const BigInt& v, BigInt& q, BigInt& r);

    BigInt& operator+=(const BigInt& b) { return *this = *this + b; }
    BigInt& operator-=(const BigInt& b) { return *this = *this - b; }
    BigInt& operator*=(const BigInt& b) { return *this = *this * b; }

    bool operator==(const BigInt&) const = default;
    std::strong_ordering operator<=>(const BigInt& rhs) const;

    static BigInt gcd(BigInt a, BigInt b);

    bool fits_longlong() const;
    long long to_longlong() const;
    std::string to_string() const;

private:
    int sign_ = 0;                       // -1, 0, +1
    std::vector<std::uint32_t> mag_;     // little-endian, no leading zeros

    void trim();
    static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> mul_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    static void divmod_mag(const std::vector<std::uint32_t>& u, const std::vector<std::uint32_t>& v,
                           std::vector<std::uint32_t>& q, std::vector<std::uint32_t>& r);
};

/// Exact rational number; denominator positive, fraction always reduced.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long v) : num_(v), den_(1) {}
    Rational(long long num, long long den);
    Rational(BigInt num, BigInt den);

    /// Parses "a" or "a/b" with optional leading sign.
    static Rational from_string(std::string_view text);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_negative() const { return num_.is_negative(); }
    bool is_integer() const;
    bool is_one() const;

    Rational operator-() const;
    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);   // throws on b == 0

    Rational& operator+=(const Rational& b) { return *this = *this + b; }
    Rational& operator-=(const Rational& b) { return *this = *this - b; }
    Rational& operator*=(const Rational& b) { return *this = *this * b; }
    Rational& operator/=(const Rational& b) { return *this = *this / b; }

    bool operator==(const Rational&) const = default;
    std::strong_ordering operator<=>(const Rational& rhs) const;

    Rational reciprocal() const;

    /// "a" when integral, "a/b" otherwise.
    std::string to_string() const;
    /// Rounded decimal rendering with the given number of significant digits.
    std::string to_decimal(int significant_digits = 20) const;

private:
    BigInt num_;
    BigInt den_;
    void normalize();
};

inline Rational operator*(long long a, const Rational& b) { return Rational(a) * b; }

}  // namespace arw
