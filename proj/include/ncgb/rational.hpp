#ifndef NCGB_RATIONAL_HPP
#define NCGB_RATIONAL_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ncgb {

/// Arbitrary-precision signed integer, little-endian base 2^32 magnitude.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long v);
    static BigInt from_decimal(std::string_view s);

    bool is_zero() const { return sign_ == 0; }
    bool is_one() const;
    bool is_negative() const { return sign_ < 0; }
    int sign() const { return sign_; }

    BigInt operator-() const;
    BigInt operator+(const BigInt& o) const;
    BigInt operator-(const BigInt& o) const;
    BigInt operator*(const BigInt& o) const;
    /// Truncated division (quotient rounds toward zero, remainder has
    /// the dividend's sign).
    BigInt operator/(const BigInt& o) const;
    BigInt operator%(const BigInt& o) const;

    bool operator==(const BigInt& o) const;
    bool operator!=(const BigInt& o) const { return !(*this == o); }
    bool operator<(const BigInt& o) const { return cmp(o) < 0; }
    bool operator<=(const BigInt& o) const { return cmp(o) <= 0; }
    bool operator>(const BigInt& o) const { return cmp(o) > 0; }
    bool operator>=(const BigInt& o) const { return cmp(o) >= 0; }

    int cmp(const BigInt& o) const;
    static BigInt gcd(BigInt a, BigInt b);

    BigInt abs() const;
    std::string to_decimal() const;
    bool fits_int64() const;
    long long to_int64() const;
    std::size_t hash() const;

private:
    int sign_ = 0;
    std::vector<std::uint32_t> mag_;

    void trim();
    static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    // pre: |a| >= |b|
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> mul_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    static void divmod_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                           std::vector<std::uint32_t>& q, std::vector<std::uint32_t>& r);
};

/// Exact rational number. Always normalized: gcd(num, den) = 1, den > 0,
/// zero is 0/1.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long v) : num_(v), den_(1) {}
    Rational(BigInt num, BigInt den);
    static Rational from_string(std::string_view s);  // "p" or "p/q"

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_integer() const { return den_.is_one(); }
    bool is_negative() const { return num_.is_negative(); }
    int sign() const { return num_.sign(); }

    Rational operator-() const;
    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;  // o != 0
    Rational inverse() const;
    Rational abs() const;

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const;

    std::string str() const;  // "p" or "p/q"
    std::size_t hash() const;

private:
    BigInt num_, den_;
    void normalize();
};

}  // namespace ncgb

#endif
