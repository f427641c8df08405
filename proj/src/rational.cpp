#include "ncgb/rational.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace ncgb {

BigInt::BigInt(long long v) {
    if (v == 0) return;
    sign_ = v < 0 ? -1 : 1;
    unsigned long long m = v < 0 ? -(unsigned long long)v : (unsigned long long)v;
    while (m) {
        mag_.push_back((std::uint32_t)(m & 0xffffffffULL));
        m >>= 32;
    }
}

BigInt BigInt::from_decimal(std::string_view s) {
    BigInt r;
    std::size_t i = 0;
    int sign = 1;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        if (s[i] == '-') sign = -1;
        ++i;
    }
    if (i >= s.size()) throw std::invalid_argument("BigInt: empty numeral");
    BigInt ten(10);
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("BigInt: bad digit");
        r = r * ten + BigInt(s[i] - '0');
    }
    if (sign < 0) r = -r;
    return r;
}

bool BigInt::is_one() const { return sign_ == 1 && mag_.size() == 1 && mag_[0] == 1; }

void BigInt::trim() {
    while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
    if (mag_.empty()) sign_ = 0;
}

int BigInt::cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

std::vector<std::uint32_t> BigInt::add_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> r;
    r.reserve(std::max(a.size(), b.size()) + 1);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
        std::uint64_t s = carry;
        if (i < a.size()) s += a[i];
        if (i < b.size()) s += b[i];
        r.push_back((std::uint32_t)(s & 0xffffffffULL));
        carry = s >> 32;
    }
    if (carry) r.push_back((std::uint32_t)carry);
    return r;
}

std::vector<std::uint32_t> BigInt::sub_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> r = a;
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::int64_t d = (std::int64_t)a[i] - borrow - (i < b.size() ? (std::int64_t)b[i] : 0);
        if (d < 0) {
            d += (std::int64_t)1 << 32;
            borrow = 1;
        } else {
            borrow = 0;
        }
        r[i] = (std::uint32_t)d;
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

std::vector<std::uint32_t> BigInt::mul_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<std::uint32_t> r(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::uint64_t carry = 0;
        for (std::size_t j = 0; j < b.size(); ++j) {
            std::uint64_t cur = r[i + j] + (std::uint64_t)a[i] * b[j] + carry;
            r[i + j] = (std::uint32_t)(cur & 0xffffffffULL);
            carry = cur >> 32;
        }
        std::size_t k = i + b.size();
        while (carry) {
            std::uint64_t cur = r[k] + carry;
            r[k] = (std::uint32_t)(cur & 0xffffffffULL);
            carry = cur >> 32;
            ++k;
        }
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

// Bitwise long division; operand sizes here are tiny so simplicity wins.
void BigInt::divmod_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                        std::vector<std::uint32_t>& q, std::vector<std::uint32_t>& r) {
    if (b.empty()) throw std::domain_error("BigInt: division by zero");
    q.assign(a.size(), 0);
    r.clear();
    for (std::size_t bit = a.size() * 32; bit-- > 0;) {
        // r = (r << 1) | bit(a, bit)
        std::uint32_t carry = 0;
        for (std::size_t i = 0; i < r.size(); ++i) {
            std::uint32_t nc = r[i] >> 31;
            r[i] = (r[i] << 1) | carry;
            carry = nc;
        }
        if (carry) r.push_back(1);
        if ((a[bit / 32] >> (bit % 32)) & 1u) {
            if (r.empty())
                r.push_back(1);
            else
                r[0] |= 1u;
        }
        if (cmp_mag(r, b) >= 0) {
            r = sub_mag(r, b);
            q[bit / 32] |= (1u << (bit % 32));
        }
    }
    while (!q.empty() && q.back() == 0) q.pop_back();
}

BigInt BigInt::operator-() const {
    BigInt r = *this;
    r.sign_ = -r.sign_;
    return r;
}

BigInt BigInt::operator+(const BigInt& o) const {
    if (sign_ == 0) return o;
    if (o.sign_ == 0) return *this;
    BigInt r;
    if (sign_ == o.sign_) {
        r.sign_ = sign_;
        r.mag_ = add_mag(mag_, o.mag_);
    } else {
        int c = cmp_mag(mag_, o.mag_);
        if (c == 0) return BigInt();
        if (c > 0) {
            r.sign_ = sign_;
            r.mag_ = sub_mag(mag_, o.mag_);
        } else {
            r.sign_ = o.sign_;
            r.mag_ = sub_mag(o.mag_, mag_);
        }
    }
    return r;
}

BigInt BigInt::operator-(const BigInt& o) const { return *this + (-o); }

BigInt BigInt::operator*(const BigInt& o) const {
    BigInt r;
    if (sign_ == 0 || o.sign_ == 0) return r;
    r.sign_ = sign_ * o.sign_;
    r.mag_ = mul_mag(mag_, o.mag_);
    return r;
}

BigInt BigInt::operator/(const BigInt& o) const {
    BigInt q, r;
    std::vector<std::uint32_t> qm, rm;
    divmod_mag(mag_, o.mag_, qm, rm);
    q.mag_ = std::move(qm);
    q.sign_ = q.mag_.empty() ? 0 : sign_ * o.sign_;
    return q;
}

BigInt BigInt::operator%(const BigInt& o) const {
    BigInt r;
    std::vector<std::uint32_t> qm, rm;
    divmod_mag(mag_, o.mag_, qm, rm);
    r.mag_ = std::move(rm);
    r.sign_ = r.mag_.empty() ? 0 : sign_;
    return r;
}

bool BigInt::operator==(const BigInt& o) const { return sign_ == o.sign_ && mag_ == o.mag_; }

int BigInt::cmp(const BigInt& o) const {
    if (sign_ != o.sign_) return sign_ < o.sign_ ? -1 : 1;
    int c = cmp_mag(mag_, o.mag_);
    return sign_ >= 0 ? c : -c;
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
    a.sign_ = a.mag_.empty() ? 0 : 1;
    b.sign_ = b.mag_.empty() ? 0 : 1;
    while (!b.is_zero()) {
        BigInt t = a % b;
        a = b;
        b = t;
    }
    return a;
}

BigInt BigInt::abs() const {
    BigInt r = *this;
    if (r.sign_ < 0) r.sign_ = 1;
    return r;
}

std::string BigInt::to_decimal() const {
    if (sign_ == 0) return "0";
    std::string digits;
    std::vector<std::uint32_t> cur = mag_;
    const std::vector<std::uint32_t> ten = {10};
    while (!cur.empty()) {
        std::vector<std::uint32_t> q, r;
        divmod_mag(cur, ten, q, r);
        digits.push_back((char)('0' + (r.empty() ? 0 : r[0])));
        cur = std::move(q);
    }
    if (sign_ < 0) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

bool BigInt::fits_int64() const {
    if (mag_.size() > 2) return false;
    unsigned long long v = 0;
    for (std::size_t i = mag_.size(); i-- > 0;) v = (v << 32) | mag_[i];
    if (sign_ >= 0) return v <= 0x7fffffffffffffffULL;
    return v <= 0x8000000000000000ULL;
}

long long BigInt::to_int64() const {
    unsigned long long v = 0;
    for (std::size_t i = mag_.size(); i-- > 0;) v = (v << 32) | mag_[i];
    return sign_ < 0 ? -(long long)v : (long long)v;
}

std::size_t BigInt::hash() const {
    std::size_t h = (std::size_t)(sign_ + 1);
    for (std::uint32_t w : mag_) h = h * 1000003u + w;
    return h;
}

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    normalize();
}

void Rational::normalize() {
    if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
    if (num_.is_zero()) {
        den_ = BigInt(1);
        return;
    }
    if (den_.is_negative()) {
        num_ = -num_;
        den_ = -den_;
    }
    BigInt g = BigInt::gcd(num_, den_);
    if (!g.is_one()) {
        num_ = num_ / g;
        den_ = den_ / g;
    }
}

Rational Rational::from_string(std::string_view s) {
    auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rational(BigInt::from_decimal(s), BigInt(1));
    return Rational(BigInt::from_decimal(s.substr(0, slash)),
                    BigInt::from_decimal(s.substr(slash + 1)));
}

Rational Rational::operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
}

Rational Rational::operator+(const Rational& o) const {
    return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Rational Rational::operator-(const Rational& o) const {
    return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

Rational Rational::operator*(const Rational& o) const {
    return Rational(num_ * o.num_, den_ * o.den_);
}

Rational Rational::operator/(const Rational& o) const {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    return Rational(num_ * o.den_, den_ * o.num_);
}

Rational Rational::inverse() const {
    if (is_zero()) throw std::domain_error("Rational: inverse of zero");
    return Rational(den_, num_);
}

Rational Rational::abs() const { return is_negative() ? -*this : *this; }

bool Rational::operator<(const Rational& o) const {
    return (num_ * o.den_).cmp(o.num_ * den_) < 0;
}

std::string Rational::str() const {
    if (den_.is_one()) return num_.to_decimal();
    return num_.to_decimal() + "/" + den_.to_decimal();
}

std::size_t Rational::hash() const { return num_.hash() * 31 + den_.hash(); }

}  // namespace ncgb
