#include "arw/rational.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <stdexcept>

namespace arw {

namespace {
constexpr std::uint64_t kBase = 1ull << 32;
constexpr std::uint64_t kMask = kBase - 1;
}  // namespace

BigInt::BigInt(long long v) {
    if (v == 0) return;
    sign_ = v < 0 ? -1 : 1;
    // avoid UB on LLONG_MIN
    unsigned long long u = v < 0 ? ~static_cast<unsigned long long>(v) + 1ull
                                 : static_cast<unsigned long long>(v);
    while (u != 0) {
        mag_.push_back(static_cast<std::uint32_t>(u & kMask));
        u >>= 32;
    }
}

void BigInt::trim() {
    while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
    if (mag_.empty()) sign_ = 0;
}

int BigInt::cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

std::vector<std::uint32_t> BigInt::add_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    const auto& big = a.size() >= b.size() ? a : b;
    const auto& small = a.size() >= b.size() ? b : a;
    std::vector<std::uint32_t> out(big.size() + 1, 0);
    std::uint64_t carry = 0;
    for (size_t i = 0; i < big.size(); ++i) {
        std::uint64_t cur = carry + big[i] + (i < small.size() ? small[i] : 0u);
        out[i] = static_cast<std::uint32_t>(cur & kMask);
        carry = cur >> 32;
    }
    out[big.size()] = static_cast<std::uint32_t>(carry);
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

// requires |a| >= |b|
std::vector<std::uint32_t> BigInt::sub_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> out(a.size(), 0);
    std::int64_t borrow = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        std::int64_t cur = static_cast<std::int64_t>(a[i]) - borrow -
                           (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0);
        if (cur < 0) {
            cur += static_cast<std::int64_t>(kBase);
            borrow = 1;
        } else {
            borrow = 0;
        }
        out[i] = static_cast<std::uint32_t>(cur);
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

std::vector<std::uint32_t> BigInt::mul_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<std::uint32_t> out(a.size() + b.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
        std::uint64_t carry = 0;
        std::uint64_t ai = a[i];
        for (size_t j = 0; j < b.size(); ++j) {
            std::uint64_t cur = out[i + j] + ai * b[j] + carry;
            out[i + j] = static_cast<std::uint32_t>(cur & kMask);
            carry = cur >> 32;
        }
        out[i + b.size()] = static_cast<std::uint32_t>(carry);
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

// Knuth algorithm D.
void BigInt::divmod_mag(const std::vector<std::uint32_t>& u_in, const std::vector<std::uint32_t>& v_in,
                        std::vector<std::uint32_t>& q, std::vector<std::uint32_t>& r) {
    q.clear();
    r.clear();
    if (v_in.empty()) throw std::domain_error("BigInt: division by zero");
    if (cmp_mag(u_in, v_in) < 0) {
        r = u_in;
        return;
    }
    if (v_in.size() == 1) {
        std::uint64_t d = v_in[0];
        q.assign(u_in.size(), 0);
        std::uint64_t rem = 0;
        for (size_t i = u_in.size(); i-- > 0;) {
            std::uint64_t cur = (rem << 32) | u_in[i];
            q[i] = static_cast<std::uint32_t>(cur / d);
            rem = cur % d;
        }
        while (!q.empty() && q.back() == 0) q.pop_back();
        if (rem != 0) r.push_back(static_cast<std::uint32_t>(rem));
        return;
    }

    const int shift = std::countl_zero(v_in.back());
    const size_t n = v_in.size();
    const size_t m = u_in.size() - n;

    // normalized copies; u gets one extra high limb
    std::vector<std::uint32_t> v(n), u(u_in.size() + 1, 0);
    for (size_t i = n; i-- > 0;) {
        v[i] = (v_in[i] << shift);
        if (shift && i > 0) v[i] |= static_cast<std::uint32_t>(v_in[i - 1] >> (32 - shift));
    }
    for (size_t i = u_in.size(); i-- > 0;) {
        u[i] = (u_in[i] << shift);
        if (shift && i > 0) u[i] |= static_cast<std::uint32_t>(u_in[i - 1] >> (32 - shift));
    }
    if (shift) u[u_in.size()] = static_cast<std::uint32_t>(u_in.back() >> (32 - shift));

    q.assign(m + 1, 0);
    const std::uint64_t vtop = v[n - 1];
    const std::uint64_t vsecond = v[n - 2];

    for (size_t j = m + 1; j-- > 0;) {
        std::uint64_t numer = (static_cast<std::uint64_t>(u[j + n]) << 32) | u[j + n - 1];
        std::uint64_t qhat = numer / vtop;
        std::uint64_t rhat = numer % vtop;
        while (qhat >= kBase || qhat * vsecond > ((rhat << 32) | u[j + n - 2])) {
            --qhat;
            rhat += vtop;
            if (rhat >= kBase) break;
        }
        // multiply-subtract qhat * v from u[j .. j+n]
        std::uint64_t carry = 0;
        std::int64_t borrow = 0;
        for (size_t i = 0; i < n; ++i) {
            std::uint64_t p = qhat * v[i] + carry;
            carry = p >> 32;
            std::int64_t cur = static_cast<std::int64_t>(u[i + j]) - borrow -
                               static_cast<std::int64_t>(p & kMask);
            if (cur < 0) {
                cur += static_cast<std::int64_t>(kBase);
                borrow = 1;
            } else {
                borrow = 0;
            }
            u[i + j] = static_cast<std::uint32_t>(cur);
        }
        std::int64_t top = static_cast<std::int64_t>(u[j + n]) - borrow -
                           static_cast<std::int64_t>(carry);
        if (top < 0) {
            // qhat one too large: add v back
            --qhat;
            std::uint64_t c2 = 0;
            for (size_t i = 0; i < n; ++i) {
                std::uint64_t cur = static_cast<std::uint64_t>(u[i + j]) + v[i] + c2;
                u[i + j] = static_cast<std::uint32_t>(cur & kMask);
                c2 = cur >> 32;
            }
            top += static_cast<std::int64_t>(c2) + static_cast<std::int64_t>(kBase);
        }
        u[j + n] = static_cast<std::uint32_t>(top);
        q[j] = static_cast<std::uint32_t>(qhat);
    }

    while (!q.empty() && q.back() == 0) q.pop_back();
    // denormalize remainder
    r.assign(n, 0);
    for (size_t i = 0; i < n; ++i) {
        r[i] = u[i] >> shift;
        if (shift && i + 1 < u.size()) r[i] |= static_cast<std::uint32_t>(static_cast<std::uint64_t>(u[i + 1]) << (32 - shift));
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
}

BigInt BigInt::operator-() const {
    BigInt out = *this;
    out.sign_ = -out.sign_;
    return out;
}

BigInt BigInt::abs() const {
    BigInt out = *this;
    if (out.sign_ < 0) out.sign_ = 1;
    return out;
}

BigInt operator+(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0) return b;
    if (b.sign_ == 0) return a;
    BigInt out;
    if (a.sign_ == b.sign_) {
        out.mag_ = BigInt::add_mag(a.mag_, b.mag_);
        out.sign_ = a.sign_;
    } else {
        int c = BigInt::cmp_mag(a.mag_, b.mag_);
        if (c == 0) return BigInt();
        if (c > 0) {
            out.mag_ = BigInt::sub_mag(a.mag_, b.mag_);
            out.sign_ = a.sign_;
        } else {
            out.mag_ = BigInt::sub_mag(b.mag_, a.mag_);
            out.sign_ = b.sign_;
        }
    }
    return out;
}

BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

BigInt operator*(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0 || b.sign_ == 0) return BigInt();
    BigInt out;
    out.mag_ = BigInt::mul_mag(a.mag_, b.mag_);
    out.sign_ = a.sign_ * b.sign_;
    return out;
}

void BigInt::divmod(const BigInt& u, const BigInt& v, BigInt& q, BigInt& r) {
    std::vector<std::uint32_t> qm, rm;
    divmod_mag(u.mag_, v.mag_, qm, rm);
    q = BigInt();
    r = BigInt();
    q.mag_ = std::move(qm);
    r.mag_ = std::move(rm);
    if (!q.mag_.empty()) q.sign_ = u.sign_ * v.sign_;
    if (!r.mag_.empty()) r.sign_ = u.sign_;
}

BigInt operator/(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    BigInt::divmod(a, b, q, r);
    return q;
}

BigInt operator%(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    BigInt::divmod(a, b, q, r);
    return r;
}

std::strong_ordering BigInt::operator<=>(const BigInt& rhs) const {
    if (sign_ != rhs.sign_) return sign_ <=> rhs.sign_;
    int c = cmp_mag(mag_, rhs.mag_);
    if (sign_ < 0) c = -c;
    return c <=> 0;
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
    a.sign_ = a.mag_.empty() ? 0 : 1;
    b.sign_ = b.mag_.empty() ? 0 : 1;
    while (!b.is_zero()) {
        BigInt r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

bool BigInt::fits_longlong() const {
    if (mag_.size() > 2) return false;
    if (mag_.size() < 2) return true;
    std::uint64_t v = (static_cast<std::uint64_t>(mag_[1]) << 32) | mag_[0];
    if (sign_ > 0) return v <= 0x7fffffffffffffffull;
    return v <= 0x8000000000000000ull;
}

long long BigInt::to_longlong() const {
    if (!fits_longlong()) throw std::overflow_error("BigInt: value does not fit in long long");
    std::uint64_t v = 0;
    for (size_t i = mag_.size(); i-- > 0;) v = (v << 32) | mag_[i];
    if (sign_ < 0) return -static_cast<long long>(v - 1) - 1;
    return static_cast<long long>(v);
}

std::string BigInt::to_string() const {
    if (sign_ == 0) return "0";
    std::vector<std::uint32_t> work = mag_;
    std::string digits;
    while (!work.empty()) {
        std::uint64_t rem = 0;
        for (size_t i = work.size(); i-- > 0;) {
            std::uint64_t cur = (rem << 32) | work[i];
            work[i] = static_cast<std::uint32_t>(cur / 1000000000ull);
            rem = cur % 1000000000ull;
        }
        while (!work.empty() && work.back() == 0) work.pop_back();
        for (int k = 0; k < 9; ++k) {
            digits.push_back(static_cast<char>('0' + rem % 10));
            rem /= 10;
        }
    }
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
    if (sign_ < 0) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

BigInt BigInt::from_string(std::string_view text) {
    size_t pos = 0;
    int sign = 1;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        if (text[pos] == '-') sign = -1;
        ++pos;
    }
    if (pos == text.size()) throw std::invalid_argument("BigInt: empty numeral");
    BigInt out;
    for (; pos < text.size(); ++pos) {
        char c = text[pos];
        if (c < '0' || c > '9') throw std::invalid_argument("BigInt: bad digit in numeral");
        // out = out * 10 + digit
        std::uint64_t carry = static_cast<std::uint64_t>(c - '0');
        for (size_t i = 0; i < out.mag_.size(); ++i) {
            std::uint64_t cur = static_cast<std::uint64_t>(out.mag_[i]) * 10ull + carry;
            out.mag_[i] = static_cast<std::uint32_t>(cur & kMask);
            carry = cur >> 32;
        }
        if (carry) out.mag_.push_back(static_cast<std::uint32_t>(carry));
    }
    out.trim();
    if (!out.mag_.empty()) out.sign_ = sign;
    return out;
}

// ---------------------------------------------------------------------------

Rational::Rational(long long num, long long den) : num_(num), den_(den) { normalize(); }

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    normalize();
}

void Rational::normalize() {
    if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
    if (den_.is_negative()) {
        den_ = -den_;
        num_ = -num_;
    }
    if (num_.is_zero()) {
        den_ = BigInt(1);
        return;
    }
    BigInt g = BigInt::gcd(num_, den_);
    if (g != BigInt(1)) {
        num_ = num_ / g;
        den_ = den_ / g;
    }
}

bool Rational::is_integer() const { return den_ == BigInt(1); }

bool Rational::is_one() const { return num_ == BigInt(1) && den_ == BigInt(1); }

Rational Rational::operator-() const {
    Rational out = *this;
    out.num_ = -out.num_;
    return out;
}

Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("Rational: division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

std::strong_ordering Rational::operator<=>(const Rational& rhs) const {
    return (num_ * rhs.den_) <=> (rhs.num_ * den_);
}

Rational Rational::reciprocal() const {
    if (is_zero()) throw std::domain_error("Rational: reciprocal of zero");
    return Rational(den_, num_);
}

Rational Rational::from_string(std::string_view text) {
    size_t slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(BigInt::from_string(text), BigInt(1));
    return Rational(BigInt::from_string(text.substr(0, slash)),
                    BigInt::from_string(text.substr(slash + 1)));
}

std::string Rational::to_string() const {
    if (is_integer()) return num_.to_string();
    return num_.to_string() + "/" + den_.to_string();
}

std::string Rational::to_decimal(int significant_digits) const {
    if (is_zero()) return "0";
    std::string out;
    BigInt a = num_.abs();
    const BigInt& b = den_;
    BigInt q, r;
    BigInt::divmod(a, b, q, r);
    std::string ipart = q.to_string();
    int significant = q.is_zero() ? 0 : static_cast<int>(ipart.size());
    std::string frac;
    BigInt ten(10);
    bool leading = q.is_zero();
    // one extra digit decides rounding
    while (!r.is_zero() && significant <= significant_digits) {
        BigInt d, r2;
        BigInt::divmod(r * ten, b, d, r2);
        frac.push_back(static_cast<char>('0' + d.to_longlong()));
        r = std::move(r2);
        if (!(leading && d.is_zero())) {
            leading = false;
            ++significant;
        }
    }
    if (!frac.empty() && significant > significant_digits) {
        // round half up on the extra digit
        bool up = frac.back() >= '5';
        frac.pop_back();
        if (up) {
            int i = static_cast<int>(frac.size()) - 1;
            for (; i >= 0; --i) {
                if (frac[i] == '9') {
                    frac[i] = '0';
                } else {
                    ++frac[i];
                    break;
                }
            }
            if (i < 0) {
                // carry into the integer part
                int j = static_cast<int>(ipart.size()) - 1;
                for (; j >= 0; --j) {
                    if (ipart[j] == '9') {
                        ipart[j] = '0';
                    } else {
                        ++ipart[j];
                        break;
                    }
                }
                if (j < 0) ipart.insert(ipart.begin(), '1');
            }
        }
        while (!frac.empty() && frac.back() == '0') frac.pop_back();
    }
    if (is_negative()) out.push_back('-');
    out += ipart;
    if (!frac.empty()) {
        out.push_back('.');
        out += frac;
    }
    return out;
}

}  // namespace arw
