#include "dendric/rational.hpp"

#include <algorithm>
#include <stdexcept>

namespace dendric {

namespace {
constexpr uint64_t kBase = 1000000000ull;
}

BigInt::BigInt(long long v) {
    neg_ = v < 0;
    unsigned long long u = neg_ ? -static_cast<unsigned long long>(v) : static_cast<unsigned long long>(v);
    while (u) {
        mag_.push_back(static_cast<uint32_t>(u % kBase));
        u /= kBase;
    }
}

BigInt BigInt::from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty integer literal");
    size_t i = 0;
    bool neg = false;
    if (s[0] == '-' || s[0] == '+') {
        neg = s[0] == '-';
        i = 1;
    }
    if (i == s.size()) throw std::invalid_argument("bad integer literal: " + s);
    BigInt r;
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("bad integer literal: " + s);
        r = r * BigInt(10) + BigInt(s[i] - '0');
    }
    r.neg_ = neg && !r.mag_.empty();
    return r;
}

void BigInt::trim() {
    while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
    if (mag_.empty()) neg_ = false;
}

int BigInt::cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

std::vector<uint32_t> BigInt::add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    std::vector<uint32_t> r;
    r.reserve(std::max(a.size(), b.size()) + 1);
    uint64_t carry = 0;
    for (size_t i = 0; i < std::max(a.size(), b.size()) || carry; ++i) {
        uint64_t s = carry;
        if (i < a.size()) s += a[i];
        if (i < b.size()) s += b[i];
        r.push_back(static_cast<uint32_t>(s % kBase));
        carry = s / kBase;
    }
    return r;
}

// requires a >= b
std::vector<uint32_t> BigInt::sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    std::vector<uint32_t> r = a;
    int64_t borrow = 0;
    for (size_t i = 0; i < r.size(); ++i) {
        int64_t cur = static_cast<int64_t>(r[i]) - borrow - (i < b.size() ? b[i] : 0);
        if (cur < 0) {
            cur += kBase;
            borrow = 1;
        } else {
            borrow = 0;
        }
        r[i] = static_cast<uint32_t>(cur);
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

std::vector<uint32_t> BigInt::mul_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<uint64_t> acc(a.size() + b.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
        uint64_t carry = 0;
        for (size_t j = 0; j < b.size() || carry; ++j) {
            uint64_t cur = acc[i + j] + carry;
            if (j < b.size()) cur += static_cast<uint64_t>(a[i]) * b[j];
            acc[i + j] = cur % kBase;
            carry = cur / kBase;
        }
    }
    std::vector<uint32_t> r(acc.size());
    for (size_t i = 0; i < acc.size(); ++i) r[i] = static_cast<uint32_t>(acc[i]);
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

// schoolbook long division, per-limb binary search on the quotient digit
void BigInt::divmod_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                        std::vector<uint32_t>& q, std::vector<uint32_t>& r) {
    if (b.empty()) throw std::domain_error("division by zero");
    q.assign(a.size(), 0);
    r.clear();
    for (size_t i = a.size(); i-- > 0;) {
        r.insert(r.begin(), a[i]);
        while (!r.empty() && r.back() == 0) r.pop_back();
        uint32_t lo = 0, hi = kBase - 1, digit = 0;
        while (lo <= hi) {
            uint32_t mid = lo + (hi - lo) / 2;
            std::vector<uint32_t> t = mul_mag(b, {mid});
            if (cmp_mag(t, r) <= 0) {
                digit = mid;
                lo = mid + 1;
            } else {
                if (mid == 0) break;
                hi = mid - 1;
            }
        }
        q[i] = digit;
        if (digit) r = sub_mag(r, mul_mag(b, {digit}));
    }
    while (!q.empty() && q.back() == 0) q.pop_back();
}

BigInt BigInt::operator-() const {
    BigInt r = *this;
    if (!r.mag_.empty()) r.neg_ = !r.neg_;
    return r;
}

BigInt BigInt::operator+(const BigInt& o) const {
    BigInt r;
    if (neg_ == o.neg_) {
        r.mag_ = add_mag(mag_, o.mag_);
        r.neg_ = neg_;
    } else if (cmp_mag(mag_, o.mag_) >= 0) {
        r.mag_ = sub_mag(mag_, o.mag_);
        r.neg_ = neg_;
    } else {
        r.mag_ = sub_mag(o.mag_, mag_);
        r.neg_ = o.neg_;
    }
    r.trim();
    return r;
}

BigInt BigInt::operator-(const BigInt& o) const { return *this + (-o); }

BigInt BigInt::operator*(const BigInt& o) const {
    BigInt r;
    r.mag_ = mul_mag(mag_, o.mag_);
    r.neg_ = !r.mag_.empty() && (neg_ != o.neg_);
    return r;
}

BigInt BigInt::operator/(const BigInt& o) const {
    BigInt q, r;
    divmod_mag(mag_, o.mag_, q.mag_, r.mag_);
    q.neg_ = !q.mag_.empty() && (neg_ != o.neg_);
    return q;
}

BigInt BigInt::operator%(const BigInt& o) const {
    BigInt q, r;
    divmod_mag(mag_, o.mag_, q.mag_, r.mag_);
    r.neg_ = !r.mag_.empty() && neg_;
    return r;
}

bool BigInt::operator<(const BigInt& o) const {
    if (neg_ != o.neg_) return neg_;
    int c = cmp_mag(mag_, o.mag_);
    return neg_ ? c > 0 : c < 0;
}

BigInt BigInt::abs() const {
    BigInt r = *this;
    r.neg_ = false;
    return r;
}

std::string BigInt::str() const {
    if (mag_.empty()) return "0";
    std::string s = neg_ ? "-" : "";
    s += std::to_string(mag_.back());
    for (size_t i = mag_.size() - 1; i-- > 0;) {
        std::string limb = std::to_string(mag_[i]);
        s += std::string(9 - limb.size(), '0') + limb;
    }
    return s;
}

double BigInt::to_double() const {
    double v = 0;
    for (size_t i = mag_.size(); i-- > 0;) v = v * static_cast<double>(kBase) + mag_[i];
    return neg_ ? -v : v;
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
    a = a.abs();
    b = b.abs();
    while (!b.is_zero()) {
        BigInt t = a % b;
        a = b;
        b = t;
    }
    return a;
}

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("rational with zero denominator");
    reduce();
}

void Rational::reduce() {
    if (den_.is_negative()) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_.is_zero()) {
        den_ = BigInt(1);
        return;
    }
    BigInt g = BigInt::gcd(num_, den_);
    num_ = num_ / g;
    den_ = den_ / g;
}

Rational Rational::parse(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(BigInt::from_string(s), BigInt(1));
    return Rational(BigInt::from_string(s.substr(0, slash)), BigInt::from_string(s.substr(slash + 1)));
}

Rational Rational::operator+(const Rational& o) const {
    return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}
Rational Rational::operator-(const Rational& o) const {
    return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}
Rational Rational::operator*(const Rational& o) const { return Rational(num_ * o.num_, den_ * o.den_); }
Rational Rational::operator/(const Rational& o) const {
    if (o.is_zero()) throw std::domain_error("rational division by zero");
    return Rational(num_ * o.den_, den_ * o.num_);
}
Rational Rational::operator-() const { return Rational(-num_, den_); }

bool Rational::operator<(const Rational& o) const { return num_ * o.den_ < o.num_ * den_; }

Rational Rational::abs() const { return Rational(num_.abs(), den_); }

std::string Rational::str() const {
    if (den_ == BigInt(1)) return num_.str();
    return num_.str() + "/" + den_.str();
}

double Rational::to_double() const { return num_.to_double() / den_.to_double(); }

}  // namespace dendric
