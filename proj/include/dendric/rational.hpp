#ifndef DENDRIC_RATIONAL_HPP
#define DENDRIC_RATIONAL_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace dendric {

// Arbitrary-precision signed integer, sign + base-10^9 magnitude.
// Interval refinements and induction steps multiply denominators, so
// fixed-width arithmetic overflows quickly; everything exact lives here.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long v);
    static BigInt from_string(const std::string& s);

    bool is_zero() const { return mag_.empty(); }
    bool is_negative() const { return neg_; }
    int sign() const { return mag_.empty() ? 0 : (neg_ ? -1 : 1); }

    BigInt operator-() const;
    BigInt operator+(const BigInt& o) const;
    BigInt operator-(const BigInt& o) const;
    BigInt operator*(const BigInt& o) const;
    BigInt operator/(const BigInt& o) const;  // truncated toward zero
    BigInt operator%(const BigInt& o) const;

    bool operator==(const BigInt& o) const { return neg_ == o.neg_ && mag_ == o.mag_; }
    bool operator!=(const BigInt& o) const { return !(*this == o); }
    bool operator<(const BigInt& o) const;
    bool operator<=(const BigInt& o) const { return *this < o || *this == o; }
    bool operator>(const BigInt& o) const { return o < *this; }
    bool operator>=(const BigInt& o) const { return o <= *this; }

    BigInt abs() const;
    std::string str() const;
    double to_double() const;

    static BigInt gcd(BigInt a, BigInt b);

private:
    // little-endian limbs, no leading zero limb; empty means 0
    bool neg_ = false;
    std::vector<uint32_t> mag_;

    static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> mul_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static void divmod_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                           std::vector<uint32_t>& q, std::vector<uint32_t>& r);
    void trim();
};

// Exact rational, always reduced, denominator > 0.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long v) : num_(v), den_(1) {}
    Rational(BigInt num, BigInt den);
    static Rational parse(const std::string& s);  // "p/q" or "p"

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;
    Rational operator-() const;

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const;
    bool operator<=(const Rational& o) const { return *this < o || *this == o; }
    bool operator>(const Rational& o) const { return o < *this; }
    bool operator>=(const Rational& o) const { return o <= *this; }

    bool is_zero() const { return num_.is_zero(); }
    int sign() const { return num_.sign(); }
    Rational abs() const;
    std::string str() const;  // "p/q", or "p" when q == 1
    double to_double() const;

private:
    BigInt num_, den_;
    void reduce();
};

}  // namespace dendric

#endif
