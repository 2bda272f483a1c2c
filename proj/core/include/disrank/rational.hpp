#ifndef DISRANK_RATIONAL_HPP
#define DISRANK_RATIONAL_HPP

#include <gmpxx.h>

#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace disrank {

/// Arbitrary-precision integer (walk counts, discussion-count entries).
using BigInt = mpz_class;

/// Exact rational scalar. Always canonical: lowest terms, denominator > 0,
/// zero stored as 0/1. Equality is therefore structural.
class BigRational {
public:
    BigRational() : value_(0) {}
    BigRational(long n) : value_(n) {}  // NOLINT: implicit by design
    BigRational(const BigInt& n) : value_(n) {}

    BigRational(BigInt numerator, BigInt denominator) {
        if (denominator == 0) {
            throw std::domain_error("BigRational: zero denominator");
        }
        value_ = mpq_class(std::move(numerator), std::move(denominator));
        value_.canonicalize();
    }

    /// Parses "p", "-p" or "p/q" (q > 0 after sign normalization).
    static BigRational from_string(const std::string& text);

    const BigInt& numerator() const { return value_.get_num(); }
    const BigInt& denominator() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    /// "p" when the denominator is 1, else "p/q".
    std::string to_string() const {
        return is_integer() ? value_.get_num().get_str() : value_.get_str();
    }

    BigRational operator-() const { return BigRational(mpq_class(-value_)); }

    BigRational& operator+=(const BigRational& o) { value_ += o.value_; return *this; }
    BigRational& operator-=(const BigRational& o) { value_ -= o.value_; return *this; }
    BigRational& operator*=(const BigRational& o) { value_ *= o.value_; return *this; }
    BigRational& operator/=(const BigRational& o) {
        if (o.is_zero()) throw std::domain_error("BigRational: division by zero");
        value_ /= o.value_;
        return *this;
    }

    friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
    friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
    friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
    friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }

    friend bool operator==(const BigRational& a, const BigRational& b) {
        return cmp(a.value_, b.value_) == 0;
    }
    friend bool operator!=(const BigRational& a, const BigRational& b) { return !(a == b); }
    friend bool operator<(const BigRational& a, const BigRational& b) {
        return cmp(a.value_, b.value_) < 0;
    }
    friend bool operator<=(const BigRational& a, const BigRational& b) {
        return cmp(a.value_, b.value_) <= 0;
    }
    friend bool operator>(const BigRational& a, const BigRational& b) { return b < a; }
    friend bool operator>=(const BigRational& a, const BigRational& b) { return b <= a; }

    friend std::ostream& operator<<(std::ostream& os, const BigRational& r) {
        return os << r.to_string();
    }

private:
    explicit BigRational(mpq_class v) : value_(std::move(v)) {}

    mpq_class value_;  // invariant: canonical (gmp ops preserve this)
};

inline BigRational BigRational::from_string(const std::string& text) {
    auto parse_int = [&](const std::string& part) -> BigInt {
        if (part.empty()) throw std::invalid_argument("empty integer in rational '" + text + "'");
        std::size_t start = (part[0] == '-' || part[0] == '+') ? 1 : 0;
        if (start == part.size()) throw std::invalid_argument("bad rational '" + text + "'");
        for (std::size_t i = start; i < part.size(); ++i) {
            if (part[i] < '0' || part[i] > '9') {
                throw std::invalid_argument("bad rational '" + text + "'");
            }
        }
        return BigInt(part);
    };
    auto slash = text.find('/');
    if (slash == std::string::npos) return BigRational(parse_int(text));
    BigInt num = parse_int(text.substr(0, slash));
    BigInt den = parse_int(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in rational '" + text + "'");
    return BigRational(std::move(num), std::move(den));
}

}  // namespace disrank

#endif
