#ifndef PENDULUM_RATIONAL_HPP
#define PENDULUM_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

namespace pendulum {

/// Exact rational number, always in lowest terms with a positive denominator.
class BigRational {
public:
    BigRational() = default;
    BigRational(long n) : value_(n) {}                // NOLINT(google-explicit-constructor)
    BigRational(long n, long d);
    explicit BigRational(const mpq_class& q);

    /// Parses "p" or "p/q" (optional leading sign).
    static BigRational parse(std::string_view text);
    /// Exact binary value of a finite double.
    static BigRational from_double(double x);

    bool is_zero() const { return sgn(value_) == 0; }
    int sign() const { return sgn(value_); }
    double to_double() const { return value_.get_d(); }
    std::string str() const;

    std::string numerator_str() const { return value_.get_num().get_str(); }
    std::string denominator_str() const { return value_.get_den().get_str(); }

    const mpq_class& raw() const { return value_; }

    BigRational operator-() const { return BigRational(mpq_class(-value_)); }
    BigRational& operator+=(const BigRational& o);
    BigRational& operator-=(const BigRational& o);
    BigRational& operator*=(const BigRational& o);
    BigRational& operator/=(const BigRational& o);

    friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
    friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
    friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
    friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }

    friend bool operator==(const BigRational& a, const BigRational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b);

private:
    mpq_class value_{0};
};

BigRational binomial(int n, int k);
BigRational factorial(int n);

}  // namespace pendulum

#endif  // PENDULUM_RATIONAL_HPP
