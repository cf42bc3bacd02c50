#include "pendulum/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace pendulum {

BigRational::BigRational(long n, long d) {
    if (d == 0) throw std::domain_error("BigRational: zero denominator");
    value_ = mpq_class(n, d);
    value_.canonicalize();
}

BigRational::BigRational(const mpq_class& q) : value_(q) { value_.canonicalize(); }

BigRational BigRational::parse(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw std::invalid_argument("BigRational::parse: empty string");
    if (s.front() == '+') s.erase(0, 1);
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("BigRational::parse: bad rational '" + std::string(text) + "'");
    if (sgn(q.get_den()) == 0) throw std::domain_error("BigRational::parse: zero denominator");
    return BigRational(q);
}

BigRational BigRational::from_double(double x) {
    if (!std::isfinite(x)) throw std::domain_error("BigRational::from_double: non-finite value");
    return BigRational(mpq_class(x));
}

std::string BigRational::str() const { return value_.get_str(); }

BigRational& BigRational::operator+=(const BigRational& o) {
    value_ += o.value_;
    return *this;
}

BigRational& BigRational::operator-=(const BigRational& o) {
    value_ -= o.value_;
    return *this;
}

BigRational& BigRational::operator*=(const BigRational& o) {
    value_ *= o.value_;
    return *this;
}

BigRational& BigRational::operator/=(const BigRational& o) {
    if (o.is_zero()) throw std::domain_error("BigRational: division by zero");
    value_ /= o.value_;
    return *this;
}

std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
    const int c = cmp(a.value_, b.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

BigRational binomial(int n, int k) {
    if (k < 0 || k > n) return BigRational(0);
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return BigRational(mpq_class(r));
}

BigRational factorial(int n) {
    if (n < 0) throw std::domain_error("factorial of negative number");
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return BigRational(mpq_class(r));
}

}  // namespace pendulum
