#ifndef PENDULUM_ALPHA_POLY_HPP
#define PENDULUM_ALPHA_POLY_HPP

#include "pendulum/rational.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace pendulum {

// Exponent vectors have a fixed width. a1..a8 are available; the default
// normalization depth uses a1..a6.
inline constexpr int kMaxUnknowns = 8;
inline constexpr int kDefaultOrder = 6;

using Exponents = std::array<std::uint8_t, kMaxUnknowns>;

int total_degree(const Exponents& e);

// Graded-lexicographic: lower total degree first, ties broken so that a
// higher power of a1 comes first (a1^2 < a1*a2 < a2^2).
struct GradedLex {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Polynomial over BigRational in the boundary-series unknowns a1..a8.
/// No zero coefficients are ever stored.
class AlphaPoly {
public:
    using TermMap = std::map<Exponents, BigRational, GradedLex>;

    AlphaPoly() = default;
    AlphaPoly(const BigRational& c);  // NOLINT(google-explicit-constructor)
    AlphaPoly(long c) : AlphaPoly(BigRational(c)) {}  // NOLINT(google-explicit-constructor)

    /// The unknown a_j, 1-based.
    static AlphaPoly unknown(int j);
    static AlphaPoly monomial(const Exponents& e, const BigRational& c);
    /// Parses the debug form written by str(), e.g. "-3/16 -3/4*a1 +1/2*a2".
    static AlphaPoly parse(std::string_view text);

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    /// Coefficient of the constant monomial.
    BigRational constant_term() const;
    /// Highest exponent of a_j over all terms.
    int degree_in(int j) const;
    /// Largest j for which a_j occurs, or 0 for a constant.
    int highest_unknown() const;
    int total_degree() const;

    /// Replaces a_j by the given value.
    AlphaPoly substitute(int j, const BigRational& value) const;
    /// Splits p = c0 + c1*a_j + (higher powers); returns {c0, c1}.
    std::pair<AlphaPoly, AlphaPoly> affine_parts(int j) const;
    /// Numerical value; values[j-1] is a_j.
    double evaluate(const std::vector<double>& values) const;

    std::string str() const;

    AlphaPoly operator-() const;
    AlphaPoly& operator+=(const AlphaPoly& o);
    AlphaPoly& operator-=(const AlphaPoly& o);
    AlphaPoly& operator*=(const BigRational& c);

    friend AlphaPoly operator+(AlphaPoly a, const AlphaPoly& b) { return a += b; }
    friend AlphaPoly operator-(AlphaPoly a, const AlphaPoly& b) { return a -= b; }
    friend AlphaPoly operator*(AlphaPoly a, const BigRational& c) { return a *= c; }
    friend AlphaPoly operator*(const BigRational& c, AlphaPoly a) { return a *= c; }
    friend AlphaPoly operator*(const AlphaPoly& a, const AlphaPoly& b);

    friend bool operator==(const AlphaPoly& a, const AlphaPoly& b) { return a.terms_ == b.terms_; }

    /// Checks the canonical-form invariants.
    bool valid() const;

private:
    void add_term(const Exponents& e, const BigRational& c);

    TermMap terms_;
};

}  // namespace pendulum

#endif  // PENDULUM_ALPHA_POLY_HPP
