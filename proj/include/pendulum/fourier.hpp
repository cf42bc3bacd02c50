#ifndef PENDULUM_FOURIER_HPP
#define PENDULUM_FOURIER_HPP

#include "pendulum/alpha_poly.hpp"

#include <compare>
#include <map>
#include <stdexcept>
#include <string>

namespace pendulum {

/// Raised when a series with nonzero mean is integrated in tau.
class SecularTermError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Trig : std::uint8_t { Cos, Sin };

/// One Fourier mode. Frequencies are measured in units of 1/2, so
/// {3, Cos} is cos(3*tau/2).
struct Harmonic {
    int half_k = 0;
    Trig kind = Trig::Cos;

    friend auto operator<=>(const Harmonic&, const Harmonic&) = default;
};

/// Finite Fourier series in tau with AlphaPoly coefficients, in the
/// cos/sin basis. At most one entry per harmonic, no sin(0), no zeros.
class FourierSeries {
public:
    using ModeMap = std::map<Harmonic, AlphaPoly>;

    FourierSeries() = default;
    FourierSeries(const AlphaPoly& constant);  // NOLINT(google-explicit-constructor)

    static FourierSeries cos_half(int half_k, const AlphaPoly& c = AlphaPoly(1));
    static FourierSeries sin_half(int half_k, const AlphaPoly& c = AlphaPoly(1));
    /// cos(k*tau) and sin(k*tau) for integer k.
    static FourierSeries cos(int k, const AlphaPoly& c = AlphaPoly(1)) { return cos_half(2 * k, c); }
    static FourierSeries sin(int k, const AlphaPoly& c = AlphaPoly(1)) { return sin_half(2 * k, c); }

    bool is_zero() const { return modes_.empty(); }
    const ModeMap& modes() const { return modes_; }
    AlphaPoly coefficient(Harmonic h) const;

    /// Derivative with respect to tau, term by term.
    FourierSeries derivative() const;
    double evaluate(double tau, const std::vector<double>& unknowns = {}) const;
    std::string str() const;

    FourierSeries operator-() const;
    FourierSeries& operator+=(const FourierSeries& o);
    FourierSeries& operator-=(const FourierSeries& o);
    FourierSeries& operator*=(const AlphaPoly& c);

    friend FourierSeries operator+(FourierSeries a, const FourierSeries& b) { return a += b; }
    friend FourierSeries operator-(FourierSeries a, const FourierSeries& b) { return a -= b; }
    friend FourierSeries operator*(FourierSeries a, const AlphaPoly& c) { return a *= c; }
    friend FourierSeries operator*(const AlphaPoly& c, FourierSeries a) { return a *= c; }
    friend bool operator==(const FourierSeries& a, const FourierSeries& b) { return a.modes_ == b.modes_; }

    bool valid() const;

private:
    friend FourierSeries fourier_mul(const FourierSeries& f, const FourierSeries& g);
    void add_mode(Harmonic h, const AlphaPoly& c);

    ModeMap modes_;
};

/// Exact product, re-expanded with the product-to-sum identities.
FourierSeries fourier_mul(const FourierSeries& f, const FourierSeries& g);

/// Mean over one period: the constant coefficient.
AlphaPoly tau_average(const FourierSeries& f);

/// Zero-mean antiderivative in tau. Throws SecularTermError if f has a
/// nonzero mean.
FourierSeries tau_antiderivative_zero_mean(const FourierSeries& f);

/// Quadratic form qxx*X^2 + qxy*X*Y + qyy*Y^2 with tau-periodic coefficients.
struct PeriodicQuadForm {
    FourierSeries qxx;
    FourierSeries qxy;
    FourierSeries qyy;

    bool is_zero() const { return qxx.is_zero() && qxy.is_zero() && qyy.is_zero(); }
    double evaluate(double x, double y, double tau, const std::vector<double>& unknowns = {}) const;
    std::string str() const;
    bool valid() const { return qxx.valid() && qxy.valid() && qyy.valid(); }

    PeriodicQuadForm operator-() const { return {-qxx, -qxy, -qyy}; }
    PeriodicQuadForm& operator+=(const PeriodicQuadForm& o);
    PeriodicQuadForm& operator-=(const PeriodicQuadForm& o);
    PeriodicQuadForm& operator*=(const AlphaPoly& c);

    friend PeriodicQuadForm operator+(PeriodicQuadForm a, const PeriodicQuadForm& b) { return a += b; }
    friend PeriodicQuadForm operator-(PeriodicQuadForm a, const PeriodicQuadForm& b) { return a -= b; }
    friend PeriodicQuadForm operator*(PeriodicQuadForm a, const AlphaPoly& c) { return a *= c; }
    friend PeriodicQuadForm operator*(const AlphaPoly& c, PeriodicQuadForm a) { return a *= c; }
    friend bool operator==(const PeriodicQuadForm&, const PeriodicQuadForm&) = default;
};

/// Canonical bracket {F, G} = F_X G_Y - F_Y G_X.
PeriodicQuadForm poisson_bracket(const PeriodicQuadForm& f, const PeriodicQuadForm& g);

/// Applies tau_average to each coefficient.
PeriodicQuadForm tau_average(const PeriodicQuadForm& f);
PeriodicQuadForm tau_antiderivative_zero_mean(const PeriodicQuadForm& f);
PeriodicQuadForm tau_derivative(const PeriodicQuadForm& f);

}  // namespace pendulum

#endif  // PENDULUM_FOURIER_HPP
