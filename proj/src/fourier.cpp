#include "pendulum/fourier.hpp"

#include <cmath>
#include <cstdlib>

namespace pendulum {

FourierSeries::FourierSeries(const AlphaPoly& constant) { add_mode({0, Trig::Cos}, constant); }

FourierSeries FourierSeries::cos_half(int half_k, const AlphaPoly& c) {
    FourierSeries f;
    f.add_mode({std::abs(half_k), Trig::Cos}, c);
    return f;
}

FourierSeries FourierSeries::sin_half(int half_k, const AlphaPoly& c) {
    FourierSeries f;
    if (half_k < 0)
        f.add_mode({-half_k, Trig::Sin}, -c);
    else
        f.add_mode({half_k, Trig::Sin}, c);
    return f;
}

void FourierSeries::add_mode(Harmonic h, const AlphaPoly& c) {
    if (h.half_k < 0) {
        h.half_k = -h.half_k;
        if (h.kind == Trig::Sin) {
            add_mode(h, -c);
            return;
        }
    }
    if (h.kind == Trig::Sin && h.half_k == 0) return;
    if (c.is_zero()) return;
    auto [it, inserted] = modes_.try_emplace(h, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) modes_.erase(it);
    }
}

AlphaPoly FourierSeries::coefficient(Harmonic h) const {
    auto it = modes_.find(h);
    return it == modes_.end() ? AlphaPoly() : it->second;
}

FourierSeries FourierSeries::derivative() const {
    FourierSeries out;
    for (const auto& [h, c] : modes_) {
        if (h.half_k == 0) continue;
        const BigRational w(h.half_k, 2);
        if (h.kind == Trig::Cos)
            out.add_mode({h.half_k, Trig::Sin}, c * (-w));
        else
            out.add_mode({h.half_k, Trig::Cos}, c * w);
    }
    return out;
}

double FourierSeries::evaluate(double tau, const std::vector<double>& unknowns) const {
    double sum = 0.0;
    for (const auto& [h, c] : modes_) {
        const double arg = 0.5 * h.half_k * tau;
        sum += c.evaluate(unknowns) * (h.kind == Trig::Cos ? std::cos(arg) : std::sin(arg));
    }
    return sum;
}

namespace {

std::string frequency_str(int half_k) {
    if (half_k == 2) return "t";
    if (half_k % 2 == 0) return std::to_string(half_k / 2) + "t";
    if (half_k == 1) return "t/2";
    return std::to_string(half_k) + "t/2";
}

}  // namespace

std::string FourierSeries::str() const {
    if (modes_.empty()) return "0";
    std::string out;
    for (const auto& [h, c] : modes_) {
        if (!out.empty()) out += " + ";
        out += '(' + c.str() + ')';
        if (h.half_k != 0) out += std::string(h.kind == Trig::Cos ? "*cos(" : "*sin(") + frequency_str(h.half_k) + ')';
    }
    return out;
}

FourierSeries FourierSeries::operator-() const {
    FourierSeries out = *this;
    for (auto& [h, c] : out.modes_) c = -c;
    return out;
}

FourierSeries& FourierSeries::operator+=(const FourierSeries& o) {
    for (const auto& [h, c] : o.modes_) add_mode(h, c);
    return *this;
}

FourierSeries& FourierSeries::operator-=(const FourierSeries& o) {
    for (const auto& [h, c] : o.modes_) add_mode(h, -c);
    return *this;
}

FourierSeries& FourierSeries::operator*=(const AlphaPoly& c) {
    ModeMap old;
    old.swap(modes_);
    for (const auto& [h, v] : old) add_mode(h, v * c);
    return *this;
}

bool FourierSeries::valid() const {
    for (const auto& [h, c] : modes_) {
        if (h.half_k < 0) return false;
        if (h.kind == Trig::Sin && h.half_k == 0) return false;
        if (c.is_zero() || !c.valid()) return false;
    }
    return true;
}

FourierSeries fourier_mul(const FourierSeries& f, const FourierSeries& g) {
    FourierSeries out;
    const BigRational half(1, 2);
    for (const auto& [hf, cf] : f.modes_) {
        for (const auto& [hg, cg] : g.modes_) {
            const AlphaPoly c = (cf * cg) * half;
            const int diff = hf.half_k - hg.half_k;
            const int sum = hf.half_k + hg.half_k;
            if (hf.kind == Trig::Cos && hg.kind == Trig::Cos) {
                out.add_mode({diff, Trig::Cos}, c);
                out.add_mode({sum, Trig::Cos}, c);
            } else if (hf.kind == Trig::Sin && hg.kind == Trig::Sin) {
                out.add_mode({diff, Trig::Cos}, c);
                out.add_mode({sum, Trig::Cos}, -c);
            } else if (hf.kind == Trig::Sin) {
                // sin a cos b
                out.add_mode({sum, Trig::Sin}, c);
                out.add_mode({diff, Trig::Sin}, c);
            } else {
                // cos a sin b
                out.add_mode({sum, Trig::Sin}, c);
                out.add_mode({diff, Trig::Sin}, -c);
            }
        }
    }
    return out;
}

AlphaPoly tau_average(const FourierSeries& f) { return f.coefficient({0, Trig::Cos}); }

FourierSeries tau_antiderivative_zero_mean(const FourierSeries& f) {
    if (!tau_average(f).is_zero())
        throw SecularTermError("tau_antiderivative_zero_mean: series has nonzero mean " + tau_average(f).str());
    FourierSeries out;
    for (const auto& [h, c] : f.modes()) {
        const BigRational inv(2, h.half_k);
        if (h.kind == Trig::Cos)
            out += FourierSeries::sin_half(h.half_k, c * inv);
        else
            out += FourierSeries::cos_half(h.half_k, c * (-inv));
    }
    return out;
}

double PeriodicQuadForm::evaluate(double x, double y, double tau, const std::vector<double>& unknowns) const {
    return qxx.evaluate(tau, unknowns) * x * x + qxy.evaluate(tau, unknowns) * x * y +
           qyy.evaluate(tau, unknowns) * y * y;
}

std::string PeriodicQuadForm::str() const {
    return "X^2: " + qxx.str() + "\nXY: " + qxy.str() + "\nY^2: " + qyy.str();
}

PeriodicQuadForm& PeriodicQuadForm::operator+=(const PeriodicQuadForm& o) {
    qxx += o.qxx;
    qxy += o.qxy;
    qyy += o.qyy;
    return *this;
}

PeriodicQuadForm& PeriodicQuadForm::operator-=(const PeriodicQuadForm& o) {
    qxx -= o.qxx;
    qxy -= o.qxy;
    qyy -= o.qyy;
    return *this;
}

PeriodicQuadForm& PeriodicQuadForm::operator*=(const AlphaPoly& c) {
    qxx *= c;
    qxy *= c;
    qyy *= c;
    return *this;
}

// F = a X^2 + b XY + c Y^2, G = d X^2 + e XY + f Y^2:
//   {F,G} = (2ae - 2bd) X^2 + (4af - 4cd) XY + (2bf - 2ce) Y^2
PeriodicQuadForm poisson_bracket(const PeriodicQuadForm& f, const PeriodicQuadForm& g) {
    const AlphaPoly two(2), four(4);
    PeriodicQuadForm out;
    out.qxx = (fourier_mul(f.qxx, g.qxy) - fourier_mul(f.qxy, g.qxx)) * two;
    out.qxy = (fourier_mul(f.qxx, g.qyy) - fourier_mul(f.qyy, g.qxx)) * four;
    out.qyy = (fourier_mul(f.qxy, g.qyy) - fourier_mul(f.qyy, g.qxy)) * two;
    return out;
}

PeriodicQuadForm tau_average(const PeriodicQuadForm& f) {
    return {FourierSeries(tau_average(f.qxx)), FourierSeries(tau_average(f.qxy)), FourierSeries(tau_average(f.qyy))};
}

PeriodicQuadForm tau_antiderivative_zero_mean(const PeriodicQuadForm& f) {
    return {tau_antiderivative_zero_mean(f.qxx), tau_antiderivative_zero_mean(f.qxy),
            tau_antiderivative_zero_mean(f.qyy)};
}

PeriodicQuadForm tau_derivative(const PeriodicQuadForm& f) {
    return {f.qxx.derivative(), f.qxy.derivative(), f.qyy.derivative()};
}

}  // namespace pendulum
