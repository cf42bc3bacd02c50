#include "pendulum/fourier.hpp"

#include <doctest.h>

#include <random>

using namespace pendulum;

namespace {

BigRational q(long n, long d = 1) { return BigRational(n, d); }

AlphaPoly P(const char* s) { return AlphaPoly::parse(s); }

struct RandomAlgebra {
    std::mt19937 rng{12345};

    BigRational rational() {
        std::uniform_int_distribution<long> num(-9, 9), den(1, 6);
        return BigRational(num(rng), den(rng));
    }
    AlphaPoly poly() {
        std::uniform_int_distribution<int> terms(1, 3), pow(0, 2);
        AlphaPoly p;
        for (int t = terms(rng); t > 0; --t) {
            Exponents e{};
            e[0] = static_cast<std::uint8_t>(pow(rng));
            e[1] = static_cast<std::uint8_t>(pow(rng) / 2);
            p += AlphaPoly::monomial(e, rational());
        }
        return p;
    }
    FourierSeries series(int max_modes = 3) {
        std::uniform_int_distribution<int> modes(1, max_modes), k(0, 4), kind(0, 1);
        FourierSeries f;
        for (int m = modes(rng); m > 0; --m) {
            const int hk = k(rng);
            f += (kind(rng) == 0 || hk == 0) ? FourierSeries::cos_half(hk, poly()) : FourierSeries::sin_half(hk, poly());
        }
        return f;
    }
    PeriodicQuadForm form() { return {series(), series(), series()}; }
};

}  // namespace

TEST_SUITE("BigRational") {
    TEST_CASE("lowest terms and sign normalization") {
        CHECK(q(6, -4).str() == "-3/2");
        CHECK(q(0, 7).str() == "0");
        CHECK(q(0, 7).denominator_str() == "1");
        CHECK(BigRational::parse("-10/4") == q(-5, 2));
        CHECK(BigRational::parse("+7") == q(7));
    }

    TEST_CASE("published-size coefficients are exact") {
        const BigRational a = BigRational::parse("1002401/4976640");
        CHECK((a * q(4976640)).str() == "1002401");
        CHECK((q(11, 4608) + q(-11, 4608)).is_zero());
    }

    TEST_CASE("rejects zero denominators and junk") {
        CHECK_THROWS(q(1, 0));
        CHECK_THROWS(BigRational::parse("1/0"));
        CHECK_THROWS(BigRational::parse("abc"));
        CHECK_THROWS(q(1) / q(0));
    }

    TEST_CASE("from_double is the exact binary value") {
        CHECK(BigRational::from_double(0.375) == q(3, 8));
        CHECK(BigRational::from_double(-20.0) == q(-20));
        CHECK_FALSE(BigRational::from_double(0.1) == q(1, 10));
    }

    TEST_CASE("factorial and binomial") {
        CHECK(factorial(6) == q(720));
        CHECK(binomial(6, 2) == q(15));
        CHECK(binomial(5, 0) == q(1));
    }
}

TEST_SUITE("AlphaPoly") {
    TEST_CASE("debug form round-trips") {
        const AlphaPoly p = P("-3/16 -3/4*a1 -1/2*a1^2 +1/2*a2");
        CHECK(p.str() == "-3/16 -3/4*a1 +1/2*a2 -1/2*a1^2");
        CHECK(AlphaPoly::parse(p.str()) == p);
        CHECK(P("0").is_zero());
        CHECK(P("0").str() == "0");
        CHECK(P("a1*a2 -a2*a1").is_zero());
    }

    TEST_CASE("graded-lex ordering puts lower degree first, higher a1 power first") {
        CHECK(P("a2^2 +a1*a2 +a1^2 +a3 +1").str() == "1 +a3 +a1^2 +a1*a2 +a2^2");
    }

    TEST_CASE("no zero coefficients are stored") {
        const AlphaPoly p = P("a1 +1/2") - P("a1");
        CHECK(p.terms().size() == 1);
        CHECK(p.valid());
        CHECK((p * q(0)).is_zero());
    }

    TEST_CASE("substitute, affine_parts and evaluate") {
        const AlphaPoly p = P("1/4 +1/2*a1 +a1*a2 -a2");
        CHECK(p.substitute(1, q(-1, 2)) == P("-3/2*a2"));
        const auto [c0, c1] = p.affine_parts(2);
        CHECK(c0 == P("1/4 +1/2*a1"));
        CHECK(c1 == P("a1 -1"));
        CHECK(p.evaluate({2.0, 3.0}) == doctest::Approx(0.25 + 1.0 + 6.0 - 3.0));
        CHECK(p.highest_unknown() == 2);
        CHECK(p.degree_in(1) == 1);
        CHECK(p.total_degree() == 2);
    }

    TEST_CASE("parse errors") {
        CHECK_THROWS_AS(AlphaPoly::parse(""), std::invalid_argument);
        CHECK_THROWS_AS(AlphaPoly::parse("1/2*b1"), std::invalid_argument);
        CHECK_THROWS_AS(AlphaPoly::parse("a9"), std::invalid_argument);
        CHECK_THROWS_AS(AlphaPoly::parse("a1^"), std::invalid_argument);
    }

    TEST_CASE("ring laws on random polynomials") {
        RandomAlgebra gen;
        for (int i = 0; i < 50; ++i) {
            const AlphaPoly a = gen.poly(), b = gen.poly(), c = gen.poly();
            CHECK(a * b == b * a);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK((a * b).valid());
        }
    }
}

TEST_SUITE("FourierSeries") {
    TEST_CASE("cos t * cos t = 1/2 + 1/2 cos 2t") {
        const FourierSeries c = FourierSeries::cos(1);
        const FourierSeries expect = FourierSeries(AlphaPoly(q(1, 2))) + FourierSeries::cos(2, AlphaPoly(q(1, 2)));
        CHECK(fourier_mul(c, c) == expect);
        CHECK(fourier_mul(c, c).str() == "(1/2) + (1/2)*cos(2t)");
    }

    TEST_CASE("cos(t/2) * cos t = 1/2 cos(t/2) + 1/2 cos(3t/2)") {
        const FourierSeries r = fourier_mul(FourierSeries::cos_half(1), FourierSeries::cos(1));
        CHECK(r == FourierSeries::cos_half(1, AlphaPoly(q(1, 2))) + FourierSeries::cos_half(3, AlphaPoly(q(1, 2))));
        CHECK(r.str() == "(1/2)*cos(t/2) + (1/2)*cos(3t/2)");
    }

    TEST_CASE("product with zero is zero") {
        CHECK(fourier_mul(FourierSeries::sin(3, P("a1")), FourierSeries()).is_zero());
    }

    TEST_CASE("sin * sin and sin * cos identities") {
        // sin a sin b = (cos(a-b) - cos(a+b))/2, sin a cos b = (sin(a+b) + sin(a-b))/2
        const FourierSeries ss = fourier_mul(FourierSeries::sin(2), FourierSeries::sin(1));
        CHECK(ss == FourierSeries::cos(1, AlphaPoly(q(1, 2))) - FourierSeries::cos(3, AlphaPoly(q(1, 2))));
        const FourierSeries sc = fourier_mul(FourierSeries::sin(1), FourierSeries::cos(2));
        CHECK(sc == FourierSeries::sin(3, AlphaPoly(q(1, 2))) - FourierSeries::sin(1, AlphaPoly(q(1, 2))));
        CHECK(fourier_mul(FourierSeries::sin(1), FourierSeries::sin(1)).coefficient({0, Trig::Cos}) ==
              AlphaPoly(q(1, 2)));
    }

    TEST_CASE("sin(0) is never stored") {
        CHECK(FourierSeries::sin_half(0).is_zero());
        CHECK(fourier_mul(FourierSeries::sin(1), FourierSeries::cos(1)).valid());
    }

    TEST_CASE("tau_average") {
        const FourierSeries f = FourierSeries(AlphaPoly(q(1, 2))) + FourierSeries::cos(2, AlphaPoly(q(1, 2)));
        CHECK(tau_average(f) == AlphaPoly(q(1, 2)));
        CHECK(tau_average(FourierSeries::sin(3)).is_zero());
        const FourierSeries g = FourierSeries(P("1/4*a1")) + FourierSeries::cos(1, P("a2"));
        CHECK(tau_average(g) == P("1/4*a1"));
    }

    TEST_CASE("tau_antiderivative_zero_mean") {
        CHECK(tau_antiderivative_zero_mean(FourierSeries::cos(2)) == FourierSeries::sin(2, AlphaPoly(q(1, 2))));
        CHECK(tau_antiderivative_zero_mean(FourierSeries::sin(1)) == FourierSeries::cos(1, AlphaPoly(-1)));
        CHECK(tau_antiderivative_zero_mean(FourierSeries::cos_half(1)) == FourierSeries::sin_half(1, AlphaPoly(2)));
        CHECK_THROWS_AS(tau_antiderivative_zero_mean(FourierSeries(AlphaPoly(q(1, 2)))), SecularTermError);
    }

    TEST_CASE("evaluate agrees with the closed form") {
        const FourierSeries f = FourierSeries::cos_half(3, P("2*a1")) + FourierSeries::sin(1, AlphaPoly(q(1, 3)));
        const double t = 0.7;
        CHECK(f.evaluate(t, {0.5}) == doctest::Approx(std::cos(1.5 * t) + std::sin(t) / 3.0));
    }

    TEST_CASE("algebraic laws on random series") {
        RandomAlgebra gen;
        for (int i = 0; i < 40; ++i) {
            const FourierSeries f = gen.series(), g = gen.series(), h = gen.series();
            CHECK(fourier_mul(f, g) == fourier_mul(g, f));
            CHECK(fourier_mul(fourier_mul(f, g), h) == fourier_mul(f, fourier_mul(g, h)));
            CHECK(fourier_mul(f, g + h) == fourier_mul(f, g) + fourier_mul(f, h));
            CHECK(fourier_mul(f, g).valid());
        }
    }

    TEST_CASE("antiderivative then derivative is the identity on zero-mean series") {
        RandomAlgebra gen;
        for (int i = 0; i < 40; ++i) {
            FourierSeries f = gen.series();
            f -= FourierSeries(tau_average(f));
            const FourierSeries w = tau_antiderivative_zero_mean(f);
            CHECK(w.derivative() == f);
            CHECK(tau_average(w).is_zero());
            CHECK(w.valid());
        }
    }
}

TEST_SUITE("PeriodicQuadForm") {
    const PeriodicQuadForm X2{FourierSeries(AlphaPoly(1)), {}, {}};
    const PeriodicQuadForm XY{{}, FourierSeries(AlphaPoly(1)), {}};
    const PeriodicQuadForm Y2{{}, {}, FourierSeries(AlphaPoly(1))};

    TEST_CASE("{X^2, Y^2} = 4XY") { CHECK(poisson_bracket(X2, Y2) == XY * AlphaPoly(4)); }

    TEST_CASE("{X^2, XY} = 2X^2") { CHECK(poisson_bracket(X2, XY) == X2 * AlphaPoly(2)); }

    TEST_CASE("{F, F} = 0") {
        RandomAlgebra gen;
        for (int i = 0; i < 10; ++i) {
            const PeriodicQuadForm f = gen.form();
            CHECK(poisson_bracket(f, f).is_zero());
        }
    }

    TEST_CASE("bracket agrees with numeric differentiation") {
        RandomAlgebra gen;
        const PeriodicQuadForm f = gen.form(), g = gen.form();
        const PeriodicQuadForm b = poisson_bracket(f, g);
        const double x = 0.3, y = -0.7, t = 1.1, h = 1e-5;
        const std::vector<double> a{0.2, -0.4};
        const auto fx = (f.evaluate(x + h, y, t, a) - f.evaluate(x - h, y, t, a)) / (2 * h);
        const auto fy = (f.evaluate(x, y + h, t, a) - f.evaluate(x, y - h, t, a)) / (2 * h);
        const auto gx = (g.evaluate(x + h, y, t, a) - g.evaluate(x - h, y, t, a)) / (2 * h);
        const auto gy = (g.evaluate(x, y + h, t, a) - g.evaluate(x, y - h, t, a)) / (2 * h);
        CHECK(b.evaluate(x, y, t, a) == doctest::Approx(fx * gy - fy * gx).epsilon(1e-6));
    }

    TEST_CASE("bilinear, antisymmetric, Jacobi") {
        RandomAlgebra gen;
        for (int i = 0; i < 15; ++i) {
            const PeriodicQuadForm f = gen.form(), g = gen.form(), h = gen.form();
            const AlphaPoly c = gen.poly();
            CHECK(poisson_bracket(f, g) == -poisson_bracket(g, f));
            CHECK(poisson_bracket(f + g, h) == poisson_bracket(f, h) + poisson_bracket(g, h));
            CHECK(poisson_bracket(f * c, g) == poisson_bracket(f, g) * c);
            const PeriodicQuadForm jacobi = poisson_bracket(f, poisson_bracket(g, h)) +
                                            poisson_bracket(g, poisson_bracket(h, f)) +
                                            poisson_bracket(h, poisson_bracket(f, g));
            CHECK(jacobi.is_zero());
            CHECK(poisson_bracket(f, g).valid());
        }
    }

    TEST_CASE("quad-form averaging and integration") {
        const PeriodicQuadForm f{FourierSeries::cos(1), FourierSeries::sin_half(1, P("a1")), FourierSeries(AlphaPoly(3))};
        const PeriodicQuadForm avg = tau_average(f);
        CHECK(avg == PeriodicQuadForm{{}, {}, FourierSeries(AlphaPoly(3))});
        const PeriodicQuadForm w = tau_antiderivative_zero_mean(f - avg);
        CHECK(tau_derivative(w) == f - avg);
        CHECK_THROWS_AS(tau_antiderivative_zero_mean(f), SecularTermError);
    }
}
