#include <doctest.h>

#include <cmath>
#include <random>

#include "fotf/error.hpp"
#include "fotf/timedomain.hpp"

using namespace fotf;

TEST_CASE("to_state_space: first-order canonical form") {
    StateSpace ss = to_state_space(RationalTf({1.0}, {1.0, 1.0}));
    REQUIRE(ss.order() == 1);
    CHECK(ss.A(0, 0) == doctest::Approx(-1.0));
    CHECK(ss.B(0) == doctest::Approx(1.0));
    CHECK(ss.C(0) == doctest::Approx(1.0));
    CHECK(ss.D == doctest::Approx(0.0));
}

TEST_CASE("to_state_space: biproper system gets feedthrough") {
    StateSpace ss = to_state_space(RationalTf({2.0, 1.0}, {1.0, 1.0}));
    CHECK(ss.D == doctest::Approx(1.0));
    // Remainder is 1/(s+1): H(s) - D evaluated anywhere.
    const Complex h = ss.evaluate(Complex(1.0, 0.0));
    CHECK(h.real() == doctest::Approx(1.5));
}

TEST_CASE("to_state_space: numerator shorter than denominator") {
    // (1-s)/(1+s)^2 = (1-s)/(1+2s+s^2)
    StateSpace ss = to_state_space(RationalTf({1.0, -1.0}, {1.0, 2.0, 1.0}));
    REQUIRE(ss.order() == 2);
    CHECK(ss.D == 0.0);
    CHECK(ss.C(0) == doctest::Approx(1.0));
    CHECK(ss.C(1) == doctest::Approx(-1.0));
}

TEST_CASE("to_state_space rejects improper transfer functions") {
    CHECK_THROWS_AS(to_state_space(RationalTf({1.0, 0.0, 1.0}, {1.0, 1.0})), Error);
}

TEST_CASE("property: realization matches the transfer function in frequency") {
    std::mt19937 rng(808);
    std::uniform_real_distribution<double> omega(1e-2, 1e2);
    const RationalTf tf({1.0, 0.5, 2.0}, {2.0, 1.0, 3.0, 1.0});
    StateSpace ss = to_state_space(tf);
    for (int i = 0; i < 20; ++i) {
        const Complex s(0.0, omega(rng));
        const Complex a = ss.evaluate(s), b = tf.evaluate(s);
        CHECK(std::abs(a - b) <= 1e-9 * std::max(1.0, std::abs(b)));
    }
}

TEST_CASE("step of 1/(s+1) follows 1 - exp(-t)") {
    StepResponse r = simulate_step(to_state_space(RationalTf({1.0}, {1.0, 1.0})), 5.0, 0.01);
    const size_t i = 100;  // t = 1.0
    CHECK(r.t[i] == doctest::Approx(1.0));
    CHECK(r.y[i] == doctest::Approx(1.0 - std::exp(-1.0)).epsilon(1e-6));
}

TEST_CASE("step of (1-s)/(1+s)^2 undershoots to the closed-form minimum") {
    // y(t) = 1 - e^{-t} - 2 t e^{-t}; minimum at t where y' = 0.
    StepResponse r = simulate_step(to_state_space(RationalTf({1.0, -1.0}, {1.0, 2.0, 1.0})),
                                   10.0, 0.001);
    double ymin = 0.0, tmin = 0.0;
    for (size_t i = 0; i < r.y.size(); ++i) {
        if (r.y[i] < ymin) {
            ymin = r.y[i];
            tmin = r.t[i];
        }
    }
    CHECK(ymin == doctest::Approx(-0.21306).epsilon(1e-3));
    CHECK(tmin == doctest::Approx(0.5).epsilon(2e-2));
}

TEST_CASE("DC convergence of the undershoot-study plant") {
    StepResponse r = simulate_step(
        to_state_space(RationalTf({1.0, -1.0}, {1.0, 5.0 / 6.0, 1.0 / 6.0})), 40.0, 0.001);
    CHECK(r.y.back() == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("property: ZOH is exact under grid refinement") {
    const RationalTf tf({1.0, -1.0}, {1.0, 2.0, 1.0});
    StateSpace ss = to_state_space(tf);
    StepResponse coarse = simulate_step(ss, 4.0, 0.01);
    StepResponse fine = simulate_step(ss, 4.0, 0.005);
    for (size_t i = 0; i < coarse.y.size(); ++i) {
        CHECK(std::abs(coarse.y[i] - fine.y[2 * i]) < 1e-9);
    }
}

TEST_CASE("unstable blow-up truncates with a flag") {
    // 1/(s-40): e^{40 t} overflows well before t = 40.
    StepResponse r = simulate_step(to_state_space(RationalTf({1.0}, {-40.0, 1.0})), 40.0, 0.5);
    CHECK(r.truncated);
    CHECK(r.t.size() < 81);
}

TEST_CASE("metrics of the undershooting trace") {
    StepResponse r = simulate_step(to_state_space(RationalTf({1.0, -1.0}, {1.0, 2.0, 1.0})),
                                   20.0, 0.001);
    StepMetrics m = compute_metrics(r, 1.0);
    CHECK(m.r_us == doctest::Approx(0.2131).epsilon(1e-3));
    CHECK(m.y_bar == 1.0);
    CHECK(m.settled);
}

TEST_CASE("metrics of a monotone first-order trace") {
    StepResponse r = simulate_step(to_state_space(RationalTf({1.0}, {1.0, 1.0})), 10.0, 0.01);
    StepMetrics m = compute_metrics(r, 1.0);
    CHECK(m.r_us == 0.0);
    CHECK(m.r_os == 0.0);
    CHECK(m.r_us_unclamped == 0.0);  // trace starts at exactly zero
    // 2% settling of a first-order lag: t = -ln(0.02) = 3.912
    CHECK(m.settling_time_s == doctest::Approx(3.912).epsilon(1e-2));
}

TEST_CASE("undershoot lower bound evaluation") {
    StepResponse r;
    r.dt = 1.0;
    r.t = {0.0, 5.0};
    r.y = {0.0, 1.0};
    StepMetrics m = compute_metrics(r, 1.0, 1.0);
    REQUIRE(m.undershoot_lower_bound.has_value());
    // T here is the measured settling time of this toy trace.
    CHECK(*m.undershoot_lower_bound == doctest::Approx(1.0 / std::expm1(m.settling_time_s)));
}

TEST_CASE("bound formula: lambda = 1, T = 5") {
    CHECK(1.0 / std::expm1(5.0) == doctest::Approx(0.006738).epsilon(1e-3));
}

TEST_CASE("compute_metrics rejects zero steady state") {
    StepResponse r;
    r.dt = 1.0;
    r.t = {0.0, 1.0};
    r.y = {0.0, 0.0};
    CHECK_THROWS_AS(compute_metrics(r, 0.0), Error);
}

TEST_CASE("property: zero-integral of y e^{-lambda t} for a plant with a zero at lambda") {
    // (1-s)/((1+s/2)(1+s/3)) has an exact zero at s = 1.
    const double lambda = 1.0;
    StepResponse r = simulate_step(
        to_state_space(RationalTf({1.0, -1.0}, {1.0, 5.0 / 6.0, 1.0 / 6.0})), 40.0, 0.001);
    double integral = 0.0, abs_integral = 0.0;
    for (size_t i = 0; i + 1 < r.y.size(); ++i) {
        const double f0 = r.y[i] * std::exp(-lambda * r.t[i]);
        const double f1 = r.y[i + 1] * std::exp(-lambda * r.t[i + 1]);
        integral += 0.5 * (f0 + f1) * r.dt;
        abs_integral += 0.5 * (std::abs(f0) + std::abs(f1)) * r.dt;
    }
    CHECK(std::abs(integral) < 1e-3 * abs_integral);
}

TEST_CASE("step_of_fractional: in-class rational plant matches direct simulation") {
    CommensurateTf p1 = from_rational({1.0, -1.0}, {1.0, 5.0 / 6.0, 1.0 / 6.0});
    FitConfig cfg;
    cfg.num_order = 2;
    cfg.den_order = 2;
    cfg.sk_iterations = 2;
    FractionalStepResult res = step_of_fractional(p1, cfg, 40.0, 1e-3, 1.0);
    StepResponse direct = simulate_step(
        to_state_space(RationalTf({1.0, -1.0}, {1.0, 5.0 / 6.0, 1.0 / 6.0})), 40.0, 1e-3);
    StepMetrics direct_m = compute_metrics(direct, 1.0, 1.0);
    CHECK(res.metrics.r_us == doctest::Approx(direct_m.r_us).epsilon(1e-6));
    CHECK(res.metrics.y_bar == doctest::Approx(1.0));
}
