#include <doctest.h>

#include <cmath>
#include <random>

#include "fotf/analysis.hpp"
#include "fotf/error.hpp"
#include "fotf/roots.hpp"

using namespace fotf;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("frequency grid validation") {
    CHECK_THROWS_AS(FrequencyGrid({1.0}), Error);
    CHECK_THROWS_AS(FrequencyGrid({1.0, 1.0}), Error);
    CHECK_THROWS_AS(FrequencyGrid({-1.0, 1.0}), Error);
    CHECK(FrequencyGrid::log_spaced(1e-2, 1e2, 5).size() == 5);
}

TEST_CASE("response of 1 - s^(1/2) at omega = 1") {
    CommensurateTf tf(FractionalPoly(2, {1.0, -1.0}), FractionalPoly::constant(1.0, 2));
    FrequencyGrid grid({0.5, 1.0, 2.0});
    FrequencyResponse r = frequency_response(tf, grid);
    CHECK(r.value[1].real() == doctest::Approx(0.29289).epsilon(1e-4));
    CHECK(r.value[1].imag() == doctest::Approx(-0.70711).epsilon(1e-4));
    CHECK(r.mag_db[1] == doctest::Approx(-2.324).epsilon(1e-3));
    CHECK(r.phase_deg[1] == doctest::Approx(-67.5).epsilon(1e-6));
}

TEST_CASE("identity response is flat") {
    FrequencyResponse r = frequency_response(CommensurateTf::identity(),
                                             FrequencyGrid::log_spaced(1e-2, 1e2, 50));
    for (size_t i = 0; i < r.omega.size(); ++i) {
        CHECK(r.mag_db[i] == doctest::Approx(0.0).epsilon(1e-12));
        CHECK(r.phase_deg[i] == doctest::Approx(0.0).epsilon(1e-12));
    }
}

TEST_CASE("DC gain of the margin-study plant approaches 20 dB") {
    CommensurateTf p = from_rational({4.0, -4.0}, {0.4, 4.1, 1.0});
    FrequencyResponse r = frequency_response(p, FrequencyGrid::log_spaced(1e-5, 1.0, 100));
    CHECK(r.mag_db.front() == doctest::Approx(20.0).epsilon(1e-4));
}

TEST_CASE("pole on the grid is flagged, not fatal") {
    // 1/(s^2+1) has poles at s = +-j.
    CommensurateTf tf = from_rational({1.0}, {1.0, 0.0, 1.0});
    FrequencyResponse r = frequency_response(tf, FrequencyGrid({0.5, 1.0, 2.0}));
    CHECK(r.pole_flag[1]);
    CHECK(!r.pole_flag[0]);
    CHECK(r.has_flagged());
}

TEST_CASE("phase unwrapping keeps adjacent jumps below 180 degrees") {
    // Third-order lag: phase runs from 0 to -270.
    CommensurateTf tf = from_rational({1.0}, {1.0, 3.0, 3.0, 1.0});
    FrequencyResponse r = frequency_response(tf, FrequencyGrid::log_spaced(1e-3, 1e3, 300));
    for (size_t i = 1; i < r.phase_deg.size(); ++i) {
        CHECK(std::abs(r.phase_deg[i] - r.phase_deg[i - 1]) < 180.0);
    }
    CHECK(r.phase_deg.back() < -240.0);
}

TEST_CASE("margins of L = 1/(s(s+1))") {
    // Closed form: wc^4 + wc^2 = 1 -> wc = 0.78615, PM = 51.83 deg.
    CommensurateTf l = from_rational({1.0}, {0.0, 1.0, 1.0});
    MarginReport m = margins(frequency_response(l, FrequencyGrid::log_spaced(1e-2, 1e2, 2000)));
    CHECK(m.phase_margin_deg == doctest::Approx(51.827).epsilon(2e-3));
    CHECK(m.gain_crossover_rad_s == doctest::Approx(0.78615).epsilon(2e-3));
    CHECK(std::isinf(m.gain_margin_db));
    CHECK(m.phase_crossings == 0);
}

TEST_CASE("unity loop has no crossings, both margins are +inf") {
    MarginReport m = margins(frequency_response(CommensurateTf::identity(),
                                                FrequencyGrid::default_grid()));
    CHECK(std::isinf(m.phase_margin_deg));
    CHECK(std::isinf(m.gain_margin_db));
    CHECK(m.gain_crossings == 0);
}

TEST_CASE("interpolated gain crossover is consistent with the exact response") {
    CommensurateTf p = from_rational({4.0, -4.0}, {0.4, 4.1, 1.0});
    for (int v : {0, 2, 4}) {
        CommensurateTf l = v == 0 ? p : combine(p, make_canceller({1.0, v}), CombineMode::Quotient);
        MarginReport m = margins(frequency_response(l, FrequencyGrid::default_grid()));
        REQUIRE(m.gain_crossings >= 1);
        const double mag = std::abs(l.evaluate(Complex(0.0, m.gain_crossover_rad_s)));
        CHECK(std::abs(mag - 1.0) < 1e-3);
    }
}

TEST_CASE("matignon: worked characteristic polynomial is stable") {
    CommensurateTf tf(FractionalPoly::constant(1.0, 2), FractionalPoly(2, {1.0, 2.0, 2.0, 1.0}));
    StabilityReport rep = matignon_stable(tf);
    CHECK(rep.sector_half_angle == doctest::Approx(kPi / 4));
    CHECK(rep.verdict == Verdict::Stable);
    REQUIRE(rep.roots.size() == 3);
    for (const auto& r : rep.roots) {
        CHECK(std::abs(r.arg_rad) > kPi / 4);
        CHECK(r.satisfies_sector);
    }
}

TEST_CASE("matignon: root on the positive real w axis is unstable") {
    CommensurateTf tf(FractionalPoly::constant(1.0, 2), FractionalPoly(2, {-1.0, 1.0}));
    CHECK(matignon_stable(tf).verdict == Verdict::Unstable);
}

TEST_CASE("matignon: 1/Q_{1,4} is stable") {
    CommensurateTf q = make_canceller({1.0, 4});
    CommensurateTf inv(q.den(), q.num());
    StabilityReport rep = matignon_stable(inv);
    CHECK(rep.base_v == 4);
    CHECK(rep.verdict == Verdict::Stable);
    REQUIRE(rep.roots.size() == 3);
    for (const auto& r : rep.roots) {
        CHECK(std::abs(r.arg_rad) > kPi / 8 + 1e-9);
    }
}

TEST_CASE("matignon: w-root at the origin is marginal") {
    CommensurateTf tf(FractionalPoly::constant(1.0, 2), FractionalPoly(2, {0.0, 0.0, 1.0}));
    CHECK(matignon_stable(tf).verdict == Verdict::Marginal);
}

TEST_CASE("matignon suite over the canceller family") {
    for (double lambda : {0.5, 1.0, 16.0}) {
        for (int v : {2, 4, 8}) {
            CommensurateTf q = make_canceller({lambda, v});
            CommensurateTf inv(q.den(), q.num());
            CHECK(matignon_stable(inv).verdict == Verdict::Stable);
        }
    }
}

TEST_CASE("property: base_v = 1 agrees with a direct left-half-plane test") {
    std::mt19937 rng(777);
    std::uniform_real_distribution<double> coeff(-3.0, 3.0);
    std::uniform_int_distribution<int> deg(1, 6);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<double> den(deg(rng) + 1);
        for (double& c : den) c = coeff(rng);
        if (std::abs(den.back()) < 0.1) den.back() = 1.0;
        CommensurateTf tf(FractionalPoly::constant(1.0), FractionalPoly(1, den));
        StabilityReport rep = matignon_stable(tf);
        bool any_rhp = false, any_axis = false;
        for (Complex r : poly_roots(den)) {
            if (std::abs(r.real()) <= 1e-9 * std::max(1.0, std::abs(r))) any_axis = true;
            else if (r.real() > 0.0) any_rhp = true;
        }
        const Verdict want = any_rhp ? Verdict::Unstable
                           : any_axis ? Verdict::Marginal
                                      : Verdict::Stable;
        CHECK(rep.verdict == want);
    }
}

TEST_CASE("internal stability: fractional canceller keeps the loop stable") {
    CommensurateTf plant = from_rational({-1.0, 1.0}, {2.0, 1.0});
    CommensurateTf ctrl(FractionalPoly::constant(1.0, 2), FractionalPoly(2, {1.0, 1.0}));
    InternalStabilityReport rep = internal_stability(plant, ctrl);
    CHECK(rep.overall == Verdict::Stable);
    CHECK(rep.reference_to_control.verdict == Verdict::Stable);
}

TEST_CASE("internal stability: exact unstable cancellation is detected") {
    CommensurateTf plant = from_rational({-1.0, 1.0}, {2.0, 1.0});
    CommensurateTf ctrl = from_rational({1.0}, {-1.0, 1.0});
    InternalStabilityReport rep = internal_stability(plant, ctrl);
    CHECK(rep.overall == Verdict::Unstable);
}

TEST_CASE("internal stability: stable minimum-phase plant with unity control") {
    CommensurateTf plant = from_rational({1.0}, {1.0, 1.0});
    InternalStabilityReport rep = internal_stability(plant, CommensurateTf::identity());
    CHECK(rep.overall == Verdict::Stable);
}

TEST_CASE("margin and crossover ordering across the canceller family") {
    CommensurateTf p = from_rational({4.0, -4.0}, {0.4, 4.1, 1.0});
    const FrequencyGrid grid = FrequencyGrid::default_grid();
    MarginReport m0 = margins(frequency_response(p, grid));
    MarginReport m2 = margins(frequency_response(
        combine(p, make_canceller({1.0, 2}), CombineMode::Quotient), grid));
    MarginReport m4 = margins(frequency_response(
        combine(p, make_canceller({1.0, 4}), CombineMode::Quotient), grid));
    CHECK(m0.phase_margin_deg < m2.phase_margin_deg);
    CHECK(m2.phase_margin_deg < m4.phase_margin_deg);
    CHECK(m0.gain_margin_db < m2.gain_margin_db);
    CHECK(m2.gain_margin_db < m4.gain_margin_db);
    CHECK(m2.gain_crossover_rad_s < m0.gain_crossover_rad_s);
}
