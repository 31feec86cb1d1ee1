#include <cmath>
#include <stdexcept>

#include <boost/math/special_functions/airy.hpp>

#include "asep/airy.hpp"
#include "doctest.h"

using namespace asep;

namespace {

struct Spot {
  double x;
  double ai;
  double aip;
};

// Reference digits from a 25-digit arbitrary-precision evaluation.
constexpr Spot kSpots[] = {
    {-20.0, -0.17640612707798468959, 0.8928628567364712384},
    {-10.0, 0.040241238486443190689, 0.9962650441327900559},
    {-5.0, 0.35076100902411431979, 0.32719281855444313679},
    {-1.0, 0.5355608832923521188, -0.010160567116645209395},
    {0.0, 0.35502805388781723926, -0.25881940379280679841},
    {1.0, 0.13529241631288141552, -0.15914744129679321279},
    {5.0, 0.00010834442813607441735, -0.000247413890868462476},
    {8.0, 4.6922076160992316256e-8, -1.3414392979067865743e-7},
    {10.0, 1.1047532552898685934e-10, -3.5206336767389236366e-10},
    {19.5, 1.5705905615178183776e-26, -6.9555322364636242579e-26},
};

}  // namespace

TEST_CASE("closed forms at zero") {
  const double g23 = std::tgamma(2.0 / 3.0);
  const double g13 = std::tgamma(1.0 / 3.0);
  const auto v = airy(0.0);
  CHECK(v.ai == doctest::Approx(std::pow(3.0, -2.0 / 3.0) / g23).epsilon(1e-15));
  CHECK(v.aip == doctest::Approx(-std::pow(3.0, -1.0 / 3.0) / g13).epsilon(1e-15));
}

TEST_CASE("reference digits") {
  for (const auto& s : kSpots) {
    const auto v = airy(s.x);
    CHECK(v.ai == doctest::Approx(s.ai).epsilon(1e-12));
    CHECK(v.aip == doctest::Approx(s.aip).epsilon(1e-12));
  }
}

TEST_CASE("agreement with an independent implementation") {
  for (double x = -20.0; x <= 20.0; x += 0.25) {
    const auto v = airy(x);
    const double ref = boost::math::airy_ai(x);
    const double refp = boost::math::airy_ai_prime(x);
    // The power series cancels heavily just below the branch switch at
    // x = 8, costing a few ulp of the largest term in absolute terms.
    const double cancel = x > 5.0 && x < 8.0 ? 1e-12 : 0.0;
    CHECK(std::abs(v.ai - ref) <= 1e-13 + cancel + 1e-11 * std::abs(ref));
    CHECK(std::abs(v.aip - refp) <= 1e-13 + cancel + 1e-11 * std::abs(refp));
  }
}

TEST_CASE("differential equation residual") {
  const double h = 1e-3;
  for (double x = -15.0; x <= 15.0; x += 1.5) {
    const double second =
        (airy_ai(x + h) - 2 * airy_ai(x) + airy_ai(x - h)) / (h * h);
    CHECK(std::abs(second - x * airy_ai(x)) <= 5e-6 * std::max(1.0, std::abs(x)));
  }
}

TEST_CASE("derivative consistency") {
  const double h = 1e-4;
  for (double x : {-9.3, -3.1, -0.5, 0.7, 2.9, 6.4}) {
    const double central = (airy_ai(x + h) - airy_ai(x - h)) / (2 * h);
    CHECK(std::abs(central - airy_ai_prime(x)) <= 1e-7);
  }
}

TEST_CASE("series and asymptotic branches overlap") {
  for (double x : {-8.5, -8.0, -7.5, 7.5, 8.0, 8.5}) {
    const auto s = detail::airy_series(x);
    const auto a = detail::airy_asymptotic(x);
    CHECK(std::abs(s.ai - a.ai) <= 1e-10 * std::max(1.0, std::abs(s.ai)));
    CHECK(std::abs(s.aip - a.aip) <= 1e-10 * std::max(1.0, std::abs(s.aip)));
  }
}

TEST_CASE("domain guard") {
  CHECK_THROWS_AS(airy(20.5), std::domain_error);
  CHECK_THROWS_AS(airy(-20.5), std::domain_error);
  CHECK_NOTHROW(airy(20.0));
  CHECK_NOTHROW(airy(-20.0));
}
