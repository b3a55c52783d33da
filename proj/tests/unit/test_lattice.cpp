#include <cmath>
#include <numbers>

#include "doctest.h"
#include "helpers.hpp"

using namespace spinpair;
using testing::chain;

namespace {
constexpr double pi = std::numbers::pi;
}

TEST_CASE("momentum grid") {
  SUBCASE("even M includes -pi but not +pi") {
    const auto ks = momentum_grid(chain(0, 0, 4));
    REQUIRE(ks.size() == 4);
    CHECK(ks[0] == doctest::Approx(-pi));
    CHECK(ks[1] == doctest::Approx(-pi / 2));
    CHECK(ks[2] == 0.0);
    CHECK(ks[3] == doctest::Approx(pi / 2));
  }
  SUBCASE("odd M is symmetric") {
    const auto ks = momentum_grid(chain(0, 0, 3));
    REQUIRE(ks.size() == 3);
    CHECK(ks[0] == doctest::Approx(-2 * pi / 3));
    CHECK(ks[1] == 0.0);
    CHECK(ks[2] == doctest::Approx(2 * pi / 3));
  }
  SUBCASE("M = 500 spacing") {
    const auto ks = momentum_grid(chain(0, 0, 500));
    REQUIRE(ks.size() == 500);
    for (std::size_t i = 1; i < ks.size(); ++i) {
      CHECK(ks[i] - ks[i - 1] == doctest::Approx(2 * pi / 500).epsilon(1e-12));
    }
  }
  SUBCASE("lattice constant scales momenta") {
    ModelParams p = chain(0, 0, 4);
    p.a = 2.0;
    CHECK(momentum_grid(p)[0] == doctest::Approx(-pi / 2));
  }
}

TEST_CASE("model parameter invariants") {
  CHECK_THROWS_AS(chain(0, 0, 1).validate(), InvalidParameter);
  CHECK_THROWS_AS(chain(-0.1, 0).validate(), InvalidParameter);
  CHECK_THROWS_AS(chain(0, -1).validate(), InvalidParameter);
  CHECK_THROWS_AS(chain(0, 0, 10, 0.0).validate(), InvalidParameter);
  ModelParams p;
  p.a = 0;
  CHECK_THROWS_AS(p.validate(), InvalidParameter);
  CHECK_NOTHROW(chain(0.4, 1.0).validate());
}

TEST_CASE("dispersion") {
  const auto p = chain(0.4, 0);
  CHECK(dispersion(p, 0.0, Band::Lower) == doctest::Approx(-2.4));
  CHECK(dispersion(p, 0.0, Band::Upper) == doctest::Approx(-1.6));
  const auto q = chain(0, 1);
  CHECK(dispersion(q, pi / 2, Band::Lower) == doctest::Approx(-2.0));
  CHECK(dispersion(q, pi / 2, Band::Upper) == doctest::Approx(2.0));
}

TEST_CASE("spinor phase") {
  SUBCASE("Zeeman only gives theta = 0") {
    for (double k : momentum_grid(chain(0.4, 0, 16))) {
      const auto ph = spinor_phase(chain(0.4, 0, 16), k);
      CHECK(ph.theta == 0.0);
      CHECK_FALSE(ph.degenerate);
    }
  }
  SUBCASE("Rashba only gives e^{i theta} = +i for sin(ka) > 0") {
    const auto ph = spinor_phase(chain(0, 1), 0.3);
    CHECK(testing::close(std::polar(1.0, ph.theta), Complex(0, 1), 1e-14));
  }
  SUBCASE("Z = 0 is flagged") {
    const auto ph = spinor_phase(chain(0, 1), 0.0);
    CHECK(ph.degenerate);
    CHECK(ph.theta == 0.0);
    CHECK(spinor_phase(chain(0, 1, 4), -pi).degenerate);
  }
}

TEST_CASE("Bloch spinors") {
  const double h = (1.0 / std::numbers::sqrt2);
  const auto z = chain(0.4, 0);
  CHECK(testing::close(bloch_spinor(z, 0.7, Band::Lower)(0), -h, 1e-15));
  CHECK(testing::close(bloch_spinor(z, 0.7, Band::Lower)(1), h, 1e-15));
  CHECK(testing::close(bloch_spinor(z, 0.7, Band::Upper)(0), h, 1e-15));

  // e^{-i theta} = -i substituted into (-e^{-i theta}, 1)/sqrt 2.
  const auto r = chain(0, 1);
  const Spinor lower = bloch_spinor(r, 0.5, Band::Lower);
  CHECK(testing::close(lower(0), Complex(0, h), 1e-15));
  CHECK(testing::close(lower(1), h, 1e-15));
  Eigen::Matrix2cd sy;
  sy << 0, Complex(0, -1), Complex(0, 1), 0;
  CHECK((sy * lower + lower).norm() < 1e-14);
}

TEST_CASE("lattice properties over the whole grid") {
  for (const auto& p : {chain(0.4, 0, 50), chain(0.4, 1.0, 51), chain(0, 1.0, 50),
                        chain(1.3, 0.2, 37), chain(0, 0, 12)}) {
    CAPTURE(p.B);
    CAPTURE(p.lambda);
    CAPTURE(p.M);
    for (const BlochState& st : all_bloch_states(p)) {
      CHECK(std::abs(st.spinor.norm() - 1.0) <= 1e-12);
      if (!st.degenerate) CHECK(std::abs(std::abs(std::polar(1.0, -st.theta)) - 1.0) <= 1e-12);
      // Even dispersion.
      CHECK(dispersion(p, -st.k, st.band) == doctest::Approx(st.energy).epsilon(1e-13));
      if (p.B > 0) CHECK(spinor_phase(p, -st.k).theta == -st.theta);
      // Eigenpair residual.
      const Eigen::Vector2cd residual = bloch_hamiltonian(p, st.k) * st.spinor - st.energy * st.spinor;
      CHECK(residual.norm() <= 1e-10);
      if (!st.degenerate) {
        const Spinor other =
            bloch_spinor(p, st.k, st.band == Band::Lower ? Band::Upper : Band::Lower);
        CHECK(std::abs(other.dot(st.spinor)) <= 1e-12);
      }
      CHECK(dispersion(p, st.k, Band::Upper) >= dispersion(p, st.k, Band::Lower));
    }
  }
}
