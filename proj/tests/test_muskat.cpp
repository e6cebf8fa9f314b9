#include <cmath>

#include "doctest.h"
#include "fixtures.hpp"
#include "seabed/errors.hpp"
#include "seabed/muskat.hpp"
#include "seabed/profiles.hpp"

using namespace seabed;

namespace {

PhysicalParams muskat_params(double mu_plus, double mu_minus, double rho_plus = 0.0,
                             double rho_minus = 1.0, double gamma = 0.0) {
  PhysicalParams p;
  p.model = Model::Muskat;
  p.mu_plus = mu_plus;
  p.mu_minus = mu_minus;
  p.rho_plus = rho_plus;
  p.rho_minus = rho_minus;
  p.g = 1.0;
  p.gamma = gamma;
  return p;
}

std::vector<double> dense_oracle(const InterfaceCurve& curve, const PhysicalParams& p) {
  const int n = curve.size();
  const BirkhoffRott br(curve);
  std::vector<double> a(static_cast<std::size_t>(n) * n);
  std::vector<double> e(n, 0.0);
  for (int col = 0; col < n; ++col) {
    e[col] = 1.0;
    const auto column = muskat::apply_operator(br, p, e);
    for (int row = 0; row < n; ++row) a[static_cast<std::size_t>(row) * n + col] = column[row];
    e[col] = 0.0;
  }
  auto rhs = muskat::vorticity_rhs(curve, p);
  for (int k = 0; k < n; ++k) {
    if (curve.grid().in_decay_band(k)) rhs[k] = 0.0;
  }
  return oracle::dense_solve(std::move(a), std::move(rhs));
}

}  // namespace

TEST_SUITE("muskat") {

TEST_CASE("equal viscosities give the closed form") {
  const Grid g(8.0 * oracle::kPi, 256);
  const auto curve = profiles::cosine_bump(g, 0.3);
  const auto p = muskat_params(2.0, 2.0, 0.0, 1.5);
  const auto omega = muskat::solve_vorticity_equal(curve, p);
  const auto d1 = derivative(curve, 1);
  for (int j = 0; j < g.size(); ++j) CHECK(omega[j] == doctest::Approx(-1.5 * d1.dz2[j] / 2.0));
  CHECK_THROWS_AS(muskat::solve_vorticity_equal(curve, muskat_params(1.0, 2.0)), ValidationError);
}

TEST_CASE("flat state carries no vorticity for any physics") {
  const Grid g(20.0, 128);
  const auto flat = InterfaceCurve::flat(g);
  for (const auto& p : {muskat_params(1.0, 1.0), muskat_params(2.0, 1.0, 1.0, 0.0, 0.3),
                        muskat_params(0.5, 3.0, 0.2, 0.7, 1.0)}) {
    const auto omega = muskat::solve_vorticity(flat, p);
    for (int j = 0; j < g.size(); ++j) CHECK(omega[j] == 0.0);
  }
}

TEST_CASE("surface tension adds the differentiated curvature") {
  const Grid g(10.0, 512);
  const auto curve = fixture::sample(g, oracle::gaussian_graph(0.2));
  const auto base = muskat::vorticity_rhs(curve, muskat_params(1.0, 1.0, 0.0, 1.0, 0.0));
  const auto with = muskat::vorticity_rhs(curve, muskat_params(1.0, 1.0, 0.0, 1.0, 0.5));
  const auto dk = differentiate(curvature(curve), g, 0.0);
  for (int j = 0; j < g.size(); ++j) CHECK(with[j] - base[j] == doctest::Approx(0.5 * dk[j]));
}

TEST_CASE("general solve agrees with a dense direct solve") {
  const Grid g(10.0, 128);
  oracle::Gen gen(21);
  const auto curve = fixture::random_curve(g, gen);
  for (const auto& p : {muskat_params(1.1, 0.9), muskat_params(2.0, 1.0), muskat_params(1.0, 3.0, 0.0, 1.0, 0.1)}) {
    const auto sol = muskat::solve_vorticity_general(curve, p);
    const auto ref = dense_oracle(curve, p);
    double err = 0.0;
    for (int j = 0; j < g.size(); ++j) err = std::max(err, std::abs(sol.omega[j] - ref[j]));
    CHECK(err <= 1e-9);
    CHECK(sol.residual <= 1e-9);
  }
}

TEST_CASE("Picard increments contract geometrically") {
  const Grid g(10.0, 256);
  oracle::Gen gen(2);
  const auto curve = fixture::random_curve(g, gen);
  const auto sol = muskat::solve_vorticity_general(curve, muskat_params(2.0, 1.0));
  REQUIRE(sol.increments.size() >= 4);
  for (std::size_t k = 2; k < sol.increments.size(); ++k) {
    if (sol.increments[k] < 1e-14) break;
    CHECK(sol.increments[k] < 0.6 * sol.increments[k - 1]);
  }
  CHECK(sol.iterations <= 60);
}

TEST_CASE("equal viscosities make the operator a multiple of the identity") {
  const Grid g(10.0, 128);
  oracle::Gen gen(4);
  const auto curve = fixture::random_curve(g, gen);
  const auto omega = fixture::random_vorticity(g, gen);
  const auto out = muskat::apply_operator(BirkhoffRott(curve), muskat_params(1.7, 1.7), omega.values());
  for (int j = 0; j < g.size(); ++j) {
    CHECK(out[j] == doctest::Approx((g.in_decay_band(j) ? 1.0 : 1.7) * omega[j]));
  }
}

TEST_CASE("iteration budget is enforced") {
  const Grid g(10.0, 128);
  oracle::Gen gen(6);
  const auto curve = fixture::random_curve(g, gen);
  CHECK_THROWS_AS(muskat::solve_vorticity_general(curve, muskat_params(5.0, 1.0), 1e-14, 2),
                  NoConvergence);
  PhysicalParams ww = muskat_params(1.0, 1.0);
  ww.model = Model::WaterWaves;
  CHECK_THROWS_AS(muskat::vorticity_rhs(curve, ww), ValidationError);
}

}
