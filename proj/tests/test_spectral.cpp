#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include <unsupported/Eigen/MatrixFunctions>

#include "error.hpp"
#include "lattice.hpp"
#include "linalg.hpp"
#include "spectral.hpp"

using namespace nhls;

namespace {

constexpr double pi = std::numbers::pi;
const ModelParams kEp{1.0, 0.5, 0.5};

double interior_residual(const Hamiltonian& h, const Eigen::VectorXcd& f, cd E, std::size_t margin) {
  const Eigen::VectorXcd r = h.apply(f) - E * f;
  double m = 0.0;
  for (std::size_t i = margin; i + margin < h.dim(); ++i) m = std::max(m, std::abs(r[static_cast<Eigen::Index>(i)]));
  return m;
}

}  // namespace

TEST_CASE("dispersion squares to the Bloch eigenvalues") {
  for (double g : {0.0, 0.3, 0.5, 0.9}) {
    const ModelParams p{1.0, 0.5, g};
    for (double k : {-2.9, -1.0, 0.2, 1.7, 3.1}) {
      const auto ev = eig_general(bloch_matrix(k, p), false).values;
      const cd e = dispersion(k, p, Band::Plus);
      CHECK(std::abs(ev[0] * ev[0] - e * e) < 1e-12);
      CHECK(std::abs(ev[0] + ev[1]) < 1e-12);
      CHECK(dispersion(k, p, Band::Minus) == -e);
    }
  }
  CHECK(std::abs(dispersion(0.0, kEp, Band::Plus)) < 1e-15);
}

TEST_CASE("lead-incidence Bethe solution satisfies the junction equations") {
  const auto h = assemble(junction_spec(300, 300), kEp);
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> uK(0.05, pi - 0.05);
  for (int trial = 0; trial < 10; ++trial) {
    const double K = -uK(rng);
    const auto s = scattering_solve(K, kEp);
    CHECK(s.propagating);
    CHECK(std::abs(s.amps.IB - s.lambda_k * s.amps.IA) < 1e-14);
    CHECK(std::abs(s.amps.OB - s.lambda_minus_k * s.amps.OA) < 1e-14);
    CHECK(interior_residual(h, s.on_lattice(h.spec()), s.E, 1) < 1e-10);
  }
}

TEST_CASE("SSH-incidence Bethe solution satisfies the junction equations") {
  const ModelParams p{1.0, 0.5, 0.3};
  const auto h = assemble(junction_spec(200, 200), p);
  for (double K : {-2.5, -1.2, -0.4}) {
    const auto s = scattering_solve(K, p, Incidence::FromSsh);
    CHECK(s.amps.I == cd(0, 0));
    CHECK(s.amps.IA == cd(1, 0));
    CHECK(interior_residual(h, s.on_lattice(h.spec()), s.E, 1) < 1e-10);
  }
}

TEST_CASE("interface reflection vanishes at E=0 for the gain-first EP orientation") {
  const auto s = scattering_solve(-pi / 2, kEp);
  CHECK(std::abs(s.E) < 1e-15);
  CHECK(std::abs(s.amps.O) < 1e-12);
}

TEST_CASE("gap energies give an evanescent branch that still solves the equations") {
  const ModelParams p{1.0, 0.5, 0.0};
  const double K = std::acos(0.15);
  const auto s = scattering_solve(K, p);
  CHECK_FALSE(s.propagating);
  CHECK(s.k.imag() > 0);
  const auto h = assemble(junction_spec(60, 60), p);
  const Eigen::VectorXcd f = s.on_lattice(h.spec());
  CHECK(interior_residual(h, f, s.E, 1) < 1e-10);
}

TEST_CASE("zero-energy interface state is an exact eigenvector at either EP") {
  for (int sign : {1, -1}) {
    const ModelParams p = kEp.with_gamma(ep_gamma(kEp, sign));
    const auto h = assemble(junction_spec(40, 40), p);
    const auto f = zero_energy_interface_state(p, sign, h.spec());
    const Eigen::VectorXcd r = h.apply(f.amps);
    for (Eigen::Index i = 1; i + 1 < r.size(); ++i) CHECK(r[i] == cd(0, 0));
  }
  CHECK_THROWS_AS(zero_energy_interface_state(kEp.with_gamma(0.4), 1, junction_spec(4, 4)), Error);
}

TEST_CASE("semi-infinite EP chain has no zero mode") {
  for (int ks : {1, -1}) {
    const auto z = semi_infinite_zero_mode(kEp, 64, ks);
    for (Eigen::Index j = 0; j < z.f.size(); ++j) CHECK(z.f[j] == cd(0, 0));
  }
  CHECK_THROWS_AS(semi_infinite_zero_mode(kEp.with_gamma(0.3), 8), Error);
}

TEST_CASE("ring modes are eigenvectors of the assembled ring") {
  const std::size_t N = 12;
  for (const ModelParams& p : {ModelParams{1.0, 0.5, 0.3}, kEp}) {
    const auto h = assemble(ssh_ring_spec(N), p);
    const auto modes = ring_modes(N, p);
    REQUIRE(modes.size() == 2 * N);
    for (const auto& m : modes) {
      const Eigen::VectorXcd v = m.real_space(N);
      CHECK(std::abs(v.squaredNorm() - 1.0) < 1e-12);
      if (m.kind == ModeKind::Regular || m.kind == ModeKind::Coalescing)
        CHECK((h.apply(v) - m.energy * v).norm() < 1e-12);
    }
  }
  const auto ep = ring_modes(N, kEp);
  const auto& c = ep[2 * (N / 2)];
  CHECK(c.k == 0.0);
  CHECK(c.kind == ModeKind::Coalescing);
  CHECK(ep[2 * (N / 2) + 1].kind == ModeKind::Generalized);
  // Jordan partner: H phi is parallel to the coalescing vector, not zero.
  const Eigen::Matrix2cd hb = bloch_matrix(0.0, kEp);
  const Eigen::Vector2cd v(c.amplitudes[0], c.amplitudes[1]);
  const auto& gm = ep[2 * (N / 2) + 1];
  const Eigen::Vector2cd hp = hb * Eigen::Vector2cd(gm.amplitudes[0], gm.amplitudes[1]);
  CHECK(hp.norm() > 1e-3);
  CHECK(std::abs(std::abs(v.dot(hp)) - hp.norm()) < 1e-12);
  CHECK((hb * v).norm() < 1e-14);
}

TEST_CASE("analytic Dirac probability matches direct evolution on a 20-cell ring") {
  const std::size_t N = 20;
  std::mt19937 rng(3);
  std::normal_distribution<double> n01;
  for (const ModelParams& p : {ModelParams{1.0, 0.5, 0.3}, ModelParams{1.0, 0.5, 0.45}}) {
    const auto modes = ring_modes(N, p);
    std::vector<cd> cp(N), cm(N);
    for (std::size_t m = 0; m < N; ++m) {
      cp[m] = cd(n01(rng), n01(rng)) * 0.2;
      cm[m] = cd(n01(rng), n01(rng)) * 0.2;
    }
    const Eigen::VectorXcd psi0 = ring_state(cp, cm, modes);
    const Eigen::MatrixXcd H = assemble(ssh_ring_spec(N), p).dense();
    for (double t : {0.0, 0.7, 3.0, 11.5}) {
      const Eigen::MatrixXcd U = (cd(0, -t) * H).exp();
      const double direct = (U * psi0).squaredNorm();
      CHECK(std::abs(dirac_probability_analytic(cp, cm, t, modes) - direct) < 1e-8);
    }
  }
}

TEST_CASE("Dirac probability is constant without band cross terms") {
  const std::size_t N = 20;
  const auto modes = ring_modes(N, kEp);
  std::vector<cd> cp(N, 0.0), cm(N, 0.0);
  for (std::size_t m = 0; m < N; ++m)
    if (m != N / 2) (m % 2 ? cp : cm)[m] = cd(0.1 * m, -0.05);
  const double p0 = dirac_probability_analytic(cp, cm, 0.0, modes);
  for (double t : {1.0, 5.0, 40.0}) CHECK(std::abs(dirac_probability_analytic(cp, cm, t, modes) - p0) < 1e-14);
  cp[N / 2] = 1.0;
  CHECK_THROWS_AS(dirac_probability_analytic(cp, cm, 1.0, modes), Error);
}

TEST_CASE("overlap formula agrees with zgeev eigenvectors") {
  for (double g : {0.1, 0.3, 0.5}) {
    const ModelParams p{1.0, 0.5, g};
    for (double k : k_grid(200)) {
      const auto es = eig_general(bloch_matrix(k, p), true);
      const Eigen::Vector2cd a = es.vectors.col(0).normalized();
      const Eigen::Vector2cd b = es.vectors.col(1).normalized();
      CHECK(std::abs(overlap_Ok(k, p) - std::abs(a.dot(b))) < 1e-10);
    }
  }
  CHECK(overlap_Ok(0.0, kEp) == 1.0);
  CHECK(std::abs(overlap_Ok(1e-3, kEp, true) - overlap_Ok(1e-3, kEp)) < 1e-6);
  CHECK_THROWS_AS(numerical_band_overlap(0.0, kEp), Error);
}

TEST_CASE("k grid and curve csv") {
  const auto ks = k_grid(5);
  CHECK(ks.front() == -pi);
  CHECK(ks.back() == pi);
  CHECK(ks[2] == 0.0);
  std::ostringstream os;
  write_curve_csv(os, overlap_curve(kEp, 3));
  CHECK(os.str().rfind("k,value_re,value_im\n", 0) == 0);
  CHECK(os.str().find("\n0,1,0\n") != std::string::npos);
}
