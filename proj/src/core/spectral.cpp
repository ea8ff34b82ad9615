#include "spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include <Eigen/Eigenvalues>

#include "csv.hpp"
#include "error.hpp"

namespace nhls {

namespace {

constexpr double kPi = std::numbers::pi;
const cd kI{0.0, 1.0};

// i^n computed without rounding.
cd quarter_turn(long n) {
  switch (((n % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

}  // namespace

cd dispersion(double k, const ModelParams& p, Band band) {
  const double b = p.strong_bond();
  const double radicand = p.J * p.J + b * b - 2.0 * p.J * b * std::cos(k) - p.gamma * p.gamma;
  const cd root = std::sqrt(cd(radicand, 0.0));
  return band == Band::Plus ? root : -root;
}

cd ssh_momentum(cd E, const ModelParams& p, bool& propagating) {
  const double b = p.strong_bond();
  const cd c = (E * E - p.J * p.J + p.gamma * p.gamma - b * b) / (2.0 * p.J * b);
  if (std::abs(c.imag()) < 1e-14 && std::abs(c.real()) <= 1.0 + 1e-13) {
    propagating = true;
    const double k0 = 0.5 * std::acos(std::clamp(c.real(), -1.0, 1.0));
    return E.real() < -1e-14 ? cd(k0, 0.0) : cd(-k0, 0.0);
  }
  propagating = false;
  cd k0 = 0.5 * std::acos(c);
  if (k0.imag() < 0) k0 = -k0;
  return k0;
}

ScatteringSolution scattering_solve(double K, const ModelParams& p, Incidence inc) {
  p.validate();
  bool propagating = true;
  const cd k = ssh_momentum(2.0 * p.J * std::cos(K), p, propagating);
  ScatteringSolution s = scattering_solve(K, k, p, inc);
  s.propagating = propagating;
  return s;
}

ScatteringSolution scattering_solve(double K, cd k, const ModelParams& p, Incidence inc) {
  p.validate();
  const double J = p.J;
  const double b = p.strong_bond();
  const cd ig = kI * p.gamma;
  ScatteringSolution s;
  s.K = K;
  s.k = k;
  s.incidence = inc;
  s.E = 2.0 * J * std::cos(K);
  const cd E = s.E;
  if (std::abs(E + ig) < 1e-14) fail(ErrorCode::SingularSystem, "scattering_solve: E + i gamma vanishes");
  const cd eik = std::exp(kI * k), emik = std::exp(-kI * k);
  const cd eiK = std::exp(kI * K), emiK = std::exp(-kI * K);

  s.lambda_k = (J * emik + b * eik) / (E + ig);
  s.lambda_minus_k = (J * eik + b * emik) / (E + ig);
  s.mu_k = (E - ig) - b * s.lambda_k * emik;
  s.mu_minus_k = (E - ig) - b * s.lambda_minus_k * eik;
  s.nu_K = E * emiK - J * emiK * emiK;
  s.nu_minus_K = E * eiK - J * eiK * eiK;

  cd I = inc == Incidence::FromLead ? 1.0 : 0.0;
  cd IA = inc == Incidence::FromLead ? 0.0 : 1.0;
  const cd m00 = -s.nu_minus_K, m01 = J, m10 = J * eiK, m11 = -s.mu_minus_k;
  const cd r0 = s.nu_K * I - J * IA;
  const cd r1 = -J * emiK * I + s.mu_k * IA;
  const cd det = m00 * m11 - m01 * m10;
  const double scale = std::max({std::abs(m00), std::abs(m01), std::abs(m10), std::abs(m11)});
  if (std::abs(det) <= 1e-12 * scale * scale)
    fail(ErrorCode::SingularSystem, "scattering_solve: interface system is singular at K=" + fmt(K));
  const cd O = (r0 * m11 - m01 * r1) / det;
  const cd OA = (m00 * r1 - r0 * m10) / det;
  s.amps = {I, O, IA, OA, s.lambda_k * IA, s.lambda_minus_k * OA};
  s.propagating = std::abs(k.imag()) < 1e-14;
  return s;
}

cd ScatteringSolution::amplitude(long j) const {
  const double x = static_cast<double>(j);
  if (j < 0) return amps.I * std::exp(kI * K * x) + amps.O * std::exp(-kI * K * x);
  const cd in = std::exp(-kI * k * x), out = std::exp(kI * k * x);
  return j % 2 == 0 ? amps.IA * in + amps.OA * out : amps.IB * in + amps.OB * out;
}

Eigen::VectorXcd ScatteringSolution::on_lattice(const LatticeSpec& spec) const {
  Eigen::VectorXcd f(static_cast<Eigen::Index>(spec.site_count()));
  for (Eigen::Index i = 0; i < f.size(); ++i) f[i] = amplitude(spec.label(static_cast<std::size_t>(i)));
  return f;
}

StateVector zero_energy_interface_state(const ModelParams& p, int sign, const LatticeSpec& spec) {
  p.validate();
  spec.validate();
  if (sign != 1 && sign != -1) fail(ErrorCode::InvalidArgument, "zero_energy_interface_state: sign must be +1 or -1");
  if (std::abs(p.gamma - ep_gamma(p, sign)) > 1e-12)
    fail(ErrorCode::NotAtEp, "zero_energy_interface_state: gamma=" + fmt(p.gamma) + " but EP needs " +
                                 fmt(ep_gamma(p, sign)));
  Eigen::VectorXcd f(static_cast<Eigen::Index>(spec.site_count()));
  for (Eigen::Index i = 0; i < f.size(); ++i) f[i] = quarter_turn(-sign * spec.label(static_cast<std::size_t>(i)));
  return make_state(std::move(f), spec);
}

ZeroModeResult semi_infinite_zero_mode(const ModelParams& p, std::size_t n_check, int k_sign) {
  p.validate();
  if (!p.is_at_ep()) fail(ErrorCode::NotAtEp, "semi_infinite_zero_mode: params are not at an EP");
  if (k_sign != 1 && k_sign != -1) fail(ErrorCode::InvalidArgument, "semi_infinite_zero_mode: k_sign must be +1 or -1");
  const double b = p.strong_bond();
  if (std::abs(b - p.J) < 1e-12)
    fail(ErrorCode::InvalidArgument, "semi_infinite_zero_mode: needs 1+delta != J");
  const cd eik = quarter_turn(k_sign), e2ik = quarter_turn(2 * k_sign), e3ik = quarter_turn(3 * k_sign);
  const cd E = 0.0;
  const cd ig = kI * p.gamma;
  const cd den = b + p.J * e2ik;
  ZeroModeResult r;
  r.IA = 1.0;
  r.IB = (E - ig) * eik / den;
  r.OA = -(b * e2ik + p.J) * e2ik / den;
  r.OB = -(E - ig) * e3ik / den;
  r.f.resize(static_cast<Eigen::Index>(n_check));
  for (std::size_t j = 0; j < n_check; ++j) {
    const long jl = static_cast<long>(j);
    const cd in = quarter_turn(-k_sign * jl), out = quarter_turn(k_sign * jl);
    r.f[static_cast<Eigen::Index>(j)] = j % 2 == 0 ? r.IA * in + r.OA * out : r.IB * in + r.OB * out;
  }
  return r;
}

cd ring_g(double k, const ModelParams& p) { return p.strong_bond() - p.J * std::exp(kI * k); }

Eigen::Matrix2cd bloch_matrix(double k, const ModelParams& p) {
  const cd g = ring_g(k, p);
  Eigen::Matrix2cd h;
  h << kI * p.gamma, g, std::conj(g), -kI * p.gamma;
  return h;
}

Eigen::VectorXcd RingMode::real_space(std::size_t n_cells) const {
  const std::size_t n = n_cells;
  Eigen::VectorXcd v(static_cast<Eigen::Index>(2 * n));
  const double norm = 1.0 / std::sqrt(static_cast<double>(n));
  const std::size_t mm = static_cast<std::size_t>(m) % n;
  for (std::size_t l = 1; l <= n; ++l) {
    const std::size_t turn = (mm * l) % n;
    const cd phase = std::polar(norm, -2.0 * kPi * static_cast<double>(turn) / static_cast<double>(n));
    v[static_cast<Eigen::Index>(2 * l - 2)] = amplitudes[0] * phase;
    v[static_cast<Eigen::Index>(2 * l - 1)] = amplitudes[1] * phase;
  }
  return v;
}

std::vector<RingMode> ring_modes(std::size_t n_cells, const ModelParams& p) {
  p.validate();
  if (n_cells < 2) fail(ErrorCode::InvalidArgument, "ring_modes: need at least 2 cells");
  std::vector<RingMode> modes;
  modes.reserve(2 * n_cells);
  const double n = static_cast<double>(n_cells);
  for (std::size_t mi = 0; mi < n_cells; ++mi) {
    const int m = static_cast<int>(mi);
    const double k = kPi * (2.0 * m - n) / n;
    const cd g = ring_g(k, p);
    const double g2 = std::norm(g);
    const double x = g2 - p.gamma * p.gamma;
    RingMode plus{m, k, Band::Plus, 0.0, 0.0, 0.0, g, {}, ModeKind::Regular};
    RingMode minus = plus;
    minus.band = Band::Minus;

    if (std::abs(x) < 1e-10) {
      if (g2 + p.gamma * p.gamma < 1e-20) {
        plus.kind = minus.kind = ModeKind::Null;
        plus.amplitudes = {1.0, 0.0};
        minus.amplitudes = {0.0, 1.0};
      } else {
        const double gm = std::sqrt(g2);
        plus.kind = ModeKind::Coalescing;
        minus.kind = ModeKind::Generalized;
        plus.e_i_theta = minus.e_i_theta = kI * p.gamma / gm;
        plus.theta = minus.theta = std::arg(plus.e_i_theta);
        Eigen::Vector2cd v(g, -kI * p.gamma);
        v.normalize();
        const Eigen::Matrix2cd h = bloch_matrix(k, p);
        Eigen::Vector2cd phi = h.completeOrthogonalDecomposition().solve(v);
        phi.normalize();
        plus.amplitudes = {v[0], v[1]};
        minus.amplitudes = {phi[0], phi[1]};
      }
    } else if (std::sqrt(g2) < 1e-14) {
      plus.kind = minus.kind = ModeKind::Broken;
      plus.energy = kI * p.gamma;
      minus.energy = -kI * p.gamma;
      plus.amplitudes = {1.0, 0.0};
      minus.amplitudes = {0.0, 1.0};
    } else {
      const cd root = std::sqrt(cd(x, 0.0));
      const double gm = std::sqrt(g2);
      for (RingMode* r : {&plus, &minus}) {
        const double s = r->band == Band::Plus ? 1.0 : -1.0;
        r->kind = x > 0 ? ModeKind::Regular : ModeKind::Broken;
        r->energy = s * root;
        r->e_i_theta = (s * root + kI * p.gamma) / (s * gm);
        r->theta = std::arg(r->e_i_theta);
        const cd u = (r->energy + kI * p.gamma) / std::conj(g);
        const double nrm = std::sqrt(std::norm(u) + 1.0);
        r->amplitudes = {u / nrm, 1.0 / nrm};
      }
    }
    modes.push_back(plus);
    modes.push_back(minus);
  }
  return modes;
}

double dirac_probability_analytic(const std::vector<cd>& c_plus, const std::vector<cd>& c_minus, double t,
                                  const std::vector<RingMode>& modes) {
  if (c_plus.size() != c_minus.size() || 2 * c_plus.size() != modes.size())
    fail(ErrorCode::InvalidArgument, "dirac_probability_analytic: coefficient/mode count mismatch");
  double diag = 0.0, cross = 0.0;
  for (std::size_t m = 0; m < c_plus.size(); ++m) {
    const RingMode& mp = modes[2 * m];
    diag += std::norm(c_plus[m]) + std::norm(c_minus[m]);
    if (c_plus[m] == 0.0 && c_minus[m] == 0.0) continue;
    if (mp.kind == ModeKind::Null) continue;
    if (mp.kind != ModeKind::Regular)
      fail(ErrorCode::InvalidArgument, "dirac_probability_analytic: coefficient on a broken or EP mode at m=" +
                                           std::to_string(m));
    const cd phase = std::exp(-2.0 * kI * mp.energy * t);
    cross += std::real(-kI * mp.e_i_theta * phase * c_plus[m] * std::conj(c_minus[m])) * std::sin(mp.theta);
  }
  return diag + 2.0 * cross;
}

Eigen::VectorXcd ring_state(const std::vector<cd>& c_plus, const std::vector<cd>& c_minus,
                            const std::vector<RingMode>& modes) {
  if (c_plus.size() != c_minus.size() || 2 * c_plus.size() != modes.size())
    fail(ErrorCode::InvalidArgument, "ring_state: coefficient/mode count mismatch");
  const std::size_t n = c_plus.size();
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(2 * n));
  for (std::size_t m = 0; m < n; ++m) {
    if (c_plus[m] != 0.0) psi += c_plus[m] * modes[2 * m].real_space(n);
    if (c_minus[m] != 0.0) psi += c_minus[m] * modes[2 * m + 1].real_space(n);
  }
  return psi;
}

double overlap_Ok(double k, const ModelParams& p, bool small_k_approx) {
  const double b = p.strong_bond();
  if (small_k_approx) {
    if (p.gamma == 0.0) return 0.0;
    return 1.0 / std::sqrt(1.0 + p.J * b * k * k / (p.gamma * p.gamma));
  }
  const double den2 = p.J * p.J + b * b - 2.0 * p.J * b * std::cos(k);
  if (!(den2 > 1e-300)) fail(ErrorCode::NumericalFailure, "overlap_Ok: denominator vanishes at k=" + fmt(k));
  return std::abs(p.gamma) / std::sqrt(den2);
}

double numerical_band_overlap(double k, const ModelParams& p) {
  const double x = std::norm(ring_g(k, p)) - p.gamma * p.gamma;
  if (std::abs(x) < 1e-10) fail(ErrorCode::DefectiveSpectrum, "numerical_band_overlap: bands coalesce at k=" + fmt(k));
  Eigen::ComplexEigenSolver<Eigen::Matrix2cd> es(bloch_matrix(k, p));
  if (es.info() != Eigen::Success) fail(ErrorCode::NumericalFailure, "numerical_band_overlap: eigensolve failed");
  const Eigen::Vector2cd a = es.eigenvectors().col(0).normalized();
  const Eigen::Vector2cd c = es.eigenvectors().col(1).normalized();
  return std::abs(a.dot(c));
}

std::vector<double> k_grid(std::size_t n) {
  if (n < 2) fail(ErrorCode::InvalidArgument, "k_grid: need at least 2 samples");
  std::vector<double> ks(n);
  for (std::size_t i = 0; i < n; ++i)
    ks[i] = -kPi + 2.0 * kPi * static_cast<double>(i) / static_cast<double>(n - 1);
  return ks;
}

std::vector<CurvePoint> dispersion_curve(const ModelParams& p, Band band, std::size_t n) {
  p.validate();
  std::vector<CurvePoint> pts;
  for (double k : k_grid(n)) pts.push_back({k, dispersion(k, p, band)});
  return pts;
}

OverlapCurve overlap_curve(const ModelParams& p, std::size_t n, bool small_k_approx) {
  p.validate();
  OverlapCurve c{p, {}};
  for (double k : k_grid(n)) c.samples.emplace_back(k, overlap_Ok(k, p, small_k_approx));
  return c;
}

void write_curve_csv(std::ostream& os, const std::vector<CurvePoint>& pts) {
  os << "k,value_re,value_im\n";
  for (const auto& pt : pts) os << fmt(pt.k) << ',' << fmt(pt.value.real()) << ',' << fmt(pt.value.imag()) << '\n';
}

void write_curve_csv(std::ostream& os, const OverlapCurve& c) {
  os << "k,value_re,value_im\n";
  for (const auto& [k, v] : c.samples) os << fmt(k) << ',' << fmt(v) << ",0\n";
}

}  // namespace nhls
