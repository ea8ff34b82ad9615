#include "dynamics.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "csv.hpp"
#include "error.hpp"
#include "linalg.hpp"
#include "spectral.hpp"

namespace nhls {

namespace {

const cd kI{0.0, 1.0};

std::vector<std::size_t> snapshot_steps(std::size_t n_steps, std::size_t stride) {
  std::vector<std::size_t> steps;
  for (std::size_t s = 0; s <= n_steps; s += stride) steps.push_back(s);
  if (steps.back() != n_steps) steps.push_back(n_steps);
  return steps;
}

std::size_t step_count(const PropagatorConfig& cfg) {
  const double r = cfg.t_max / cfg.dt;
  return r <= 0 ? 0 : static_cast<std::size_t>(std::ceil(r - 1e-9));
}

void push(EvolutionRecord& rec, double t, Eigen::VectorXcd amps, const std::shared_ptr<const LatticeSpec>& lat) {
  StateVector s{std::move(amps), lat};
  rec.times.push_back(t);
  rec.norms.push_back(s.dirac_norm());
  rec.snapshots.push_back(std::move(s));
}

EvolutionRecord run_stepped(const Hamiltonian& h, const StateVector& psi0, const PropagatorConfig& cfg) {
  const std::size_t n = h.dim();
  const std::size_t n_steps = step_count(cfg);
  const double dt = n_steps > 0 ? cfg.t_max / static_cast<double>(n_steps) : cfg.dt;
  const cd c = cfg.direction == Direction::Forward ? -kI : kI;
  const auto steps = snapshot_steps(n_steps, cfg.snapshot_stride);

  EvolutionRecord rec;
  Eigen::VectorXcd psi = psi0.amps;
  Eigen::VectorXcd k1(n), k2(n), k3(n), k4(n), tmp(n);
  auto f = [&](const Eigen::VectorXcd& x, Eigen::VectorXcd& y) {
    h.apply(x.data(), y.data());
    y *= c;
  };
  push(rec, 0.0, psi0.amps, psi0.lattice);
  std::size_t next = 1;
  for (std::size_t s = 1; s <= n_steps; ++s) {
    f(psi, k1);
    tmp = psi + (0.5 * dt) * k1;
    f(tmp, k2);
    tmp = psi + (0.5 * dt) * k2;
    f(tmp, k3);
    tmp = psi + dt * k3;
    f(tmp, k4);
    psi += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    if (next < steps.size() && steps[next] == s) {
      if (!psi.allFinite()) fail(ErrorCode::NumericalFailure, "propagate: state diverged at t=" + fmt(s * dt));
      push(rec, static_cast<double>(s) * dt, psi, psi0.lattice);
      ++next;
    }
  }
  return rec;
}

EvolutionRecord run_spectral(const Hamiltonian& h, const StateVector& psi0, const PropagatorConfig& cfg) {
  const std::size_t n_steps = step_count(cfg);
  const double dt = n_steps > 0 ? cfg.t_max / static_cast<double>(n_steps) : cfg.dt;
  const double sign = cfg.direction == Direction::Forward ? 1.0 : -1.0;
  const Eigen::MatrixXcd dense = h.dense();

  Eigen::MatrixXcd V;
  Eigen::VectorXcd lambda, c0;
  if (h.is_hermitian()) {
    auto ed = eig_hermitian(dense, true);
    V = std::move(ed.vectors);
    lambda = std::move(ed.values);
    c0 = V.adjoint() * psi0.amps;
  } else {
    auto ed = eig_general(dense, true);
    V = std::move(ed.vectors);
    lambda = std::move(ed.values);
    Eigen::PartialPivLU<Eigen::MatrixXcd> lu(V);
    const Eigen::MatrixXcd Vinv = lu.inverse();
    const double cond = condition_number_1(V, Vinv);
    if (!std::isfinite(cond) || cond > cfg.degeneracy_guard)
      fail(ErrorCode::DefectiveSpectrum, "propagate: eigenvector condition number " + fmt(cond) +
                                             " exceeds guard " + fmt(cfg.degeneracy_guard) +
                                             "; use the stepped integrator");
    c0 = Vinv * psi0.amps;
  }

  EvolutionRecord rec;
  push(rec, 0.0, psi0.amps, psi0.lattice);
  const auto steps = snapshot_steps(n_steps, cfg.snapshot_stride);
  for (std::size_t i = 1; i < steps.size(); ++i) {
    const double t = static_cast<double>(steps[i]) * dt;
    Eigen::VectorXcd ct = c0;
    for (Eigen::Index m = 0; m < ct.size(); ++m) ct[m] *= std::exp(-kI * lambda[m] * (sign * t));
    push(rec, t, V * ct, psi0.lattice);
  }
  return rec;
}

}  // namespace

void PropagatorConfig::validate(const ModelParams& p) const {
  if (!(dt > 0) || !std::isfinite(dt)) fail(ErrorCode::InvalidArgument, "dt: must be positive and finite");
  if (!(t_max >= 0) || !std::isfinite(t_max)) fail(ErrorCode::InvalidArgument, "t_max: must be >= 0 and finite");
  if (snapshot_stride == 0) fail(ErrorCode::InvalidArgument, "snapshot_stride: must be >= 1");
  if (!(degeneracy_guard > 1)) fail(ErrorCode::InvalidArgument, "degeneracy_guard: must exceed 1");
  if (method == Method::SteppedIntegrator && dt > 0.05 / p.J + 1e-15)
    fail(ErrorCode::InvalidArgument, "dt: stepped integrator needs dt <= 0.05/J (got " + fmt(dt) + ")");
}

std::size_t EvolutionRecord::nearest(double t) const {
  if (times.empty()) fail(ErrorCode::InvalidArgument, "EvolutionRecord is empty");
  std::size_t best = 0;
  for (std::size_t i = 1; i < times.size(); ++i)
    if (std::abs(times[i] - t) < std::abs(times[best] - t)) best = i;
  return best;
}

StateVector gaussian_packet(double alpha, double n_c, double k_c, const LatticeSpec& spec) {
  spec.validate();
  if (!(alpha > 0) || !std::isfinite(alpha)) fail(ErrorCode::InvalidArgument, "alpha: must be positive");
  if (!std::isfinite(n_c) || !std::isfinite(k_c)) fail(ErrorCode::InvalidArgument, "n_c, k_c: must be finite");
  const std::size_t n = spec.site_count();
  Eigen::VectorXcd amps(static_cast<Eigen::Index>(n));
  double inside = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double j = static_cast<double>(spec.label(i));
    const double x = j - n_c;
    const double env = std::exp(-0.5 * alpha * alpha * x * x);
    amps[static_cast<Eigen::Index>(i)] = std::polar(env, k_c * j);
    inside += env * env;
  }
  const long ext = static_cast<long>(std::ceil(12.0 / alpha)) + 1;
  double outside = 0.0;
  for (long j = spec.first_label() - ext; j < spec.first_label(); ++j) {
    const double x = static_cast<double>(j) - n_c;
    outside += std::exp(-alpha * alpha * x * x);
  }
  for (long j = spec.last_label() + 1; j <= spec.last_label() + ext; ++j) {
    const double x = static_cast<double>(j) - n_c;
    outside += std::exp(-alpha * alpha * x * x);
  }
  if (!(inside > 0) || outside / (inside + outside) > 1e-8)
    fail(ErrorCode::SupportClipped, "gaussian_packet: tail mass " + fmt(outside / (inside + outside)) +
                                        " beyond the lattice edge (n_c=" + fmt(n_c) + ", alpha=" + fmt(alpha) + ")");
  amps /= std::sqrt(inside);
  return make_state(std::move(amps), spec);
}

EvolutionRecord propagate(const Hamiltonian& h, const StateVector& psi0, const PropagatorConfig& cfg) {
  cfg.validate(h.params());
  if (psi0.size() != h.dim())
    fail(ErrorCode::InvalidArgument, "propagate: state has " + std::to_string(psi0.size()) + " sites, H has " +
                                         std::to_string(h.dim()));
  return cfg.method == Method::SteppedIntegrator ? run_stepped(h, psi0, cfg) : run_spectral(h, psi0, cfg);
}

std::pair<StateVector, StateVector> quasi_coalescing_packets(const Hamiltonian& ring, double sigma_k,
                                                             std::size_t center_site, double cutoff) {
  const LatticeSpec& spec = ring.spec();
  const ModelParams& p = ring.params();
  if (!ring.is_ring() || spec.segments.size() != 1 || spec.segments[0].kind != SegmentKind::NhSshSegment ||
      spec.segments[0].gamma_sign != 1 || !spec.segments[0].gain_first)
    fail(ErrorCode::InvalidArgument, "quasi_coalescing_packets: needs a pure SSH ring");
  if (std::abs(p.gamma - ep_gamma(p, 1)) > 1e-12)
    fail(ErrorCode::NotAtEp, "quasi_coalescing_packets: ring is not at gamma = 1+delta-J");
  if (!(sigma_k > 0) || !(cutoff > 0)) fail(ErrorCode::InvalidArgument, "quasi_coalescing_packets: sigma_k must be > 0");
  const std::size_t n_cells = ring.dim() / 2;
  if (center_site >= ring.dim()) fail(ErrorCode::InvalidArgument, "quasi_coalescing_packets: center outside ring");
  const std::size_t l0 = center_site / 2 + 1;

  const auto modes = ring_modes(n_cells, p);
  std::vector<cd> none(n_cells, 0.0), cp(n_cells, 0.0), cm(n_cells, 0.0);
  std::size_t used = 0;
  for (std::size_t m = 0; m < n_cells; ++m) {
    const double k = modes[2 * m].k;
    if (!(k > 0 && k <= cutoff * sigma_k)) continue;
    const std::size_t turn = (m * l0) % n_cells;
    const double ang = 2.0 * std::numbers::pi * static_cast<double>(turn) / static_cast<double>(n_cells);
    const cd w = std::polar(std::exp(-k * k / (2.0 * sigma_k * sigma_k)), ang);
    cp[m] = w;
    cm[m] = w;
    ++used;
  }
  if (used == 0)
    fail(ErrorCode::InvalidArgument, "quasi_coalescing_packets: no ring momentum in (0, cutoff*sigma_k]; ring too small");
  Eigen::VectorXcd left = ring_state(cp, none, modes);
  Eigen::VectorXcd right = ring_state(none, cm, modes);
  left.normalize();
  right.normalize();
  return {make_state(std::move(left), spec), make_state(std::move(right), spec)};
}

void write_density_csv(std::ostream& os, const EvolutionRecord& rec, std::size_t every) {
  if (every == 0) every = 1;
  os << "t,site,re,im,density\n";
  for (std::size_t s = 0; s < rec.size(); s += every) {
    const StateVector& st = rec.snapshots[s];
    const std::string t = fmt(rec.times[s]);
    for (std::size_t i = 0; i < st.size(); ++i) {
      const cd a = st.amps[static_cast<Eigen::Index>(i)];
      os << t << ',' << st.lattice->label(i) << ',' << fmt(a.real()) << ',' << fmt(a.imag()) << ','
         << fmt(std::norm(a)) << '\n';
    }
  }
}

}  // namespace nhls
