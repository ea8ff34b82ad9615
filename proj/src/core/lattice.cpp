#include "lattice.hpp"

#include <cmath>
#include <string>

#include "error.hpp"

namespace nhls {

void ModelParams::validate() const {
  if (!std::isfinite(J) || !std::isfinite(delta) || !std::isfinite(gamma))
    fail(ErrorCode::InvalidArgument, "params: J, delta, gamma must be finite");
  if (!(J > 0.0)) fail(ErrorCode::InvalidArgument, "params.J: must be > 0 (got " + std::to_string(J) + ")");
  if (!(1.0 + delta > 0.0))
    fail(ErrorCode::InvalidArgument, "params.delta: 1+delta must be > 0 (got " + std::to_string(delta) + ")");
}

bool ModelParams::is_at_ep() const { return std::abs(std::abs(gamma) - std::abs(1.0 + delta - J)) <= 1e-12; }

double ep_gamma(const ModelParams& p, int sign) {
  if (sign != 1 && sign != -1) fail(ErrorCode::InvalidArgument, "ep_gamma: sign must be +1 or -1");
  return sign * (1.0 + p.delta - p.J);
}

void LatticeSpec::validate() const {
  if (segments.empty()) fail(ErrorCode::InvalidArgument, "segments: lattice spec is empty");
  for (std::size_t s = 0; s < segments.size(); ++s) {
    const auto& d = segments[s];
    const std::string where = "segments[" + std::to_string(s) + "]";
    if (d.length == 0) fail(ErrorCode::InvalidArgument, where + ".length: must be positive");
    if (d.kind == SegmentKind::NhSshSegment) {
      if (d.length % 2 != 0)
        fail(ErrorCode::InvalidArgument,
             where + ".length: NhSshSegment length must be even (got " + std::to_string(d.length) + ")");
      if (d.gamma_sign != 1 && d.gamma_sign != -1)
        fail(ErrorCode::InvalidArgument, where + ".gamma_sign: must be +1 or -1");
    }
  }
  const std::size_t n = site_count();
  if (boundary == Boundary::Ring) {
    if (n < 3) fail(ErrorCode::InvalidArgument, "boundary: ring needs at least 3 sites");
    if (has_ssh() && n % 2 != 0)
      fail(ErrorCode::InvalidArgument, "boundary: ring with NhSshSegment needs an even total site count (got " +
                                           std::to_string(n) + ")");
  } else if (n < 2) {
    fail(ErrorCode::InvalidArgument, "segments: open lattice needs at least 2 sites");
  }
}

std::size_t LatticeSpec::site_count() const {
  std::size_t n = 0;
  for (const auto& d : segments) n += d.length;
  return n;
}

bool LatticeSpec::has_ssh() const {
  for (const auto& d : segments)
    if (d.kind == SegmentKind::NhSshSegment) return true;
  return false;
}

bool LatticeSpec::contains(long j) const { return j >= first_label() && j <= last_label(); }

std::size_t LatticeSpec::index(long j) const {
  if (!contains(j))
    fail(ErrorCode::InvalidArgument, "site label " + std::to_string(j) + " outside lattice [" +
                                         std::to_string(first_label()) + ", " + std::to_string(last_label()) + "]");
  return static_cast<std::size_t>(j + origin_offset);
}

std::pair<long, long> LatticeSpec::segment_range(std::size_t s) const {
  if (s >= segments.size()) fail(ErrorCode::InvalidArgument, "segment index out of range");
  std::size_t start = 0;
  for (std::size_t i = 0; i < s; ++i) start += segments[i].length;
  return {label(start), label(start + segments[s].length - 1)};
}

LatticeSpec junction_spec(std::size_t lead, std::size_t ssh, bool gain_first) {
  LatticeSpec s;
  s.segments = {SegmentDescriptor::lead(lead), SegmentDescriptor::ssh(ssh, gain_first)};
  s.origin_offset = static_cast<long>(lead);
  return s;
}

LatticeSpec sandwich_spec(std::size_t lead, std::size_t seg, bool gain_first) {
  LatticeSpec s;
  s.segments = {SegmentDescriptor::lead(lead), SegmentDescriptor::ssh(seg, gain_first), SegmentDescriptor::lead(lead)};
  s.origin_offset = static_cast<long>(lead + seg / 2);
  return s;
}

LatticeSpec stack_spec(std::size_t lead, std::size_t n, std::size_t seg, std::size_t spacer, bool gain_first) {
  if (n == 0) fail(ErrorCode::InvalidArgument, "stack_spec: need at least one segment");
  LatticeSpec s;
  s.segments.push_back(SegmentDescriptor::lead(lead));
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0 && spacer > 0) s.segments.push_back(SegmentDescriptor::lead(spacer));
    s.segments.push_back(SegmentDescriptor::ssh(seg, gain_first));
  }
  s.segments.push_back(SegmentDescriptor::lead(lead));
  const std::size_t stack = n * seg + (n - 1) * spacer;
  s.origin_offset = static_cast<long>(lead + stack / 2);
  return s;
}

LatticeSpec ssh_ring_spec(std::size_t n_cells) {
  LatticeSpec s;
  s.segments = {SegmentDescriptor::ssh(2 * n_cells, true)};
  s.boundary = Boundary::Ring;
  return s;
}

Hamiltonian::Hamiltonian(LatticeSpec spec, ModelParams params, Eigen::VectorXcd diag, Eigen::VectorXd bonds,
                         double closing_bond)
    : spec_(std::move(spec)), params_(params), diag_(std::move(diag)), bonds_(std::move(bonds)),
      closing_(closing_bond) {
  if (bonds_.size() + 1 != diag_.size()) fail(ErrorCode::InvalidArgument, "Hamiltonian: bond count mismatch");
}

cd Hamiltonian::operator()(std::size_t i, std::size_t j) const {
  const std::size_t n = dim();
  if (i >= n || j >= n) fail(ErrorCode::InvalidArgument, "Hamiltonian entry out of range");
  if (i == j) return diag_[i];
  if (i + 1 == j) return bonds_[i];
  if (j + 1 == i) return bonds_[j];
  if (is_ring() && ((i == 0 && j == n - 1) || (j == 0 && i == n - 1))) return closing_;
  return 0.0;
}

Eigen::MatrixXcd Hamiltonian::dense() const {
  const Eigen::Index n = diag_.size();
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) h(i, i) = diag_[i];
  for (Eigen::Index i = 0; i + 1 < n; ++i) h(i, i + 1) = h(i + 1, i) = bonds_[i];
  if (is_ring()) h(0, n - 1) = h(n - 1, 0) = closing_;
  return h;
}

void Hamiltonian::apply(const cd* x, cd* y) const {
  const std::size_t n = dim();
  const cd* d = diag_.data();
  const double* b = bonds_.data();
  y[0] = d[0] * x[0] + b[0] * x[1];
  for (std::size_t i = 1; i + 1 < n; ++i) y[i] = b[i - 1] * x[i - 1] + d[i] * x[i] + b[i] * x[i + 1];
  y[n - 1] = b[n - 2] * x[n - 2] + d[n - 1] * x[n - 1];
  if (is_ring()) {
    y[0] += closing_ * x[n - 1];
    y[n - 1] += closing_ * x[0];
  }
}

Eigen::VectorXcd Hamiltonian::apply(const Eigen::VectorXcd& x) const {
  if (static_cast<std::size_t>(x.size()) != dim()) fail(ErrorCode::InvalidArgument, "apply: dimension mismatch");
  Eigen::VectorXcd y(x.size());
  apply(x.data(), y.data());
  return y;
}

bool Hamiltonian::is_hermitian() const { return diag_.imag().cwiseAbs().maxCoeff() == 0.0; }

namespace {

struct Builder {
  std::vector<cd> diag;
  std::vector<double> bonds;

  void add_segment(const SegmentDescriptor& d, const ModelParams& p) {
    if (!diag.empty()) bonds.push_back(p.J);
    for (std::size_t m = 0; m < d.length; ++m) {
      if (m > 0) {
        const bool strong = d.kind == SegmentKind::NhSshSegment && (m - 1) % 2 == 0;
        bonds.push_back(strong ? p.strong_bond() : p.J);
      }
      if (d.kind == SegmentKind::NhSshSegment) {
        const double g = d.gamma_sign * p.gamma;
        const bool gain = (m % 2 == 0) == d.gain_first;
        diag.emplace_back(0.0, gain ? g : -g);
      } else {
        diag.emplace_back(0.0, 0.0);
      }
    }
  }
};

}  // namespace

Hamiltonian assemble(const LatticeSpec& spec, const ModelParams& params) {
  params.validate();
  spec.validate();
  Builder b;
  for (const auto& d : spec.segments) b.add_segment(d, params);
  Eigen::VectorXcd diag = Eigen::Map<Eigen::VectorXcd>(b.diag.data(), static_cast<Eigen::Index>(b.diag.size()));
  Eigen::VectorXd bonds = Eigen::Map<Eigen::VectorXd>(b.bonds.data(), static_cast<Eigen::Index>(b.bonds.size()));
  const double closing = spec.boundary == Boundary::Ring ? params.J : 0.0;
  return Hamiltonian(spec, params, std::move(diag), std::move(bonds), closing);
}

Hamiltonian build_uniform_chain(std::size_t n_sites, const ModelParams& params) {
  if (n_sites < 2) fail(ErrorCode::InvalidArgument, "build_uniform_chain: n_sites must be >= 2");
  LatticeSpec s;
  s.segments = {SegmentDescriptor::lead(n_sites)};
  return assemble(s, params);
}

Hamiltonian build_nh_ssh_segment(std::size_t n_sites, const ModelParams& params, bool gain_first) {
  if (n_sites == 0 || n_sites % 2 != 0)
    fail(ErrorCode::InvalidArgument, "build_nh_ssh_segment: n_sites must be even and positive (got " +
                                         std::to_string(n_sites) + ")");
  LatticeSpec s;
  s.segments = {SegmentDescriptor::ssh(n_sites, gain_first)};
  return assemble(s, params);
}

}  // namespace nhls
