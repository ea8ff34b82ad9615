#pragma once

#include <complex>
#include <cstddef>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace nhls {

using cd = std::complex<double>;

// Hopping J, dimerization delta (strong bond 1+delta), onsite gain/loss gamma.
struct ModelParams {
  double J = 1.0;
  double delta = 0.0;
  double gamma = 0.0;

  void validate() const;
  double strong_bond() const { return 1.0 + delta; }
  bool is_at_ep() const;
  ModelParams with_gamma(double g) const { return {J, delta, g}; }
};

// sign * (1 + delta - J)
double ep_gamma(const ModelParams& p, int sign);

enum class SegmentKind { UniformLead, NhSshSegment };

struct SegmentDescriptor {
  SegmentKind kind = SegmentKind::UniformLead;
  std::size_t length = 0;
  int gamma_sign = 1;
  bool gain_first = true;

  static SegmentDescriptor lead(std::size_t n) { return {SegmentKind::UniformLead, n, 1, true}; }
  static SegmentDescriptor ssh(std::size_t n, bool gain_first = true, int gamma_sign = 1) {
    return {SegmentKind::NhSshSegment, n, gamma_sign, gain_first};
  }
  bool operator==(const SegmentDescriptor&) const = default;
};

enum class Boundary { Open, Ring };

// Site j (lattice label, may be negative) lives at array index j + origin_offset.
struct LatticeSpec {
  std::vector<SegmentDescriptor> segments;
  Boundary boundary = Boundary::Open;
  long origin_offset = 0;

  void validate() const;
  std::size_t site_count() const;
  long label(std::size_t index) const { return static_cast<long>(index) - origin_offset; }
  std::size_t index(long label) const;
  bool contains(long label) const;
  long first_label() const { return -origin_offset; }
  long last_label() const { return static_cast<long>(site_count()) - 1 - origin_offset; }
  // Inclusive label range covered by segment s.
  std::pair<long, long> segment_range(std::size_t s) const;
  bool has_ssh() const;
  bool operator==(const LatticeSpec&) const = default;
};

// Lead of `lead` sites followed by an SSH segment; label 0 is the first SSH site.
LatticeSpec junction_spec(std::size_t lead, std::size_t ssh, bool gain_first = true);
// Lead, SSH segment, lead; label 0 sits at offset seg/2 inside the segment.
LatticeSpec sandwich_spec(std::size_t lead, std::size_t seg, bool gain_first = true);
// Lead, n SSH segments of length seg separated by spacer leads, lead. Label 0 at the stack centre.
LatticeSpec stack_spec(std::size_t lead, std::size_t n, std::size_t seg, std::size_t spacer,
                       bool gain_first = true);
LatticeSpec ssh_ring_spec(std::size_t n_cells);

// Nearest-neighbour matrix: diagonal, bonds b_i = H(i,i+1) = H(i+1,i), optional ring corner.
class Hamiltonian {
 public:
  Hamiltonian(LatticeSpec spec, ModelParams params, Eigen::VectorXcd diag, Eigen::VectorXd bonds,
              double closing_bond);

  std::size_t dim() const { return static_cast<std::size_t>(diag_.size()); }
  const LatticeSpec& spec() const { return spec_; }
  const ModelParams& params() const { return params_; }
  const Eigen::VectorXcd& diagonal() const { return diag_; }
  const Eigen::VectorXd& bonds() const { return bonds_; }
  double closing_bond() const { return closing_; }
  bool is_ring() const { return spec_.boundary == Boundary::Ring; }

  cd operator()(std::size_t i, std::size_t j) const;
  Eigen::MatrixXcd dense() const;
  // y = H x
  void apply(const cd* x, cd* y) const;
  Eigen::VectorXcd apply(const Eigen::VectorXcd& x) const;
  bool is_hermitian() const;

 private:
  LatticeSpec spec_;
  ModelParams params_;
  Eigen::VectorXcd diag_;
  Eigen::VectorXd bonds_;
  double closing_;
};

Hamiltonian build_uniform_chain(std::size_t n_sites, const ModelParams& params);
Hamiltonian build_nh_ssh_segment(std::size_t n_sites, const ModelParams& params, bool gain_first);
Hamiltonian assemble(const LatticeSpec& spec, const ModelParams& params);

}  // namespace nhls
