#pragma once

#include <ostream>
#include <utility>
#include <vector>

#include "lattice.hpp"
#include "state.hpp"

namespace nhls {

enum class Method { SpectralDecomposition, SteppedIntegrator };
// Backward evolves with e^{+iHt}.
enum class Direction { Forward, Backward };

struct PropagatorConfig {
  Method method = Method::SteppedIntegrator;
  double dt = 0.01;
  double t_max = 0.0;
  std::size_t snapshot_stride = 100;
  double degeneracy_guard = 1e6;  // max 1-norm condition number of the eigenvector matrix
  Direction direction = Direction::Forward;

  void validate(const ModelParams& p) const;
};

struct EvolutionRecord {
  std::vector<double> times;
  std::vector<StateVector> snapshots;
  std::vector<double> norms;

  std::size_t size() const { return times.size(); }
  // Index of the snapshot closest to t.
  std::size_t nearest(double t) const;
};

// exp(-alpha^2 (j-n_c)^2 / 2) exp(i k_c j), renormalized to Dirac norm 1.
StateVector gaussian_packet(double alpha, double n_c, double k_c, const LatticeSpec& spec);

EvolutionRecord propagate(const Hamiltonian& h, const StateVector& psi0, const PropagatorConfig& cfg);

// Gaussian-weighted sums over ring modes with 0 < k <= cutoff*sigma_k: plus band (psi_L) and minus band (psi_R),
// centred on the cell holding `center_site`.
std::pair<StateVector, StateVector> quasi_coalescing_packets(const Hamiltonian& ring, double sigma_k,
                                                             std::size_t center_site, double cutoff = 8.0);

// Columns t, site, re, im, density; every `every`-th snapshot.
void write_density_csv(std::ostream& os, const EvolutionRecord& rec, std::size_t every = 1);

}  // namespace nhls
