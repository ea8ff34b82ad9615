#pragma once

#include <array>
#include <ostream>
#include <vector>

#include <Eigen/Dense>

#include "lattice.hpp"
#include "state.hpp"

namespace nhls {

enum class Band { Plus = 1, Minus = -1 };

// Bloch energy of the SSH ring at cell momentum k, complex in the broken region.
cd dispersion(double k, const ModelParams& p, Band band);

enum class Incidence { FromLead, FromSsh };

struct ScatteringAmplitudes {
  cd I, O, IA, OA, IB, OB;
};

// Lead (j < 0): I e^{iKj} + O e^{-iKj}.  SSH (j >= 0): (I^A|I^B) e^{-ikj} + (O^A|O^B) e^{ikj} on even|odd j.
struct ScatteringSolution {
  cd E;
  double K = 0.0;
  cd k;
  ScatteringAmplitudes amps;
  cd mu_k, mu_minus_k, nu_K, nu_minus_K, lambda_k, lambda_minus_k;
  Incidence incidence = Incidence::FromLead;
  bool propagating = true;  // false: k complex, evanescent branch with Im k > 0

  cd amplitude(long j) const;
  Eigen::VectorXcd on_lattice(const LatticeSpec& spec) const;
};

// Outgoing branch: positive group velocity of e^{ikj}; Im k > 0 in the gap.
cd ssh_momentum(cd E, const ModelParams& p, bool& propagating);

ScatteringSolution scattering_solve(double K, const ModelParams& p, Incidence inc = Incidence::FromLead);
// Same with the SSH momentum fixed by the caller.
ScatteringSolution scattering_solve(double K, cd k, const ModelParams& p, Incidence inc);

// f_j = e^{-i sign pi j / 2} on every site; params must sit at gamma = ep_gamma(p, sign).
StateVector zero_energy_interface_state(const ModelParams& p, int sign, const LatticeSpec& spec);

struct ZeroModeResult {
  cd IA = 1.0, IB, OA, OB;
  Eigen::VectorXcd f;  // sites j = 0 .. n_check-1
};
// E = 0 solution on a semi-infinite SSH chain with k = k_sign * pi/2.
ZeroModeResult semi_infinite_zero_mode(const ModelParams& p, std::size_t n_check, int k_sign = 1);

enum class ModeKind { Regular, Coalescing, Generalized, Broken, Null };

struct RingMode {
  int m = 0;
  double k = 0.0;
  Band band = Band::Plus;
  cd energy;
  cd e_i_theta;   // (±sqrt(|g|^2 - gamma^2) + i gamma) / (±|g|)
  double theta = 0.0;
  cd g;
  std::array<cd, 2> amplitudes;  // (gain site, loss site) of one cell, unit norm
  ModeKind kind = ModeKind::Regular;

  // 2N amplitudes on the ring, cell l = 1..N on sites 2l-2, 2l-1, Dirac norm 1.
  Eigen::VectorXcd real_space(std::size_t n_cells) const;
};

cd ring_g(double k, const ModelParams& p);
Eigen::Matrix2cd bloch_matrix(double k, const ModelParams& p);
// Modes ordered by m = 0..N-1, plus band then minus band: modes[2m], modes[2m+1].
std::vector<RingMode> ring_modes(std::size_t n_cells, const ModelParams& p);

// C_plus[m], C_minus[m] expand psi(0) over modes[2m], modes[2m+1].
double dirac_probability_analytic(const std::vector<cd>& c_plus, const std::vector<cd>& c_minus, double t,
                                  const std::vector<RingMode>& modes);
Eigen::VectorXcd ring_state(const std::vector<cd>& c_plus, const std::vector<cd>& c_minus,
                            const std::vector<RingMode>& modes);

double overlap_Ok(double k, const ModelParams& p, bool small_k_approx = false);
// |<v+|v->| from a numerical eigensolve of the 2x2 Bloch matrix.
double numerical_band_overlap(double k, const ModelParams& p);

struct CurvePoint {
  double k;
  cd value;
};
struct OverlapCurve {
  ModelParams params;
  std::vector<std::pair<double, double>> samples;
};

// n points on [-pi, pi], endpoints included.
std::vector<double> k_grid(std::size_t n);
std::vector<CurvePoint> dispersion_curve(const ModelParams& p, Band band, std::size_t n);
OverlapCurve overlap_curve(const ModelParams& p, std::size_t n, bool small_k_approx = false);
void write_curve_csv(std::ostream& os, const std::vector<CurvePoint>& pts);
void write_curve_csv(std::ostream& os, const OverlapCurve& c);

}  // namespace nhls
