#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dynamics.hpp"
#include "lattice.hpp"
#include "state.hpp"

namespace nhls {

enum class RegionLabel { LeftLead, Segment, RightLead, Custom };
const char* region_label_name(RegionLabel l);

// Inclusive label bounds.
struct RegionWindow {
  long lo = 0;
  long hi = 0;
  RegionLabel label = RegionLabel::Custom;
  std::string name;
};

double region_probability(const StateVector& psi, const RegionWindow& w);
double centroid(const StateVector& psi, const RegionWindow& w);

// Windows partitioning the lattice: left of the scatterer, the scatterer, right of it.
struct ScatterWindows {
  RegionWindow left;
  std::optional<RegionWindow> middle;
  RegionWindow right;
  bool from_left = true;
};

struct ScatterReport {
  double time = 0.0;
  double transmitted = 0.0;
  double reflected = 0.0;
  double remaining = 0.0;
  double gain_factor = 0.0;
  std::optional<long> train_width;
  std::size_t train_lobes = 0;
};

struct TrainOptions {
  double threshold = 0.01;  // fraction of the reflected-train peak density
  double lobe_height = 0.5;
  bool measure = true;
};

// Contiguous span around the density peak inside w where density > threshold * peak.
std::optional<long> train_width(const StateVector& psi, const RegionWindow& w, double threshold);
// Lobes inside w: rises above height * peak, separated by dips below half that level.
std::size_t count_lobes(const StateVector& psi, const RegionWindow& w, double height);

// First snapshot after the packet has entered `zone` (share >= enter) at which its share drops to <= leave.
std::optional<double> interaction_complete_time(const EvolutionRecord& rec, const RegionWindow& zone,
                                                double enter = 0.1, double leave = 0.01);

// Throws InteractionIncomplete if the middle window still holds more than 1% of the norm.
ScatterReport scatter_report(const EvolutionRecord& rec, const ScatterWindows& w, double t_final,
                             const TrainOptions& opt = {});

struct ConfinementTrace {
  std::vector<double> times;
  std::vector<double> in_segment;
  std::vector<double> in_lead;
  double t_entry = 0.0;
  double post_entry_max = 0.0;
  double pointwise_min_ratio = 0.0;
  std::vector<double> trough_times;
  double period = 0.0;  // two trough spacings, NaN if fewer than two troughs
  std::vector<double> envelope;  // per-period maxima after entry
  std::size_t retained_periods = 0;  // leading periods whose maximum stays >= retention * post_entry_max
  double max_leak_per_period = 0.0;  // lead gain per period over post_entry_max
};

ConfinementTrace confinement_trace(const EvolutionRecord& rec, const RegionWindow& segment,
                                   const RegionWindow& lead, double retention = 0.8);

double absorption_metric(const EvolutionRecord& rec);

double ipr(const StateVector& psi);
double ipr(const Eigen::VectorXcd& psi);

struct SpectrumReport {
  double max_imag = 0.0;
  Eigen::VectorXcd eigvals;
  std::vector<double> iprs;  // per eigenvector, only when requested
};

SpectrumReport spectrum_reality(const Hamiltonian& h, bool with_ipr = false);

}  // namespace nhls
