#include "observables.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "csv.hpp"
#include "error.hpp"
#include "linalg.hpp"

namespace nhls {

const char* region_label_name(RegionLabel l) {
  switch (l) {
    case RegionLabel::LeftLead: return "left_lead";
    case RegionLabel::Segment: return "segment";
    case RegionLabel::RightLead: return "right_lead";
    case RegionLabel::Custom: return "custom";
  }
  return "custom";
}

namespace {

std::pair<std::size_t, std::size_t> index_range(const StateVector& psi, const RegionWindow& w) {
  if (w.lo > w.hi) fail(ErrorCode::InvalidArgument, "region window " + w.name + ": lo > hi");
  const LatticeSpec& s = *psi.lattice;
  if (!s.contains(w.lo) || !s.contains(w.hi))
    fail(ErrorCode::InvalidArgument, "region window " + w.name + " [" + fmt(w.lo) + ", " + fmt(w.hi) +
                                         "] outside lattice");
  return {s.index(w.lo), s.index(w.hi)};
}

}  // namespace

double region_probability(const StateVector& psi, const RegionWindow& w) {
  const auto [a, b] = index_range(psi, w);
  double s = 0.0;
  for (std::size_t i = a; i <= b; ++i) s += std::norm(psi.amps[static_cast<Eigen::Index>(i)]);
  return s;
}

double centroid(const StateVector& psi, const RegionWindow& w) {
  const auto [a, b] = index_range(psi, w);
  double s = 0.0, sx = 0.0;
  for (std::size_t i = a; i <= b; ++i) {
    const double d = std::norm(psi.amps[static_cast<Eigen::Index>(i)]);
    s += d;
    sx += d * static_cast<double>(psi.lattice->label(i));
  }
  return s > 0 ? sx / s : std::numeric_limits<double>::quiet_NaN();
}

std::optional<long> train_width(const StateVector& psi, const RegionWindow& w, double threshold) {
  const auto [a, b] = index_range(psi, w);
  std::size_t peak = a;
  double pk = 0.0;
  for (std::size_t i = a; i <= b; ++i) {
    const double d = std::norm(psi.amps[static_cast<Eigen::Index>(i)]);
    if (d > pk) {
      pk = d;
      peak = i;
    }
  }
  if (!(pk > 0)) return std::nullopt;
  const double cut = threshold * pk;
  std::size_t lo = peak, hi = peak;
  while (lo > a && std::norm(psi.amps[static_cast<Eigen::Index>(lo - 1)]) > cut) --lo;
  while (hi < b && std::norm(psi.amps[static_cast<Eigen::Index>(hi + 1)]) > cut) ++hi;
  return static_cast<long>(hi - lo + 1);
}

std::size_t count_lobes(const StateVector& psi, const RegionWindow& w, double height) {
  const auto [a, b] = index_range(psi, w);
  double pk = 0.0;
  for (std::size_t i = a; i <= b; ++i) pk = std::max(pk, std::norm(psi.amps[static_cast<Eigen::Index>(i)]));
  if (!(pk > 0)) return 0;
  // Rise above height*peak counts a lobe; re-armed below half that level.
  std::size_t runs = 0;
  bool armed = true;
  for (std::size_t i = a; i <= b; ++i) {
    const double d = std::norm(psi.amps[static_cast<Eigen::Index>(i)]);
    if (armed && d > height * pk) {
      ++runs;
      armed = false;
    } else if (!armed && d < 0.5 * height * pk) {
      armed = true;
    }
  }
  return runs;
}

std::optional<double> interaction_complete_time(const EvolutionRecord& rec, const RegionWindow& zone, double enter,
                                                double leave) {
  bool entered = false;
  for (std::size_t i = 0; i < rec.size(); ++i) {
    const double total = rec.norms[i];
    const double share = total > 0 ? region_probability(rec.snapshots[i], zone) / total : 0.0;
    if (!entered && share >= enter) entered = true;
    if (entered && share <= leave) return rec.times[i];
  }
  return std::nullopt;
}

ScatterReport scatter_report(const EvolutionRecord& rec, const ScatterWindows& w, double t_final,
                             const TrainOptions& opt) {
  if (rec.size() == 0) fail(ErrorCode::InvalidArgument, "scatter_report: empty record");
  const std::size_t i = rec.nearest(t_final);
  const StateVector& psi = rec.snapshots[i];
  const double total = rec.norms[i];
  ScatterReport r;
  r.time = rec.times[i];
  const double pl = region_probability(psi, w.left);
  const double pr = region_probability(psi, w.right);
  r.remaining = w.middle ? region_probability(psi, *w.middle) : 0.0;
  if (w.middle && r.remaining > 0.01 * total)
    fail(ErrorCode::InteractionIncomplete, "scatter_report: " + fmt(r.remaining / total) +
                                               " of the norm still inside the scatterer at t=" + fmt(r.time));
  r.transmitted = w.from_left ? pr : pl;
  r.reflected = w.from_left ? pl : pr;
  r.gain_factor = total / rec.norms.front();
  if (opt.measure) {
    const RegionWindow& refl = w.from_left ? w.left : w.right;
    r.train_width = train_width(psi, refl, opt.threshold);
    r.train_lobes = count_lobes(psi, refl, opt.lobe_height);
  }
  return r;
}

ConfinementTrace confinement_trace(const EvolutionRecord& rec, const RegionWindow& segment, const RegionWindow& lead,
                                   double retention) {
  ConfinementTrace c;
  const std::size_t n = rec.size();
  if (n == 0) fail(ErrorCode::InvalidArgument, "confinement_trace: empty record");
  c.times = rec.times;
  for (std::size_t i = 0; i < n; ++i) {
    c.in_segment.push_back(region_probability(rec.snapshots[i], segment));
    c.in_lead.push_back(region_probability(rec.snapshots[i], lead));
  }
  const double gmax = *std::max_element(c.in_segment.begin(), c.in_segment.end());
  std::size_t entry = 0;
  while (entry < n && c.in_segment[entry] < 0.5 * gmax) ++entry;
  c.t_entry = c.times[entry];
  c.post_entry_max = *std::max_element(c.in_segment.begin() + static_cast<long>(entry), c.in_segment.end());
  const double M = c.post_entry_max;
  c.pointwise_min_ratio = *std::min_element(c.in_segment.begin() + static_cast<long>(entry), c.in_segment.end()) / M;

  // Troughs: argmin of each excursion below the retention level.
  for (std::size_t i = entry; i < n;) {
    if (c.in_segment[i] >= retention * M) {
      ++i;
      continue;
    }
    std::size_t best = i;
    while (i < n && c.in_segment[i] < retention * M) {
      if (c.in_segment[i] < c.in_segment[best]) best = i;
      ++i;
    }
    if (i < n) c.trough_times.push_back(c.times[best]);
  }
  const std::size_t nt = c.trough_times.size();
  if (nt >= 2) {
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < nt; ++i) {
      mx += static_cast<double>(i);
      my += c.trough_times[i];
    }
    mx /= static_cast<double>(nt);
    my /= static_cast<double>(nt);
    double sxy = 0, sxx = 0;
    for (std::size_t i = 0; i < nt; ++i) {
      sxy += (static_cast<double>(i) - mx) * (c.trough_times[i] - my);
      sxx += (static_cast<double>(i) - mx) * (static_cast<double>(i) - mx);
    }
    c.period = 2.0 * sxy / sxx;
  } else {
    c.period = std::numeric_limits<double>::quiet_NaN();
  }

  if (std::isfinite(c.period) && c.period > 0) {
    bool retained = true;
    for (double t0 = c.t_entry; t0 + c.period <= c.times.back() + 1e-9; t0 += c.period) {
      double mx = 0.0, lead0 = 0.0, lead1 = 0.0;
      bool first = true;
      for (std::size_t i = entry; i < n; ++i) {
        if (c.times[i] < t0 - 1e-9 || c.times[i] > t0 + c.period + 1e-9) continue;
        mx = std::max(mx, c.in_segment[i]);
        if (first) lead0 = c.in_lead[i];
        first = false;
        lead1 = c.in_lead[i];
      }
      c.envelope.push_back(mx);
      c.max_leak_per_period = std::max(c.max_leak_per_period, (lead1 - lead0) / M);
      if (retained && mx >= retention * M) ++c.retained_periods;
      else retained = false;
    }
  }
  return c;
}

double absorption_metric(const EvolutionRecord& rec) {
  if (rec.size() == 0) fail(ErrorCode::InvalidArgument, "absorption_metric: empty record");
  return rec.norms.back() / rec.norms.front();
}

double ipr(const Eigen::VectorXcd& psi) {
  double n2 = 0.0, n4 = 0.0;
  for (Eigen::Index i = 0; i < psi.size(); ++i) {
    const double d = std::norm(psi[i]);
    n2 += d;
    n4 += d * d;
  }
  if (std::abs(n2 - 1.0) > 1e-10) fail(ErrorCode::InvalidArgument, "ipr: state is not Dirac normalized (norm " + fmt(n2) + ")");
  return n4;
}

double ipr(const StateVector& psi) { return ipr(psi.amps); }

SpectrumReport spectrum_reality(const Hamiltonian& h, bool with_ipr) {
  SpectrumReport r;
  const Eigen::MatrixXcd d = h.dense();
  EigenDecomposition ed = h.is_hermitian() ? eig_hermitian(d, with_ipr) : eig_general(d, with_ipr);
  r.eigvals = std::move(ed.values);
  r.max_imag = r.eigvals.size() ? r.eigvals.imag().cwiseAbs().maxCoeff() : 0.0;
  if (with_ipr)
    for (Eigen::Index c = 0; c < ed.vectors.cols(); ++c) r.iprs.push_back(ipr(Eigen::VectorXcd(ed.vectors.col(c).normalized())));
  return r;
}

}  // namespace nhls
