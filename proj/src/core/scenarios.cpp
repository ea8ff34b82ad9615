#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <sstream>

#include "csv.hpp"
#include "dynamics.hpp"
#include "error.hpp"
#include "lattice_json.hpp"
#include "observables.hpp"
#include "scenario_impl.hpp"
#include "spectral.hpp"

namespace nhls::detail {

namespace {

using nlohmann::json;

ModelParams model(const Ctx& c) { return {c.num("J"), c.num("delta"), c.num("gamma")}; }

double half_support(double alpha) { return std::ceil(4.0 / alpha); }

PropagatorConfig stepped(const Ctx& c, double t_max) {
  PropagatorConfig cfg;
  cfg.method = Method::SteppedIntegrator;
  cfg.dt = c.num("dt");
  cfg.t_max = t_max;
  cfg.snapshot_stride = std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(1.0 / cfg.dt)));
  return cfg;
}

json propagator_json(const PropagatorConfig& p) {
  return json{{"method", p.method == Method::SteppedIntegrator ? "SteppedIntegrator" : "SpectralDecomposition"},
              {"dt", p.dt},
              {"t_max", p.t_max},
              {"snapshot_stride", p.snapshot_stride},
              {"degeneracy_guard", p.degeneracy_guard}};
}

// Lead must outlast the horizon: t_max < (lead - packet half support) / (2J).
void check_budget(Ctx& c, std::size_t lead, double alpha, double t_max, double J) {
  const double limit = (static_cast<double>(lead) - half_support(alpha)) / (2.0 * J);
  c.meta()["budget"] = json{{"lead_length", lead}, {"packet_half_support", half_support(alpha)},
                            {"t_max", t_max}, {"t_limit", limit}};
  if (!(t_max < limit))
    fail(ErrorCode::BudgetViolation, c.id() + ": t_max=" + fmt(t_max) + " needs lead > " +
                                         fmt(2.0 * J * t_max + half_support(alpha)) + " sites (lead=" +
                                         fmt(lead) + ", limit t_max < " + fmt(limit) + ")");
}

std::string norms_csv(const EvolutionRecord& rec, const std::vector<RegionWindow>& regions) {
  std::ostringstream os;
  os << "t,dirac_norm";
  for (const auto& r : regions) os << ",region_" << r.name;
  os << '\n';
  for (std::size_t i = 0; i < rec.size(); ++i) {
    os << fmt(rec.times[i]) << ',' << fmt(rec.norms[i]);
    for (const auto& r : regions) os << ',' << fmt(region_probability(rec.snapshots[i], r));
    os << '\n';
  }
  return os.str();
}

void write_record(Ctx& c, const EvolutionRecord& rec, const std::vector<RegionWindow>& regions, double density_dt) {
  if (!c.writes()) return;
  const double dt_snap = rec.size() > 1 ? rec.times[1] - rec.times[0] : 1.0;
  const std::size_t every = std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(density_dt / dt_snap)));
  std::ostringstream d;
  write_density_csv(d, rec, every);
  c.write("density.csv", d.str());
  c.write("norms.csv", norms_csv(rec, regions));
}

RegionWindow window(long lo, long hi, RegionLabel l, const std::string& name) { return {lo, hi, l, name}; }

struct Scatter {
  LatticeSpec spec;
  ModelParams p;
  ScatterWindows windows;
  RegionWindow zone;
  double alpha, n_c, k_c, t_max;
};

struct ScatterOutcome {
  EvolutionRecord rec;
  ScatterReport rep;
  bool completed = false;
};

ScatterOutcome run_scatter(Ctx& c, const Scatter& s, std::size_t lead, bool primary) {
  check_budget(c, lead, s.alpha, s.t_max, s.p.J);
  const Hamiltonian h = assemble(s.spec, s.p);
  const StateVector psi0 = gaussian_packet(s.alpha, s.n_c, s.k_c, s.spec);
  const PropagatorConfig cfg = stepped(c, s.t_max);
  ScatterOutcome o;
  o.rec = propagate(h, psi0, cfg);
  const auto done = interaction_complete_time(o.rec, s.zone);
  o.completed = done.has_value();
  const double t_final = done ? *done : s.t_max;
  o.rep = scatter_report(o.rec, s.windows, t_final);
  if (primary) {
    c.meta()["lattice"] = to_json(LatticeDocument{s.p, s.spec});
    c.meta()["packet"] = json{{"alpha", s.alpha}, {"n_c", s.n_c}, {"k_c", s.k_c}};
    c.meta()["propagator"] = propagator_json(cfg);
    c.meta()["interaction_zone"] = json{{"lo", s.zone.lo}, {"hi", s.zone.hi}};
    c.meta()["t_final"] = o.rep.time;
    std::vector<RegionWindow> regions{s.windows.left};
    if (s.windows.middle) regions.push_back(*s.windows.middle);
    regions.push_back(s.windows.right);
    write_record(c, o.rec, regions, 10.0);
  }
  return o;
}

void scatter_metrics(Ctx& c, const ScatterOutcome& o) {
  c.metric("t_final", o.rep.time, Check::info());
  c.metric("interaction_complete", o.completed ? 1.0 : 0.0, Check::info());
}

// Interface junction: lead (j < 0) then SSH (j >= 0).
Scatter junction_setup(const Ctx& c) {
  Scatter s;
  s.p = model(c);
  s.spec = junction_spec(c.count("lead"), c.count("ssh"), true);
  s.alpha = c.num("alpha");
  s.n_c = c.num("n_c");
  s.k_c = c.num("k_c");
  s.t_max = c.num("t_max");
  s.windows.left = window(s.spec.first_label(), -1, RegionLabel::LeftLead, "left_lead");
  s.windows.right = window(0, s.spec.last_label(), RegionLabel::Segment, "ssh");
  s.windows.from_left = s.k_c < 0;
  const long hs = static_cast<long>(half_support(s.alpha));
  s.zone = window(-hs, hs - 1, RegionLabel::Custom, "interface");
  return s;
}

void run_fig3a(Ctx& c) {
  const auto o = run_scatter(c, junction_setup(c), c.count("lead"), true);
  scatter_metrics(c, o);
  c.metric("transmitted", o.rep.transmitted, Check::le(0.01));
  c.metric("reflected", o.rep.reflected, Check::ge(0.98));
  c.metric("gain_factor", o.rep.gain_factor, Check::info());
}

void run_fig3b(Ctx& c) {
  const Scatter s = junction_setup(c);
  const auto o = run_scatter(c, s, c.count("lead"), true);
  scatter_metrics(c, o);
  c.metric("transmitted", o.rep.transmitted, Check::ge(0.98));
  c.metric("reflected", o.rep.reflected, Check::le(0.01));
  c.metric("dirac_norm", o.rep.gain_factor, Check::range(0.98, 1.02));
  // SSH over lead group velocity at E=0.
  c.metric("velocity_ratio", std::sqrt(s.p.strong_bond() / s.p.J), Check::info());
}

void run_fig3c(Ctx& c) {
  const auto o = run_scatter(c, junction_setup(c), c.count("lead"), true);
  scatter_metrics(c, o);
  c.metric("gain_factor", o.rep.gain_factor, Check::gt(1.5));
  c.metric("transmitted", o.rep.transmitted, Check::gt(1.0));
  c.metric("reflected", o.rep.reflected, Check::gt(1.0));
}

// Lead, scatterer, lead with label 0 at the scatterer centre.
Scatter scatterer_setup(const Ctx& c, const LatticeSpec& spec, long lo, long hi) {
  Scatter s;
  s.p = model(c);
  s.spec = spec;
  s.alpha = c.num("alpha");
  s.n_c = c.num("n_c");
  s.k_c = c.num("k_c");
  s.t_max = c.num("t_max");
  s.windows.left = window(spec.first_label(), lo - 1, RegionLabel::LeftLead, "left_lead");
  s.windows.middle = window(lo, hi, RegionLabel::Segment, "segment");
  s.windows.right = window(hi + 1, spec.last_label(), RegionLabel::RightLead, "right_lead");
  s.windows.from_left = s.n_c < lo;
  const long hs = static_cast<long>(half_support(s.alpha));
  s.zone = window(std::max(spec.first_label(), lo - hs), std::min(spec.last_label(), hi + hs), RegionLabel::Custom,
                  "interaction_zone");
  if (s.n_c + hs >= lo && s.n_c - hs <= hi)
    fail(ErrorCode::InvalidArgument, c.id() + ": packet support overlaps the scatterer (n_c=" + fmt(s.n_c) + ")");
  return s;
}

Scatter sandwich_setup(const Ctx& c, std::size_t seg) {
  const LatticeSpec spec = sandwich_spec(c.count("lead"), seg, true);
  const auto [lo, hi] = spec.segment_range(1);
  return scatterer_setup(c, spec, lo, hi);
}

Scatter stack_setup(const Ctx& c) {
  const std::size_t n = c.count("n_segments");
  const LatticeSpec spec = stack_spec(c.count("lead"), n, c.count("segment"), c.count("spacer"), true);
  const long lo = spec.segment_range(1).first;
  const long hi = spec.segment_range(spec.segments.size() - 2).second;
  return scatterer_setup(c, spec, lo, hi);
}

void run_fig4a(Ctx& c) {
  const auto o = run_scatter(c, sandwich_setup(c, c.count("segment")), c.count("lead"), true);
  scatter_metrics(c, o);
  c.metric("transmitted", o.rep.transmitted, Check::ge(0.98));
  c.metric("reflected", o.rep.reflected, Check::le(0.01));
  c.metric("gain_factor", o.rep.gain_factor, Check::range(0.98, 1.02));
}

void run_fig4b(Ctx& c) {
  const std::size_t seg = c.count("segment");
  const auto o = run_scatter(c, sandwich_setup(c, seg), c.count("lead"), true);
  scatter_metrics(c, o);
  const double h = o.rep.train_width ? static_cast<double>(*o.rep.train_width) : std::nan("");
  const double target = 2.0 * static_cast<double>(seg);
  c.metric("train_width", h, Check::range(0.8 * target, 1.2 * target));
  c.metric("gain_factor", o.rep.gain_factor, Check::gt(2.0));
  c.metric("reflected", o.rep.reflected, Check::info());

  double prev = -1.0;
  bool monotone = true;
  json sweep = json::array();
  for (std::size_t d : {50, 100, 150}) {
    const double w = [&] {
      if (d == seg) return h;
      const auto r = run_scatter(c, sandwich_setup(c, d), c.count("lead"), false);
      return r.rep.train_width ? static_cast<double>(*r.rep.train_width) : std::nan("");
    }();
    c.metric("train_width_segment_" + std::to_string(d), w, Check::info());
    sweep.push_back(json{{"segment", d}, {"train_width", w}});
    monotone = monotone && std::isfinite(w) && w >= prev;
    prev = w;
  }
  c.meta()["train_width_sweep"] = sweep;
  c.metric("train_width_monotone", monotone ? 1.0 : 0.0, Check::ge(1.0));
}

void stack_meta(Ctx& c) {
  c.meta()["stack"] = json{{"n_segments", c.count("n_segments")}, {"segment", c.count("segment")},
                           {"spacer", c.count("spacer")}, {"inter_segment_bond", "J"}};
}

void run_fig4c(Ctx& c) {
  const auto o = run_scatter(c, stack_setup(c), c.count("lead"), true);
  stack_meta(c);
  scatter_metrics(c, o);
  c.metric("transmitted", o.rep.transmitted, Check::ge(0.95));
  c.metric("gain_factor", o.rep.gain_factor, Check::range(0.95, 1.05));
  c.metric("reflected", o.rep.reflected, Check::info());
}

void run_fig4d(Ctx& c) {
  const auto o = run_scatter(c, stack_setup(c), c.count("lead"), true);
  stack_meta(c);
  scatter_metrics(c, o);
  c.metric("gain_factor", o.rep.gain_factor, Check::gt(1.5));
  c.metric("train_lobes", static_cast<double>(o.rep.train_lobes), Check::ge(2.0));
  c.metric("reflected", o.rep.reflected, Check::info());
}

// Two quasi-coalescing packets on an EP ring approaching each other.
void run_fig5(Ctx& c, bool sum) {
  const ModelParams p = model(c);
  const std::size_t cells = c.count("cells");
  const std::size_t sep = c.count("separation");
  if (sep >= cells) fail(ErrorCode::InvalidArgument, "overrides.separation: must be below cells");
  const LatticeSpec spec = ssh_ring_spec(cells);
  const Hamiltonian ring = assemble(spec, p);
  const double sigma = c.num("sigma_k");
  const std::size_t mid = cells / 2;
  const std::size_t cell_l = mid + sep / 2, cell_r = mid - sep / 2;

  const auto co = quasi_coalescing_packets(ring, sigma, 2 * (mid - 1));
  c.metric("cocentred_overlap", std::abs(co.first.amps.dot(co.second.amps)), Check::gt(0.9));

  const StateVector psi_l = quasi_coalescing_packets(ring, sigma, 2 * (cell_l - 1)).first;
  const StateVector psi_r = quasi_coalescing_packets(ring, sigma, 2 * (cell_r - 1)).second;
  const PropagatorConfig cfg = stepped(c, c.num("t_max"));
  const auto rec_l = propagate(ring, psi_l, cfg);
  const auto rec_r = propagate(ring, psi_r, cfg);
  std::size_t meet = 0;
  double best = -1.0;
  for (std::size_t i = 0; i < rec_l.size(); ++i) {
    const double ov = std::abs(rec_l.snapshots[i].amps.dot(rec_r.snapshots[i].amps));
    if (ov > best) {
      best = ov;
      meet = i;
    }
  }
  const double sgn = sum ? 1.0 : -1.0;
  const StateVector mix = make_state((psi_l.amps + sgn * psi_r.amps) / std::sqrt(2.0), spec);
  const auto rec = propagate(ring, mix, cfg);
  const double t_meet = rec.times[meet];
  c.metric("initial_overlap", std::abs(psi_l.amps.dot(psi_r.amps)), Check::info());
  c.metric("meeting_time", t_meet, Check::info());
  c.metric("meeting_overlap", best, Check::info());
  if (sum) {
    const double peak_mix = rec.snapshots[meet].amps.cwiseAbs2().maxCoeff();
    const double peak_single = 0.5 * rec_l.snapshots[meet].amps.cwiseAbs2().maxCoeff();
    c.metric("peak_density_ratio", peak_mix / peak_single, Check::ge(3.0));
  } else {
    c.metric("norm_ratio_at_meeting", rec.norms[meet] / rec.norms.front(), Check::le(0.1));
    c.metric("norm_ratio_final", rec.norms.back() / rec.norms.front(), Check::info());
  }
  c.meta()["lattice"] = to_json(LatticeDocument{p, spec});
  c.meta()["packets"] = json{{"sigma_k", sigma}, {"cutoff_sigmas", 8}, {"cell_left_mover", cell_l},
                             {"cell_right_mover", cell_r}, {"combination", sum ? "sum" : "difference"}};
  c.meta()["propagator"] = propagator_json(cfg);
  const long half = static_cast<long>(cells);
  write_record(c, rec,
               {window(0, half - 1, RegionLabel::Custom, "lower_half"),
                window(half, 2 * half - 1, RegionLabel::Custom, "upper_half")},
               1.0);
}

void run_fig5c(Ctx& c) { run_fig5(c, true); }
void run_fig5d(Ctx& c) { run_fig5(c, false); }

// Lead then a terminal SSH segment; label 0 is the first SSH site.
struct Terminal {
  LatticeSpec spec;
  RegionWindow lead, segment;
  EvolutionRecord rec;
  PropagatorConfig cfg;
};

Terminal run_terminal(Ctx& c, std::size_t seg, std::size_t lead, double t_max) {
  const ModelParams p = model(c);
  const double alpha = c.num("alpha");
  check_budget(c, lead, alpha, t_max, p.J);
  Terminal t;
  t.spec = junction_spec(lead, seg, true);
  t.lead = window(t.spec.first_label(), -1, RegionLabel::LeftLead, "lead");
  t.segment = window(0, t.spec.last_label(), RegionLabel::Segment, "segment");
  const Hamiltonian h = assemble(t.spec, p);
  const StateVector psi0 = gaussian_packet(alpha, c.num("n_c"), c.num("k_c"), t.spec);
  t.cfg = stepped(c, t_max);
  t.rec = propagate(h, psi0, t.cfg);
  return t;
}

void terminal_meta(Ctx& c, const Terminal& t) {
  c.meta()["lattice"] = to_json(LatticeDocument{model(c), t.spec});
  c.meta()["packet"] = json{{"alpha", c.num("alpha")}, {"n_c", c.num("n_c")}, {"k_c", c.num("k_c")}};
  c.meta()["propagator"] = propagator_json(t.cfg);
}

std::string trace_csv(const ConfinementTrace& tr) {
  std::ostringstream os;
  os << "t,in_segment,in_lead\n";
  for (std::size_t i = 0; i < tr.times.size(); ++i)
    os << fmt(tr.times[i]) << ',' << fmt(tr.in_segment[i]) << ',' << fmt(tr.in_lead[i]) << '\n';
  return os.str();
}

void run_fig6a(Ctx& c) {
  const std::size_t seg = c.count("segment");
  const Terminal t = run_terminal(c, seg, c.count("lead"), c.num("t_max"));
  terminal_meta(c, t);
  const ConfinementTrace tr = confinement_trace(t.rec, t.segment, t.lead, 0.8);
  const ModelParams p = model(c);
  const double expected = 2.0 * static_cast<double>(seg) / (2.0 * std::sqrt(p.J * p.strong_bond()));
  c.metric("retained_periods", static_cast<double>(tr.retained_periods), Check::ge(3.0));
  c.metric("period", tr.period, Check::info());
  c.metric("period_expected", expected, Check::info());
  c.metric("period_ratio", tr.period / expected, Check::range(0.85, 1.15));
  c.metric("leak_per_period", tr.max_leak_per_period, Check::le(0.05));
  c.metric("post_entry_max", tr.post_entry_max, Check::info());
  c.metric("pointwise_min_ratio", tr.pointwise_min_ratio, Check::info());
  c.metric("t_entry", tr.t_entry, Check::info());
  c.metric("absorption_ratio", absorption_metric(t.rec), Check::info());
  json env = json::array();
  for (double e : tr.envelope) env.push_back(e);
  c.meta()["envelope"] = env;
  write_record(c, t.rec, {t.lead, t.segment}, 10.0);
  c.write("trace.csv", trace_csv(tr));
}

double confined_mean(const ConfinementTrace& tr, double window_len) {
  double s = 0.0;
  std::size_t n = 0;
  for (std::size_t i = 0; i < tr.times.size(); ++i)
    if (tr.times[i] >= tr.t_entry && tr.times[i] <= tr.t_entry + window_len) {
      s += tr.in_segment[i];
      ++n;
    }
  return n ? s / static_cast<double>(n) : std::nan("");
}

void run_fig6b(Ctx& c) {
  const double t_max = c.num("t_max");
  const double wlen = c.num("window");
  const Terminal t = run_terminal(c, c.count("segment"), c.count("lead"), t_max);
  terminal_meta(c, t);
  const Terminal ref = run_terminal(c, c.count("reference_segment"), c.count("lead"), t_max);
  const ConfinementTrace tr = confinement_trace(t.rec, t.segment, t.lead);
  const ConfinementTrace tr_ref = confinement_trace(ref.rec, ref.segment, ref.lead);
  const double a = confined_mean(tr, wlen), b = confined_mean(tr_ref, wlen);
  c.metric("confined_probability", a, Check::info());
  c.metric("confined_probability_reference", b, Check::info());
  c.metric("confined_ratio", a / b, Check::lt(1.0));
  c.metric("window_end", tr.t_entry + wlen, Check::le(t_max));
  write_record(c, t.rec, {t.lead, t.segment}, 10.0);
  c.write("trace.csv", trace_csv(tr));
}

void run_fig6c(Ctx& c) {
  const Terminal t = run_terminal(c, c.count("segment"), c.count("lead"), c.num("t_max"));
  terminal_meta(c, t);
  c.metric("absorption_ratio", absorption_metric(t.rec), Check::le(0.05));
  write_record(c, t.rec, {t.lead, t.segment}, 10.0);
}

void run_figA(Ctx& c) {
  const ModelParams p = model(c);
  json sizes = json::array();
  double ipr_prev = 0.0;
  for (const char* key : {"small", "large"}) {
    const std::size_t n = c.count(key);
    LatticeSpec spec = junction_spec(n, n, true);
    spec.boundary = Boundary::Ring;
    const Hamiltonian h = assemble(spec, p);
    const SpectrumReport r = spectrum_reality(h, true);
    const double max_ipr = *std::max_element(r.iprs.begin(), r.iprs.end());
    const std::string tag = std::to_string(2 * n);
    c.metric("max_imag_" + tag, r.max_imag, Check::lt(1e-8));
    c.metric("max_ipr_" + tag, max_ipr, Check::info());
    if (std::string(key) == "large") c.metric("max_ipr_decrease", ipr_prev - max_ipr, Check::gt(0.0));
    ipr_prev = max_ipr;

    LatticeSpec open = spec;
    open.boundary = Boundary::Open;
    c.metric("open_max_imag_" + tag, spectrum_reality(assemble(open, p), false).max_imag, Check::info());

    std::ostringstream os;
    os << "n,re,im,ipr\n";
    for (Eigen::Index i = 0; i < r.eigvals.size(); ++i)
      os << i << ',' << fmt(r.eigvals[i].real()) << ',' << fmt(r.eigvals[i].imag()) << ','
         << fmt(r.iprs[static_cast<std::size_t>(i)]) << '\n';
    c.write("spectrum_" + tag + ".csv", os.str());
    sizes.push_back(to_json(LatticeDocument{p, spec}));
  }
  c.meta()["lattices"] = sizes;
}

void run_figA2(Ctx& c) {
  const double J = c.num("J"), delta = c.num("delta");
  const std::size_t n = c.count("samples");
  double worst = 0.0, top = 0.0;
  std::ostringstream cmp;
  cmp << "gamma,k,formula,numerical,abs_diff\n";
  for (const char* key : {"gamma1", "gamma2", "gamma3"}) {
    const ModelParams p{J, delta, c.num(key)};
    const OverlapCurve curve = overlap_curve(p, n);
    for (const auto& [k, o] : curve.samples) {
      const double num = numerical_band_overlap(k, p);
      worst = std::max(worst, std::abs(o - num));
      top = std::max(top, o);
      cmp << fmt(p.gamma) << ',' << fmt(k) << ',' << fmt(o) << ',' << fmt(num) << ',' << fmt(std::abs(o - num)) << '\n';
    }
    std::ostringstream os;
    write_curve_csv(os, curve);
    c.write("overlap_gamma_" + fmt(p.gamma) + ".csv", os.str());
  }
  c.write("overlap_compare.csv", cmp.str());
  const ModelParams ep{J, delta, ep_gamma({J, delta, 0.0}, 1)};
  c.metric("max_abs_deviation", worst, Check::le(1e-10));
  c.metric("max_overlap", top, Check::le(1.0));
  c.metric("overlap_k0_at_ep", overlap_Ok(0.0, ep), Check::range(1.0, 1.0));
}

void run_custom(Ctx& c) {
  const std::string& path = c.str("spec");
  if (path.empty()) fail(ErrorCode::InvalidArgument, "overrides.spec: path to a lattice JSON document is required");
  const LatticeDocument doc = parse_lattice_document(read_text_file(path));
  const Hamiltonian h = assemble(doc.spec, doc.params);
  const StateVector psi0 = gaussian_packet(c.num("alpha"), c.num("n_c"), c.num("k_c"), doc.spec);
  PropagatorConfig cfg = stepped(c, c.num("t_max"));
  const std::string& method = c.str("method");
  if (method == "spectral") cfg.method = Method::SpectralDecomposition;
  else if (method != "stepped") fail(ErrorCode::InvalidArgument, "overrides.method: expected stepped or spectral");
  const auto rec = propagate(h, psi0, cfg);
  c.meta()["lattice"] = to_json(doc);
  c.meta()["propagator"] = propagator_json(cfg);
  c.metric("final_norm", rec.norms.back(), Check::info());
  c.metric("absorption_ratio", absorption_metric(rec), Check::info());
  std::vector<RegionWindow> regions;
  for (std::size_t s = 0; s < doc.spec.segments.size(); ++s) {
    const auto [lo, hi] = doc.spec.segment_range(s);
    regions.push_back(window(lo, hi, RegionLabel::Custom, "segment" + std::to_string(s)));
  }
  write_record(c, rec, regions, 10.0);
}

using Defaults = std::vector<std::pair<std::string, std::string>>;

Defaults fig3(const char* gamma) {
  return {{"J", "1"},       {"delta", "0.5"}, {"gamma", gamma}, {"alpha", "0.04"}, {"n_c", "-300"},
          {"k_c", "-pi/2"}, {"lead", "600"},  {"ssh", "600"},   {"t_max", "240"},  {"dt", "0.01"}};
}

Defaults fig4(const char* n_c, const char* k_c) {
  return {{"J", "1"},   {"delta", "0.5"}, {"gamma", "0.5"}, {"alpha", "0.04"}, {"n_c", n_c},
          {"k_c", k_c}, {"segment", "150"}, {"lead", "700"}, {"t_max", "290"}, {"dt", "0.01"}};
}

Defaults fig4stack(const char* n_c, const char* k_c) {
  return {{"J", "1"},        {"delta", "0.5"},    {"gamma", "0.5"}, {"alpha", "0.04"}, {"n_c", n_c},
          {"k_c", k_c},      {"n_segments", "3"}, {"segment", "50"}, {"spacer", "24"},  {"lead", "700"},
          {"t_max", "290"},  {"dt", "0.01"}};
}

Defaults fig5() {
  return {{"J", "1"},         {"delta", "0.5"},       {"gamma", "0.5"}, {"cells", "500"},
          {"sigma_k", "0.02"}, {"separation", "200"}, {"t_max", "160"}, {"dt", "0.01"}};
}

Defaults fig6(const char* seg, const char* lead, const char* t_max) {
  return {{"J", "1"},       {"delta", "0.5"}, {"gamma", "0.5"}, {"alpha", "0.04"}, {"n_c", "-400"},
          {"k_c", "-pi/2"}, {"segment", seg}, {"lead", lead},   {"t_max", t_max},  {"dt", "0.01"}};
}

}  // namespace

const std::vector<ScenarioDef>& scenario_table() {
  static const std::vector<ScenarioDef> table = [] {
    std::vector<ScenarioDef> t;
    t.push_back({"fig3a", "junction, Hermitian SSH: reflection", fig3("0"), {}, run_fig3a});
    t.push_back({"fig3b", "junction, gain-first EP: transmission", fig3("0.5"), {}, run_fig3b});
    t.push_back({"fig3c", "junction, loss-first EP: amplification", fig3("-0.5"), {}, run_fig3c});
    t.push_back({"fig4a", "EP sandwich, left incidence: transparency", fig4("-200", "-pi/2"), {}, run_fig4a});
    t.push_back({"fig4b", "EP sandwich, right incidence: amplified train", fig4("200", "pi/2"), {}, run_fig4b});
    t.push_back({"fig4c", "EP stack, left incidence: invisibility", fig4stack("-200", "-pi/2"), {}, run_fig4c});
    t.push_back({"fig4d", "EP stack, right incidence: amplified lobes", fig4stack("200", "pi/2"), {}, run_fig4d});
    t.push_back({"fig5c", "EP ring: in-phase packet pair", fig5(), {}, run_fig5c});
    t.push_back({"fig5d", "EP ring: anti-phase packet pair", fig5(), {}, run_fig5d});
    t.push_back({"fig6a", "long EP segment: confinement", fig6("400", "2700", "1290"), {}, run_fig6a});
    Defaults d6b = fig6("60", "1200", "540");
    d6b.emplace_back("reference_segment", "400");
    d6b.emplace_back("window", "300");
    t.push_back({"fig6b", "short EP segment: weak confinement", d6b, {}, run_fig6b});
    t.push_back({"fig6c", "short EP segment: absorption", fig6("30", "1000", "440"), {}, run_fig6c});
    t.push_back({"figA", "junction spectrum and IPR",
                 {{"J", "1"}, {"delta", "0.5"}, {"gamma", "0.5"}, {"small", "250"}, {"large", "500"}}, {}, run_figA});
    t.push_back({"figA2", "band overlap",
                 {{"J", "1"}, {"delta", "0.5"}, {"gamma1", "0.1"}, {"gamma2", "0.3"}, {"gamma3", "0.5"},
                  {"samples", "200"}},
                 {}, run_figA2});
    t.push_back({"custom", "custom lattice",
                 {{"spec", ""}, {"alpha", "0.04"}, {"n_c", "0"}, {"k_c", "-pi/2"}, {"t_max", "50"}, {"dt", "0.01"},
                  {"method", "stepped"}},
                 {"spec", "method"}, run_custom});
    return t;
  }();
  return table;
}

}  // namespace nhls::detail
