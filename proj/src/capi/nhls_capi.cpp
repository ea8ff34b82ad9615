#include "nhls/nhls.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <sstream>
#include <string>

#include "dynamics.hpp"
#include "error.hpp"
#include "experiment.hpp"
#include "lattice.hpp"
#include "lattice_json.hpp"
#include "linalg.hpp"
#include "observables.hpp"
#include "spectral.hpp"

struct nhls_hamiltonian {
  nhls::Hamiltonian h;
};
struct nhls_state {
  nhls::StateVector s;
};
struct nhls_record {
  nhls::EvolutionRecord r;
};

namespace {

thread_local std::string last_error;

nhls_status to_status(nhls::ErrorCode c) {
  using nhls::ErrorCode;
  switch (c) {
    case ErrorCode::InvalidArgument: return NHLS_ERR_INVALID_ARGUMENT;
    case ErrorCode::ParseError: return NHLS_ERR_PARSE;
    case ErrorCode::IoError: return NHLS_ERR_IO;
    case ErrorCode::NotAtEp: return NHLS_ERR_NOT_AT_EP;
    case ErrorCode::SingularSystem: return NHLS_ERR_SINGULAR_SYSTEM;
    case ErrorCode::NoPropagatingChannel: return NHLS_ERR_NO_PROPAGATING_CHANNEL;
    case ErrorCode::DefectiveSpectrum: return NHLS_ERR_DEFECTIVE_SPECTRUM;
    case ErrorCode::SupportClipped: return NHLS_ERR_SUPPORT_CLIPPED;
    case ErrorCode::InteractionIncomplete: return NHLS_ERR_INTERACTION_INCOMPLETE;
    case ErrorCode::BudgetViolation: return NHLS_ERR_BUDGET_VIOLATION;
    case ErrorCode::NumericalFailure: return NHLS_ERR_NUMERICAL;
  }
  return NHLS_ERR_INTERNAL;
}

template <class F>
nhls_status guard(F&& f) {
  try {
    f();
    last_error.clear();
    return NHLS_OK;
  } catch (const nhls::Error& e) {
    last_error = e.what();
    return to_status(e.code());
  } catch (const std::exception& e) {
    last_error = e.what();
    return NHLS_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown error";
    return NHLS_ERR_INTERNAL;
  }
}

void require(bool ok, const char* what) {
  if (!ok) nhls::fail(nhls::ErrorCode::InvalidArgument, what);
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

nhls::ModelParams params(nhls_params p) { return {p.J, p.delta, p.gamma}; }

}  // namespace

extern "C" {

const char* nhls_version(void) { return "0.1.0"; }

const char* nhls_status_name(nhls_status s) {
  switch (s) {
    case NHLS_OK: return "OK";
    case NHLS_ERR_INVALID_ARGUMENT: return "InvalidArgument";
    case NHLS_ERR_PARSE: return "ParseError";
    case NHLS_ERR_IO: return "IoError";
    case NHLS_ERR_NOT_AT_EP: return "NotAtEp";
    case NHLS_ERR_SINGULAR_SYSTEM: return "SingularSystem";
    case NHLS_ERR_NO_PROPAGATING_CHANNEL: return "NoPropagatingChannel";
    case NHLS_ERR_DEFECTIVE_SPECTRUM: return "DefectiveSpectrum";
    case NHLS_ERR_SUPPORT_CLIPPED: return "SupportClipped";
    case NHLS_ERR_INTERACTION_INCOMPLETE: return "InteractionIncomplete";
    case NHLS_ERR_BUDGET_VIOLATION: return "BudgetViolation";
    case NHLS_ERR_NUMERICAL: return "NumericalFailure";
    case NHLS_ERR_INTERNAL: return "InternalError";
  }
  return "Unknown";
}

const char* nhls_last_error(void) { return last_error.c_str(); }

void nhls_string_free(char* s) { std::free(s); }

double nhls_ep_gamma(nhls_params p, int sign) { return sign < 0 ? -(1.0 + p.delta - p.J) : 1.0 + p.delta - p.J; }

nhls_status nhls_hamiltonian_from_json(const char* json_text, nhls_hamiltonian** out) {
  return guard([&] {
    require(json_text && out, "null argument");
    const auto doc = nhls::parse_lattice_document(std::string(json_text));
    *out = new nhls_hamiltonian{nhls::assemble(doc.spec, doc.params)};
  });
}

nhls_status nhls_hamiltonian_uniform_chain(size_t n_sites, nhls_params p, nhls_hamiltonian** out) {
  return guard([&] {
    require(out, "null argument");
    *out = new nhls_hamiltonian{nhls::build_uniform_chain(n_sites, params(p))};
  });
}

nhls_status nhls_hamiltonian_ssh_segment(size_t n_sites, nhls_params p, int gain_first, nhls_hamiltonian** out) {
  return guard([&] {
    require(out, "null argument");
    *out = new nhls_hamiltonian{nhls::build_nh_ssh_segment(n_sites, params(p), gain_first != 0)};
  });
}

void nhls_hamiltonian_free(nhls_hamiltonian* h) { delete h; }

size_t nhls_hamiltonian_dim(const nhls_hamiltonian* h) { return h ? h->h.dim() : 0; }

nhls_status nhls_hamiltonian_entry(const nhls_hamiltonian* h, size_t i, size_t j, double* re, double* im) {
  return guard([&] {
    require(h && re && im, "null argument");
    const nhls::cd v = h->h(i, j);
    *re = v.real();
    *im = v.imag();
  });
}

nhls_status nhls_hamiltonian_spectrum(const nhls_hamiltonian* h, double* re, double* im, size_t capacity,
                                      double* max_imag) {
  return guard([&] {
    require(h && re && im, "null argument");
    require(capacity >= h->h.dim(), "capacity below dim");
    const auto r = nhls::spectrum_reality(h->h, false);
    for (Eigen::Index i = 0; i < r.eigvals.size(); ++i) {
      re[i] = r.eigvals[i].real();
      im[i] = r.eigvals[i].imag();
    }
    if (max_imag) *max_imag = r.max_imag;
  });
}

nhls_status nhls_dispersion(double k, nhls_params p, int band, double* re, double* im) {
  return guard([&] {
    require(re && im, "null argument");
    params(p).validate();
    const nhls::cd e = nhls::dispersion(k, params(p), band < 0 ? nhls::Band::Minus : nhls::Band::Plus);
    *re = e.real();
    *im = e.imag();
  });
}

nhls_status nhls_overlap(double k, nhls_params p, int small_k_approx, double* out) {
  return guard([&] {
    require(out, "null argument");
    params(p).validate();
    *out = nhls::overlap_Ok(k, params(p), small_k_approx != 0);
  });
}

nhls_status nhls_curve_csv(const char* kind, nhls_params p, int band, size_t samples, int small_k_approx,
                           char** out_csv) {
  return guard([&] {
    require(kind && out_csv, "null argument");
    std::ostringstream os;
    const std::string k(kind);
    if (k == "dispersion")
      nhls::write_curve_csv(os, nhls::dispersion_curve(params(p), band < 0 ? nhls::Band::Minus : nhls::Band::Plus, samples));
    else if (k == "overlap")
      nhls::write_curve_csv(os, nhls::overlap_curve(params(p), samples, small_k_approx != 0));
    else
      nhls::fail(nhls::ErrorCode::InvalidArgument, "curve kind must be dispersion or overlap");
    *out_csv = dup(os.str());
  });
}

nhls_status nhls_scattering_solve(double K, nhls_params p, int from_ssh, nhls_scattering_result* out) {
  return guard([&] {
    require(out, "null argument");
    const auto s = nhls::scattering_solve(K, params(p), from_ssh ? nhls::Incidence::FromSsh : nhls::Incidence::FromLead);
    out->E_re = s.E.real();
    out->E_im = s.E.imag();
    out->K = s.K;
    out->k_re = s.k.real();
    out->k_im = s.k.imag();
    const nhls::cd a[6] = {s.amps.I, s.amps.O, s.amps.IA, s.amps.OA, s.amps.IB, s.amps.OB};
    for (int i = 0; i < 6; ++i) {
      out->amps[2 * i] = a[i].real();
      out->amps[2 * i + 1] = a[i].imag();
    }
    out->propagating = s.propagating ? 1 : 0;
  });
}

nhls_status nhls_gaussian_packet(const nhls_hamiltonian* h, double alpha, double n_c, double k_c, nhls_state** out) {
  return guard([&] {
    require(h && out, "null argument");
    *out = new nhls_state{nhls::gaussian_packet(alpha, n_c, k_c, h->h.spec())};
  });
}

void nhls_state_free(nhls_state* s) { delete s; }

size_t nhls_state_size(const nhls_state* s) { return s ? s->s.size() : 0; }

nhls_status nhls_state_amplitudes(const nhls_state* s, double* re, double* im, size_t capacity) {
  return guard([&] {
    require(s && re && im, "null argument");
    require(capacity >= s->s.size(), "capacity below state size");
    for (std::size_t i = 0; i < s->s.size(); ++i) {
      re[i] = s->s.amps[static_cast<Eigen::Index>(i)].real();
      im[i] = s->s.amps[static_cast<Eigen::Index>(i)].imag();
    }
  });
}

nhls_status nhls_region_probability(const nhls_state* s, long lo, long hi, double* out) {
  return guard([&] {
    require(s && out, "null argument");
    *out = nhls::region_probability(s->s, {lo, hi, nhls::RegionLabel::Custom, "custom"});
  });
}

nhls_status nhls_ipr(const nhls_state* s, double* out) {
  return guard([&] {
    require(s && out, "null argument");
    *out = nhls::ipr(s->s);
  });
}

nhls_propagator_config nhls_propagator_default(void) {
  const nhls::PropagatorConfig d;
  return {NHLS_STEPPED, d.dt, d.t_max, d.snapshot_stride, d.degeneracy_guard, 0};
}

nhls_status nhls_propagate(const nhls_hamiltonian* h, const nhls_state* psi0, const nhls_propagator_config* cfg,
                           nhls_record** out) {
  return guard([&] {
    require(h && psi0 && cfg && out, "null argument");
    nhls::PropagatorConfig c;
    c.method = cfg->method == NHLS_SPECTRAL ? nhls::Method::SpectralDecomposition : nhls::Method::SteppedIntegrator;
    c.dt = cfg->dt;
    c.t_max = cfg->t_max;
    c.snapshot_stride = cfg->snapshot_stride;
    c.degeneracy_guard = cfg->degeneracy_guard;
    c.direction = cfg->backward ? nhls::Direction::Backward : nhls::Direction::Forward;
    *out = new nhls_record{nhls::propagate(h->h, psi0->s, c)};
  });
}

void nhls_record_free(nhls_record* r) { delete r; }

size_t nhls_record_size(const nhls_record* r) { return r ? r->r.size() : 0; }

nhls_status nhls_record_time(const nhls_record* r, size_t i, double* t, double* dirac_norm) {
  return guard([&] {
    require(r && t, "null argument");
    require(i < r->r.size(), "snapshot index out of range");
    *t = r->r.times[i];
    if (dirac_norm) *dirac_norm = r->r.norms[i];
  });
}

nhls_status nhls_record_snapshot(const nhls_record* r, size_t i, nhls_state** out) {
  return guard([&] {
    require(r && out, "null argument");
    require(i < r->r.size(), "snapshot index out of range");
    *out = new nhls_state{r->r.snapshots[i]};
  });
}

nhls_status nhls_record_density_csv(const nhls_record* r, size_t every, char** out_csv) {
  return guard([&] {
    require(r && out_csv, "null argument");
    std::ostringstream os;
    nhls::write_density_csv(os, r->r, every);
    *out_csv = dup(os.str());
  });
}

nhls_status nhls_spec_validate(const char* json_text, char** diagnostics) {
  std::vector<std::string> diag;
  nhls_status st = guard([&] {
    require(json_text, "null argument");
    const auto j = nlohmann::json::parse(json_text, nullptr, false);
    if (j.is_discarded()) diag.push_back("document: not valid JSON");
    else diag = nhls::validate_lattice_document(j);
  });
  if (st != NHLS_OK) return st;
  std::string text;
  for (const auto& d : diag) text += d + "\n";
  if (diagnostics) {
    st = guard([&] { *diagnostics = dup(text); });
    if (st != NHLS_OK) return st;
  }
  if (diag.empty()) return NHLS_OK;
  last_error = diag.front();
  return NHLS_ERR_PARSE;
}

nhls_status nhls_list_scenarios(char** out) {
  return guard([&] {
    require(out, "null argument");
    std::string s;
    for (const auto& id : nhls::scenario_ids()) s += id + "\n";
    *out = dup(s);
  });
}

nhls_status nhls_scenario_defaults(const char* id, char** out_json) {
  return guard([&] {
    require(id && out_json, "null argument");
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [k, v] : nhls::scenario_defaults(id)) j[k] = v;
    *out_json = dup(j.dump(2));
  });
}

nhls_status nhls_run_scenario(const char* id, const char* const* keys, const char* const* values, size_t n,
                              const char* out_dir, int* pass, char** summary_csv) {
  return guard([&] {
    require(id && (n == 0 || (keys && values)), "null argument");
    nhls::ScenarioConfig cfg;
    cfg.scenario_id = id;
    for (size_t i = 0; i < n; ++i) {
      require(keys[i] && values[i], "null override");
      cfg.overrides[keys[i]] = values[i];
    }
    if (out_dir) cfg.output_dir = out_dir;
    const auto r = nhls::run_scenario(cfg);
    if (pass) *pass = r.pass ? 1 : 0;
    if (summary_csv) *summary_csv = dup(nhls::summary_csv(r));
  });
}

nhls_status nhls_run_suite(const char* filter, size_t workers, const char* out_dir, int* pass, char** report) {
  return guard([&] {
    std::vector<std::string> ids;
    if (filter) {
      std::stringstream ss(filter);
      std::string tok;
      while (std::getline(ss, tok, ','))
        if (!tok.empty()) ids.push_back(tok);
    }
    for (const auto& id : ids)
      if (!nhls::is_scenario(id)) nhls::fail(nhls::ErrorCode::InvalidArgument, "filter: unknown scenario '" + id + "'");
    const auto s = nhls::run_suite(ids, workers, out_dir ? out_dir : "");
    if (pass) *pass = s.pass ? 1 : 0;
    if (report) *report = dup(nhls::junit_report(s));
  });
}

}  // extern "C"
