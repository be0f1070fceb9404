#include "crnkit.h"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <optional>
#include <string>
#include <vector>

#include "crnkit/error.hpp"
#include "crnkit/report.hpp"

using nlohmann::ordered_json;

struct crn_model {
  crn::Model model;
  std::optional<crn::DacParameters> preset;  // set only for preset-backed models
};

namespace {

thread_local std::string g_last_error = "no error";

int code_for(crn::ErrKind kind) {
  using K = crn::ErrKind;
  switch (kind) {
    case K::ParseError:
    case K::UndeclaredSpecies:
    case K::NonpositiveRate:
    case K::SelfTransfer:
    case K::DuplicateLabel:
      return CRN_ERR_PARSE;
    case K::NotWeaklyReversible:
    case K::NotPlRdk:
    case K::ShapeMismatch:
    case K::ClassMismatch:
    case K::DegenerateClass:
    case K::PNullShape:
    case K::DimensionTooLarge:
    case K::NotIndependent:
      return CRN_ERR_UNSUPPORTED;
    case K::NonpositiveState:
    case K::StepSizeUnderflow:
    case K::NoConvergence:
    case K::Unbounded:
    case K::Infeasible:
      return CRN_ERR_NUMERIC;
    case K::InvalidArgument:
    case K::Internal:
      return CRN_ERR_INVALID;
  }
  return CRN_ERR_INVALID;
}

int set_error(const crn::Error& e) {
  std::string msg;
  if (e.line >= 1) {
    msg = "line " + std::to_string(e.line);
    if (e.column >= 1) msg += ", column " + std::to_string(e.column);
    msg += ": ";
  }
  msg += std::string(crn::err_kind_name(e.kind)) + ": " + e.what();
  g_last_error = msg;
  return code_for(e.kind);
}

template <typename F>
int guarded(F&& f) {
  try {
    return f();
  } catch (const crn::Error& e) {
    return set_error(e);
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return CRN_ERR_INVALID;
  }
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(bool ok, const char* what) {
  if (!ok) crn::fail(crn::ErrKind::InvalidArgument, what);
}

std::vector<double> state_vector(const crn_model* model, const double* x0, int n) {
  require(x0 != nullptr, "x0 is null");
  require(n == model->model.net.species_count(), "x0 length must equal the species count");
  return std::vector<double>(x0, x0 + n);
}

crn::SimOptions sim_options(const crn_options& o) {
  crn::SimOptions s;
  s.rel_tol = o.rel_tol;
  s.abs_tol = o.abs_tol;
  s.floor_frac = o.floor_frac;
  return s;
}

ordered_json double_vector_json(const std::vector<double>& v) {
  ordered_json arr = ordered_json::array();
  for (double x : v) arr.push_back(x);
  return arr;
}

ordered_json sufficient_json(const crn::SufficientConditionReport& rep) {
  ordered_json j;
  j["kind"] = rep.kind == crn::SufficientConditionKind::PNull ? "p_null" : "positive_negative";
  j["status"] = crn::condition_status_name(rep.status);
  j["T"] = rep.t;
  j["M_upper"] = rep.m_upper;
  if (rep.kind == crn::SufficientConditionKind::PosNeg) j["m_lower"] = rep.m_lower;
  j["lhs"] = rep.lhs;
  j["rhs"] = rep.rhs;
  j["eps"] = rep.eps;
  j["A2_0"] = rep.a2_0;
  j["A2_star"] = rep.a2_star ? ordered_json(*rep.a2_star) : ordered_json(nullptr);
  j["vacuous"] = rep.vacuous;
  j["empirical_reduction"] =
      rep.empirical_reduction ? ordered_json(*rep.empirical_reduction) : ordered_json(nullptr);
  j["warning"] = rep.warning;
  return j;
}

}  // namespace

extern "C" {

const char* crn_version(void) { return "1.0.0"; }

const char* crn_last_error(void) { return g_last_error.c_str(); }

void crn_string_free(char* s) { delete[] s; }

int crn_model_parse(const char* text, int is_box, crn_model** out) {
  return guarded([&] {
    require(text != nullptr, "text is null");
    require(out != nullptr, "out is null");
    crn::Model m = is_box ? crn::box_model_to_crn(crn::parse_box_file(text))
                          : crn::parse_network_file(text);
    *out = new crn_model{std::move(m), std::nullopt};
    return CRN_OK;
  });
}

int crn_model_dac_preset(crn_model** out) {
  return guarded([&] {
    require(out != nullptr, "out is null");
    crn::DacParameters params;
    *out = new crn_model{crn::dac_preset(params), params};
    return CRN_OK;
  });
}

int crn_model_set(crn_model* model, const char* key, const char* value) {
  return guarded([&] {
    require(model != nullptr, "model is null");
    require(key != nullptr && value != nullptr, "key/value is null");
    if (!model->preset)
      crn::fail(crn::ErrKind::ShapeMismatch, "parameter overrides apply to preset models only");
    crn::DacParameters params = *model->preset;
    crn::apply_dac_override(params, key, value);
    model->model = crn::dac_preset(params);
    model->preset = params;
    return CRN_OK;
  });
}

void crn_model_free(crn_model* model) { delete model; }

int crn_model_render(const crn_model* model, char** out) {
  return guarded([&] {
    require(model != nullptr, "model is null");
    require(out != nullptr, "out is null");
    *out = dup_string(crn::render_network_file(model->model));
    return CRN_OK;
  });
}

int crn_model_species_count(const crn_model* model) {
  return model ? model->model.net.species_count() : -1;
}

void crn_options_default(crn_options* opts) {
  if (!opts) return;
  opts->rel_tol = 1e-8;
  opts->abs_tol = 1e-10;
  opts->newton_tol = 1e-10;
  opts->floor_frac = 1e-12;
  opts->eps = 0.0;
  opts->seed = 12345;
  opts->n_starts = 64;
  opts->t_end = 100.0;
}

int crn_analyze(const crn_model* model, char** json_out) {
  return guarded([&] {
    require(model != nullptr, "model is null");
    require(json_out != nullptr, "json_out is null");
    crn::AnalysisBundle bundle = crn::analyze_model(model->model);
    *json_out = dup_string(crn::json_to_text(crn::report_json(model->model, bundle)));
    return CRN_OK;
  });
}

int crn_simulate(const crn_model* model, const double* x0, int n, const crn_options* opts,
                 char** csv_out, char** json_out) {
  return guarded([&] {
    require(model != nullptr, "model is null");
    require(opts != nullptr, "opts is null");
    require(csv_out != nullptr && json_out != nullptr, "output pointer is null");
    std::vector<double> x = state_vector(model, x0, n);

    crn::Trajectory traj =
        crn::integrate(model->model.net, model->model.kin, x, opts->t_end, sim_options(*opts));
    const std::vector<double>& xe = traj.x.back();

    std::vector<double> f = crn::vector_field(model->model.net, model->model.kin, xe);
    double residual = 0;
    for (double v : f) residual = std::max(residual, std::fabs(v));

    crn::RatMatrix w = crn::conserved_quantity_basis(model->model.net);
    double drift = 0;
    for (int i = 0; i < w.rows(); ++i) {
      std::vector<double> wd = w.row_doubles(i);
      double t0 = 0;
      for (int j = 0; j < n; ++j) t0 += wd[j] * x[j];
      for (const auto& state : traj.x) {
        double tv = 0;
        for (int j = 0; j < n; ++j) tv += wd[j] * state[j];
        drift = std::max(drift, std::fabs(tv - t0) / std::max(1.0, std::fabs(t0)));
      }
    }

    ordered_json j;
    j["schema_version"] = 1;
    j["t_end"] = traj.t.back();
    j["final_state"] = double_vector_json(xe);
    j["steps_accepted"] = traj.steps_accepted;
    j["steps_rejected"] = traj.steps_rejected;
    j["residual_inf"] = residual;
    j["conserved_drift"] = drift;
    j["converged"] = residual <= 1e-6;

    *csv_out = dup_string(crn::trajectory_csv(model->model.net, traj));
    *json_out = dup_string(crn::json_to_text(j));
    return CRN_OK;
  });
}

int crn_probe(const crn_model* model, const double* x0, int n, const crn_options* opts,
              char** json_out) {
  return guarded([&] {
    require(model != nullptr, "model is null");
    require(opts != nullptr, "opts is null");
    require(json_out != nullptr, "json_out is null");
    std::vector<double> x = state_vector(model, x0, n);

    crn::StoichClassSpec spec{x, opts->eps};
    crn::NewtonOptions nopts;
    nopts.tol = opts->newton_tol;
    crn::EquilibriumSet set = crn::multistart_probe(model->model.net, model->model.kin, spec,
                                                    opts->n_starts, opts->seed, nopts);

    crn::MultistatVerdict verdict =
        crn::multistationarity_pipeline(model->model.net, model->model.kin);
    bool consistent =
        !(verdict.verdict == crn::Verdict::Monostationary && set.members.size() >= 2);

    ordered_json j;
    j["schema_version"] = 1;
    j["seed"] = set.seed;
    j["starts_attempted"] = set.starts_attempted;
    j["starts_converged"] = set.starts_converged;
    j["count"] = set.members.size();
    ordered_json eqs = ordered_json::array();
    for (const auto& m : set.members) {
      ordered_json e;
      e["x"] = double_vector_json(m.x);
      e["residual"] = m.residual;
      eqs.push_back(e);
    }
    j["equilibria"] = eqs;
    j["structural_verdict"] = crn::verdict_name(verdict.verdict);
    j["consistent"] = consistent;
    *json_out = dup_string(crn::json_to_text(j));

    if (!consistent) {
      g_last_error = "multistart found " + std::to_string(set.members.size()) +
                     " equilibria in one class but the structural verdict is Monostationary";
      return CRN_ERR_INCONSISTENT;
    }
    return CRN_OK;
  });
}

int crn_reduction(const crn_model* model, const double* x0, int n, const crn_options* opts,
                  char** json_out) {
  return guarded([&] {
    require(model != nullptr, "model is null");
    require(opts != nullptr, "opts is null");
    require(json_out != nullptr, "json_out is null");
    std::vector<double> x = state_vector(model, x0, n);

    auto rec = crn::recognize_dac(model->model);
    if (!rec)
      crn::fail(crn::ErrKind::ClassMismatch, "the model does not have the exchange-system shape");
    if (!rec->has_rates)
      crn::fail(crn::ErrKind::InvalidArgument, "rate values required for the reduction report");

    crn::StoichClassSpec spec{x, opts->eps};
    int a2 = rec->species[1];
    double a2_0 = x[a2];
    double sum_0 = 0;
    for (int i = 0; i < n; ++i)
      if (i != a2) sum_0 += x[i];

    ordered_json j;
    j["schema_version"] = 1;
    j["class"] = crn::dac_class_name(crn::classify_system(model->model.net, model->model.kin).cls);
    j["A2_0"] = a2_0;
    j["SUM_0"] = sum_0;

    ordered_json nec;
    try {
      std::vector<double> roots = crn::necessary_condition_roots(rec->params, a2_0, sum_0);
      nec["applicable"] = true;
      nec["lambda_roots"] = double_vector_json(roots);
    } catch (const crn::Error& e) {
      if (e.kind != crn::ErrKind::DegenerateClass) throw;
      nec["applicable"] = false;
      nec["lambda_roots"] = ordered_json::array();
    }
    j["necessary"] = nec;

    j["sufficient_p_null"] = sufficient_json(crn::check_sufficient_conditions(
        model->model, spec, crn::SufficientConditionKind::PNull));
    j["sufficient_positive_negative"] = sufficient_json(crn::check_sufficient_conditions(
        model->model, spec, crn::SufficientConditionKind::PosNeg));

    *json_out = dup_string(crn::json_to_text(j));
    return CRN_OK;
  });
}

}  // extern "C"
