#include <cctype>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "crnkit.h"

using nlohmann::ordered_json;

namespace {

struct Args {
  std::string preset;
  std::string input;
  std::vector<std::string> sets;
  std::uint64_t seed = 12345;
  double eps = 0.0;
  std::string json_path;
  std::string csv_path;
  double tol_rel = 1e-8;
  double tol_abs = 1e-10;
  std::string x0_text;
  double t_end = 100.0;
  int starts = 64;
};

int exit_for(int code) {
  switch (code) {
    case CRN_OK: return 0;
    case CRN_ERR_NUMERIC: return 4;
    case CRN_ERR_INCONSISTENT: return 3;
    default: return 2;
  }
}

int die(int code) {
  std::cerr << "error: " << crn_last_error() << "\n";
  return exit_for(code);
}

int die_msg(const std::string& msg) {
  std::cerr << "error: " << msg << "\n";
  return 2;
}

// Builds the model from --preset/--set or --input; returns 0 or an exit code.
int build_model(const Args& args, crn_model** out) {
  if (args.preset.empty() == args.input.empty()) {
    die_msg("exactly one of --preset and --input is required");
    return 2;
  }
  if (!args.preset.empty()) {
    if (args.preset != "dac") {
      die_msg("unknown preset '" + args.preset + "' (available: dac)");
      return 2;
    }
    if (int rc = crn_model_dac_preset(out); rc != CRN_OK) return die(rc);
    for (const std::string& kv : args.sets) {
      auto eq = kv.find('=');
      if (eq == std::string::npos || eq == 0) {
        crn_model_free(*out);
        *out = nullptr;
        return die_msg("--set expects KEY=VALUE, got '" + kv + "'");
      }
      if (int rc = crn_model_set(*out, kv.substr(0, eq).c_str(), kv.substr(eq + 1).c_str());
          rc != CRN_OK) {
        crn_model_free(*out);
        *out = nullptr;
        return die(rc);
      }
    }
    return 0;
  }
  if (!args.sets.empty()) {
    die_msg("--set applies to --preset models only");
    return 2;
  }
  std::ifstream in(args.input, std::ios::binary);
  if (!in) {
    die_msg("cannot read '" + args.input + "'");
    return 2;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  bool is_box = args.input.size() >= 4 && args.input.compare(args.input.size() - 4, 4, ".box") == 0;
  if (int rc = crn_model_parse(text.c_str(), is_box ? 1 : 0, out); rc != CRN_OK) return die(rc);
  return 0;
}

bool parse_x0(const Args& args, int m, std::vector<double>& x0) {
  if (args.x0_text.empty()) {
    x0.assign(m, 1.0);
    return true;
  }
  x0.clear();
  std::stringstream ss(args.x0_text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t used = 0;
      double v = std::stod(item, &used);
      while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
      if (used != item.size()) throw std::invalid_argument(item);
      x0.push_back(v);
    } catch (const std::exception&) {
      die_msg("malformed --x0 entry '" + item + "'");
      return false;
    }
  }
  if (int(x0.size()) != m) {
    die_msg("--x0 needs " + std::to_string(m) + " comma-separated values");
    return false;
  }
  return true;
}

bool write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    die_msg("cannot write '" + path + "'");
    return false;
  }
  out << content;
  return bool(out);
}

crn_options make_options(const Args& args) {
  crn_options o;
  crn_options_default(&o);
  o.rel_tol = args.tol_rel;
  o.abs_tol = args.tol_abs;
  o.eps = args.eps;
  o.seed = args.seed;
  o.n_starts = args.starts;
  o.t_end = args.t_end;
  return o;
}

std::string rat_text(const ordered_json& r) {
  if (r.is_null()) return "-";
  std::string num = r.at("num").get<std::string>();
  std::string den = r.at("den").get<std::string>();
  return den == "1" ? num : num + "/" + den;
}

std::string rat_vector_text(const ordered_json& arr) {
  std::string out = "(";
  for (size_t i = 0; i < arr.size(); ++i) out += (i ? ", " : "") + rat_text(arr[i]);
  return out + ")";
}

std::string double_vector_text(const ordered_json& arr) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < arr.size(); ++i) os << (i ? ", " : "") << arr[i].get<double>();
  os << ")";
  return os.str();
}

std::string join_labels(const ordered_json& arr, const char* sep) {
  std::string out;
  for (size_t i = 0; i < arr.size(); ++i) out += (i ? sep : "") + arr[i].get<std::string>();
  return out;
}

void print_row(const std::string& name, const std::string& value) {
  std::printf("  %-26s %s\n", name.c_str(), value.c_str());
}

void print_analyze_report(const ordered_json& j) {
  const auto& idx = j.at("indices");
  std::printf("network: %d species, %d reactions, %d complexes\n", idx.at("species").get<int>(),
              idx.at("reactions").get<int>(), idx.at("complexes").get<int>());
  std::printf("indices: l=%d sl=%d t=%d s=%d deficiency=%d weakly_reversible=%s\n",
              idx.at("linkage_classes").get<int>(), idx.at("strong_classes").get<int>(),
              idx.at("terminal_classes").get<int>(), idx.at("rank").get<int>(),
              idx.at("deficiency").get<int>(),
              idx.at("weakly_reversible").get<bool>() ? "yes" : "no");

  const auto& cons = j.at("conservation");
  std::string cons_text = cons.at("conservative").get<bool>() ? "yes" : "no";
  if (!cons.at("witness").is_null())
    cons_text += ", witness w = " + rat_vector_text(cons.at("witness"));
  const auto& kin = j.at("kinetics");
  std::string class_text = "not an exchange system";
  if (!kin.at("class").is_null()) {
    const auto& cls = kin.at("class");
    class_text = cls.at("label").get<std::string>() + " (P=" + rat_text(cls.at("P")) +
                 ", Q=" + rat_text(cls.at("Q")) + ", Rp=" + rat_text(cls.at("Rp")) +
                 ", Rq=" + rat_text(cls.at("Rq")) + ")";
  }

  std::printf("property                     result\n");
  print_row("conservative", cons_text);
  print_row("positively dependent", j.at("positively_dependent").get<bool>() ? "yes" : "no");
  print_row("reactant-determined", kin.at("pl_rdk").get<bool>() ? "yes" : "no");
  print_row("class", class_text);
  print_row("positive steady states", j.at("existence").get<std::string>());

  const auto& verdict = j.at("verdict");
  std::string vtext = verdict.at("result").get<std::string>() + " (evidence: " +
                      verdict.at("evidence").get<std::string>() + ")";
  print_row("multistationarity", vtext);
  if (verdict.contains("note")) print_row("", verdict.at("note").get<std::string>());

  std::string acr_text = "undefined (needs a weakly reversible reactant-determined model)";
  if (!j.at("acr").is_null()) {
    acr_text = j.at("acr").empty() ? "none" : join_labels(j.at("acr"), ", ");
  }
  print_row("ACR species", acr_text);

  const auto& dec = j.at("decomposition");
  std::string blocks;
  for (size_t i = 0; i < dec.at("blocks").size(); ++i)
    blocks += (i ? " | " : "") + join_labels(dec.at("blocks")[i], " ");
  print_row("finest decomposition",
            "{" + blocks + "}" + (dec.at("independent").get<bool>() ? " independent" : ""));
  for (const auto& bv : dec.at("block_verdicts")) {
    print_row("  block " + std::to_string(bv.at("block").get<int>() + 1),
              bv.at("verdict").get<std::string>() + " via " + bv.at("rule").get<std::string>());
  }
}

int cmd_analyze(const Args& args) {
  crn_model* model = nullptr;
  if (int rc = build_model(args, &model); rc != 0) return rc;
  char* json_text = nullptr;
  int rc = crn_analyze(model, &json_text);
  if (rc != CRN_OK) {
    crn_model_free(model);
    return die(rc);
  }
  ordered_json j = ordered_json::parse(json_text);
  print_analyze_report(j);
  bool ok = args.json_path.empty() || write_file(args.json_path, json_text);
  crn_string_free(json_text);
  crn_model_free(model);
  return ok ? 0 : 2;
}

int cmd_simulate(const Args& args) {
  crn_model* model = nullptr;
  if (int rc = build_model(args, &model); rc != 0) return rc;
  std::vector<double> x0;
  if (!parse_x0(args, crn_model_species_count(model), x0)) {
    crn_model_free(model);
    return 2;
  }
  crn_options opts = make_options(args);
  char* csv_text = nullptr;
  char* json_text = nullptr;
  int rc = crn_simulate(model, x0.data(), int(x0.size()), &opts, &csv_text, &json_text);
  if (rc != CRN_OK) {
    crn_model_free(model);
    return die(rc);
  }
  ordered_json j = ordered_json::parse(json_text);
  std::printf("simulated to t=%g in %ld accepted steps (%ld rejected)\n",
              j.at("t_end").get<double>(), j.at("steps_accepted").get<long>(),
              j.at("steps_rejected").get<long>());
  print_row("final state", double_vector_text(j.at("final_state")));
  std::ostringstream res;
  res << j.at("residual_inf").get<double>()
      << (j.at("converged").get<bool>() ? " (converged)" : " (not converged)");
  print_row("residual", res.str());
  std::ostringstream dr;
  dr << j.at("conserved_drift").get<double>();
  print_row("conserved drift", dr.str());

  bool ok = true;
  if (!args.csv_path.empty()) ok = write_file(args.csv_path, csv_text) && ok;
  if (!args.json_path.empty()) ok = write_file(args.json_path, json_text) && ok;
  crn_string_free(csv_text);
  crn_string_free(json_text);
  crn_model_free(model);
  return ok ? 0 : 2;
}

int cmd_probe(const Args& args) {
  crn_model* model = nullptr;
  if (int rc = build_model(args, &model); rc != 0) return rc;
  std::vector<double> x0;
  if (!parse_x0(args, crn_model_species_count(model), x0)) {
    crn_model_free(model);
    return 2;
  }
  crn_options opts = make_options(args);
  char* json_text = nullptr;
  int rc = crn_probe(model, x0.data(), int(x0.size()), &opts, &json_text);
  if (rc != CRN_OK && rc != CRN_ERR_INCONSISTENT) {
    crn_model_free(model);
    return die(rc);
  }
  ordered_json j = ordered_json::parse(json_text);
  std::printf("probe: %d starts (seed %llu), %d converged, %zu distinct equilibria\n",
              j.at("starts_attempted").get<int>(),
              static_cast<unsigned long long>(j.at("seed").get<std::uint64_t>()),
              j.at("starts_converged").get<int>(), j.at("equilibria").size());
  for (const auto& e : j.at("equilibria")) {
    std::ostringstream os;
    os << double_vector_text(e.at("x")) << "  residual " << e.at("residual").get<double>();
    std::printf("  %s\n", os.str().c_str());
  }
  print_row("structural verdict", j.at("structural_verdict").get<std::string>());
  print_row("consistent", j.at("consistent").get<bool>() ? "yes" : "no");

  bool ok = args.json_path.empty() || write_file(args.json_path, json_text);
  crn_string_free(json_text);
  crn_model_free(model);
  if (rc == CRN_ERR_INCONSISTENT) return die(rc);
  return ok ? 0 : 2;
}

int cmd_reduction(const Args& args) {
  crn_model* model = nullptr;
  if (int rc = build_model(args, &model); rc != 0) return rc;
  std::vector<double> x0;
  if (!parse_x0(args, crn_model_species_count(model), x0)) {
    crn_model_free(model);
    return 2;
  }
  crn_options opts = make_options(args);
  char* json_text = nullptr;
  int rc = crn_reduction(model, x0.data(), int(x0.size()), &opts, &json_text);
  if (rc != CRN_OK) {
    crn_model_free(model);
    return die(rc);
  }
  ordered_json j = ordered_json::parse(json_text);
  std::printf("reduction conditions (class %s)\n", j.at("class").get<std::string>().c_str());
  {
    std::ostringstream os;
    os << "A2_0 = " << j.at("A2_0").get<double>() << ", SUM_0 = " << j.at("SUM_0").get<double>();
    print_row("initial data", os.str());
  }
  const auto& nec = j.at("necessary");
  if (nec.at("applicable").get<bool>()) {
    std::string roots = nec.at("lambda_roots").empty()
                            ? "none in (0, 1)"
                            : double_vector_text(nec.at("lambda_roots"));
    print_row("necessary-condition roots", roots);
  } else {
    print_row("necessary-condition roots", "not applicable (P or Q vanishes)");
  }
  for (const char* key : {"sufficient_p_null", "sufficient_positive_negative"}) {
    const auto& s = j.at(key);
    std::ostringstream os;
    os << s.at("status").get<std::string>();
    if (!s.at("vacuous").is_null() && s.at("vacuous").get<bool>()) os << " (vacuous)";
    os << "; T = " << s.at("T").get<double>() << ", M'' = " << s.at("M_upper").get<double>();
    if (s.contains("m_lower")) os << ", m' = " << s.at("m_lower").get<double>();
    os << ", lhs = " << s.at("lhs").get<double>() << ", rhs = " << s.at("rhs").get<double>();
    print_row(key, os.str());
    if (!s.at("A2_star").is_null()) {
      std::ostringstream os2;
      os2 << "A2* = " << s.at("A2_star").get<double>() << " vs A2_0 = "
          << s.at("A2_0").get<double>();
      if (!s.at("empirical_reduction").is_null())
        os2 << (s.at("empirical_reduction").get<bool>() ? " (reduced)" : " (not reduced)");
      print_row("", os2.str());
    }
    if (!s.at("warning").get<std::string>().empty()) print_row("", s.at("warning").get<std::string>());
  }

  bool ok = args.json_path.empty() || write_file(args.json_path, json_text);
  crn_string_free(json_text);
  crn_model_free(model);
  return ok ? 0 : 2;
}

void add_common_flags(CLI::App* sub, Args& args) {
  sub->add_option("--preset", args.preset, "built-in model (dac)");
  sub->add_option("--input", args.input, "network (.crn) or box-model (.box) file");
  sub->add_option("--set", args.sets, "preset parameter override KEY=VALUE")->take_all();
  sub->add_option("--seed", args.seed, "RNG seed");
  sub->add_option("--eps", args.eps, "positivity floor for class extremum queries");
  sub->add_option("--json", args.json_path, "write the JSON report here");
  sub->add_option("--csv", args.csv_path, "write the trajectory CSV here");
  sub->add_option("--tol-rel", args.tol_rel, "integrator relative tolerance");
  sub->add_option("--tol-abs", args.tol_abs, "integrator absolute tolerance");
  sub->add_option("--x0", args.x0_text, "initial state, comma separated (default all ones)");
  sub->add_option("--t-end", args.t_end, "integration horizon");
  sub->add_option("--starts", args.starts, "multistart count");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"reaction-network analysis toolkit"};
  app.require_subcommand(1);

  Args args;
  CLI::App* analyze = app.add_subcommand("analyze", "structural analysis report");
  CLI::App* simulate = app.add_subcommand("simulate", "integrate the rate equations");
  CLI::App* probe = app.add_subcommand("probe", "multistart steady-state search");
  CLI::App* reduction = app.add_subcommand("reduction", "atmospheric-reduction conditions");
  for (CLI::App* sub : {analyze, simulate, probe, reduction}) add_common_flags(sub, args);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  if (analyze->parsed()) return cmd_analyze(args);
  if (simulate->parsed()) return cmd_simulate(args);
  if (probe->parsed()) return cmd_probe(args);
  if (reduction->parsed()) return cmd_reduction(args);
  return 2;
}
