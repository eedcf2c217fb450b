// Command line front end: generalized t-test critical values, CDFs and
// quantiles for symmetric and Gaussian-scale-mixture error models.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mixt/gmix.hpp"
#include "mixt/mcsim.hpp"
#include "mixt/specfun.hpp"
#include "mixt/symt.hpp"
#include "mixt/transform.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

using nlohmann::json;

std::string fmt6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

json make_record(const std::string& command, json inputs, json outputs,
                 const std::string& provenance) {
  return json{{"command", command},
              {"inputs", std::move(inputs)},
              {"outputs", std::move(outputs)},
              {"provenance", provenance},
              {"version", kVersion}};
}

void emit(const json& record, const std::string& path) {
  if (path.empty()) {
    std::cout << record.dump(2) << "\n";
  } else {
    std::ofstream out(path);
    out << record.dump(2) << "\n";
  }
}

void emit_text(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(path);
    out << text;
  }
}

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

mixt::mcsim::Model parse_model(const std::string& s) {
  if (s == "classic") return mixt::mcsim::Model::classic;
  if (s == "G") return mixt::mcsim::Model::gaussian_mixture;
  if (s == "S") return mixt::mcsim::Model::symmetric;
  throw UsageError("unknown model: " + s);
}

mixt::mcsim::MixtureSpec parse_spec(const std::string& s) {
  const auto colon = s.find(':');
  const std::string kind = s.substr(0, colon);
  std::vector<double> params;
  if (colon != std::string::npos) {
    std::stringstream ss(s.substr(colon + 1));
    std::string tok;
    while (std::getline(ss, tok, ',')) params.push_back(std::stod(tok));
  }
  using Spec = mixt::mcsim::MixtureSpec;
  if (kind == "two_point") {
    if (params.size() != 3) throw UsageError("two_point needs sigma_small,sigma_large,weight");
    return Spec::two_point(params[0], params[1], params[2]);
  }
  if (kind == "exponential") return Spec::exponential();
  if (kind == "tstudent") {
    if (params.size() != 1) throw UsageError("tstudent needs nu");
    return Spec::inverse_sqrt_gamma(params[0]);
  }
  if (kind == "constant") {
    if (params.size() != 1) throw UsageError("constant needs sigma");
    return Spec::constant(params[0]);
  }
  if (kind == "rademacher") return Spec::rademacher();
  throw UsageError("unknown spec kind: " + kind);
}

// The Table 1 row layout: dof 2..25, 100, 500, 1000.
std::vector<int> default_dof_list() {
  std::vector<int> dofs;
  for (int d = 2; d <= 25; ++d) dofs.push_back(d);
  dofs.push_back(100);
  dofs.push_back(500);
  dofs.push_back(1000);
  return dofs;
}

int run(int argc, char** argv) {
  CLI::App app{"Generalized t-test computations for symmetric and Gaussian "
               "scale mixture error models"};
  app.require_subcommand(1);

  // cdf
  auto* cdf = app.add_subcommand("cdf", "Evaluate a model CDF/tail");
  std::string cdf_model;
  std::optional<double> cdf_x, cdf_a;
  std::optional<int> cdf_n;
  cdf->add_option("--model", cdf_model, "classic|G|S|phiG|phiS")->required();
  cdf->add_option("--x", cdf_x, "t-statistic threshold");
  cdf->add_option("--a", cdf_a, "ratio threshold");
  cdf->add_option("--n", cdf_n, "sample size");

  // quantile
  auto* quant = app.add_subcommand("quantile", "Invert a model CDF");
  std::string q_model;
  double q_p = 0.0;
  std::optional<int> q_n;
  quant->add_option("--model", q_model, "classic|G|phiG")->required();
  quant->add_option("--p", q_p, "probability level")->required();
  quant->add_option("--n", q_n, "sample size");

  // critical
  auto* crit = app.add_subcommand("critical", "One-sided critical value");
  std::string c_model;
  std::optional<int> c_n, c_dof;
  double c_alpha = 0.0;
  crit->add_option("--model", c_model, "classic|G|S")->required();
  crit->add_option("--n", c_n, "sample size");
  crit->add_option("--dof", c_dof, "degrees of freedom (n - 1), table row label");
  crit->add_option("--alpha", c_alpha, "one-sided level")->required();

  // table
  auto* table = app.add_subcommand("table", "Critical-value table");
  std::string t_model = "G";
  std::vector<int> t_dofs;
  std::vector<double> t_alphas{0.125, 0.100, 0.050, 0.025};
  std::string t_format = "csv";
  std::string t_output;
  table->add_option("--model", t_model, "classic|G (default G)");
  table->add_option("--dof", t_dofs, "degrees-of-freedom rows (default: 2..25,100,500,1000)");
  table->add_option("--alpha", t_alphas, "alpha columns");
  table->add_option("--format", t_format, "csv|json");
  table->add_option("--output", t_output, "output file (default stdout)");

  // crossings
  auto* cross = app.add_subcommand("crossings", "Tail-curve intersection points");
  int x_kmax = 10;
  std::string x_format = "csv";
  std::string x_output;
  cross->add_option("--k-max", x_kmax, "largest k")->required();
  cross->add_option("--format", x_format, "csv|json");
  cross->add_option("--output", x_output, "output file (default stdout)");

  // simulate
  auto* sim = app.add_subcommand("simulate", "Seeded Monte Carlo runs");
  std::string s_spec, s_model = "G", s_mode = "type1", s_format = "json", s_output;
  int s_n = 0;
  double s_alpha = 0.025, s_a = 0.0;
  long s_reps = 100000;
  std::optional<std::uint64_t> s_seed;
  sim->add_option("--spec", s_spec,
                  "two_point:ss,sl,w | exponential | tstudent:nu | constant:sigma | rademacher");
  sim->add_option("--n", s_n, "sample size")->required();
  sim->add_option("--alpha", s_alpha, "one-sided level");
  sim->add_option("--model", s_model, "classic|G|S");
  sim->add_option("--mode", s_mode, "type1|attain");
  sim->add_option("--a", s_a, "ratio threshold (attain mode)");
  sim->add_option("--reps", s_reps, "replications");
  sim->add_option("--seed", s_seed, "root seed (required; no wall-clock default)");
  sim->add_option("--format", s_format, "csv|json");
  sim->add_option("--output", s_output, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (app.got_subcommand(cdf)) {
    json inputs;
    inputs["model"] = cdf_model;
    if (cdf_model == "phiG" || cdf_model == "phiS") {
      const double x = cdf_x ? *cdf_x : (cdf_a ? *cdf_a : throw UsageError("cdf: --x required"));
      inputs["x"] = x;
      if (cdf_model == "phiG") {
        const double c = mixt::gmix::phi_g(x);
        emit(make_record("cdf", inputs, json{{"cdf", c}, {"tail", 1.0 - c}}, "exact"), "");
      } else {
        const double c = mixt::symt::phi_s_approx(x);
        emit(make_record("cdf", inputs,
                         json{{"cdf_lower_bound", c}, {"tail_bound", 1.0 - c}}, "bound"), "");
      }
      return 0;
    }
    if (!cdf_n) throw UsageError("cdf: --n required for model " + cdf_model);
    const int n = *cdf_n;
    inputs["n"] = n;
    double a;
    if (cdf_a) {
      a = *cdf_a;
    } else if (cdf_x) {
      a = mixt::transform::a_from_x(*cdf_x, n);
    } else {
      throw UsageError("cdf: provide --a or --x");
    }
    inputs["a"] = a;
    if (cdf_model == "classic") {
      const double x = mixt::transform::x_from_a(a, n);
      const double c = mixt::specfun::student_t_cdf(x, n - 1);
      emit(make_record("cdf", inputs, json{{"cdf", c}, {"tail", 1.0 - c}}, "exact"), "");
    } else if (cdf_model == "G") {
      const double tail = mixt::gmix::g_tail(a, n);
      emit(make_record("cdf", inputs, json{{"cdf", 1.0 - tail}, {"tail", tail}}, "exact"), "");
    } else if (cdf_model == "S") {
      if (n <= mixt::symt::kMaxExactDimension) {
        const auto res = mixt::symt::s_tail_exact(n, a);
        const double tail = static_cast<double>(res.m) / static_cast<double>(1 << n);
        emit(make_record("cdf", inputs,
                         json{{"cdf", 1.0 - tail}, {"tail", tail}, {"m", res.m},
                              {"witness", res.witness}}, "exact"), "");
      } else {
        const double lb = mixt::symt::s_tail_lower_bound(a);
        emit(make_record("cdf", inputs,
                         json{{"tail_lower_bound", lb}, {"cdf_upper_bound", 1.0 - lb}},
                         "bound"), "");
      }
    } else {
      throw UsageError("cdf: unknown model " + cdf_model);
    }
    return 0;
  }

  if (app.got_subcommand(quant)) {
    json inputs{{"model", q_model}, {"p", q_p}};
    if (q_model == "phiG") {
      emit(make_record("quantile", inputs, json{{"x", mixt::gmix::phi_g_quantile(q_p)}},
                       "exact"), "");
      return 0;
    }
    if (!q_n) throw UsageError("quantile: --n required for model " + q_model);
    inputs["n"] = *q_n;
    if (q_model == "classic") {
      const double x =
          mixt::mcsim::critical_value_for(mixt::mcsim::Model::classic, *q_n, 1.0 - q_p);
      emit(make_record("quantile", inputs, json{{"x", x}}, "exact"), "");
    } else if (q_model == "G") {
      if (!(q_p > 0.5 && q_p < 1.0)) throw UsageError("quantile: p must lie in (0.5, 1)");
      const double x = q_p <= 0.75 ? mixt::transform::x_from_a(1.0, *q_n)
                                   : mixt::gmix::g_critical_value(*q_n, 1.0 - q_p);
      emit(make_record("quantile", inputs, json{{"x", x}}, "exact"), "");
    } else {
      throw UsageError("quantile: unknown model " + q_model);
    }
    return 0;
  }

  if (app.got_subcommand(crit)) {
    if (!c_n && !c_dof) throw UsageError("critical: provide --n or --dof");
    if (c_n && c_dof) throw UsageError("critical: --n and --dof are exclusive");
    const int n = c_n ? *c_n : *c_dof + 1;
    json inputs{{"model", c_model}, {"n", n}, {"dof", n - 1}, {"alpha", c_alpha}};
    if (c_model == "S") {
      const auto res = mixt::symt::s_critical_value(n, c_alpha);
      emit(make_record("critical", inputs, json{{"x", res.x}},
                       res.exact ? "exact" : "bound"), "");
    } else {
      const double x = mixt::mcsim::critical_value_for(parse_model(c_model), n, c_alpha);
      emit(make_record("critical", inputs, json{{"x", x}}, "exact"), "");
    }
    return 0;
  }

  if (app.got_subcommand(table)) {
    if (t_dofs.empty()) t_dofs = default_dof_list();
    json rows = json::array();
    std::ostringstream csv;
    csv << "dof";
    for (double al : t_alphas) csv << "," << fmt6(al);
    csv << "\n";
    for (int dof : t_dofs) {
      json row{{"dof", dof}};
      json vals = json::array();
      csv << dof;
      for (double al : t_alphas) {
        double x;
        if (t_model == "G") {
          x = mixt::gmix::g_critical_value(dof + 1, al);
        } else if (t_model == "classic") {
          x = mixt::mcsim::critical_value_for(mixt::mcsim::Model::classic, dof + 1, al);
        } else {
          throw UsageError("table: unknown model " + t_model);
        }
        vals.push_back(x);
        csv << "," << fmt6(x);
      }
      csv << "\n";
      row["values"] = vals;
      rows.push_back(row);
    }
    if (t_format == "csv") {
      emit_text(csv.str(), t_output);
    } else if (t_format == "json") {
      emit(make_record("table", json{{"model", t_model}, {"alphas", t_alphas}},
                       json{{"rows", rows}}, "exact"), t_output);
    } else {
      throw UsageError("table: unknown format " + t_format);
    }
    return 0;
  }

  if (app.got_subcommand(cross)) {
    if (x_kmax < 2) throw UsageError("crossings: --k-max must be >= 2");
    json rows = json::array();
    std::ostringstream csv;
    csv << "k,a_star,a_star_squared\n";
    for (int k = 2; k <= x_kmax; ++k) {
      const auto cp = mixt::gmix::crossing_point(k);
      rows.push_back(json{{"k", cp.k}, {"a_star", cp.a_star},
                          {"a_star_squared", cp.a_star_squared}});
      csv << k << "," << fmt6(cp.a_star) << "," << fmt6(cp.a_star_squared) << "\n";
    }
    if (x_format == "csv") {
      emit_text(csv.str(), x_output);
    } else if (x_format == "json") {
      emit(make_record("crossings", json{{"k_max", x_kmax}}, json{{"rows", rows}},
                       "exact"), x_output);
    } else {
      throw UsageError("crossings: unknown format " + x_format);
    }
    return 0;
  }

  if (app.got_subcommand(sim)) {
    if (!s_seed) throw UsageError("simulate: --seed is required");
    if (s_mode == "type1") {
      if (s_spec.empty()) throw UsageError("simulate: --spec is required in type1 mode");
      const auto spec = parse_spec(s_spec);
      const auto report = mixt::mcsim::type_one_error(spec, s_n, s_alpha,
                                                      parse_model(s_model), s_reps, *s_seed);
      json inputs{{"spec", spec.name()}, {"n", s_n}, {"alpha", s_alpha},
                  {"model", mixt::mcsim::model_name(report.model)},
                  {"reps", report.reps}, {"seed", report.seed}};
      json outputs{{"rejections", report.rejections}, {"estimate", report.estimate},
                   {"std_error", report.std_error},
                   {"critical_value", report.critical_value}};
      if (s_format == "csv") {
        std::ostringstream csv;
        csv << "spec,n,alpha,model,reps,seed,rejections,estimate,std_error,critical_value\n"
            << spec.name() << "," << s_n << "," << fmt6(s_alpha) << "," << s_model << ","
            << report.reps << "," << report.seed << "," << report.rejections << ","
            << fmt6(report.estimate) << "," << fmt6(report.std_error) << ","
            << fmt6(report.critical_value) << "\n";
        emit_text(csv.str(), s_output);
      } else {
        emit(make_record("simulate", inputs, outputs, "monte-carlo"), s_output);
      }
    } else if (s_mode == "attain") {
      if (!(s_a > 0.0)) throw UsageError("simulate: --a required in attain mode");
      const auto res = mixt::mcsim::adversarial_attainment(s_n, s_a, s_reps, *s_seed);
      json inputs{{"n", s_n}, {"a", s_a}, {"reps", res.reps}, {"seed", res.seed}};
      json outputs{{"k", res.k}, {"empirical", res.empirical},
                   {"theoretical_tail", res.theoretical},
                   {"expected_empirical", 2.0 * res.theoretical},
                   {"std_error", res.std_error}};
      if (s_format == "csv") {
        std::ostringstream csv;
        csv << "n,a,reps,seed,k,empirical,theoretical_tail,std_error\n"
            << s_n << "," << fmt6(s_a) << "," << res.reps << "," << res.seed << ","
            << res.k << "," << fmt6(res.empirical) << "," << fmt6(res.theoretical) << ","
            << fmt6(res.std_error) << "\n";
        emit_text(csv.str(), s_output);
      } else {
        emit(make_record("simulate", inputs, outputs, "monte-carlo"), s_output);
      }
    } else {
      throw UsageError("simulate: unknown mode " + s_mode);
    }
    return 0;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const mixt::symt::InfeasibleLevelError& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return 3;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
