#include "gflab/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <ostream>
#include <sstream>

#include "gflab/association.hpp"
#include "gflab/claims.hpp"
#include "gflab/errors.hpp"
#include "gflab/identities.hpp"
#include "gflab/mollifier.hpp"

namespace gflab {

namespace {

using nlohmann::ordered_json;

template <typename T>
T json_get(const ordered_json& v, const std::string& key) {
  try {
    return v.get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ConfigError("config: bad value for '" + key + "'");
  }
}

ordered_json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("cannot open config file " + path);
  }
  try {
    return ordered_json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError("config file " + path + ": " + e.what());
  }
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) {
    throw ConfigError("cannot write " + path);
  }
  file << text;
}

std::vector<TestFunction> resolve_psis(const std::vector<std::string>& names) {
  std::vector<TestFunction> out;
  for (const auto& n : names) {
    out.push_back(default_test_function(n));
  }
  return out;
}

EpsilonGrid resolve_grid(const RunConfig& c) {
  EpsilonGrid g{c.eps0, c.ratio, c.steps};
  g.validate();
  return g;
}

int resolve_smoothness(const RunConfig& c, int needed) {
  if (c.s == 0) {
    return std::max(10, needed);
  }
  if (c.s < needed) {
    throw ConfigError("--s " + std::to_string(c.s) + " is below the " + std::to_string(needed) +
                      " this claim needs");
  }
  return c.s;
}

std::vector<MollifierPtr> resolve_mollifiers(const RunConfig& c, int s) {
  if (c.families < 1) {
    throw ConfigError("--families must be positive");
  }
  const Rational l = parse_rational(c.l);
  std::vector<MollifierPtr> out;
  for (int i = 0; i < c.families; ++i) {
    out.push_back(std::make_shared<const Mollifier>(
        build_mollifier(c.q_moments, s, l, c.seed + static_cast<std::uint64_t>(i))));
  }
  return out;
}

Claim resolve_claim(const RunConfig& c) {
  if (c.claim.empty()) {
    throw ConfigError("--claim is required");
  }
  return make_claim(parse_claim_id(c.claim), ClaimParams{c.a, c.b, c.p, c.q});
}

// Flags are parsed into `flags`; after the config file is read, every flag
// the user actually gave is copied over the file values.
class Overrides {
 public:
  template <typename T>
  void add(CLI::App* app, const std::string& name, T RunConfig::*field, RunConfig& flags,
           const std::string& help) {
    CLI::Option* opt = app->add_option(name, flags.*field, help);
    entries_.push_back({opt, [field](RunConfig& dst, const RunConfig& src) {
                          dst.*field = src.*field;
                        }});
  }

  void apply(RunConfig& dst, const RunConfig& src) const {
    for (const auto& e : entries_) {
      if (e.option->count() > 0) {
        e.copy(dst, src);
      }
    }
  }

 private:
  struct Entry {
    CLI::Option* option;
    std::function<void(RunConfig&, const RunConfig&)> copy;
  };
  std::vector<Entry> entries_;
};

void add_run_options(CLI::App* app, RunConfig& flags, Overrides& ov) {
  ov.add(app, "--claim", &RunConfig::claim, flags, "mik, thm1, thm2, thm2x, thm3, cor2, cor3, thm4");
  ov.add(app, "--a", &RunConfig::a, flags, "exponent a");
  ov.add(app, "--b", &RunConfig::b, flags, "exponent b (thm1)");
  ov.add(app, "--p", &RunConfig::p, flags, "order p (mik, thm4)");
  ov.add(app, "--q", &RunConfig::q, flags, "order q (mik)");
  ov.add(app, "--q-moments", &RunConfig::q_moments, flags, "vanishing mollifier moments");
  ov.add(app, "--s", &RunConfig::s, flags, "mollifier smoothness (0 = automatic)");
  ov.add(app, "--l", &RunConfig::l, flags, "mollifier support half-width");
  ov.add(app, "--seed", &RunConfig::seed, flags, "seed of the first mollifier family");
  ov.add(app, "--families", &RunConfig::families, flags, "number of mollifier families");
  ov.add(app, "--eps0", &RunConfig::eps0, flags, "largest epsilon");
  ov.add(app, "--ratio", &RunConfig::ratio, flags, "geometric grid ratio");
  ov.add(app, "--steps", &RunConfig::steps, flags, "grid steps");
  ov.add(app, "--tol", &RunConfig::tol, flags, "relative tolerance");
  ov.add(app, "--psi", &RunConfig::psi, flags, "test functions: even, generic, zero");
  ov.add(app, "--out", &RunConfig::out, flags, "output file (default stdout)");
}

RunConfig resolve_config(const RunConfig& flags, const Overrides& ov, const std::string& path,
                         ordered_json& file_contents) {
  RunConfig cfg;
  if (!path.empty()) {
    file_contents = read_json_file(path);
    cfg.apply_json(file_contents);
  }
  ov.apply(cfg, flags);
  return cfg;
}

int cmd_verify(const RunConfig& cfg, const ordered_json& file_contents, std::ostream& out,
               std::ostream& err) {
  const Claim claim = resolve_claim(cfg);
  const EpsilonGrid grid = resolve_grid(cfg);
  const auto psis = resolve_psis(cfg.psi);
  const int s = resolve_smoothness(cfg, claim.required_smoothness());
  const auto mollifiers = resolve_mollifiers(cfg, s);
  const double tol = cfg.tol > 0.0 ? cfg.tol : claim.default_tol;

  const ClaimReport report = verify_claim(claim, mollifiers, psis, grid, tol);
  ordered_json j = report.to_json();
  ordered_json run = cfg.to_json();
  run["s"] = s;
  run["tol"] = tol;
  j["config"] = run;
  if (!file_contents.is_null()) {
    j["config_file"] = file_contents;
  }
  emit(j.dump(2) + "\n", cfg.out, out);

  for (const auto& d : report.diagnostics) {
    err << claim.id_string() << ": " << d << "\n";
  }
  err << claim.id_string() << ": " << (report.verdict ? "pass" : "fail") << "\n";
  return report.verdict ? 0 : 1;
}

int cmd_sweep(const RunConfig& cfg, std::ostream& out) {
  const EpsilonGrid grid = resolve_grid(cfg);
  if (cfg.psi.empty()) {
    throw ConfigError("--psi needs at least one test function");
  }
  const TestFunction psi = default_test_function(cfg.psi.front());

  int needed = 2;
  std::unique_ptr<Claim> claim;
  if (cfg.combo == "lhs") {
    claim = std::make_unique<Claim>(resolve_claim(cfg));
    needed = claim->required_smoothness();
  } else if (cfg.combo != "dd" && cfg.combo != "ddp" && cfg.combo != "delta") {
    throw ConfigError("unknown combo '" + cfg.combo + "' (lhs, dd, ddp, delta)");
  }
  RunConfig one = cfg;
  one.families = 1;
  const MollifierPtr m = resolve_mollifiers(one, resolve_smoothness(cfg, needed)).front();

  GeneralizedFunctionRep combo = GeneralizedFunctionRep::zero(m);
  if (claim) {
    combo = claim->build_lhs(m);
  } else if (cfg.combo == "dd") {
    combo = multiply(embed_delta(0, m), embed_delta(0, m));
  } else if (cfg.combo == "ddp") {
    combo = multiply(embed_delta(0, m), embed_delta(1, m));
  } else {
    combo = embed_delta(0, m);
  }
  emit(to_csv(sweep(combo, psi, grid)), cfg.out, out);
  return 0;
}

}  // namespace

ordered_json RunConfig::to_json() const {
  ordered_json j;
  j["claim"] = claim;
  j["a"] = a;
  j["b"] = b;
  j["p"] = p;
  j["q"] = q;
  j["q-moments"] = q_moments;
  j["s"] = s;
  j["l"] = l;
  j["seed"] = seed;
  j["families"] = families;
  j["eps0"] = eps0;
  j["ratio"] = ratio;
  j["steps"] = steps;
  j["tol"] = tol;
  j["psi"] = psi;
  j["combo"] = combo;
  return j;
}

void RunConfig::apply_json(const ordered_json& j) {
  if (!j.is_object()) {
    throw ConfigError("config: top level must be an object");
  }
  for (const auto& [key, v] : j.items()) {
    if (key == "claim") {
      claim = json_get<std::string>(v, key);
    } else if (key == "a") {
      a = json_get<double>(v, key);
    } else if (key == "b") {
      b = json_get<double>(v, key);
    } else if (key == "p") {
      p = json_get<int>(v, key);
    } else if (key == "q") {
      q = json_get<int>(v, key);
    } else if (key == "q-moments") {
      q_moments = json_get<int>(v, key);
    } else if (key == "s") {
      s = json_get<int>(v, key);
    } else if (key == "l") {
      l = v.is_string() ? v.get<std::string>() : v.dump();
    } else if (key == "seed") {
      seed = json_get<std::uint64_t>(v, key);
    } else if (key == "families") {
      families = json_get<int>(v, key);
    } else if (key == "eps0") {
      eps0 = json_get<double>(v, key);
    } else if (key == "ratio") {
      ratio = json_get<double>(v, key);
    } else if (key == "steps") {
      steps = json_get<int>(v, key);
    } else if (key == "tol") {
      tol = json_get<double>(v, key);
    } else if (key == "psi") {
      psi = json_get<std::vector<std::string>>(v, key);
    } else if (key == "combo") {
      combo = json_get<std::string>(v, key);
    } else if (key == "out") {
      out = json_get<std::string>(v, key);
    } else {
      throw ConfigError("config: unknown key '" + key + "'");
    }
  }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Balanced products of singular distributions in a Colombeau algebra"};
  app.require_subcommand(1);

  RunConfig verify_flags;
  Overrides verify_ov;
  std::string verify_config;
  CLI::App* verify = app.add_subcommand("verify", "check one claim and write a JSON report");
  add_run_options(verify, verify_flags, verify_ov);
  verify->add_option("--config", verify_config, "JSON config; flags override it");

  RunConfig sweep_flags;
  Overrides sweep_ov;
  std::string sweep_config;
  CLI::App* sweep_cmd = app.add_subcommand("sweep", "write epsilon,value,err for one combo");
  add_run_options(sweep_cmd, sweep_flags, sweep_ov);
  sweep_ov.add(sweep_cmd, "--combo", &RunConfig::combo, sweep_flags, "lhs, dd, ddp or delta");
  sweep_cmd->add_option("--config", sweep_config, "JSON config; flags override it");

  int max_p = 12;
  int max_n = 12;
  int max_h = 6;
  std::string id_out;
  CLI::App* ident = app.add_subcommand("identities", "run the binomial identity suite");
  ident->add_option("--max-p", max_p, "largest p");
  ident->add_option("--max-n", max_n, "largest n");
  ident->add_option("--max-h", max_h, "largest h");
  ident->add_option("--out", id_out, "certificate file (default stdout)");

  int mq = 2;
  int ms = 10;
  int md = 2;
  std::string ml = "1";
  std::uint64_t mseed = 1;
  bool plain = false;
  std::string m_out;
  CLI::App* moll = app.add_subcommand("mollifier", "build a mollifier and dump it as JSON");
  moll->add_option("--q,--q-moments", mq, "vanishing moments");
  moll->add_option("--s", ms, "smoothness");
  moll->add_option("--l", ml, "support half-width");
  moll->add_option("--seed", mseed, "seed for the free coefficients");
  moll->add_option("--d", md, "free coefficients");
  moll->add_flag("--plain", plain, "no free coefficients");
  moll->add_option("--out", m_out, "output file (default stdout)");

  CLI::App* list = app.add_subcommand("list-claims", "print the claim catalog");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (verify->parsed()) {
      ordered_json file_contents;
      const RunConfig cfg = resolve_config(verify_flags, verify_ov, verify_config, file_contents);
      return cmd_verify(cfg, file_contents, out, err);
    }
    if (sweep_cmd->parsed()) {
      ordered_json file_contents;
      return cmd_sweep(resolve_config(sweep_flags, sweep_ov, sweep_config, file_contents), out);
    }
    if (ident->parsed()) {
      const auto certs = run_identity_suite(max_p, max_n, max_h);
      emit(certificates_to_json(certs).dump(2) + "\n", id_out, out);
      const auto failed = std::count_if(certs.begin(), certs.end(),
                                        [](const IdentityCertificate& c) { return !c.status; });
      err << "identities: " << certs.size() - failed << "/" << certs.size() << " hold\n";
      return failed == 0 ? 0 : 1;
    }
    if (moll->parsed()) {
      const Mollifier m = build_mollifier(mq, ms, parse_rational(ml), mseed, plain ? 0 : md);
      ordered_json j = ordered_json::parse(m.to_json());
      ordered_json moments = ordered_json::array();
      for (int k = 0; k <= m.q() + 2; ++k) {
        moments.push_back(to_string(m.moment(k)));
      }
      j["moments"] = moments;
      j["l2_norm_squared"] = to_string(m.l2_norm_squared());
      emit(j.dump(2) + "\n", m_out, out);
      return 0;
    }
    if (list->parsed()) {
      for (const auto& [id, text] : claim_catalog()) {
        out << id << "\t" << text << "\n";
      }
      return 0;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace gflab
