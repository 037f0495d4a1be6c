#pragma once

#include <cstdint>
#include <iosfwd>
#include <json.hpp>
#include <string>
#include <vector>

namespace gflab {

/// Everything a verify or sweep run needs. Built from defaults, then an
/// optional JSON config file, then explicit flags.
struct RunConfig {
  std::string claim;
  double a = 0.0;
  double b = 0.0;
  int p = 1;
  int q = 1;
  int q_moments = 2;
  /// 0 picks max(10, what the claim needs).
  int s = 0;
  std::string l = "1";
  std::uint64_t seed = 1;
  int families = 3;
  double eps0 = 0.1;
  double ratio = 0.6;
  int steps = 12;
  /// Negative means the claim default.
  double tol = -1.0;
  std::vector<std::string> psi = {"even", "generic", "zero"};
  std::string combo = "lhs";
  std::string out;

  nlohmann::ordered_json to_json() const;
  /// Overwrites the fields named in `j`; unknown keys are a ConfigError.
  void apply_json(const nlohmann::ordered_json& j);
};

/// Runs one command line. Returns 0 on success, 1 when a claim or identity
/// fails, 2 on configuration or numerical errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gflab
