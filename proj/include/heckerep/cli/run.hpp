#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace heckerep::cli {

enum ExitCode { kOk = 0, kVerificationFailed = 1, kUsage = 2 };

struct RunConfig {
  std::string subcommand;
  int level = 3;
  std::vector<int> levels;
  int genus = 2;
  std::optional<int> genus_filter;  // verify: only this genus
  std::optional<long> root;         // Galois exponent k, A = zeta_N^k
  std::string format = "json";
  int precision = 6;
  std::string twist = "plus";  // plus: theta_i = (-1)^i A^{i(i+2)}, minus: A^{i(i-2)}
  bool raw = false;            // genus2-matrices: J~ and non-normalized J
  bool exact_roots = false;    // genus2-matrices: also give sqrt entries lying in Q(zeta_N)
  int q = 5;
  std::string word;
  std::string graph_path;
  int path_length = 0;
  std::vector<long> factor;  // infinite-image: designated factor, constant term first
};

// Parses argv (CLI11) and dispatches; returns the process exit status.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace heckerep::cli
