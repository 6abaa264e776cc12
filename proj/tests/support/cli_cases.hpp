#pragma once

// End-to-end CLI cases. Arguments may start with @F (bundled fixtures),
// @G (golden directory), @D (test data) or @T (scratch directory).

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>
#include <unistd.h>

#include "coinduct/cli.hpp"

namespace coinduct::testing {

namespace fs = std::filesystem;

struct CliCase {
  std::string name;
  std::vector<std::string> args;
  int exit_code = 0;
  bool golden_stdout = true;
  bool golden_trace = false;        // args contain "--trace @T/<name>.trace.json"
  std::string stderr_contains = {};
};

inline std::vector<CliCase> cli_cases() {
  const std::string t = "--trace";
  return {
      {"solve_r0_ind", {"solve", "--ruleset", "@F/R0.json", "--mode", "ind"}},
      {"solve_r0_coind", {"solve", "--ruleset", "@F/R0.json", "--mode", "coind"}},
      {"solve_r1_ind", {"solve", "--ruleset", "@F/R1.json", "--mode", "ind"}},
      {"solve_r1_coind", {"solve", "--ruleset", "@F/R1.json", "--mode", "coind"}},
      {"solve_r2_ind", {"solve", "--ruleset", "@F/R2.json", "--mode", "ind", t, "@T/solve_r2_ind.trace.json"}, 0,
       true, true},
      {"solve_r2_coind",
       {"solve", "--ruleset", "@F/R2.json", "--mode", "coind", t, "@T/solve_r2_coind.trace.json"}, 0, true, true},
      {"solve_r3_ind", {"solve", "--ruleset", "@F/R3.json", "--mode", "ind"}},
      {"solve_r3_coind", {"solve", "--ruleset", "@F/R3.json", "--mode", "coind"}},
      {"cover_r1_c", {"cover", "--ruleset", "@F/R1.json", "--v", "@F/R1_V_c.json", t, "@T/cover_r1_c.trace.json"},
       0, true, true},
      {"pos_r2_bc", {"pos", "--ruleset", "@F/R2.json", "--v", "@F/R2_V_bc.json", t, "@T/pos_r2_bc.trace.json"}, 0,
       true, true},
      {"cover_r3_bar",
       {"cover", "--ruleset", "@F/R3.json", "--v", "@F/R3_bar.json", t, "@T/cover_r3_bar.trace.json"}, 0, true,
       true},
      {"derive_r2_b", {"derive", "--ruleset", "@F/R2.json", "--element", "b"}},
      {"derive_r1_a_c", {"derive", "--ruleset", "@F/R1.json", "--v", "@F/R1_V_c.json", "--element", "a"}},
      {"derive_r3_root_bar", {"derive", "--ruleset", "@F/R3.json", "--v", "@F/R3_bar.json", "--element", "[]"}},
      {"derive_r1_c", {"derive", "--ruleset", "@F/R1.json", "--element", "c"}, 1, false, false, "underivable"},
      {"witness_r2_c", {"witness", "--ruleset", "@F/R2.json", "--element", "c"}},
      {"witness_r2_c_bc", {"witness", "--ruleset", "@F/R2.json", "--v", "@F/R2_V_bc.json", "--element", "c"}},
      {"witness_r2_a", {"witness", "--ruleset", "@F/R2.json", "--element", "a"}, 1, false, false, "no witness"},
      {"unfold_r2_loop", {"unfold", "--ruleset", "@F/R2.json", "--witness", "@G/witness_r2_c.out", "--rule", "loop"}},
      {"unfold_r2_unknown_rule",
       {"unfold", "--ruleset", "@F/R2.json", "--witness", "@G/witness_r2_c.out", "--rule", "nope"}, 2, false, false,
       "nope"},
      {"verify_derivation", {"verify", "--ruleset", "@F/R2.json", "--cert", "@G/derive_r2_b.out"}},
      {"verify_cover_proof", {"verify", "--ruleset", "@F/R1.json", "--cert", "@G/derive_r1_a_c.out"}},
      {"verify_witness", {"verify", "--ruleset", "@F/R2.json", "--cert", "@G/witness_r2_c_bc.out"}},
      {"verify_wrong_ruleset", {"verify", "--ruleset", "@F/R0.json", "--cert", "@G/derive_r2_b.out"}, 1},
      {"verify_consistent", {"verify", "--ruleset", "@F/R1.json", "--cert", "@F/R1_V_c.json", "--claim", "consistent"}},
      {"verify_closed", {"verify", "--ruleset", "@F/R1.json", "--cert", "@F/R1_V_c.json", "--claim", "closed"}, 1},
      {"encode_r1_enlarge_c",
       {"encode", "--ruleset", "@F/R1.json", "--transform", "enlarge", "--v", "@F/R1_V_c.json"}},
      {"encode_r2_restrict_bc",
       {"encode", "--ruleset", "@F/R2.json", "--transform", "restrict", "--v", "@F/R2_V_bc.json"}},
      {"encode_r2_to_container", {"encode", "--ruleset", "@F/R2.json", "--transform", "to-container"}},
      {"encode_r2_to_ruleset", {"encode", "--ruleset", "@G/encode_r2_to_container.out", "--transform", "to-ruleset"}},
      {"encode_r2_conf_as_der", {"encode", "--ruleset", "@F/R2.json", "--transform", "conf-as-der"}},
      {"encode_r0_conf_as_der_cap",
       {"encode", "--ruleset", "@F/R0.json", "--transform", "conf-as-der", "--max-options", "0"}, 3, false, false,
       "bound exceeded"},
      {"encode_enlarge_without_v", {"encode", "--ruleset", "@F/R1.json", "--transform", "enlarge"}, 2, false, false,
       "needs --v"},
      {"oracle_r0", {"oracle", "--ruleset", "@F/R0.json"}},
      {"oracle_r1", {"oracle", "--ruleset", "@F/R1.json"}},
      {"oracle_r2", {"oracle", "--ruleset", "@F/R2.json"}},
      {"oracle_r2_bc", {"oracle", "--ruleset", "@F/R2.json", "--v", "@F/R2_V_bc.json"}},
      {"oracle_r3_bar", {"oracle", "--ruleset", "@F/R3.json", "--v", "@F/R3_bar.json"}},
      {"oracle_r3_bound", {"oracle", "--ruleset", "@F/R3.json", "--max-elements", "4"}, 3, false, false,
       "bound exceeded"},
      {"laws_r0", {"laws", "--ruleset", "@F/R0.json"}},
      {"laws_r1", {"laws", "--ruleset", "@F/R1.json"}},
      {"laws_r2", {"laws", "--ruleset", "@F/R2.json"}},
      {"laws_r3_sampled", {"laws", "--ruleset", "@F/R3.json", "--samples", "32", "--seed", "5"}},
      {"laws_r3_exhaustive", {"laws", "--ruleset", "@F/R3.json", "--exhaustive"}},
      {"malformed_json", {"solve", "--ruleset", "@D/malformed.json"}, 2, false, false, "malformed.json:byte"},
      {"invalid_ruleset", {"solve", "--ruleset", "@D/bad_premise.json"}, 2, false, false, "rules/a/0/premises/0"},
      {"missing_file", {"solve", "--ruleset", "@D/absent.json"}, 2, false, false, "cannot open"},
      {"missing_subcommand", {}, 2, false},
      {"unknown_flag", {"solve", "--ruleset", "@F/R0.json", "--bogus"}, 2, false},
      {"bad_mode", {"solve", "--ruleset", "@F/R0.json", "--mode", "both"}, 2, false},
      {"unknown_element", {"derive", "--ruleset", "@F/R2.json", "--element", "zz"}, 2, false, false, "zz"},
  };
}

struct CliPaths {
  fs::path fixtures;
  fs::path golden;
  fs::path data;
  fs::path scratch;
};

inline CliPaths default_cli_paths() {
  const fs::path src(COINDUCT_SOURCE_DIR);
  const auto scratch = fs::temp_directory_path() / ("coinduct_cli_" + std::to_string(::getpid()));
  fs::create_directories(scratch);
  return {src / "data" / "fixtures", src / "tests" / "golden", src / "tests" / "data", scratch};
}

inline std::string expand(const std::string& arg, const CliPaths& p) {
  const std::pair<const char*, const fs::path*> roots[] = {
      {"@F/", &p.fixtures}, {"@G/", &p.golden}, {"@D/", &p.data}, {"@T/", &p.scratch}};
  for (const auto& [prefix, root] : roots) {
    if (arg.rfind(prefix, 0) == 0) return (*root / arg.substr(3)).string();
  }
  return arg;
}

struct CliRun {
  int exit_code;
  std::string out;
  std::string err;
};

inline CliRun run_in_process(const CliCase& c, const CliPaths& p) {
  std::vector<std::string> argv{"coinduct"};
  for (const auto& a : c.args) argv.push_back(expand(a, p));
  std::vector<const char*> ptrs;
  for (const auto& a : argv) ptrs.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(ptrs.size()), ptrs.data(), out, err);
  return {code, out.str(), err.str()};
}

inline std::string shell_quote(const std::string& s) {
  std::string q = "'";
  for (char ch : s) q += ch == '\'' ? std::string("'\\''") : std::string(1, ch);
  return q + "'";
}

/// Runs the installed binary; stdout and stderr are discarded.
inline int run_subprocess(const std::string& binary, const CliCase& c, const CliPaths& p) {
  std::string cmd = shell_quote(binary);
  for (const auto& a : c.args) cmd += " " + shell_quote(expand(a, p));
  cmd += " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

inline std::optional<std::string> read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline void write_file(const fs::path& path, const std::string& text) {
  std::ofstream(path, std::ios::binary) << text;
}

inline bool update_golden() {
  const char* env = std::getenv("COINDUCT_UPDATE_GOLDEN");
  return env != nullptr && std::string(env) == "1";
}

}  // namespace coinduct::testing
