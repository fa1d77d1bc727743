#pragma once

#include "pcoset/io.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace pcoset {

struct SuiteConfig {
  std::vector<std::int64_t> primes{3, 5, 7};
  std::size_t trials = 50;
  std::uint64_t seed = 1;
};

struct SuiteReport {
  std::string name;
  std::size_t trials = 0;
  std::size_t failures = 0;
  std::uint64_t seed = 0;
  json witnesses = json::array();
  json info = json::object();  // informational counters, never asserted
  double wall_time = 0.0;

  bool pass() const { return failures == 0; }
  void fail(json witness);
  /// Folds another report's counts and witnesses into this one.
  void absorb(const SuiteReport& other);
  /// Without timing the output is byte-identical across runs.
  json to_json(bool timing = true) const;
};

std::vector<std::string> suite_names();

/// Runs a named suite ("all" runs every suite). Throws InputError for an unknown name.
SuiteReport run_suite(std::string_view name, const SuiteConfig& cfg);

// Individual property checks. Each is deterministic in (cfg.seed, trial index).

SuiteReport check_arith(const SuiteConfig& cfg);
SuiteReport check_module_laws(const SuiteConfig& cfg);
SuiteReport check_fig1();
SuiteReport check_relation_laws(const SuiteConfig& cfg);
SuiteReport check_nazarov_closure(const SuiteConfig& cfg);

/// Multiplicativity, self-duality of χ, almost self-duality of χ on almost
/// self-dual inputs, and the Λ sandwich, over shared random trials.
struct CharfnReports {
  SuiteReport multiplicativity;
  SuiteReport selfduality;
  SuiteReport sandwich;
};
CharfnReports check_charfn_core(const SuiteConfig& cfg);

SuiteReport check_representative_independence(const SuiteConfig& cfg);
SuiteReport check_theta_stabilization(const SuiteConfig& cfg);
SuiteReport check_coset_laws(const SuiteConfig& cfg);
SuiteReport check_involution_and_scaling(const SuiteConfig& cfg);
SuiteReport check_sp_variant(const SuiteConfig& cfg);
SuiteReport check_boundary(const SuiteConfig& cfg);
SuiteReport check_neighbors();
SuiteReport check_graph_morphism(const SuiteConfig& cfg);
SuiteReport check_continuity(const SuiteConfig& cfg);
SuiteReport check_weil(const SuiteConfig& cfg);

}  // namespace pcoset
