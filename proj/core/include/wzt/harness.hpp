#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wzt/binary_tree.hpp"
#include "wzt/cloning_system.hpp"
#include "wzt/tree_diagram.hpp"

namespace wzt {

/// Configuration of a randomized property run. The seed fully determines the
/// trial stream, so identical configs produce byte-identical reports.
struct TrialConfig {
  std::string instance = "bv";
  std::string suite = "all";  // all | axioms | order | engine | braid | magnus | comb
  int trials = 1000;
  int max_degree = 7;
  int size_bound = 12;
  std::uint64_t seed = 1;
};

struct PropertyResult {
  std::string name;
  long passed = 0;
  long failed = 0;
  long skipped = 0;  // trials whose precondition could not be sampled
  std::string first_counterexample;
  bool ok() const { return failed == 0; }
};

struct Report {
  TrialConfig config;
  std::vector<PropertyResult> properties;
  double wall_seconds = 0;  // not part of the deterministic rendering

  bool all_passed() const;
  /// Deterministic human-readable rendering (no timing).
  std::string render_text() const;
  /// Deterministic JSON rendering (no timing).
  std::string render_json() const;
};

/// Runs the selected property suites against the configured instance.
/// Throws std::invalid_argument for unknown instances or suites.
Report run_suite(const TrialConfig& cfg);

std::vector<std::string> suite_names();

/// Uniformly random tree shape with the given leaf count (leaf-grafting
/// growth).
BinaryTree random_tree(int leaves, RandomGen& gen);

/// Random diagram over the instance: uniform degree in [1, max_degree],
/// uniform tree shapes, instance-drawn middle.
TreeDiagram random_diagram(const CloningSystem& sys, int max_degree, int size_bound,
                           RandomGen& gen);

}  // namespace wzt
