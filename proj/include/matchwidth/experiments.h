#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "matchwidth/generators.h"
#include "matchwidth/graph.h"

namespace matchwidth {

// Zero means "use the experiment's default".
struct ExperimentParams {
  std::uint64_t seed = 1;
  int n = 0;        // largest instance (vertices)
  int max_n = 0;    // exhaustive range, where it applies
  int samples = 0;  // number of random instances
  int k = 0;        // grid order
  int jobs = 1;
};

struct ExperimentReport {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  std::int64_t instances = 0;
  std::int64_t violations = 0;
  std::vector<std::string> notes;
  double elapsed_ms = 0;

  bool passed() const { return violations == 0 && instances > 0; }
  std::string csv() const;
  // One line: name, instance and violation counts, verdict.
  std::string summary() const;
};

std::vector<std::string> experiment_names();

// Throws kUnknownExperiment.
ExperimentReport run_experiment(const std::string& name, const ExperimentParams& params);

// Random bipartite matching covered graphs with 4 to max_vertices vertices.
std::vector<Graph> bipartite_corpus(Rng& rng, int count, int max_vertices);

}  // namespace matchwidth
