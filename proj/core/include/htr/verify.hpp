#pragma once

#include <string>
#include <vector>

#include "htr/hodge.hpp"

namespace htr {

/// Outcome of one verification suite. A suite passes when every check in it
/// holds and it finished within its time limit.
struct SuiteResult {
  int id = 0;
  std::string name;
  bool correct = false;
  double seconds = 0;
  double limit_seconds = 0;
  int checks = 0;
  std::vector<std::string> failures;
  bool pass() const { return correct && seconds <= limit_seconds; }
};

struct SweepBounds {
  int max_g = 2;
  int max_size = 5;
  int max_length = 3;
  /// Extra (g, mu) pairs checked beyond the box.
  std::vector<std::pair<int, Partition>> extra{{3, Partition({1})}, {3, Partition({2})}};
};

/// Parses "g<=2,|mu|<=5" style bounds (keys g, |mu| or mu, l or len); missing
/// keys keep their defaults. Throws std::invalid_argument on bad input.
SweepBounds parse_sweep_bounds(const std::string& text);

struct SweepRow {
  int g;
  Partition mu;
  Rational recursion;
  Rational oracle;
};

/// hurwitz_from_recursion against connected_hurwitz for every (g, mu) in the
/// bounds.
std::vector<SweepRow> oracle_sweep(AmplitudeCache& cache, const SweepBounds& bounds,
                                   const RecursionOptions& options = {});

// The numbered suites. Each one builds what it needs in `cache`.
SuiteResult suite_involution();                                                       // 1
SuiteResult suite_tree_function();                                                    // 2
SuiteResult suite_lambert_table(AmplitudeCache& cache, const RecursionOptions& opts);  // 3
SuiteResult suite_framed_table(AmplitudeCache& cache, const RecursionOptions& opts);   // 4
SuiteResult suite_oracle_sweep(AmplitudeCache& cache, const SweepBounds& bounds,
                               const RecursionOptions& opts);                          // 5
SuiteResult suite_framing_limits(AmplitudeCache& cache, const RecursionOptions& opts);  // 6
SuiteResult suite_properties(AmplitudeCache& cache, const RecursionOptions& opts);     // 7
SuiteResult suite_unstable();                                                         // 8

/// All eight suites in order, each with its own cold cache.
std::vector<SuiteResult> run_all_suites(const RecursionOptions& opts = {});

}  // namespace htr
