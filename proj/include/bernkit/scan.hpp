#pragma once

// Range scans over identities. scan_serial is the reference; scan_parallel
// distributes the same task list over OpenMP threads and must return the
// same rows in the same order.

#include "bernkit/identities.hpp"
#include "bernkit/rational.hpp"
#include "bernkit/sequences.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bernkit {

struct IdentityInfo {
  std::string id;
  int n_floor;
  bool needs_p = false;
  bool needs_N = false;
};

const std::vector<IdentityInfo> &identity_registry();

/// Throws UnknownName for unregistered ids.
const IdentityInfo &identity_info(std::string_view id);

struct ScanTask {
  std::string identity;
  int n = 0;
  std::optional<Rational> p;
  std::optional<int> N;
};

struct ScanConfig {
  std::vector<std::string> identities;
  /// Unset means the floor of each identity.
  std::optional<int> n_min;
  int n_max = 0;
  std::vector<Rational> p_values;
  std::optional<int> N;
  int jobs = 1;
};

/// One task per (identity, n, p), sorted. Throws DomainError when a family
/// identity has no p values or a multi-fold one has no N.
std::vector<ScanTask> make_tasks(const ScanConfig &config);

/// Evaluates one task. Library errors become a row with ok = false and the
/// message in `error`.
IdentityReport evaluate(const ScanTask &task, const SequenceView &seq = SequenceView());

std::vector<IdentityReport> scan_serial(const std::vector<ScanTask> &tasks,
                                        const SequenceView &seq = SequenceView());

/// jobs <= 0 uses the OpenMP default thread count.
std::vector<IdentityReport> scan_parallel(const std::vector<ScanTask> &tasks, int jobs,
                                          const SequenceView &seq = SequenceView());

/// Sorts by (identity, n, p, N).
void sort_reports(std::vector<IdentityReport> &reports);

bool all_ok(const std::vector<IdentityReport> &reports);

} // namespace bernkit
