#include "bernkit/scan.hpp"

#include "bernkit/errors.hpp"

#include <omp.h>

#include <algorithm>
#include <tuple>

namespace bernkit {

const std::vector<IdentityInfo> &identity_registry() {
  static const std::vector<IdentityInfo> registry = {
      {"euler", 2},
      {"euler-bernoulli", 1},
      {"family-fpz", 2, true},
      {"family-miki", 2, true},
      {"family-mixed", 2, true},
      {"fpz", 2},
      {"fpz-cubic", 3},
      {"gessel", 3},
      {"gessel-modified", 3},
      {"miki", 2},
      {"miki-modified", 2},
      {"mixed", 2},
      {"multi-lhs", 2, false, true},
      {"multi-lhs-bar", 2, false, true},
      {"p1-fpz", 1},
      {"p1-miki", 2},
      {"p1-mixed", 1},
  };
  return registry;
}

const IdentityInfo &identity_info(std::string_view id) {
  for (const IdentityInfo &info : identity_registry())
    if (info.id == id)
      return info;
  throw UnknownName("unknown identity '" + std::string(id) + "'");
}

std::vector<ScanTask> make_tasks(const ScanConfig &config) {
  std::vector<ScanTask> tasks;
  for (const std::string &id : config.identities) {
    const IdentityInfo &info = identity_info(id);
    if (info.needs_p && config.p_values.empty())
      throw DomainError(id + " needs at least one p value");
    if (info.needs_N && !config.N)
      throw DomainError(id + " needs N");
    int lo = config.n_min.value_or(info.n_floor);
    if (info.needs_N && !config.n_min)
      lo = std::max(lo, *config.N);
    for (int n = lo; n <= config.n_max; ++n) {
      if (info.needs_p) {
        for (const Rational &p : config.p_values)
          tasks.push_back({id, n, p, std::nullopt});
      } else {
        tasks.push_back({id, n, std::nullopt, info.needs_N ? config.N : std::nullopt});
      }
    }
  }
  std::sort(tasks.begin(), tasks.end(), [](const ScanTask &a, const ScanTask &b) {
    if (a.identity != b.identity)
      return a.identity < b.identity;
    if (a.n != b.n)
      return a.n < b.n;
    return a.p.value_or(0) < b.p.value_or(0);
  });
  tasks.erase(std::unique(tasks.begin(), tasks.end(),
                          [](const ScanTask &a, const ScanTask &b) {
                            return a.identity == b.identity && a.n == b.n && a.p == b.p &&
                                   a.N == b.N;
                          }),
              tasks.end());
  return tasks;
}

namespace {

IdentityReport dispatch(const ScanTask &t, const SequenceView &seq) {
  const std::string &id = t.identity;
  if (id == "euler")
    return verify_euler(t.n, seq);
  if (id == "miki")
    return verify_miki(t.n, seq);
  if (id == "miki-modified")
    return verify_miki_modified(t.n, seq);
  if (id == "fpz")
    return verify_fpz(t.n, seq);
  if (id == "mixed")
    return verify_mixed(t.n, seq);
  if (id == "family-miki")
    return verify_family(Family::Miki, t.n, t.p.value(), seq);
  if (id == "family-fpz")
    return verify_family(Family::Fpz, t.n, t.p.value(), seq);
  if (id == "family-mixed")
    return verify_family(Family::Mixed, t.n, t.p.value(), seq);
  if (id == "p1-miki")
    return verify_p1(Family::Miki, t.n, seq);
  if (id == "p1-fpz")
    return verify_p1(Family::Fpz, t.n, seq);
  if (id == "p1-mixed")
    return verify_p1(Family::Mixed, t.n, seq);
  if (id == "gessel")
    return verify_gessel(t.n, seq);
  if (id == "gessel-modified")
    return verify_gessel_modified(t.n, seq);
  if (id == "fpz-cubic")
    return verify_fpz_cubic(t.n, seq);
  if (id == "euler-bernoulli")
    return verify_euler_bernoulli(t.n, seq);
  if (id == "multi-lhs")
    return verify_multi_lhs(t.N.value(), t.n, Variant::Plain, seq);
  if (id == "multi-lhs-bar")
    return verify_multi_lhs(t.N.value(), t.n, Variant::Bar, seq);
  throw UnknownName("unknown identity '" + id + "'");
}

} // namespace

IdentityReport evaluate(const ScanTask &task, const SequenceView &seq) {
  try {
    return dispatch(task, seq);
  } catch (const Error &e) {
    IdentityReport r;
    r.identity = task.identity;
    r.n = task.n;
    r.p = task.p;
    r.N = task.N;
    r.ok = false;
    r.error = e.what();
    return r;
  }
}

std::vector<IdentityReport> scan_serial(const std::vector<ScanTask> &tasks,
                                        const SequenceView &seq) {
  std::vector<IdentityReport> out;
  out.reserve(tasks.size());
  for (const ScanTask &t : tasks)
    out.push_back(evaluate(t, seq));
  return out;
}

std::vector<IdentityReport> scan_parallel(const std::vector<ScanTask> &tasks, int jobs,
                                          const SequenceView &seq) {
  int n_max = 0;
  for (const ScanTask &t : tasks)
    n_max = std::max(n_max, t.n);
  SequenceCache::global().reserve(static_cast<std::size_t>(2 * n_max + 2));

  std::vector<IdentityReport> out(tasks.size());
  const long count = static_cast<long>(tasks.size());
  const int threads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (long i = 0; i < count; ++i)
    out[static_cast<std::size_t>(i)] = evaluate(tasks[static_cast<std::size_t>(i)], seq);
  return out;
}

void sort_reports(std::vector<IdentityReport> &reports) {
  std::stable_sort(reports.begin(), reports.end(),
                   [](const IdentityReport &a, const IdentityReport &b) {
                     if (a.identity != b.identity)
                       return a.identity < b.identity;
                     if (a.n != b.n)
                       return a.n < b.n;
                     const Rational pa = a.p.value_or(0), pb = b.p.value_or(0);
                     if (pa != pb)
                       return pa < pb;
                     return a.N.value_or(0) < b.N.value_or(0);
                   });
}

bool all_ok(const std::vector<IdentityReport> &reports) {
  return std::all_of(reports.begin(), reports.end(),
                     [](const IdentityReport &r) { return r.ok; });
}

} // namespace bernkit
