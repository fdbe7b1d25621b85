#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "bernkit/errors.hpp"
#include "bernkit/scan.hpp"

using namespace bernkit;

namespace {

bool same_rows(const std::vector<IdentityReport> &a, const std::vector<IdentityReport> &b) {
  if (a.size() != b.size())
    return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const IdentityReport &x = a[i], &y = b[i];
    if (x.identity != y.identity || x.n != y.n || x.p != y.p || x.N != y.N || x.lhs != y.lhs ||
        x.rhs != y.rhs || x.residual != y.residual || x.ok != y.ok || x.error != y.error)
      return false;
  }
  return true;
}

ScanConfig wide_config() {
  ScanConfig c;
  c.identities = {"miki", "family-mixed", "euler", "gessel", "multi-lhs-bar", "p1-fpz"};
  c.n_max = 14;
  c.p_values = {frac(3, 2), 0, frac(-1, 4)};
  c.N = 3;
  return c;
}

} // namespace

TEST_CASE("registry") {
  CHECK(identity_info("gessel").n_floor == 3);
  CHECK(identity_info("p1-fpz").n_floor == 1);
  CHECK(identity_info("family-fpz").needs_p);
  CHECK(identity_info("multi-lhs").needs_N);
  CHECK_THROWS_AS(identity_info("nosuch"), UnknownName);
}

TEST_CASE("task generation") {
  ScanConfig c;
  c.identities = {"miki"};
  c.n_max = 50;
  CHECK(make_tasks(c).size() == 49);

  c.identities = {"family-miki"};
  CHECK_THROWS_AS(make_tasks(c), DomainError);
  c.p_values = {frac(1, 2), 0};
  const std::vector<ScanTask> t = make_tasks(c);
  CHECK(t.size() == 98);
  CHECK(*t[0].p == 0);
  CHECK(*t[1].p == frac(1, 2));

  c.identities = {"multi-lhs"};
  CHECK_THROWS_AS(make_tasks(c), DomainError);
  c.N = 4;
  CHECK(make_tasks(c).front().n == 4);
}

TEST_CASE("serial scan") {
  const std::vector<IdentityReport> rows = scan_serial(make_tasks(wide_config()));
  CHECK(all_ok(rows));
  std::vector<IdentityReport> sorted = rows;
  sort_reports(sorted);
  CHECK(same_rows(rows, sorted));
}

TEST_CASE("parallel scan reproduces the serial one") {
  const std::vector<ScanTask> tasks = make_tasks(wide_config());
  const std::vector<IdentityReport> reference = scan_serial(tasks);
  for (int jobs : {0, 1, 2, 3, 8}) {
    std::vector<IdentityReport> rows = scan_parallel(tasks, jobs);
    CHECK(same_rows(rows, reference));
  }
}

TEST_CASE("out-of-domain rows become failures") {
  ScanConfig c;
  c.identities = {"miki", "family-fpz"};
  c.n_min = 1;
  c.n_max = 3;
  c.p_values = {-1, frac(1, 2)};
  const std::vector<IdentityReport> rows = scan_parallel(make_tasks(c), 4);
  CHECK_FALSE(all_ok(rows));
  int errors = 0;
  for (const IdentityReport &r : rows)
    if (!r.error.empty()) {
      ++errors;
      CHECK_FALSE(r.ok);
    }
  // miki n=1, family-fpz n=1 for both p, family-fpz p=-1 for n=2,3.
  CHECK(errors == 5);
}

TEST_CASE("a perturbed input fails in both scans") {
  ScanConfig c;
  c.identities = {"euler", "miki", "fpz"};
  c.n_max = 8;
  const SequenceView bad = SequenceView().with_bernoulli_shift(6, 1);
  const std::vector<ScanTask> tasks = make_tasks(c);
  CHECK_FALSE(all_ok(scan_serial(tasks, bad)));
  CHECK(same_rows(scan_serial(tasks, bad), scan_parallel(tasks, 4, bad)));
}
