#include "bernkit/cli.hpp"

#include "bernkit/errors.hpp"
#include "bernkit/float_check.hpp"
#include "bernkit/report.hpp"
#include "bernkit/scan.hpp"
#include "bernkit/sequences.hpp"
#include "bernkit/series.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>

namespace bernkit {

namespace {

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;

struct UsageError : Error {
  using Error::Error;
};

struct Options {
  std::string format = "plain";

  std::string seq_kind;
  int seq_n_max = 0;

  std::vector<std::string> identities;
  std::optional<int> n_min;
  std::optional<int> n_max;
  std::vector<std::string> p_strings;
  std::vector<double> float_p;
  std::optional<int> N;
  std::optional<int> jobs;
  std::optional<unsigned> perturb_b;

  std::string series_name;
  int series_order = 0;
  unsigned series_p = 0;

  std::string quad_name;
  std::vector<double> quad_x;
  double quad_p = 0;
};

int default_jobs() {
  const char *env = std::getenv("BERNKIT_JOBS");
  if (!env || !*env)
    return 0;
  char *end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 0)
    throw UsageError("BERNKIT_JOBS must be a non-negative integer");
  return static_cast<int>(v);
}

int cmd_seq(const Options &o, Format format, std::ostream &out) {
  if (o.seq_n_max < 0)
    throw UsageError("--n-max must be >= 0");
  std::vector<std::pair<std::string, std::string>> rows;
  const auto n_max = static_cast<std::size_t>(o.seq_n_max);
  for (std::size_t n = 0; n <= n_max; ++n) {
    std::string value;
    if (o.seq_kind == "bernoulli") {
      value = to_string(bernoulli(n));
    } else if (o.seq_kind == "bbar") {
      value = to_string(bernoulli_bar(n));
    } else if (o.seq_kind == "euler") {
      if (n % 2 == 1)
        continue;
      value = to_string(euler_number(n));
    } else if (o.seq_kind == "harmonic") {
      value = to_string(harmonic(n));
    } else {
      if (n == 0)
        continue;
      value = to_string(harmonic_second(n));
    }
    rows.emplace_back(std::to_string(n), value);
  }
  write_table(out, {"n", "value"}, rows, format);
  return kOk;
}

int cmd_series(const Options &o, Format format, std::ostream &out) {
  if (o.series_order < 0)
    throw UsageError("--order must be >= 0");
  const TruncatedSeries s = named_series(o.series_name, o.series_order, o.series_p);
  std::vector<std::pair<std::string, std::string>> rows;
  for (const auto &[m, c] : s.terms())
    rows.emplace_back(std::to_string(m), to_string(c));
  write_table(out, {"order", "coeff"}, rows, format);
  return kOk;
}

int cmd_quadcheck(const Options &o, Format format, std::ostream &out, std::ostream &err) {
  const bool zeta = o.quad_name == "zeta";
  const bool g2 = o.quad_name == "g_squared";
  if (!zeta && !g2) {
    const auto &names = quad_rep_names();
    if (std::find(names.begin(), names.end(), o.quad_name) == names.end())
      throw UnknownName("unknown representation '" + o.quad_name + "'");
  }
  std::vector<double> grid = o.quad_x;
  if (grid.empty())
    grid = zeta ? std::vector<double>{1, 2, 3, 4, 5, 6, 7, 8} : std::vector<double>{2, 5, 10};

  std::vector<QuadResult> rows;
  bool failed = false;
  for (double x : grid) {
    try {
      if (zeta)
        rows.push_back(check_zeta(static_cast<int>(x)));
      else if (g2)
        rows.push_back(check_g_squared(x));
      else
        rows.push_back(quad_rep(o.quad_name, x, o.quad_p));
    } catch (const QuadFailure &e) {
      err << "x=" << x << ": " << e.what() << '\n';
      failed = true;
    } catch (const DomainError &e) {
      err << "x=" << x << ": " << e.what() << '\n';
      failed = true;
    }
  }
  write_quad(out, rows, format);
  for (const QuadResult &r : rows)
    failed = failed || !r.ok;
  return failed ? kFailure : kOk;
}

int cmd_verify(const Options &o, Format format, std::ostream &out) {
  if (o.identities.empty())
    throw UsageError("at least one --identity is required");
  if (!o.n_max)
    throw UsageError("--n-max is required");
  const bool float_mode = !o.float_p.empty();
  if (float_mode && (!o.p_strings.empty() || o.perturb_b))
    throw UsageError("--float-p cannot be combined with --p or --perturb-b");
  if (o.N && *o.N < 2)
    throw UsageError("--N must be >= 2");

  ScanConfig config;
  config.n_min = o.n_min;
  config.n_max = *o.n_max;
  config.N = o.N;
  for (const std::string &id : o.identities) {
    const IdentityInfo &info = identity_info(id);
    if (float_mode && !info.needs_p)
      throw UsageError("--float-p applies to family identities only, not " + id);
    if (info.needs_p && !float_mode && o.p_strings.empty())
      throw UsageError(id + " needs --p or --float-p");
    if (info.needs_N && !o.N)
      throw UsageError(id + " needs --N");
    const int floor = info.needs_N ? std::max(info.n_floor, *o.N) : info.n_floor;
    const int lo = o.n_min.value_or(floor);
    if (config.n_max < lo)
      throw UsageError("--n-max " + std::to_string(config.n_max) + " is below " +
                       std::to_string(lo) + " for " + id);
    config.identities.push_back(id);
  }
  for (const std::string &s : o.p_strings) {
    try {
      config.p_values.push_back(parse_rational(s));
    } catch (const DomainError &) {
      throw UsageError("--p expects an exact rational such as 3/2, got '" + s + "'");
    }
  }

  if (float_mode) {
    std::vector<FloatFamilyReport> rows;
    for (const std::string &id : config.identities) {
      const Family which = id == "family-miki" ? Family::Miki
                           : id == "family-fpz" ? Family::Fpz
                                                : Family::Mixed;
      for (int n = config.n_min.value_or(2); n <= config.n_max; ++n)
        for (double p : o.float_p) {
          try {
            rows.push_back(family_float(which, n, p));
          } catch (const Error &e) {
            FloatFamilyReport r;
            r.identity = id;
            r.n = n;
            r.p = p;
            r.error = e.what();
            rows.push_back(r);
          }
        }
    }
    std::stable_sort(rows.begin(), rows.end(), [](const auto &a, const auto &b) {
      return std::tie(a.identity, a.n, a.p) < std::tie(b.identity, b.n, b.p);
    });
    write_float_family(out, rows, format);
    return std::all_of(rows.begin(), rows.end(), [](const auto &r) { return r.ok; }) ? kOk
                                                                                    : kFailure;
  }

  config.jobs = o.jobs ? *o.jobs : default_jobs();
  SequenceView seq;
  if (o.perturb_b)
    seq = seq.with_bernoulli_shift(*o.perturb_b, 1);

  const std::vector<ScanTask> tasks = make_tasks(config);
  std::vector<IdentityReport> rows =
      config.jobs == 1 ? scan_serial(tasks, seq) : scan_parallel(tasks, config.jobs, seq);
  sort_reports(rows);
  write_reports(out, rows, format);
  return all_ok(rows) ? kOk : kFailure;
}

} // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  Options o;
  CLI::App app{"Exact verification of Bernoulli and Euler number convolution identities",
               "bernkit"};
  app.require_subcommand(1);
  app.add_option("--format", o.format, "json, csv or plain")
      ->check(CLI::IsMember({"json", "csv", "plain"}));

  auto *seq = app.add_subcommand("seq", "Print a sequence table");
  seq->add_option("kind", o.seq_kind, "bernoulli, bbar, euler, harmonic or h2")
      ->required()
      ->check(CLI::IsMember({"bernoulli", "bbar", "euler", "harmonic", "h2"}));
  seq->add_option("--n-max", o.seq_n_max)->required();
  seq->add_option("--format", o.format)->check(CLI::IsMember({"json", "csv", "plain"}));

  auto *verify = app.add_subcommand("verify", "Verify identities over a range of n");
  verify->add_option("--identity", o.identities)->required();
  verify->add_option("--n-min", o.n_min);
  verify->add_option("--n-max", o.n_max)->required();
  verify->add_option("--p", o.p_strings, "exact rational, repeatable");
  verify->add_option("--float-p", o.float_p, "real p for float evaluation, repeatable");
  verify->add_option("--N", o.N, "fold count for multi-lhs");
  verify->add_option("--jobs", o.jobs, "worker threads (0: all)")->check(CLI::NonNegativeNumber);
  verify->add_option("--perturb-b", o.perturb_b, "add 1 to B at this index");
  verify->add_option("--format", o.format)->check(CLI::IsMember({"json", "csv", "plain"}));

  auto *series = app.add_subcommand("series", "Dump series coefficients");
  series->add_option("name", o.series_name)->required();
  series->add_option("--order", o.series_order)->required();
  series->add_option("--p", o.series_p, "derivative order");
  series->add_option("--format", o.format)->check(CLI::IsMember({"json", "csv", "plain"}));

  auto *quad = app.add_subcommand("quadcheck", "Check integral representations numerically");
  quad->add_option("name", o.quad_name, "psi_tilde, psi_bar, psi_tilde_p, psi_bar_p, g, zeta, g_squared")
      ->required();
  quad->add_option("--x", o.quad_x, "grid points (n for zeta), repeatable");
  quad->add_option("--p", o.quad_p);
  quad->add_option("--format", o.format)->check(CLI::IsMember({"json", "csv", "plain"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    const Format format = parse_format(o.format);
    if (seq->parsed())
      return cmd_seq(o, format, out);
    if (series->parsed())
      return cmd_series(o, format, out);
    if (quad->parsed())
      return cmd_quadcheck(o, format, out, err);
    return cmd_verify(o, format, out);
  } catch (const UsageError &e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const UnknownName &e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError &e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error &e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
}

} // namespace bernkit
