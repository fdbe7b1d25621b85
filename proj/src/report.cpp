#include "bernkit/report.hpp"

#include "bernkit/errors.hpp"

#include <iomanip>
#include <sstream>

namespace bernkit {

using nlohmann::json;

Format parse_format(std::string_view text) {
  if (text == "json")
    return Format::Json;
  if (text == "csv")
    return Format::Csv;
  if (text == "plain")
    return Format::Plain;
  throw UnknownName("unknown format '" + std::string(text) + "'");
}

json to_json(const IdentityReport &r) {
  json j;
  j["identity"] = r.identity;
  j["n"] = r.n;
  if (r.p)
    j["p"] = to_string(*r.p);
  if (r.N)
    j["N"] = *r.N;
  j["lhs"] = to_string(r.lhs);
  j["rhs"] = to_string(r.rhs);
  j["residual"] = to_string(r.residual);
  j["ok"] = r.ok;
  if (r.gamma_exponents)
    j["gamma"] = {r.gamma_exponents->first, r.gamma_exponents->second};
  if (!r.error.empty())
    j["error"] = r.error;
  return j;
}

json to_json(const QuadResult &r) {
  return {{"name", r.name}, {"x", r.x},           {"p", r.p},  {"value", r.value},
          {"target", r.target}, {"abs_dev", r.abs_dev}, {"ok", r.ok}};
}

json to_json(const FloatFamilyReport &r) {
  json j = {{"identity", r.identity},
            {"n", r.n},
            {"p", r.p},
            {"lhs", static_cast<double>(r.lhs)},
            {"rhs", static_cast<double>(r.rhs)},
            {"residual", static_cast<double>(r.residual)},
            {"ok", r.ok}};
  if (!r.error.empty())
    j["error"] = r.error;
  return j;
}

IdentityReport identity_report_from_json(const json &j) {
  IdentityReport r;
  r.identity = j.at("identity").get<std::string>();
  r.n = j.at("n").get<int>();
  if (j.contains("p"))
    r.p = parse_rational(j["p"].get<std::string>());
  if (j.contains("N"))
    r.N = j["N"].get<int>();
  r.lhs = parse_rational(j.at("lhs").get<std::string>());
  r.rhs = parse_rational(j.at("rhs").get<std::string>());
  r.residual = parse_rational(j.at("residual").get<std::string>());
  r.ok = j.at("ok").get<bool>();
  if (j.contains("gamma"))
    r.gamma_exponents = std::make_pair(j["gamma"][0].get<int>(), j["gamma"][1].get<int>());
  if (j.contains("error"))
    r.error = j["error"].get<std::string>();
  return r;
}

namespace {

template <class Row>
void write_json_array(std::ostream &out, const std::vector<Row> &rows) {
  out << "[";
  for (std::size_t i = 0; i < rows.size(); ++i)
    out << (i ? ",\n " : "\n ") << to_json(rows[i]).dump();
  out << (rows.empty() ? "]\n" : "\n]\n");
}

std::string fmt_double(double v) {
  std::ostringstream s;
  s << std::setprecision(17) << v;
  return s.str();
}

// Quotes a CSV field when it contains a separator or quote.
std::string csv_field(const std::string &s) {
  if (s.find_first_of(",\"\n") == std::string::npos)
    return s;
  std::string q = "\"";
  for (char c : s)
    q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

} // namespace

void write_reports(std::ostream &out, const std::vector<IdentityReport> &rows, Format format) {
  switch (format) {
  case Format::Json:
    write_json_array(out, rows);
    break;
  case Format::Csv:
    out << "identity,n,p,lhs,rhs,residual,ok\n";
    for (const IdentityReport &r : rows)
      out << r.identity << ',' << r.n << ',' << (r.p ? to_string(*r.p) : "") << ','
          << to_string(r.lhs) << ',' << to_string(r.rhs) << ',' << to_string(r.residual) << ','
          << (r.ok ? "true" : "false") << '\n';
    break;
  case Format::Plain:
    for (const IdentityReport &r : rows) {
      out << r.identity << " n=" << r.n;
      if (r.p)
        out << " p=" << to_string(*r.p);
      if (r.N)
        out << " N=" << *r.N;
      if (!r.error.empty()) {
        out << " ERROR " << r.error << '\n';
        continue;
      }
      out << " lhs=" << to_string(r.lhs) << " rhs=" << to_string(r.rhs)
          << " residual=" << to_string(r.residual) << (r.ok ? " ok" : " FAIL") << '\n';
    }
    break;
  }
}

void write_quad(std::ostream &out, const std::vector<QuadResult> &rows, Format format) {
  switch (format) {
  case Format::Json:
    write_json_array(out, rows);
    break;
  case Format::Csv:
    out << "name,x,p,value,target,abs_dev,ok\n";
    for (const QuadResult &r : rows)
      out << r.name << ',' << fmt_double(r.x) << ',' << fmt_double(r.p) << ','
          << fmt_double(r.value) << ',' << fmt_double(r.target) << ',' << fmt_double(r.abs_dev)
          << ',' << (r.ok ? "true" : "false") << '\n';
    break;
  case Format::Plain:
    for (const QuadResult &r : rows)
      out << r.name << " x=" << r.x << " p=" << r.p << " value=" << fmt_double(r.value)
          << " target=" << fmt_double(r.target) << " abs_dev=" << r.abs_dev
          << (r.ok ? " ok" : " FAIL") << '\n';
    break;
  }
}

void write_float_family(std::ostream &out, const std::vector<FloatFamilyReport> &rows,
                        Format format) {
  switch (format) {
  case Format::Json:
    write_json_array(out, rows);
    break;
  case Format::Csv:
    out << "identity,n,p,lhs,rhs,residual,ok\n";
    for (const FloatFamilyReport &r : rows)
      out << r.identity << ',' << r.n << ',' << fmt_double(r.p) << ','
          << fmt_double(static_cast<double>(r.lhs)) << ','
          << fmt_double(static_cast<double>(r.rhs)) << ','
          << fmt_double(static_cast<double>(r.residual)) << ',' << (r.ok ? "true" : "false")
          << '\n';
    break;
  case Format::Plain:
    for (const FloatFamilyReport &r : rows) {
      out << r.identity << " n=" << r.n << " p=" << r.p;
      if (!r.error.empty()) {
        out << " ERROR " << r.error << '\n';
        continue;
      }
      out << " lhs=" << fmt_double(static_cast<double>(r.lhs))
          << " rhs=" << fmt_double(static_cast<double>(r.rhs))
          << " residual=" << static_cast<double>(r.residual) << (r.ok ? " ok" : " FAIL") << '\n';
    }
    break;
  }
}

void write_table(std::ostream &out, const std::pair<std::string, std::string> &columns,
                 const std::vector<std::pair<std::string, std::string>> &rows, Format format) {
  switch (format) {
  case Format::Json: {
    json arr = json::array();
    for (const auto &[a, b] : rows)
      arr.push_back({{columns.first, a}, {columns.second, b}});
    out << arr.dump() << '\n';
    break;
  }
  case Format::Csv:
    out << columns.first << ',' << columns.second << '\n';
    for (const auto &[a, b] : rows)
      out << csv_field(a) << ',' << csv_field(b) << '\n';
    break;
  case Format::Plain:
    for (const auto &[a, b] : rows)
      out << a << '\t' << b << '\n';
    break;
  }
}

} // namespace bernkit
