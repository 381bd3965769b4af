#include <sstream>

#include <json.hpp>

#include "hasym/asymptotics.hpp"

namespace hasym {

namespace {

using nlohmann::ordered_json;

double num(const Real& x) { return to_double(x); }

}  // namespace

std::string to_json(const RemainderReport& report) {
  ordered_json j;
  j["c"] = format_real(report.c);
  j["source"] = report.source;
  j["growth_limit"] = num(report.growth_limit);
  j["pass"] = report.pass;
  ordered_json summary = ordered_json::array();
  for (const auto& s : report.summary) {
    summary.push_back({{"n", s.n},
                       {"first_ratio", num(s.first_ratio)},
                       {"last_ratio", num(s.last_ratio)},
                       {"max_ratio", num(s.max_ratio)},
                       {"growth", num(s.growth)},
                       {"pass", s.pass}});
  }
  j["summary"] = summary;
  ordered_json rows = ordered_json::array();
  for (const auto& r : report.rows) {
    rows.push_back({{"n", r.n}, {"t", num(r.t)}, {"h_num", format_real(r.h)}, {"A_n", format_real(r.A)},
                    {"ratio", num(r.ratio)}});
  }
  j["rows"] = rows;
  return j.dump(2);
}

std::string to_csv(const RemainderReport& report) {
  std::ostringstream os;
  os << "n,t,h_num,A_n,ratio\n";
  for (const auto& r : report.rows) {
    os << r.n << ',' << format_real(r.t) << ',' << format_real(r.h) << ',' << format_real(r.A) << ','
       << format_real(r.ratio) << '\n';
  }
  return os.str();
}

std::string to_json(const LambertReport& report) {
  ordered_json j;
  j["n"] = report.n;
  j["growth_limit"] = num(report.growth_limit);
  j["growth"] = num(report.growth);
  j["max_residual"] = num(report.max_residual);
  j["pass"] = report.pass;
  ordered_json rows = ordered_json::array();
  for (const auto& r : report.rows) {
    rows.push_back({{"x", num(r.x)},
                    {"y_numeric", format_real(r.y_numeric)},
                    {"series", format_real(r.series)},
                    {"normalized", num(r.normalized)},
                    {"residual", num(r.residual)}});
  }
  j["rows"] = rows;
  return j.dump(2);
}

std::string to_csv(const LambertReport& report) {
  std::ostringstream os;
  os << "n,x,y_numeric,series,normalized,residual\n";
  for (const auto& r : report.rows) {
    os << report.n << ',' << format_real(r.x) << ',' << format_real(r.y_numeric) << ',' << format_real(r.series)
       << ',' << format_real(r.normalized) << ',' << format_real(r.residual) << '\n';
  }
  return os.str();
}

}  // namespace hasym
