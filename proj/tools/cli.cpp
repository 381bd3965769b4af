#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hasym/asymptotics.hpp"
#include "hasym/errors.hpp"
#include "hasym/numerics.hpp"
#include "hasym/rational.hpp"
#include "hasym/recursions.hpp"
#include "hasym/serialization.hpp"

namespace hasym::cli {

namespace {

using nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Real parse_real(const std::string& text, const std::string& flag) {
  if (text.find('/') != std::string::npos) {
    try {
      return to_real(parse_rational(text));
    } catch (const std::exception&) {
      throw UsageError(flag + ": not a number: '" + text + "'");
    }
  }
  std::size_t used = 0;
  double probe = 0;
  try {
    probe = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || !std::isfinite(probe)) throw UsageError(flag + ": not a finite number: '" + text + "'");
  return Real(text);
}

std::vector<Real> parse_grid(const std::string& text, const std::string& flag) {
  std::vector<Real> grid;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    if (item.empty()) throw UsageError(flag + ": empty grid entry");
    grid.push_back(parse_real(item, flag));
  }
  if (grid.empty()) throw UsageError(flag + ": empty grid");
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (!(grid[i] > grid[i - 1])) throw UsageError(flag + ": grid must be strictly increasing");
  }
  return grid;
}

struct DataFlags {
  std::string t0 = "0", h0 = "1", h1 = "1";

  void add(CLI::App* app) {
    app->add_option("--t0", t0, "initial time")->capture_default_str();
    app->add_option("--h0", h0, "h(t0) > 0")->capture_default_str();
    app->add_option("--h1", h1, "h'(t0)")->capture_default_str();
  }

  InitialData get() const {
    InitialData d{parse_real(t0, "--t0"), parse_real(h0, "--h0"), parse_real(h1, "--h1")};
    if (!(d.h0 > 0)) throw UsageError("--h0 must be positive");
    return d;
  }
};

struct TolFlags {
  std::string rel, abs;

  void add(CLI::App* app, const std::string& rel_default, const std::string& abs_default) {
    rel = rel_default;
    abs = abs_default;
    app->add_option("--rel-tol", rel, "relative tolerance")->capture_default_str();
    app->add_option("--abs-tol", abs, "absolute tolerance")->capture_default_str();
  }

  SolverConfig get() const {
    SolverConfig cfg;
    cfg.rel_tol = parse_real(rel, "--rel-tol");
    cfg.abs_tol = parse_real(abs, "--abs-tol");
    if (!(cfg.rel_tol > 0) || !(cfg.abs_tol > 0)) throw UsageError("tolerances must be positive");
    // fixed-point inversion at the accuracy of the integration
    cfg.fixed_point_tol = std::max(cfg.rel_tol, Real(1e-30));
    return cfg;
  }
};

/// Writes `text` to the --out file if given, else to `out`.
void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot open output file '" + path + "'");
  f << text;
}

std::string rational_string(const Rational& q) { return q.get_str(); }

// ---- series ---------------------------------------------------------------

std::string series_text(const std::string& kind, int N, const std::string& format) {
  std::ostringstream os;
  if (kind == "alpha" || kind == "beta") {
    const std::vector<Rational> values = kind == "alpha" ? gen_alpha(N).values : gen_beta(N).values;
    if (format == "json") {
      ordered_json j;
      j["kind"] = kind;
      j["order"] = N;
      ordered_json arr = ordered_json::array();
      for (const auto& v : values) arr.push_back(rational_string(v));
      j["values"] = arr;
      os << j.dump(2) << '\n';
    } else if (format == "csv") {
      os << "k,value\n";
      for (std::size_t k = 0; k < values.size(); ++k) os << k << ',' << rational_string(values[k]) << '\n';
    } else {
      for (std::size_t k = 0; k < values.size(); ++k) {
        os << kind << '_' << k << " = " << rational_string(values[k]) << '\n';
      }
    }
    return os.str();
  }

  PolyFamily fam;
  std::string sym;
  if (kind == "p") {
    fam = gen_p(N);
    sym = "p";
  } else if (kind == "q") {
    fam = gen_q(N);
    sym = "q";
  } else {
    fam = gen_lambert_p(N);
    sym = "pt";
  }
  if (format == "json") {
    ordered_json j;
    j["kind"] = kind;
    j["order"] = N;
    ordered_json arr = ordered_json::array();
    for (int k = fam.first(); k <= fam.last(); ++k) {
      ordered_json e;
      e["index"] = k;
      e["display"] = to_display_string(fam.at(k));
      e["poly"] = to_json(fam.at(k));
      arr.push_back(e);
    }
    j["polys"] = arr;
    os << j.dump(2) << '\n';
  } else if (format == "csv") {
    os << "k,c_pow,z_pow,coefficient\n";
    for (int k = fam.first(); k <= fam.last(); ++k) {
      for (const auto& [key, v] : fam.at(k).terms()) {
        os << k << ',' << key.first << ',' << key.second << ',' << rational_string(v) << '\n';
      }
    }
  } else {
    for (int k = fam.first(); k <= fam.last(); ++k) {
      os << sym << '_' << k << " = " << to_display_string(fam.at(k)) << '\n';
    }
  }
  return os.str();
}

// ---- integrate ------------------------------------------------------------

std::string trajectory_json(const Trajectory& tr) {
  ordered_json j;
  const auto& st = tr.stats();
  j["accepted_steps"] = st.accepted;
  j["rejected_steps"] = st.rejected;
  j["rel_tol"] = format_real(st.rel_tol, 3);
  j["abs_tol"] = format_real(st.abs_tol, 3);
  ordered_json arr = ordered_json::array();
  for (const auto& s : tr.samples()) {
    arr.push_back({{"t", format_real(s.t)}, {"h", format_real(s.h)}, {"hprime", format_real(s.hp)}});
  }
  j["samples"] = arr;
  return j.dump(2) + '\n';
}

// ---- constant -------------------------------------------------------------

struct ConstantResult {
  bool have_quad = false, have_fit = false;
  Real quad = 0, fit = 0;
};

// ---- verify / lambert tables ----------------------------------------------

std::string remainder_table(const RemainderReport& rep) {
  std::ostringstream os;
  os << "c = " << format_real(rep.c, 20) << "  (" << rep.source << ")\n";
  os << std::left << std::setw(4) << "n" << std::setw(14) << "t" << std::setw(32) << "h" << std::setw(32) << "A_n"
     << "ratio\n";
  for (const auto& r : rep.rows) {
    os << std::setw(4) << r.n << std::setw(14) << format_real(r.t, 6) << std::setw(32) << format_real(r.h, 22)
       << std::setw(32) << format_real(r.A, 22) << format_real(r.ratio, 6) << '\n';
  }
  for (const auto& s : rep.summary) {
    os << "n = " << s.n << ": R(first) = " << format_real(s.first_ratio, 4) << ", R(last) = "
       << format_real(s.last_ratio, 4) << ", growth " << format_real(s.growth, 4) << (s.pass ? "  PASS" : "  FAIL")
       << '\n';
  }
  os << (rep.pass ? "PASS" : "FAIL") << '\n';
  return os.str();
}

std::string lambert_table(const std::vector<LambertReport>& reps) {
  std::ostringstream os;
  os << std::left << std::setw(4) << "n" << std::setw(14) << "x" << std::setw(42) << "y (numeric)" << std::setw(14)
     << "normalized" << "residual\n";
  for (const auto& rep : reps) {
    for (const auto& r : rep.rows) {
      os << std::setw(4) << rep.n << std::setw(14) << format_real(r.x, 6) << std::setw(42) << format_real(r.y_numeric, 34)
         << std::setw(14) << format_real(r.normalized, 5) << format_real(r.residual, 3) << '\n';
    }
    os << "n = " << rep.n << ": growth " << format_real(rep.growth, 4) << ", max residual "
       << format_real(rep.max_residual, 3) << (rep.pass ? "  PASS" : "  FAIL") << '\n';
  }
  return os.str();
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact coefficients, numerics and verification for the asymptotics of h^3 (h'' + h') = 1", "hasym"};
  app.require_subcommand(1);

  const std::vector<std::string> formats{"json", "csv", "paper-table"};

  // series
  auto* series = app.add_subcommand("series", "exact coefficients: alpha, beta, p, q or lambert");
  std::string series_kind;
  int series_order = 3;
  std::string series_format = "paper-table", series_out;
  series->add_option("kind", series_kind, "alpha | beta | p | q | lambert")
      ->required()
      ->check(CLI::IsMember({"alpha", "beta", "p", "q", "lambert"}));
  series->add_option("--order", series_order, "highest index N")->capture_default_str();
  series->add_option("--format", series_format)->check(CLI::IsMember(formats))->capture_default_str();
  series->add_option("--out", series_out, "output file");

  // integrate
  auto* integrate = app.add_subcommand("integrate", "integrate h^3 (h'' + h') = 1");
  DataFlags int_data;
  TolFlags int_tol;
  std::string int_tmax = "1e3", int_grid, int_format = "csv", int_out;
  int_data.add(integrate);
  int_tol.add(integrate, "1e-10", "1e-12");
  integrate->add_option("--t-max", int_tmax, "final time")->capture_default_str();
  integrate->add_option("--grid", int_grid, "only keep these output times (comma-separated)");
  integrate->add_option("--format", int_format)->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  integrate->add_option("--out", int_out, "output file");

  // constant
  auto* constant = app.add_subcommand("constant", "the constant c by quadrature, by fitting, or both");
  DataFlags c_data;
  TolFlags c_tol;
  std::string c_method = "both", c_tolerance = "1e-6", c_tfit = "1e3", c_format = "json", c_out;
  int c_order = 6;
  c_data.add(constant);
  c_tol.add(constant, "1e-14", "1e-16");
  constant->add_option("--method", c_method)->check(CLI::IsMember({"quadrature", "fit", "both"}))->capture_default_str();
  constant->add_option("--tol", c_tolerance, "largest admissible |c_quadrature - c_fit|")->capture_default_str();
  constant->add_option("--order", c_order, "expansion order used by the fit")->capture_default_str();
  constant->add_option("--t-fit", c_tfit, "fit time (absolute)")->capture_default_str();
  constant->add_option("--format", c_format)->check(CLI::IsMember(formats))->capture_default_str();
  constant->add_option("--out", c_out, "output file");

  // verify
  auto* verify = app.add_subcommand("verify", "normalized remainder study of the expansion of h");
  DataFlags v_data;
  TolFlags v_tol;
  std::string v_grid = "1e2,1e3,1e4,1e5,1e6", v_c, v_growth = "10", v_format = "json", v_out;
  int v_nmax = 3, v_synthetic = -1;
  v_data.add(verify);
  v_tol.add(verify, "1e-28", "1e-30");
  verify->add_option("--n-max", v_nmax, "largest expansion order studied")->capture_default_str();
  verify->add_option("--order", v_nmax, "alias of --n-max");
  verify->add_option("--grid", v_grid, "comma-separated times")->capture_default_str();
  verify->add_option("--synthetic", v_synthetic, "use h := A_N(c; t) instead of a trajectory");
  verify->add_option("--c", v_c, "constant c (default: computed by quadrature)");
  verify->add_option("--growth", v_growth, "largest admissible R(last)/R(first)")->capture_default_str();
  verify->add_option("--format", v_format)->check(CLI::IsMember(formats))->capture_default_str();
  verify->add_option("--out", v_out, "output file");

  // lambert
  auto* lambert = app.add_subcommand("lambert", "larger root of y - ln y = x versus its expansion");
  int l_order = 3;
  std::string l_grid = "10,1e2,1e3,1e4,1e5", l_format = "json", l_out;
  lambert->add_option("--order", l_order, "orders 0..N are compared")->capture_default_str();
  lambert->add_option("--grid", l_grid, "comma-separated x > 1")->capture_default_str();
  lambert->add_option("--format", l_format)->check(CLI::IsMember(formats))->capture_default_str();
  lambert->add_option("--out", l_out, "output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    if (series->parsed()) {
      if (series_order < 0 || (series_kind == "q" && series_order < 1)) {
        throw UsageError("--order must be >= 0 (>= 1 for q)");
      }
      emit(series_out, series_text(series_kind, series_order, series_format), out);
      return kSuccess;
    }

    if (integrate->parsed()) {
      const InitialData data = int_data.get();
      const SolverConfig cfg = int_tol.get();
      const Real t_max = parse_real(int_tmax, "--t-max");
      if (!(t_max > data.t0)) throw UsageError("--t-max must exceed --t0");
      IntegrateOptions io;
      if (!int_grid.empty()) {
        io.output_times = parse_grid(int_grid, "--grid");
        io.keep_steps = false;
      }
      Trajectory tr;
      try {
        tr = integrate_h(data, t_max, cfg, io);
      } catch (const IntegrationError& e) {
        err << "integration failed: " << e.what() << '\n';
        return kVerificationFailure;
      }
      emit(int_out, int_format == "csv" ? tr.to_csv() : trajectory_json(tr), out);
      const auto& last = tr.samples().back();
      std::ostream& summary = int_out.empty() ? err : out;
      summary << "final t = " << format_real(last.t) << ", h = " << format_real(last.h)
              << ", h' = " << format_real(last.hp) << ", steps = " << tr.stats().accepted << '\n';
      return kSuccess;
    }

    if (constant->parsed()) {
      const InitialData data = c_data.get();
      const SolverConfig cfg = c_tol.get();
      const Real tol = parse_real(c_tolerance, "--tol");
      const Real t_fit = parse_real(c_tfit, "--t-fit");
      if (c_order < 1) throw UsageError("--order must be >= 1");
      if (!(t_fit > data.t0 + 1) || !(t_fit > 1)) throw UsageError("--t-fit must exceed max(1, t0 + 1)");
      ConstantResult r;
      if (c_method != "fit") {
        r.quad = compute_c(data, cfg).c;
        r.have_quad = true;
      }
      if (c_method != "quadrature") {
        IntegrateOptions io;
        io.output_times = {t_fit};
        io.keep_steps = false;
        const Trajectory tr = integrate_h(data, t_fit, cfg, io);
        r.fit = fit_c_from_trajectory(tr, c_order, t_fit);
        r.have_fit = true;
      }
      const bool both = r.have_quad && r.have_fit;
      const Real delta = both ? Real(abs(r.quad - r.fit)) : Real(0);
      const bool ok = !both || delta <= tol;
      std::ostringstream os;
      if (c_format == "json") {
        ordered_json j;
        if (r.have_quad) j["c_quadrature"] = format_real(r.quad, 30);
        if (r.have_fit) j["c_fit"] = format_real(r.fit, 30);
        if (both) {
          j["discrepancy"] = format_real(delta, 6);
          j["tolerance"] = format_real(tol, 6);
          j["agree"] = ok;
        }
        os << j.dump(2) << '\n';
      } else if (c_format == "csv") {
        os << "method,c\n";
        if (r.have_quad) os << "quadrature," << format_real(r.quad, 30) << '\n';
        if (r.have_fit) os << "fit," << format_real(r.fit, 30) << '\n';
      } else {
        if (r.have_quad) os << "c (quadrature) = " << format_real(r.quad, 30) << '\n';
        if (r.have_fit) os << "c (fit)        = " << format_real(r.fit, 30) << '\n';
        if (both) os << "|difference|   = " << format_real(delta, 6) << (ok ? "" : "  exceeds --tol") << '\n';
      }
      emit(c_out, os.str(), out);
      if (!ok) {
        err << "quadrature and fit disagree by " << format_real(delta, 6) << '\n';
        return kVerificationFailure;
      }
      return kSuccess;
    }

    if (verify->parsed()) {
      if (v_nmax < 0) throw UsageError("--n-max must be non-negative");
      const std::vector<Real> grid = parse_grid(v_grid, "--grid");
      if (!(grid.front() > 1)) throw UsageError("--grid entries must exceed 1");
      const InitialData data = v_data.get();
      const SolverConfig cfg = v_tol.get();
      StudyOptions so;
      so.growth_limit = parse_real(v_growth, "--growth");
      const Real c = v_c.empty() ? compute_c(data, cfg).c : parse_real(v_c, "--c");
      const int order = std::max(v_nmax, v_synthetic);
      const AsymptoticModel model(c, std::max(order, 1));
      HSamples samples;
      if (v_synthetic >= 0) {
        samples = sample_synthetic(model, v_synthetic, grid);
      } else {
        if (!(grid.front() > data.t0)) throw UsageError("--grid must lie beyond --t0");
        IntegrateOptions io;
        io.output_times = grid;
        io.keep_steps = false;
        const Trajectory tr = integrate_h(data, grid.back(), cfg, io);
        samples = sample_trajectory(tr, grid);
      }
      RemainderReport rep;
      try {
        rep = remainder_study(model, samples, v_nmax, so);
      } catch (const AccuracyError& e) {
        err << "accuracy gating: " << e.what() << '\n';
        return kAccuracyGating;
      }
      emit(v_out,
           v_format == "json" ? to_json(rep) + "\n" : v_format == "csv" ? to_csv(rep) : remainder_table(rep), out);
      return rep.pass ? kSuccess : kVerificationFailure;
    }

    if (lambert->parsed()) {
      if (l_order < 0) throw UsageError("--order must be non-negative");
      const std::vector<Real> grid = parse_grid(l_grid, "--grid");
      if (!(grid.front() > 1)) throw UsageError("--grid entries must exceed 1");
      std::vector<LambertReport> reps;
      for (int n = 0; n <= l_order; ++n) reps.push_back(lambert_compare(n, grid));
      const bool pass = std::all_of(reps.begin(), reps.end(), [](const LambertReport& r) { return r.pass; });
      std::string text;
      if (l_format == "json") {
        ordered_json j = ordered_json::array();
        for (const auto& r : reps) j.push_back(ordered_json::parse(to_json(r)));
        text = j.dump(2) + "\n";
      } else if (l_format == "csv") {
        for (std::size_t i = 0; i < reps.size(); ++i) {
          std::string part = to_csv(reps[i]);
          if (i > 0) part = part.substr(part.find('\n') + 1);
          text += part;
        }
      } else {
        text = lambert_table(reps);
      }
      emit(l_out, text, out);
      return pass ? kSuccess : kVerificationFailure;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const DomainError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const AccuracyError& e) {
    err << "accuracy error: " << e.what() << '\n';
    return kAccuracyGating;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kVerificationFailure;
  }
  return kUsageError;
}

}  // namespace hasym::cli
