// Copyright 2026 The multigamma Authors.
// SPDX-License-Identifier: Apache-2.0
//
// multigamma: evaluate log G_n(z+1), its q-analogue, identity suites,
// q-limit tables and constants.
//
// Exit codes: 0 success, 1 numeric failure (error estimate above --tol or
// a failing suite), 2 usage or domain error.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "multigamma/multigamma.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNumeric = 1;
constexpr int kExitUsage = 2;

struct Options {
  bool json = true;
  bool timing = true;
  double tol = 1e-9;
};

std::string number(double x) {
  if (!std::isfinite(x)) return "null";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string csv_number(double x) {
  if (!std::isfinite(x)) return "";
  return number(x);
}

std::string quoted(const std::string& s) { return nlohmann::json(s).dump(); }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

// One output line: ordered (key, already-formatted json value, csv text).
class Record {
 public:
  Record& num(const std::string& key, double v) {
    fields_.push_back({key, number(v), csv_number(v)});
    return *this;
  }
  Record& integer(const std::string& key, long v) {
    fields_.push_back({key, std::to_string(v), std::to_string(v)});
    return *this;
  }
  Record& str(const std::string& key, const std::string& v) {
    fields_.push_back({key, quoted(v), csv_field(v)});
    return *this;
  }
  Record& boolean(const std::string& key, bool v) {
    fields_.push_back({key, v ? "true" : "false", v ? "true" : "false"});
    return *this;
  }
  Record& empty(const std::string& key) {
    fields_.push_back({key, "", ""});
    return *this;
  }

  std::string json() const {
    std::string out = "{";
    bool first = true;
    for (const auto& f : fields_) {
      if (f.json.empty()) continue;
      if (!first) out += ',';
      first = false;
      out += quoted(f.key) + ':' + f.json;
    }
    return out + '}';
  }
  std::string header() const {
    std::string out;
    for (std::size_t i = 0; i < fields_.size(); ++i) out += (i ? "," : "") + fields_[i].key;
    return out;
  }
  std::string csv() const {
    std::string out;
    for (std::size_t i = 0; i < fields_.size(); ++i) out += (i ? "," : "") + fields_[i].csv;
    return out;
  }

 private:
  struct Field {
    std::string key, json, csv;
  };
  std::vector<Field> fields_;
};

void emit(const Options& opt, const std::vector<Record>& records) {
  if (opt.json) {
    for (const auto& r : records) std::cout << r.json() << '\n';
    return;
  }
  if (records.empty()) return;
  std::cout << records.front().header() << '\n';
  for (const auto& r : records) std::cout << r.csv() << '\n';
}

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double ms() const { return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count(); }
};

void add_timing(const Options& opt, Record& r, const Timer& t) {
  if (opt.timing) {
    r.num("time_ms", t.ms());
  } else {
    r.empty("time_ms");
  }
}

class Context {
 public:
  Context() {
    if (mg_context_create(&ctx_) != MG_OK) throw std::runtime_error("cannot create context");
  }
  ~Context() { mg_context_destroy(ctx_); }
  Context(const Context&) = delete;
  Context& operator=(const Context&) = delete;
  mg_context* get() const { return ctx_; }

 private:
  mg_context* ctx_ = nullptr;
};

int fail(const Context& ctx, mg_status s) {
  const std::string msg = mg_last_error(ctx.get());
  std::cerr << "error: " << (msg.empty() ? mg_status_string(s) : msg) << '\n';
  return (s == MG_ERR_NUMERIC || s == MG_ERR_INTERNAL) ? kExitNumeric : kExitUsage;
}

// "a", "a+bi", "a-bi", "bi" with decimal literals.
std::optional<std::pair<double, double>> parse_complex(const std::string& text) {
  static const std::string num = R"(([+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?))";
  static const std::regex real_re("^" + num + "$");
  static const std::regex imag_re("^" + num + "i$");
  static const std::regex full_re("^" + num + R"(([+-](?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)i$)");
  std::smatch m;
  if (std::regex_match(text, m, real_re)) return std::pair{std::stod(m[1]), 0.0};
  if (std::regex_match(text, m, imag_re)) return std::pair{0.0, std::stod(m[1])};
  if (std::regex_match(text, m, full_re)) return std::pair{std::stod(m[1]), std::stod(m[2])};
  return std::nullopt;
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    const double v = std::stod(item, &used);
    if (used != item.size()) throw std::invalid_argument("bad number '" + item + "'");
    out.push_back(v);
  }
  return out;
}

int route_from_name(const std::string& name) {
  if (name == "auto") return MG_ROUTE_AUTO;
  if (name == "em") return MG_ROUTE_EM;
  if (name == "asym") return MG_ROUTE_ASYMPTOTIC;
  if (name == "product" || name == "weierstrass") return MG_ROUTE_PRODUCT;
  return -100;
}

struct EvalArgs {
  int n = 1;
  std::string z;
  std::string route = "auto";
  long truncation = 0;
};

int cmd_eval(const Options& opt, const EvalArgs& a) {
  const auto z = parse_complex(a.z);
  if (!z) {
    std::cerr << "error: cannot parse z='" << a.z << "' (expected a, a+bi or bi)\n";
    return kExitUsage;
  }
  Context ctx;
  mg_context_set_tolerance(ctx.get(), opt.tol);
  Timer t;
  mg_value v{};
  const mg_status s = mg_eval(ctx.get(), a.n, z->first, z->second, route_from_name(a.route), a.truncation, &v);
  if (s != MG_OK) return fail(ctx, s);
  const bool complex_input = z->second != 0.0;
  Record r;
  r.str("command", "eval").integer("n", a.n).num("z", z->first);
  if (complex_input) {
    r.num("z_im", z->second);
  } else {
    r.empty("z_im");
  }
  r.empty("q").str("route", mg_route_name(v.route)).integer("truncation", a.truncation).num("value", v.re);
  if (complex_input) {
    r.num("value_im", v.im);
  } else {
    r.empty("value_im");
  }
  r.num("error_estimate", v.error_estimate);
  add_timing(opt, r, t);
  emit(opt, {r});
  return v.error_estimate > opt.tol ? kExitNumeric : kExitOk;
}

struct QEvalArgs {
  int n = 1;
  double z = 0;
  double q = 0.5;
  std::string route = "auto";
  long K = 0;
  int m = 0;
};

int cmd_qeval(const Options& opt, const QEvalArgs& a) {
  int route = route_from_name(a.route);
  if (route == MG_ROUTE_ASYMPTOTIC) route = -100;
  Context ctx;
  Timer t;
  mg_value v{};
  const mg_status s = mg_qeval(ctx.get(), a.n, a.z, a.q, route, a.K, a.m, &v);
  if (s != MG_OK) return fail(ctx, s);
  Record r;
  r.str("command", "qeval").integer("n", a.n).num("z", a.z).empty("z_im").num("q", a.q);
  r.str("route", mg_route_name(v.route)).integer("truncation", route == MG_ROUTE_EM ? a.m : a.K);
  r.num("value", v.re).empty("value_im").num("error_estimate", v.error_estimate);
  add_timing(opt, r, t);
  emit(opt, {r});
  return v.error_estimate > opt.tol ? kExitNumeric : kExitOk;
}

int cmd_check(const Options& opt, const std::string& suite, double tol) {
  Context ctx;
  Timer t;
  mg_report* report = nullptr;
  const mg_status s = mg_check_run(ctx.get(), suite.c_str(), tol, &report);
  if (s != MG_OK) return fail(ctx, s);
  std::vector<Record> records;
  for (std::size_t i = 0; i < mg_report_size(report); ++i) {
    mg_check_case c{};
    mg_report_case(report, i, &c);
    Record r;
    r.str("suite", suite).str("label", c.label).num("residual", c.residual).num("tolerance", c.tolerance);
    r.boolean("passed", c.passed != 0);
    records.push_back(r);
  }
  const bool passed = mg_report_passed(report) != 0;
  Record summary;
  summary.str("suite", suite).str("label", "summary").num("residual", mg_report_max_residual(report));
  summary.empty("tolerance").boolean("passed", passed);
  records.push_back(summary);
  mg_report_destroy(report);
  emit(opt, records);
  if (opt.timing) std::cerr << suite << ": " << (passed ? "pass" : "FAIL") << " in " << t.ms() << " ms\n";
  return passed ? kExitOk : kExitNumeric;
}

struct TableArgs {
  std::string kind;
  int n = 2;
  double z = 1.5;
  std::string q_list;
  std::string z_list;
  int R = 2;
};

int cmd_table(Options opt, const TableArgs& a) {
  std::vector<double> grid;
  try {
    grid = parse_list(a.kind == "qlimit" ? a.q_list : a.z_list);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  if (grid.empty()) {
    std::cerr << "error: table --kind " << a.kind << " needs a non-empty " << (a.kind == "qlimit" ? "--q-list" : "--z-list")
              << '\n';
    return kExitUsage;
  }
  Context ctx;
  std::vector<Record> records;
  if (a.kind == "qlimit") {
    mg_value ref{};
    mg_status s = mg_eval(ctx.get(), a.n, a.z, 0.0, MG_ROUTE_AUTO, 0, &ref);
    if (s != MG_OK) return fail(ctx, s);
    for (double q : grid) {
      mg_value v{};
      s = mg_qeval(ctx.get(), a.n, a.z, q, MG_ROUTE_AUTO, 0, 0, &v);
      if (s != MG_OK) return fail(ctx, s);
      Record r;
      r.integer("n", a.n).num("z", a.z).num("q", q).str("route", mg_route_name(v.route));
      r.num("q_value", v.re).num("classical_value", ref.re).num("error", std::fabs(v.re - ref.re));
      records.push_back(r);
    }
  } else {
    for (double z : grid) {
      mg_value asym{}, ref{};
      mg_status s = mg_eval(ctx.get(), a.n, z, 0.0, MG_ROUTE_ASYMPTOTIC, a.R, &asym);
      if (s != MG_OK) return fail(ctx, s);
      s = mg_eval(ctx.get(), a.n, z, 0.0, MG_ROUTE_AUTO, 0, &ref);
      if (s != MG_OK) return fail(ctx, s);
      Record r;
      r.integer("n", a.n).num("z", z).integer("R", a.R);
      r.num("asymptotic_value", asym.re).num("reference_value", ref.re).num("error", std::fabs(asym.re - ref.re));
      records.push_back(r);
    }
  }
  emit(opt, records);
  return kExitOk;
}

struct ConstantsArgs {
  int j_max = 2;
  bool product_check = false;
  long K = 100000;
};

int cmd_constants(const Options& opt, const ConstantsArgs& a) {
  Context ctx;
  std::vector<Record> records;
  auto add = [&](const std::string& name, int j, double value, std::optional<double> residual) {
    Record r;
    r.str("name", name);
    if (j >= 0) {
      r.integer("j", j);
    } else {
      r.empty("j");
    }
    r.num("value", value);
    if (residual) {
      r.num("residual", *residual);
    } else {
      r.empty("residual");
    }
    records.push_back(r);
  };
  double gamma = 0, log_a = 0;
  mg_euler_gamma(&gamma);
  mg_kinkelin_log(&log_a);
  add("euler_gamma", -1, gamma, std::nullopt);
  std::vector<double> zp;
  for (int j = 0; j <= a.j_max; ++j) {
    double v = 0;
    const mg_status s = mg_zeta_prime(ctx.get(), j, &v);
    if (s != MG_OK) return fail(ctx, s);
    zp.push_back(v);
    add("zeta_prime_neg", j, v, std::nullopt);
  }
  for (int j = 0; j <= a.j_max; ++j) {
    double v = 0;
    const mg_status s = mg_cj_constant(ctx.get(), j, &v);
    if (s != MG_OK) return fail(ctx, s);
    add("c_constant", j, v, std::nullopt);
  }
  // log A + zeta'(-1) - 1/12 vanishes; zeta'(0) + log sqrt(2 pi) likewise.
  double zp1 = 0;
  mg_zeta_prime(ctx.get(), 1, &zp1);
  add("kinkelin_log", -1, log_a, log_a + zp1 - 1.0 / 12);
  bool ok = true;
  if (a.product_check) {
    for (int j = 0; j <= a.j_max; ++j) {
      mg_value v{};
      const mg_status s = mg_zeta_prime_product(ctx.get(), j, a.K, &v);
      if (s != MG_OK) return fail(ctx, s);
      const double residual = std::fabs(v.re - zp[static_cast<std::size_t>(j)]);
      ok = ok && residual < 1e-3;
      add("zeta_prime_product", j, v.re, residual);
    }
  }
  emit(opt, records);
  return ok ? kExitOk : kExitNumeric;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multiple gamma functions G_n(z+1), their q-analogues and identity checks."};
  app.require_subcommand(1);
  Options opt;
  if (const char* env = std::getenv("MULTIGAMMA_TOL")) {
    try {
      opt.tol = std::stod(env);
    } catch (const std::exception&) {
      std::cerr << "error: MULTIGAMMA_TOL='" << env << "' is not a number\n";
      return kExitUsage;
    }
  }
  bool csv = false;
  bool no_timing = false;
  auto common = [&](CLI::App* sub) {
    sub->add_flag("--json", "JSON lines output (default)");
    sub->add_flag("--csv", csv, "CSV output with a header row");
    sub->add_flag("--no-timing", no_timing, "leave the time_ms field empty");
    sub->add_option("--tol", opt.tol, "tolerance (default 1e-9, or MULTIGAMMA_TOL)");
  };

  EvalArgs ev;
  CLI::App* eval = app.add_subcommand("eval", "log G_n(z+1)");
  eval->footer(
      "CSV columns: command,n,z,z_im,q,route,truncation,value,value_im,error_estimate,time_ms");
  eval->add_option("--n", ev.n, "level n >= 0")->required();
  eval->add_option("--z", ev.z, "argument: a, a+bi or bi")->required();
  eval->add_option("--route", ev.route, "auto|em|asym|product")->check(CLI::IsMember({"auto", "em", "asym", "product", "weierstrass"}));
  eval->add_option("--truncation", ev.truncation, "m (em), R (asym) or K (product); 0 picks a default");
  common(eval);

  QEvalArgs qv;
  CLI::App* qeval = app.add_subcommand("qeval", "log G_n(z+1; q)");
  qeval->footer("CSV columns: command,n,z,z_im,q,route,truncation,value,value_im,error_estimate,time_ms");
  qeval->add_option("--n", qv.n, "level n >= 0")->required();
  qeval->add_option("--z", qv.z, "real argument > -1")->required();
  qeval->add_option("--q", qv.q, "0 < q < 1")->required();
  qeval->add_option("--route", qv.route, "auto|product|em")->check(CLI::IsMember({"auto", "product", "em"}));
  qeval->add_option("--K", qv.K, "product factors (0: automatic)");
  qeval->add_option("--m", qv.m, "expansion order (0: n+4)");
  common(qeval);

  std::string suite;
  double suite_tol = 0;
  CLI::App* check = app.add_subcommand("check", "run an identity suite");
  check->footer("Suites: functional-eq, routes, limits, coefficients, constants.\nCSV columns: suite,label,residual,tolerance,passed");
  check->add_option("--suite", suite, "suite name")->required();
  check->add_flag("--json", "JSON lines output (default)");
  check->add_flag("--csv", csv, "CSV output with a header row");
  check->add_flag("--no-timing", no_timing, "omit the timing note on stderr");
  check->add_option("--tol", suite_tol, "functional-equation tolerance (default 1e-8)");

  TableArgs tb;
  CLI::App* table = app.add_subcommand("table", "convergence tables (CSV)");
  table->footer(
      "CSV columns for qlimit: n,z,q,route,q_value,classical_value,error\n"
      "CSV columns for stirling-error: n,z,R,asymptotic_value,reference_value,error");
  table->add_option("--kind", tb.kind, "qlimit|stirling-error")->required()->check(CLI::IsMember({"qlimit", "stirling-error"}));
  table->add_option("--n", tb.n, "level");
  table->add_option("--z", tb.z, "argument for qlimit");
  table->add_option("--q-list", tb.q_list, "comma separated q values");
  table->add_option("--z-list", tb.z_list, "comma separated z values");
  table->add_option("--R", tb.R, "asymptotic rows for stirling-error (default 2)");
  bool table_json = false;
  table->add_flag("--json", table_json, "JSON lines instead of CSV");
  table->add_flag("--no-timing", no_timing, "accepted for uniformity; tables carry no timing");

  ConstantsArgs cs;
  CLI::App* constants = app.add_subcommand("constants", "gamma, zeta'(-j), C_j, log A");
  constants->footer("CSV columns: name,j,value,residual");
  constants->add_option("--j-max", cs.j_max, "largest j (<= 8)");
  constants->add_flag("--with-product-check", cs.product_check, "add product residuals for zeta'(-j)");
  constants->add_option("--K", cs.K, "product factors (default 100000)");
  constants->add_flag("--json", "JSON lines output (default)");
  constants->add_flag("--csv", csv, "CSV output with a header row");
  constants->add_flag("--no-timing", no_timing, "accepted for uniformity; no timing is reported");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }
  opt.json = !csv;
  opt.timing = !no_timing;
  if (!(opt.tol > 0)) {
    std::cerr << "error: tolerance must be positive\n";
    return kExitUsage;
  }
  try {
    if (*eval) return cmd_eval(opt, ev);
    if (*qeval) return cmd_qeval(opt, qv);
    if (*check) return cmd_check(opt, suite, suite_tol);
    if (*table) {
      Options t = opt;
      t.json = table_json;
      return cmd_table(t, tb);
    }
    if (*constants) return cmd_constants(opt, cs);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNumeric;
  }
  return kExitUsage;
}
