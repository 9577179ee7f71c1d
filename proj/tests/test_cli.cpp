// Copyright 2026 The multigamma Authors.
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

// stderr is folded into out when merge is set.
Run run(const std::string& args, bool merge = false, const std::string& env = "") {
  const std::string cmd = env + " '" MULTIGAMMA_CLI_PATH "' " + args + (merge ? " 2>&1" : " 2>/dev/null");
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[4096];
  std::size_t got = 0;
  while ((got = std::fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, got);
  const int st = pclose(p);
  r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> v;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) v.push_back(l);
  return v;
}

nlohmann::json first(const Run& r) {
  const auto ls = lines(r.out);
  REQUIRE(!ls.empty());
  return nlohmann::json::parse(ls.front());
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> v;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, ',')) v.push_back(cell);
  if (!line.empty() && line.back() == ',') v.emplace_back();
  return v;
}

}  // namespace

TEST_CASE("eval examples") {
  Run r = run("eval --n 2 --z 3 --no-timing");
  CHECK(r.code == 0);
  CHECK(std::fabs(first(r)["value"].get<double>() - std::log(2.0)) < 1e-12);

  r = run("eval --n 1 --z 0 --no-timing");
  CHECK(r.code == 0);
  CHECK(std::fabs(first(r)["value"].get<double>()) < 1e-15);

  r = run("eval --n 3 --z -1", true);
  CHECK(r.code == 2);
  CHECK(r.out.find("pole at z=-1") != std::string::npos);

  r = run("eval --n 1 --z 0+1i --no-timing");
  REQUIRE(r.code == 0);
  const auto j = first(r);
  CHECK(std::fabs(2 * j["value"].get<double>() - std::log(M_PI / std::sinh(M_PI))) < 1e-12);
  CHECK(j.contains("value_im"));

  r = run("eval --n 1 --z 4 --route em --truncation 6 --no-timing");
  CHECK(r.code == 0);
  CHECK(first(r)["route"] == "em");
  CHECK(std::fabs(first(r)["value"].get<double>() - std::log(24.0)) < 1e-12);
}

TEST_CASE("qeval examples") {
  Run r = run("qeval --n 0 --z 1 --q 0.5 --no-timing");
  CHECK(r.code == 0);
  CHECK(std::fabs(first(r)["value"].get<double>() - std::log(1.5)) < 1e-15);

  r = run("qeval --n 2 --z 0 --q 0.7 --no-timing");
  CHECK(r.code == 0);
  CHECK(std::fabs(first(r)["value"].get<double>()) < 1e-15);

  r = run("qeval --n 1 --z 2 --q 1.5", true);
  CHECK(r.code == 2);
  CHECK(r.out.find("error:") != std::string::npos);
}

TEST_CASE("check subcommand") {
  Run r = run("check --suite coefficients --no-timing");
  CHECK(r.code == 0);
  for (const auto& l : lines(r.out)) {
    const auto j = nlohmann::json::parse(l);
    CHECK(j["suite"] == "coefficients");
    CHECK(j["passed"] == true);
  }
  CHECK(run("check --suite bogus").code == 2);
  // A tolerance no residual can meet turns into a numeric failure.
  CHECK(run("check --suite functional-eq --tol 1e-300 --no-timing").code == 1);
}

TEST_CASE("table subcommand") {
  Run r = run("table --kind qlimit --n 2 --z 1.5 --q-list 0.9,0.99,0.999");
  REQUIRE(r.code == 0);
  auto ls = lines(r.out);
  REQUIRE(ls.size() == 4);
  CHECK(ls[0] == "n,z,q,route,q_value,classical_value,error");
  double previous = INFINITY;
  for (std::size_t i = 1; i < ls.size(); ++i) {
    const auto cells = split_csv(ls[i]);
    REQUIRE(cells.size() == 7);
    const double err = std::stod(cells[6]);
    CHECK(err < previous);
    previous = err;
  }
  CHECK(previous < 5e-3);

  r = run("table --kind stirling-error --n 2 --z-list 10,20,40,80 --R 2");
  REQUIRE(r.code == 0);
  ls = lines(r.out);
  REQUIRE(ls.size() == 5);
  CHECK(ls[0] == "n,z,R,asymptotic_value,reference_value,error");
  previous = INFINITY;
  for (std::size_t i = 1; i < ls.size(); ++i) {
    const double err = std::stod(split_csv(ls[i])[5]);
    CHECK(err < previous);
    previous = err;
  }

  CHECK(run("table --kind qlimit --n 2 --z 1.5 --q-list ''").code == 2);
  CHECK(run("table --kind nonsense").code == 2);
}

TEST_CASE("constants subcommand") {
  Run r = run("constants --j-max 2 --with-product-check");
  REQUIRE(r.code == 0);
  bool saw_zeta0 = false;
  int products = 0;
  for (const auto& l : lines(r.out)) {
    const auto j = nlohmann::json::parse(l);
    if (j["name"] == "zeta_prime_neg" && j["j"] == 0) {
      saw_zeta0 = true;
      CHECK(std::fabs(j["value"].get<double>() + 0.5 * std::log(2 * M_PI)) < 1e-15);
    }
    if (j["name"] == "zeta_prime_product") {
      ++products;
      CHECK(j["residual"].get<double>() < 1e-3);
    }
  }
  CHECK(saw_zeta0);
  CHECK(products == 3);
  CHECK(run("constants --j-max 20").code == 2);
}

TEST_CASE("csv output") {
  Run r = run("eval --n 2 --z 3 --csv --no-timing");
  REQUIRE(r.code == 0);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 2);
  CHECK(ls[0] == "command,n,z,z_im,q,route,truncation,value,value_im,error_estimate,time_ms");
  const auto cells = split_csv(ls[1]);
  REQUIRE(cells.size() == 11);
  CHECK(std::fabs(std::stod(cells[7]) - std::log(2.0)) < 1e-12);
  CHECK(cells[10].empty());
}

TEST_CASE("deterministic output without timing") {
  for (const char* args : {"eval --n 3 --z 2.5 --no-timing", "qeval --n 2 --z 1.5 --q 0.9 --no-timing",
                           "check --suite routes --no-timing", "constants --j-max 3 --no-timing"}) {
    const Run a = run(args);
    const Run b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("json values round-trip at full precision") {
  const Run r = run("eval --n 3 --z 2.5 --no-timing");
  REQUIRE(r.code == 0);
  const std::string line = lines(r.out).front();
  const auto j = nlohmann::json::parse(line);
  CHECK(nlohmann::json::parse(j.dump()) == j);
  const double v = j["value"].get<double>();
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  CHECK(line.find(std::string("\"value\":") + buf) != std::string::npos);
  CHECK(std::strtod(buf, nullptr) == v);
}

TEST_CASE("tolerance from the environment") {
  // 100 factors leave an error far above 1e-30, so the call fails numerically.
  const std::string args = "eval --n 2 --z 3 --route weierstrass --truncation 100 --no-timing";
  CHECK(run(args, false, "MULTIGAMMA_TOL=1e-30").code == 1);
  CHECK(run(args, false, "MULTIGAMMA_TOL=1").code == 0);
  CHECK(run(args + " --tol 1", false, "MULTIGAMMA_TOL=1e-30").code == 0);
  CHECK(run(args, false, "MULTIGAMMA_TOL=abc").code == 2);
}

TEST_CASE("usage errors") {
  CHECK(run("").code == 2);
  CHECK(run("eval --n x --z 1").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("--help").code == 0);
}
