// qcd: tables, exact verification suites and p-adic cross-checks.
//
// Exit codes: 0 success, 1 a verification case failed, 2 bad configuration
// or any other error.

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "qcd/qcd.h"

namespace {

constexpr int kExitFail = 1;
constexpr int kExitConfig = 2;

struct Owned {
  char* s = nullptr;
  ~Owned() { qcd_string_free(s); }
};

int report_error(qcd_status st) {
  std::cerr << "qcd: " << qcd_last_error() << " (status " << static_cast<int>(st) << ")\n";
  return kExitConfig;
}

// QCD_GUARD overrides the guard padding; -1 keeps the library default.
bool guard_from_env(int& guard) {
  guard = -1;
  const char* env = std::getenv("QCD_GUARD");
  if (!env || !*env) return true;
  char* end = nullptr;
  errno = 0;
  const long v = std::strtol(env, &end, 10);
  if (*end != '\0' || errno != 0 || v < 0 || v > 100000) {
    std::cerr << "qcd: QCD_GUARD must be a nonnegative integer, got '" << env << "'\n";
    return false;
  }
  guard = static_cast<int>(v);
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"q-Catalan-Daehee numbers: tables, exact identity suites, p-adic cross-checks"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(qcd_version()));

  std::string family, format = "csv", out = "-", lambda = "1";
  int t_n_max = 8, t_u_prec = 8;
  auto* table = app.add_subcommand("table", "Write a table of numbers, series or polynomials");
  table->add_option("--family", family, "catalan|stirling1|stirling2|bernoulli|dn|dnq|bnq|daehee1|daehee2|dnqx")
      ->required();
  table->add_option("--n-max,--N-max", t_n_max, "Largest index")->check(CLI::NonNegativeNumber);
  table->add_option("--u-prec", t_u_prec, "Delivered u-precision")->check(CLI::PositiveNumber);
  table->add_option("--format", format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
  table->add_option("--out", out, "Output path, - for standard output");
  table->add_option("--lambda", lambda, "Rational lambda for daehee1/daehee2");

  std::string suite = "all";
  int v_n_max = 8, v_u_prec = 8;
  unsigned v_threads = 1;
  auto* verify = app.add_subcommand("verify", "Run exact identity suites; JSON report on standard output");
  verify->add_option("--suite", suite, "thm1|thm2|cor3|thm4|thm5|eq20|eq21|limits|all");
  verify->add_option("--n-max,--N-max", v_n_max, "Largest index")->check(CLI::NonNegativeNumber);
  verify->add_option("--u-prec", v_u_prec, "Delivered u-precision")->check(CLI::PositiveNumber);
  verify->add_option("--threads", v_threads, "Worker threads across cases")->check(CLI::PositiveNumber);

  long p = 5;
  std::string c = "1", check = "all";
  int t_val = 1, N_max = 6, digits = 12;
  unsigned p_threads = 1;
  auto* padic = app.add_subcommand("padic", "Run p-adic Riemann-sum cross-checks; JSON report on standard output");
  padic->add_option("--p", p, "Odd prime");
  padic->add_option("--c", c, "q = 1 + c p (decimal integer)");
  padic->add_option("--t-val", t_val, "t = p^t_val; 0 selects t = 0");
  padic->add_option("--N-max,--n-max", N_max, "Largest Riemann-sum level N");
  padic->add_option("--digits", digits, "Requested p-adic digits");
  padic->add_option("--check", check, "eq12|moments|funceq|cor3|all");
  padic->add_option("--threads", p_threads, "Worker threads per Riemann sum")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitConfig;
  }

  int guard = -1;
  if (!guard_from_env(guard)) return kExitConfig;

  if (*table) {
    Owned text;
    qcd_status st = qcd_table(family.c_str(), t_n_max, t_u_prec, guard, lambda.c_str(), format == "json", &text.s);
    if (st != QCD_OK) return report_error(st);
    if (out == "-") {
      std::cout << text.s;
      return 0;
    }
    st = qcd_write_file(out.c_str(), text.s);
    return st == QCD_OK ? 0 : report_error(st);
  }

  if (*verify) {
    Owned report;
    int pass = 0;
    const qcd_status st = qcd_verify(suite.c_str(), v_n_max, v_u_prec, guard, v_threads, &report.s, &pass);
    if (st != QCD_OK) return report_error(st);
    std::cout << report.s << "\n";
    return pass ? 0 : kExitFail;
  }

  qcd_padic_request req{p, c.c_str(), t_val, N_max, digits, check.c_str(), p_threads};
  Owned report;
  int pass = 0;
  const qcd_status st = qcd_padic(&req, &report.s, &pass);
  if (st != QCD_OK) return report_error(st);
  std::cout << report.s << "\n";
  return pass ? 0 : kExitFail;
}
