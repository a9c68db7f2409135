#include "qcd/runner.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <thread>
#include <unistd.h>

#include "qcd/combinatorics.hpp"
#include "qcd/error.hpp"
#include "qcd/padic_lab.hpp"
#include "qcd/q_families.hpp"

namespace qcd {

namespace {

// u-precision of the q-Bernoulli and q-Catalan-Daehee series specialized in
// the p-adic checks.
constexpr int kPadicUPrec = 10;
constexpr int kMomentMax = 6;
constexpr int kFuncEqMax = 5;
constexpr int kCor3Max = 4;

using Task = std::function<CaseResult()>;

bool contains(const std::vector<std::string>& xs, const std::string& x) {
  return std::find(xs.begin(), xs.end(), x) != xs.end();
}

std::string one_of(const std::vector<std::string>& xs) {
  std::string s;
  for (const auto& x : xs) s += (s.empty() ? "" : ", ") + x;
  return s;
}

std::string pad(int n) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%02d", n);
  return buf;
}

QFamilyConfig family_config(int n_max, int u_prec, std::optional<int> guard) {
  QFamilyConfig cfg = QFamilyConfig::with_default_guard(n_max, u_prec);
  if (guard) cfg.guard = *guard;
  cfg.validate();
  return cfg;
}

// Runs the tasks on up to `threads` workers; results keep the task order.
std::vector<CaseResult> run_tasks(const std::vector<Task>& tasks, unsigned threads) {
  std::vector<CaseResult> out(tasks.size());
  std::vector<std::exception_ptr> errors(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      try {
        out[i] = tasks[i]();
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned n = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(tasks.size())));
  if (n == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < n; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

CaseResult series_case(std::string id, const USeries& lhs, const USeries& rhs, int u_prec) {
  const int prec = std::min(lhs.prec(), rhs.prec());
  CaseResult c{std::move(id), false, Json::object()};
  c.detail["compared_prec"] = prec;
  if (prec < u_prec) {
    c.detail["message"] = "only " + std::to_string(prec) + " u-orders available, " + std::to_string(u_prec) + " needed";
    return c;
  }
  for (int k = 0; k < prec; ++k) {
    if (lhs[k] != rhs[k]) {
      c.detail["message"] = "u^" + std::to_string(k) + ": " + lhs[k].to_string() + " != " + rhs[k].to_string();
      return c;
    }
  }
  c.pass = true;
  c.detail["value"] = to_json(lhs.truncated(u_prec));
  return c;
}

CaseResult report_case(std::string id, const IdentityReport& r) {
  CaseResult c{std::move(id), r.holds, Json::object()};
  c.detail["compared_prec"] = r.compared_prec;
  c.detail["message"] = r.detail;
  return c;
}

CaseResult rational_case(std::string id, const Rational& got, const Rational& expected) {
  CaseResult c{std::move(id), got == expected, Json::object()};
  c.detail["value"] = got.to_string();
  c.detail["expected"] = expected.to_string();
  return c;
}

void add_suite(const std::string& suite, const std::shared_ptr<QFamilies>& fam, std::vector<Task>& tasks) {
  const int n_max = fam->config().n_max;
  const int u_prec = fam->config().u_prec;
  if (suite == "thm1") {
    tasks.push_back([fam, u_prec] {
      const USeries d0 = fam->daehee_type1(0, Rational(1)).at_zero();
      const USeries expected = USeries::constant(Rational(2), u_prec) *
                               (USeries::constant(Rational(2), u_prec) + USeries::u(u_prec)).inverse();
      return series_case("thm1/D0=2/[2]_q", d0, expected, u_prec);
    });
    for (int n = 0; n <= n_max; ++n)
      tasks.push_back([fam, n, u_prec] {
        return series_case("thm1/n=" + pad(n), fam->qcd_theorem1_working(n), fam->qcd_direct_working(n), u_prec);
      });
  } else if (suite == "thm2") {
    for (int n = 0; n <= n_max; ++n)
      tasks.push_back([fam, n, u_prec] {
        return series_case("thm2/n=" + pad(n), fam->qcd_theorem2_working(n), fam->qcd_direct_working(n), u_prec);
      });
  } else if (suite == "cor3") {
    for (int n = 0; n <= n_max; ++n)
      tasks.push_back([fam, n] {
        CaseResult c{"cor3/n=" + pad(n), false, Json::object()};
        try {
          c.detail["value"] = to_json(fam->corollary3_value(n));
          c.pass = true;
        } catch (const Error& e) {
          if (e.code() != ErrorCode::IdentityViolation) throw;
          c.detail["message"] = e.what();
        }
        return c;
      });
  } else if (suite == "thm4") {
    for (int n = 0; n <= n_max; ++n)
      tasks.push_back([fam, n] { return report_case("thm4/n=" + pad(n), fam->theorem4_check(n)); });
    for (int n = 0; n <= n_max; ++n)
      tasks.push_back(
          [fam, n] { return report_case("thm4/bernoulli-routes/n=" + pad(n), fam->bernoulli_routes_check(n)); });
  } else if (suite == "thm5") {
    for (int n = 0; n <= n_max; ++n)
      tasks.push_back([fam, n, u_prec] {
        CaseResult c = report_case("thm5/n=" + pad(n), fam->polynomial_routes_check(n));
        const XPoly poly = fam->qcd_poly_theorem5(n);
        const bool degree_ok = poly.degree() <= n;
        const bool at_zero_ok = agree(poly.at_zero(), fam->qcd_direct(n)) && poly.prec() >= u_prec;
        c.detail["degree"] = poly.degree();
        c.detail["at_zero_matches_dnq"] = at_zero_ok;
        c.pass = c.pass && degree_ok && at_zero_ok;
        return c;
      });
  } else if (suite == "eq20") {
    for (int n = 0; n <= n_max; ++n)
      tasks.push_back([fam, n] { return report_case("eq20/n=" + pad(n), fam->eq20_relation(n)); });
  } else if (suite == "eq21") {
    tasks.push_back([fam, n_max] {
      return report_case("eq21/order=" + pad(n_max), fam->eq21_composition_check(n_max));
    });
  } else if (suite == "limits") {
    for (int n = 0; n <= n_max; ++n)
      tasks.push_back([fam, n] {
        return rational_case("limits/dn/n=" + pad(n), fam->qcd_direct(n).classical_limit(),
                             classical_catalan_daehee(n));
      });
    for (int n = 0; n <= n_max; ++n)
      tasks.push_back([fam, n] {
        return rational_case("limits/bn/n=" + pad(n), fam->q_bernoulli(n).classical_limit(), classical_bernoulli(n));
      });
  }
}

Json valuation_table(const std::vector<std::pair<int, DifferenceValuation>>& rows) {
  Json out = Json::array();
  for (const auto& [N, d] : rows) out.push_back(Json{{"N", N}, {"valuation", d.value}, {"lower_bound_only", d.bounded}});
  return out;
}

std::vector<DifferenceValuation> steps_of(const std::vector<ConvergenceRow>& rows,
                                          std::vector<std::pair<int, DifferenceValuation>>* table) {
  std::vector<DifferenceValuation> out;
  for (const auto& r : rows)
    if (r.step) {
      out.push_back(*r.step);
      if (table) table->emplace_back(r.N, *r.step);
    }
  return out;
}

// A cross-check case that also requires the Cauchy steps of the integrand
// to be nondecreasing in valuation.
CaseResult crosscheck_case(std::string id, const IntegralSpec& spec, const PadicNumber& q, int N_max,
                           const USeries& expected, const RiemannOptions& opts) {
  const MomentReport m = integral_crosscheck(spec, q, N_max, expected, kPadicUPrec, opts);
  std::vector<std::pair<int, DifferenceValuation>> table;
  const bool cauchy = nondecreasing(steps_of(convergence_table(spec, q, N_max, opts), &table));
  CaseResult c{std::move(id), m.pass && cauchy, Json::object()};
  c.detail["message"] = m.detail;
  c.detail["riemann"] = to_json(m.riemann);
  c.detail["specialized"] = to_json(m.specialized);
  c.detail["modulus"] = m.modulus;
  c.detail["stated_modulus"] = m.stated_modulus;
  c.detail["tail"] = m.tail;
  c.detail["convergence_order"] = m.convergence_order;
  c.detail["agreement"] = to_json(m.agreement);
  c.detail["cauchy_nondecreasing"] = cauchy;
  c.detail["cauchy"] = valuation_table(table);
  return c;
}

}  // namespace

bool RunReport::all_pass() const {
  return std::all_of(cases.begin(), cases.end(), [](const CaseResult& c) { return c.pass; });
}

Json RunReport::to_json() const {
  Json cs = Json::array();
  for (const auto& c : cases) cs.push_back(Json{{"id", c.id}, {"status", c.pass ? "pass" : "fail"}, {"detail", c.detail}});
  return Json{{"suite", suite}, {"config", config}, {"cases", std::move(cs)}, {"wall_ms", wall_ms}};
}

const std::vector<std::string>& table_families() {
  static const std::vector<std::string> xs{"catalan", "stirling1", "stirling2", "bernoulli", "dn",
                                           "dnq",     "bnq",       "daehee1",   "daehee2",   "dnqx"};
  return xs;
}

const std::vector<std::string>& verify_suites() {
  static const std::vector<std::string> xs{"thm1", "thm2", "cor3", "thm4", "thm5", "eq20", "eq21", "limits", "all"};
  return xs;
}

const std::vector<std::string>& padic_checks() {
  static const std::vector<std::string> xs{"eq12", "moments", "funceq", "cor3", "all"};
  return xs;
}

std::string render_table(const TableRequest& req, TableFormat format) {
  if (!contains(table_families(), req.family))
    throw Error(ErrorCode::InvalidArgument,
                "unknown family '" + req.family + "' (expected one of " + one_of(table_families()) + ")");
  if (req.n_max < 0) throw Error(ErrorCode::InvalidArgument, "n_max must be >= 0");
  if (req.u_prec < 1) throw Error(ErrorCode::InvalidArgument, "u_prec must be >= 1");

  const std::string& f = req.family;
  Json rows = Json::array();
  std::ostringstream csv;

  if (f == "catalan" || f == "bernoulli" || f == "dn") {
    csv << "n,value\n";
    for (int n = 0; n <= req.n_max; ++n) {
      const Rational v = f == "catalan" ? catalan(n) : f == "bernoulli" ? classical_bernoulli(n)
                                                                        : classical_catalan_daehee(n);
      csv << n << ',' << v.to_string() << '\n';
      rows.push_back(Json{{"n", n}, {"value", v.to_string()}});
    }
  } else if (f == "stirling1" || f == "stirling2") {
    const auto table = stirling_table(f == "stirling1" ? StirlingKind::FirstSigned : StirlingKind::Second, req.n_max);
    csv << "n,m,value\n";
    for (int n = 0; n <= req.n_max; ++n)
      for (int m = 0; m <= n; ++m) {
        const std::string v = table->at(n, m).get_str();
        csv << n << ',' << m << ',' << v << '\n';
        rows.push_back(Json{{"n", n}, {"m", m}, {"value", v}});
      }
  } else {
    QFamilies fam(family_config(req.n_max, req.u_prec, req.guard));
    if (f == "dnq" || f == "bnq") {
      csv << "n,k,value\n";
      for (int n = 0; n <= req.n_max; ++n) {
        const USeries s = f == "dnq" ? fam.qcd_direct(n) : fam.q_bernoulli(n);
        for (int k = 0; k < s.prec(); ++k) csv << n << ',' << k << ',' << s[k].to_string() << '\n';
        rows.push_back(Json{{"n", n}, {"value", to_json(s)}});
      }
    } else {
      csv << "n,l,k,value\n";
      for (int n = 0; n <= req.n_max; ++n) {
        const XPoly poly = f == "daehee1"   ? fam.daehee_type1(n, req.lambda)
                           : f == "daehee2" ? fam.daehee_type2(n, req.lambda)
                                            : fam.qcd_poly_direct(n);
        for (int l = 0; l <= poly.degree(); ++l)
          for (int k = 0; k < poly.prec(); ++k)
            csv << n << ',' << l << ',' << k << ',' << poly.coeff(l)[k].to_string() << '\n';
        rows.push_back(Json{{"n", n}, {"value", to_json(poly)}});
      }
    }
  }

  if (format == TableFormat::Csv) return csv.str();
  Json out{{"family", f}, {"n_max", req.n_max}};
  if (f == "dnq" || f == "bnq" || f == "daehee1" || f == "daehee2" || f == "dnqx") out["u_prec"] = req.u_prec;
  if (f == "daehee1" || f == "daehee2") out["lambda"] = req.lambda.to_string();
  out["rows"] = std::move(rows);
  return out.dump(2) + "\n";
}

void write_file_atomic(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw Error(ErrorCode::Io, "cannot open '" + tmp.string() + "' for writing");
    os << content;
    os.flush();
    if (!os) {
      std::error_code ec;
      fs::remove(tmp, ec);
      throw Error(ErrorCode::Io, "write to '" + tmp.string() + "' failed");
    }
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    std::error_code ignored;
    fs::remove(tmp, ignored);
    throw Error(ErrorCode::Io, "cannot move output into '" + path + "': " + ec.message());
  }
}

RunReport run_verify(const VerifyRequest& req) {
  if (!contains(verify_suites(), req.suite))
    throw Error(ErrorCode::InvalidArgument,
                "unknown suite '" + req.suite + "' (expected one of " + one_of(verify_suites()) + ")");
  if (req.n_max < 0) throw Error(ErrorCode::InvalidArgument, "n_max must be >= 0");
  if (req.u_prec < 1) throw Error(ErrorCode::InvalidArgument, "u_prec must be >= 1");
  const auto start = std::chrono::steady_clock::now();
  auto fam = std::make_shared<QFamilies>(family_config(req.n_max, req.u_prec, req.guard));

  std::vector<Task> tasks;
  if (req.suite == "all") {
    for (const auto& s : verify_suites())
      if (s != "all") add_suite(s, fam, tasks);
  } else {
    add_suite(req.suite, fam, tasks);
  }

  RunReport r;
  r.suite = req.suite;
  r.config = Json{{"n_max", req.n_max}, {"u_prec", req.u_prec}, {"guard", fam->config().guard}};
  r.cases = run_tasks(tasks, req.threads);
  r.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return r;
}

int padic_working_digits(const PadicRequest& req) { return req.digits + req.N_max + 2; }

RunReport run_padic(const PadicRequest& req) {
  require_odd_prime(req.p);
  if (!contains(padic_checks(), req.check))
    throw Error(ErrorCode::InvalidArgument,
                "unknown check '" + req.check + "' (expected one of " + one_of(padic_checks()) + ")");
  if (req.digits < 1) throw Error(ErrorCode::InvalidArgument, "digits must be >= 1");
  if (req.N_max < 2) throw Error(ErrorCode::InvalidArgument, "N_max must be >= 2 to measure convergence");
  if (req.t_val < 0) throw Error(ErrorCode::OutOfDomain, "t_val must be >= 1 (or 0 for t = 0)");
  RiemannOptions opts;
  opts.threads = std::max(1u, req.threads);
  BigInt terms;
  mpz_ui_pow_ui(terms.get_mpz_t(), static_cast<unsigned long>(req.p), static_cast<unsigned long>(req.N_max));
  if (terms > opts.max_terms)
    throw Error(ErrorCode::BudgetExceeded, "p^N_max = " + terms.get_str() + " exceeds the budget of " +
                                               std::to_string(opts.max_terms) + " terms");

  const auto start = std::chrono::steady_clock::now();
  const long p = req.p;
  const int W = padic_working_digits(req);
  const BigInt qv = 1 + req.c * p;
  if (qv == 0) throw Error(ErrorCode::OutOfDomain, "q = 1 + c p must be nonzero");
  const PadicNumber q = PadicNumber::from_integer(p, qv, W);
  BigInt tv = 0;
  if (req.t_val > 0) mpz_ui_pow_ui(tv.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(req.t_val));
  const PadicNumber t = PadicNumber::from_integer(p, tv, W);
  const int N_max = req.N_max;

  auto fam = std::make_shared<QFamilies>(
      family_config(std::max(kMomentMax, kCor3Max), kPadicUPrec, std::nullopt));

  std::vector<Task> tasks;
  const bool all = req.check == "all";
  if (all || req.check == "eq12") {
    tasks.push_back([q, N_max, opts, req] {
      CaseResult c{"eq12/constant-one", true, Json::object()};
      Json values = Json::array();
      for (int N = 1; N <= N_max; ++N) {
        const PadicNumber v = riemann_sum(IntegralSpec::constant_one(), q, N, opts);
        const bool ok = v.is_one() && v.digits() >= req.digits;
        c.pass = c.pass && ok;
        values.push_back(Json{{"N", N}, {"value", to_json(v)}, {"exactly_one", ok}});
      }
      c.detail["values"] = std::move(values);
      return c;
    });
    tasks.push_back([q, t, N_max, opts] {
      CaseResult c{"eq12/riemann=geometric", true, Json::object()};
      const PadicNumber s = padic_sqrt_1m4t(t);
      Json rows = Json::array();
      for (int N = 1; N <= N_max; ++N) {
        const PadicNumber direct = riemann_sum(IntegralSpec::half_power(t), q, N, opts);
        Json row{{"N", N}, {"riemann", to_json(direct)}};
        try {
          const PadicNumber geo = geometric_sum(s, q, N);
          const bool same_precision = geo.absolute_precision() == direct.absolute_precision();
          const bool ok = same_precision ? geo == direct : agrees(geo, direct);
          row["geometric"] = to_json(geo);
          row["comparison"] = same_precision ? "bit-exact" : "common digits";
          row["equal"] = ok;
          c.pass = c.pass && ok;
        } catch (const Error& e) {
          if (e.code() != ErrorCode::DegenerateRatio) throw;
          // s q = 1: the closed form is undefined and the sum is 1 outright.
          const bool ok = direct.is_one();
          row["geometric"] = nullptr;
          row["comparison"] = "degenerate ratio, riemann sum must be 1";
          row["equal"] = ok;
          c.pass = c.pass && ok;
        }
        rows.push_back(std::move(row));
      }
      c.detail["rows"] = std::move(rows);
      return c;
    });
    tasks.push_back([q, t, N_max, opts] {
      const auto table = convergence_table(IntegralSpec::half_power(t), q, N_max, opts);
      const PadicNumber closed = closed_form_eq12(q, t);
      std::vector<std::pair<int, DifferenceValuation>> to_closed;
      std::vector<DifferenceValuation> deficits;
      for (const auto& row : table) {
        to_closed.emplace_back(row.N, difference_valuation(row.value, closed));
        deficits.push_back(to_closed.back().second);
      }
      std::vector<std::pair<int, DifferenceValuation>> steps;
      const bool cauchy = nondecreasing(steps_of(table, &steps));
      const bool towards = nondecreasing(deficits);
      CaseResult c{"eq12/closed-form", cauchy && towards, Json::object()};
      c.detail["closed_form"] = to_json(closed);
      c.detail["final"] = to_json(table.back().value);
      c.detail["distance_to_closed_form"] = valuation_table(to_closed);
      c.detail["cauchy"] = valuation_table(steps);
      c.detail["distance_nondecreasing"] = towards;
      c.detail["cauchy_nondecreasing"] = cauchy;
      return c;
    });
  }
  if (all || req.check == "moments") {
    for (int n = 0; n <= kMomentMax; ++n)
      tasks.push_back([fam, q, N_max, opts, n] {
        return crosscheck_case("moments/n=" + pad(n), IntegralSpec::monomial(n), q, N_max, fam->q_bernoulli_working(n), opts);
      });
  }
  if (all || req.check == "funceq") {
    for (int n = 0; n <= kFuncEqMax; ++n)
      tasks.push_back([q, N_max, opts, n] {
        const FunctionalEquationReport f = functional_equation_check(n, q, N_max, opts);
        CaseResult c{"funceq/n=" + pad(n), f.pass, Json::object()};
        c.detail["message"] = f.detail;
        c.detail["lhs"] = to_json(f.lhs);
        c.detail["rhs"] = to_json(f.rhs);
        c.detail["modulus"] = f.modulus;
        c.detail["agreement"] = to_json(f.agreement);
        return c;
      });
  }
  if (all || req.check == "cor3") {
    for (int n = 0; n <= kCor3Max; ++n)
      tasks.push_back([fam, q, N_max, opts, n] {
        CaseResult c{"cor3/n=" + pad(n), false, Json::object()};
        USeries expected;
        try {
          fam->corollary3_value(n);
          const Rational scale = (n % 2 == 0 ? Rational(1) : Rational(-1)) / pow(Rational(4), n);
          expected = scale * fam->qcd_direct_working(n);
        } catch (const Error& e) {
          if (e.code() != ErrorCode::IdentityViolation) throw;
          c.detail["message"] = e.what();
          return c;
        }
        return crosscheck_case("cor3/n=" + pad(n), IntegralSpec::half_binomial(n), q, N_max, expected, opts);
      });
  }

  RunReport r;
  r.suite = req.check;
  r.config = Json{{"p", p},          {"c", req.c.get_str()}, {"q", qv.get_str()},       {"t_val", req.t_val},
                  {"N_max", N_max},  {"digits", req.digits}, {"working_digits", W},     {"u_prec", kPadicUPrec}};
  // The Riemann sums thread internally; cases run one at a time.
  r.cases = run_tasks(tasks, 1);
  r.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace qcd
