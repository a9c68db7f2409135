#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qcd/rational.hpp"
#include "qcd/serialize.hpp"

namespace qcd {

struct CaseResult {
  std::string id;
  bool pass = false;
  Json detail;
};

struct RunReport {
  std::string suite;
  Json config;
  std::vector<CaseResult> cases;
  std::int64_t wall_ms = 0;

  bool all_pass() const;
  /// {"suite", "config", "cases": [{"id", "status", "detail"}], "wall_ms"}
  Json to_json() const;
};

enum class TableFormat { Csv, Json };

struct TableRequest {
  std::string family;
  int n_max = 8;
  int u_prec = 8;
  std::optional<int> guard;  // default n_max + 2
  Rational lambda = Rational(1);
};

const std::vector<std::string>& table_families();
const std::vector<std::string>& verify_suites();
const std::vector<std::string>& padic_checks();

/// Renders a table. Sequences are rows (n, value); Stirling triangles
/// (n, m, value); u-series families (n, k, value) with k the power of u;
/// polynomial families (n, l, k, value) with l the power of x.
/// InvalidArgument on an unknown family or bad sizes.
std::string render_table(const TableRequest& req, TableFormat format);

/// Writes through a temporary file in the same directory and renames it
/// into place, so a failed run never leaves a partial file. Io on failure.
void write_file_atomic(const std::string& path, const std::string& content);

struct VerifyRequest {
  std::string suite = "all";
  int n_max = 8;
  int u_prec = 8;
  std::optional<int> guard;
  unsigned threads = 1;
};

/// Exact identity suites. A case fails when its identity does not hold;
/// configuration problems throw.
RunReport run_verify(const VerifyRequest& req);

struct PadicRequest {
  long p = 5;
  BigInt c = 1;     // q = 1 + c p
  int t_val = 1;    // t = p^t_val; 0 selects t = 0
  int N_max = 6;
  int digits = 12;
  std::string check = "all";
  unsigned threads = 1;
};

/// Digits carried by q and t: the requested digits plus N_max + 2, which
/// absorbs the digits lost dividing by [p^N]_q.
int padic_working_digits(const PadicRequest& req);

/// p-adic cross-checks. OutOfDomain for p = 2, InvalidArgument for other
/// malformed requests.
RunReport run_padic(const PadicRequest& req);

}  // namespace qcd
