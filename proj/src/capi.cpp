#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <string>

#include "qcd/error.hpp"
#include "qcd/q_families.hpp"
#include "qcd/qcd.h"
#include "qcd/runner.hpp"
#include "qcd/serialize.hpp"

struct qcd_engine {
  explicit qcd_engine(qcd::QFamilyConfig cfg) : families(cfg) {}
  qcd::QFamilies families;
};

namespace {

thread_local std::string last_error;

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <class F>
qcd_status guarded(F&& f) {
  last_error.clear();
  try {
    f();
    return QCD_OK;
  } catch (const qcd::Error& e) {
    last_error = e.what();
    return static_cast<qcd_status>(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return QCD_OUT_OF_MEMORY;
  } catch (const std::exception& e) {
    last_error = e.what();
    return QCD_INTERNAL;
  } catch (...) {
    last_error = "unknown failure";
    return QCD_INTERNAL;
  }
}

void require(bool cond, const char* what) {
  if (!cond) throw qcd::Error(qcd::ErrorCode::InvalidArgument, what);
}

std::optional<int> guard_of(int guard) { return guard < 0 ? std::nullopt : std::optional<int>(guard); }

qcd::Rational lambda_of(const char* lambda) { return lambda ? qcd::Rational::parse(lambda) : qcd::Rational(1); }

}  // namespace

extern "C" {

const char* qcd_version(void) { return "1.0.0"; }

const char* qcd_status_name(qcd_status status) {
  switch (status) {
    case QCD_OK: return "Ok";
    case QCD_OUT_OF_MEMORY: return "OutOfMemory";
    case QCD_INTERNAL: return "Internal";
    default:
      if (status >= QCD_INVALID_ARGUMENT && status <= QCD_IO)
        return qcd::error_code_name(static_cast<qcd::ErrorCode>(status));
      return "Unknown";
  }
}

const char* qcd_last_error(void) { return last_error.c_str(); }

void qcd_string_free(char* s) { std::free(s); }

qcd_status qcd_engine_create(int n_max, int u_prec, int guard, qcd_engine** out) {
  return guarded([&] {
    require(out != nullptr, "engine output pointer is null");
    *out = nullptr;
    qcd::QFamilyConfig cfg = qcd::QFamilyConfig::with_default_guard(n_max, u_prec);
    if (guard >= 0) cfg.guard = guard;
    cfg.validate();
    *out = new qcd_engine(cfg);
  });
}

void qcd_engine_destroy(qcd_engine* engine) { delete engine; }

qcd_status qcd_engine_value(const qcd_engine* engine, const char* family, int n, const char* lambda,
                            char** json_out) {
  return guarded([&] {
    require(engine && family && json_out, "null argument");
    *json_out = nullptr;
    const qcd::QFamilies& f = engine->families;
    const std::string name = family;
    qcd::Json value;
    if (name == "dnq") value = qcd::to_json(f.qcd_direct(n));
    else if (name == "dnq_theorem1") value = qcd::to_json(f.qcd_theorem1(n));
    else if (name == "dnq_theorem2") value = qcd::to_json(f.qcd_theorem2(n));
    else if (name == "bnq") value = qcd::to_json(f.q_bernoulli(n));
    else if (name == "bnq_recurrence") value = qcd::to_json(f.q_bernoulli_recurrence(n));
    else if (name == "cor3") value = qcd::to_json(f.corollary3_value(n));
    else if (name == "daehee1") value = qcd::to_json(f.daehee_type1(n, lambda_of(lambda)));
    else if (name == "daehee2") value = qcd::to_json(f.daehee_type2(n, lambda_of(lambda)));
    else if (name == "dnqx") value = qcd::to_json(f.qcd_poly_direct(n));
    else if (name == "dnqx_theorem5") value = qcd::to_json(f.qcd_poly_theorem5(n));
    else throw qcd::Error(qcd::ErrorCode::InvalidArgument, "unknown family '" + name + "'");
    *json_out = dup(value.dump());
  });
}

qcd_status qcd_table(const char* family, int n_max, int u_prec, int guard, const char* lambda, int as_json,
                     char** out) {
  return guarded([&] {
    require(family && out, "null argument");
    *out = nullptr;
    qcd::TableRequest req{family, n_max, u_prec, guard_of(guard), lambda_of(lambda)};
    *out = dup(qcd::render_table(req, as_json ? qcd::TableFormat::Json : qcd::TableFormat::Csv));
  });
}

qcd_status qcd_write_file(const char* path, const char* content) {
  return guarded([&] {
    require(path && content, "null argument");
    qcd::write_file_atomic(path, content);
  });
}

qcd_status qcd_verify(const char* suite, int n_max, int u_prec, int guard, unsigned threads, char** report_json,
                      int* all_pass) {
  return guarded([&] {
    require(suite && report_json && all_pass, "null argument");
    *report_json = nullptr;
    *all_pass = 0;
    const qcd::RunReport r = qcd::run_verify({suite, n_max, u_prec, guard_of(guard), threads});
    *report_json = dup(r.to_json().dump(2));
    *all_pass = r.all_pass() ? 1 : 0;
  });
}

qcd_status qcd_padic(const qcd_padic_request* request, char** report_json, int* all_pass) {
  return guarded([&] {
    require(request && request->c && request->check && report_json && all_pass, "null argument");
    *report_json = nullptr;
    *all_pass = 0;
    qcd::PadicRequest req;
    req.p = request->p;
    if (req.c.set_str(request->c, 10) != 0)
      throw qcd::Error(qcd::ErrorCode::InvalidArgument, std::string("c is not a decimal integer: ") + request->c);
    req.t_val = request->t_val;
    req.N_max = request->N_max;
    req.digits = request->digits;
    req.check = request->check;
    req.threads = request->threads;
    const qcd::RunReport r = qcd::run_padic(req);
    *report_json = dup(r.to_json().dump(2));
    *all_pass = r.all_pass() ? 1 : 0;
  });
}

}  // extern "C"
