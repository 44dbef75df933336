#include "kwise.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <string>

#include "kwise/constructions.hpp"
#include "kwise/error.hpp"
#include "kwise/extremal.hpp"
#include "kwise/independence.hpp"
#include "kwise/measure_io.hpp"
#include "kwise/moment.hpp"

using kwise::AtomicMeasure;
using kwise::BigFloat;
using kwise::Coefficients;
using kwise::Measure;
using kwise::OrbitMeasure;
using kwise::Rational;

struct kw_measure {
  Measure value;
};

struct kw_indep {
  kwise::IndependenceReport report;
};

struct kw_cell {
  kwise::ConstantCell cell;
  std::string lower_ref;
  std::string holder_ref;
};

struct kw_cert {
  kwise::DualCertificate cert;
  kwise::CertificateReport report;
};

struct kw_quartic {
  kwise::QuarticDecomposition decomposition;
  bool identity_ok;
};

namespace {

thread_local std::string g_last_error;

int map_code(kwise::ErrorCode code) {
  switch (code) {
    case kwise::ErrorCode::kInvalidArgument:
      return KW_ERR_INVALID;
    case kwise::ErrorCode::kParse:
      return KW_ERR_PARSE;
    case kwise::ErrorCode::kGuard:
      return KW_ERR_GUARD;
    case kwise::ErrorCode::kInfeasible:
      return KW_ERR_INFEASIBLE;
  }
  return KW_ERR_INTERNAL;
}

template <typename F>
int guarded(F&& f) {
  try {
    f();
    return KW_OK;
  } catch (const kwise::Error& e) {
    g_last_error = e.what();
    return map_code(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return KW_ERR_INTERNAL;
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

int require(bool ok, const char* message) {
  if (!ok) {
    g_last_error = message;
    return KW_ERR_INVALID;
  }
  return KW_OK;
}

Coefficients parse_coefficients(unsigned n, const char* a_csv) {
  if (a_csv == nullptr || std::string_view(a_csv) == "ones") return Coefficients::ones(n);
  std::vector<Rational> values;
  std::string_view rest(a_csv);
  while (true) {
    auto comma = rest.find(',');
    values.push_back(Rational::parse(rest.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return Coefficients(n, std::move(values));
}

// Decomposition and equality need the orbit form; an exchangeable atomic
// measure converts, anything else is rejected.
OrbitMeasure as_orbit(const Measure& m) {
  if (const auto* orbit = std::get_if<OrbitMeasure>(&m)) return *orbit;
  const auto& atomic = std::get<AtomicMeasure>(m);
  OrbitMeasure folded = symmetrize(atomic);
  if (!(orbit_to_atomic(folded) == atomic))
    kwise::fail(kwise::ErrorCode::kInvalidArgument,
                "measure is not exchangeable; an orbit-form measure is required");
  return folded;
}

bool parse_order(const char* p, unsigned& p_int, double& p_real, bool& exact) {
  if (p == nullptr || *p == '\0') return false;
  std::string text(p);
  std::size_t used = 0;
  double value;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    return false;
  }
  if (used != text.size() || !(value >= 2.0) || value > 1e6) return false;
  double int_part;
  if (std::modf(value, &int_part) == 0.0 && value <= 64.0) {
    exact = true;
    p_int = static_cast<unsigned>(value);
  } else {
    exact = false;
  }
  p_real = value;
  return true;
}

void fill_refs(kw_cell* handle) {
  const unsigned n = handle->cell.n;
  BigFloat lower = handle->cell.exact_p
                       ? BigFloat::root(Rational(static_cast<long>(n)).pow(handle->cell.p_int - 2),
                                        2ul * handle->cell.p_int)
                       : BigFloat::pow(Rational(static_cast<long>(n)), 0.5 - 1.0 / handle->cell.p);
  handle->lower_ref = lower.str();
  handle->holder_ref = BigFloat::root(Rational(static_cast<long>(n)), 2).str();
}

}  // namespace

extern "C" {

const char* kw_version(void) { return "0.1.0"; }

const char* kw_last_error(void) { return g_last_error.c_str(); }

void kw_string_free(char* s) { std::free(s); }
void kw_measure_free(kw_measure* m) { delete m; }
void kw_indep_free(kw_indep* r) { delete r; }
void kw_cell_free(kw_cell* c) { delete c; }
void kw_cert_free(kw_cert* c) { delete c; }
void kw_quartic_free(kw_quartic* q) { delete q; }

int kw_measure_construct(const char* kind, unsigned n, kw_measure** out) {
  if (int rc = require(kind && out, "null argument")) return rc;
  return guarded([&] {
    std::string_view name(kind);
    OrbitMeasure m = [&] {
      if (name == "extremal-pairwise") return kwise::extremal_pairwise(n);
      if (name == "antipodal") return kwise::antipodal(n);
      if (name == "balanced") return kwise::balanced(n);
      if (name == "independent") return kwise::independent(n);
      kwise::fail(kwise::ErrorCode::kInvalidArgument,
                  "unknown construction '" + std::string(name) + "'");
    }();
    *out = new kw_measure{Measure(std::move(m))};
  });
}

int kw_measure_parse(const char* text, kw_measure** out) {
  if (int rc = require(text && out, "null argument")) return rc;
  return guarded([&] { *out = new kw_measure{kwise::parse_measure(text)}; });
}

int kw_measure_serialize(const kw_measure* m, char** out_json) {
  if (int rc = require(m && out_json, "null argument")) return rc;
  return guarded([&] { *out_json = copy_string(kwise::serialize_measure(m->value)); });
}

unsigned kw_measure_n(const kw_measure* m) { return m ? kwise::measure_n(m->value) : 0; }

int kw_measure_is_orbit(const kw_measure* m) {
  return m && std::holds_alternative<OrbitMeasure>(m->value) ? 1 : 0;
}

int kw_measure_support_points(const kw_measure* m, char** out) {
  if (int rc = require(m && out, "null argument")) return rc;
  return guarded([&] {
    if (const auto* orbit = std::get_if<OrbitMeasure>(&m->value))
      *out = copy_string(orbit->support_point_count().get_str());
    else
      *out = copy_string(std::to_string(std::get<AtomicMeasure>(m->value).support_size()));
  });
}

int kw_measure_independence_level(const kw_measure* m, unsigned k_max, unsigned* out_level) {
  if (int rc = require(m && out_level, "null argument")) return rc;
  return guarded([&] {
    *out_level = std::visit(
        [&](const auto& measure) { return kwise::independence_level(measure, k_max); },
        m->value);
  });
}

int kw_measure_equal(const kw_measure* a, const kw_measure* b, int* out_equal) {
  if (int rc = require(a && b && out_equal, "null argument")) return rc;
  return guarded([&] {
    *out_equal = 0;
    if (kwise::measure_n(a->value) != kwise::measure_n(b->value)) return;
    if (a->value.index() == b->value.index()) {
      *out_equal = a->value == b->value ? 1 : 0;
      return;
    }
    const auto& orbit = std::holds_alternative<OrbitMeasure>(a->value)
                            ? std::get<OrbitMeasure>(a->value)
                            : std::get<OrbitMeasure>(b->value);
    const auto& atomic = std::holds_alternative<AtomicMeasure>(a->value)
                             ? std::get<AtomicMeasure>(a->value)
                             : std::get<AtomicMeasure>(b->value);
    *out_equal = kwise::orbit_to_atomic(orbit) == atomic ? 1 : 0;
  });
}

int kw_measure_moment(const kw_measure* m, const char* a_csv, unsigned p, char** out_rational) {
  if (int rc = require(m && out_rational, "null argument")) return rc;
  return guarded([&] {
    Coefficients a = parse_coefficients(kwise::measure_n(m->value), a_csv);
    Rational value = std::visit(
        [&](const auto& measure) { return kwise::moment(measure, a, p); }, m->value);
    *out_rational = copy_string(value.str());
  });
}

int kw_check_independence(const kw_measure* m, unsigned k, kw_indep** out) {
  if (int rc = require(m && out, "null argument")) return rc;
  return guarded([&] {
    auto report = std::visit(
        [&](const auto& measure) { return kwise::is_kwise_independent(measure, k); },
        m->value);
    *out = new kw_indep{std::move(report)};
  });
}

int kw_indep_ok(const kw_indep* r) { return r && r->report.ok ? 1 : 0; }

size_t kw_indep_witness_size(const kw_indep* r) {
  return r && r->report.witness ? r->report.witness->subset.size() : 0;
}

unsigned kw_indep_witness_index(const kw_indep* r, size_t i) {
  if (!r || !r->report.witness || i >= r->report.witness->subset.size()) return 0;
  return r->report.witness->subset[i];
}

int kw_indep_witness_value(const kw_indep* r, char** out) {
  if (int rc = require(r && out, "null argument")) return rc;
  if (int rc = require(r->report.witness.has_value(), "report has no witness")) return rc;
  return guarded([&] { *out = copy_string(r->report.witness->value.str()); });
}


int kw_solve_cell(unsigned n, const char* p, unsigned k, const char* mode,
                  const char* a_csv, kw_cell** out) {
  if (int rc = require(p && mode && out, "null argument")) return rc;
  unsigned p_int = 0;
  double p_real = 0;
  bool exact = false;
  if (int rc = require(parse_order(p, p_int, p_real, exact),
                       "p must be a decimal number >= 2 (integers up to 64 solve exactly)"))
    return rc;
  std::string_view mode_name(mode);
  if (int rc = require(mode_name == "orbit" || mode_name == "full",
                       "mode must be 'orbit' or 'full'"))
    return rc;
  if (int rc = require(exact || mode_name == "orbit",
                       "full mode requires an integer moment order"))
    return rc;
  return guarded([&] {
    Coefficients a = parse_coefficients(n, a_csv);
    kwise::ConstantCell cell =
        exact ? kwise::khintchine_cell(n, p_int, k,
                                       mode_name == "orbit" ? kwise::LPMode::kOrbit
                                                            : kwise::LPMode::kFull,
                                       a)
              : kwise::khintchine_cell_real(n, p_real, k, a);
    auto* handle = new kw_cell{std::move(cell), "", ""};
    fill_refs(handle);
    *out = handle;
  });
}

int kw_cell_moment(const kw_cell* c, char** out) {
  if (int rc = require(c && out, "null argument")) return rc;
  return guarded([&] { *out = copy_string(c->cell.moment_value.str()); });
}

int kw_cell_constant(const kw_cell* c, char** out) {
  if (int rc = require(c && out, "null argument")) return rc;
  return guarded([&] { *out = copy_string(c->cell.constant.str()); });
}

int kw_cell_lower_ref(const kw_cell* c, char** out) {
  if (int rc = require(c && out, "null argument")) return rc;
  return guarded([&] { *out = copy_string(c->lower_ref); });
}

int kw_cell_holder_ref(const kw_cell* c, char** out) {
  if (int rc = require(c && out, "null argument")) return rc;
  return guarded([&] { *out = copy_string(c->holder_ref); });
}

int kw_cell_optimizer(const kw_cell* c, kw_measure** out) {
  if (int rc = require(c && out, "null argument")) return rc;
  return guarded([&] { *out = new kw_measure{c->cell.optimizer}; });
}

int kw_cell_is_vertex(const kw_cell* c) { return c && c->cell.is_vertex ? 1 : 0; }

int kw_cell_multiple_optima(const kw_cell* c) { return c && c->cell.multiple_optima ? 1 : 0; }

int kw_cell_optimizer_is_extremal(const kw_cell* c) {
  return c && c->cell.optimizer_is_extremal ? 1 : 0;
}

int kw_cell_is_approximate(const kw_cell* c) { return c && c->cell.approximate ? 1 : 0; }

int kw_certify(unsigned n, unsigned p, kw_cert** out) {
  if (int rc = require(out != nullptr, "null argument")) return rc;
  return guarded([&] {
    kwise::DualCertificate cert = kwise::pairwise_dual_certificate(n, p);
    kwise::CertificateReport report = kwise::verify_certificate(cert);
    *out = new kw_cert{std::move(cert), std::move(report)};
  });
}

int kw_cert_u_same(const kw_cert* c, char** out) {
  if (int rc = require(c && out, "null argument")) return rc;
  return guarded([&] { *out = copy_string(c->cert.u11.str()); });
}

int kw_cert_u_mixed(const kw_cert* c, char** out) {
  if (int rc = require(c && out, "null argument")) return rc;
  return guarded([&] { *out = copy_string(c->cert.u1m.str()); });
}

int kw_cert_feasible(const kw_cert* c) { return c && c->report.feasible ? 1 : 0; }

int kw_cert_value(const kw_cert* c, char** out) {
  if (int rc = require(c && out, "null argument")) return rc;
  return guarded([&] { *out = copy_string(c->report.certified_value.str()); });
}

int kw_cert_primal(const kw_cert* c, char** out) {
  if (int rc = require(c && out, "null argument")) return rc;
  return guarded([&] { *out = copy_string(c->report.primal_value.str()); });
}

int kw_cert_matches_primal(const kw_cert* c) { return c && c->report.matches_primal ? 1 : 0; }

size_t kw_cert_equality_count(const kw_cert* c) {
  return c ? c->report.equality_weights.size() : 0;
}

unsigned kw_cert_equality_weight(const kw_cert* c, size_t i) {
  if (!c || i >= c->report.equality_weights.size()) return 0;
  return c->report.equality_weights[i];
}

int kw_cert_slack(const kw_cert* c, unsigned w, char** out) {
  if (int rc = require(c && out, "null argument")) return rc;
  if (int rc = require(w < c->report.slack.size(), "weight out of range")) return rc;
  return guarded([&] { *out = copy_string(c->report.slack[w].str()); });
}

int kw_quartic_decompose(const kw_measure* m, const char* a_csv, kw_quartic** out) {
  if (int rc = require(m && out, "null argument")) return rc;
  return guarded([&] {
    OrbitMeasure orbit = as_orbit(m->value);
    Coefficients a = parse_coefficients(orbit.n(), a_csv);
    kwise::QuarticDecomposition d = kwise::quartic_decompose(orbit, a);
    bool ok = d.total == kwise::moment(orbit, a, 4);
    *out = new kw_quartic{std::move(d), ok};
  });
}

int kw_quartic_independent_part(const kw_quartic* q, char** out) {
  if (int rc = require(q && out, "null argument")) return rc;
  return guarded([&] { *out = copy_string(q->decomposition.independent_part.str()); });
}

int kw_quartic_correlation(const kw_quartic* q, char** out) {
  if (int rc = require(q && out, "null argument")) return rc;
  return guarded([&] { *out = copy_string(q->decomposition.c.str()); });
}

int kw_quartic_cross_sum(const kw_quartic* q, char** out) {
  if (int rc = require(q && out, "null argument")) return rc;
  return guarded([&] { *out = copy_string(q->decomposition.cross_sum.str()); });
}

int kw_quartic_total(const kw_quartic* q, char** out) {
  if (int rc = require(q && out, "null argument")) return rc;
  return guarded([&] { *out = copy_string(q->decomposition.total.str()); });
}

int kw_quartic_identity_ok(const kw_quartic* q) { return q && q->identity_ok ? 1 : 0; }

}  // extern "C"
