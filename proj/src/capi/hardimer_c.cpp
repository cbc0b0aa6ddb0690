#include "hardimer/hardimer.h"

#include <cstring>
#include <exception>
#include <memory>
#include <new>
#include <string>

#include "hardimer/asymptotics.hpp"
#include "hardimer/chdc.hpp"
#include "hardimer/derive.hpp"
#include "hardimer/error.hpp"
#include "hardimer/linrep.hpp"
#include "hardimer/parallel.hpp"
#include "hardimer/series.hpp"
#include "hardimer/solve.hpp"
#include "hardimer/transfer.hpp"
#include "hardimer/tree.hpp"
#include "hardimer/verify.hpp"

struct hd_poly {
  hardimer::Poly value;
};
struct hd_rep {
  hardimer::LinRep value;
};
struct hd_series {
  hardimer::TruncatedSeries value;
};
struct hd_zn_report {
  hardimer::ZnReport value;
};
struct hd_verify_report {
  std::vector<hardimer::VerifyRow> rows;
};

namespace {

thread_local std::string last_error;

hd_status status_of(hardimer::ErrorKind kind) {
  using hardimer::ErrorKind;
  switch (kind) {
    case ErrorKind::Input: return HD_ERR_INPUT;
    case ErrorKind::Domain: return HD_ERR_DOMAIN;
    case ErrorKind::Resource: return HD_ERR_RESOURCE;
    case ErrorKind::Numeric: return HD_ERR_NUMERIC;
    case ErrorKind::Singular: return HD_ERR_SINGULAR;
    case ErrorKind::Io: return HD_ERR_IO;
    case ErrorKind::Internal: break;
  }
  return HD_ERR_INTERNAL;
}

template <class F>
hd_status guard(F&& f) {
  try {
    last_error.clear();
    f();
    return HD_OK;
  } catch (const hardimer::Error& e) {
    last_error = e.what();
    return status_of(e.kind());
  } catch (const nlohmann::json::exception& e) {
    last_error = e.what();
    return HD_ERR_INPUT;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return HD_ERR_RESOURCE;
  } catch (const std::exception& e) {
    last_error = e.what();
    return HD_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown error";
    return HD_ERR_INTERNAL;
  }
}

hd_status null_arg(const char* what) {
  last_error = std::string("null argument: ") + what;
  return HD_ERR_NULL;
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

hardimer::Word parse_word(const char* word) { return hardimer::Word::parse(word); }

hardimer::Rational rational(const char* s, const char* name) {
  if (!s) hardimer::fail(hardimer::ErrorKind::Input, std::string("missing rational ") + name);
  return hardimer::parse_rational(s);
}

hardimer::TransferParams params(const char* u, const char* v, const char* w, int exact, int skip_singular) {
  hardimer::TransferParams p;
  p.u = rational(u, "u");
  p.v = rational(v, "v");
  p.w = rational(w, "w");
  p.exact = exact != 0;
  p.skip_singular = skip_singular != 0;
  return p;
}

hardimer::LyapunovEstimate from_c(const hd_lyapunov_estimate& e) {
  return {e.alpha_hat, e.std_error, e.n, e.trials, e.seed, e.batches};
}

}  // namespace

#define HD_REQUIRE(p)                 \
  do {                                \
    if ((p) == nullptr) return null_arg(#p); \
  } while (0)

extern "C" {

const char* hd_last_error(void) { return last_error.c_str(); }

const char* hd_status_name(hd_status status) {
  switch (status) {
    case HD_OK: return "ok";
    case HD_ERR_INPUT: return "input";
    case HD_ERR_DOMAIN: return "domain";
    case HD_ERR_RESOURCE: return "resource";
    case HD_ERR_NUMERIC: return "numeric";
    case HD_ERR_SINGULAR: return "singular";
    case HD_ERR_INTERNAL: return "internal";
    case HD_ERR_IO: return "io";
    case HD_ERR_NULL: return "null";
  }
  return "unknown";
}

void hd_string_free(char* s) { std::free(s); }

const char* hd_version(void) { return "0.1.0"; }

hd_status hd_set_threads(unsigned n) {
  return guard([&] { hardimer::set_thread_count(n); });
}

unsigned hd_get_threads(void) { return hardimer::thread_count(); }

void hd_poly_free(hd_poly* p) { delete p; }

hd_status hd_poly_to_string(const hd_poly* p, char** out) {
  HD_REQUIRE(p);
  HD_REQUIRE(out);
  return guard([&] { *out = dup(p->value.to_string()); });
}

hd_status hd_poly_to_json(const hd_poly* p, char** out) {
  HD_REQUIRE(p);
  HD_REQUIRE(out);
  return guard([&] { *out = dup(hardimer::to_json(p->value).dump()); });
}

size_t hd_poly_term_count(const hd_poly* p) { return p ? p->value.size() : 0; }

hd_status hd_poly_term(const hd_poly* p, size_t index, uint32_t* i, uint32_t* j, uint32_t* k, char** coeff) {
  HD_REQUIRE(p);
  return guard([&] {
    if (index >= p->value.size()) hardimer::fail(hardimer::ErrorKind::Domain, "term index out of range");
    const auto& [m, c] = p->value.terms()[index];
    if (i) *i = m.i;
    if (j) *j = m.j;
    if (k) *k = m.k;
    if (coeff) *coeff = dup(c.get_str());
  });
}

hd_status hd_poly_eval(const hd_poly* p, const char* u, const char* v, const char* w, char** out) {
  HD_REQUIRE(p);
  HD_REQUIRE(out);
  return guard([&] {
    const hardimer::EvalPoint<hardimer::Rational> at{rational(u, "u"), rational(v, "v"), rational(w, "w")};
    *out = dup(p->value.eval(at).get_str());
  });
}

int hd_poly_equal(const hd_poly* a, const hd_poly* b) {
  if (!a || !b) return a == b;
  return a->value == b->value ? 1 : 0;
}

hd_status hd_census(const char* word, hd_poly** out) {
  HD_REQUIRE(word);
  HD_REQUIRE(out);
  return guard([&] { *out = new hd_poly{hardimer::census(parse_word(word))}; });
}

hd_status hd_census_json(const char* word, char** out) {
  HD_REQUIRE(word);
  HD_REQUIRE(out);
  return guard([&] { *out = dup(hardimer::census_to_json(hardimer::census(parse_word(word))).dump()); });
}

hd_status hd_configs_json(const char* word, char** out) {
  HD_REQUIRE(word);
  HD_REQUIRE(out);
  return guard([&] {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& c : hardimer::enumerate_configs(parse_word(word))) arr.push_back(hardimer::to_json(c));
    *out = dup(arr.dump());
  });
}

hd_status hd_count_bruteforce(const char* word, uint64_t* out) {
  HD_REQUIRE(word);
  HD_REQUIRE(out);
  return guard([&] { *out = hardimer::count_configs(parse_word(word)); });
}

hd_status hd_count_chdc(const char* word, char** out) {
  HD_REQUIRE(word);
  HD_REQUIRE(out);
  return guard([&] { *out = dup(hardimer::count_chdc(parse_word(word)).get_str()); });
}

hd_status hd_tree_json(const char* config_json, char** out) {
  HD_REQUIRE(config_json);
  HD_REQUIRE(out);
  return guard([&] {
    const auto config = hardimer::config_from_json(nlohmann::ordered_json::parse(config_json));
    *out = dup(hardimer::to_json(hardimer::to_tree(config)).dump());
  });
}

hd_status hd_rep_builtin(hd_rep_kind kind, hd_rep** out) {
  HD_REQUIRE(out);
  return guard([&] {
    hardimer::RepKind k;
    switch (kind) {
      case HD_REP_SB: k = hardimer::RepKind::Sb; break;
      case HD_REP_SR: k = hardimer::RepKind::Sr; break;
      case HD_REP_SUM: k = hardimer::RepKind::Sum; break;
      default: hardimer::fail(hardimer::ErrorKind::Input, "unknown representation kind");
    }
    *out = new hd_rep{hardimer::builtin_rep(k)};
  });
}

hd_status hd_rep_derive(hd_rep** out) {
  HD_REQUIRE(out);
  return guard([&] { *out = new hd_rep{hardimer::derive_rep()}; });
}

void hd_rep_free(hd_rep* r) { delete r; }

size_t hd_rep_dim(const hd_rep* r) { return r ? r->value.dim() : 0; }

hd_status hd_rep_coefficient(const hd_rep* r, const char* word, hd_poly** out) {
  HD_REQUIRE(r);
  HD_REQUIRE(word);
  HD_REQUIRE(out);
  return guard([&] { *out = new hd_poly{r->value.coefficient(parse_word(word))}; });
}

hd_status hd_rep_to_json(const hd_rep* r, char** out) {
  HD_REQUIRE(r);
  HD_REQUIRE(out);
  return guard([&] { *out = dup(hardimer::to_json(r->value).dump()); });
}

hd_status hd_rep_diff_json(const hd_rep* expected, const hd_rep* found, char** out) {
  HD_REQUIRE(expected);
  HD_REQUIRE(found);
  HD_REQUIRE(out);
  return guard([&] { *out = dup(hardimer::to_json(hardimer::compare_reps(expected->value, found->value)).dump()); });
}

hd_status hd_series_solve(hd_solve_mode mode, size_t max_len, hd_colour colour, hd_series** out) {
  HD_REQUIRE(out);
  return guard([&] {
    const bool blue = colour == HD_BLUE;
    if (mode == HD_SOLVE_RECURSIVE) {
      auto s = hardimer::solve_recursive(max_len);
      *out = new hd_series{blue ? std::move(s.s_b) : std::move(s.s_r)};
    } else if (mode == HD_SOLVE_RATIONAL) {
      auto s = hardimer::solve_rational(max_len);
      *out = new hd_series{blue ? std::move(s.s_b) : std::move(s.s_r)};
    } else {
      hardimer::fail(hardimer::ErrorKind::Input, "unknown solve mode");
    }
  });
}

void hd_series_free(hd_series* s) { delete s; }

size_t hd_series_max_len(const hd_series* s) { return s ? s->value.max_len() : 0; }

hd_status hd_series_coefficient(const hd_series* s, const char* word, hd_poly** out) {
  HD_REQUIRE(s);
  HD_REQUIRE(word);
  HD_REQUIRE(out);
  return guard([&] { *out = new hd_poly{s->value.coefficient(parse_word(word))}; });
}

hd_status hd_series_to_json(const hd_series* s, char** out) {
  HD_REQUIRE(s);
  HD_REQUIRE(out);
  return guard([&] { *out = dup(hardimer::to_json(s->value).dump()); });
}

hd_status hd_z_hcd(const char* word, const char* u, const char* v, const char* w, char** out) {
  HD_REQUIRE(word);
  HD_REQUIRE(out);
  return guard([&] {
    const hardimer::EvalPoint<hardimer::Rational> at{rational(u, "u"), rational(v, "v"), rational(w, "w")};
    *out = dup(hardimer::z_hcd(parse_word(word), at).get_str());
  });
}

hd_status hd_zn(unsigned n, const char* u, const char* v, const char* w, int exact, int skip_singular,
                hd_zn_report** out) {
  HD_REQUIRE(out);
  return guard([&] { *out = new hd_zn_report{hardimer::z_n_report(n, params(u, v, w, exact, skip_singular))}; });
}

hd_status hd_zpartial(double gamma, unsigned n_max, const char* u, const char* v, const char* w, int exact,
                      int skip_singular, hd_zn_report** out) {
  HD_REQUIRE(out);
  return guard([&] {
    auto p = params(u, v, w, exact, skip_singular);
    p.gamma_damp = gamma;
    p.n_max = n_max;
    *out = new hd_zn_report{hardimer::z_partial(p)};
  });
}

void hd_zn_report_free(hd_zn_report* r) { delete r; }

size_t hd_zn_report_levels(const hd_zn_report* r) { return r ? r->value.levels.size() : 0; }

hd_status hd_zn_report_level(const hd_zn_report* r, size_t index, hd_zn_level* out) {
  HD_REQUIRE(r);
  HD_REQUIRE(out);
  return guard([&] {
    if (index >= r->value.levels.size()) hardimer::fail(hardimer::ErrorKind::Domain, "level index out of range");
    const auto& l = r->value.levels[index];
    *out = hd_zn_level{l.n, l.z_n, l.partial_sum, l.max_abs_reciprocal, l.singular_count};
  });
}

hd_status hd_zn_report_to_json(const hd_zn_report* r, char** out) {
  HD_REQUIRE(r);
  HD_REQUIRE(out);
  return guard([&] { *out = dup(hardimer::to_json(r->value).dump()); });
}

hd_status hd_lyapunov(uint64_t n, uint64_t trials, uint64_t seed, unsigned batches, hd_lyapunov_estimate* out) {
  HD_REQUIRE(out);
  return guard([&] {
    const auto e = hardimer::lyapunov_estimate({n, trials, seed, batches});
    *out = hd_lyapunov_estimate{e.alpha_hat, e.std_error, e.n, e.trials, e.seed, e.batches};
  });
}

hd_status hd_lyapunov_to_json(const hd_lyapunov_estimate* e, char** out) {
  HD_REQUIRE(e);
  HD_REQUIRE(out);
  return guard([&] { *out = dup(hardimer::to_json(from_c(*e)).dump()); });
}

hd_status hd_xi_spectrum(double tol, unsigned max_iter, hd_spectral_report* out) {
  HD_REQUIRE(out);
  return guard([&] {
    const auto r = hardimer::xi_spectrum(tol, max_iter);
    *out = hd_spectral_report{r.dominant, r.second_modulus, r.gap_ratio, r.iterations, r.residual};
  });
}

hd_status hd_spectral_to_json(const hd_spectral_report* r, char** out) {
  HD_REQUIRE(r);
  HD_REQUIRE(out);
  return guard([&] {
    const hardimer::SpectralReport s{r->dominant, r->second_modulus, r->gap_ratio, r->iterations, r->residual};
    *out = dup(hardimer::to_json(s).dump());
  });
}

hd_status hd_mean_growth(unsigned n, double* out) {
  HD_REQUIRE(out);
  return guard([&] { *out = hardimer::mean_growth(n); });
}

hd_status hd_growth_curve(unsigned nmax, unsigned step, unsigned* ns, double* values, size_t capacity,
                          size_t* count) {
  HD_REQUIRE(count);
  return guard([&] {
    const auto rows = hardimer::growth_curve(nmax, step);
    *count = rows.size();
    for (std::size_t i = 0; i < rows.size() && i < capacity; ++i) {
      if (ns) ns[i] = rows[i].first;
      if (values) values[i] = rows[i].second;
    }
  });
}

hd_status hd_subadditivity_check(size_t samples, size_t max_len, uint64_t seed, size_t* violations, char** json) {
  return guard([&] {
    const auto r = hardimer::subadditivity_check(samples, max_len, seed);
    if (violations) *violations = r.violations.size();
    if (json) *json = dup(hardimer::to_json(r).dump());
  });
}

hd_status hd_verify(size_t max_len, hd_verify_report** out) {
  HD_REQUIRE(out);
  return guard([&] { *out = new hd_verify_report{hardimer::run_verification(max_len)}; });
}

void hd_verify_report_free(hd_verify_report* r) { delete r; }

size_t hd_verify_report_rows(const hd_verify_report* r) { return r ? r->rows.size() : 0; }

hd_status hd_verify_report_row(const hd_verify_report* r, size_t index, const char** name, int* passed,
                               const char** detail) {
  HD_REQUIRE(r);
  return guard([&] {
    if (index >= r->rows.size()) hardimer::fail(hardimer::ErrorKind::Domain, "row index out of range");
    const auto& row = r->rows[index];
    if (name) *name = row.name.c_str();
    if (passed) *passed = row.passed ? 1 : 0;
    if (detail) *detail = row.detail.c_str();
  });
}

int hd_verify_report_all_passed(const hd_verify_report* r) {
  if (!r) return 0;
  for (const auto& row : r->rows) {
    if (!row.passed) return 0;
  }
  return 1;
}

}  // extern "C"
