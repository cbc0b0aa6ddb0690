#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "hardimer/hardimer.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct CliError {
  int code;
  std::string message;
};

// Converts a library status into an exit path; input and domain problems are the caller's fault.
void check(hd_status st) {
  if (st == HD_OK) return;
  const int code = (st == HD_ERR_INPUT || st == HD_ERR_DOMAIN || st == HD_ERR_NULL) ? kExitUsage : kExitFailure;
  throw CliError{code, std::string(hd_status_name(st)) + ": " + hd_last_error()};
}

std::string take(char* s) {
  std::string out(s ? s : "");
  hd_string_free(s);
  return out;
}

std::string pretty(const std::string& json) { return nlohmann::ordered_json::parse(json).dump(2); }

std::string fmt17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

struct PolyDeleter {
  void operator()(hd_poly* p) const { hd_poly_free(p); }
};
struct RepDeleter {
  void operator()(hd_rep* r) const { hd_rep_free(r); }
};
struct SeriesDeleter {
  void operator()(hd_series* s) const { hd_series_free(s); }
};
struct ZnDeleter {
  void operator()(hd_zn_report* r) const { hd_zn_report_free(r); }
};
struct VerifyDeleter {
  void operator()(hd_verify_report* r) const { hd_verify_report_free(r); }
};

std::string poly_string(hd_poly* p) {
  std::unique_ptr<hd_poly, PolyDeleter> owner(p);
  char* s = nullptr;
  check(hd_poly_to_string(p, &s));
  return take(s);
}

std::string poly_json(hd_poly* p) {
  std::unique_ptr<hd_poly, PolyDeleter> owner(p);
  char* s = nullptr;
  check(hd_poly_to_json(p, &s));
  return take(s);
}

hd_rep_kind rep_kind(const std::string& name) {
  if (name == "sb") return HD_REP_SB;
  if (name == "sr") return HD_REP_SR;
  return HD_REP_SUM;
}

std::string series_json(hd_solve_mode mode, std::size_t len, hd_colour colour) {
  hd_series* s = nullptr;
  check(hd_series_solve(mode, len, colour, &s));
  std::unique_ptr<hd_series, SeriesDeleter> owner(s);
  char* out = nullptr;
  check(hd_series_to_json(s, &out));
  return take(out);
}

std::string zn_csv(hd_zn_report* r) {
  std::ostringstream os;
  os << "n,Z_n,partial_sum\n";
  for (std::size_t i = 0; i < hd_zn_report_levels(r); ++i) {
    hd_zn_level l;
    check(hd_zn_report_level(r, i, &l));
    os << l.n << ',' << fmt17(l.z_n) << ',' << fmt17(l.partial_sum) << '\n';
  }
  return os.str();
}

struct TransferArgs {
  std::string u = "0", v = "0", w = "0";
  bool exact = false;
  bool skip_singular = false;
};

void add_transfer_flags(CLI::App* sub, TransferArgs& a) {
  sub->add_option("--u", a.u, "blue parameter (rational, e.g. 3/10 or 0.3)");
  sub->add_option("--v", a.v, "red parameter");
  sub->add_option("--w", a.w, "inner-vertex parameter");
  sub->add_flag("--exact", a.exact, "exact rational arithmetic");
  sub->add_flag("--skip-singular", a.skip_singular, "skip words whose partition function vanishes");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coloured hard-dimer configurations: enumeration, series, representations and growth"};
  app.require_subcommand(1, 1);

  unsigned threads = 0;
  std::string output_path;
  app.add_option("--threads", threads, "worker threads (0 = hardware concurrency)")->envname("HARDIMER_THREADS");
  app.add_option("--output", output_path, "write results to this file instead of stdout");

  std::string word;
  bool json = false;

  auto* count = app.add_subcommand("count", "number of configurations on a word");
  count->add_option("word", word, "word over {b, r}")->required();

  auto* census = app.add_subcommand("census", "generating polynomial of the configurations on a word");
  census->add_option("word", word, "word over {b, r}")->required();
  census->add_flag("--json", json, "emit JSON");

  std::string rep = "sum";
  bool dump_rep = false;
  auto* coeff = app.add_subcommand("coeff", "series coefficient through a linear representation");
  coeff->add_option("word", word, "word over {b, r}");
  coeff->add_option("--rep", rep, "representation")->check(CLI::IsMember({"sb", "sr", "sum"}));
  coeff->add_flag("--dump-rep", dump_rep, "emit the representation as JSON");
  coeff->add_flag("--json", json, "emit the coefficient as JSON");

  std::string mode = "recursive";
  std::size_t len = 6;
  std::string colour = "both";
  auto* series = app.add_subcommand("series", "truncated generating series S_b and S_r");
  series->add_option("--mode", mode, "solver")->check(CLI::IsMember({"recursive", "rational"}));
  series->add_option("--len", len, "truncation length")->required();
  series->add_option("--colour", colour, "which series")->check(CLI::IsMember({"b", "r", "both"}));

  TransferArgs targs;
  unsigned zn_n = 0;
  auto* zn = app.add_subcommand("zn", "sum of reciprocal partition functions over words of length n");
  zn->add_option("--n", zn_n, "word length")->required();
  add_transfer_flags(zn, targs);

  double gamma = 0.0;
  unsigned nmax = 0;
  auto* zpartial = app.add_subcommand("zpartial", "damped partial sums of Z_n as CSV");
  zpartial->add_option("--gamma", gamma, "damping exponent")->required();
  zpartial->add_option("--nmax", nmax, "largest level")->required();
  add_transfer_flags(zpartial, targs);

  std::uint64_t ly_n = 1000, trials = 16, seed = 42;
  unsigned batches = 0;
  auto* lyapunov = app.add_subcommand("lyapunov", "Monte Carlo estimate of the quenched growth rate");
  lyapunov->add_option("--n", ly_n, "word length")->capture_default_str();
  lyapunov->add_option("--trials", trials, "independent trajectories")->capture_default_str();
  lyapunov->add_option("--seed", seed, "RNG seed")->capture_default_str();
  lyapunov->add_option("--batches", batches, "batch count for the error bar (0 = across trials)");

  double tol = 1e-12;
  unsigned max_iter = 100000;
  auto* spectrum = app.add_subcommand("spectrum", "dominant eigenvalue and gap of the averaged matrix");
  spectrum->add_option("--tol", tol, "residual tolerance")->capture_default_str();
  spectrum->add_option("--max-iter", max_iter, "iteration cap")->capture_default_str();

  unsigned step = 1;
  auto* growthcurve = app.add_subcommand("growthcurve", "annealed mean growth (1/n) ln f(n) as CSV");
  growthcurve->add_option("--nmax", nmax, "largest n")->required();
  growthcurve->add_option("--step", step, "sampling step")->capture_default_str();

  std::size_t max_len = 12;
  auto* verify = app.add_subcommand("verify", "oracle-equivalence suite");
  verify->add_option("--max-len", max_len, "longest word checked")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return kExitUsage;
  }

  std::ostringstream out;
  int status = kExitOk;
  try {
    check(hd_set_threads(threads));

    if (*count) {
      char* s = nullptr;
      check(hd_count_chdc(word.c_str(), &s));
      out << take(s) << '\n';
    } else if (*census) {
      if (json) {
        char* s = nullptr;
        check(hd_census_json(word.c_str(), &s));
        out << pretty(take(s)) << '\n';
      } else {
        hd_poly* p = nullptr;
        check(hd_census(word.c_str(), &p));
        out << poly_string(p) << '\n';
      }
    } else if (*coeff) {
      hd_rep* r = nullptr;
      check(hd_rep_builtin(rep_kind(rep), &r));
      std::unique_ptr<hd_rep, RepDeleter> owner(r);
      if (dump_rep) {
        if (!word.empty()) throw CliError{kExitUsage, "--dump-rep takes no word"};
        char* s = nullptr;
        check(hd_rep_to_json(r, &s));
        out << pretty(take(s)) << '\n';
      } else {
        if (coeff->count("word") == 0) throw CliError{kExitUsage, "coeff needs a word unless --dump-rep is given"};
        hd_poly* p = nullptr;
        check(hd_rep_coefficient(r, word.c_str(), &p));
        out << (json ? pretty(poly_json(p)) : poly_string(p)) << '\n';
      }
    } else if (*series) {
      const hd_solve_mode m = mode == "rational" ? HD_SOLVE_RATIONAL : HD_SOLVE_RECURSIVE;
      nlohmann::ordered_json doc;
      doc["mode"] = mode;
      if (colour != "r") doc["s_b"] = nlohmann::ordered_json::parse(series_json(m, len, HD_BLUE));
      if (colour != "b") doc["s_r"] = nlohmann::ordered_json::parse(series_json(m, len, HD_RED));
      out << doc.dump(2) << '\n';
    } else if (*zn) {
      hd_zn_report* r = nullptr;
      check(hd_zn(zn_n, targs.u.c_str(), targs.v.c_str(), targs.w.c_str(), targs.exact, targs.skip_singular, &r));
      std::unique_ptr<hd_zn_report, ZnDeleter> owner(r);
      char* s = nullptr;
      check(hd_zn_report_to_json(r, &s));
      out << pretty(take(s)) << '\n';
    } else if (*zpartial) {
      hd_zn_report* r = nullptr;
      check(hd_zpartial(gamma, nmax, targs.u.c_str(), targs.v.c_str(), targs.w.c_str(), targs.exact,
                        targs.skip_singular, &r));
      std::unique_ptr<hd_zn_report, ZnDeleter> owner(r);
      out << zn_csv(r);
    } else if (*lyapunov) {
      hd_lyapunov_estimate e;
      check(hd_lyapunov(ly_n, trials, seed, batches, &e));
      char* s = nullptr;
      check(hd_lyapunov_to_json(&e, &s));
      out << pretty(take(s)) << '\n';
    } else if (*spectrum) {
      hd_spectral_report r;
      check(hd_xi_spectrum(tol, max_iter, &r));
      char* s = nullptr;
      check(hd_spectral_to_json(&r, &s));
      out << pretty(take(s)) << '\n';
    } else if (*growthcurve) {
      std::size_t rows = 0;
      check(hd_growth_curve(nmax, step, nullptr, nullptr, 0, &rows));
      std::vector<unsigned> ns(rows);
      std::vector<double> values(rows);
      check(hd_growth_curve(nmax, step, ns.data(), values.data(), rows, &rows));
      out << "n,mean_growth\n";
      for (std::size_t i = 0; i < rows; ++i) out << ns[i] << ',' << fmt17(values[i]) << '\n';
    } else if (*verify) {
      hd_verify_report* r = nullptr;
      check(hd_verify(max_len, &r));
      std::unique_ptr<hd_verify_report, VerifyDeleter> owner(r);
      for (std::size_t i = 0; i < hd_verify_report_rows(r); ++i) {
        const char* name = nullptr;
        const char* detail = nullptr;
        int passed = 0;
        check(hd_verify_report_row(r, i, &name, &passed, &detail));
        char line[512];
        std::snprintf(line, sizeof line, "%-4s  %-34s  %s\n", passed ? "PASS" : "FAIL", name, detail);
        out << line;
      }
      if (!hd_verify_report_all_passed(r)) status = kExitFailure;
    }
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << '\n';
    return e.code;
  }

  if (output_path.empty()) {
    std::cout << out.str();
    std::cout.flush();
    if (!std::cout) {
      std::cerr << "error: failed writing to stdout\n";
      return kExitFailure;
    }
  } else {
    std::ofstream file(output_path, std::ios::binary);
    file << out.str();
    file.close();
    if (!file) {
      std::cerr << "error: cannot write '" << output_path << "'\n";
      return kExitFailure;
    }
  }
  return status;
}
