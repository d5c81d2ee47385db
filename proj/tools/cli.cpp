#include "cli.hpp"

#include <CLI11.hpp>

#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "trigbound/bernoulli.hpp"
#include "trigbound/elementary.hpp"
#include "trigbound/leibniz.hpp"
#include "trigbound/positivity.hpp"
#include "trigbound/serialize.hpp"
#include "trigbound/series_catalog.hpp"
#include "trigbound/verifier.hpp"
#include "trigbound/wd.hpp"

namespace trigbound::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Settings {
  std::string format = "text";
  int precision = 64;

  std::string seq;
  long k = -1;
  long k_to = -1;
  bool hypothesis = false;
  long k_max = 1000;
  std::string c_squared;

  int theorem = 0;
  int order = 0;
  int grid = 50;

  int statement = 0;
  bool all = false;
  int order_max = 0;
  std::string epsilon = "1/1000";
  long max_leaves = 100000;
  unsigned jobs = 1;
  bool timing = false;
  bool flip = false;

  int from = 2;
  int to = 6;
  int digits = 6;

  int m = 7;
  std::string right_end;

  long n = -1;
  long n_to = -1;
};

void require_format(const Settings& s, std::initializer_list<std::string_view> allowed) {
  for (auto f : allowed) {
    if (s.format == f) return;
  }
  throw UsageError("format '" + s.format + "' is not available for this command");
}

TargetId theorem_target(int theorem) {
  auto t = target_from_theorem(theorem);
  if (!t) throw UsageError("--theorem must lie in 1..6");
  return *t;
}

int status_exit(Status s) {
  switch (s) {
    case Status::Proved: return kExitOk;
    case Status::Undecided: return kExitUndecided;
    case Status::CounterexampleFound: return kExitCounterexample;
  }
  return kExitUndecided;
}

// --- coeffs ---------------------------------------------------------------

int cmd_coeffs(const Settings& s, std::ostream& out) {
  require_format(s, {"text", "json", "csv", "latex"});
  const auto id = parse_series_id(s.seq);
  if (!id) throw UsageError("unknown sequence '" + s.seq + "'");

  if (s.hypothesis) {
    if (is_base_series(*id)) throw UsageError("hypothesis checks apply to derived sequences");
    require_format(s, {"text", "json"});
    const CoeffSeq seq = catalog_seq(*id);
    const Rational c2 = s.c_squared.empty() ? quarter_pi_sq_upper() : Rational::parse(s.c_squared);
    if (c2.sign() <= 0) throw UsageError("--c-squared must be positive");
    if (s.k_max < seq.start_k + 1) throw UsageError("--k-max too small");
    const HypothesisReport r = check_hypothesis(seq, c2, s.k_max);
    if (s.format == "json") {
      out << to_json(r).dump(2) << "\n";
    } else {
      out << "sequence " << r.seq << ", c^2 = " << r.c_squared << ", k <= " << r.k_checked << "\n"
          << "positivity: " << (r.positivity_ok ? "ok" : "fails") << "\n"
          << "domination: " << (r.domination_ok ? "ok" : "fails") << "\n"
          << "checked range: [" << r.range_from << ", " << r.range_to << "]\n"
          << "c^{2K} A(K) at K = " << r.k_checked << ": " << r.tail_trend
          << (r.tail_flagged ? " (not decreasing)" : "") << "\n";
      if (r.first_failing_k) out << "first failing k: " << *r.first_failing_k << "\n";
    }
    return r.passed() ? kExitOk : kExitCounterexample;
  }

  if (s.k < 0) throw UsageError("--k is required");
  const long last = s.k_to < 0 ? s.k : s.k_to;
  if (last < s.k) throw UsageError("--to must not be below --k");
  std::vector<std::pair<long, Rational>> rows;
  for (long k = s.k; k <= last; ++k) {
    rows.emplace_back(k, is_base_series(*id) ? base_coeff(*id, k) : seq_coeff(*id, k));
  }
  if (s.format == "json") {
    Json arr = Json::array();
    for (const auto& [k, c] : rows) arr.push_back({{"k", k}, {"coeff", to_json(c)}});
    out << Json{{"seq", std::string(to_string(*id))}, {"coefficients", arr}}.dump(2) << "\n";
  } else if (s.format == "csv") {
    out << "k,coeff\n";
    for (const auto& [k, c] : rows) out << k << "," << c << "\n";
  } else {
    for (const auto& [k, c] : rows) {
      const std::string v = s.format == "latex" ? to_latex(c) : c.to_string();
      if (rows.size() == 1) {
        out << v << "\n";
      } else {
        out << k << " " << v << "\n";
      }
    }
  }
  return kExitOk;
}

// --- bounds ---------------------------------------------------------------

std::vector<Claim> bound_claims(TargetId t, int order, BoundPair* pair, WdBound* wd) {
  if (t == TargetId::T5 || t == TargetId::T6) {
    *wd = wd_bounds(t, order);
    return claims_of(*wd);
  }
  *pair = leibniz_bounds(t, order);
  return claims_of(*pair);
}

void plot_csv(TargetId t, const std::vector<Claim>& claims, int grid, std::ostream& out) {
  constexpr mpfr_prec_t prec = 128;
  out << "x,lower,f,upper\n";
  for (int i = 1; i <= grid; ++i) {
    const Rational x = half_pi_lower() * Rational(i, grid + 1);
    const Enclosure X = Enclosure::point(x, prec);
    out << to_decimal(x, 17) << "," << to_decimal(evaluate_claim_bound(claims[0], X).mid(), 17) << ","
        << to_decimal(enclose_target(t, X).mid(), 17) << ","
        << to_decimal(evaluate_claim_bound(claims[1], X).mid(), 17) << "\n";
  }
}

int cmd_bounds(const Settings& s, std::ostream& out) {
  require_format(s, {"text", "json", "csv", "latex"});
  const TargetId t = theorem_target(s.theorem);
  if (s.grid < 1 || s.grid > 100000) throw UsageError("--grid must lie in 1..100000");
  BoundPair pair;
  WdBound wd;
  const auto claims = bound_claims(t, s.order, &pair, &wd);
  const bool is_wd = t == TargetId::T5 || t == TargetId::T6;

  if (s.format == "json") {
    out << (is_wd ? to_json(wd) : to_json(pair)).dump(2) << "\n";
  } else if (s.format == "latex") {
    out << (is_wd ? to_latex(wd) : to_latex(pair)) << "\n";
  } else if (s.format == "csv") {
    plot_csv(t, claims, s.grid, out);
  } else {
    out << "target: " << target_formula(t) << "\n"
        << "order: " << s.order << "\n"
        << "lower: " << claims[0].describe() << "\n"
        << "upper: " << claims[1].describe() << "\n"
        << "valid on: (0,pi/2)\n";
  }
  return kExitOk;
}

// --- verify ---------------------------------------------------------------

CertifyOptions certify_options(const Settings& s) {
  CertifyOptions o;
  o.epsilon = Rational::parse(s.epsilon);
  if (o.epsilon.sign() <= 0 || o.epsilon >= Rational(1)) throw UsageError("--epsilon must lie in (0, 1)");
  if (s.max_leaves < 2) throw UsageError("--max-leaves must be at least 2");
  o.max_leaves = s.max_leaves;
  o.jobs = s.jobs == 0 ? 1 : s.jobs;
  o.precisions = {s.precision, 2 * s.precision, 4 * s.precision};
  return o;
}

Certificate verify_theorem(TargetId t, int order, const CertifyOptions& o, bool flip) {
  BoundPair pair;
  WdBound wd;
  auto claims = bound_claims(t, order, &pair, &wd);
  if (flip) {
    for (Claim& c : claims) c.side = c.side == Side::Lower ? Side::Upper : Side::Lower;
  }
  std::vector<Certificate> parts;
  for (const Claim& c : claims) parts.push_back(certify_claim(c, o));
  const std::string prefix = "T" + std::to_string(theorem_number(t));
  const bool is_wd = t == TargetId::T5 || t == TargetId::T6;
  return combine(prefix + (is_wd ? "-m" : "-n") + std::to_string(order) + (flip ? "-flipped" : ""), parts);
}

void print_certificates(const std::vector<Certificate>& certs, const Settings& s, std::ostream& out) {
  if (s.format == "json") {
    Json arr = Json::array();
    for (const auto& c : certs) arr.push_back(to_json(c, s.timing));
    out << arr.dump(2) << "\n";
    return;
  }
  if (s.format == "csv") {
    out << "claim,status,subdivisions,min_gap" << (s.timing ? ",wall_time_seconds" : "") << "\n";
    for (const auto& c : certs) {
      out << c.claim << "," << to_string(c.status) << "," << c.subdivisions << "," << c.min_gap;
      if (s.timing) out << "," << std::fixed << std::setprecision(6) << c.wall_time_seconds << std::defaultfloat;
      out << "\n";
    }
    return;
  }
  for (const auto& c : certs) {
    out << c.claim << ": " << to_string(c.status) << " (leaves " << c.subdivisions;
    if (!c.min_gap.empty()) out << ", min_gap " << c.min_gap;
    if (s.timing) out << ", " << std::fixed << std::setprecision(6) << c.wall_time_seconds << std::defaultfloat << " s";
    out << ")\n";
    if (c.counterexample) out << "  counterexample at x = " << *c.counterexample << "\n";
  }
}

int cmd_verify(const Settings& s, std::ostream& out) {
  require_format(s, {"text", "json", "csv"});
  const CertifyOptions o = certify_options(s);
  const int modes = (s.theorem != 0) + (s.statement != 0) + (s.all ? 1 : 0);
  if (modes != 1) throw UsageError("give exactly one of --theorem, --statement, --all");

  std::vector<Certificate> certs;
  if (s.statement != 0) {
    if (s.statement < 1 || s.statement > 6) throw UsageError("--statement must lie in 1..6");
    certs.push_back(certify_statement(s.statement, o));
  } else if (s.theorem != 0) {
    certs.push_back(verify_theorem(theorem_target(s.theorem), s.order, o, s.flip));
  } else {
    if (s.order_max < 1) throw UsageError("--order-max must be at least 1");
    for (int st = 1; st <= 6; ++st) certs.push_back(certify_statement(st, o));
    for (int th = 1; th <= 6; ++th) {
      const TargetId t = *target_from_theorem(th);
      const int first = th <= 4 ? 1 : wd_min_order(t);
      for (int n = first; n <= s.order_max; ++n) certs.push_back(verify_theorem(t, n, o, false));
    }
  }
  print_certificates(certs, s, out);
  Status worst = Status::Proved;
  for (const auto& c : certs) {
    if (c.status == Status::CounterexampleFound) worst = Status::CounterexampleFound;
    if (c.status == Status::Undecided && worst == Status::Proved) worst = Status::Undecided;
  }
  return status_exit(worst);
}

// --- remainder-table ------------------------------------------------------

int cmd_remainder(const Settings& s, std::ostream& out) {
  require_format(s, {"text", "json", "csv"});
  if (s.theorem != 5 && s.theorem != 6) throw UsageError("--theorem must be 5 or 6");
  const auto rows = remainder_table(theorem_target(s.theorem), s.from, s.to, s.digits);
  if (s.format == "json") {
    Json arr = Json::array();
    for (const auto& r : rows) arr.push_back(to_json(r));
    out << arr.dump(2) << "\n";
  } else if (s.format == "csv") {
    out << "n,r_max\n";
    for (const auto& r : rows) out << r.n << "," << r.r_max << "\n";
  } else {
    out << std::setw(3) << "n" << "  R_n(pi/2)\n";
    for (const auto& r : rows) out << std::setw(3) << r.n << "  " << r.r_max << "\n";
  }
  return kExitOk;
}

// --- bercu ----------------------------------------------------------------

int cmd_bercu(const Settings& s, std::ostream& out) {
  require_format(s, {"text", "json", "csv"});
  if (s.m < 2) throw UsageError("--m must be at least 2");
  std::optional<Rational> b;
  if (!s.right_end.empty()) {
    b = Rational::parse(s.right_end);
    if (b->sign() <= 0 || *b > half_pi_upper()) throw UsageError("--to must lie in (0, pi/2]");
  }
  PositivityOptions po;
  po.max_leaves = s.max_leaves;
  const Certificate c = bercu_check(s.m, b, po);
  print_certificates({c}, s, out);
  return status_exit(c.status);
}

// --- bernoulli ------------------------------------------------------------

int cmd_bernoulli(const Settings& s, std::ostream& out) {
  require_format(s, {"text", "json", "csv", "latex"});
  if (s.n < 0) throw UsageError("--n is required");
  const long last = s.n_to < 0 ? s.n : s.n_to;
  if (last < s.n || last > 2000) throw UsageError("--to must lie in [--n, 2000]");
  std::vector<std::pair<long, Rational>> rows;
  for (long i = s.n; i <= last; ++i) rows.emplace_back(i, bernoulli(static_cast<unsigned>(i)));
  if (s.format == "json") {
    Json arr = Json::array();
    for (const auto& [i, v] : rows) arr.push_back({{"n", i}, {"value", to_json(v)}});
    out << arr.dump(2) << "\n";
  } else if (s.format == "csv") {
    out << "n,value\n";
    for (const auto& [i, v] : rows) out << i << "," << v << "\n";
  } else {
    for (const auto& [i, v] : rows) {
      const std::string text = s.format == "latex" ? to_latex(v) : v.to_string();
      if (rows.size() == 1) {
        out << text << "\n";
      } else {
        out << i << " " << text << "\n";
      }
    }
  }
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Settings s;
  CLI::App app{"Certified polynomial bounds for Wilker-Cusa-Huygens type inequalities", "trigbound"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", s.format, "Output format: text, json, csv, latex")
      ->check(CLI::IsMember({"text", "json", "csv", "latex"}));
  app.add_option("--precision", s.precision, "Working precision in bits for the first ladder step")
      ->envname("TRIGBOUND_PRECISION")
      ->check(CLI::Range(53, 4096));

  auto* coeffs = app.add_subcommand("coeffs", "Coefficients of a series or derived sequence");
  coeffs->add_option("--seq", s.seq, "Sequence: A, B, C, D, Wilker5, Huygens6, Sin, Cos, Sin3, Cos3, Cosec, Cosec2, Cotan")
      ->required();
  coeffs->add_option("--k", s.k, "Index")->check(CLI::NonNegativeNumber);
  coeffs->add_option("--to", s.k_to, "Last index of a range")->check(CLI::NonNegativeNumber);
  coeffs->add_flag("--hypothesis", s.hypothesis, "Check positivity and A(k) > c^2 A(k+1) instead");
  coeffs->add_option("--k-max", s.k_max, "Last index checked by --hypothesis")->check(CLI::Range(1L, 100000L));
  coeffs->add_option("--c-squared", s.c_squared, "Rational c^2 for --hypothesis (default: upper bound of pi^2/4)");

  auto* bounds = app.add_subcommand("bounds", "Polynomial bounds of a theorem");
  bounds->add_option("--theorem", s.theorem, "Theorem 1..6")->required();
  bounds->add_option("--order", s.order, "Order n (theorems 1-4) or m (theorems 5-6)")->required();
  bounds->add_option("--grid", s.grid, "Number of plot points for csv output");

  auto* verify = app.add_subcommand("verify", "Certify bounds on (0, pi/2)");
  verify->add_option("--theorem", s.theorem, "Theorem 1..6");
  verify->add_option("--order", s.order, "Order n or m");
  verify->add_option("--statement", s.statement, "Classical statement 1..6");
  verify->add_flag("--all", s.all, "Statements 1-6 and every theorem up to --order-max");
  verify->add_option("--order-max", s.order_max, "Largest order for --all");
  verify->add_option("--epsilon", s.epsilon, "Width of the leaf at 0");
  verify->add_option("--max-leaves", s.max_leaves, "Subdivision budget");
  verify->add_option("--jobs", s.jobs, "Worker threads");
  verify->add_flag("--timing", s.timing, "Report wall time");
  verify->add_flag("--flip", s.flip, "Swap the sides of each claim (sanity check)");

  auto* remainder = app.add_subcommand("remainder-table", "R_n(pi/2) for theorems 5 and 6");
  remainder->add_option("--theorem", s.theorem, "5 or 6")->required();
  remainder->add_option("--from", s.from, "First n");
  remainder->add_option("--to", s.to, "Last n");
  remainder->add_option("--digits", s.digits, "Significant digits");

  auto* bercu = app.add_subcommand("bercu", "Compare P_m with Bercu's rational function");
  bercu->add_option("--m", s.m, "Truncation order");
  bercu->add_option("--to", s.right_end, "Right end of (0, b) as a rational or decimal");
  bercu->add_option("--max-leaves", s.max_leaves, "Subdivision budget");
  bercu->add_flag("--timing", s.timing, "Report wall time");

  auto* bern = app.add_subcommand("bernoulli", "Bernoulli numbers B_n");
  bern->add_option("--n", s.n, "Index")->required()->check(CLI::NonNegativeNumber);
  bern->add_option("--to", s.n_to, "Last index of a range");

  const auto usage = [&](const std::string& msg) {
    err << "error: " << msg << "\n";
    const CLI::App* sub = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
    err << sub->help();
    return kExitUsage;
  };

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    return usage(e.what());
  }

  try {
    if (coeffs->parsed()) return cmd_coeffs(s, out);
    if (bounds->parsed()) return cmd_bounds(s, out);
    if (verify->parsed()) return cmd_verify(s, out);
    if (remainder->parsed()) return cmd_remainder(s, out);
    if (bercu->parsed()) return cmd_bercu(s, out);
    if (bern->parsed()) return cmd_bernoulli(s, out);
  } catch (const UsageError& e) {
    return usage(e.what());
  } catch (const std::invalid_argument& e) {
    return usage(e.what());
  } catch (const std::out_of_range& e) {
    return usage(e.what());
  } catch (const std::domain_error& e) {
    return usage(e.what());
  } catch (const HypothesisError& e) {
    err << "error: " << e.what() << "\n";
    return kExitCounterexample;
  }
  return usage("no subcommand");
}

}  // namespace trigbound::cli
