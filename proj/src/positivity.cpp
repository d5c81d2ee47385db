#include "trigbound/positivity.hpp"

#include <chrono>
#include <stdexcept>

#include "trigbound/enclosure.hpp"
#include "trigbound/leibniz.hpp"
#include "trigbound/series_catalog.hpp"

namespace trigbound {

namespace {

enum class LeafSign { Positive, Negative, Unknown };

struct LeafResult {
  LeafSign sign = LeafSign::Unknown;
  Rational lower;
  std::optional<Rational> witness;
};

// Bounds p on [l, l + w] from the shifted coefficients at l.
LeafResult examine(const DensePoly& p, const Rational& l, const Rational& r) {
  const DensePoly shifted = p.taylor_shift(l);
  const Rational w = r - l;
  Rational lo = shifted.coeff(0);
  Rational hi = lo;
  Rational wp(1);
  for (int i = 1; i <= shifted.degree(); ++i) {
    wp *= w;
    const Rational term = shifted.coeff(i) * wp;
    if (term.sign() < 0) {
      lo += term;
    } else {
      hi += term;
    }
  }
  LeafResult out;
  out.lower = lo;
  if (lo.sign() > 0) {
    out.sign = LeafSign::Positive;
  } else if (hi.sign() < 0) {
    out.sign = LeafSign::Negative;
    out.witness = (l + r) / Rational(2);
  } else if (shifted.coeff(0).sign() <= 0) {
    out.sign = LeafSign::Negative;
    out.witness = l;
  }
  return out;
}

// Removes the factor (x - root)^j with j maximal; returns j.
int strip_root(DensePoly& p, const Rational& root) {
  int j = 0;
  while (!p.is_zero() && p.evaluate(root).is_zero()) {
    // Synthetic division by (x - root).
    const auto& c = p.coeffs();
    std::vector<Rational> q(c.size() - 1);
    Rational carry(0);
    for (std::size_t i = c.size() - 1; i >= 1; --i) {
      carry = c[i] + carry * root;
      q[i - 1] = carry;
    }
    p = DensePoly(std::move(q));
    ++j;
  }
  return j;
}

}  // namespace

DensePoly::DensePoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

DensePoly DensePoly::from_integers(const std::vector<long>& coeffs) {
  std::vector<Rational> c;
  c.reserve(coeffs.size());
  for (long v : coeffs) c.emplace_back(v);
  return DensePoly(std::move(c));
}

DensePoly DensePoly::from_even(const EvenPolynomial& p) {
  std::vector<Rational> c(static_cast<std::size_t>(std::max(p.degree(), -1) + 1), Rational(0));
  for (const auto& [e, v] : p.terms()) c[static_cast<std::size_t>(e)] = v;
  return DensePoly(std::move(c));
}

void DensePoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational DensePoly::coeff(int i) const {
  if (i < 0 || i > degree()) return Rational(0);
  return coeffs_[static_cast<std::size_t>(i)];
}

Rational DensePoly::evaluate(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

DensePoly DensePoly::taylor_shift(const Rational& a) const {
  std::vector<Rational> c = coeffs_;
  if (a.is_zero() || c.size() < 2) return DensePoly(std::move(c));
  const std::size_t n = c.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = n - 1; j > i; --j) c[j - 1] += a * c[j];
  }
  return DensePoly(std::move(c));
}

DensePoly operator+(const DensePoly& a, const DensePoly& b) {
  std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
  return DensePoly(std::move(c));
}

DensePoly operator-(const DensePoly& a) {
  std::vector<Rational> c = a.coeffs_;
  for (auto& v : c) v = -v;
  return DensePoly(std::move(c));
}

DensePoly operator-(const DensePoly& a, const DensePoly& b) { return a + (-b); }

DensePoly operator*(const DensePoly& a, const DensePoly& b) {
  if (a.is_zero() || b.is_zero()) return DensePoly();
  std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return DensePoly(std::move(c));
}

std::string DensePoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    const bool neg = coeffs_[i].sign() < 0;
    const std::string mag = coeffs_[i].abs().to_string();
    if (out.empty()) {
      out += neg ? "-" : "";
    } else {
      out += neg ? " - " : " + ";
    }
    out += mag;
    if (i == 1) out += "*x";
    if (i > 1) out += "*x^" + std::to_string(i);
  }
  return out;
}

RationalFunction::RationalFunction(DensePoly num, DensePoly den)
    : numerator(std::move(num)), denominator(std::move(den)) {
  if (denominator.is_zero()) throw std::invalid_argument("zero denominator polynomial");
}

Certificate certify_positive(const DensePoly& p_in, const Rational& a, const Rational& b,
                             const PositivityOptions& options) {
  const auto started = std::chrono::steady_clock::now();
  if (!(a < b)) throw std::invalid_argument("interval needs a < b");
  Certificate cert;
  cert.claim = options.claim;
  cert.description = options.claim;
  cert.interval = options.interval_label.empty() ? "(" + a.to_string() + "," + b.to_string() + ")"
                                                 : options.interval_label;
  const auto finish = [&]() {
    cert.wall_time_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return cert;
  };
  if (p_in.is_zero()) {
    cert.status = Status::CounterexampleFound;
    cert.counterexample = to_decimal((a + b) / Rational(2), 20);
    return finish();
  }

  DensePoly p = p_in;
  const int left = strip_root(p, a);
  const int right = strip_root(p, b);
  // (x - b)^j has sign (-1)^j on (a, b).
  if (right % 2 == 1) p = -p;
  cert.near_zero_handling = left > 0 ? "zero of order " + std::to_string(left) + " at " + a.to_string() +
                                           " factored out"
                                     : "no zero at " + a.to_string();
  cert.endpoint_handling = right > 0 ? "zero of order " + std::to_string(right) + " at " + b.to_string() +
                                           " factored out"
                                     : "no zero at " + b.to_string();

  struct Leaf {
    Rational l;
    Rational r;
  };
  std::vector<Leaf> pending{{a, b}};
  long evaluated = 0;
  std::optional<Rational> min_gap;
  const Rational tiny(1, 1L << 60);
  bool undecided = false;
  while (!pending.empty()) {
    std::vector<Leaf> next;
    for (const Leaf& leaf : pending) {
      if (++evaluated > options.max_leaves) {
        cert.status = Status::Undecided;
        cert.endpoint_handling += "; leaf budget exhausted";
        return finish();
      }
      const LeafResult res = examine(p, leaf.l, leaf.r);
      if (res.sign == LeafSign::Positive) {
        ++cert.subdivisions;
        if (!min_gap || res.lower < *min_gap) min_gap = res.lower;
        continue;
      }
      if (res.sign == LeafSign::Negative) {
        Rational x = *res.witness;
        if (x == a) {
          // p(a) < 0 after factoring, so p_in < 0 just inside the interval.
          Rational step = leaf.r - leaf.l;
          do {
            step /= Rational(2);
            x = a + step;
          } while (p_in.evaluate(x).sign() > 0 && step > tiny);
        }
        cert.status = Status::CounterexampleFound;
        cert.counterexample = to_decimal(x, 20);
        return finish();
      }
      if (leaf.r - leaf.l < tiny) {
        undecided = true;
        continue;
      }
      const Rational mid = (leaf.l + leaf.r) / Rational(2);
      next.push_back({leaf.l, mid});
      next.push_back({mid, leaf.r});
    }
    pending = std::move(next);
  }
  cert.status = undecided ? Status::Undecided : Status::Proved;
  if (min_gap) {
    cert.min_gap = to_decimal(*min_gap, 6);
    cert.min_gap_value = min_gap->to_double();
  }
  cert.precision_bits = 0;
  return finish();
}

Certificate certify_positive(const EvenPolynomial& p, const Rational& a, const Rational& b,
                             const PositivityOptions& options) {
  return certify_positive(DensePoly::from_even(p), a, b, options);
}

Certificate certify_positive(const RationalFunction& rf, const Rational& a, const Rational& b,
                             const PositivityOptions& options) {
  // The denominator must not vanish anywhere on the closed interval.
  PositivityOptions den_opts = options;
  den_opts.claim = options.claim + " [denominator]";
  const bool den_positive = rf.denominator.evaluate(a).sign() > 0;
  const DensePoly den = den_positive ? rf.denominator : -rf.denominator;
  if (den.evaluate(a).is_zero() || den.evaluate(b).sign() <= 0) {
    Certificate c;
    c.claim = options.claim;
    c.status = Status::Undecided;
    c.endpoint_handling = "denominator vanishes or changes sign at an endpoint";
    return c;
  }
  Certificate den_cert = certify_positive(den, a, b, den_opts);
  PositivityOptions num_opts = options;
  num_opts.claim = options.claim + " [numerator]";
  Certificate num_cert =
      certify_positive(den_positive ? rf.numerator : -rf.numerator, a, b, num_opts);
  if (den_cert.status == Status::CounterexampleFound) den_cert.status = Status::Undecided;
  Certificate out = combine(options.claim, {den_cert, num_cert});
  out.interval = num_cert.interval;
  return out;
}

const std::vector<long>& bercu_numerator() {
  static const std::vector<long> n{13716864000, 0, -3157056000, 0, 512179200, 0, -14256000,
                                   0,           -205560, 0, 11220};
  return n;
}

const std::vector<long>& bercu_denominator() {
  static const std::vector<long> d{6858432000, 0, -1578528000, 0, 103680000, 0, -1080000,
                                   0,          25560, 0, -8580, 0, 242};
  return d;
}

EvenPolynomial bercu_polynomial(int m) {
  if (m < 2) throw std::invalid_argument("Bercu comparison needs m >= 2");
  EvenPolynomial p = truncate(catalog_seq(SeriesId::Wilker5), m);
  EvenPolynomial two;
  two.add_term(0, Rational(2));
  return two + p;
}

Certificate bercu_check(int m, const std::optional<Rational>& b, const PositivityOptions& options) {
  const EvenPolynomial pm = bercu_polynomial(m);
  const Rational right = b.value_or(half_pi_upper());
  if (right.sign() <= 0) throw std::invalid_argument("interval end must be positive");
  const DensePoly n = DensePoly::from_integers(bercu_numerator());
  const DensePoly d = DensePoly::from_integers(bercu_denominator());
  const DensePoly diff = DensePoly::from_even(pm) * d - n;

  PositivityOptions opts = options;
  opts.interval_label = b ? "(0," + right.to_string() + ")" : "(0,pi/2)";
  const std::string id = "bercu-m" + std::to_string(m);

  opts.claim = id + " denominator";
  Certificate den = certify_positive(d, Rational(0), right, opts);
  if (den.status == Status::CounterexampleFound) den.status = Status::Undecided;
  opts.claim = id + " difference";
  Certificate gap = certify_positive(diff, Rational(0), right, opts);

  Certificate out = combine(id, {den, gap});
  out.description = "P_" + std::to_string(m) + "(x) > N(x)/D(x) with D(x) > 0";
  out.interval = opts.interval_label;
  return out;
}

}  // namespace trigbound
