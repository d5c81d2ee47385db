#include "trigbound/enclosure.hpp"

#include <algorithm>
#include <stdexcept>

namespace trigbound {

namespace {

// pi truncated after 100 decimals, and the same truncation plus one unit in the last place.
constexpr std::string_view kPiLow =
    "3.1415926535897932384626433832795028841971693993751058209749445923078164062862089986280348253421170679";
constexpr std::string_view kPiHigh =
    "3.1415926535897932384626433832795028841971693993751058209749445923078164062862089986280348253421170680";

mpfr_prec_t max_prec(const Enclosure& a, const Enclosure& b) { return std::max(a.precision(), b.precision()); }

void min_into(BigFloat& acc, const BigFloat& x) {
  if (x < acc) mpfr_set(acc.get(), x.get(), MPFR_RNDD);
}

void max_into(BigFloat& acc, const BigFloat& x) {
  if (x > acc) mpfr_set(acc.get(), x.get(), MPFR_RNDU);
}

BigFloat parse_float(std::string_view text, mpfr_prec_t prec, mpfr_rnd_t rnd) {
  BigFloat x(prec);
  std::string s(text);
  char* end = nullptr;
  mpfr_strtofr(x.get(), s.c_str(), &end, 0, rnd);
  if (end == s.c_str() || *end != '\0') {
    throw std::invalid_argument("malformed decimal '" + s + "'");
  }
  return x;
}

}  // namespace

BigFloat::BigFloat(mpfr_prec_t prec) {
  mpfr_init2(value_, prec);
  mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

Enclosure::Enclosure(mpfr_prec_t prec) : lo_(prec), hi_(prec) {}

Enclosure::Enclosure(BigFloat lo, BigFloat hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (lo_.is_nan() || hi_.is_nan() || hi_ < lo_) {
    throw std::invalid_argument("enclosure endpoints out of order");
  }
}

Enclosure Enclosure::point(const Rational& q, mpfr_prec_t prec) {
  return between(q, q, prec);
}

Enclosure Enclosure::point(const BigFloat& x) { return Enclosure(x, x); }

Enclosure Enclosure::between(const Rational& lo, const Rational& hi, mpfr_prec_t prec) {
  BigFloat l(prec), h(prec);
  mpfr_set_q(l.get(), lo.raw().get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(h.get(), hi.raw().get_mpq_t(), MPFR_RNDU);
  return Enclosure(std::move(l), std::move(h));
}

Enclosure Enclosure::parse(std::string_view lo, std::string_view hi, mpfr_prec_t prec) {
  return Enclosure(parse_float(lo, prec, MPFR_RNDD), parse_float(hi, prec, MPFR_RNDU));
}

Enclosure Enclosure::entire(mpfr_prec_t prec) {
  BigFloat l(prec), h(prec);
  mpfr_set_inf(l.get(), -1);
  mpfr_set_inf(h.get(), 1);
  return Enclosure(std::move(l), std::move(h));
}

Enclosure Enclosure::pi(mpfr_prec_t prec) { return parse(kPiLow, kPiHigh, prec); }

Enclosure Enclosure::half_pi(mpfr_prec_t prec) {
  Enclosure p = pi(prec);
  // Division by two is exact in binary.
  mpfr_div_2ui(p.lo_.get(), p.lo_.get(), 1, MPFR_RNDD);
  mpfr_div_2ui(p.hi_.get(), p.hi_.get(), 1, MPFR_RNDU);
  return p;
}

bool Enclosure::contains(const Rational& q) const {
  return mpfr_cmp_q(lo_.get(), q.raw().get_mpq_t()) <= 0 && mpfr_cmp_q(hi_.get(), q.raw().get_mpq_t()) >= 0;
}

bool Enclosure::is_finite() const { return mpfr_number_p(lo_.get()) && mpfr_number_p(hi_.get()); }

BigFloat Enclosure::width() const {
  BigFloat w(precision());
  mpfr_sub(w.get(), hi_.get(), lo_.get(), MPFR_RNDU);
  return w;
}

BigFloat Enclosure::mid() const {
  BigFloat m(precision() + 1);
  mpfr_add(m.get(), lo_.get(), hi_.get(), MPFR_RNDN);
  mpfr_div_2ui(m.get(), m.get(), 1, MPFR_RNDN);
  return m;
}

Enclosure Enclosure::with_precision(mpfr_prec_t prec) const {
  BigFloat l(prec), h(prec);
  mpfr_set(l.get(), lo_.get(), MPFR_RNDD);
  mpfr_set(h.get(), hi_.get(), MPFR_RNDU);
  return Enclosure(std::move(l), std::move(h));
}

std::string Enclosure::to_string(int digits) const {
  return "[" + to_decimal(lo_, digits, MPFR_RNDD) + ", " + to_decimal(hi_, digits, MPFR_RNDU) + "]";
}

Enclosure& Enclosure::operator+=(const Enclosure& rhs) {
  const mpfr_prec_t p = max_prec(*this, rhs);
  BigFloat l(p), h(p);
  mpfr_add(l.get(), lo_.get(), rhs.lo_.get(), MPFR_RNDD);
  mpfr_add(h.get(), hi_.get(), rhs.hi_.get(), MPFR_RNDU);
  if (l.is_nan() || h.is_nan()) return *this = entire(p);
  lo_ = std::move(l);
  hi_ = std::move(h);
  return *this;
}

Enclosure& Enclosure::operator-=(const Enclosure& rhs) {
  const mpfr_prec_t p = max_prec(*this, rhs);
  BigFloat l(p), h(p);
  mpfr_sub(l.get(), lo_.get(), rhs.hi_.get(), MPFR_RNDD);
  mpfr_sub(h.get(), hi_.get(), rhs.lo_.get(), MPFR_RNDU);
  if (l.is_nan() || h.is_nan()) return *this = entire(p);
  lo_ = std::move(l);
  hi_ = std::move(h);
  return *this;
}

Enclosure& Enclosure::operator*=(const Enclosure& rhs) {
  const mpfr_prec_t p = max_prec(*this, rhs);
  const BigFloat* a[2] = {&lo_, &hi_};
  const BigFloat* b[2] = {&rhs.lo_, &rhs.hi_};
  BigFloat l(p), h(p), t(p);
  mpfr_set_inf(l.get(), 1);
  mpfr_set_inf(h.get(), -1);
  for (const BigFloat* x : a) {
    for (const BigFloat* y : b) {
      // 0 * inf contributes 0 to the range.
      if ((x->sign() == 0 && y->is_inf()) || (y->sign() == 0 && x->is_inf())) {
        mpfr_set_zero(t.get(), 1);
        min_into(l, t);
        max_into(h, t);
        continue;
      }
      mpfr_mul(t.get(), x->get(), y->get(), MPFR_RNDD);
      min_into(l, t);
      mpfr_mul(t.get(), x->get(), y->get(), MPFR_RNDU);
      max_into(h, t);
    }
  }
  lo_ = std::move(l);
  hi_ = std::move(h);
  return *this;
}

Enclosure& Enclosure::operator/=(const Enclosure& rhs) {
  const mpfr_prec_t p = max_prec(*this, rhs);
  if (rhs.contains_zero()) return *this = entire(p);
  BigFloat l(p), h(p);
  mpfr_ui_div(l.get(), 1, rhs.hi_.get(), MPFR_RNDD);
  mpfr_ui_div(h.get(), 1, rhs.lo_.get(), MPFR_RNDU);
  return *this *= Enclosure(std::move(l), std::move(h));
}

Enclosure operator-(const Enclosure& a) {
  BigFloat l(a.lo_.precision()), h(a.hi_.precision());
  mpfr_neg(l.get(), a.hi_.get(), MPFR_RNDD);
  mpfr_neg(h.get(), a.lo_.get(), MPFR_RNDU);
  return Enclosure(std::move(l), std::move(h));
}

Enclosure Enclosure::pow(unsigned n) const {
  const mpfr_prec_t p = precision();
  if (n == 0) return point(Rational(1), p);
  BigFloat l(p), h(p);
  if (n % 2 == 1 || lo_.sign() >= 0) {
    mpfr_pow_ui(l.get(), lo_.get(), n, MPFR_RNDD);
    mpfr_pow_ui(h.get(), hi_.get(), n, MPFR_RNDU);
  } else if (hi_.sign() <= 0) {
    mpfr_pow_ui(l.get(), hi_.get(), n, MPFR_RNDD);
    mpfr_pow_ui(h.get(), lo_.get(), n, MPFR_RNDU);
  } else {
    BigFloat a(p), b(p);
    mpfr_pow_ui(a.get(), lo_.get(), n, MPFR_RNDU);
    mpfr_pow_ui(b.get(), hi_.get(), n, MPFR_RNDU);
    mpfr_set_zero(l.get(), 1);
    mpfr_max(h.get(), a.get(), b.get(), MPFR_RNDU);
  }
  return Enclosure(std::move(l), std::move(h));
}

std::optional<Enclosure> intersect(const Enclosure& a, const Enclosure& b) {
  const BigFloat& l = a.lo_ > b.lo_ ? a.lo_ : b.lo_;
  const BigFloat& h = a.hi_ < b.hi_ ? a.hi_ : b.hi_;
  if (h < l) return std::nullopt;
  return Enclosure(l, h);
}

Enclosure hull(const Enclosure& a, const Enclosure& b) {
  return Enclosure(a.lo_ < b.lo_ ? a.lo_ : b.lo_, a.hi_ > b.hi_ ? a.hi_ : b.hi_);
}

Enclosure evaluate(const EvenPolynomial& p, const Enclosure& x) {
  const mpfr_prec_t prec = x.precision();
  Enclosure acc = Enclosure::point(Rational(0), prec);
  if (p.is_zero()) return acc;
  const Enclosure x2 = x.sqr();
  for (int e = p.degree(); e >= 0; e -= 2) {
    acc = acc * x2 + Enclosure::point(p.coeff(e), prec);
  }
  return acc;
}

std::string to_decimal(const BigFloat& x, int sig_digits, mpfr_rnd_t rnd) {
  if (x.is_nan()) return "nan";
  if (x.is_inf()) return x.sign() > 0 ? "inf" : "-inf";
  if (x.sign() == 0) return "0";
  if (sig_digits < 1) sig_digits = 1;
  mpfr_exp_t exp10 = 0;
  char* raw = mpfr_get_str(nullptr, &exp10, 10, static_cast<std::size_t>(sig_digits), x.get(), rnd);
  std::string digits(raw);
  mpfr_free_str(raw);
  std::string sign;
  if (!digits.empty() && digits.front() == '-') {
    sign = "-";
    digits.erase(0, 1);
  }
  // value = 0.d1 d2 ... * 10^exp10
  if (exp10 <= 0 && exp10 > -6) {
    return sign + "0." + std::string(static_cast<std::size_t>(-exp10), '0') + digits;
  }
  if (exp10 > 0 && exp10 <= 21) {
    const auto e = static_cast<std::size_t>(exp10);
    if (e >= digits.size()) return sign + digits + std::string(e - digits.size(), '0');
    return sign + digits.substr(0, e) + "." + digits.substr(e);
  }
  std::string mantissa = digits.substr(0, 1);
  if (digits.size() > 1) mantissa += "." + digits.substr(1);
  return sign + mantissa + "e" + std::to_string(static_cast<long>(exp10) - 1);
}

std::string to_decimal(const Rational& q, int sig_digits) {
  BigFloat x(static_cast<mpfr_prec_t>(sig_digits) * 4 + 64);
  mpfr_set_q(x.get(), q.raw().get_mpq_t(), MPFR_RNDN);
  return to_decimal(x, sig_digits);
}

std::string to_exact_string(const BigFloat& x) {
  if (x.is_nan() || x.is_inf() || x.sign() == 0) return to_decimal(x, 1);
  mpfr_exp_t exp16 = 0;
  char* raw = mpfr_get_str(nullptr, &exp16, 16, 0, x.get(), MPFR_RNDN);
  std::string digits(raw);
  mpfr_free_str(raw);
  std::string sign;
  if (digits.front() == '-') {
    sign = "-";
    digits.erase(0, 1);
  }
  while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
  return sign + "0x0." + digits + "p" + std::to_string(4 * static_cast<long>(exp16));
}

}  // namespace trigbound
