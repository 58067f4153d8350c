#include "qrook/qcalc.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace qrook {

namespace {

void require_nonnegative(int n, const char* what) {
  if (n < 0) throw std::invalid_argument(std::string(what) + ": argument must be nonnegative");
}

int choose2(int n) { return n * (n - 1) / 2; }

}  // namespace

QLaurent q_int(int n) {
  require_nonnegative(n, "q_int");
  if (n == 0) return {};
  return QLaurent::from_dense(0, std::vector<BigInt>(static_cast<std::size_t>(n), BigInt(1)));
}

QLaurent q_factorial(int n) {
  require_nonnegative(n, "q_factorial");
  QLaurent out = 1;
  for (int i = 2; i <= n; ++i) out.multiply_q_int(i);
  return out;
}

QLaurent q_binomial(int n, int k) {
  require_nonnegative(n, "q_binomial");
  if (k < 0 || k > n) return {};
  // [n][n-1]...[n-k+1] / [k]!
  QLaurent numerator = 1;
  for (int i = n - k + 1; i <= n; ++i) numerator.multiply_q_int(i);
  return divide_exact(numerator, q_factorial(k));
}

QLaurent q_double_factorial_odd(int n) {
  require_nonnegative(n, "q_double_factorial_odd");
  QLaurent out = 1;
  for (int i = 1; i <= n; ++i) out.multiply_q_int(2 * i - 1);
  return out;
}

// ---------------------------------------------------------------------------
// XPoly

XPoly::XPoly(std::vector<QLaurent> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

XPoly XPoly::x_power(int degree) {
  require_nonnegative(degree, "XPoly::x_power");
  std::vector<QLaurent> c(static_cast<std::size_t>(degree) + 1);
  c.back() = 1;
  return XPoly(std::move(c));
}

const QLaurent& XPoly::coefficient(int d) const {
  static const QLaurent zero;
  if (d < 0 || d > degree()) return zero;
  return coeffs_[static_cast<std::size_t>(d)];
}

void XPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

XPoly& XPoly::operator+=(const XPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

XPoly& XPoly::operator-=(const XPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

XPoly operator*(const QLaurent& scalar, const XPoly& p) {
  std::vector<QLaurent> c;
  c.reserve(p.coeffs_.size());
  for (const auto& coef : p.coeffs_) c.push_back(scalar * coef);
  return XPoly(std::move(c));
}

XPoly XPoly::times_x() const {
  if (coeffs_.empty()) return {};
  std::vector<QLaurent> c;
  c.reserve(coeffs_.size() + 1);
  c.emplace_back();
  c.insert(c.end(), coeffs_.begin(), coeffs_.end());
  return XPoly(std::move(c));
}

std::string XPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int d = degree(); d >= 0; --d) {
    const QLaurent& c = coeffs_[static_cast<std::size_t>(d)];
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")";
    if (d > 0) os << "*x^" << d;
  }
  return os.str();
}

std::string XPoly::to_json() const {
  std::string out = "[";
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i != 0) out += ",";
    out += qrook::to_json(coeffs_[i]);
  }
  return out + "]";
}

// ---------------------------------------------------------------------------
// q-Hermite family

XPoly hermite_q(int n) {
  require_nonnegative(n, "hermite_q");
  XPoly previous = XPoly::x_power(0);
  if (n == 0) return previous;
  XPoly current = XPoly::x_power(1);
  for (int m = 1; m < n; ++m) {
    // H_{m+1} = x H_m - q^(m-1) [m]_q H_{m-1}
    XPoly next = current.times_x() - q_int(m).shifted(m - 1) * previous;
    previous = std::move(current);
    current = std::move(next);
  }
  return current;
}

XPoly hermite_q_explicit(int n) {
  require_nonnegative(n, "hermite_q_explicit");
  std::vector<QLaurent> c(static_cast<std::size_t>(n) + 1);
  for (int k = 0; 2 * k <= n; ++k) {
    QLaurent term = q_binomial(n, 2 * k) * q_double_factorial_odd(k);
    term.shift(k * (k - 1));
    if (k % 2 == 1) term = -term;
    c[static_cast<std::size_t>(n - 2 * k)] += term;
  }
  return XPoly(std::move(c));
}

// ---------------------------------------------------------------------------
// Motzkin path moments

RecurrenceWeights classical_hermite_weights() {
  return {[](int) { return QLaurent(); }, [](int level) { return QLaurent(static_cast<long>(level)); }};
}

RecurrenceWeights q_hermite_weights() {
  return {[](int) { return QLaurent(); },
          [](int level) { return q_int(level).shifted(level - 1); }};
}

QLaurent motzkin_moment(int length, int start_level, int end_level,
                        const RecurrenceWeights& weights, bool allow_east) {
  if (length < 0 || start_level < 0 || end_level < 0) {
    throw std::invalid_argument("motzkin_moment: negative length or level");
  }
  const int max_level = start_level + length;
  std::vector<QLaurent> east(static_cast<std::size_t>(max_level) + 1);
  std::vector<QLaurent> southeast(static_cast<std::size_t>(max_level) + 1);
  for (int l = 0; l <= max_level; ++l) {
    if (allow_east) east[static_cast<std::size_t>(l)] = weights.east(l);
    if (l >= 1) southeast[static_cast<std::size_t>(l)] = weights.southeast(l);
  }

  std::vector<QLaurent> dp(static_cast<std::size_t>(max_level) + 2);
  dp[static_cast<std::size_t>(start_level)] = 1;
  for (int step = 0; step < length; ++step) {
    const int remaining = length - step - 1;
    std::vector<QLaurent> next(dp.size());
    for (int l = 0; l <= max_level; ++l) {
      const QLaurent& here = dp[static_cast<std::size_t>(l)];
      if (here.is_zero()) continue;
      auto reachable = [&](int level) { return std::abs(level - end_level) <= remaining; };
      if (l + 1 <= max_level && reachable(l + 1)) next[static_cast<std::size_t>(l + 1)] += here;
      if (allow_east && reachable(l)) {
        const QLaurent& b = east[static_cast<std::size_t>(l)];
        if (!b.is_zero()) next[static_cast<std::size_t>(l)] += here * b;
      }
      if (l >= 1 && reachable(l - 1)) {
        next[static_cast<std::size_t>(l - 1)] += here * southeast[static_cast<std::size_t>(l)];
      }
    }
    dp = std::move(next);
  }
  return end_level <= max_level ? dp[static_cast<std::size_t>(end_level)] : QLaurent();
}

QLaurent f_moment(int n, int s) {
  require_nonnegative(n, "f_moment");
  require_nonnegative(s, "f_moment");
  QLaurent paths = motzkin_moment(2 * n, s, s, q_hermite_weights(), false);
  QLaurent norm = q_factorial(s);
  norm.shift(choose2(s));
  return norm * paths;
}

QLaurent f_recurrence_residual(int n, int s) {
  require_nonnegative(n, "f_recurrence_residual");
  if (s < 2) throw std::invalid_argument("f_recurrence_residual: requires s >= 2");

  const QLaurent top_factorial = q_factorial(s - 1);
  QLaurent cross;
  for (int l = 0; l <= s - 2; ++l) {
    QLaurent ratio = divide_exact(top_factorial, q_factorial(l));
    ratio.shift(choose2(s - 1) - choose2(l));
    QLaurent term = ratio * f_moment(n + 1, l);
    if ((s - l) % 2 != 0) term = -term;
    cross += term;
  }
  QLaurent bracket = q_int(s - 1);
  QLaurent last = bracket * bracket * f_moment(n, s - 2);
  last.shift(2 * (s - 2));

  QLaurent rhs = f_moment(n + 1, s - 1) - QLaurent(2) * cross + last;
  return f_moment(n, s) - rhs;
}

QLaurent q_inclusion_exclusion(int n, int s) {
  require_nonnegative(n, "q_inclusion_exclusion");
  require_nonnegative(s, "q_inclusion_exclusion");
  QLaurent total;
  for (int t = 0; t <= s; ++t) {
    QLaurent inner;
    for (int a = 0; a <= t; ++a) {
      const int b = t - a;
      if (2 * a > s || 2 * b > s) continue;
      QLaurent term = q_binomial(s, 2 * a) * q_binomial(s, 2 * b);
      term *= q_double_factorial_odd(a) * q_double_factorial_odd(b);
      term *= q_double_factorial_odd(n + s - t);
      term.shift(a * a + b * b - t);
      inner += term;
    }
    if (t % 2 == 1) inner = -inner;
    total += inner;
  }
  return total;
}

}  // namespace qrook
