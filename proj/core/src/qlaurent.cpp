#include "qrook/qlaurent.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace qrook {

QLaurent::QLaurent(long constant) {
  if (constant != 0) coeffs_.emplace_back(constant);
}

QLaurent::QLaurent(const BigInt& constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

QLaurent QLaurent::monomial(const BigInt& coefficient, int exponent) {
  QLaurent out;
  if (coefficient != 0) {
    out.low_ = exponent;
    out.coeffs_.push_back(coefficient);
  }
  return out;
}

QLaurent QLaurent::from_terms(const std::map<int, BigInt>& terms) {
  if (terms.empty()) return {};
  const int low = terms.begin()->first;
  const int high = terms.rbegin()->first;
  std::vector<BigInt> dense(static_cast<std::size_t>(high - low + 1));
  for (const auto& [e, c] : terms) dense[static_cast<std::size_t>(e - low)] += c;
  return from_dense(low, std::move(dense));
}

QLaurent QLaurent::from_dense(int low, std::vector<BigInt> coefficients) {
  QLaurent out;
  out.low_ = low;
  out.coeffs_ = std::move(coefficients);
  out.normalize();
  return out;
}

void QLaurent::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(),
                            [](const BigInt& c) { return c != 0; });
  if (first == coeffs_.end()) {
    coeffs_.clear();
    low_ = 0;
    return;
  }
  if (first != coeffs_.begin()) {
    low_ += static_cast<int>(first - coeffs_.begin());
    coeffs_.erase(coeffs_.begin(), first);
  }
}

BigInt QLaurent::coefficient(int exponent) const {
  if (coeffs_.empty() || exponent < low_ || exponent > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(exponent - low_)];
}

std::map<int, BigInt> QLaurent::terms() const {
  std::map<int, BigInt> out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) out.emplace(low_ + static_cast<int>(i), coeffs_[i]);
  }
  return out;
}

std::size_t QLaurent::term_count() const {
  return static_cast<std::size_t>(std::count_if(
      coeffs_.begin(), coeffs_.end(), [](const BigInt& c) { return c != 0; }));
}

QLaurent& QLaurent::operator+=(const QLaurent& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  const int low = std::min(low_, rhs.low_);
  const int high = std::max(degree(), rhs.degree());
  if (low < low_) {
    coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(low_ - low), BigInt(0));
    low_ = low;
  }
  coeffs_.resize(static_cast<std::size_t>(high - low_ + 1));
  const std::size_t offset = static_cast<std::size_t>(rhs.low_ - low_);
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[offset + i] += rhs.coeffs_[i];
  normalize();
  return *this;
}

QLaurent& QLaurent::operator-=(const QLaurent& rhs) { return *this += -rhs; }

QLaurent operator-(QLaurent value) {
  for (auto& c : value.coeffs_) c = -c;
  return value;
}

QLaurent operator*(const QLaurent& lhs, const QLaurent& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<BigInt> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (lhs.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), lhs.coeffs_[i].get_mpz_t(), rhs.coeffs_[j].get_mpz_t());
    }
  }
  return QLaurent::from_dense(lhs.low_ + rhs.low_, std::move(out));
}

QLaurent& QLaurent::operator*=(const QLaurent& rhs) { return *this = *this * rhs; }

QLaurent& QLaurent::shift(int exponent) {
  if (!coeffs_.empty()) low_ += exponent;
  return *this;
}

QLaurent& QLaurent::multiply_q_int(int n) {
  if (n < 0) throw std::invalid_argument("multiply_q_int: negative bracket");
  if (n == 0 || coeffs_.empty()) {
    coeffs_.clear();
    low_ = 0;
    return *this;
  }
  if (n == 1) return *this;
  const std::size_t width = static_cast<std::size_t>(n);
  const std::size_t size = coeffs_.size();
  std::vector<BigInt> out(size + width - 1);
  BigInt window = 0;
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i < size) window += coeffs_[i];
    if (i >= width) window -= coeffs_[i - width];
    out[i] = window;
  }
  coeffs_ = std::move(out);
  normalize();
  return *this;
}

BigInt QLaurent::at_one() const {
  BigInt sum = 0;
  for (const auto& c : coeffs_) sum += c;
  return sum;
}

QLaurent QLaurent::substitute_power(int factor) const {
  if (factor < 1) throw std::invalid_argument("substitute_power: factor must be >= 1");
  if (coeffs_.empty()) return {};
  std::vector<BigInt> out((coeffs_.size() - 1) * static_cast<std::size_t>(factor) + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i * static_cast<std::size_t>(factor)] = coeffs_[i];
  return from_dense(low_ * factor, std::move(out));
}

bool QLaurent::has_nonnegative_coefficients() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const BigInt& c) { return c >= 0; });
}

std::string QLaurent::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const BigInt& c = coeffs_[i];
    if (c == 0) continue;
    const int e = low_ + static_cast<int>(i);
    BigInt magnitude = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << magnitude.get_str();
      continue;
    }
    if (magnitude != 1) os << magnitude.get_str() << "*";
    os << "q";
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

QLaurent divide_exact(const QLaurent& dividend, const QLaurent& divisor) {
  if (divisor.is_zero()) throw std::logic_error("divide_exact: division by zero polynomial");
  if (dividend.is_zero()) return {};

  // Work with ordinary polynomials: shift both so their lowest terms sit at q^0.
  std::vector<BigInt> rem;
  for (int e = dividend.low_degree(); e <= dividend.degree(); ++e) rem.push_back(dividend.coefficient(e));
  std::vector<BigInt> den;
  for (int e = divisor.low_degree(); e <= divisor.degree(); ++e) den.push_back(divisor.coefficient(e));

  if (rem.size() < den.size()) throw std::logic_error("divide_exact: inexact division");
  const std::size_t qsize = rem.size() - den.size() + 1;
  std::vector<BigInt> quot(qsize);
  const BigInt& lead = den.back();
  for (std::size_t step = qsize; step-- > 0;) {
    BigInt& top = rem[step + den.size() - 1];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) {
      throw std::logic_error("divide_exact: inexact division");
    }
    BigInt factor = top / lead;
    quot[step] = factor;
    for (std::size_t j = 0; j < den.size(); ++j) rem[step + j] -= factor * den[j];
  }
  if (std::any_of(rem.begin(), rem.end(), [](const BigInt& c) { return c != 0; })) {
    throw std::logic_error("divide_exact: inexact division");
  }
  return QLaurent::from_dense(dividend.low_degree() - divisor.low_degree(), std::move(quot));
}

QLaurent pow(const QLaurent& base, unsigned exponent) {
  QLaurent result = 1;
  QLaurent square = base;
  while (exponent != 0) {
    if (exponent & 1U) result *= square;
    exponent >>= 1U;
    if (exponent != 0) square *= square;
  }
  return result;
}

std::string to_json(const QLaurent& value) {
  // nlohmann::ordered_json keeps exponents in increasing order.
  nlohmann::ordered_json out = nlohmann::ordered_json::object();
  for (const auto& [e, c] : value.terms()) out[std::to_string(e)] = c.get_str();
  return out.dump();
}

namespace {

bool is_decimal(const std::string& s) {
  std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i == s.size()) return false;
  return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(i), s.end(),
                     [](char ch) { return ch >= '0' && ch <= '9'; });
}

}  // namespace

QLaurent qlaurent_from_json(const std::string& text) {
  nlohmann::json parsed;
  try {
    parsed = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& err) {
    throw std::invalid_argument(std::string("QLaurent JSON: ") + err.what());
  }
  if (!parsed.is_object()) throw std::invalid_argument("QLaurent JSON: expected an object");
  std::map<int, BigInt> terms;
  for (const auto& [key, val] : parsed.items()) {
    if (!is_decimal(key)) throw std::invalid_argument("QLaurent JSON: bad exponent '" + key + "'");
    std::string digits;
    if (val.is_string()) {
      digits = val.get<std::string>();
    } else if (val.is_number_integer()) {
      digits = val.dump();
    } else {
      throw std::invalid_argument("QLaurent JSON: coefficient must be a decimal string");
    }
    if (!is_decimal(digits)) throw std::invalid_argument("QLaurent JSON: bad coefficient '" + digits + "'");
    if (digits[0] == '+') digits.erase(0, 1);
    const int exponent = std::stoi(key);
    if (!terms.emplace(exponent, BigInt(digits)).second) {
      throw std::invalid_argument("QLaurent JSON: duplicate exponent " + key);
    }
  }
  return QLaurent::from_terms(terms);
}

}  // namespace qrook
