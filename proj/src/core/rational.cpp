#include "netform/rational.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace netform {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

[[noreturn]] void bad(std::string_view text) {
  throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) bad(text);

  bool negative = false;
  if (s.front() == '-' || s.front() == '+') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }

  Rational result;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    std::string_view num = s.substr(0, slash);
    std::string_view den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) bad(text);
    mpz_class d(std::string(den), 10);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    result = Rational(mpz_class(std::string(num), 10), d);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view whole = s.substr(0, dot);
    std::string_view frac = s.substr(dot + 1);
    if (whole.empty() && frac.empty()) bad(text);
    if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac))) bad(text);
    std::string digits = std::string(whole) + std::string(frac);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
    result = Rational(mpz_class(digits.empty() ? "0" : digits, 10), den);
  } else {
    if (!all_digits(s)) bad(text);
    result = Rational(mpz_class(std::string(s), 10));
  }
  result.canonicalize();
  if (negative) result = -result;
  return result;
}

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string format_decimal(const Rational& value, int places) {
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(places));
  const bool negative = value < 0;
  Rational magnitude = negative ? Rational(-value) : value;
  Rational scaled = magnitude * scale;
  // round half away from zero on the magnitude
  mpz_class twice = 2 * scaled.get_num() + scaled.get_den();
  mpz_class rounded;
  mpz_fdiv_q(rounded.get_mpz_t(), twice.get_mpz_t(), mpz_class(2 * scaled.get_den()).get_mpz_t());

  std::string digits = rounded.get_str();
  if (places > 0) {
    if (digits.size() <= static_cast<std::size_t>(places)) {
      digits.insert(0, static_cast<std::size_t>(places) + 1 - digits.size(), '0');
    }
    digits.insert(digits.size() - static_cast<std::size_t>(places), ".");
  }
  if (negative && rounded != 0) digits.insert(0, "-");
  return digits;
}

std::string format_compact(const Rational& value, int max_places) {
  mpz_class den = value.get_den();
  int twos = 0;
  int fives = 0;
  while (mpz_divisible_ui_p(den.get_mpz_t(), 2)) {
    den /= 2;
    ++twos;
  }
  while (mpz_divisible_ui_p(den.get_mpz_t(), 5)) {
    den /= 5;
    ++fives;
  }
  const int places = std::max(twos, fives);
  if (den != 1 || places > max_places) return format_decimal(value, max_places);
  return format_decimal(value, places);
}

mpz_class round_half_up(const Rational& value) {
  // floor(value + 1/2)
  Rational shifted = value + Rational(1, 2);
  mpz_class out;
  mpz_fdiv_q(out.get_mpz_t(), shifted.get_num_mpz_t(), shifted.get_den_mpz_t());
  return out;
}

double to_double(const Rational& value) { return value.get_d(); }

std::vector<Rational> rational_range(const Rational& lo, const Rational& hi, const Rational& step) {
  if (step <= 0) throw std::invalid_argument("range step must be positive");
  if (hi < lo) throw std::invalid_argument("range upper end is below the lower end");
  Rational count = (hi - lo) / step;
  count.canonicalize();
  if (count.get_den() != 1) throw std::invalid_argument("range is not a whole number of steps");
  std::vector<Rational> out;
  const unsigned long steps = count.get_num().get_ui();
  out.reserve(steps + 1);
  for (unsigned long k = 0; k <= steps; ++k) {
    Rational v = lo + step * Rational(k);
    v.canonicalize();
    out.push_back(v);
  }
  return out;
}

}  // namespace netform
