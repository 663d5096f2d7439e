#include "tempered/exact_rational.hpp"

#include <cctype>
#include <stdexcept>

namespace tempered {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) {
    return false;
  }
  for (char c : s) {
    if (std::isdigit(static_cast<unsigned char>(c)) == 0) {
      return false;
    }
  }
  return true;
}

BigInt parse_integer(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) {
    throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
  }
  BigInt v(std::string(s), 10);
  return negative ? BigInt(-v) : v;
}

}  // namespace

ExactRational::ExactRational(const BigInt& num, const BigInt& den) : value_(num, den) {
  if (sgn(den) == 0) {
    throw std::domain_error("rational with zero denominator");
  }
  value_.canonicalize();
}

ExactRational ExactRational::parse(std::string_view text) {
  if (text.empty()) {
    throw std::invalid_argument("empty rational literal");
  }
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    return ExactRational(parse_integer(text.substr(0, slash)), parse_integer(text.substr(slash + 1)));
  }
  std::string_view mantissa = text;
  long exponent = 0;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    mantissa = text.substr(0, e);
    exponent = to_int64(parse_integer(text.substr(e + 1)));
  }
  bool negative = false;
  if (!mantissa.empty() && (mantissa.front() == '-' || mantissa.front() == '+')) {
    negative = mantissa.front() == '-';
    mantissa.remove_prefix(1);
  }
  std::string digits;
  long scale = 0;
  if (auto dot = mantissa.find('.'); dot != std::string_view::npos) {
    std::string_view ip = mantissa.substr(0, dot);
    std::string_view fp = mantissa.substr(dot + 1);
    if ((!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)) ||
        (ip.empty() && fp.empty())) {
      throw std::invalid_argument("malformed decimal literal: '" + std::string(text) + "'");
    }
    digits = std::string(ip) + std::string(fp);
    scale = static_cast<long>(fp.size());
  } else {
    if (!all_digits(mantissa)) {
      throw std::invalid_argument("malformed number: '" + std::string(text) + "'");
    }
    digits = std::string(mantissa);
  }
  BigInt num(digits, 10);
  if (negative) {
    num = -num;
  }
  long e10 = exponent - scale;
  if (e10 >= 0) {
    return ExactRational(BigInt(num * tempered::pow(BigInt(10), static_cast<unsigned long>(e10))));
  }
  return ExactRational(num, tempered::pow(BigInt(10), static_cast<unsigned long>(-e10)));
}

BigInt ExactRational::floor() const {
  return floor_div(value_.get_num(), value_.get_den());
}

BigInt ExactRational::ceil() const {
  return -floor_div(-value_.get_num(), value_.get_den());
}

ExactRational ExactRational::frac() const {
  return *this - ExactRational(floor());
}

ExactRational& ExactRational::operator+=(const ExactRational& o) {
  value_ += o.value_;
  return *this;
}

ExactRational& ExactRational::operator-=(const ExactRational& o) {
  value_ -= o.value_;
  return *this;
}

ExactRational& ExactRational::operator*=(const ExactRational& o) {
  value_ *= o.value_;
  return *this;
}

ExactRational& ExactRational::operator/=(const ExactRational& o) {
  if (o.sign() == 0) {
    throw std::domain_error("division by zero");
  }
  value_ /= o.value_;
  return *this;
}

std::string ExactRational::str() const {
  return value_.get_str();
}

ExactRational pow(const ExactRational& x, unsigned long e) {
  return ExactRational(tempered::pow(x.numerator(), e), tempered::pow(x.denominator(), e));
}

}  // namespace tempered
