// Copyright 2026 The nullcert Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "algebra/scalar.hpp"

#include <cctype>
#include <cmath>

#include "util/error.hpp"

namespace nullcert::algebra {

namespace {

bool is_digit_run(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

BigRational::BigRational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw ContractViolation("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

BigRational BigRational::from_double(double value) {
  if (!std::isfinite(value)) throw ContractViolation("cannot convert a non-finite double to a rational");
  return BigRational(mpq_class(value));
}

BigRational BigRational::parse(std::string_view text) {
  std::string_view s = trim(text);
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  std::string_view num = s;
  std::string_view den = "1";
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    num = s.substr(0, slash);
    den = s.substr(slash + 1);
  }
  if (!is_digit_run(num) || !is_digit_run(den))
    throw ParseError("malformed rational '" + std::string(text) + "'");
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  if (negative) n = -n;
  return BigRational(n, d);
}

std::string BigRational::to_string() const {
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

BigRational& BigRational::operator/=(const BigRational& o) {
  if (o.is_zero()) throw ContractViolation("division by zero");
  q_ /= o.q_;
  return *this;
}

GaussianRational GaussianRational::from_complex(std::complex<double> z) {
  return {BigRational::from_double(z.real()), BigRational::from_double(z.imag())};
}

GaussianRational GaussianRational::parse(std::string_view text) {
  std::string_view s = trim(text);
  if (s.empty()) throw ParseError("empty amplitude");
  if (s.back() != 'i') return GaussianRational(BigRational::parse(s));

  std::string_view body = s.substr(0, s.size() - 1);
  // Split at the first sign that follows a digit: that sign starts the
  // imaginary part. Anything else is a pure imaginary number.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = 1; k < body.size(); ++k) {
    if ((body[k] == '+' || body[k] == '-') && std::isdigit(static_cast<unsigned char>(body[k - 1]))) {
      split = k;
      break;
    }
  }
  BigRational re;
  std::string_view im_text = body;
  if (split != std::string_view::npos) {
    re = BigRational::parse(body.substr(0, split));
    im_text = body.substr(split);
  }
  // Collapse a doubled sign such as "+-3/4".
  bool negative = false;
  while (!im_text.empty() && (im_text.front() == '+' || im_text.front() == '-')) {
    negative ^= im_text.front() == '-';
    im_text.remove_prefix(1);
  }
  BigRational im = im_text.empty() ? BigRational(1) : BigRational::parse(im_text);
  if (negative) im = -im;
  return {re, im};
}

GaussianRational GaussianRational::inverse() const {
  if (is_zero()) throw ContractViolation("division by zero");
  BigRational n = norm2();
  return {re_ / n, -im_ / n};
}

std::string GaussianRational::to_string() const {
  std::string out = re_.to_string();
  if (im_.sign() < 0) {
    out += "-" + (-im_).to_string();
  } else {
    out += "+" + im_.to_string();
  }
  out += "i";
  return out;
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  if (!o.im_.is_zero()) im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  if (!o.im_.is_zero()) im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (o.im_.is_zero()) {
    re_ *= o.re_;
    if (!im_.is_zero()) im_ *= o.re_;
    return *this;
  }
  if (im_.is_zero()) {
    im_ = re_ * o.im_;
    re_ *= o.re_;
    return *this;
  }
  BigRational re = re_ * o.re_ - im_ * o.im_;
  BigRational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (o.is_zero()) throw ContractViolation("division by zero");
  if (o.im_.is_zero()) {
    re_ /= o.re_;
    if (!im_.is_zero()) im_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

void GaussianRational::sub_mul(const GaussianRational& a, const GaussianRational& b) {
  if (a.im_.is_zero() && b.im_.is_zero()) {
    re_.sub_mul(a.re_, b.re_);
    return;
  }
  *this -= a * b;
}

GaussianRational gaussian_arith(const GaussianRational& a, const GaussianRational& b, ArithOp op) {
  switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
    case ArithOp::div: return a / b;
  }
  throw ContractViolation("unknown arithmetic operation");
}

}  // namespace nullcert::algebra
