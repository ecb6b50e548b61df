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

#pragma once

// Exact scalars: big rationals and the Gaussian rationals Q(i).
//
// BigRational is always in lowest terms with a positive denominator; GMP's
// mpq_class does the heavy lifting and every constructor canonicalizes.
// GaussianRational is the field all certificates are computed over.

#include <gmpxx.h>

#include <compare>
#include <complex>
#include <cstdint>
#include <string>
#include <string_view>

namespace nullcert::algebra {

class BigRational {
 public:
  BigRational() = default;
  BigRational(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  BigRational(const mpz_class& num, const mpz_class& den);
  explicit BigRational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  // Exact: every finite double is a dyadic rational.
  static BigRational from_double(double value);
  // Accepts "p", "p/q", with an optional leading sign on p. Canonicalizes.
  static BigRational parse(std::string_view text);

  const mpq_class& value() const noexcept { return q_; }
  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }

  int sign() const noexcept { return sgn(q_); }
  bool is_zero() const noexcept { return sgn(q_) == 0; }
  double to_double() const { return q_.get_d(); }

  // "p/q" with the sign on p; zero is "0/1".
  std::string to_string() const;

  BigRational operator-() const { return BigRational(mpq_class(-q_), Raw{}); }
  BigRational& operator+=(const BigRational& o) { q_ += o.q_; return *this; }
  BigRational& operator-=(const BigRational& o) { q_ -= o.q_; return *this; }
  BigRational& operator*=(const BigRational& o) { q_ *= o.q_; return *this; }
  BigRational& operator/=(const BigRational& o);
  void sub_mul(const BigRational& a, const BigRational& b) { q_ -= a.q_ * b.q_; }

  friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
  friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
  friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
  friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }

  friend bool operator==(const BigRational& a, const BigRational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  struct Raw {};
  BigRational(mpq_class q, Raw) : q_(std::move(q)) {}
  mpq_class q_;
};

class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(BigRational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(BigRational re, BigRational im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational i() { return {BigRational(0), BigRational(1)}; }
  static GaussianRational from_complex(std::complex<double> z);

  // Grammar: "<rational>", "<rational>i", "<rational>(+|-)<rational>i",
  // where the imaginary sign may be doubled ("+-") as produced by naive
  // writers. Also accepts "i" and "-i".
  static GaussianRational parse(std::string_view text);

  const BigRational& re() const noexcept { return re_; }
  const BigRational& im() const noexcept { return im_; }

  bool is_zero() const noexcept { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const noexcept { return im_.is_zero(); }

  GaussianRational conj() const { return {re_, -im_}; }
  BigRational norm2() const { return re_ * re_ + im_ * im_; }
  // Throws ContractViolation on zero.
  GaussianRational inverse() const;

  std::complex<double> to_complex() const { return {re_.to_double(), im_.to_double()}; }

  // Canonical "p/q+r/si" or "p/q-r/si"; bit-exact, used in every text format.
  std::string to_string() const;

  GaussianRational operator-() const { return {-re_, -im_}; }
  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) = default;

  // this -= a * b, without a temporary for the product in the real case.
  void sub_mul(const GaussianRational& a, const GaussianRational& b);

 private:
  BigRational re_;
  BigRational im_;
};

enum class ArithOp { add, sub, mul, div };

// Dispatching form used by the C layer and by table-driven tests.
GaussianRational gaussian_arith(const GaussianRational& a, const GaussianRational& b, ArithOp op);

}  // namespace nullcert::algebra
