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

#include "algebra/monomial.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>

#include "util/error.hpp"

namespace nullcert::algebra {

std::string Variable::name() const {
  if (is_gamma()) return "gamma";
  return "A_" + std::to_string(row + 1) + "_" + std::to_string(col + 1);
}

VariableSpace::VariableSpace(std::vector<Variable> vars) : vars_(std::move(vars)) {}

std::shared_ptr<const VariableSpace> VariableSpace::make(std::vector<Variable> vars) {
  std::set<std::pair<unsigned, unsigned>> seen;
  bool gamma = false;
  for (std::size_t k = 0; k < vars.size(); ++k) {
    if (vars[k].is_gamma()) {
      if (gamma) throw ContractViolation("gamma appears twice in the variable space");
      if (k + 1 != vars.size()) throw ContractViolation("gamma must be the last variable");
      gamma = true;
    } else if (!seen.emplace(vars[k].row, vars[k].col).second) {
      throw ContractViolation("duplicate variable " + vars[k].name());
    }
  }
  auto vs = std::shared_ptr<VariableSpace>(new VariableSpace(std::move(vars)));
  vs->has_gamma_ = gamma;
  return vs;
}

std::shared_ptr<const VariableSpace> VariableSpace::matrix(std::span<const unsigned> rows, unsigned cols,
                                                           bool with_gamma) {
  std::vector<Variable> vars;
  vars.reserve(rows.size() * cols + 1);
  for (unsigned r : rows)
    for (unsigned c = 0; c < cols; ++c) vars.push_back(Variable::entry(r, c));
  if (with_gamma) vars.push_back(Variable::gamma());
  return make(std::move(vars));
}

std::size_t VariableSpace::gamma_index() const {
  if (!has_gamma_) throw ContractViolation("variable space has no gamma");
  return vars_.size() - 1;
}

std::optional<std::size_t> VariableSpace::index_of(unsigned row, unsigned col) const {
  for (std::size_t k = 0; k < matrix_entry_count(); ++k)
    if (vars_[k].row == row && vars_[k].col == col) return k;
  return std::nullopt;
}

ExponentTuple::ExponentTuple(std::vector<Exponent> exps) : exps_(std::move(exps)) {
  for (auto e : exps_) degree_ += e;
}

void ExponentTuple::set(std::size_t k, Exponent value) {
  degree_ = degree_ - exps_[k] + value;
  exps_[k] = value;
}

void ExponentTuple::increment(std::size_t k, Exponent by) {
  exps_[k] = static_cast<Exponent>(exps_[k] + by);
  degree_ += by;
}

ExponentTuple ExponentTuple::operator+(const ExponentTuple& other) const {
  if (other.size() != size()) throw ContractViolation("exponent tuples of different length");
  ExponentTuple out(*this);
  for (std::size_t k = 0; k < exps_.size(); ++k) out.exps_[k] = static_cast<Exponent>(out.exps_[k] + other.exps_[k]);
  out.degree_ = degree_ + other.degree_;
  return out;
}

bool ExponentTuple::divides(const ExponentTuple& other) const {
  if (other.size() != size()) return false;
  for (std::size_t k = 0; k < exps_.size(); ++k)
    if (exps_[k] > other.exps_[k]) return false;
  return true;
}

std::string ExponentTuple::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < exps_.size(); ++k) {
    if (k) out += ' ';
    out += std::to_string(exps_[k]);
  }
  return out;
}

ExponentTuple ExponentTuple::parse(std::string_view text, std::size_t expected_size) {
  std::istringstream in{std::string(text)};
  std::vector<Exponent> exps;
  std::string token;
  while (in >> token) {
    if (token.empty() || !std::all_of(token.begin(), token.end(), [](char c) { return c >= '0' && c <= '9'; }))
      throw ParseError("malformed exponent '" + token + "'");
    unsigned long v = std::stoul(token);
    if (v > std::numeric_limits<Exponent>::max()) throw ParseError("exponent out of range: " + token);
    exps.push_back(static_cast<Exponent>(v));
  }
  if (exps.size() != expected_size)
    throw ParseError("exponent tuple has " + std::to_string(exps.size()) + " entries, expected " +
                     std::to_string(expected_size));
  return ExponentTuple(std::move(exps));
}

std::strong_ordering graded_compare(const ExponentTuple& a, const ExponentTuple& b) {
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  auto ea = a.exponents();
  auto eb = b.exponents();
  std::size_t n = std::min(ea.size(), eb.size());
  for (std::size_t k = n; k-- > 0;) {
    if (ea[k] != eb[k]) return eb[k] <=> ea[k];
  }
  return ea.size() <=> eb.size();
}

std::size_t ExponentHash::operator()(const ExponentTuple& t) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto e : t.exponents()) {
    h ^= e;
    h *= 1099511628211ull;
  }
  return h;
}

void for_each_composition(std::size_t parts, unsigned total,
                          const std::function<void(const std::vector<ExponentTuple::Exponent>&)>& visit) {
  if (parts == 0) {
    if (total == 0) visit({});
    return;
  }
  std::vector<ExponentTuple::Exponent> cur(parts, 0);
  // Recursive fill: position k receives every value from `left` down to 0.
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t k, unsigned left) {
    if (k + 1 == parts) {
      cur[k] = static_cast<ExponentTuple::Exponent>(left);
      visit(cur);
      return;
    }
    for (unsigned v = left + 1; v-- > 0;) {
      cur[k] = static_cast<ExponentTuple::Exponent>(v);
      rec(k + 1, left - v);
    }
    cur[k] = 0;
  };
  rec(0, total);
}

namespace {

mpz_class binomial(unsigned long n, unsigned long k) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

void check_addressable(const mpz_class& count) {
  const auto cap = std::vector<ExponentTuple>().max_size();
  if (!count.fits_ulong_p() || count.get_ui() > cap)
    throw ResourceError("monomial count " + count.get_str() + " exceeds addressable size");
}

}  // namespace

std::vector<ExponentTuple> enumerate_monomials(const VariableSpace& vs, unsigned degree, EnumerationMode mode,
                                               unsigned photons) {
  const std::size_t v = vs.size();
  std::vector<ExponentTuple> out;
  switch (mode) {
    case EnumerationMode::up_to: {
      check_addressable(binomial(v + degree, degree));
      for (unsigned e = 0; e <= degree; ++e)
        for_each_composition(v, e, [&](const auto& c) { out.emplace_back(c); });
      break;
    }
    case EnumerationMode::exact: {
      if (v == 0) {
        if (degree == 0) out.emplace_back(std::vector<ExponentTuple::Exponent>{});
        break;
      }
      check_addressable(binomial(v + degree - 1, degree));
      for_each_composition(v, degree, [&](const auto& c) { out.emplace_back(c); });
      break;
    }
    case EnumerationMode::w_graded: {
      if (!vs.has_gamma()) throw ContractViolation("w-graded enumeration needs gamma in the variable space");
      if (photons == 0) throw ContractViolation("w-graded enumeration needs the photon number");
      const std::size_t a_vars = vs.matrix_entry_count();
      for (unsigned t = 0; (photons + 1) * t <= degree; ++t) {
        const unsigned a_deg = photons * t;
        if (a_vars == 0 && a_deg > 0) break;
        check_addressable(a_vars ? binomial(a_vars + a_deg - 1, a_deg) : mpz_class(1));
        for_each_composition(a_vars, a_deg, [&](const auto& c) {
          auto full = c;
          full.push_back(static_cast<ExponentTuple::Exponent>(t));
          out.emplace_back(std::move(full));
        });
      }
      break;
    }
  }
  std::sort(out.begin(), out.end(), GradedLess{});
  return out;
}

}  // namespace nullcert::algebra
