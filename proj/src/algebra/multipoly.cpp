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

#include "algebra/multipoly.hpp"

#include <unordered_map>
#include <vector>

#include "util/error.hpp"

namespace nullcert::algebra {

std::size_t gamma_degree(const VariableSpace& vs, const ExponentTuple& e) {
  return vs.has_gamma() ? e[vs.gamma_index()] : 0;
}

std::size_t matrix_degree(const VariableSpace& vs, const ExponentTuple& e) {
  return e.degree() - gamma_degree(vs, e);
}

MultiPoly::MultiPoly(VariableSpacePtr space) : space_(std::move(space)) {
  if (!space_) throw ContractViolation("polynomial without a variable space");
}

MultiPoly MultiPoly::constant(VariableSpacePtr space, const GaussianRational& c) {
  MultiPoly p(std::move(space));
  p.add_term(ExponentTuple(p.space_->size()), c);
  return p;
}

MultiPoly MultiPoly::variable(VariableSpacePtr space, std::size_t index) {
  MultiPoly p(std::move(space));
  if (index >= p.space_->size()) throw ContractViolation("variable index out of range");
  ExponentTuple e(p.space_->size());
  e.set(index, 1);
  p.add_term(e, GaussianRational(1));
  return p;
}

std::optional<unsigned> MultiPoly::degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.rbegin()->first.degree();
}

GaussianRational MultiPoly::coefficient(const ExponentTuple& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? GaussianRational() : it->second;
}

GaussianRational MultiPoly::constant_term() const {
  if (terms_.empty() || terms_.begin()->first.degree() != 0) return {};
  return terms_.begin()->second;
}

void MultiPoly::add_term(const ExponentTuple& e, const GaussianRational& c) {
  if (e.size() != space_->size()) throw ContractViolation("exponent tuple does not match the variable space");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool MultiPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  return terms_.begin()->first.degree() == terms_.rbegin()->first.degree();
}

std::optional<long> MultiPoly::weight(unsigned photons) const {
  std::optional<long> w;
  for (const auto& [e, c] : terms_) {
    long we = static_cast<long>(matrix_degree(*space_, e)) -
              static_cast<long>(photons) * static_cast<long>(gamma_degree(*space_, e));
    if (w && *w != we) return std::nullopt;
    w = we;
  }
  if (!w) return 0;
  return w;
}

void MultiPoly::require_same_space(const MultiPoly& o) const {
  if (space_ != o.space_ && !(*space_ == *o.space_))
    throw ContractViolation("polynomials live in different variable spaces");
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  require_same_space(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  require_same_space(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const GaussianRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) { return poly_mul(a, b); }

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (a.space_ != b.space_ && !(*a.space_ == *b.space_)) return false;
  return a.terms_ == b.terms_;
}

MultiPoly poly_mul(const MultiPoly& p, const MultiPoly& q) {
  p.require_same_space(q);
  MultiPoly out(p.space());
  if (p.is_zero() || q.is_zero()) return out;
  std::unordered_map<ExponentTuple, GaussianRational, ExponentHash> acc;
  acc.reserve(p.term_count() * q.term_count());
  for (const auto& [ep, cp] : p.terms())
    for (const auto& [eq, cq] : q.terms()) {
      auto [it, inserted] = acc.try_emplace(ep + eq);
      it->second += cp * cq;
    }
  for (auto& [e, c] : acc)
    if (!c.is_zero()) out.terms_.emplace(e, std::move(c));
  return out;
}

GaussianRational poly_eval(const MultiPoly& p, std::span<const std::optional<GaussianRational>> assignment) {
  const auto& vs = *p.space();
  if (assignment.size() != vs.size()) throw ContractViolation("assignment size does not match the variable space");
  // Lazily grown power tables per variable.
  std::vector<std::vector<GaussianRational>> powers(vs.size());
  auto power = [&](std::size_t k, unsigned e) -> const GaussianRational& {
    if (!assignment[k]) throw ContractViolation("assignment is missing variable " + vs[k].name());
    auto& table = powers[k];
    if (table.empty()) table.push_back(GaussianRational(1));
    while (table.size() <= e) table.push_back(table.back() * *assignment[k]);
    return table[e];
  };
  GaussianRational sum;
  for (const auto& [e, c] : p.terms()) {
    GaussianRational term = c;
    for (std::size_t k = 0; k < e.size(); ++k)
      if (e[k]) term *= power(k, e[k]);
    sum += term;
  }
  return sum;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) out += " ; ";
    first = false;
    out += c.to_string();
    out += " @ ";
    out += e.to_string();
  }
  return out;
}

MultiPoly MultiPoly::parse(VariableSpacePtr space, std::string_view text) {
  MultiPoly p(std::move(space));
  auto trimmed = text;
  while (!trimmed.empty() && trimmed.front() == ' ') trimmed.remove_prefix(1);
  while (!trimmed.empty() && trimmed.back() == ' ') trimmed.remove_suffix(1);
  if (trimmed == "0" || trimmed.empty()) return p;
  std::size_t start = 0;
  while (start <= trimmed.size()) {
    std::size_t end = trimmed.find(';', start);
    if (end == std::string_view::npos) end = trimmed.size();
    auto term = trimmed.substr(start, end - start);
    auto at = term.find('@');
    if (at == std::string_view::npos) throw ParseError("term without '@': '" + std::string(term) + "'");
    auto coeff = GaussianRational::parse(term.substr(0, at));
    auto exps = ExponentTuple::parse(term.substr(at + 1), p.space_->size());
    if (p.terms_.count(exps)) throw ParseError("duplicate monomial " + exps.to_string());
    p.add_term(exps, coeff);
    start = end + 1;
  }
  return p;
}

}  // namespace nullcert::algebra
