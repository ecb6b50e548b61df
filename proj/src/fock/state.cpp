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

#include "fock/state.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <functional>
#include <sstream>

#include "util/error.hpp"

namespace nullcert::fock {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool looks_floating(std::string_view s) {
  return s.find('.') != std::string_view::npos || s.find('e') != std::string_view::npos ||
         s.find('E') != std::string_view::npos;
}

double parse_double(std::string_view s) {
  s = trim(s);
  std::string buf(s);
  char* end = nullptr;
  double v = std::strtod(buf.c_str(), &end);
  if (buf.empty() || end != buf.c_str() + buf.size()) throw ParseError("malformed amplitude '" + buf + "'");
  return v;
}

std::complex<double> parse_complex(std::string_view text) {
  std::string_view s = trim(text);
  if (s.empty()) throw ParseError("empty amplitude");
  if (s.back() != 'i') return {parse_double(s), 0.0};
  std::string_view body = s.substr(0, s.size() - 1);
  std::size_t split = std::string_view::npos;
  for (std::size_t k = 1; k < body.size(); ++k) {
    char prev = body[k - 1];
    if ((body[k] == '+' || body[k] == '-') && (std::isdigit(static_cast<unsigned char>(prev)) || prev == '.')) {
      split = k;
      break;
    }
  }
  double re = 0.0;
  std::string_view im_text = body;
  if (split != std::string_view::npos) {
    re = parse_double(body.substr(0, split));
    im_text = body.substr(split);
  }
  bool negative = false;
  while (!im_text.empty() && (im_text.front() == '+' || im_text.front() == '-')) {
    negative ^= im_text.front() == '-';
    im_text.remove_prefix(1);
  }
  double im = im_text.empty() ? 1.0 : parse_double(im_text);
  return {re, negative ? -im : im};
}

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  std::string out(buf, ptr);
  // Keep the value recognizably floating so it re-parses as such.
  if (out.find_first_of(".eEn") == std::string::npos) out += ".0";
  return out;
}

bool amplitude_is_zero(const Amplitude& a) {
  if (const auto* g = std::get_if<GaussianRational>(&a)) return g->is_zero();
  return std::get<std::complex<double>>(a) == std::complex<double>(0.0, 0.0);
}

}  // namespace

OccupationVector::OccupationVector(std::vector<unsigned> counts) : counts_(std::move(counts)) {
  for (unsigned c : counts_) total_ += c;
}

std::uint64_t OccupationVector::factorial_product() const {
  std::uint64_t out = 1;
  for (unsigned c : counts_)
    for (unsigned k = 2; k <= c; ++k) out *= k;
  return out;
}

OccupationVector OccupationVector::with_added(std::size_t mode, unsigned photons) const {
  OccupationVector out(*this);
  out.counts_.at(mode) += photons;
  out.total_ += photons;
  return out;
}

OccupationVector OccupationVector::prefix(std::size_t modes) const {
  return OccupationVector(std::vector<unsigned>(counts_.begin(), counts_.begin() + static_cast<long>(modes)));
}

OccupationVector OccupationVector::suffix_from(std::size_t first) const {
  return OccupationVector(std::vector<unsigned>(counts_.begin() + static_cast<long>(first), counts_.end()));
}

OccupationVector OccupationVector::permuted(std::span<const unsigned> order) const {
  std::vector<unsigned> out(order.size());
  for (std::size_t p = 0; p < order.size(); ++p) out[p] = counts_.at(order[p]);
  return OccupationVector(std::move(out));
}

OccupationVector OccupationVector::padded(std::size_t modes) const {
  auto out = counts_;
  out.resize(std::max(modes, out.size()), 0);
  return OccupationVector(std::move(out));
}

std::string OccupationVector::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < counts_.size(); ++k) {
    if (k) out += ' ';
    out += std::to_string(counts_[k]);
  }
  return out;
}

OccupationVector OccupationVector::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<unsigned> counts;
  std::string token;
  while (in >> token) {
    unsigned v = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc() || ptr != token.data() + token.size())
      throw ParseError("malformed occupation entry '" + token + "'");
    counts.push_back(v);
  }
  if (counts.empty()) throw ParseError("empty occupation vector");
  return OccupationVector(std::move(counts));
}

std::vector<OccupationVector> fock_basis(unsigned photons, std::size_t modes) {
  std::vector<OccupationVector> out;
  if (modes == 0) return out;
  std::vector<unsigned> cur(modes, 0);
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t k, unsigned left) {
    if (k + 1 == modes) {
      cur[k] = left;
      out.emplace_back(cur);
      return;
    }
    for (unsigned v = left + 1; v-- > 0;) {
      cur[k] = v;
      rec(k + 1, left - v);
    }
  };
  rec(0, photons);
  return out;
}

std::string to_string(Arithmetic a) { return a == Arithmetic::exact ? "exact" : "float"; }

Arithmetic parse_arithmetic(std::string_view text) {
  auto t = trim(text);
  if (t == "exact") return Arithmetic::exact;
  if (t == "float") return Arithmetic::floating;
  throw ParseError("arithmetic must be 'exact' or 'float', got '" + std::string(t) + "'");
}

PureState PureState::make(std::size_t modes, std::vector<std::pair<OccupationVector, Amplitude>> terms) {
  PureState s;
  s.modes_ = modes;
  bool first = true;
  for (auto& [occ, amp] : terms) {
    if (occ.modes() != modes)
      throw ContractViolation("basis vector " + occ.to_string() + " has " + std::to_string(occ.modes()) +
                              " modes, expected " + std::to_string(modes));
    if (first) {
      s.photons_ = occ.total();
      first = false;
    } else if (occ.total() != s.photons_) {
      throw ContractViolation("basis vectors carry different photon numbers (" + std::to_string(s.photons_) +
                              " vs " + std::to_string(occ.total()) + ")");
    }
    if (!s.terms_.emplace(occ, std::move(amp)).second)
      throw ContractViolation("duplicate basis vector " + occ.to_string());
  }
  std::erase_if(s.terms_, [](const auto& kv) { return amplitude_is_zero(kv.second); });
  if (s.terms_.empty()) throw ContractViolation("state has no nonzero amplitude");
  return s;
}

PureState PureState::basis(const OccupationVector& occ, GaussianRational amplitude) {
  return make(occ.modes(), {{occ, std::move(amplitude)}});
}

bool PureState::is_exact() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& kv) { return std::holds_alternative<GaussianRational>(kv.second); });
}

GaussianRational PureState::exact_amplitude(const Amplitude& a) {
  if (const auto* g = std::get_if<GaussianRational>(&a)) return *g;
  return GaussianRational::from_complex(std::get<std::complex<double>>(a));
}

BigRational PureState::fock_norm2() const {
  BigRational sum;
  for (const auto& [occ, amp] : terms_) {
    const auto* g = std::get_if<GaussianRational>(&amp);
    if (!g) throw ContractViolation("exact norm requested for a floating state");
    sum += g->norm2() * BigRational(static_cast<long>(occ.factorial_product()));
  }
  return sum;
}

double PureState::fock_norm2_approx() const {
  double sum = 0.0;
  for (const auto& [occ, amp] : terms_) {
    auto z = std::holds_alternative<GaussianRational>(amp) ? std::get<GaussianRational>(amp).to_complex()
                                                           : std::get<std::complex<double>>(amp);
    sum += std::norm(z) * static_cast<double>(occ.factorial_product());
  }
  return sum;
}

PureState PureState::scaled(const GaussianRational& c) const {
  std::vector<std::pair<OccupationVector, Amplitude>> terms;
  for (const auto& [occ, amp] : terms_) {
    if (const auto* g = std::get_if<GaussianRational>(&amp))
      terms.emplace_back(occ, *g * c);
    else
      terms.emplace_back(occ, std::get<std::complex<double>>(amp) * c.to_complex());
  }
  return make(modes_, std::move(terms));
}

PureState PureState::permuted(std::span<const unsigned> order) const {
  std::vector<std::pair<OccupationVector, Amplitude>> terms;
  for (const auto& [occ, amp] : terms_) terms.emplace_back(occ.permuted(order), amp);
  return make(order.size(), std::move(terms));
}

PureState PureState::padded(std::size_t modes) const {
  if (modes <= modes_) return *this;
  std::vector<std::pair<OccupationVector, Amplitude>> terms;
  for (const auto& [occ, amp] : terms_) terms.emplace_back(occ.padded(modes), amp);
  return make(modes, std::move(terms));
}

PureState parse_state(std::string_view text) {
  std::vector<std::pair<OccupationVector, Amplitude>> terms;
  std::size_t modes = 0;
  std::size_t start = 0;
  auto body = trim(text);
  if (body.empty()) throw ParseError("empty state");
  while (start <= body.size()) {
    std::size_t end = body.find(';', start);
    if (end == std::string_view::npos) end = body.size();
    auto term = trim(body.substr(start, end - start));
    auto colon = term.find(':');
    if (colon == std::string_view::npos)
      throw ParseError("state term '" + std::string(term) + "' lacks 'amplitude : occupation'");
    auto amp_text = trim(term.substr(0, colon));
    auto occ = OccupationVector::parse(term.substr(colon + 1));
    if (terms.empty()) {
      modes = occ.modes();
    } else if (occ.modes() != modes) {
      throw ParseError("inconsistent mode counts in state (" + std::to_string(modes) + " vs " +
                       std::to_string(occ.modes()) + ")");
    }
    for (const auto& [seen, _] : terms)
      if (seen == occ) throw ParseError("duplicate basis vector " + occ.to_string());
    if (looks_floating(amp_text))
      terms.emplace_back(std::move(occ), parse_complex(amp_text));
    else
      terms.emplace_back(std::move(occ), GaussianRational::parse(amp_text));
    start = end + 1;
  }
  try {
    return PureState::make(modes, std::move(terms));
  } catch (const ContractViolation& e) {
    throw ParseError(e.what());
  }
}

std::string serialize_state(const PureState& s) {
  std::string out;
  bool first = true;
  for (const auto& [occ, amp] : s.terms()) {
    if (!first) out += " ; ";
    first = false;
    if (const auto* g = std::get_if<GaussianRational>(&amp)) {
      out += g->to_string();
    } else {
      auto z = std::get<std::complex<double>>(amp);
      out += format_double(z.real());
      out += z.imag() < 0 || std::signbit(z.imag()) ? "-" : "+";
      out += format_double(std::abs(z.imag()));
      out += "i";
    }
    out += " : ";
    out += occ.to_string();
  }
  return out;
}

}  // namespace nullcert::fock
