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

// Task file reader and writer.
//
//   # Bell pair from three photons
//   modes = 5
//   input = 1 1 1 0 0
//   herald_modes = 5
//   herald_pattern = 1
//   target = 1/1+0/1i : 1 0 1 0 ; 1/1+0/1i : 0 1 0 1
//   arithmetic = exact
//
// `input` is either a bare occupation vector or a state. `herald_modes`
// lists 1-based mode indices; the reader moves them to the end and records
// the permutation. Multi-pair files put shared keys first and then repeat
// [pair] blocks (input, target) and [suppression] blocks (input).

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <set>
#include <sstream>

#include "fock/task.hpp"
#include "util/error.hpp"

namespace nullcert::fock {

namespace {

struct Value {
  std::string text;
  std::size_t line = 0;
  std::size_t column = 0;
};

struct Block {
  std::string kind;  // "", "pair", "suppression"
  std::size_t line = 0;
  std::map<std::string, Value> values;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<Block> split_blocks(std::string_view text) {
  std::vector<Block> blocks(1);
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view raw = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::string_view line = trim(raw);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw ParseError("unterminated block header", line_no, 1);
      std::string kind(trim(line.substr(1, line.size() - 2)));
      if (kind != "pair" && kind != "suppression")
        throw ParseError("unknown block [" + kind + "]", line_no, 1);
      blocks.push_back(Block{kind, line_no, {}});
      continue;
    }
    auto eq = raw.find('=');
    if (eq == std::string_view::npos) throw ParseError("expected 'key = value'", line_no, 1);
    std::string key(trim(raw.substr(0, eq)));
    std::string_view value_raw = raw.substr(eq + 1);
    std::size_t column = eq + 2;
    while (!value_raw.empty() && std::isspace(static_cast<unsigned char>(value_raw.front()))) {
      value_raw.remove_prefix(1);
      ++column;
    }
    if (key.empty()) throw ParseError("empty key", line_no, 1);
    auto& values = blocks.back().values;
    if (values.count(key)) throw ParseError("duplicate key '" + key + "'", line_no, 1);
    values.emplace(key, Value{std::string(trim(value_raw)), line_no, column});
  }
  return blocks;
}

template <typename Fn>
auto at_value(const Value& v, Fn&& fn) -> decltype(fn(std::string_view{})) {
  try {
    return fn(v.text);
  } catch (const ParseError& e) {
    if (e.line() != 0) throw;
    throw ParseError(e.what(), v.line, v.column);
  } catch (const ContractViolation& e) {
    throw ParseError(e.what(), v.line, v.column);
  }
}

std::size_t parse_count(const Value& v) {
  return at_value(v, [](std::string_view s) {
    std::size_t out = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    if (ec != std::errc() || ptr != s.data() + s.size())
      throw ParseError("expected a nonnegative integer, got '" + std::string(s) + "'");
    return out;
  });
}

PureState parse_input(const Value& v) {
  return at_value(v, [](std::string_view s) {
    if (s.find(':') != std::string_view::npos) return parse_state(s);
    return PureState::basis(OccupationVector::parse(s));
  });
}

PureState parse_state_value(const Value& v) {
  return at_value(v, [](std::string_view s) { return parse_state(s); });
}

void check_keys(const Block& b, std::initializer_list<std::string_view> allowed) {
  for (const auto& [key, value] : b.values)
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
      throw ParseError("unknown key '" + key + "'", value.line, 1);
}

// Mode order that moves the listed 1-based heralding modes to the end.
std::vector<unsigned> herald_order(const Value& v, std::size_t modes) {
  auto occ = at_value(v, [](std::string_view s) { return OccupationVector::parse(s); });
  std::set<unsigned> heralded;
  std::vector<unsigned> listed;
  for (unsigned idx : occ.counts()) {
    if (idx < 1 || idx > modes)
      throw ParseError("heralding mode " + std::to_string(idx) + " out of range 1.." + std::to_string(modes), v.line,
                       v.column);
    if (!heralded.insert(idx - 1).second)
      throw ParseError("heralding mode " + std::to_string(idx) + " listed twice", v.line, v.column);
    listed.push_back(idx - 1);
  }
  std::vector<unsigned> order;
  for (unsigned k = 0; k < modes; ++k)
    if (!heralded.count(k)) order.push_back(k);
  order.insert(order.end(), listed.begin(), listed.end());
  return order;
}

bool is_identity(std::span<const unsigned> order) {
  for (std::size_t k = 0; k < order.size(); ++k)
    if (order[k] != k) return false;
  return true;
}

struct Shared {
  std::size_t modes = 0;
  std::size_t herald_modes = 0;
  OccupationVector pattern;
  Arithmetic arithmetic = Arithmetic::exact;
  std::vector<unsigned> order;      // from herald_modes
  std::vector<unsigned> declared;   // from mode_order
};

Shared parse_shared(const Block& b) {
  Shared s;
  auto it = b.values.find("modes");
  if (it == b.values.end()) throw ParseError("missing key 'modes'", b.line ? b.line : 1, 1);
  s.modes = parse_count(it->second);
  if (auto p = b.values.find("herald_pattern"); p != b.values.end() && !p->second.text.empty())
    s.pattern = at_value(p->second, [](std::string_view t) { return OccupationVector::parse(t); });
  s.herald_modes = s.pattern.modes();
  if (auto h = b.values.find("herald_modes"); h != b.values.end() && !h->second.text.empty()) {
    s.order = herald_order(h->second, s.modes);
    auto count = OccupationVector::parse(h->second.text).modes();
    if (count != s.herald_modes)
      throw ParseError("herald_modes lists " + std::to_string(count) + " modes but herald_pattern has " +
                           std::to_string(s.herald_modes) + " entries",
                       h->second.line, h->second.column);
    if (is_identity(s.order)) s.order.clear();
  }
  if (auto a = b.values.find("arithmetic"); a != b.values.end())
    s.arithmetic = at_value(a->second, [](std::string_view t) { return parse_arithmetic(t); });
  if (auto mo = b.values.find("mode_order"); mo != b.values.end()) {
    auto occ = at_value(mo->second, [](std::string_view t) { return OccupationVector::parse(t); });
    for (unsigned k : occ.counts()) {
      if (k < 1) throw ParseError("mode_order entries are 1-based", mo->second.line, mo->second.column);
      s.declared.push_back(k - 1);
    }
  }
  return s;
}

// Compose the recorded permutation: the file's declared order (if any)
// followed by the reordering implied by herald_modes.
std::vector<unsigned> compose(const Shared& s) {
  if (s.order.empty()) return s.declared;
  if (s.declared.empty()) return s.order;
  std::vector<unsigned> out(s.order.size());
  for (std::size_t p = 0; p < s.order.size(); ++p) out[p] = s.declared.at(s.order[p]);
  return out;
}

PureState reorder(const PureState& input, const Shared& s) {
  if (s.order.empty() || input.modes() != s.modes) return input;
  return input.permuted(s.order);
}

void write_shared(std::ostringstream& out, std::size_t modes, std::size_t herald_modes,
                  const OccupationVector& pattern, Arithmetic arithmetic, std::span<const unsigned> mode_order) {
  out << "modes = " << modes << "\n";
  if (herald_modes > 0) {
    out << "herald_modes =";
    for (std::size_t k = modes - herald_modes; k < modes; ++k) out << ' ' << (k + 1);
    out << "\n";
    out << "herald_pattern = " << pattern.to_string() << "\n";
  }
  out << "arithmetic = " << to_string(arithmetic) << "\n";
  if (!mode_order.empty()) {
    out << "mode_order =";
    for (unsigned k : mode_order) out << ' ' << (k + 1);
    out << "\n";
  }
}

}  // namespace

AnyTask parse_task_file(std::string_view text) {
  auto blocks = split_blocks(text);
  const Block& head = blocks.front();
  Shared shared = parse_shared(head);

  if (blocks.size() == 1) {
    check_keys(head, {"modes", "input", "herald_modes", "herald_pattern", "target", "arithmetic", "mode_order"});
    TaskSpec t;
    t.modes = shared.modes;
    t.herald_modes = shared.herald_modes;
    t.herald_pattern = shared.pattern;
    t.arithmetic = shared.arithmetic;
    if (auto in = head.values.find("input"); in != head.values.end()) t.input = reorder(parse_input(in->second), shared);
    if (auto tg = head.values.find("target"); tg != head.values.end() && !tg->second.text.empty())
      t.target = parse_state_value(tg->second);
    t.mode_order = compose(shared);
    return t;
  }

  check_keys(head, {"modes", "herald_modes", "herald_pattern", "arithmetic", "mode_order"});
  MultiTaskSpec mt;
  mt.modes = shared.modes;
  mt.herald_modes = shared.herald_modes;
  mt.herald_pattern = shared.pattern;
  mt.arithmetic = shared.arithmetic;
  mt.mode_order = compose(shared);
  for (std::size_t k = 1; k < blocks.size(); ++k) {
    const Block& b = blocks[k];
    auto in = b.values.find("input");
    if (in == b.values.end()) throw ParseError("[" + b.kind + "] block without 'input'", b.line, 1);
    if (b.kind == "pair") {
      check_keys(b, {"input", "target"});
      auto tg = b.values.find("target");
      if (tg == b.values.end()) throw ParseError("[pair] block without 'target'", b.line, 1);
      mt.pairs.push_back({reorder(parse_input(in->second), shared), parse_state_value(tg->second)});
    } else {
      check_keys(b, {"input"});
      mt.suppressions.push_back(reorder(parse_input(in->second), shared));
    }
  }
  return mt;
}

std::string serialize_task(const TaskSpec& task) {
  std::ostringstream out;
  write_shared(out, task.modes, task.herald_modes, task.herald_pattern, task.arithmetic, task.mode_order);
  if (task.input) {
    const auto& in = *task.input;
    if (in.size() == 1 && in.terms().begin()->second == Amplitude(GaussianRational(1)))
      out << "input = " << in.terms().begin()->first.to_string() << "\n";
    else
      out << "input = " << serialize_state(in) << "\n";
  }
  if (task.target) out << "target = " << serialize_state(*task.target) << "\n";
  return out.str();
}

std::string serialize_multi_task(const MultiTaskSpec& task) {
  std::ostringstream out;
  write_shared(out, task.modes, task.herald_modes, task.herald_pattern, task.arithmetic, task.mode_order);
  for (const auto& [in, tg] : task.pairs) {
    out << "\n[pair]\n";
    out << "input = " << serialize_state(in) << "\n";
    out << "target = " << serialize_state(tg) << "\n";
  }
  for (const auto& in : task.suppressions) {
    out << "\n[suppression]\n";
    out << "input = " << serialize_state(in) << "\n";
  }
  return out.str();
}

}  // namespace nullcert::fock
