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

// Certificate text format:
//
//   nullcert-certificate 1
//   task_digest <sha256 hex or ->
//   variables <V>
//   <index> <name>            (V lines)
//   degree <d>
//   total_degree <t>
//   measure matrix|total
//   options <free text>
//   equations <s>
//   beta <k> | <polynomial>   (s lines)

#include <charconv>
#include <sstream>

#include "nulla/nulla.hpp"
#include "nulla/report.hpp"
#include "util/error.hpp"

namespace nullcert::nulla {

namespace {

algebra::Variable parse_variable(const std::string& name) {
  if (name == "gamma") return algebra::Variable::gamma();
  unsigned row = 0, col = 0;
  if (name.size() > 2 && name.compare(0, 2, "A_") == 0) {
    const char* p = name.data() + 2;
    const char* end = name.data() + name.size();
    auto r1 = std::from_chars(p, end, row);
    if (r1.ec == std::errc() && r1.ptr < end && *r1.ptr == '_') {
      auto r2 = std::from_chars(r1.ptr + 1, end, col);
      if (r2.ec == std::errc() && r2.ptr == end && row >= 1 && col >= 1)
        return algebra::Variable::entry(row - 1, col - 1);
    }
  }
  throw ParseError("unknown variable name '" + name + "'");
}

class LineReader {
 public:
  explicit LineReader(std::string_view text) : in_(std::string(text)) {}

  std::string next(const char* expecting) {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.find_first_not_of(" \t") != std::string::npos) return line;
    }
    throw ParseError(std::string("unexpected end of certificate, expecting ") + expecting, line_ + 1, 1);
  }

  // "key value" with the key checked; returns the value text.
  std::string keyed(const std::string& key) {
    std::string line = next(key.c_str());
    if (line.compare(0, key.size(), key) != 0 || (line.size() > key.size() && line[key.size()] != ' '))
      throw ParseError("expected '" + key + "'", line_, 1);
    return line.size() > key.size() ? line.substr(key.size() + 1) : std::string();
  }

  std::size_t count(const std::string& key) {
    std::string v = keyed(key);
    std::size_t out = 0;
    auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc() || ptr != v.data() + v.size())
      throw ParseError("expected a count after '" + key + "'", line_, key.size() + 2);
    return out;
  }

  std::size_t line() const { return line_; }

 private:
  std::istringstream in_;
  std::size_t line_ = 0;
};

}  // namespace

std::string serialize_certificate(const Certificate& cert) {
  std::ostringstream out;
  const auto& vs = *cert.space;
  out << "nullcert-certificate 1\n";
  out << "task_digest " << (cert.task_digest.empty() ? "-" : cert.task_digest) << "\n";
  out << "variables " << vs.size() << "\n";
  for (std::size_t k = 0; k < vs.size(); ++k) out << k << ' ' << vs[k].name() << "\n";
  out << "degree " << cert.degree << "\n";
  out << "total_degree " << cert.total_degree << "\n";
  out << "measure " << to_string(cert.measure) << "\n";
  out << "options " << cert.options << "\n";
  out << "equations " << cert.betas.size() << "\n";
  for (std::size_t k = 0; k < cert.betas.size(); ++k) out << "beta " << k << " | " << cert.betas[k].to_string() << "\n";
  return out.str();
}

Certificate parse_certificate(std::string_view text) {
  LineReader in(text);
  if (in.next("header") != "nullcert-certificate 1")
    throw ParseError("not a nullcert certificate (bad header)", in.line(), 1);
  Certificate cert;
  cert.task_digest = in.keyed("task_digest");
  if (cert.task_digest == "-") cert.task_digest.clear();

  const std::size_t nvars = in.count("variables");
  std::vector<algebra::Variable> vars;
  for (std::size_t k = 0; k < nvars; ++k) {
    std::istringstream line(in.next("variable"));
    std::size_t idx = 0;
    std::string name;
    if (!(line >> idx >> name) || idx != k) throw ParseError("expected variable " + std::to_string(k), in.line(), 1);
    try {
      vars.push_back(parse_variable(name));
    } catch (const ParseError& e) {
      throw ParseError(e.what(), in.line(), 1);
    }
  }
  try {
    cert.space = algebra::VariableSpace::make(std::move(vars));
  } catch (const ContractViolation& e) {
    throw ParseError(e.what(), in.line(), 1);
  }
  cert.degree = static_cast<unsigned>(in.count("degree"));
  cert.total_degree = static_cast<unsigned>(in.count("total_degree"));
  try {
    cert.measure = parse_degree_measure(in.keyed("measure"));
  } catch (const ContractViolation& e) {
    throw ParseError(e.what(), in.line(), 1);
  }
  cert.options = in.keyed("options");
  const std::size_t neq = in.count("equations");
  for (std::size_t k = 0; k < neq; ++k) {
    std::string line = in.next("beta");
    const std::string prefix = "beta " + std::to_string(k) + " |";
    if (line.compare(0, prefix.size(), prefix) != 0) throw ParseError("expected '" + prefix + "'", in.line(), 1);
    try {
      cert.betas.push_back(MultiPoly::parse(cert.space, std::string_view(line).substr(prefix.size())));
    } catch (const Error& e) {
      throw ParseError(e.what(), in.line(), prefix.size() + 1);
    }
  }
  return cert;
}

nlohmann::ordered_json options_json(const CertificateSearchOptions& opts) {
  nlohmann::ordered_json j;
  j["max_degree"] = opts.max_degree;
  j["gamma_in_beta"] = opts.gamma_in_beta;
  j["w_grading"] = opts.w_grading;
  j["arithmetic"] = fock::to_string(opts.arithmetic);
  j["float_tol"] = opts.float_tol;
  j["memory_budget"] = opts.memory_budget;
  j["degree_measure"] = to_string(opts.measure);
  return j;
}

nlohmann::ordered_json report_json(const NullaReport& report) {
  nlohmann::ordered_json j;
  j["verdict"] = to_string(report.verdict);
  j["searched_degree"] = report.searched_degree ? nlohmann::ordered_json(*report.searched_degree) : nullptr;
  j["options"] = options_json(report.options);
  auto degrees = nlohmann::ordered_json::array();
  auto timing = nlohmann::ordered_json::array();
  double total = 0.0;
  for (const auto& d : report.degrees) {
    nlohmann::ordered_json row;
    row["degree"] = d.degree;
    row["outcome"] = to_string(d.outcome);
    row["columns"] = d.columns;
    row["rows"] = d.rows;
    row["nonzeros"] = d.nonzeros;
    row["pivots"] = d.pivots;
    row["fill_in"] = d.fill_in;
    if (d.residual) row["residual"] = *d.residual;
    degrees.push_back(std::move(row));
    timing.push_back({{"degree", d.degree}, {"seconds", d.elapsed_seconds}});
    total += d.elapsed_seconds;
  }
  j["degrees"] = std::move(degrees);
  if (report.certificate) {
    const auto& c = *report.certificate;
    std::size_t terms = 0;
    for (const auto& b : c.betas) terms += b.term_count();
    j["certificate"] = {{"degree", c.degree},
                        {"total_degree", c.total_degree},
                        {"measure", to_string(c.measure)},
                        {"multiplier_terms", terms}};
  } else {
    j["certificate"] = nullptr;
  }
  j["degree_upper_bound"] = report.degree_bound ? nlohmann::ordered_json(*report.degree_bound) : nullptr;
  j["resource_abort"] = report.resource_abort ? nlohmann::ordered_json(*report.resource_abort) : nullptr;
  if (report.note) j["note"] = *report.note;
  j["timing"] = {{"per_degree", std::move(timing)}, {"total_seconds", total}};
  return j;
}

}  // namespace nullcert::nulla
