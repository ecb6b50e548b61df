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

// Acceptance runner: one PASS/FAIL line per criterion.
//
//   nullcert_acceptance [--extended] [--samples N] [--only K]
//
// Criterion 6 runs only with --extended and is reported as SKIP otherwise.
// The exit status is 0 when no criterion failed.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "bounds/bounds.hpp"
#include "compiler/compiler.hpp"
#include "fock/task.hpp"
#include "nulla/nulla.hpp"
#include "oracles.hpp"
#include "repro/pipeline.hpp"
#include "repro/reproduce.hpp"

namespace {

using namespace nullcert;
using algebra::GaussianRational;
using nulla::CertificateSearchOptions;
using nulla::Verdict;

enum class Status { pass, fail, skip };

struct Outcome {
  Status status = Status::fail;
  std::string detail;
};

struct Settings {
  bool extended = false;
  std::optional<unsigned> samples;
};

class Clock {
 public:
  double seconds() const { return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count(); }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string fmt_seconds(double s) {
  std::ostringstream os;
  os.precision(3);
  os << s << " s";
  return os.str();
}

// Collects failed checks so a criterion can report the first few.
class Checks {
 public:
  void expect(bool ok, const std::string& what) {
    ++count_;
    if (!ok) failures_.push_back(what);
  }
  bool ok() const { return failures_.empty(); }
  std::size_t count() const { return count_; }
  std::string summary() const {
    if (failures_.empty()) return std::to_string(count_) + " checks";
    std::string out = std::to_string(failures_.size()) + "/" + std::to_string(count_) + " checks failed: " + failures_[0];
    if (failures_.size() > 1) out += "; " + failures_[1];
    return out;
  }

 private:
  std::size_t count_ = 0;
  std::vector<std::string> failures_;
};

CertificateSearchOptions search(unsigned d) {
  CertificateSearchOptions o;
  o.max_degree = d;
  o.memory_budget = repro::default_memory_budget();
  return o;
}

compiler::PolynomialSystem compile_spec(const fock::TaskSpec& t) { return repro::compile_any(fock::AnyTask(t)); }

std::optional<unsigned> first_degree(const compiler::PolynomialSystem& ps, const CertificateSearchOptions& o) {
  const auto r = nulla::certify(ps, o);
  if (r.verdict != Verdict::infeasible_proven) return std::nullopt;
  return r.certificate->degree;
}

std::string show(std::optional<unsigned> d) { return d ? std::to_string(*d) : "none"; }

fock::TaskSpec table1_task(unsigned target_modes, unsigned herald_photons, std::uint64_t seed) {
  return fock::canonicalize(2 + herald_photons, herald_photons, fock::haar_random_target(2, target_modes, seed));
}

// ---------------------------------------------------------------------------

Outcome bound_reproduction(const Settings&) {
  Clock clock;
  Checks c;
  const std::vector<std::pair<bounds::Geometry, long>> table = {
      {{2, 0, 3, 0}, 126}, {{3, 1, 4, 1}, 726}, {{2, 0, 4, 0}, 510}, {{3, 1, 5, 1}, 59046}};
  for (const auto& [g, want] : table) c.expect(bounds::degree_upper_bound(g) == want, "bound " + std::to_string(want));

  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 20; ++trial) {
    bounds::Geometry g;
    g.n = std::uniform_int_distribution<unsigned>(2, 6)(rng);
    g.m = std::uniform_int_distribution<unsigned>(0, g.n - 1)(rng);
    g.N = std::uniform_int_distribution<unsigned>(2, 7)(rng);
    g.M = std::uniform_int_distribution<unsigned>(0, g.N - 1)(rng);
    const unsigned d = std::uniform_int_distribution<unsigned>(0, 8)(rng);
    const long V = std::min(g.N * g.n, g.N * g.N);
    const long n = g.n;
    const mpz_class s = oracle::choose(g.n - g.m + g.N - g.M - 1, g.n - g.m);
    const mpz_class rows = d + 1 >= g.n ? oracle::choose(V + d + n, V)
                                        : mpz_class(oracle::choose(V + d + n, V) - oracle::choose(V - 1 + n, V) +
                                                    oracle::choose(V + d, V));
    const std::string tag = "geometry " + std::to_string(trial);
    c.expect(bounds::equation_count(g) == s, tag + " equation count");
    c.expect(bounds::column_bound(g, d) == s * oracle::choose(V + d, d), tag + " column bound");
    c.expect(bounds::row_bound(g, d) == rows, tag + " row bound");
  }
  const double t = clock.seconds();
  c.expect(t < 1.0, "runtime " + fmt_seconds(t));
  return {c.ok() ? Status::pass : Status::fail, "126/726/510/59046 and 20 geometries, " + c.summary() + ", " + fmt_seconds(t)};
}

Outcome noon_criterion(unsigned n, unsigned ceiling, double limit) {
  Clock clock;
  const fock::AnyTask task(repro::noon_task(n));
  const auto r = repro::certify_task(task, search(ceiling));
  const double t = clock.seconds();
  if (r.report.verdict != Verdict::infeasible_proven) return {Status::fail, "verdict " + nulla::to_string(r.report.verdict)};
  const auto& cert = *r.report.certificate;
  const auto reread = nulla::parse_certificate(nulla::serialize_certificate(cert));
  const bool verified = repro::verify_task_certificate(task, reread).ok;
  std::mt19937_64 rng(n);
  const bool pointwise = oracle::certificate_at_random_point(r.system, cert, rng) == GaussianRational(1);
  const bool ok = cert.degree <= ceiling && verified && pointwise && t < limit;
  std::ostringstream os;
  os << "INFEASIBLE_PROVEN at degree " << cert.degree << " (ceiling " << ceiling << "), re-verified "
     << (verified ? "yes" : "no") << ", random-point check " << (pointwise ? "yes" : "no") << ", " << fmt_seconds(t);
  return {ok ? Status::pass : Status::fail, os.str()};
}

// Runs a reproduction suite and tallies experiment statuses.
struct SuiteTally {
  std::map<std::string, std::size_t> status;
  unsigned max_degree = 0;
  std::vector<std::string> failed;
  std::vector<std::string> skipped;
  std::optional<unsigned> min_searched;  // lowest fully searched degree over the experiments
  std::size_t certificates = 0;
  double seconds = 0.0;
};

SuiteTally run_suite(const std::string& suite, const Settings& s, std::optional<bool> extended = std::nullopt) {
  Clock clock;
  repro::ReproduceConfig cfg;
  cfg.suite = suite;
  cfg.samples = s.samples;
  cfg.extended = extended.value_or(s.extended);
  cfg.memory_budget = repro::default_memory_budget();
  const auto report = repro::run_reproduce(cfg);
  SuiteTally t;
  for (const auto& e : report["experiments"]) {
    const std::string st = e["status"].get<std::string>();
    ++t.status[st];
    if (e.contains("degree")) {
      t.max_degree = std::max(t.max_degree, e["degree"].get<unsigned>());
      ++t.certificates;
    }
    if (e.contains("report") && !e["report"]["searched_degree"].is_null()) {
      const auto d = e["report"]["searched_degree"].get<unsigned>();
      t.min_searched = std::min(t.min_searched.value_or(d), d);
    }
    if (st == "fail") t.failed.push_back(e["name"].get<std::string>());
    if (st.rfind("skipped", 0) == 0) t.skipped.push_back(e["name"].get<std::string>() + " " + st);
    if (e.contains("certificate_verified") && !e["certificate_verified"].get<bool>())
      t.failed.push_back(e["name"].get<std::string>() + " (certificate)");
  }
  t.seconds = clock.seconds();
  return t;
}

std::string tally_text(const SuiteTally& t) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : t.status) {
    os << (first ? "" : ", ") << v << " " << k;
    first = false;
  }
  return os.str();
}

Outcome table1_infeasible_rows(const Settings& s) {
  std::ostringstream os;
  bool ok = true;
  for (const char* row : {"table1:1", "table1:3"}) {
    const auto t = run_suite(row, s);
    const std::size_t total = std::accumulate(t.status.begin(), t.status.end(), std::size_t{0},
                                              [](std::size_t a, const auto& kv) { return a + kv.second; });
    const bool row_ok = t.failed.empty() && t.status.count("pass") && t.status.at("pass") == total && t.max_degree <= 4;
    ok = ok && row_ok;
    os << row << ": " << tally_text(t) << ", max degree " << t.max_degree << ", " << fmt_seconds(t.seconds) << "; ";
  }
  std::string d = os.str();
  d.resize(d.size() - 2);
  return {ok ? Status::pass : Status::fail, d};
}

Outcome table1_row_two(const Settings& s) {
  const auto t = run_suite("table1:2", s, false);
  // Every sample must pass: undecided with the full cap searched.
  bool ok = t.status.size() == 1 && t.status.count("pass") && t.certificates == 0;
  std::string detail = tally_text(t) + ", UNDECIDED through degree 3, " + fmt_seconds(t.seconds);
  if (s.extended) {
    // Degree cap 9. A certificate would contradict the feasible group; a
    // resource abort only limits how far the search got.
    const auto x = run_suite("table1:2", s, true);
    ok = ok && x.certificates == 0 && x.failed.empty();
    detail += "; extended cap 9: " + tally_text(x) + ", no certificate, every sample searched through degree " +
              show(x.min_searched) + ", " + fmt_seconds(x.seconds);
  }
  return {ok ? Status::pass : Status::fail, detail};
}

Outcome extended_reproductions(const Settings& s) {
  if (!s.extended) return {Status::skip, "heavy experiments need --extended"};
  std::ostringstream os;
  bool ok = true;
  std::vector<std::string> skipped;
  for (const char* suite : {"noon5", "noon6", "noon7", "bell3", "cnot1"}) {
    const auto t = run_suite(suite, s);
    ok = ok && t.failed.empty();
    os << suite << " " << tally_text(t);
    if (t.status.count("pass")) os << " (degree " << t.max_degree << ")";
    os << ", " << fmt_seconds(t.seconds) << "; ";
    if (!t.skipped.empty()) skipped.push_back(suite);
  }
  std::string d = os.str();
  d.resize(d.size() - 2);
  if (!skipped.empty()) {
    d += "; resource aborts are skips, not failures:";
    for (const auto& k : skipped) d += " " + k;
  }
  return {ok ? Status::pass : Status::fail, d};
}

Outcome soundness(const Settings&) {
  Checks c;
  struct Case {
    const char* name;
    const char* text;
    std::vector<long> a;
  };
  const std::vector<Case> cases = {{"identity", "modes = 2\ninput = 1 0\ntarget = 1 : 1 0\n", {1, 0}},
                                   {"swap", "modes = 2\ninput = 1 0\ntarget = 1 : 0 1\n", {0, 1}},
                                   {"hom", "modes = 2\ninput = 1 1\ntarget = 1 : 2 0 ; -1 : 0 2\n", {1, 1, 1, -1}}};
  for (const auto& k : cases) {
    const auto ps = repro::compile_any(fock::parse_task_file(k.text));
    std::vector<GaussianRational> x;
    for (long v : k.a) x.emplace_back(v);
    x.emplace_back(1);
    c.expect(x.size() == ps.space->size(), std::string(k.name) + " variable count");
    if (x.size() != ps.space->size()) continue;
    for (const auto& eq : ps.equations)
      c.expect(oracle::evaluate(eq.poly, x).is_zero(), std::string(k.name) + " equation nonzero at solution");
    for (unsigned d = 0; d <= 4; ++d)
      c.expect(!nulla::find_certificate(ps, d, search(4)).has_value(),
               std::string(k.name) + " certificate at degree " + std::to_string(d));
    // Every active row keeps all of its entries as free variables.
    c.expect(ps.space->matrix_entry_count() % ps.modes == 0, std::string(k.name) + " entry pinned");
  }

  const auto swap = repro::compile_any(fock::parse_task_file(cases[1].text));
  for (bool grading : {true, false})
    for (bool gamma : {true, false})
      for (auto measure : {nulla::DegreeMeasure::matrix, nulla::DegreeMeasure::total}) {
        auto o = search(4);
        o.w_grading = grading;
        o.gamma_in_beta = gamma;
        o.measure = measure;
        c.expect(nulla::certify(swap, o).verdict != Verdict::infeasible_proven, "swap reported infeasible");
      }

  // Entries stay free on the reproduction tasks as well.
  for (unsigned n : {3u, 4u}) {
    const auto ps = compile_spec(repro::noon_task(n));
    c.expect(ps.space->matrix_entry_count() % ps.modes == 0, "noon entry pinned");
  }
  return {c.ok() ? Status::pass : Status::fail, "identity, swap, HOM: " + c.summary()};
}

Outcome permanent_equivalence(const Settings&) {
  using algebra::VariableSpace;
  std::mt19937_64 rng(2024);
  std::size_t amplitudes = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const unsigned N = std::uniform_int_distribution<unsigned>(1, 5)(rng);
    const unsigned n = std::min(std::uniform_int_distribution<unsigned>(1, 4)(rng), N);
    std::vector<unsigned> modes(N);
    for (unsigned k = 0; k < N; ++k) modes[k] = k;
    std::shuffle(modes.begin(), modes.end(), rng);
    std::vector<unsigned> rows(modes.begin(), modes.begin() + n);
    std::sort(rows.begin(), rows.end());
    std::vector<unsigned> in(N, 0);
    for (unsigned r : rows) in[r] = 1;
    const auto vs = VariableSpace::matrix(rows, N, false);
    const auto ex = compiler::expand_evolution(fock::PureState::basis(fock::OccupationVector(in)), vs);

    std::vector<std::vector<GaussianRational>> A(N, std::vector<GaussianRational>(N));
    std::vector<GaussianRational> point(vs->size());
    for (unsigned r : rows)
      for (unsigned col = 0; col < N; ++col) {
        A[r][col] = oracle::random_gaussian(rng);
        point[*vs->index_of(r, col)] = A[r][col];
      }
    for (const auto& s : fock::fock_basis(n, N)) {
      std::vector<unsigned> cols;
      for (unsigned col = 0; col < N; ++col)
        for (unsigned k = 0; k < s[col]; ++k) cols.push_back(col);
      std::vector<std::vector<GaussianRational>> sub(n, std::vector<GaussianRational>(n));
      for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) sub[i][j] = A[rows[i]][cols[j]];
      const GaussianRational expected =
          compiler::ryser_permanent(sub) / GaussianRational(static_cast<long>(s.factorial_product()));
      const auto it = ex.coefficients.find(s);
      const GaussianRational got = it == ex.coefficients.end() ? GaussianRational() : oracle::evaluate(it->second, point);
      ++amplitudes;
      if (got != expected)
        return {Status::fail, "trial " + std::to_string(trial) + " output " + s.to_string() + " differs"};
    }
  }
  return {Status::pass, "100 expansions, " + std::to_string(amplitudes) + " amplitudes equal exactly"};
}

Outcome certificate_integrity(const Settings& s) {
  Checks c;
  std::size_t certificates = 0, tampered = 0;
  auto exercise = [&](const fock::TaskSpec& spec, unsigned d, const std::string& name) {
    const fock::AnyTask task(spec);
    const auto r = repro::certify_task(task, search(d));
    c.expect(r.report.certificate.has_value(), name + " has no certificate");
    if (!r.report.certificate) return;
    ++certificates;
    const auto& cert = *r.report.certificate;
    const auto text = nulla::serialize_certificate(cert);
    c.expect(repro::verify_task_certificate(task, nulla::parse_certificate(text)).ok, name + " round trip");
    for (std::size_t k = 0; k < cert.betas.size(); ++k)
      for (const auto& [e, coeff] : cert.betas[k].terms()) {
        auto bad = cert;
        bad.betas[k].add_term(e, GaussianRational(1));
        c.expect(!nulla::verify_certificate(r.system, bad).ok, name + " tampered certificate accepted");
        ++tampered;
      }
  };
  exercise(repro::noon_task(3), 3, "noon3");
  exercise(repro::noon_task(4), 4, "noon4");
  const unsigned samples = std::min(s.samples.value_or(5u), 5u);
  for (unsigned k = 0; k < samples; ++k) {
    exercise(table1_task(3, 0, 7000 + k), 4, "table1 row 1 sample " + std::to_string(k));
    exercise(table1_task(4, 0, 8000 + k), 4, "table1 row 3 sample " + std::to_string(k));
  }

  const auto base = repro::noon_task(3);
  const auto d0 = first_degree(compile_spec(base), search(3));
  c.expect(d0.has_value(), "noon3 base degree");
  std::string scaled = "first degree " + show(d0);
  const std::vector<std::pair<std::string, GaussianRational>> factors = {
      {"2", GaussianRational(2)}, {"-3", GaussianRational(-3)}, {"i", GaussianRational::i()}};
  for (const auto& [label, f] : factors) {
    auto t = base;
    t.target = t.target->scaled(f);
    const auto d = first_degree(compile_spec(t), search(3));
    c.expect(d == d0, "rescaled by " + label);
    scaled += ", times " + label + " -> " + show(d);
  }
  std::ostringstream os;
  os << certificates << " certificates round-tripped, " << tampered << " tampered copies rejected, " << scaled << "; "
     << c.summary();
  return {c.ok() ? Status::pass : Status::fail, os.str()};
}

Outcome grading_losslessness(const Settings& s) {
  Checks c;
  std::vector<std::pair<std::string, compiler::PolynomialSystem>> systems;
  systems.emplace_back("noon3", compile_spec(repro::noon_task(3)));
  systems.emplace_back("noon4", compile_spec(repro::noon_task(4)));
  const unsigned samples = std::min(s.samples.value_or(3u), 3u);
  for (unsigned k = 0; k < samples; ++k) {
    systems.emplace_back("row1#" + std::to_string(k), compile_spec(table1_task(3, 0, 9000 + k)));
    systems.emplace_back("row3#" + std::to_string(k), compile_spec(table1_task(4, 0, 9500 + k)));
  }
  std::string detail;
  for (const auto& [name, ps] : systems) {
    auto on = search(4), off = search(4);
    off.w_grading = false;
    const auto a = nulla::certify(ps, on), b = nulla::certify(ps, off);
    c.expect(a.verdict == b.verdict, name + " verdicts differ");
    const auto da = a.certificate ? std::optional<unsigned>(a.certificate->degree) : std::nullopt;
    const auto db = b.certificate ? std::optional<unsigned>(b.certificate->degree) : std::nullopt;
    c.expect(!db || (da && *da <= *db), name + " graded degree exceeds ungraded");
    detail += (detail.empty() ? "" : ", ") + name + " " + show(da) + "/" + show(db);
  }
  return {c.ok() ? Status::pass : Status::fail, "on/off degrees: " + detail + "; " + c.summary()};
}

Outcome guarded(const std::function<Outcome()>& f) {
  try {
    return f();
  } catch (const std::exception& e) {
    return {Status::fail, std::string("exception: ") + e.what()};
  }
}

}  // namespace

int main(int argc, char** argv) {
  Settings s;
  std::optional<int> only;
  for (int k = 1; k < argc; ++k) {
    const std::string arg = argv[k];
    if (arg == "--extended") {
      s.extended = true;
    } else if (arg == "--samples" && k + 1 < argc) {
      s.samples = static_cast<unsigned>(std::stoul(argv[++k]));
    } else if (arg == "--only" && k + 1 < argc) {
      only = std::stoi(argv[++k]);
    } else {
      std::cerr << "usage: nullcert_acceptance [--extended] [--samples N] [--only K]\n";
      return 1;
    }
  }

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"bound reproduction", [&] { return bound_reproduction(s); }},
      {"NOON n=3", [&] { return noon_criterion(3, 3, 60.0); }},
      {"NOON n=4", [&] { return noon_criterion(4, 4, 600.0); }},
      {"Haar-random groups 1 and 3", [&] { return table1_infeasible_rows(s); }},
      {"Haar-random group 2 consistency", [&] { return table1_row_two(s); }},
      {"extended reproductions", [&] { return extended_reproductions(s); }},
      {"soundness suite", [&] { return soundness(s); }},
      {"permanent-oracle equivalence", [&] { return permanent_equivalence(s); }},
      {"certificate integrity", [&] { return certificate_integrity(s); }},
      {"grading losslessness", [&] { return grading_losslessness(s); }},
  };

  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const int id = static_cast<int>(k) + 1;
    if (only && *only != id) continue;
    const auto out = guarded(criteria[k].second);
    const char* tag = out.status == Status::pass ? "PASS" : out.status == Status::skip ? "SKIP" : "FAIL";
    if (out.status == Status::fail) ++failed;
    std::cout << "criterion " << id << " [" << tag << "] " << criteria[k].first << ": " << out.detail << std::endl;
  }
  std::cout << (failed == 0 ? "acceptance: all criteria met" : "acceptance: " + std::to_string(failed) + " failed")
            << std::endl;
  return failed == 0 ? 0 : 1;
}
