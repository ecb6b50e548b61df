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

#include <gtest/gtest.h>

#include <string>

#include "nullcert/nullcert.h"

namespace {

std::string data(const char* name) { return std::string(NULLCERT_TEST_DATA) + "/" + name; }

std::string take(char* s) {
  std::string out = s ? s : "";
  nc_string_free(s);
  return out;
}

struct TaskHandle {
  nc_task* t = nullptr;
  ~TaskHandle() { nc_task_free(t); }
};

TEST(CApi, VersionAndStatusStrings) {
  EXPECT_STRNE(nc_version(), "");
  EXPECT_STREQ(nc_status_string(NC_OK), "ok");
  EXPECT_STRNE(nc_status_string(NC_ERR_PARSE), nc_status_string(NC_ERR_VALIDATION));
}

TEST(CApi, NullArgumentsAreRejected) {
  nc_task* t = nullptr;
  EXPECT_EQ(nc_task_parse(nullptr, &t), NC_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(nc_task_parse("modes = 1", nullptr), NC_ERR_INVALID_ARGUMENT);
  char* s = nullptr;
  EXPECT_EQ(nc_task_serialize(nullptr, &s), NC_ERR_INVALID_HANDLE);
  nc_task_free(nullptr);
  nc_string_free(nullptr);
}

TEST(CApi, ErrorsMapToCodes) {
  TaskHandle h;
  EXPECT_EQ(nc_task_load(data("malformed.task").c_str(), &h.t), NC_ERR_PARSE);
  EXPECT_NE(std::string(nc_last_error()).find("line 3"), std::string::npos) << nc_last_error();
  EXPECT_EQ(h.t, nullptr);
  EXPECT_EQ(nc_task_load(data("does_not_exist.task").c_str(), &h.t), NC_ERR_IO);
  EXPECT_EQ(h.t, nullptr);
  // Bookkeeping is checked when the task is compiled.
  ASSERT_EQ(nc_task_load(data("bad_bookkeeping.task").c_str(), &h.t), NC_OK);
  nc_system* sys = nullptr;
  EXPECT_EQ(nc_compile(h.t, &sys), NC_ERR_VALIDATION);
  EXPECT_NE(std::string(nc_last_error()).find("n - m = 1"), std::string::npos) << nc_last_error();
  EXPECT_EQ(sys, nullptr);
}

TEST(CApi, CompileAndCount) {
  TaskHandle h;
  ASSERT_EQ(nc_task_load(data("hom.task").c_str(), &h.t), NC_OK);
  nc_system* sys = nullptr;
  ASSERT_EQ(nc_compile(h.t, &sys), NC_OK);
  size_t eqs = 0, vars = 0;
  EXPECT_EQ(nc_system_equation_count(sys, &eqs), NC_OK);
  EXPECT_EQ(nc_system_variable_count(sys, &vars), NC_OK);
  EXPECT_EQ(eqs, 3u);
  EXPECT_EQ(vars, 5u);
  char* text = nullptr;
  EXPECT_EQ(nc_system_serialize(sys, &text), NC_OK);
  EXPECT_EQ(take(text).rfind("nullcert-system 1", 0), 0u);
  nc_system_free(sys);
}

TEST(CApi, CertifyVerifyAndTamper) {
  TaskHandle h;
  ASSERT_EQ(nc_task_load(data("noon3.task").c_str(), &h.t), NC_OK);
  nc_search_options o;
  nc_search_options_default(&o);
  o.max_degree = 3;
  nc_report* rep = nullptr;
  ASSERT_EQ(nc_certify(h.t, &o, &rep), NC_OK);
  nc_verdict v = NC_UNDECIDED;
  EXPECT_EQ(nc_report_verdict(rep, &v), NC_OK);
  EXPECT_EQ(v, NC_INFEASIBLE_PROVEN);
  char* json = nullptr;
  EXPECT_EQ(nc_report_json(rep, &json), NC_OK);
  const std::string j = take(json);
  EXPECT_NE(j.find("\"verdict\": \"INFEASIBLE_PROVEN\""), std::string::npos);
  EXPECT_NE(j.find("task_digest"), std::string::npos);

  nc_certificate* cert = nullptr;
  ASSERT_EQ(nc_report_certificate(rep, &cert), NC_OK);
  ASSERT_NE(cert, nullptr);
  nc_report_free(rep);
  unsigned degree = 99;
  EXPECT_EQ(nc_certificate_degree(cert, &degree), NC_OK);
  EXPECT_LE(degree, 3u);

  char* ctext = nullptr;
  ASSERT_EQ(nc_certificate_serialize(cert, &ctext), NC_OK);
  std::string text = take(ctext);
  nc_certificate_free(cert);

  nc_certificate* back = nullptr;
  ASSERT_EQ(nc_certificate_parse(text.c_str(), &back), NC_OK);
  int ok = 0;
  char* diag = nullptr;
  EXPECT_EQ(nc_verify(h.t, back, &ok, &diag), NC_OK);
  EXPECT_EQ(ok, 1);
  take(diag);
  nc_certificate_free(back);

  // Append a digit to the first numerator of the first beta line.
  const auto beta = text.find("beta ");
  ASSERT_NE(beta, std::string::npos);
  text.insert(text.find('/', beta), "7");
  nc_certificate* bad = nullptr;
  ASSERT_EQ(nc_certificate_parse(text.c_str(), &bad), NC_OK);
  ok = 1;
  EXPECT_EQ(nc_verify(h.t, bad, &ok, &diag), NC_OK);
  EXPECT_EQ(ok, 0);
  EXPECT_NE(take(diag).find("monomial"), std::string::npos);
  nc_certificate_free(bad);
}

TEST(CApi, FeasibleTaskIsUndecided) {
  TaskHandle h;
  ASSERT_EQ(nc_task_load(data("swap.task").c_str(), &h.t), NC_OK);
  nc_search_options o;
  nc_search_options_default(&o);
  nc_report* rep = nullptr;
  ASSERT_EQ(nc_certify(h.t, &o, &rep), NC_OK);
  nc_verdict v = NC_INFEASIBLE_PROVEN;
  nc_report_verdict(rep, &v);
  EXPECT_EQ(v, NC_UNDECIDED);
  nc_certificate* cert = reinterpret_cast<nc_certificate*>(1);
  EXPECT_EQ(nc_report_certificate(rep, &cert), NC_OK);
  EXPECT_EQ(cert, nullptr);
  nc_report_free(rep);
}

TEST(CApi, CanonicalizeAndDigest) {
  TaskHandle h;
  ASSERT_EQ(nc_task_canonicalize(3, 1, "1 : 1 0 1 0 ; 1 : 0 1 0 1", &h.t), NC_OK);
  char* text = nullptr;
  ASSERT_EQ(nc_task_serialize(h.t, &text), NC_OK);
  const std::string s = take(text);
  EXPECT_NE(s.find("modes = 5"), std::string::npos);
  EXPECT_NE(s.find("input = 1 1 1 0 0"), std::string::npos);
  char* d1 = nullptr;
  ASSERT_EQ(nc_task_digest(h.t, &d1), NC_OK);
  TaskHandle again;
  ASSERT_EQ(nc_task_parse(s.c_str(), &again.t), NC_OK);
  char* d2 = nullptr;
  ASSERT_EQ(nc_task_digest(again.t, &d2), NC_OK);
  EXPECT_EQ(take(d1), take(d2));
  int multi = 1;
  EXPECT_EQ(nc_task_is_multi(h.t, &multi), NC_OK);
  EXPECT_EQ(multi, 0);
  EXPECT_EQ(nc_task_canonicalize(3, 0, "1 : 1 0 1 0", &again.t), NC_ERR_VALIDATION);
}

TEST(CApi, Bounds) {
  char* s = nullptr;
  ASSERT_EQ(nc_bounds_json(3, 1, 5, 1, 2, &s), NC_OK);
  EXPECT_NE(take(s).find("59046"), std::string::npos);
  ASSERT_EQ(nc_bounds_text(2, 0, 3, 0, 2, &s), NC_OK);
  EXPECT_NE(take(s).find("126"), std::string::npos);
  EXPECT_EQ(nc_bounds_json(2, 3, 3, 0, 2, &s), NC_ERR_INVALID_ARGUMENT);
}

TEST(CApi, RandomTarget) {
  char* a = nullptr;
  char* b = nullptr;
  ASSERT_EQ(nc_random_target(2, 3, 7, 1u << 16, &a), NC_OK);
  ASSERT_EQ(nc_random_target(2, 3, 7, 1u << 16, &b), NC_OK);
  EXPECT_EQ(take(a), take(b));
  EXPECT_EQ(nc_random_target(2, 3, 7, 1000, &a), NC_ERR_INVALID_ARGUMENT);
}

TEST(CApi, MultiTask) {
  TaskHandle h;
  ASSERT_EQ(nc_task_load(data("suppression.multi").c_str(), &h.t), NC_OK);
  int multi = 0;
  nc_task_is_multi(h.t, &multi);
  EXPECT_EQ(multi, 1);
  nc_system* sys = nullptr;
  ASSERT_EQ(nc_compile(h.t, &sys), NC_OK);
  size_t eqs = 0;
  nc_system_equation_count(sys, &eqs);
  EXPECT_EQ(eqs, 2u);
  nc_system_free(sys);
}

TEST(CApi, ReproduceSingleExperiment) {
  nc_reproduce_options o;
  nc_reproduce_options_default(&o);
  char* json = nullptr;
  ASSERT_EQ(nc_reproduce("noon3", &o, &json), NC_OK);
  EXPECT_NE(take(json).find("\"passed\": 1"), std::string::npos);
  EXPECT_EQ(nc_reproduce("nonsense", &o, &json), NC_ERR_INVALID_ARGUMENT);
}

}  // namespace
