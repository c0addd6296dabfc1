/*
 * Copyright 2026 The semibv Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "semibv/report.hpp"

#include <openssl/evp.h>

#include <array>
#include <cmath>
#include <cstdio>

#include "semibv/error.hpp"

namespace semibv {

std::string sha256_hex(std::string_view bytes) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md.data(), &len, EVP_sha256(), nullptr) != 1)
    throw Error("sha256 digest failed");
  std::string hex;
  hex.reserve(2 * len);
  char buf[3];
  for (unsigned int k = 0; k < len; ++k) {
    std::snprintf(buf, sizeof buf, "%02x", md[k]);
    hex += buf;
  }
  return hex;
}

Json make_report(std::string_view command, const std::vector<ReportInput>& inputs, Json results,
                 std::string_view status) {
  Json digests = Json::object();
  for (const auto& [name, bytes] : inputs) digests[name] = sha256_hex(bytes);
  return Json{{"command", std::string(command)},
              {"inputs", std::move(digests)},
              {"results", std::move(results)},
              {"status", std::string(status)},
              {"tool_version", kToolVersion}};
}

Json partition_to_json(const PartitionPair& P) {
  return Json{{"pi", P.pi}, {"pi_star", P.pi_star}};
}

Json breakdown_to_json(const VariationBreakdown& b) {
  return Json{{"row", b.row}, {"col", b.col}, {"mixed", b.mixed}, {"total", b.total}};
}

Json sup_result_to_json(const SupResult& r) {
  return Json{{"value", r.value},
              {"argmax", partition_to_json(r.argmax)},
              {"breakdown", breakdown_to_json(r.breakdown)},
              {"method", method_name(r.method)},
              {"optimal", r.optimal}};
}

Json certificate_to_json(const EquivariationCertificate& c) {
  return Json{{"epsilon", c.epsilon},
              {"witness", partition_to_json(c.witness)},
              {"defect", c.defect},
              {"holds", c.holds}};
}

Json net_to_json(const EpsilonNet& net, const FunctionFamily& family) {
  Json labels = Json::array();
  for (std::size_t k : net.centers) labels.push_back(family.labels.at(k));
  return Json{{"centers", net.centers},
              {"center_labels", std::move(labels)},
              {"certificate", certificate_to_json(net.certificate)},
              {"radius", net.radius}};
}

Json net_check_to_json(const NetCheck& check) {
  return Json{{"ok", check.ok},
              {"worst", check.worst},
              {"offender", check.offender ? Json(*check.offender) : Json(nullptr)}};
}

Json suite_report_to_json(const SuiteReport& report) {
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    checks.push_back(Json{{"name", c.name},
                          {"cases", c.cases},
                          {"violations", c.violations},
                          {"worst_margin", std::isfinite(c.worst_margin) ? Json(c.worst_margin)
                                                                         : Json(nullptr)}});
  }
  return Json{{"suite", report.suite},
              {"seed", report.seed},
              {"count", report.count},
              {"checks", std::move(checks)},
              {"pass", report.pass()}};
}

} // namespace semibv
