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

#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "semibv/json_io.hpp"
#include "semibv/partition_search.hpp"
#include "semibv/precompactness.hpp"
#include "semibv/suites.hpp"

namespace semibv {

inline constexpr const char* kToolVersion = "0.1.0";

/// Lower-case hex SHA-256 of `bytes`.
std::string sha256_hex(std::string_view bytes);

/// Named input (e.g. "function") and its raw bytes.
using ReportInput = std::pair<std::string, std::string>;

/// `{"command", "inputs":{name: sha256}, "results", "status", "tool_version"}`.
Json make_report(std::string_view command, const std::vector<ReportInput>& inputs, Json results,
                 std::string_view status);

Json partition_to_json(const PartitionPair& P);
Json breakdown_to_json(const VariationBreakdown& b);
Json sup_result_to_json(const SupResult& r);
Json certificate_to_json(const EquivariationCertificate& c);
Json net_to_json(const EpsilonNet& net, const FunctionFamily& family);
Json net_check_to_json(const NetCheck& check);
Json suite_report_to_json(const SuiteReport& report);

} // namespace semibv
