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

#include <json.hpp>

#include "semibv/semigroup.hpp"

namespace semibv {

using Json = nlohmann::json;

/// Compact JSON with sorted keys and floating values printed with 17
/// significant digits, so equal documents give equal bytes.
std::string canonical_dump(const Json& doc);

Json element_to_json(const Element& e);
/// Throws ParseError on shape errors, InvalidElement on invariant errors.
Element element_from_json(const Instance& inst, const Json& doc);

Json instance_to_json(const Instance& inst);
Instance instance_from_json(const Json& doc);

/// Parses text, converting parser exceptions to ParseError.
Json parse_json(std::string_view bytes);

} // namespace semibv
