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

#include "semibv/json_io.hpp"

#include <cmath>
#include <cstdio>

#include "semibv/error.hpp"

namespace semibv {

namespace {

void emit(const Json& doc, std::string& out) {
  switch (doc.type()) {
  case Json::value_t::null:
    out += "null";
    break;
  case Json::value_t::boolean:
    out += doc.get<bool>() ? "true" : "false";
    break;
  case Json::value_t::number_integer:
    out += std::to_string(doc.get<std::int64_t>());
    break;
  case Json::value_t::number_unsigned:
    out += std::to_string(doc.get<std::uint64_t>());
    break;
  case Json::value_t::number_float: {
    const double x = doc.get<double>();
    if (!std::isfinite(x)) {
      out += "null";
      break;
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    out += buf;
    break;
  }
  case Json::value_t::string:
    out += Json(doc.get<std::string>()).dump();
    break;
  case Json::value_t::array: {
    out += '[';
    bool first = true;
    for (const auto& item : doc) {
      if (!first) out += ',';
      first = false;
      emit(item, out);
    }
    out += ']';
    break;
  }
  case Json::value_t::object: {
    // nlohmann::json objects are std::map backed, so iteration is key-sorted.
    out += '{';
    bool first = true;
    for (const auto& [key, value] : doc.items()) {
      if (!first) out += ',';
      first = false;
      out += Json(key).dump();
      out += ':';
      emit(value, out);
    }
    out += '}';
    break;
  }
  default:
    throw ParseError("cannot serialize binary JSON values");
  }
}

double number(const Json& doc) {
  if (!doc.is_number()) throw ParseError("expected a number, got " + doc.dump());
  return doc.get<double>();
}

std::pair<double, double> pair_of(const Json& doc) {
  if (!doc.is_array() || doc.size() != 2) throw ParseError("expected [lo, hi], got " + doc.dump());
  return {number(doc[0]), number(doc[1])};
}

} // namespace

std::string canonical_dump(const Json& doc) {
  std::string out;
  emit(doc, out);
  return out;
}

Json element_to_json(const Element& e) {
  const auto p = e.payload();
  switch (e.instance().kind) {
  case SemigroupKind::NonnegReal:
    return Json(p[0]);
  case SemigroupKind::RealVector: {
    Json arr = Json::array();
    for (double x : p) arr.push_back(x);
    return arr;
  }
  case SemigroupKind::Interval:
    return Json::array({p[0], p[1]});
  case SemigroupKind::Box: {
    Json arr = Json::array();
    for (std::size_t k = 0; k < p.size(); k += 2) arr.push_back(Json::array({p[k], p[k + 1]}));
    return arr;
  }
  }
  return {};
}

Element element_from_json(const Instance& inst, const Json& doc) {
  std::vector<double> payload;
  switch (inst.kind) {
  case SemigroupKind::NonnegReal:
    payload.push_back(number(doc));
    break;
  case SemigroupKind::RealVector:
    if (!doc.is_array() || doc.size() != inst.dim) {
      throw ParseError("expected an array of " + std::to_string(inst.dim) + " numbers");
    }
    for (const auto& x : doc) payload.push_back(number(x));
    break;
  case SemigroupKind::Interval: {
    const auto [lo, hi] = pair_of(doc);
    payload = {lo, hi};
    break;
  }
  case SemigroupKind::Box:
    if (!doc.is_array() || doc.size() != inst.dim) {
      throw ParseError("expected an array of " + std::to_string(inst.dim) + " [lo, hi] pairs");
    }
    for (const auto& side : doc) {
      const auto [lo, hi] = pair_of(side);
      payload.push_back(lo);
      payload.push_back(hi);
    }
    break;
  }
  return Element::from_payload(inst, std::move(payload));
}

Json instance_to_json(const Instance& inst) {
  switch (inst.kind) {
  case SemigroupKind::NonnegReal: return {{"kind", "nonneg-real"}};
  case SemigroupKind::RealVector: return {{"kind", "real-vector"}, {"dim", inst.dim}};
  case SemigroupKind::Interval: return {{"kind", "interval"}};
  case SemigroupKind::Box: return {{"kind", "box"}, {"dim", inst.dim}};
  }
  return {};
}

Instance instance_from_json(const Json& doc) {
  if (!doc.is_object() || !doc.contains("kind") || !doc["kind"].is_string()) {
    throw ParseError("semigroup must be an object with a string \"kind\"");
  }
  const auto kind = doc["kind"].get<std::string>();
  auto dim = [&]() -> std::size_t {
    if (!doc.contains("dim") || !doc["dim"].is_number_unsigned() || doc["dim"].get<std::size_t>() == 0) {
      throw ParseError("semigroup \"" + kind + "\" needs a positive integer \"dim\"");
    }
    return doc["dim"].get<std::size_t>();
  };
  if (kind == "nonneg-real") return Instance::nonneg_real();
  if (kind == "interval") return Instance::interval();
  if (kind == "real-vector") return Instance::real_vector(dim());
  if (kind == "box") return Instance::box(dim());
  throw ParseError("unknown semigroup kind \"" + kind + "\"");
}

Json parse_json(std::string_view bytes) {
  try {
    return Json::parse(bytes);
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

} // namespace semibv
