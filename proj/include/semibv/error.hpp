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

#include <stdexcept>
#include <string>

namespace semibv {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Operands belong to different semigroup instances.
class InstanceMismatch : public Error {
public:
  using Error::Error;
};

/// A payload violates its instance invariant (negative scalar, lo > hi, ...).
class InvalidElement : public Error {
public:
  using Error::Error;
};

/// Malformed JSON or a document that does not follow the expected schema.
class ParseError : public Error {
public:
  using Error::Error;
};

class NonMonotoneGrid : public Error {
public:
  using Error::Error;
};

class GridEndpointError : public Error {
public:
  using Error::Error;
};

class DimensionMismatch : public Error {
public:
  using Error::Error;
};

/// Two functions do not share grids or instance.
class GridMismatch : public Error {
public:
  using Error::Error;
};

class PartitionError : public Error {
public:
  using Error::Error;
};

/// Invalid family configuration or a method incompatible with the family.
class ConfigError : public Error {
public:
  using Error::Error;
};

class GeneratorError : public Error {
public:
  using Error::Error;
};

/// Input exceeds the hard limit of an exhaustive algorithm.
class SizeGuardError : public Error {
public:
  using Error::Error;
};

} // namespace semibv
