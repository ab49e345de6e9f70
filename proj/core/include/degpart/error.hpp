/*
 * Copyright 2026 The degpart Authors.
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

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace degpart {

enum class Errc {
  LoopEdge,
  VertexOutOfRange,
  SameVertex,
  EmptyGraph,
  EmptySet,
  NotAPartition,
  PreconditionViolated,
  InternalInvariant,
  UnsupportedKind,
  WrongSide,
  TooSmall,
  TooLarge,
  ParseError,
  MissingDemands,
  Unplantable,
  InvalidArgument,
};

std::string_view errc_name(Errc code) noexcept;

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// Instance text errors keep the 1-based line they were raised on.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& reason);

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace degpart
