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

#include "degpart/error.hpp"

namespace degpart {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::LoopEdge: return "LoopEdge";
    case Errc::VertexOutOfRange: return "VertexOutOfRange";
    case Errc::SameVertex: return "SameVertex";
    case Errc::EmptyGraph: return "EmptyGraph";
    case Errc::EmptySet: return "EmptySet";
    case Errc::NotAPartition: return "NotAPartition";
    case Errc::PreconditionViolated: return "PreconditionViolated";
    case Errc::InternalInvariant: return "InternalInvariant";
    case Errc::UnsupportedKind: return "UnsupportedKind";
    case Errc::WrongSide: return "WrongSide";
    case Errc::TooSmall: return "TooSmall";
    case Errc::TooLarge: return "TooLarge";
    case Errc::ParseError: return "ParseError";
    case Errc::MissingDemands: return "MissingDemands";
    case Errc::Unplantable: return "Unplantable";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

ParseError::ParseError(std::size_t line, const std::string& reason)
    : Error(Errc::ParseError, "line " + std::to_string(line) + ": " + reason), line_(line) {}

}  // namespace degpart
