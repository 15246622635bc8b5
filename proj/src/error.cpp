//------------------------------------------------------------------------------
//
//   Copyright 2026 The IAA Toolkit Authors
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.
//
//------------------------------------------------------------------------------
#include "iaa/error.hpp"

namespace iaa {

std::string_view to_string(ErrorCode code) noexcept
{
  switch (code)
  {
  case ErrorCode::InvalidGrid:
    return "InvalidGrid";
  case ErrorCode::InvalidInterval:
    return "InvalidInterval";
  case ErrorCode::DomainViolation:
    return "DomainViolation";
  case ErrorCode::EmptyInput:
    return "EmptyInput";
  case ErrorCode::GridMismatch:
    return "GridMismatch";
  case ErrorCode::EmptySet:
    return "EmptySet";
  case ErrorCode::InvalidFuzzySet:
    return "InvalidFuzzySet";
  case ErrorCode::ParseError:
    return "ParseError";
  case ErrorCode::DuplicateResponse:
    return "DuplicateResponse";
  case ErrorCode::UnknownWord:
    return "UnknownWord";
  case ErrorCode::UnknownGroup:
    return "UnknownGroup";
  case ErrorCode::InvalidGroupSpec:
    return "InvalidGroupSpec";
  case ErrorCode::EmptyGroup:
    return "EmptyGroup";
  case ErrorCode::MissingModel:
    return "MissingModel";
  case ErrorCode::GroupListMismatch:
    return "GroupListMismatch";
  case ErrorCode::Io:
    return "Io";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, std::string const &message)
  : std::runtime_error(std::string{to_string(code)} + ": " + message)
  , code_(code)
{}

}  // namespace iaa
