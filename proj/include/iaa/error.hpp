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
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace iaa {

enum class ErrorCode
{
  InvalidGrid,
  InvalidInterval,
  DomainViolation,
  EmptyInput,
  GridMismatch,
  EmptySet,
  InvalidFuzzySet,
  ParseError,
  DuplicateResponse,
  UnknownWord,
  UnknownGroup,
  InvalidGroupSpec,
  EmptyGroup,
  MissingModel,
  GroupListMismatch,
  Io,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library is an Error carrying a machine-readable
/// code; the message is meant for humans and names the offending record.
class Error : public std::runtime_error
{
public:
  Error(ErrorCode code, std::string const &message);

  ErrorCode code() const noexcept
  {
    return code_;
  }

private:
  ErrorCode code_;
};

}  // namespace iaa
