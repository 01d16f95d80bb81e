// Copyright 2026 The qheat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qheat {

enum class ErrorCode {
  InvalidArgument,
  InvalidFlux,
  NonPositiveFrequency,
  ChannelMismatch,
  InconsistentBath,
  ReducibleChain,
  UndefinedCoefficient,
  AmbiguousExtremum,
  Config,
  Io,
};

std::string_view error_code_name(ErrorCode code) noexcept;

// Base of every error raised by the library. The code is what the C API
// and the sweep diagnostics report.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

#define QHEAT_DEFINE_ERROR(Name)                                       \
  class Name : public Error {                                          \
   public:                                                             \
    explicit Name(const std::string& what) : Error(ErrorCode::Name, what) {} \
  };

QHEAT_DEFINE_ERROR(InvalidArgument)
QHEAT_DEFINE_ERROR(InvalidFlux)
QHEAT_DEFINE_ERROR(NonPositiveFrequency)
QHEAT_DEFINE_ERROR(ChannelMismatch)
QHEAT_DEFINE_ERROR(InconsistentBath)
QHEAT_DEFINE_ERROR(ReducibleChain)
QHEAT_DEFINE_ERROR(UndefinedCoefficient)
QHEAT_DEFINE_ERROR(AmbiguousExtremum)

#undef QHEAT_DEFINE_ERROR

class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& what) : Error(ErrorCode::Config, what) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error(ErrorCode::Io, what) {}
};

}  // namespace qheat
