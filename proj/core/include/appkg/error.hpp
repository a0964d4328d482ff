// Copyright 2026 The appkg Authors.
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

#ifndef APPKG_ERROR_HPP_
#define APPKG_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace appkg {

// Machine-readable failure codes. Each code is raised by exactly one layer of
// the pipeline; the CLI maps them onto exit statuses.
enum class ErrorCode {
  // html / extract
  kInvalidEncoding,
  kSelectorSyntax,
  kRequiredFieldMissing,
  kManifestNotFound,
  kSnapshotNotFound,
  kRuleSetInvalid,
  kRecordsFileInvalid,
  // normalize
  kUnparseableNumber,
  kOutOfRange,
  kUnparseableDate,
  kInvalidDate,
  kUnparseableVersion,
  kUnknownCurrency,
  kUnparseablePrice,
  kRangeInverted,
  kMissingField,
  kInvalidUrl,
  kUnknownProfile,
  kProfileInvalid,
  // turtle
  kSyntaxError,
  kUndeclaredPrefix,
  kUnsupportedDatatype,
  kNonTreeBlanks,
  // store
  kNonNumericPredicate,
  kValueNotFound,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace appkg

#endif  // APPKG_ERROR_HPP_
