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

#include "appkg/error.hpp"

namespace appkg {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidEncoding: return "INVALID_ENCODING";
    case ErrorCode::kSelectorSyntax: return "SELECTOR_SYNTAX";
    case ErrorCode::kRequiredFieldMissing: return "REQUIRED_FIELD_MISSING";
    case ErrorCode::kManifestNotFound: return "MANIFEST_NOT_FOUND";
    case ErrorCode::kSnapshotNotFound: return "SNAPSHOT_NOT_FOUND";
    case ErrorCode::kRuleSetInvalid: return "RULE_SET_INVALID";
    case ErrorCode::kRecordsFileInvalid: return "RECORDS_FILE_INVALID";
    case ErrorCode::kUnparseableNumber: return "UNPARSEABLE_NUMBER";
    case ErrorCode::kOutOfRange: return "OUT_OF_RANGE";
    case ErrorCode::kUnparseableDate: return "UNPARSEABLE_DATE";
    case ErrorCode::kInvalidDate: return "INVALID_DATE";
    case ErrorCode::kUnparseableVersion: return "UNPARSEABLE_VERSION";
    case ErrorCode::kUnknownCurrency: return "UNKNOWN_CURRENCY";
    case ErrorCode::kUnparseablePrice: return "UNPARSEABLE_PRICE";
    case ErrorCode::kRangeInverted: return "RANGE_INVERTED";
    case ErrorCode::kMissingField: return "MISSING_FIELD";
    case ErrorCode::kInvalidUrl: return "INVALID_URL";
    case ErrorCode::kUnknownProfile: return "UNKNOWN_PROFILE";
    case ErrorCode::kProfileInvalid: return "PROFILE_INVALID";
    case ErrorCode::kSyntaxError: return "SYNTAX_ERROR";
    case ErrorCode::kUndeclaredPrefix: return "UNDECLARED_PREFIX";
    case ErrorCode::kUnsupportedDatatype: return "UNSUPPORTED_DATATYPE";
    case ErrorCode::kNonTreeBlanks: return "NON_TREE_BLANKS";
    case ErrorCode::kNonNumericPredicate: return "NON_NUMERIC_PREDICATE";
    case ErrorCode::kValueNotFound: return "VALUE_NOT_FOUND";
  }
  return "UNKNOWN_ERROR";
}

}  // namespace appkg
