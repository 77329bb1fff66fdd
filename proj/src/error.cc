// Copyright 2026 The Netcard Authors
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

#include "netcard/error.h"

namespace netcard {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kEndpointUnknown: return "EndpointUnknown";
    case ErrorCode::kWeightMismatch: return "WeightMismatch";
    case ErrorCode::kBipartiteViolation: return "BipartiteViolation";
    case ErrorCode::kDuplicateLink: return "DuplicateLink";
    case ErrorCode::kModeInvalid: return "ModeInvalid";
    case ErrorCode::kLineMalformed: return "LineMalformed";
    case ErrorCode::kEmptyInput: return "EmptyInput";
    case ErrorCode::kDocumentMalformed: return "DocumentMalformed";
    case ErrorCode::kUnknownField: return "UnknownField";
    case ErrorCode::kEmptyDistribution: return "EmptyDistribution";
    case ErrorCode::kNotDirected: return "NotDirected";
    case ErrorCode::kZeroWeight: return "ZeroWeight";
    case ErrorCode::kEmptyGraph: return "EmptyGraph";
    case ErrorCode::kKindConflict: return "KindConflict";
    case ErrorCode::kSchemaViolation: return "SchemaViolation";
    case ErrorCode::kInvalidCard: return "InvalidCard";
    case ErrorCode::kTooFewCards: return "TooFewCards";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, std::string detail, const std::string& message)
    : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
      code_(code),
      detail_(std::move(detail)) {}

}  // namespace netcard
