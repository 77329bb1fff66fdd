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

#ifndef NETCARD_ERROR_H_
#define NETCARD_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace netcard {

enum class ErrorCode {
  kEndpointUnknown,
  kWeightMismatch,
  kBipartiteViolation,
  kDuplicateLink,
  kModeInvalid,
  kLineMalformed,
  kEmptyInput,
  kDocumentMalformed,
  kUnknownField,
  kEmptyDistribution,
  kNotDirected,
  kZeroWeight,
  kEmptyGraph,
  kKindConflict,
  kSchemaViolation,
  kInvalidCard,
  kTooFewCards,
};

std::string_view ErrorCodeName(ErrorCode code);

// Every failure raised by the library. `detail` carries the machine-usable
// locator for the failure: a line number, a JSON pointer, a field name or a
// node id, depending on the code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string detail, const std::string& message);

  ErrorCode code() const { return code_; }
  const std::string& detail() const { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace netcard

#endif  // NETCARD_ERROR_H_
