// Copyright 2026 The KPE Authors.
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

#ifndef KPE_ERROR_HPP_
#define KPE_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace kpe {

enum class ErrorCode {
  kIo,
  kMalformedRecord,
  kDuplicateId,
  kEmptyCorpus,
  kDimensionMismatch,
  kZeroVector,
  kTransport,
  kProtocol,
  kMissingEmbedding,
  kMalformedCache,
  kEmptyDocument,
  kEmptyInput,
  kMissingDocument,
  kUnknownDocument,
  kMissingCorpus,
  kInvalidArgument,
};

std::string_view error_code_name(ErrorCode code);

// All library failures are reported through this exception. `subject()`
// carries the offending id, key, path or domain when there is one, and
// `line()` the 1-based line number for record-oriented inputs (0 if n/a).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::string subject = {},
        std::size_t line = 0)
      : std::runtime_error(message),
        code_(code),
        subject_(std::move(subject)),
        line_(line) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& subject() const noexcept { return subject_; }
  std::size_t line() const noexcept { return line_; }

 private:
  ErrorCode code_;
  std::string subject_;
  std::size_t line_;
};

}  // namespace kpe

#endif  // KPE_ERROR_HPP_
