// Copyright 2026 The capopt Authors.
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

#include "capopt/error.h"

namespace capopt {

std::string_view ErrorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kEmptyPaper: return "EmptyPaper";
    case ErrorKind::kLengthMismatch: return "LengthMismatch";
    case ErrorKind::kIterationLimitExceeded: return "IterationLimitExceeded";
    case ErrorKind::kInfeasibleInput: return "InfeasibleInput";
    case ErrorKind::kInfeasibleOutput: return "InfeasibleOutput";
    case ErrorKind::kTooLarge: return "TooLarge";
    case ErrorKind::kParse: return "ParseError";
    case ErrorKind::kConfig: return "ConfigError";
    case ErrorKind::kHttp: return "HttpError";
    case ErrorKind::kPaginationStall: return "PaginationStall";
    case ErrorKind::kUnsupportedYear: return "UnsupportedYear";
  }
  return "Unknown";
}

}  // namespace capopt
