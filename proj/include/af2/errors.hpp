// Copyright 2026 The af2 Authors
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

#ifndef AF2_ERRORS_HPP_
#define AF2_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace af2 {

enum class ErrorKind {
  kParse,
  kNotPrimitive,
  kUndefined,
  kNotAnEdge,
  kNotACEdge,
  kNotConjugate,
  kNotDistanceTwo,
  kNotACPath,
  kLevelCapExceeded,
  kClassIsBaseB,
  kNotASubstructure,
  kNotStrong,
  kPathNotInStructure,
  kUnknownSuite,
  kIo,
};

inline const char* ErrorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kParse: return "ParseError";
    case ErrorKind::kNotPrimitive: return "NotPrimitive";
    case ErrorKind::kUndefined: return "Undefined";
    case ErrorKind::kNotAnEdge: return "NotAnEdge";
    case ErrorKind::kNotACEdge: return "NotACEdge";
    case ErrorKind::kNotConjugate: return "NotConjugate";
    case ErrorKind::kNotDistanceTwo: return "NotDistanceTwo";
    case ErrorKind::kNotACPath: return "NotACPath";
    case ErrorKind::kLevelCapExceeded: return "LevelCapExceeded";
    case ErrorKind::kClassIsBaseB: return "ClassIsBaseB";
    case ErrorKind::kNotASubstructure: return "NotASubstructure";
    case ErrorKind::kNotStrong: return "NotStrong";
    case ErrorKind::kPathNotInStructure: return "PathNotInStructure";
    case ErrorKind::kUnknownSuite: return "UnknownSuite";
    case ErrorKind::kIo: return "IoError";
  }
  return "Error";
}

/// Every failure raised by the library carries one of the ErrorKind tags.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(ErrorKindName(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace af2

#endif  // AF2_ERRORS_HPP_
