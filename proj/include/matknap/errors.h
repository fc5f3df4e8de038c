// Copyright 2026 The Authors.
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

#ifndef MATKNAP_ERRORS_H_
#define MATKNAP_ERRORS_H_

#include <stdexcept>
#include <string>
#include <utility>

namespace matknap {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An element id is outside the ground set {0, ..., n-1}.
class InvalidElementError : public Error {
 public:
  using Error::Error;
};

// Oracle data is inconsistent (dimension mismatch, bad set contents).
class InvalidOracleError : public Error {
 public:
  using Error::Error;
};

// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A matroid implementation violated one of the matroid axioms at runtime.
class MatroidContractError : public Error {
 public:
  using Error::Error;
};

// Instance data violates an invariant; `field()` names the offending key.
class ValidationError : public Error {
 public:
  ValidationError(std::string field, const std::string& what)
      : Error(field + ": " + what), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

// Malformed instance document.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Work refused because it would exceed a resource cap (e.g. brute force).
class ResourceError : public Error {
 public:
  using Error::Error;
};

}  // namespace matknap

#endif  // MATKNAP_ERRORS_H_
