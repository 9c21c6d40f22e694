// Copyright 2026 The braidgate Authors
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

namespace braidgate {

/// Raised for inputs outside an operation's domain: inverting zero,
/// mismatched strand counts, malformed text, unknown labels.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when operand shapes disagree (matrix sizes, cyclotomic orders).
class DimensionError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Raised for parameter regimes this library does not implement.
class UnsupportedError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Raised when a relation or transport law fails to hold exactly.
class CertificateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace braidgate
