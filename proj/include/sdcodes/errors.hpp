// Copyright 2026 The sdcodes Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace sdcodes {

// Base of every domain error thrown by the library. The CLI maps the two
// families below to distinct exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: files, command-line values, catalog payloads.
class ParseError : public Error {
 public:
  using Error::Error;
};

// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

#define SDCODES_DEFINE_ERROR(Name, Base)                      \
  class Name : public Base {                                  \
   public:                                                    \
    explicit Name(const std::string& what) : Base(#Name ": " + what) {} \
  }

SDCODES_DEFINE_ERROR(InvalidField, PreconditionError);
SDCODES_DEFINE_ERROR(FieldMismatch, PreconditionError);
SDCODES_DEFINE_ERROR(NoRootOfMinusOne, PreconditionError);
SDCODES_DEFINE_ERROR(DimensionMismatch, PreconditionError);
SDCODES_DEFINE_ERROR(InvalidCode, PreconditionError);
SDCODES_DEFINE_ERROR(NotSelfDual, PreconditionError);
SDCODES_DEFINE_ERROR(NotSymmetricSD, PreconditionError);
SDCODES_DEFINE_ERROR(BudgetExceeded, PreconditionError);
SDCODES_DEFINE_ERROR(InexactWeight, PreconditionError);
SDCODES_DEFINE_ERROR(NotAnEigenvector, PreconditionError);
SDCODES_DEFINE_ERROR(GammaMismatch, PreconditionError);
SDCODES_DEFINE_ERROR(GammaEqualsAlpha, PreconditionError);
SDCODES_DEFINE_ERROR(NotNonzeroSquare, PreconditionError);
SDCODES_DEFINE_ERROR(AlphaEqualsGamma, PreconditionError);
SDCODES_DEFINE_ERROR(NotAResidue, PreconditionError);
SDCODES_DEFINE_ERROR(CoefficientNotInBaseField, Error);
SDCODES_DEFINE_ERROR(NotStandardForm, PreconditionError);
SDCODES_DEFINE_ERROR(ParameterMismatch, PreconditionError);

#undef SDCODES_DEFINE_ERROR

}  // namespace sdcodes
