// Copyright 2026 The pivcat Authors
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

namespace pivcat {

/** Base class of every error raised by the library. */
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define PIVCAT_DECLARE_ERROR(Name)          \
  class Name : public Error {               \
   public:                                  \
    using Error::Error;                     \
  }

PIVCAT_DECLARE_ERROR(SingularMatrix);
PIVCAT_DECLARE_ERROR(ShapeMismatch);
PIVCAT_DECLARE_ERROR(TypeMismatch);
PIVCAT_DECLARE_ERROR(UnassignedGenerator);
PIVCAT_DECLARE_ERROR(NotADuality);
PIVCAT_DECLARE_ERROR(SingularSigma);
PIVCAT_DECLARE_ERROR(PairMismatch);
PIVCAT_DECLARE_ERROR(HypothesisFailed);
PIVCAT_DECLARE_ERROR(IndexMismatch);
PIVCAT_DECLARE_ERROR(NonTerminating);
PIVCAT_DECLARE_ERROR(DegreeExceeded);
PIVCAT_DECLARE_ERROR(InvalidObject);
PIVCAT_DECLARE_ERROR(RelationViolated);
PIVCAT_DECLARE_ERROR(NotCentral);
PIVCAT_DECLARE_ERROR(ElementNotInGroup);
PIVCAT_DECLARE_ERROR(GradeMismatch);
// Malformed input (bad JSON, unknown flag values and the like).
PIVCAT_DECLARE_ERROR(InputError);

#undef PIVCAT_DECLARE_ERROR

}  // namespace pivcat
