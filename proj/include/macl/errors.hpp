// Copyright 2026 The macl Authors
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

// Exception taxonomy for the whole library. Every error a caller can
// provoke with bad input has its own type so tests and the CLI can react
// to the exact failure instead of string-matching messages.

namespace macl {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define MACL_DEFINE_ERROR(NAME)              \
  class NAME : public Error {                \
   public:                                   \
    using Error::Error;                      \
  }

// lattice construction / queries
MACL_DEFINE_ERROR(TooSmall);
MACL_DEFINE_ERROR(CyclicCovers);
MACL_DEFINE_ERROR(NotBounded);
MACL_DEFINE_ERROR(NotALattice);
MACL_DEFINE_ERROR(UnknownElement);
MACL_DEFINE_ERROR(DuplicateLabel);

// blocks
MACL_DEFINE_ERROR(BoundElement);
MACL_DEFINE_ERROR(WholeLattice);
MACL_DEFINE_ERROR(NoBlocks);
MACL_DEFINE_ERROR(NoCompleteBlock);
MACL_DEFINE_ERROR(UnionIsWholeLattice);
MACL_DEFINE_ERROR(ComplementTrivial);
MACL_DEFINE_ERROR(DifferentCarrier);

// residuation
MACL_DEFINE_ERROR(NotMonotone);
MACL_DEFINE_ERROR(NoMaximum);

// contexts
MACL_DEFINE_ERROR(GridError);
MACL_DEFINE_ERROR(InvalidContext);
MACL_DEFINE_ERROR(NotNormalized);
MACL_DEFINE_ERROR(UnknownConjunctor);
MACL_DEFINE_ERROR(UnknownAttribute);
MACL_DEFINE_ERROR(UnknownObject);

// concept lattices
MACL_DEFINE_ERROR(UnknownConcept);

// bridge
MACL_DEFINE_ERROR(InvalidDecomposition);
MACL_DEFINE_ERROR(NotADecomposition);
MACL_DEFINE_ERROR(PartitionFailure);
MACL_DEFINE_ERROR(CertificationFailure);

// i/o and oracle guards
MACL_DEFINE_ERROR(ParseError);
MACL_DEFINE_ERROR(TooLarge);

#undef MACL_DEFINE_ERROR

}  // namespace macl
