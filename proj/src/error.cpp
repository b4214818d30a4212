// Copyright 2026 The dimerlab Authors.
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

#include "dimerlab/error.hpp"

namespace dimerlab {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kEdgeCrossing: return "EdgeCrossing";
    case ErrorCode::kDuplicateCoordinate: return "DuplicateCoordinate";
    case ErrorCode::kNonSimple: return "NonSimple";
    case ErrorCode::kDisconnected: return "Disconnected";
    case ErrorCode::kUnknownVertex: return "UnknownVertex";
    case ErrorCode::kUnknownEdge: return "UnknownEdge";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kZeroPartitionFunction: return "ZeroPartitionFunction";
    case ErrorCode::kSizeGuard: return "SizeGuard";
    case ErrorCode::kOddDimension: return "OddDimension";
    case ErrorCode::kNotSkew: return "NotSkew";
    case ErrorCode::kSignUndetermined: return "SignUndetermined";
    case ErrorCode::kPathNotInDecomposition: return "PathNotInDecomposition";
    case ErrorCode::kOverlappingMonomers: return "OverlappingMonomers";
    case ErrorCode::kDegenerateCrossing: return "DegenerateCrossing";
    case ErrorCode::kNonCanonical: return "NonCanonical";
    case ErrorCode::kSharedExitPoint: return "SharedExitPoint";
    case ErrorCode::kNotConnected: return "NotConnected";
    case ErrorCode::kNotOnBoundary: return "NotOnBoundary";
    case ErrorCode::kInvalidSize: return "InvalidSize";
    case ErrorCode::kMismatchedZ: return "MismatchedZ";
    case ErrorCode::kPrecondition: return "Precondition";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace dimerlab
