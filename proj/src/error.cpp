// Copyright 2026 The fonodict Authors
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

#include "fonodict/error.hpp"

namespace fonodict {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::EmptyWord: return "EmptyWord";
    case ErrorKind::IllegalCharacter: return "IllegalCharacter";
    case ErrorKind::MultipleAccents: return "MultipleAccents";
    case ErrorKind::UnmappableToken: return "UnmappableToken";
    case ErrorKind::NoNucleus: return "NoNucleus";
    case ErrorKind::UnsyllabifiableCluster: return "UnsyllabifiableCluster";
    case ErrorKind::AccentOutsideNucleus: return "AccentOutsideNucleus";
    case ErrorKind::StressOutOfRange: return "StressOutOfRange";
    case ErrorKind::UnknownPreset: return "UnknownPreset";
    case ErrorKind::MergeConflict: return "MergeConflict";
    case ErrorKind::MissingIpaMapping: return "MissingIPAMapping";
    case ErrorKind::FileUnreadable: return "FileUnreadable";
    case ErrorKind::EmptySource: return "EmptySource";
    case ErrorKind::UnknownCountry: return "UnknownCountry";
    case ErrorKind::MalformedPosFile: return "MalformedPosFile";
    case ErrorKind::InvalidOverride: return "InvalidOverride";
    case ErrorKind::UntranslatableSymbol: return "UntranslatableSymbol";
    case ErrorKind::IoFailure: return "IoFailure";
    case ErrorKind::MalformedRow: return "MalformedRow";
    case ErrorKind::HeaderMismatch: return "HeaderMismatch";
    case ErrorKind::MalformedTable: return "MalformedTable";
  }
  return "Unknown";
}

}  // namespace fonodict
