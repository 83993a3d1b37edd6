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

#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace fonodict {

enum class ErrorKind {
  // orthography
  EmptyWord,
  IllegalCharacter,
  MultipleAccents,
  // g2p
  UnmappableToken,
  // syllabifier
  NoNucleus,
  UnsyllabifiableCluster,
  // stress
  AccentOutsideNucleus,
  StressOutOfRange,
  // dialect
  UnknownPreset,
  MergeConflict,
  // annotate
  MissingIpaMapping,
  // lexicon
  FileUnreadable,
  EmptySource,
  UnknownCountry,
  MalformedPosFile,
  InvalidOverride,
  // export
  UntranslatableSymbol,
  IoFailure,
  MalformedRow,
  HeaderMismatch,
  // data files (inventory, cluster tables, IPA table, presets)
  MalformedTable,
};

std::string_view to_string(ErrorKind kind);

// Single exception type for the library. `position` carries a character
// index for IllegalCharacter and a 1-based line number for file errors.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail,
        std::optional<std::size_t> position = std::nullopt)
      : std::runtime_error(std::string(to_string(kind)) + ": " + detail),
        kind_(kind),
        detail_(detail),
        position_(position) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& detail() const noexcept { return detail_; }
  std::optional<std::size_t> position() const noexcept { return position_; }

 private:
  ErrorKind kind_;
  std::string detail_;
  std::optional<std::size_t> position_;
};

}  // namespace fonodict
