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

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fonodict::text {

// Decodes UTF-8. Returns nullopt on malformed input; `bad_offset` receives the
// byte offset of the first invalid sequence when provided.
std::optional<std::u32string> decode_utf8(std::string_view bytes,
                                          std::size_t* bad_offset = nullptr);

std::string encode_utf8(char32_t cp);
std::string encode_utf8(std::u32string_view cps);

std::string_view trim(std::string_view s);

// Splits on every occurrence of `sep`, keeping empty fields.
std::vector<std::string> split(std::string_view s, char sep);

// Splits on runs of ASCII whitespace, dropping empty fields.
std::vector<std::string> split_ws(std::string_view s);

std::string join(const std::vector<std::string>& parts, std::string_view sep);

// Reads a text file into lines. Strips a leading UTF-8 BOM and trailing CR
// from each line. Throws Error(FileUnreadable) when the file cannot be opened.
std::vector<std::string> read_lines(const std::filesystem::path& path);

}  // namespace fonodict::text
