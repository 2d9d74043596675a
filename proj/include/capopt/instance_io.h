// Copyright 2026 The capopt Authors.
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

// Canonical instance files.
//
//   capopt-instance 1 <m>
//   <paper id>\t<author label> <author label> ...
//   ...
//
// One record per paper in submission order. Labels contain no whitespace;
// ids contain no tab or newline. Paths ending in ".gz" are read and written
// gzip-compressed.

#ifndef CAPOPT_INSTANCE_IO_H_
#define CAPOPT_INSTANCE_IO_H_

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "capopt/instance.h"

namespace capopt {

inline constexpr std::string_view kInstanceMagic = "capopt-instance";
inline constexpr int kInstanceFormatVersion = 1;

// Throws Error(kConfig) for ids or labels that cannot be represented.
std::string FormatInstance(std::span<const PaperRecord> records);

// Throws Error(kParse) with the 1-based line number on malformed input,
// including an empty file and a zero-paper header.
std::vector<PaperRecord> ParseInstance(std::string_view text);

void WriteInstance(const std::filesystem::path& path,
                   std::span<const PaperRecord> records);
std::vector<PaperRecord> ReadInstance(const std::filesystem::path& path);

// Whole-file helpers shared by the readers and writers above.
std::string ReadFileBytes(const std::filesystem::path& path);
void WriteFileBytes(const std::filesystem::path& path, std::string_view bytes);

}  // namespace capopt

#endif  // CAPOPT_INSTANCE_IO_H_
