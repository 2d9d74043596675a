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

#include "capopt/instance_io.h"

#include <zlib.h>

#include <charconv>
#include <fstream>
#include <memory>
#include <sstream>

#include "capopt/error.h"

namespace capopt {
namespace {

bool IsGzip(const std::filesystem::path& path) {
  return path.extension() == ".gz";
}

[[noreturn]] void ParseFail(std::size_t line, const std::string& reason) {
  throw Error(ErrorKind::kParse, "line " + std::to_string(line) + ": " + reason);
}

bool HasWhitespace(std::string_view s) {
  return s.find_first_of(" \t\r\n\v\f") != std::string_view::npos;
}

struct GzCloser {
  void operator()(gzFile f) const { gzclose(f); }
};
using GzHandle = std::unique_ptr<std::remove_pointer_t<gzFile>, GzCloser>;

}  // namespace

std::string FormatInstance(std::span<const PaperRecord> records) {
  std::string out;
  out += kInstanceMagic;
  out += ' ' + std::to_string(kInstanceFormatVersion) + ' ' +
         std::to_string(records.size()) + '\n';
  for (std::size_t j = 0; j < records.size(); ++j) {
    const PaperRecord& rec = records[j];
    if (rec.id.empty() || rec.id.find_first_of("\t\r\n") != std::string::npos) {
      throw Error(ErrorKind::kConfig,
                  "paper " + std::to_string(j + 1) + " has an unwritable id");
    }
    out += rec.id;
    out += '\t';
    for (std::size_t k = 0; k < rec.authors.size(); ++k) {
      const std::string& label = rec.authors[k];
      if (label.empty() || HasWhitespace(label)) {
        throw Error(ErrorKind::kConfig, "paper " + std::to_string(j + 1) +
                                            " has an unwritable author label '" +
                                            label + "'");
      }
      if (k > 0) out += ' ';
      out += label;
    }
    out += '\n';
  }
  return out;
}

std::vector<PaperRecord> ParseInstance(std::string_view text) {
  if (text.empty()) ParseFail(1, "empty file");
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    pos = end + 1;
  }

  // Header: magic, version, paper count.
  std::istringstream header{std::string(lines[0])};
  std::string magic;
  int version = 0;
  std::string count_text;
  std::string extra;
  header >> magic >> version >> count_text;
  if (magic != kInstanceMagic || header.fail() || (header >> extra)) {
    ParseFail(1, "expected header 'capopt-instance 1 <m>'");
  }
  if (version != kInstanceFormatVersion) {
    ParseFail(1, "unsupported format version " + std::to_string(version));
  }
  std::size_t declared = 0;
  auto [ptr, ec] = std::from_chars(count_text.data(),
                                   count_text.data() + count_text.size(),
                                   declared);
  if (ec != std::errc() || ptr != count_text.data() + count_text.size()) {
    ParseFail(1, "bad paper count '" + count_text + "'");
  }
  if (declared == 0) ParseFail(1, "zero papers");

  std::vector<PaperRecord> records;
  records.reserve(declared);
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const std::string_view line = lines[k];
    const std::size_t line_no = k + 1;
    if (line.empty()) ParseFail(line_no, "blank line");
    const std::size_t tab = line.find('\t');
    if (tab == std::string_view::npos) ParseFail(line_no, "missing tab");
    PaperRecord rec;
    rec.id = std::string(line.substr(0, tab));
    if (rec.id.empty()) ParseFail(line_no, "empty paper id");
    std::string_view rest = line.substr(tab + 1);
    if (rest.find('\t') != std::string_view::npos) {
      ParseFail(line_no, "more than one tab");
    }
    while (!rest.empty()) {
      const std::size_t space = rest.find(' ');
      std::string_view label = rest.substr(0, space);
      if (label.empty()) ParseFail(line_no, "empty author label");
      rec.authors.emplace_back(label);
      if (space == std::string_view::npos) break;
      rest.remove_prefix(space + 1);
      if (rest.empty()) ParseFail(line_no, "trailing space");
    }
    records.push_back(std::move(rec));
  }
  if (records.size() != declared) {
    ParseFail(lines.size(), "header declares " + std::to_string(declared) +
                                " papers, found " +
                                std::to_string(records.size()));
  }
  return records;
}

std::string ReadFileBytes(const std::filesystem::path& path) {
  if (IsGzip(path)) {
    GzHandle file(gzopen(path.c_str(), "rb"));
    if (!file) throw Error(ErrorKind::kParse, "cannot open " + path.string());
    std::string out;
    char buffer[1 << 16];
    int n;
    while ((n = gzread(file.get(), buffer, sizeof(buffer))) > 0) {
      out.append(buffer, static_cast<std::size_t>(n));
    }
    if (n < 0) throw Error(ErrorKind::kParse, "corrupt gzip in " + path.string());
    return out;
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kParse, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void WriteFileBytes(const std::filesystem::path& path, std::string_view bytes) {
  if (IsGzip(path)) {
    // Fixed compression level and no embedded name/mtime keep output stable.
    GzHandle file(gzopen(path.c_str(), "wb9"));
    if (!file) throw Error(ErrorKind::kConfig, "cannot write " + path.string());
    if (!bytes.empty() &&
        gzwrite(file.get(), bytes.data(), static_cast<unsigned>(bytes.size())) == 0) {
      throw Error(ErrorKind::kConfig, "gzip write failed for " + path.string());
    }
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::kConfig, "cannot write " + path.string());
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error(ErrorKind::kConfig, "write failed for " + path.string());
}

void WriteInstance(const std::filesystem::path& path,
                   std::span<const PaperRecord> records) {
  WriteFileBytes(path, FormatInstance(records));
}

std::vector<PaperRecord> ReadInstance(const std::filesystem::path& path) {
  return ParseInstance(ReadFileBytes(path));
}

}  // namespace capopt
