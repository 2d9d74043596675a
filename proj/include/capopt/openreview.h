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

// Client for the public OpenReview note listings of ICLR submissions.

#ifndef CAPOPT_OPENREVIEW_H_
#define CAPOPT_OPENREVIEW_H_

#include <chrono>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "capopt/instance.h"

namespace capopt {

enum class ApiVersion { kV1, kV2 };

std::optional<ApiVersion> ParseApiVersion(std::string_view text);

struct RawSubmission {
  std::string external_id;
  std::size_t submission_ordinal = 0;  // 1-based, strictly increasing
  std::vector<std::string> author_labels;
  int year = 0;
};

// Invitation id listing the submissions of an ICLR year. Throws
// Error(kUnsupportedYear) for years without usable records (2015, 2016,
// anything before 2013) and for a year/API combination OpenReview does not
// serve.
std::string InvitationFor(int year, ApiVersion api);

// API generation that serves a given year.
ApiVersion ApiVersionForYear(int year);

inline constexpr std::string_view kOpenReviewUrlEnv = "CAPOPT_OPENREVIEW_URL";
inline constexpr std::string_view kDefaultV1Url = "https://api.openreview.net";
inline constexpr std::string_view kDefaultV2Url = "https://api2.openreview.net";

struct FetchOptions {
  // Empty: $CAPOPT_OPENREVIEW_URL if set, else the public endpoint for the
  // API version. May carry a path prefix, e.g. "http://localhost:8080/or".
  std::string base_url;
  std::size_t page_size = 1000;
  std::chrono::milliseconds min_interval{200};
  std::chrono::milliseconds initial_backoff{1000};
  int max_retries = 5;
  std::chrono::seconds timeout{60};
};

struct FetchReport {
  std::size_t pages = 0;
  std::size_t notes = 0;
  std::size_t dropped_without_authors = 0;
  std::size_t retries = 0;
};

// Retrieves every page of the year's submission listing. Notes are sorted
// by their venue number when present (unnumbered ones keep fetch order at
// the end) and then assigned ordinals 1..m. Notes without authors are
// dropped and counted.
//
// Throws Error(kHttp) on transport failures or non-success statuses
// (after retrying 429 with exponential backoff), Error(kPaginationStall)
// when a page repeats the previous one, Error(kUnsupportedYear).
std::vector<RawSubmission> FetchYear(int year, ApiVersion api,
                                     const FetchOptions& options = {},
                                     FetchReport* report = nullptr);

// Extracts submissions from one page of a /notes response. Ordinals are
// left at 0. Exposed for tests.
std::vector<RawSubmission> ParseNotesPage(const nlohmann::json& page,
                                          ApiVersion api, int year);

struct NormalizeReport {
  std::size_t dropped_labels = 0;      // empty labels
  std::size_t duplicate_labels = 0;    // collapsed within a paper
  std::size_t dropped_papers = 0;      // no usable label left
};

// Canonical author label: profile ids ("~First_Last1") as-is, emails
// lowercased, surrounding whitespace trimmed and inner whitespace replaced
// by '_'. Returns an empty string for unusable input.
std::string NormalizeLabel(std::string_view label);

// Per-paper author lists in submission order with duplicates collapsed.
std::vector<PaperRecord> Normalize(std::span<const RawSubmission> raws,
                                   NormalizeReport* report = nullptr);

}  // namespace capopt

#endif  // CAPOPT_OPENREVIEW_H_
