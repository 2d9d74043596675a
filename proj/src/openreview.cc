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

#include "capopt/openreview.h"

#include "httplib.h"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <thread>
#include <unordered_set>
#include <utility>

#include "capopt/error.h"

namespace capopt {
namespace {

using Clock = std::chrono::steady_clock;

struct Endpoint {
  std::string scheme_host_port;
  std::string path_prefix;
};

Endpoint SplitBaseUrl(const std::string& url) {
  const std::size_t scheme = url.find("://");
  const std::size_t host_start = scheme == std::string::npos ? 0 : scheme + 3;
  const std::size_t slash = url.find('/', host_start);
  Endpoint ep;
  ep.scheme_host_port = url.substr(0, slash);
  if (slash != std::string::npos) {
    ep.path_prefix = url.substr(slash);
    while (!ep.path_prefix.empty() && ep.path_prefix.back() == '/') {
      ep.path_prefix.pop_back();
    }
  }
  return ep;
}

std::string ResolveBaseUrl(const FetchOptions& options, ApiVersion api) {
  if (!options.base_url.empty()) return options.base_url;
  if (const char* env = std::getenv(std::string(kOpenReviewUrlEnv).c_str());
      env != nullptr && *env != '\0') {
    return env;
  }
  return std::string(api == ApiVersion::kV1 ? kDefaultV1Url : kDefaultV2Url);
}

// v2 wraps content fields as {"value": ...}.
const nlohmann::json* ContentField(const nlohmann::json& note,
                                   const char* name, ApiVersion api) {
  auto content = note.find("content");
  if (content == note.end() || !content->is_object()) return nullptr;
  auto field = content->find(name);
  if (field == content->end()) return nullptr;
  if (api == ApiVersion::kV2 && field->is_object()) {
    auto value = field->find("value");
    return value == field->end() ? nullptr : &*value;
  }
  return &*field;
}

}  // namespace

std::optional<ApiVersion> ParseApiVersion(std::string_view text) {
  if (text == "v1") return ApiVersion::kV1;
  if (text == "v2") return ApiVersion::kV2;
  return std::nullopt;
}

ApiVersion ApiVersionForYear(int year) {
  return year >= 2024 ? ApiVersion::kV2 : ApiVersion::kV1;
}

std::string InvitationFor(int year, ApiVersion api) {
  const std::string y = std::to_string(year);
  if (year == 2015) {
    throw Error(ErrorKind::kUnsupportedYear,
                "ICLR 2015 has no records on OpenReview");
  }
  if (year == 2016) {
    throw Error(ErrorKind::kUnsupportedYear,
                "ICLR 2016 lists only workshop papers on OpenReview");
  }
  if (year < 2013) {
    throw Error(ErrorKind::kUnsupportedYear,
                "ICLR " + y + " predates OpenReview");
  }
  if (api != ApiVersionForYear(year)) {
    throw Error(ErrorKind::kUnsupportedYear,
                "ICLR " + y + " is served by API " +
                    (ApiVersionForYear(year) == ApiVersion::kV1 ? "v1" : "v2"));
  }
  if (year <= 2014) return "ICLR.cc/" + y + "/conference/-/submission";
  if (year <= 2023) return "ICLR.cc/" + y + "/Conference/-/Blind_Submission";
  return "ICLR.cc/" + y + "/Conference/-/Submission";
}

std::vector<RawSubmission> ParseNotesPage(const nlohmann::json& page,
                                          ApiVersion api, int year) {
  std::vector<RawSubmission> out;
  auto notes = page.find("notes");
  if (notes == page.end() || !notes->is_array()) {
    throw Error(ErrorKind::kHttp, "response has no 'notes' array");
  }
  for (const auto& note : *notes) {
    RawSubmission raw;
    raw.year = year;
    if (auto id = note.find("id"); id != note.end() && id->is_string()) {
      raw.external_id = id->get<std::string>();
    }
    if (const auto* ids = ContentField(note, "authorids", api);
        ids != nullptr && ids->is_array()) {
      for (const auto& label : *ids) {
        if (label.is_string()) raw.author_labels.push_back(label.get<std::string>());
      }
    }
    out.push_back(std::move(raw));
  }
  return out;
}

std::vector<RawSubmission> FetchYear(int year, ApiVersion api,
                                     const FetchOptions& options,
                                     FetchReport* report) {
  const std::string invitation = InvitationFor(year, api);
  const Endpoint endpoint = SplitBaseUrl(ResolveBaseUrl(options, api));
  httplib::Client client(endpoint.scheme_host_port);
  client.set_connection_timeout(options.timeout);
  client.set_read_timeout(options.timeout);
  client.set_follow_location(true);

  FetchReport local;
  FetchReport& rep = report != nullptr ? *report : local;

  struct Numbered {
    RawSubmission raw;
    std::optional<long long> number;
  };
  std::vector<Numbered> collected;
  std::string previous_first_id;
  std::optional<Clock::time_point> last_request;
  std::size_t offset = 0;

  while (true) {
    const std::string path = endpoint.path_prefix + "/notes?invitation=" +
                             httplib::detail::encode_query_param(invitation) +
                             "&offset=" + std::to_string(offset) +
                             "&limit=" + std::to_string(options.page_size);
    httplib::Result response;
    auto backoff = options.initial_backoff;
    for (int attempt = 0;; ++attempt) {
      if (last_request) {
        const auto next = *last_request + options.min_interval;
        if (Clock::now() < next) std::this_thread::sleep_until(next);
      }
      last_request = Clock::now();
      response = client.Get(path);
      if (!response) {
        throw Error(ErrorKind::kHttp, "request to " +
                                          endpoint.scheme_host_port +
                                          " failed: " +
                                          httplib::to_string(response.error()));
      }
      if (response->status != 429 || attempt >= options.max_retries) break;
      ++rep.retries;
      std::this_thread::sleep_for(backoff);
      backoff *= 2;
    }
    if (response->status != 200) {
      throw Error(ErrorKind::kHttp,
                  "HTTP " + std::to_string(response->status) + " for " + path);
    }
    nlohmann::json page;
    try {
      page = nlohmann::json::parse(response->body);
    } catch (const nlohmann::json::parse_error& e) {
      throw Error(ErrorKind::kHttp, std::string("malformed JSON: ") + e.what());
    }
    ++rep.pages;

    std::vector<RawSubmission> raws = ParseNotesPage(page, api, year);
    const auto& notes = page["notes"];
    if (raws.empty()) break;
    if (!previous_first_id.empty() &&
        raws.front().external_id == previous_first_id) {
      throw Error(ErrorKind::kPaginationStall,
                  "page at offset " + std::to_string(offset) +
                      " repeats the previous page");
    }
    previous_first_id = raws.front().external_id;
    for (std::size_t k = 0; k < raws.size(); ++k) {
      std::optional<long long> number;
      if (auto num = notes[k].find("number");
          num != notes[k].end() && num->is_number_integer()) {
        number = num->get<long long>();
      }
      collected.push_back({std::move(raws[k]), number});
    }
    rep.notes += raws.size();
    offset += raws.size();
    if (raws.size() < options.page_size) break;
    if (auto count = page.find("count");
        count != page.end() && count->is_number_integer() &&
        offset >= count->get<std::size_t>()) {
      break;
    }
  }

  std::stable_sort(collected.begin(), collected.end(),
                   [](const Numbered& a, const Numbered& b) {
                     if (a.number.has_value() != b.number.has_value()) {
                       return a.number.has_value();
                     }
                     return a.number.has_value() && *a.number < *b.number;
                   });
  std::vector<RawSubmission> out;
  out.reserve(collected.size());
  for (auto& entry : collected) {
    if (entry.raw.author_labels.empty()) {
      ++rep.dropped_without_authors;
      continue;
    }
    entry.raw.submission_ordinal = out.size() + 1;
    out.push_back(std::move(entry.raw));
  }
  return out;
}

std::string NormalizeLabel(std::string_view label) {
  while (!label.empty() && std::isspace(static_cast<unsigned char>(label.front()))) {
    label.remove_prefix(1);
  }
  while (!label.empty() && std::isspace(static_cast<unsigned char>(label.back()))) {
    label.remove_suffix(1);
  }
  std::string out;
  out.reserve(label.size());
  const bool email = label.find('@') != std::string_view::npos &&
                     !label.starts_with('~');
  for (char c : label) {
    const auto u = static_cast<unsigned char>(c);
    if (std::isspace(u)) {
      out += '_';
    } else {
      out += email ? static_cast<char>(std::tolower(u)) : c;
    }
  }
  return out;
}

std::vector<PaperRecord> Normalize(std::span<const RawSubmission> raws,
                                   NormalizeReport* report) {
  NormalizeReport local;
  NormalizeReport& rep = report != nullptr ? *report : local;

  std::vector<const RawSubmission*> order;
  order.reserve(raws.size());
  for (const auto& raw : raws) order.push_back(&raw);
  std::stable_sort(order.begin(), order.end(),
                   [](const RawSubmission* a, const RawSubmission* b) {
                     return a->submission_ordinal < b->submission_ordinal;
                   });

  std::vector<PaperRecord> out;
  out.reserve(order.size());
  for (const RawSubmission* raw : order) {
    PaperRecord rec;
    rec.id = raw->external_id.empty()
                 ? std::to_string(raw->submission_ordinal)
                 : raw->external_id;
    std::unordered_set<std::string> seen;
    for (const auto& label : raw->author_labels) {
      std::string norm = NormalizeLabel(label);
      if (norm.empty()) {
        ++rep.dropped_labels;
        continue;
      }
      if (!seen.insert(norm).second) {
        ++rep.duplicate_labels;
        continue;
      }
      rec.authors.push_back(std::move(norm));
    }
    if (rec.authors.empty()) {
      ++rep.dropped_papers;
      continue;
    }
    out.push_back(std::move(rec));
  }
  return out;
}

}  // namespace capopt
