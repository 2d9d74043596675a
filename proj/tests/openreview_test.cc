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

#include <gtest/gtest.h>
#include <httplib.h>

#include <atomic>
#include <mutex>
#include <nlohmann/json.hpp>
#include <thread>

#include "capopt/error.h"

namespace capopt {
namespace {

using nlohmann::json;

TEST(InvitationTest, Years) {
  EXPECT_EQ(InvitationFor(2013, ApiVersion::kV1),
            "ICLR.cc/2013/conference/-/submission");
  EXPECT_EQ(InvitationFor(2014, ApiVersion::kV1),
            "ICLR.cc/2014/conference/-/submission");
  EXPECT_EQ(InvitationFor(2017, ApiVersion::kV1),
            "ICLR.cc/2017/Conference/-/Blind_Submission");
  EXPECT_EQ(InvitationFor(2023, ApiVersion::kV1),
            "ICLR.cc/2023/Conference/-/Blind_Submission");
  EXPECT_EQ(InvitationFor(2024, ApiVersion::kV2),
            "ICLR.cc/2024/Conference/-/Submission");
  EXPECT_EQ(InvitationFor(2025, ApiVersion::kV2),
            "ICLR.cc/2025/Conference/-/Submission");
}

TEST(InvitationTest, UnsupportedYears) {
  for (int year : {2012, 2015, 2016}) {
    try {
      InvitationFor(year, ApiVersion::kV1);
      FAIL() << year;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::kUnsupportedYear);
    }
  }
  EXPECT_THROW(InvitationFor(2024, ApiVersion::kV1), Error);
  EXPECT_THROW(InvitationFor(2019, ApiVersion::kV2), Error);
}

TEST(InvitationTest, ApiForYear) {
  EXPECT_EQ(ApiVersionForYear(2013), ApiVersion::kV1);
  EXPECT_EQ(ApiVersionForYear(2023), ApiVersion::kV1);
  EXPECT_EQ(ApiVersionForYear(2024), ApiVersion::kV2);
  EXPECT_EQ(ParseApiVersion("v2"), ApiVersion::kV2);
  EXPECT_EQ(ParseApiVersion("v3"), std::nullopt);
}

TEST(ParseNotesPageTest, V1AndV2) {
  const json v1 = json::parse(R"({"notes":[
      {"id":"f1","number":2,"content":{"authorids":["~A1","b@x.org"]}}]})");
  const auto a = ParseNotesPage(v1, ApiVersion::kV1, 2020);
  ASSERT_EQ(a.size(), 1u);
  EXPECT_EQ(a[0].external_id, "f1");
  EXPECT_EQ(a[0].author_labels, (std::vector<std::string>{"~A1", "b@x.org"}));
  EXPECT_EQ(a[0].year, 2020);

  const json v2 = json::parse(R"({"notes":[
      {"id":"g1","number":1,"content":{"authorids":{"value":["~C1"]}}}]})");
  const auto b = ParseNotesPage(v2, ApiVersion::kV2, 2024);
  ASSERT_EQ(b.size(), 1u);
  EXPECT_EQ(b[0].author_labels, std::vector<std::string>{"~C1"});

  EXPECT_THROW(ParseNotesPage(json::parse(R"({"x":1})"), ApiVersion::kV1, 2020),
               Error);
}

// Local stand-in for the notes endpoint. Serves `total` notes in pages,
// numbered in reverse so the client has to sort them.
class MockOpenReview {
 public:
  struct Behavior {
    int total = 0;
    bool v2 = false;
    int throttle_first = 0;    // respond 429 this many times first
    bool repeat_pages = false; // every page returns the first page
    int fail_status = 0;       // nonzero: always answer with this status
    bool drop_count = false;
  };

  explicit MockOpenReview(Behavior behavior) : behavior_(behavior) {
    server_.Get("/notes", [this](const httplib::Request& req,
                                 httplib::Response& res) { Handle(req, res); });
    port_ = server_.bind_to_any_port("127.0.0.1");
    thread_ = std::thread([this] { server_.listen_after_bind(); });
    server_.wait_until_ready();
  }
  ~MockOpenReview() {
    server_.stop();
    thread_.join();
  }

  std::string url() const { return "http://127.0.0.1:" + std::to_string(port_); }
  int requests() const { return requests_.load(); }
  std::string last_invitation() const {
    std::lock_guard<std::mutex> lock(mu_);
    return last_invitation_;
  }

 private:
  void Handle(const httplib::Request& req, httplib::Response& res) {
    ++requests_;
    {
      std::lock_guard<std::mutex> lock(mu_);
      last_invitation_ = req.get_param_value("invitation");
    }
    if (behavior_.fail_status != 0) {
      res.status = behavior_.fail_status;
      return;
    }
    if (throttled_ < behavior_.throttle_first) {
      ++throttled_;
      res.status = 429;
      return;
    }
    int offset = std::stoi(req.get_param_value("offset"));
    const int limit = std::stoi(req.get_param_value("limit"));
    if (behavior_.repeat_pages) offset = 0;
    json notes = json::array();
    for (int k = offset; k < std::min(behavior_.total, offset + limit); ++k) {
      const int number = behavior_.total - k;
      json authors = json::array();
      // Every fifth note has no authors; others get a pair.
      if (number % 5 != 0) {
        authors.push_back("~Author" + std::to_string(number % 7));
        authors.push_back("~Author" + std::to_string(number % 3 + 100));
      }
      json content;
      if (behavior_.v2) {
        content["authorids"] = {{"value", authors}};
      } else {
        content["authorids"] = authors;
      }
      notes.push_back({{"id", "n" + std::to_string(number)},
                       {"number", number},
                       {"content", content}});
    }
    json page{{"notes", notes}};
    if (!behavior_.drop_count) page["count"] = behavior_.total;
    res.set_content(page.dump(), "application/json");
  }

  Behavior behavior_;
  httplib::Server server_;
  int port_ = 0;
  std::thread thread_;
  std::atomic<int> requests_{0};
  int throttled_ = 0;
  mutable std::mutex mu_;
  std::string last_invitation_;
};

FetchOptions FastOptions(const std::string& url, std::size_t page_size) {
  FetchOptions opts;
  opts.base_url = url;
  opts.page_size = page_size;
  opts.min_interval = std::chrono::milliseconds(0);
  opts.initial_backoff = std::chrono::milliseconds(1);
  opts.timeout = std::chrono::seconds(5);
  return opts;
}

TEST(FetchYearTest, PaginatesAndSortsV1) {
  MockOpenReview mock({.total = 23});
  FetchReport report;
  const auto raws = FetchYear(2019, ApiVersion::kV1, FastOptions(mock.url(), 10), &report);
  EXPECT_EQ(mock.last_invitation(), "ICLR.cc/2019/Conference/-/Blind_Submission");
  EXPECT_EQ(report.pages, 3u);
  EXPECT_EQ(report.notes, 23u);
  // Numbers 5, 10, 15, 20 have no authors.
  EXPECT_EQ(report.dropped_without_authors, 4u);
  ASSERT_EQ(raws.size(), 19u);
  EXPECT_EQ(raws.front().external_id, "n1");
  EXPECT_EQ(raws.back().external_id, "n23");
  for (std::size_t k = 0; k < raws.size(); ++k) {
    EXPECT_EQ(raws[k].submission_ordinal, k + 1);
  }
}

TEST(FetchYearTest, ExactPageMultipleWithoutCount) {
  MockOpenReview mock({.total = 20, .drop_count = true});
  FetchReport report;
  const auto raws = FetchYear(2020, ApiVersion::kV1, FastOptions(mock.url(), 10), &report);
  // Third request comes back empty and ends the loop.
  EXPECT_EQ(report.pages, 3u);
  EXPECT_EQ(raws.size(), 16u);
}

TEST(FetchYearTest, V2Wrapping) {
  MockOpenReview mock({.total = 7, .v2 = true});
  const auto raws = FetchYear(2024, ApiVersion::kV2, FastOptions(mock.url(), 1000));
  EXPECT_EQ(mock.last_invitation(), "ICLR.cc/2024/Conference/-/Submission");
  ASSERT_EQ(raws.size(), 6u);
  EXPECT_EQ(raws[0].author_labels, (std::vector<std::string>{"~Author1", "~Author101"}));
}

TEST(FetchYearTest, RetriesThrottling) {
  MockOpenReview mock({.total = 3, .throttle_first = 2});
  FetchReport report;
  const auto raws = FetchYear(2018, ApiVersion::kV1, FastOptions(mock.url(), 10), &report);
  EXPECT_EQ(report.retries, 2u);
  EXPECT_EQ(raws.size(), 3u);
}

TEST(FetchYearTest, GivesUpAfterRetries) {
  MockOpenReview mock({.total = 3, .throttle_first = 100});
  FetchOptions opts = FastOptions(mock.url(), 10);
  opts.max_retries = 2;
  try {
    FetchYear(2018, ApiVersion::kV1, opts);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kHttp);
  }
  EXPECT_EQ(mock.requests(), 3);
}

TEST(FetchYearTest, PaginationStall) {
  MockOpenReview mock({.total = 30, .repeat_pages = true});
  try {
    FetchYear(2018, ApiVersion::kV1, FastOptions(mock.url(), 10));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kPaginationStall);
  }
}

TEST(FetchYearTest, HttpError) {
  MockOpenReview mock({.total = 3, .fail_status = 500});
  try {
    FetchYear(2018, ApiVersion::kV1, FastOptions(mock.url(), 10));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kHttp);
  }
}

TEST(FetchYearTest, ConnectionRefused) {
  std::string url;
  {
    MockOpenReview mock({.total = 1});
    url = mock.url();
  }
  EXPECT_THROW(FetchYear(2018, ApiVersion::kV1, FastOptions(url, 10)), Error);
}

TEST(NormalizeLabelTest, Rules) {
  EXPECT_EQ(NormalizeLabel("  Foo@Bar.ORG "), "foo@bar.org");
  EXPECT_EQ(NormalizeLabel("~Jane_Doe1"), "~Jane_Doe1");
  EXPECT_EQ(NormalizeLabel("Jane  Doe"), "Jane__Doe");
  EXPECT_EQ(NormalizeLabel("   "), "");
}

TEST(NormalizeTest, SortsDedupsAndDrops) {
  std::vector<RawSubmission> raws{
      {"z", 2, {"~B1", "b@X.org", "B@x.org"}, 2020},
      {"", 1, {"~A1", " ", "~A1"}, 2020},
      {"y", 3, {"  "}, 2020},
  };
  NormalizeReport report;
  const auto records = Normalize(raws, &report);
  ASSERT_EQ(records.size(), 2u);
  EXPECT_EQ(records[0], (PaperRecord{"1", {"~A1"}}));
  EXPECT_EQ(records[1], (PaperRecord{"z", {"~B1", "b@x.org"}}));
  EXPECT_EQ(report.duplicate_labels, 2u);
  EXPECT_EQ(report.dropped_labels, 2u);
  EXPECT_EQ(report.dropped_papers, 1u);
}

TEST(NormalizeTest, Idempotent) {
  std::vector<RawSubmission> raws{
      {"a", 1, {" X@Y.com", "~P q"}, 2021},
      {"b", 2, {"~R1", "~R1"}, 2021},
  };
  const auto once = Normalize(raws);
  std::vector<RawSubmission> again;
  for (std::size_t k = 0; k < once.size(); ++k) {
    again.push_back({once[k].id, k + 1, once[k].authors, 2021});
  }
  EXPECT_EQ(Normalize(again), once);
}

}  // namespace
}  // namespace capopt
