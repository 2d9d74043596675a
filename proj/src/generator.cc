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

#include "capopt/generator.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "capopt/error.h"

namespace capopt {
namespace {

// Uniform double in (0, 1] from the top 53 bits; avoids the
// implementation-defined std distributions so output is portable.
double Uniform(std::mt19937_64& rng) {
  return (static_cast<double>(rng() >> 11) + 1.0) * 0x1.0p-53;
}

std::size_t UniformIndex(std::mt19937_64& rng, std::size_t n) {
  return std::min(n - 1, static_cast<std::size_t>(Uniform(rng) * static_cast<double>(n)));
}

// Fenwick tree over non-negative weights with prefix search.
class WeightTree {
 public:
  explicit WeightTree(std::size_t n) : tree_(n + 1, 0.0), weight_(n, 0.0) {
    while (top_bit_ * 2 <= n) top_bit_ *= 2;
  }

  void Set(std::size_t i, double w) {
    const double delta = w - weight_[i];
    weight_[i] = w;
    total_ += delta;
    for (std::size_t k = i + 1; k < tree_.size(); k += k & (~k + 1)) {
      tree_[k] += delta;
    }
  }
  double weight(std::size_t i) const { return weight_[i]; }
  double total() const { return total_; }

  // Index i with prefix(i) <= target < prefix(i + 1), skipping zero
  // weights.
  std::size_t Find(double target) const {
    std::size_t pos = 0;
    for (std::size_t step = top_bit_; step > 0; step /= 2) {
      const std::size_t next = pos + step;
      if (next < tree_.size() && tree_[next] <= target) {
        pos = next;
        target -= tree_[next];
      }
    }
    // Guard against rounding landing on a zero-weight slot.
    while (pos < weight_.size() && weight_[pos] <= 0.0) ++pos;
    if (pos == weight_.size()) {
      while (pos > 0 && weight_[pos - 1] <= 0.0) --pos;
      --pos;
    }
    return pos;
  }

 private:
  std::vector<double> tree_;
  std::vector<double> weight_;
  double total_ = 0.0;
  std::size_t top_bit_ = 1;
};

std::vector<double> PowerLawCdf(double alpha, std::size_t cap) {
  std::vector<double> cdf(cap);
  double acc = 0.0;
  for (std::size_t k = 1; k <= cap; ++k) {
    acc += std::pow(static_cast<double>(k), -alpha);
    cdf[k - 1] = acc;
  }
  for (double& c : cdf) c /= acc;
  return cdf;
}

std::size_t SampleCdf(const std::vector<double>& cdf, std::mt19937_64& rng) {
  const double u = Uniform(rng);
  auto it = std::lower_bound(cdf.begin(), cdf.end(), u);
  if (it == cdf.end()) --it;
  return static_cast<std::size_t>(it - cdf.begin()) + 1;
}

std::size_t SampleGeometric(double mean, std::size_t cap, std::mt19937_64& rng) {
  if (mean <= 1.0) return 1;
  const double p = 1.0 / mean;
  const double k = 1.0 + std::floor(std::log(Uniform(rng)) / std::log1p(-p));
  return std::clamp<std::size_t>(static_cast<std::size_t>(k), 1, cap);
}

}  // namespace

double PowerLawMean(double alpha, std::size_t cap) {
  double num = 0.0, den = 0.0;
  for (std::size_t k = 1; k <= cap; ++k) {
    const double w = std::pow(static_cast<double>(k), -alpha);
    num += w * static_cast<double>(k);
    den += w;
  }
  return num / den;
}

double TuneAlpha(std::size_t num_authors, std::size_t target_nnz,
                 std::size_t cap) {
  if (num_authors == 0 || cap == 0 || target_nnz < num_authors) {
    throw Error(ErrorKind::kConfig,
                "target nnz must be at least the author count");
  }
  const double target =
      static_cast<double>(target_nnz) / static_cast<double>(num_authors);
  double lo = 1.05, hi = 8.0;
  for (int iter = 0; iter < 60; ++iter) {
    const double mid = 0.5 * (lo + hi);
    // The mean falls as alpha grows.
    if (PowerLawMean(mid, cap) > target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

std::vector<PaperRecord> Generate(const GeneratorConfig& config) {
  const std::size_t n = config.num_authors;
  const std::size_t m = config.num_papers;
  if (m == 0) throw Error(ErrorKind::kConfig, "paper count must be positive");
  if (n == 0) throw Error(ErrorKind::kConfig, "author count must be positive");
  if (!(config.alpha > 0.0) || !std::isfinite(config.alpha)) {
    throw Error(ErrorKind::kConfig, "alpha must be positive");
  }
  if (config.authors_per_paper_mean < 0.0) {
    throw Error(ErrorKind::kConfig, "authors-per-paper mean must be >= 0");
  }
  const std::size_t cap =
      config.max_papers_per_author > 0 ? std::min(config.max_papers_per_author, m) : m;

  std::mt19937_64 rng(config.seed);
  const std::vector<double> cdf = PowerLawCdf(config.alpha, cap);
  std::vector<std::size_t> productivity(n);
  std::size_t total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    productivity[i] = SampleCdf(cdf, rng);
    total += productivity[i];
  }

  const bool consume = config.authors_per_paper_mean == 0.0;
  std::vector<std::size_t> sizes(m);
  if (consume) {
    if (total < m) {
      throw Error(ErrorKind::kConfig,
                  "drawn productivity " + std::to_string(total) +
                      " cannot cover " + std::to_string(m) + " papers");
    }
    const double mean = static_cast<double>(total) / static_cast<double>(m);
    std::size_t sum = 0;
    for (auto& s : sizes) {
      s = SampleGeometric(mean, n, rng);
      sum += s;
    }
    // Nudge sizes until they add up to the stub total exactly.
    while (sum > total) {
      std::size_t& s = sizes[UniformIndex(rng, m)];
      if (s > 1) {
        --s;
        --sum;
      }
    }
    while (sum < total) {
      std::size_t& s = sizes[UniformIndex(rng, m)];
      if (s < n) {
        ++s;
        ++sum;
      }
    }
  } else {
    for (auto& s : sizes) s = SampleGeometric(config.authors_per_paper_mean, n, rng);
  }

  WeightTree weights(n);
  for (std::size_t i = 0; i < n; ++i) {
    weights.Set(i, static_cast<double>(productivity[i]));
  }

  std::vector<PaperRecord> records(m);
  std::vector<std::size_t> chosen;
  for (std::size_t j = 0; j < m; ++j) {
    chosen.clear();
    for (std::size_t slot = 0; slot < sizes[j]; ++slot) {
      if (weights.total() <= 0.5) break;
      const std::size_t i = weights.Find(Uniform(rng) * weights.total() * (1.0 - 1e-12));
      chosen.push_back(i);
      weights.Set(i, 0.0);  // without replacement within the paper
    }
    for (std::size_t i : chosen) {
      const double restored = static_cast<double>(productivity[i]) - (consume ? 1.0 : 0.0);
      if (consume) --productivity[i];
      weights.Set(i, restored);
    }
    std::sort(chosen.begin(), chosen.end());
    records[j].id = "p" + std::to_string(j + 1);
    for (std::size_t i : chosen) records[j].authors.push_back("a" + std::to_string(i + 1));
  }
  return records;
}

}  // namespace capopt
