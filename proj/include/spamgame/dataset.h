// Copyright 2026 The spamgame Authors.
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

// Dataset ingestion, export and synthetic generation.
//
// The on-disk layout is the Yelp metadata layout: one review per line with
// tab-separated account id, product id, rating, label and YYYY-MM-DD date.
// Label "-1" marks a filtered (spam) review; those records are skipped.

#ifndef SPAMGAME_DATASET_H_
#define SPAMGAME_DATASET_H_

#include <array>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "spamgame/review_graph.h"

namespace spamgame {

class DatasetError : public std::runtime_error {
 public:
  DatasetError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Field { kReviewId, kAccount, kProduct, kRating, kLabel, kDate, kIgnore };

struct DatasetFormat {
  char separator = '\t';
  std::vector<Field> fields = {Field::kAccount, Field::kProduct, Field::kRating,
                               Field::kLabel, Field::kDate};
  std::string spam_label = "-1";
  std::string legit_label = "1";
  // Day 0 of the integer date axis, as YYYY-MM-DD.
  std::string epoch = "2000-01-01";
};

// Parses "YYYY-MM-DD" into a day offset from `epoch`. Throws
// std::invalid_argument on malformed or impossible dates.
Day ParseDay(std::string_view iso, std::string_view epoch);
std::string FormatDay(Day day, std::string_view epoch);

// Reads a review stream into a graph holding only the legitimate records.
// Throws DatasetError with the offending line number.
ReviewGraph IngestDataset(std::istream& in, const DatasetFormat& format = {});

// Writes every live review in `format` with the legitimate label. Output is
// ordered by review id.
void WriteDataset(const ReviewGraph& graph, std::ostream& out,
                  const DatasetFormat& format = {});

struct GeneratorConfig {
  int n_accounts = 0;
  int n_products = 0;
  int n_reviews = 0;
  double elite_fraction = 0.0;
  int elite_threshold = 10;
  // Probabilities of 1..5 stars before the per-product tilt.
  std::array<double, 5> rating_distribution = {0.08, 0.09, 0.15, 0.33, 0.35};
  // Reviews are dated within [0, span_days).
  int span_days = 1460;
  // Exponent of the power law over regular-account review counts.
  double regular_degree_exponent = 1.2;
  std::uint64_t seed = 0;
};

// Builds a synthetic review graph. Elite (heavy) accounts receive extra
// reviews through preferential attachment; products are chosen by
// preferential attachment on product degree. Throws ConfigError when the
// requested elite fraction cannot be reached with n_reviews.
ReviewGraph GenerateSynthetic(const GeneratorConfig& config);

GeneratorConfig GeneratorConfigFromJson(const nlohmann::json& j);
nlohmann::json ToJson(const GeneratorConfig& config);

}  // namespace spamgame

#endif  // SPAMGAME_DATASET_H_
