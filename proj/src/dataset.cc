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

#include "spamgame/dataset.h"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <istream>
#include <numeric>
#include <ostream>
#include <random>
#include <set>
#include <unordered_set>

namespace spamgame {
namespace {

std::chrono::sys_days ToSysDays(std::string_view iso) {
  auto bad = [&] {
    return std::invalid_argument("malformed date '" + std::string(iso) + "'");
  };
  if (iso.size() != 10 || iso[4] != '-' || iso[7] != '-') throw bad();
  int y = 0;
  unsigned m = 0, d = 0;
  auto parse = [&](std::string_view s, auto& out) {
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    if (ec != std::errc() || ptr != s.data() + s.size()) throw bad();
  };
  parse(iso.substr(0, 4), y);
  parse(iso.substr(5, 2), m);
  parse(iso.substr(8, 2), d);
  std::chrono::year_month_day ymd{std::chrono::year{y}, std::chrono::month{m},
                                  std::chrono::day{d}};
  if (!ymd.ok()) throw bad();
  return std::chrono::sys_days{ymd};
}

std::vector<std::string_view> Split(std::string_view line, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = line.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.push_back(line.substr(start));
      return parts;
    }
    parts.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
}

}  // namespace

Day ParseDay(std::string_view iso, std::string_view epoch) {
  return static_cast<Day>((ToSysDays(iso) - ToSysDays(epoch)).count());
}

std::string FormatDay(Day day, std::string_view epoch) {
  std::chrono::year_month_day ymd{ToSysDays(epoch) + std::chrono::days{day}};
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%04d-%02u-%02u", static_cast<int>(ymd.year()),
                static_cast<unsigned>(ymd.month()),
                static_cast<unsigned>(ymd.day()));
  return buf;
}

ReviewGraph IngestDataset(std::istream& in, const DatasetFormat& format) {
  auto has = [&](Field f) {
    return std::find(format.fields.begin(), format.fields.end(), f) !=
           format.fields.end();
  };
  for (Field required : {Field::kAccount, Field::kProduct, Field::kRating,
                         Field::kLabel, Field::kDate}) {
    if (!has(required)) {
      throw ConfigError("dataset format is missing a required field");
    }
  }

  ReviewGraph graph;
  std::unordered_set<std::string> review_ids;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto parts = Split(line, format.separator);
    if (parts.size() != format.fields.size()) {
      throw DatasetError(line_no, "expected " +
                                      std::to_string(format.fields.size()) +
                                      " fields, found " +
                                      std::to_string(parts.size()));
    }
    std::string_view account, product, label, date, review_id;
    int rating = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      std::string_view v = parts[i];
      switch (format.fields[i]) {
        case Field::kReviewId: review_id = v; break;
        case Field::kAccount: account = v; break;
        case Field::kProduct: product = v; break;
        case Field::kLabel: label = v; break;
        case Field::kDate: date = v; break;
        case Field::kIgnore: break;
        case Field::kRating: {
          auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), rating);
          if (ec != std::errc() || ptr != v.data() + v.size()) {
            throw DatasetError(line_no, "malformed rating '" + std::string(v) + "'");
          }
          break;
        }
      }
    }
    if (account.empty() || product.empty()) {
      throw DatasetError(line_no, "empty account or product id");
    }
    if (rating < 1 || rating > 5) {
      throw DatasetError(line_no, "rating " + std::to_string(rating) +
                                      " outside [1,5]");
    }
    if (!review_id.empty() &&
        !review_ids.insert(std::string(review_id)).second) {
      throw DatasetError(line_no,
                         "duplicate review id '" + std::string(review_id) + "'");
    }
    Day day = 0;
    try {
      day = ParseDay(date, format.epoch);
    } catch (const std::invalid_argument& e) {
      throw DatasetError(line_no, e.what());
    }
    if (label == format.spam_label) continue;
    if (label != format.legit_label) {
      throw DatasetError(line_no, "unknown label '" + std::string(label) + "'");
    }
    std::string account_name(account), product_name(product);
    AccountId a = graph.FindAccount(account_name)
                      .value_or(AccountId(graph.num_accounts()));
    if (a.value == graph.num_accounts()) a = graph.AddAccount(account_name);
    ProductId p = graph.FindProduct(product_name)
                      .value_or(ProductId(graph.num_products()));
    if (p.value == graph.num_products()) p = graph.AddProduct(product_name);
    graph.AddReview(a, p, rating, day);
  }
  return graph;
}

void WriteDataset(const ReviewGraph& graph, std::ostream& out,
                  const DatasetFormat& format) {
  graph.ForEachReview([&](const Review& r) {
    for (std::size_t i = 0; i < format.fields.size(); ++i) {
      if (i > 0) out << format.separator;
      switch (format.fields[i]) {
        case Field::kReviewId: out << r.id.value; break;
        case Field::kAccount: out << graph.account(r.account).name; break;
        case Field::kProduct: out << graph.product(r.product).name; break;
        case Field::kRating: out << r.rating; break;
        case Field::kLabel: out << format.legit_label; break;
        case Field::kDate: out << FormatDay(r.date, format.epoch); break;
        case Field::kIgnore: break;
      }
    }
    out << '\n';
  });
}

namespace {

void ValidateGenerator(const GeneratorConfig& c) {
  if (c.n_accounts <= 0 || c.n_products <= 0 || c.n_reviews <= 0) {
    throw ConfigError("generator counts must be positive");
  }
  if (c.elite_fraction < 0.0 || c.elite_fraction > 1.0) {
    throw ConfigError("elite_fraction must lie in [0,1]");
  }
  if (c.elite_threshold < 1) throw ConfigError("elite_threshold must be >= 1");
  if (c.span_days < 1) throw ConfigError("span_days must be >= 1");
  double total = 0.0;
  for (double w : c.rating_distribution) {
    if (w < 0.0) throw ConfigError("rating_distribution must be nonnegative");
    total += w;
  }
  if (total <= 0.0) throw ConfigError("rating_distribution sums to zero");
}

// Review counts for regular accounts (<= threshold) and elite accounts
// (> threshold) summing exactly to n_reviews.
std::vector<int> AccountDegrees(const GeneratorConfig& c, int n_elite,
                                std::mt19937_64& rng) {
  const int threshold = c.elite_threshold;
  const int n_regular = c.n_accounts - n_elite;
  const long long min_total =
      static_cast<long long>(n_regular) +
      static_cast<long long>(n_elite) * (threshold + 1);
  if (c.n_reviews < min_total) {
    throw ConfigError("infeasible generator config: " +
                      std::to_string(c.n_reviews) +
                      " reviews cannot give " + std::to_string(n_elite) +
                      " accounts more than " + std::to_string(threshold) +
                      " reviews");
  }
  if (n_elite == 0 &&
      c.n_reviews > static_cast<long long>(n_regular) * threshold) {
    throw ConfigError("infeasible generator config: too many reviews for an "
                      "elite-free population");
  }

  std::vector<double> weights(threshold);
  for (int d = 1; d <= threshold; ++d) {
    weights[d - 1] = std::pow(d, -c.regular_degree_exponent);
  }
  std::discrete_distribution<int> regular_dist(weights.begin(), weights.end());
  std::vector<int> degree(c.n_accounts, 0);
  long long regular_sum = 0;
  for (int i = n_elite; i < c.n_accounts; ++i) {
    degree[i] = regular_dist(rng) + 1;
    regular_sum += degree[i];
  }

  long long regular_target = regular_sum;
  if (n_elite == 0) {
    regular_target = c.n_reviews;
  } else {
    regular_target =
        std::min(regular_sum, c.n_reviews - static_cast<long long>(n_elite) *
                                                (threshold + 1));
  }
  if (n_regular > 0) {
    std::uniform_int_distribution<int> pick(n_elite, c.n_accounts - 1);
    while (regular_sum < regular_target) {
      int i = pick(rng);
      if (degree[i] < threshold) {
        ++degree[i];
        ++regular_sum;
      }
    }
    while (regular_sum > regular_target) {
      int i = pick(rng);
      if (degree[i] > 1) {
        --degree[i];
        --regular_sum;
      }
    }
  }
  if (n_elite == 0) return degree;

  // Preferential attachment of the surplus among elite accounts. An elite
  // account is capped at one review per product while any other is below
  // the cap.
  long long surplus =
      c.n_reviews - regular_sum - static_cast<long long>(n_elite) * (threshold + 1);
  for (int i = 0; i < n_elite; ++i) degree[i] = threshold + 1;
  constexpr double kSmoothing = 0.5;
  std::vector<int> owners;
  owners.reserve(static_cast<std::size_t>(surplus));
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<int> any_elite(0, n_elite - 1);
  int capped = threshold + 1 >= c.n_products ? n_elite : 0;
  for (long long s = 0; s < surplus; ++s) {
    const bool all_capped = capped == n_elite;
    int chosen = -1;
    for (int attempt = 0; attempt < 64 && chosen < 0; ++attempt) {
      int candidate;
      double uniform_mass = kSmoothing * n_elite;
      if (owners.empty() ||
          unit(rng) * (uniform_mass + owners.size()) < uniform_mass) {
        candidate = any_elite(rng);
      } else {
        candidate = owners[std::uniform_int_distribution<std::size_t>(
            0, owners.size() - 1)(rng)];
      }
      if (all_capped || degree[candidate] < c.n_products) chosen = candidate;
    }
    if (chosen < 0) {
      chosen = any_elite(rng);
      int start = chosen;
      for (int k = 0; k < n_elite; ++k) {
        int candidate = (start + k) % n_elite;
        if (degree[candidate] < c.n_products) {
          chosen = candidate;
          break;
        }
      }
    }
    ++degree[chosen];
    if (degree[chosen] == c.n_products) ++capped;
    owners.push_back(chosen);
  }
  return degree;
}

}  // namespace

ReviewGraph GenerateSynthetic(const GeneratorConfig& c) {
  ValidateGenerator(c);
  std::mt19937_64 rng(c.seed);
  const int n_elite =
      static_cast<int>(std::llround(c.elite_fraction * c.n_accounts));
  std::vector<int> degree = AccountDegrees(c, n_elite, rng);
  // Interleave heavy and light accounts so account ids carry no signal.
  std::shuffle(degree.begin(), degree.end(), rng);

  ReviewGraph graph;
  for (int p = 0; p < c.n_products; ++p) graph.AddProduct("p" + std::to_string(p));
  for (int a = 0; a < c.n_accounts; ++a) graph.AddAccount("u" + std::to_string(a));

  // Per-product tilt of the rating distribution.
  std::normal_distribution<double> tilt(0.0, 0.35);
  std::vector<std::discrete_distribution<int>> rating_dist;
  rating_dist.reserve(c.n_products);
  for (int p = 0; p < c.n_products; ++p) {
    double theta = tilt(rng);
    std::array<double, 5> w{};
    for (int r = 0; r < 5; ++r) {
      w[r] = c.rating_distribution[r] * std::exp(theta * (r - 2));
    }
    rating_dist.emplace_back(w.begin(), w.end());
  }

  constexpr double kProductSmoothing = 5.0;
  std::vector<int> product_owners;
  product_owners.reserve(c.n_reviews);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<int> any_product(0, c.n_products - 1);
  auto draw_product = [&]() {
    double uniform_mass = kProductSmoothing * c.n_products;
    if (product_owners.empty() ||
        unit(rng) * (uniform_mass + product_owners.size()) < uniform_mass) {
      return any_product(rng);
    }
    return product_owners[std::uniform_int_distribution<std::size_t>(
        0, product_owners.size() - 1)(rng)];
  };

  std::vector<char> used(c.n_products, 0);
  std::vector<int> touched;
  const int max_regular_window = std::min(365, c.span_days);
  for (int a = 0; a < c.n_accounts; ++a) {
    const int deg = degree[a];
    const bool elite = deg > c.elite_threshold;
    int window = elite ? std::uniform_int_distribution<int>(
                             std::max(1, c.span_days / 4), c.span_days)(rng)
                       : std::uniform_int_distribution<int>(
                             1, max_regular_window)(rng);
    int start = std::uniform_int_distribution<int>(0, c.span_days - window)(rng);
    std::uniform_int_distribution<int> offset(0, window - 1);
    for (int k = 0; k < deg; ++k) {
      int p = draw_product();
      if (deg <= c.n_products && used[p]) {
        for (int attempt = 0; attempt < 64 && used[p]; ++attempt) {
          p = draw_product();
        }
        if (used[p]) {
          int s = any_product(rng);
          for (int j = 0; j < c.n_products; ++j) {
            int q = (s + j) % c.n_products;
            if (!used[q]) {
              p = q;
              break;
            }
          }
        }
      }
      if (!used[p]) {
        used[p] = 1;
        touched.push_back(p);
      }
      product_owners.push_back(p);
      int rating = rating_dist[p](rng) + 1;
      graph.AddReview(AccountId(a), ProductId(p), rating, start + offset(rng));
    }
    for (int p : touched) used[p] = 0;
    touched.clear();
  }
  return graph;
}

namespace {

template <typename T>
void ReadField(const nlohmann::json& j, const char* key, T& out) {
  if (!j.contains(key)) return;
  try {
    out = j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("generator field '") + key + "': " + e.what());
  }
}

}  // namespace

GeneratorConfig GeneratorConfigFromJson(const nlohmann::json& j) {
  if (!j.is_object()) throw ConfigError("generator config must be an object");
  static const std::set<std::string> kKnown = {
      "n_accounts",  "n_products",          "n_reviews",
      "elite_fraction", "elite_threshold",  "rating_distribution",
      "span_days",   "regular_degree_exponent", "seed"};
  for (const auto& [key, value] : j.items()) {
    if (!kKnown.contains(key)) {
      throw ConfigError("unknown generator field '" + key + "'");
    }
  }
  for (const char* key : {"n_accounts", "n_products", "n_reviews",
                          "elite_fraction"}) {
    if (!j.contains(key)) {
      throw ConfigError(std::string("generator field '") + key + "' is required");
    }
  }
  GeneratorConfig c;
  ReadField(j, "n_accounts", c.n_accounts);
  ReadField(j, "n_products", c.n_products);
  ReadField(j, "n_reviews", c.n_reviews);
  ReadField(j, "elite_fraction", c.elite_fraction);
  ReadField(j, "elite_threshold", c.elite_threshold);
  ReadField(j, "rating_distribution", c.rating_distribution);
  ReadField(j, "span_days", c.span_days);
  ReadField(j, "regular_degree_exponent", c.regular_degree_exponent);
  ReadField(j, "seed", c.seed);
  ValidateGenerator(c);
  return c;
}

nlohmann::json ToJson(const GeneratorConfig& c) {
  return {{"n_accounts", c.n_accounts},
          {"n_products", c.n_products},
          {"n_reviews", c.n_reviews},
          {"elite_fraction", c.elite_fraction},
          {"elite_threshold", c.elite_threshold},
          {"rating_distribution", c.rating_distribution},
          {"span_days", c.span_days},
          {"regular_degree_exponent", c.regular_degree_exponent},
          {"seed", c.seed}};
}

}  // namespace spamgame
