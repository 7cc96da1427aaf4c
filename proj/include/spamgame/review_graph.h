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

#ifndef SPAMGAME_REVIEW_GRAPH_H_
#define SPAMGAME_REVIEW_GRAPH_H_

#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace spamgame {

// Dense integer handle with a distinct type per entity kind.
template <typename Tag, typename Rep = std::uint32_t>
struct StrongId {
  Rep value = 0;

  constexpr StrongId() = default;
  constexpr explicit StrongId(Rep v) : value(v) {}
  constexpr auto operator<=>(const StrongId&) const = default;
};

using AccountId = StrongId<struct AccountTag>;
using ProductId = StrongId<struct ProductTag>;
using ReviewId = StrongId<struct ReviewTag, std::uint64_t>;

// Calendar day as an integer offset from a dataset epoch.
using Day = std::int32_t;

enum class Origin { kOrganic, kInjected };
enum class Registration { kExisting, kNew };

struct Review {
  ReviewId id;
  AccountId account;
  ProductId product;
  int rating = 0;
  Day date = 0;
  Origin origin = Origin::kOrganic;
  // Index of the base spamming strategy that posted the review. Set iff
  // origin == kInjected.
  std::optional<int> injected_by;

  bool operator==(const Review&) const = default;
};

struct Account {
  std::string name;
  Registration registration = Registration::kExisting;

  bool operator==(const Account&) const = default;
};

struct Product {
  std::string name;

  bool operator==(const Product&) const = default;
};

struct InjectionSpec {
  AccountId account;
  ProductId product;
  int rating = 5;
  Day date = 0;
  int strategy_index = 0;
};

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bipartite multigraph of accounts and products whose edges are reviews.
//
// Review ids are slot indices into an append-only table; removed reviews
// leave a hole so ids stay stable. The per-account and per-product lists are
// kept sorted by id.
class ReviewGraph {
 public:
  AccountId AddAccount(std::string name,
                       Registration registration = Registration::kExisting);
  ProductId AddProduct(std::string name);

  // Adds an organic review. Throws GraphError on unknown endpoints or a
  // rating outside [1, 5].
  ReviewId AddReview(AccountId account, ProductId product, int rating,
                     Day date);

  // Adds an injected review attributed to spec.strategy_index.
  ReviewId InjectReview(const InjectionSpec& spec);

  // Removes every id in `ids`. All ids must be live; nothing is removed if
  // one of them is not.
  void RemoveReviews(std::span<const ReviewId> ids);

  std::size_t num_accounts() const { return accounts_.size(); }
  std::size_t num_products() const { return products_.size(); }
  std::size_t num_reviews() const { return live_reviews_; }
  // One past the largest review id ever issued.
  std::size_t review_capacity() const { return reviews_.size(); }

  bool HasAccount(AccountId a) const { return a.value < accounts_.size(); }
  bool HasProduct(ProductId p) const { return p.value < products_.size(); }
  bool HasReview(ReviewId r) const {
    return r.value < reviews_.size() && alive_[r.value];
  }

  const Account& account(AccountId a) const { return accounts_.at(a.value); }
  const Product& product(ProductId p) const { return products_.at(p.value); }
  const Review& review(ReviewId r) const;

  std::span<const ReviewId> ReviewsOfAccount(AccountId a) const {
    return by_account_.at(a.value);
  }
  std::span<const ReviewId> ReviewsOfProduct(ProductId p) const {
    return by_product_.at(p.value);
  }
  int AccountDegree(AccountId a) const {
    return static_cast<int>(by_account_.at(a.value).size());
  }
  int ProductDegree(ProductId p) const {
    return static_cast<int>(by_product_.at(p.value).size());
  }

  std::optional<AccountId> FindAccount(const std::string& name) const;
  std::optional<ProductId> FindProduct(const std::string& name) const;

  // Live review ids in ascending order.
  std::vector<ReviewId> ReviewIds() const;

  template <typename Fn>
  void ForEachReview(Fn&& fn) const {
    for (std::size_t i = 0; i < reviews_.size(); ++i) {
      if (alive_[i]) fn(reviews_[i]);
    }
  }

  std::vector<ReviewId> InjectedReviewIds() const;

  // Latest review date, or 0 for an empty graph.
  Day MaxDate() const;

  // Verifies that the account/product lists match the review table exactly.
  bool CheckConsistency() const;

  // Immutable copy that can be shared among concurrent readers.
  std::shared_ptr<const ReviewGraph> Snapshot() const {
    return std::make_shared<const ReviewGraph>(*this);
  }

  bool operator==(const ReviewGraph& other) const;

 private:
  ReviewId AppendReview(Review review);

  std::vector<Account> accounts_;
  std::vector<Product> products_;
  std::vector<Review> reviews_;
  std::vector<bool> alive_;
  std::size_t live_reviews_ = 0;
  std::vector<std::vector<ReviewId>> by_account_;
  std::vector<std::vector<ReviewId>> by_product_;
  std::unordered_map<std::string, AccountId> account_names_;
  std::unordered_map<std::string, ProductId> product_names_;
};

// Accounts whose current review count is strictly greater than `threshold`.
std::vector<AccountId> EliteAccounts(const ReviewGraph& graph, int threshold);

inline bool IsElite(const ReviewGraph& graph, AccountId a, int threshold) {
  return graph.AccountDegree(a) > threshold;
}

}  // namespace spamgame

template <typename Tag, typename Rep>
struct std::hash<spamgame::StrongId<Tag, Rep>> {
  std::size_t operator()(const spamgame::StrongId<Tag, Rep>& id) const {
    return std::hash<Rep>{}(id.value);
  }
};

#endif  // SPAMGAME_REVIEW_GRAPH_H_
