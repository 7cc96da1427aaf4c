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

#include "spamgame/review_graph.h"

#include <algorithm>
#include <string>
#include <unordered_set>

namespace spamgame {
namespace {

void EraseSorted(std::vector<ReviewId>& list, ReviewId id) {
  auto it = std::lower_bound(list.begin(), list.end(), id);
  if (it == list.end() || *it != id) {
    throw GraphError("review index out of sync for id " +
                     std::to_string(id.value));
  }
  list.erase(it);
}

}  // namespace

AccountId ReviewGraph::AddAccount(std::string name,
                                  Registration registration) {
  if (account_names_.contains(name)) {
    throw GraphError("duplicate account name: " + name);
  }
  AccountId id(static_cast<std::uint32_t>(accounts_.size()));
  account_names_.emplace(name, id);
  accounts_.push_back({std::move(name), registration});
  by_account_.emplace_back();
  return id;
}

ProductId ReviewGraph::AddProduct(std::string name) {
  if (product_names_.contains(name)) {
    throw GraphError("duplicate product name: " + name);
  }
  ProductId id(static_cast<std::uint32_t>(products_.size()));
  product_names_.emplace(name, id);
  products_.push_back({std::move(name)});
  by_product_.emplace_back();
  return id;
}

ReviewId ReviewGraph::AppendReview(Review review) {
  if (!HasAccount(review.account)) {
    throw GraphError("unknown account " + std::to_string(review.account.value));
  }
  if (!HasProduct(review.product)) {
    throw GraphError("unknown product " + std::to_string(review.product.value));
  }
  if (review.rating < 1 || review.rating > 5) {
    throw GraphError("rating outside [1,5]: " + std::to_string(review.rating));
  }
  review.id = ReviewId(reviews_.size());
  by_account_[review.account.value].push_back(review.id);
  by_product_[review.product.value].push_back(review.id);
  reviews_.push_back(std::move(review));
  alive_.push_back(true);
  ++live_reviews_;
  return reviews_.back().id;
}

ReviewId ReviewGraph::AddReview(AccountId account, ProductId product,
                                int rating, Day date) {
  Review r;
  r.account = account;
  r.product = product;
  r.rating = rating;
  r.date = date;
  return AppendReview(std::move(r));
}

ReviewId ReviewGraph::InjectReview(const InjectionSpec& spec) {
  Review r;
  r.account = spec.account;
  r.product = spec.product;
  r.rating = spec.rating;
  r.date = spec.date;
  r.origin = Origin::kInjected;
  r.injected_by = spec.strategy_index;
  return AppendReview(std::move(r));
}

void ReviewGraph::RemoveReviews(std::span<const ReviewId> ids) {
  std::unordered_set<ReviewId> seen;
  for (ReviewId id : ids) {
    if (!HasReview(id)) {
      throw GraphError("unknown review id " + std::to_string(id.value));
    }
    if (!seen.insert(id).second) {
      throw GraphError("review id listed twice: " + std::to_string(id.value));
    }
  }
  for (ReviewId id : ids) {
    const Review& r = reviews_[id.value];
    EraseSorted(by_account_[r.account.value], id);
    EraseSorted(by_product_[r.product.value], id);
    alive_[id.value] = false;
    --live_reviews_;
  }
}

const Review& ReviewGraph::review(ReviewId r) const {
  if (!HasReview(r)) {
    throw GraphError("unknown review id " + std::to_string(r.value));
  }
  return reviews_[r.value];
}

std::optional<AccountId> ReviewGraph::FindAccount(
    const std::string& name) const {
  auto it = account_names_.find(name);
  if (it == account_names_.end()) return std::nullopt;
  return it->second;
}

std::optional<ProductId> ReviewGraph::FindProduct(
    const std::string& name) const {
  auto it = product_names_.find(name);
  if (it == product_names_.end()) return std::nullopt;
  return it->second;
}

std::vector<ReviewId> ReviewGraph::ReviewIds() const {
  std::vector<ReviewId> ids;
  ids.reserve(live_reviews_);
  for (std::size_t i = 0; i < reviews_.size(); ++i) {
    if (alive_[i]) ids.emplace_back(i);
  }
  return ids;
}

std::vector<ReviewId> ReviewGraph::InjectedReviewIds() const {
  std::vector<ReviewId> ids;
  for (std::size_t i = 0; i < reviews_.size(); ++i) {
    if (alive_[i] && reviews_[i].origin == Origin::kInjected) {
      ids.emplace_back(i);
    }
  }
  return ids;
}

Day ReviewGraph::MaxDate() const {
  Day best = 0;
  bool any = false;
  ForEachReview([&](const Review& r) {
    if (!any || r.date > best) best = r.date;
    any = true;
  });
  return best;
}

bool ReviewGraph::CheckConsistency() const {
  std::size_t live = 0;
  std::vector<std::size_t> account_count(accounts_.size(), 0);
  std::vector<std::size_t> product_count(products_.size(), 0);
  for (std::size_t i = 0; i < reviews_.size(); ++i) {
    if (!alive_[i]) continue;
    const Review& r = reviews_[i];
    if (r.id.value != i) return false;
    if (!HasAccount(r.account) || !HasProduct(r.product)) return false;
    if (r.rating < 1 || r.rating > 5) return false;
    if ((r.origin == Origin::kInjected) != r.injected_by.has_value()) {
      return false;
    }
    const auto& al = by_account_[r.account.value];
    const auto& pl = by_product_[r.product.value];
    if (!std::binary_search(al.begin(), al.end(), r.id)) return false;
    if (!std::binary_search(pl.begin(), pl.end(), r.id)) return false;
    ++account_count[r.account.value];
    ++product_count[r.product.value];
    ++live;
  }
  if (live != live_reviews_) return false;
  for (std::size_t a = 0; a < accounts_.size(); ++a) {
    if (by_account_[a].size() != account_count[a]) return false;
    if (!std::is_sorted(by_account_[a].begin(), by_account_[a].end())) {
      return false;
    }
  }
  for (std::size_t p = 0; p < products_.size(); ++p) {
    if (by_product_[p].size() != product_count[p]) return false;
    if (!std::is_sorted(by_product_[p].begin(), by_product_[p].end())) {
      return false;
    }
  }
  return true;
}

bool ReviewGraph::operator==(const ReviewGraph& other) const {
  return accounts_ == other.accounts_ && products_ == other.products_ &&
         reviews_ == other.reviews_ && alive_ == other.alive_ &&
         by_account_ == other.by_account_ && by_product_ == other.by_product_;
}

std::vector<AccountId> EliteAccounts(const ReviewGraph& graph, int threshold) {
  if (threshold < 1) throw GraphError("elite threshold must be >= 1");
  std::vector<AccountId> elite;
  for (std::uint32_t a = 0; a < graph.num_accounts(); ++a) {
    if (graph.AccountDegree(AccountId(a)) > threshold) elite.emplace_back(a);
  }
  return elite;
}

}  // namespace spamgame
