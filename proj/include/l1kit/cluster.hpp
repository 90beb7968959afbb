#pragma once

#include <compare>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace l1kit {

using Taxon = std::string;

// True iff `label` is a non-empty string over [A-Za-z0-9_.-].
bool is_valid_taxon(std::string_view label);

// A set of taxa kept sorted lexicographically. Used for clusters, leaf sets
// and the moving/enclosing sets of ordered pairs.
class Cluster {
 public:
  Cluster() = default;
  explicit Cluster(std::vector<Taxon> members);
  Cluster(std::initializer_list<Taxon> members);

  const std::vector<Taxon>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  const Taxon& front() const { return members_.front(); }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  bool contains(std::string_view taxon) const;
  bool is_subset_of(const Cluster& other) const;
  bool is_proper_subset_of(const Cluster& other) const;
  bool intersects(const Cluster& other) const;

  Cluster minus(const Cluster& other) const;
  Cluster united(const Cluster& other) const;
  Cluster intersected(const Cluster& other) const;
  Cluster with(Taxon taxon) const;

  // "{a,b,c}"
  std::string to_string() const;

  friend bool operator==(const Cluster&, const Cluster&) = default;
  friend auto operator<=>(const Cluster&, const Cluster&) = default;

 private:
  std::vector<Taxon> members_;
};

// Orders by size first, then lexicographically.
bool size_then_lex_less(const Cluster& a, const Cluster& b);

}  // namespace l1kit
