#include "l1kit/cluster.hpp"

#include <algorithm>
#include <iterator>

namespace l1kit {

bool is_valid_taxon(std::string_view label) {
  if (label.empty()) return false;
  return std::all_of(label.begin(), label.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
           (c >= '0' && c <= '9') || c == '_' || c == '.' || c == '-';
  });
}

Cluster::Cluster(std::vector<Taxon> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

Cluster::Cluster(std::initializer_list<Taxon> members)
    : Cluster(std::vector<Taxon>(members)) {}

bool Cluster::contains(std::string_view taxon) const {
  return std::binary_search(members_.begin(), members_.end(), taxon);
}

bool Cluster::is_subset_of(const Cluster& other) const {
  return std::includes(other.members_.begin(), other.members_.end(),
                       members_.begin(), members_.end());
}

bool Cluster::is_proper_subset_of(const Cluster& other) const {
  return size() < other.size() && is_subset_of(other);
}

bool Cluster::intersects(const Cluster& other) const {
  auto a = members_.begin();
  auto b = other.members_.begin();
  while (a != members_.end() && b != other.members_.end()) {
    if (*a < *b) {
      ++a;
    } else if (*b < *a) {
      ++b;
    } else {
      return true;
    }
  }
  return false;
}

Cluster Cluster::minus(const Cluster& other) const {
  Cluster out;
  std::set_difference(members_.begin(), members_.end(), other.members_.begin(),
                      other.members_.end(), std::back_inserter(out.members_));
  return out;
}

Cluster Cluster::united(const Cluster& other) const {
  Cluster out;
  std::set_union(members_.begin(), members_.end(), other.members_.begin(),
                 other.members_.end(), std::back_inserter(out.members_));
  return out;
}

Cluster Cluster::intersected(const Cluster& other) const {
  Cluster out;
  std::set_intersection(members_.begin(), members_.end(),
                        other.members_.begin(), other.members_.end(),
                        std::back_inserter(out.members_));
  return out;
}

Cluster Cluster::with(Taxon taxon) const {
  Cluster out = *this;
  auto it = std::lower_bound(out.members_.begin(), out.members_.end(), taxon);
  if (it == out.members_.end() || *it != taxon) {
    out.members_.insert(it, std::move(taxon));
  }
  return out;
}

std::string Cluster::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (i) out += ',';
    out += members_[i];
  }
  out += '}';
  return out;
}

bool size_then_lex_less(const Cluster& a, const Cluster& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

}  // namespace l1kit
