#include "sptj/partitions.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace sptj {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw std::invalid_argument("Partition: parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("Partition: parts must be weakly decreasing");
  }
  n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::string to_string(const Partition& p) {
  if (p.empty()) return "()";
  std::string s;
  for (size_t i = 0; i < p.parts().size(); ++i) {
    if (i > 0) s += "+";
    s += std::to_string(p[i]);
  }
  return s;
}

PartitionStream::PartitionStream(int n) : n_(n) {
  if (n < 0) throw std::invalid_argument("PartitionStream: negative n");
}

bool PartitionStream::next() {
  if (done_) return false;
  auto& parts = current_.parts_;
  if (!started_) {
    started_ = true;
    parts.clear();
    if (n_ > 0) parts.push_back(n_);
    current_.n_ = n_;
    return true;
  }
  // Strip trailing ones, decrement the last part > 1, then refill greedily.
  int remainder = 0;
  while (!parts.empty() && parts.back() == 1) {
    parts.pop_back();
    ++remainder;
  }
  if (parts.empty()) {
    done_ = true;
    return false;
  }
  const int v = --parts.back();
  ++remainder;
  while (remainder > 0) {
    const int take = std::min(v, remainder);
    parts.push_back(take);
    remainder -= take;
  }
  return true;
}

std::vector<Partition> enumerate(int n) {
  std::vector<Partition> out;
  for_each_partition(n, [&](const Partition& p) { out.push_back(p); });
  return out;
}

int DurfeeChain::rows_in_first(int squares) const {
  int rows = 0;
  for (int i = 0; i < squares && i < count(); ++i) rows += sides[static_cast<size_t>(i)];
  return rows;
}

DurfeeChain successive_durfee(const Partition& p) {
  DurfeeChain chain{ChainKind::kUpper, {}};
  const auto parts = p.parts();
  size_t start = 0;
  while (start < parts.size()) {
    int d = 0;
    while (start + static_cast<size_t>(d) < parts.size() && parts[start + static_cast<size_t>(d)] >= d + 1) ++d;
    chain.sides.push_back(d);
    start += static_cast<size_t>(d);
  }
  return chain;
}

DurfeeChain successive_lower_durfee(const Partition& p) {
  DurfeeChain chain{ChainKind::kLower, {}};
  const auto parts = p.parts();
  // Walk from the smallest part upward; each square takes as many rows as
  // the smallest remaining part allows, limited by the rows left.
  int remaining = p.length();
  while (remaining > 0) {
    const int smallest_left = parts[static_cast<size_t>(remaining) - 1];
    const int d = std::min(smallest_left, remaining);
    chain.sides.push_back(d);
    remaining -= d;
  }
  return chain;
}

bool is_rogers_ramanujan(const Partition& p, int s) {
  if (s < 1) throw std::invalid_argument("is_rogers_ramanujan: s must be positive");
  const DurfeeChain lower = successive_lower_durfee(p);
  if (lower.count() < s) {
    throw std::invalid_argument("is_rogers_ramanujan: partition has fewer than " + std::to_string(s) +
                                " lower-Durfee squares");
  }
  const int below = lower.rows_in_first(s - 1);
  if (below == 0) return true;
  // The largest part below the s-th square sits right under it.
  const int largest_below = p[static_cast<size_t>(p.length() - below)];
  return largest_below <= lower.sides[static_cast<size_t>(s) - 1];
}

std::vector<std::pair<int, int>> marks(const Partition& p) {
  std::vector<std::pair<int, int>> out;
  out.reserve(p.parts().size());
  int run = 0;
  for (size_t i = 0; i < p.parts().size(); ++i) {
    run = (i > 0 && p[i] == p[i - 1]) ? run + 1 : 1;
    out.emplace_back(p[i], run);
  }
  return out;
}

std::vector<int> marks_from_smallest(const Partition& p) {
  const auto listed = marks(p);
  std::vector<int> out;
  out.reserve(listed.size());
  for (auto it = listed.rbegin(); it != listed.rend(); ++it) out.push_back(it->second);
  return out;
}

int frequency(const Partition& p, int t) {
  return static_cast<int>(std::count(p.parts().begin(), p.parts().end(), t));
}

}  // namespace sptj
