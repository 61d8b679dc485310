#pragma once

#include <compare>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace sptj {

/// A partition of n: weakly decreasing positive parts summing to n.
class Partition {
 public:
  Partition() = default;
  /// Throws std::invalid_argument unless `parts` is weakly decreasing and positive.
  explicit Partition(std::vector<int> parts);

  std::span<const int> parts() const { return parts_; }
  int operator[](size_t i) const { return parts_[i]; }
  /// The number being partitioned.
  int size() const { return n_; }
  /// Number of parts.
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int largest() const { return parts_.empty() ? 0 : parts_.front(); }
  int smallest() const { return parts_.empty() ? 0 : parts_.back(); }

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

 private:
  friend class PartitionStream;
  std::vector<int> parts_;
  int n_ = 0;
};

std::string to_string(const Partition& p);

/// Generates the partitions of n in reverse lexicographic order, starting
/// from (n) and ending at (1^n). n = 0 yields the single empty partition.
///
///   PartitionStream s(5);
///   while (s.next()) use(s.current());
class PartitionStream {
 public:
  explicit PartitionStream(int n);

  /// Advances to the next partition; false once the stream is exhausted.
  bool next();
  const Partition& current() const { return current_; }

 private:
  Partition current_;
  int n_;
  bool started_ = false;
  bool done_ = false;
};

std::vector<Partition> enumerate(int n);

/// Calls f(const Partition&) for every partition of n, in stream order.
template <class F>
void for_each_partition(int n, F&& f) {
  PartitionStream s(n);
  while (s.next()) f(s.current());
}

enum class ChainKind { kUpper, kLower };

/// Sides of successive Durfee squares. Upper chains are listed from the top
/// of the Ferrers diagram down; lower chains from the bottom up.
struct DurfeeChain {
  ChainKind kind = ChainKind::kUpper;
  std::vector<int> sides;

  int count() const { return static_cast<int>(sides.size()); }
  /// Total number of parts (rows) covered by the first `squares` squares.
  int rows_in_first(int squares) const;
};

DurfeeChain successive_durfee(const Partition& p);
DurfeeChain successive_lower_durfee(const Partition& p);

/// True iff all parts below the s-th lower-Durfee square (the parts of the
/// first s-1 squares) are at most d_s. Throws std::invalid_argument when p
/// has fewer than s lower-Durfee squares or s < 1.
bool is_rogers_ramanujan(const Partition& p, int s);

/// (part, mark) in the listing order of p: equal parts are numbered 1, 2, ...
/// from the largest end, so 5+5+4+3+3+3 carries marks 1,2,1,1,2,3.
std::vector<std::pair<int, int>> marks(const Partition& p);

/// Marks indexed from the smallest part upward. Entry i is the number of parts
/// equal to the (i+1)-th smallest part among that part and all larger ones.
std::vector<int> marks_from_smallest(const Partition& p);

/// Multiplicity of t in p.
int frequency(const Partition& p, int t);

}  // namespace sptj
