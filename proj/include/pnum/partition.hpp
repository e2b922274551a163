#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

namespace pnum {

/// Integer partition, parts stored largest first.
class Partition {
public:
  Partition() = default;
  /// Parts in any order; sorted on construction. Throws BadParams on parts < 1.
  explicit Partition(std::vector<long> parts);
  Partition(std::initializer_list<long> parts) : Partition(std::vector<long>(parts)) {}

  const std::vector<long>& parts() const { return parts_; }
  long weight() const;
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  long largest() const { return parts_.empty() ? 0 : parts_.front(); }

  Partition with_part(long part) const;
  /// Concatenation of the parts of both partitions.
  Partition merged(const Partition& other) const;

  /// "[3,1]"
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  /// Lexicographic on the (descending) part lists.
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

private:
  std::vector<long> parts_;
};

/// Canonical order used for every partition-indexed table: reverse
/// lexicographic, so (m) comes first and (1,...,1) last.
struct LargestFirst {
  bool operator()(const Partition& a, const Partition& b) const { return a > b; }
};

template <typename V>
using PartitionMap = std::map<Partition, V, LargestFirst>;

/// All partitions of m in LargestFirst order. partitions(0) = { () }.
std::vector<Partition> partitions(long m);

}  // namespace pnum
