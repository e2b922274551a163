#include "pnum/partition.hpp"

#include "pnum/error.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace pnum {

Partition::Partition(std::vector<long> parts) : parts_(std::move(parts)) {
  for (long p : parts_) {
    if (p < 1) throw Error(ErrorCode::BadParams, "partition parts must be positive");
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

long Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0L); }

Partition Partition::with_part(long part) const {
  auto parts = parts_;
  parts.push_back(part);
  return Partition(std::move(parts));
}

Partition Partition::merged(const Partition& other) const {
  auto parts = parts_;
  parts.insert(parts.end(), other.parts_.begin(), other.parts_.end());
  return Partition(std::move(parts));
}

std::string Partition::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(parts_[i]);
  }
  return out + "]";
}

std::vector<Partition> partitions(long m) {
  std::vector<Partition> out;
  std::vector<long> current;
  std::function<void(long, long)> rec = [&](long remaining, long max_part) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (long p = std::min(remaining, max_part); p >= 1; --p) {
      current.push_back(p);
      rec(remaining - p, p);
      current.pop_back();
    }
  };
  if (m >= 0) rec(m, m);
  return out;
}

}  // namespace pnum
