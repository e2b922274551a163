#pragma once

// Polynomials in the elementary symmetric functions e_1, e_2, ..., stored as
// partition -> coefficient (the partition lists the indices of the e's).

#include "pnum/exact.hpp"
#include "pnum/partition.hpp"

#include <vector>

namespace pnum {

template <typename Coeff>
using ESymPoly = PartitionMap<Coeff>;

inline bool is_zero_value(const Rat& r) { return r == 0; }

template <typename Coeff>
void add_term(ESymPoly<Coeff>& poly, const Partition& key, const Coeff& value) {
  if (is_zero_value(value)) return;
  auto [it, inserted] = poly.try_emplace(key, value);
  if (!inserted) {
    it->second += value;
    if (is_zero_value(it->second)) poly.erase(it);
  }
}

template <typename Coeff>
ESymPoly<Coeff> multiply(const ESymPoly<Coeff>& a, const ESymPoly<Coeff>& b) {
  ESymPoly<Coeff> out;
  for (const auto& [pa, ca] : a) {
    for (const auto& [pb, cb] : b) add_term(out, pa.merged(pb), Coeff(ca * cb));
  }
  return out;
}

/// Power sums N_0 .. N_m of the roots written in the e's, via Newton:
/// N_j = sum_{i<j} (-1)^{i-1} e_i N_{j-i} + (-1)^{j-1} j e_j.
inline std::vector<ESymPoly<Rat>> power_sums(long m) {
  std::vector<ESymPoly<Rat>> N(static_cast<std::size_t>(m) + 1);
  for (long j = 1; j <= m; ++j) {
    auto& nj = N[static_cast<std::size_t>(j)];
    for (long i = 1; i < j; ++i) {
      const Rat sign = (i % 2 == 1) ? 1 : -1;
      for (const auto& [p, coeff] : N[static_cast<std::size_t>(j - i)]) add_term(nj, p.with_part(i), Rat(sign * coeff));
    }
    add_term(nj, Partition{j}, Rat(((j % 2 == 1) ? 1 : -1) * j));
  }
  return N;
}

}  // namespace pnum
