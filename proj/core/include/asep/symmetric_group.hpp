#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "asep/permutation.hpp"

namespace asep {

std::uint64_t factorial(int n);

// Dense lookup tables for S_n over {0, ..., n-1}: Lehmer-code ranks,
// lengths, inverses, the action of each adjacent transposition, and a
// spanning forest of the weak order (each non-identity element linked
// to a length-decreasing neighbor through its smallest descent).
// Intervals [lo; hi] map onto the canonical copy by shifting.
class SymmetricGroupTable {
 public:
  explicit SymmetricGroupTable(int n);

  int n() const { return n_; }
  std::uint32_t size() const { return size_; }

  std::span<const std::uint8_t> perm(std::uint32_t rank) const {
    return {perms_.data() + static_cast<std::size_t>(rank) * n_,
            static_cast<std::size_t>(n_)};
  }
  std::uint16_t length(std::uint32_t rank) const { return lengths_[rank]; }
  std::uint32_t inverse(std::uint32_t rank) const { return inverse_[rank]; }

  // Rank of the permutation with the values at positions bond, bond+1
  // exchanged.
  std::uint32_t bond_swap(int bond, std::uint32_t rank) const {
    return bond_swap_[static_cast<std::size_t>(bond) * size_ + rank];
  }
  // Whether that exchange increases the length, i.e. w(bond) < w(bond+1).
  bool ascending_at(int bond, std::uint32_t rank) const {
    return lengths_[bond_swap(bond, rank)] > lengths_[rank];
  }

  std::uint32_t parent(std::uint32_t rank) const { return parent_rank_[rank]; }
  int parent_bond(std::uint32_t rank) const { return parent_bond_[rank]; }
  const std::vector<std::vector<std::uint32_t>>& by_length() const {
    return by_length_;
  }

  // Canonical reduced word e_1, ..., e_r: starting from the identity
  // and exchanging positions e_i, e_i+1 in this order rebuilds the
  // permutation, gaining one inversion per step.
  std::vector<int> reduced_word(std::uint32_t rank) const;

  std::uint32_t rank_of(std::span<const std::uint8_t> images) const;
  std::uint32_t rank_of(const Permutation& w) const;
  Permutation to_permutation(std::uint32_t rank, std::int64_t lo) const;

  // Shared per-n instances.
  static std::shared_ptr<const SymmetricGroupTable> instance(int n);

 private:
  int n_;
  std::uint32_t size_;
  std::vector<std::uint8_t> perms_;
  std::vector<std::uint16_t> lengths_;
  std::vector<std::uint32_t> inverse_;
  std::vector<std::uint32_t> bond_swap_;
  std::vector<std::uint32_t> parent_rank_;
  std::vector<std::int8_t> parent_bond_;
  std::vector<std::vector<std::uint32_t>> by_length_;
};

}  // namespace asep
