#include "asep/symmetric_group.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace asep {

std::uint64_t factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial of a negative number");
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

SymmetricGroupTable::SymmetricGroupTable(int n) : n_(n) {
  if (n < 1 || n > 10)
    throw std::invalid_argument("symmetric group tables support 1 <= n <= 10");
  const std::uint64_t size = factorial(n);
  size_ = static_cast<std::uint32_t>(size);

  perms_.resize(size * n_);
  lengths_.resize(size);
  inverse_.resize(size);
  bond_swap_.resize(static_cast<std::size_t>(std::max(0, n_ - 1)) * size);
  parent_rank_.resize(size);
  parent_bond_.assign(size, -1);
  by_length_.assign(n_ * (n_ - 1) / 2 + 1, {});

  // Enumerate in Lehmer-code order; rank 0 is the identity.
  std::vector<std::uint8_t> w(n_);
  for (int i = 0; i < n_; ++i) w[i] = static_cast<std::uint8_t>(i);
  std::uint32_t rank = 0;
  do {
    std::uint8_t* dst = perms_.data() + static_cast<std::size_t>(rank) * n_;
    std::copy(w.begin(), w.end(), dst);
    int len = 0;
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j) len += w[i] > w[j];
    lengths_[rank] = static_cast<std::uint16_t>(len);
    by_length_[len].push_back(rank);
    ++rank;
  } while (std::next_permutation(w.begin(), w.end()));
  if (rank != size_) throw std::logic_error("permutation enumeration mismatch");

  std::vector<std::uint8_t> scratch(n_);
  for (std::uint32_t r = 0; r < size_; ++r) {
    auto im = perm(r);
    for (int i = 0; i < n_; ++i) scratch[im[i]] = static_cast<std::uint8_t>(i);
    inverse_[r] = rank_of(scratch);
    for (int z = 0; z + 1 < n_; ++z) {
      std::copy(im.begin(), im.end(), scratch.begin());
      std::swap(scratch[z], scratch[z + 1]);
      bond_swap_[static_cast<std::size_t>(z) * size_ + r] = rank_of(scratch);
    }
  }

  for (std::uint32_t r = 0; r < size_; ++r) {
    if (r == 0) {
      parent_rank_[r] = 0;
      continue;
    }
    auto im = perm(r);
    for (int z = 0; z + 1 < n_; ++z) {
      if (im[z] > im[z + 1]) {
        parent_bond_[r] = static_cast<std::int8_t>(z);
        parent_rank_[r] = bond_swap(z, r);
        break;
      }
    }
  }
}

std::uint32_t SymmetricGroupTable::rank_of(
    std::span<const std::uint8_t> images) const {
  // Lexicographic rank through the Lehmer code.
  std::uint32_t rank = 0;
  std::uint64_t f = factorial(n_ - 1);
  for (int i = 0; i < n_; ++i) {
    int smaller_later = 0;
    for (int j = i + 1; j < n_; ++j) smaller_later += images[j] < images[i];
    rank += static_cast<std::uint32_t>(smaller_later * f);
    if (i + 1 < n_) f /= static_cast<std::uint64_t>(n_ - 1 - i);
  }
  return rank;
}

std::uint32_t SymmetricGroupTable::rank_of(const Permutation& w) const {
  if (w.n() != n_) throw std::invalid_argument("wrong interval length");
  std::vector<std::uint8_t> images(n_);
  for (int i = 0; i < n_; ++i) {
    std::int64_t v = w.images[i] - w.lo;
    if (v < 0 || v >= n_) throw std::invalid_argument("image out of interval");
    images[i] = static_cast<std::uint8_t>(v);
  }
  return rank_of(images);
}

Permutation SymmetricGroupTable::to_permutation(std::uint32_t rank,
                                                std::int64_t lo) const {
  Permutation w;
  w.lo = lo;
  w.images.resize(n_);
  auto im = perm(rank);
  for (int i = 0; i < n_; ++i) w.images[i] = lo + im[i];
  return w;
}

std::vector<int> SymmetricGroupTable::reduced_word(std::uint32_t rank) const {
  std::vector<int> word;
  word.reserve(length(rank));
  while (rank != 0) {
    word.push_back(parent_bond(rank));
    rank = parent(rank);
  }
  std::reverse(word.begin(), word.end());
  return word;
}

std::shared_ptr<const SymmetricGroupTable> SymmetricGroupTable::instance(
    int n) {
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const SymmetricGroupTable>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  auto table = std::make_shared<const SymmetricGroupTable>(n);
  cache.emplace(n, table);
  return table;
}

}  // namespace asep
