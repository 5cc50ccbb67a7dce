#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace einf {

// Bijection of {0..k-1}. Text forms are 1-based ("[2,1,3]").
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);  // 0-based, validated

  static Permutation identity(std::size_t k);
  static Permutation from_one_based(const std::vector<int>& images);

  std::size_t size() const { return img_.size(); }
  int operator()(int i) const { return img_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& images() const { return img_; }

  Permutation inverse() const;
  bool is_identity() const;
  std::string to_string() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> img_;
};

// (a * b)(i) = a(b(i))
Permutation operator*(const Permutation& a, const Permutation& b);

// Every permutation of {0..k-1}, lexicographic.
std::vector<Permutation> all_permutations(std::size_t k);

}  // namespace einf
