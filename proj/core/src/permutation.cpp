#include "einf/permutation.hpp"

#include <algorithm>
#include <numeric>

#include "einf/errors.hpp"

namespace einf {

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
  std::vector<char> seen(img_.size(), 0);
  for (int v : img_) {
    if (v < 0 || static_cast<std::size_t>(v) >= img_.size() || seen[static_cast<std::size_t>(v)])
      throw ValidationError("not a permutation: " + to_string());
    seen[static_cast<std::size_t>(v)] = 1;
  }
}

Permutation Permutation::identity(std::size_t k) {
  std::vector<int> v(k);
  std::iota(v.begin(), v.end(), 0);
  return Permutation(std::move(v));
}

Permutation Permutation::from_one_based(const std::vector<int>& images) {
  std::vector<int> v;
  v.reserve(images.size());
  for (int x : images) v.push_back(x - 1);
  return Permutation(std::move(v));
}

Permutation Permutation::inverse() const {
  std::vector<int> v(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) v[static_cast<std::size_t>(img_[i])] = static_cast<int>(i);
  return Permutation(std::move(v));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != static_cast<int>(i)) return false;
  return true;
}

std::string Permutation::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(img_[i] + 1);
  }
  return s + "]";
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw ValidationError("permutation size mismatch");
  std::vector<int> v(a.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a(b(static_cast<int>(i)));
  return Permutation(std::move(v));
}

std::vector<Permutation> all_permutations(std::size_t k) {
  std::vector<int> v(k);
  std::iota(v.begin(), v.end(), 0);
  std::vector<Permutation> out;
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

}  // namespace einf
