#ifndef QROOK_SRC_DISJOINT_SETS_HPP
#define QROOK_SRC_DISJOINT_SETS_HPP

#include <numeric>
#include <vector>

namespace qrook::detail {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t size) : parent_(size), classes_(size) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  // False when a and b were already joined.
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[b] = a;
    --classes_;
    return true;
  }

  std::size_t classes() const { return classes_; }

 private:
  std::vector<std::size_t> parent_;
  std::size_t classes_;
};

}  // namespace qrook::detail

#endif  // QROOK_SRC_DISJOINT_SETS_HPP
