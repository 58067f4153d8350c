#ifndef QROOK_INVOLUTION_HPP
#define QROOK_INVOLUTION_HPP

#include <functional>
#include <optional>
#include <vector>

namespace qrook {

// Involution on {-s, ..., -1} union {1, ..., 2n}, stored as a total map
// keyed by the shifted index (point + s for negatives, point + s - 1 for
// positives).
class SignedInvolution {
 public:
  SignedInvolution() = default;
  // Identity involution on the point set.
  SignedInvolution(int s, int n);

  int negatives() const { return s_; }
  int half_positive() const { return n_; }
  bool contains(int point) const {
    return (point < 0 && point >= -s_) || (point > 0 && point <= 2 * n_);
  }

  int operator()(int point) const { return image_[index(point)]; }
  // Sets point <-> partner (both directions). Passing partner == point
  // makes the point fixed.
  void pair(int point, int partner);

  // All points in increasing order.
  std::vector<int> points() const;

  bool is_involution() const;
  // Membership in I_k(n,s) for some k; returns k when it holds: every matched
  // negative point goes to a positive one and the number of matched
  // negatives equals the number of positive fixed points.
  std::optional<int> membership_k() const;

  friend bool operator==(const SignedInvolution&, const SignedInvolution&) = default;

 private:
  std::size_t index(int point) const {
    return static_cast<std::size_t>(point < 0 ? point + s_ : point + s_ - 1);
  }

  int s_ = 0;
  int n_ = 0;
  std::vector<int> image_;
};

// Fixed-point-free involution on {1, ..., 2n}; partner[i - 1] = partner of i.
struct PerfectMatching {
  std::vector<int> partner;

  int size() const { return static_cast<int>(partner.size()); }
  int operator()(int point) const { return partner[static_cast<std::size_t>(point - 1)]; }
  bool is_valid() const;
  // Arcs (i, j) with i < j, sorted by i.
  std::vector<std::pair<int, int>> arcs() const;

  friend bool operator==(const PerfectMatching&, const PerfectMatching&) = default;
};

// I_k(n,s): exactly k negatives matched (all to positives) and exactly k
// positive fixed points.
void for_each_involution(int n, int s, int k, const std::function<void(const SignedInvolution&)>& visit);
// I_k(n) = I_k(n,k).
std::vector<SignedInvolution> enumerate_involutions(int n, int k);

// Perfect matchings on {1, ..., m}; m must be even.
void for_each_matching(int m, const std::function<void(const PerfectMatching&)>& visit);
std::vector<PerfectMatching> enumerate_matchings(int m);

// #crossings + 2 #nestings.
int cn_statistic(const PerfectMatching& matching);
int crossings(const PerfectMatching& matching);
int nestings(const PerfectMatching& matching);

// Sum over i in subset of #{j in [ground_n] \ subset : j < i}. Elements must
// be distinct members of [ground_n].
int sz_statistic(const std::vector<int>& subset, int ground_n);

}  // namespace qrook

#endif  // QROOK_INVOLUTION_HPP
