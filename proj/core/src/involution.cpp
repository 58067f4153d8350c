#include "qrook/involution.hpp"

#include <algorithm>
#include <stdexcept>

namespace qrook {

SignedInvolution::SignedInvolution(int s, int n) : s_(s), n_(n) {
  if (s < 0 || n < 0) throw std::invalid_argument("SignedInvolution: negative size");
  image_.reserve(static_cast<std::size_t>(s + 2 * n));
  for (int p = -s; p <= 2 * n; ++p) {
    if (p != 0) image_.push_back(p);
  }
}

void SignedInvolution::pair(int point, int partner) {
  if (!contains(point) || !contains(partner)) throw std::out_of_range("SignedInvolution::pair: point out of range");
  image_[index(point)] = partner;
  image_[index(partner)] = point;
}

std::vector<int> SignedInvolution::points() const {
  std::vector<int> out;
  out.reserve(image_.size());
  for (int p = -s_; p <= 2 * n_; ++p) {
    if (p != 0) out.push_back(p);
  }
  return out;
}

bool SignedInvolution::is_involution() const {
  for (int p : points()) {
    const int image = (*this)(p);
    if (!contains(image) || (*this)(image) != p) return false;
  }
  return true;
}

std::optional<int> SignedInvolution::membership_k() const {
  if (!is_involution()) return std::nullopt;
  int matched_negatives = 0;
  for (int p = -s_; p < 0; ++p) {
    const int image = (*this)(p);
    if (image == p) continue;
    if (image < 0) return std::nullopt;
    ++matched_negatives;
  }
  int positive_fixed = 0;
  for (int p = 1; p <= 2 * n_; ++p) positive_fixed += ((*this)(p) == p) ? 1 : 0;
  if (positive_fixed != matched_negatives) return std::nullopt;
  return matched_negatives;
}

bool PerfectMatching::is_valid() const {
  const int m = size();
  if (m % 2 != 0) return false;
  for (int i = 1; i <= m; ++i) {
    const int j = (*this)(i);
    if (j < 1 || j > m || j == i || (*this)(j) != i) return false;
  }
  return true;
}

std::vector<std::pair<int, int>> PerfectMatching::arcs() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= size(); ++i) {
    const int j = (*this)(i);
    if (i < j) out.emplace_back(i, j);
  }
  return out;
}

namespace {

// Pairs up the still-unused positives (used[p] == false) in all possible ways.
void match_rest(SignedInvolution& current, std::vector<bool>& used, int top,
                const std::function<void(const SignedInvolution&)>& visit) {
  int first = 1;
  while (first <= top && used[static_cast<std::size_t>(first)]) ++first;
  if (first > top) {
    visit(current);
    return;
  }
  used[static_cast<std::size_t>(first)] = true;
  for (int other = first + 1; other <= top; ++other) {
    if (used[static_cast<std::size_t>(other)]) continue;
    used[static_cast<std::size_t>(other)] = true;
    current.pair(first, other);
    match_rest(current, used, top, visit);
    current.pair(first, first);
    current.pair(other, other);
    used[static_cast<std::size_t>(other)] = false;
  }
  used[static_cast<std::size_t>(first)] = false;
}

// Chooses `remaining` positive fixed points with values >= from.
void choose_fixed(SignedInvolution& current, std::vector<bool>& used, int top, int from, int remaining,
                  const std::function<void(const SignedInvolution&)>& visit) {
  if (remaining == 0) {
    match_rest(current, used, top, visit);
    return;
  }
  for (int p = from; p <= top; ++p) {
    if (used[static_cast<std::size_t>(p)]) continue;
    used[static_cast<std::size_t>(p)] = true;
    choose_fixed(current, used, top, p + 1, remaining - 1, visit);
    used[static_cast<std::size_t>(p)] = false;
  }
}

void assign_negatives(SignedInvolution& current, std::vector<bool>& used, const std::vector<int>& negatives,
                      std::size_t next, int top, int k,
                      const std::function<void(const SignedInvolution&)>& visit) {
  if (next == negatives.size()) {
    choose_fixed(current, used, top, 1, k, visit);
    return;
  }
  for (int p = 1; p <= top; ++p) {
    if (used[static_cast<std::size_t>(p)]) continue;
    used[static_cast<std::size_t>(p)] = true;
    current.pair(negatives[next], p);
    assign_negatives(current, used, negatives, next + 1, top, k, visit);
    current.pair(negatives[next], negatives[next]);
    current.pair(p, p);
    used[static_cast<std::size_t>(p)] = false;
  }
}

}  // namespace

void for_each_involution(int n, int s, int k, const std::function<void(const SignedInvolution&)>& visit) {
  if (n < 0 || s < 0) throw std::invalid_argument("for_each_involution: negative size");
  if (k < 0 || k > s || 2 * k > 2 * n || k > n) return;
  const int top = 2 * n;
  // Subsets of matched negatives, as increasing index lists over -s..-1.
  std::vector<int> choice(static_cast<std::size_t>(k));
  std::function<void(int, int)> pick = [&](int from, int depth) {
    if (depth == k) {
      SignedInvolution current(s, n);
      std::vector<bool> used(static_cast<std::size_t>(top) + 1, false);
      assign_negatives(current, used, choice, 0, top, k, visit);
      return;
    }
    for (int p = from; p < 0; ++p) {
      choice[static_cast<std::size_t>(depth)] = p;
      pick(p + 1, depth + 1);
    }
  };
  pick(-s, 0);
}

std::vector<SignedInvolution> enumerate_involutions(int n, int k) {
  std::vector<SignedInvolution> out;
  for_each_involution(n, k, k, [&](const SignedInvolution& a) { out.push_back(a); });
  return out;
}

void for_each_matching(int m, const std::function<void(const PerfectMatching&)>& visit) {
  if (m < 0 || m % 2 != 0) throw std::invalid_argument("for_each_matching: size must be even and nonnegative");
  PerfectMatching current{std::vector<int>(static_cast<std::size_t>(m), 0)};
  std::function<void()> recurse = [&]() {
    auto first = std::find(current.partner.begin(), current.partner.end(), 0);
    if (first == current.partner.end()) {
      visit(current);
      return;
    }
    const int i = static_cast<int>(first - current.partner.begin()) + 1;
    for (int j = i + 1; j <= m; ++j) {
      if (current.partner[static_cast<std::size_t>(j - 1)] != 0) continue;
      current.partner[static_cast<std::size_t>(i - 1)] = j;
      current.partner[static_cast<std::size_t>(j - 1)] = i;
      recurse();
      current.partner[static_cast<std::size_t>(j - 1)] = 0;
    }
    current.partner[static_cast<std::size_t>(i - 1)] = 0;
  };
  recurse();
}

std::vector<PerfectMatching> enumerate_matchings(int m) {
  std::vector<PerfectMatching> out;
  for_each_matching(m, [&](const PerfectMatching& pm) { out.push_back(pm); });
  return out;
}

int crossings(const PerfectMatching& matching) {
  const auto arcs = matching.arcs();
  int count = 0;
  for (const auto& [i, j] : arcs) {
    for (const auto& [k, l] : arcs) {
      if (i < k && k < j && j < l) ++count;
    }
  }
  return count;
}

int nestings(const PerfectMatching& matching) {
  const auto arcs = matching.arcs();
  int count = 0;
  for (const auto& [i, j] : arcs) {
    for (const auto& [k, l] : arcs) {
      if (i < k && l < j) ++count;
    }
  }
  return count;
}

int cn_statistic(const PerfectMatching& matching) { return crossings(matching) + 2 * nestings(matching); }

int sz_statistic(const std::vector<int>& subset, int ground_n) {
  std::vector<bool> member(static_cast<std::size_t>(ground_n) + 1, false);
  for (int i : subset) {
    if (i < 1 || i > ground_n || member[static_cast<std::size_t>(i)]) {
      throw std::invalid_argument("sz_statistic: subset must hold distinct elements of [ground_n]");
    }
    member[static_cast<std::size_t>(i)] = true;
  }
  int total = 0;
  int outsiders_so_far = 0;
  for (int j = 1; j <= ground_n; ++j) {
    if (member[static_cast<std::size_t>(j)]) {
      total += outsiders_so_far;
    } else {
      ++outsiders_so_far;
    }
  }
  return total;
}

}  // namespace qrook
