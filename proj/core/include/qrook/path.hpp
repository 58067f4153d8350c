#ifndef QROOK_PATH_HPP
#define QROOK_PATH_HPP

#include <functional>
#include <optional>
#include <vector>

namespace qrook {

struct Step {
  bool up = true;
  // Down steps may carry a (negative) label; up steps never do.
  std::optional<int> label;

  static Step Up() { return {true, std::nullopt}; }
  static Step Down(std::optional<int> label = std::nullopt) { return {false, label}; }

  friend bool operator==(const Step&, const Step&) = default;
};

// Sequence of up/down steps starting at level 0.
using LabeledPath = std::vector<Step>;

// Ends at level 0.
bool is_balanced(const LabeledPath& path);
// Balanced and never below level 0.
bool is_dyck(const LabeledPath& path);
// Down-step labels are distinct negative integers (unlabeled steps allowed).
bool has_valid_labels(const LabeledPath& path);
// Number of up steps that start below level 0.
int flaws(const LabeledPath& path);

// Visits all balanced unlabeled paths of length 2k.
void for_each_balanced_path(int k, const std::function<void(const LabeledPath&)>& visit);
void for_each_dyck_path(int k, const std::function<void(const LabeledPath&)>& visit);

}  // namespace qrook

#endif  // QROOK_PATH_HPP
