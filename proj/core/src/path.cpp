#include "qrook/path.hpp"

#include <set>
#include <stdexcept>

namespace qrook {

bool is_balanced(const LabeledPath& path) {
  int level = 0;
  for (const Step& s : path) level += s.up ? 1 : -1;
  return level == 0;
}

bool is_dyck(const LabeledPath& path) {
  int level = 0;
  for (const Step& s : path) {
    level += s.up ? 1 : -1;
    if (level < 0) return false;
  }
  return level == 0;
}

bool has_valid_labels(const LabeledPath& path) {
  std::set<int> seen;
  for (const Step& s : path) {
    if (!s.label) continue;
    if (s.up || *s.label >= 0 || !seen.insert(*s.label).second) return false;
  }
  return true;
}

int flaws(const LabeledPath& path) {
  int level = 0;
  int count = 0;
  for (const Step& s : path) {
    if (s.up && level < 0) ++count;
    level += s.up ? 1 : -1;
  }
  return count;
}

namespace {

void grow(LabeledPath& current, int ups_left, int downs_left, int level, bool dyck_only,
          const std::function<void(const LabeledPath&)>& visit) {
  if (ups_left == 0 && downs_left == 0) {
    visit(current);
    return;
  }
  if (ups_left > 0) {
    current.push_back(Step::Up());
    grow(current, ups_left - 1, downs_left, level + 1, dyck_only, visit);
    current.pop_back();
  }
  if (downs_left > 0 && (!dyck_only || level > 0)) {
    current.push_back(Step::Down());
    grow(current, ups_left, downs_left - 1, level - 1, dyck_only, visit);
    current.pop_back();
  }
}

}  // namespace

void for_each_balanced_path(int k, const std::function<void(const LabeledPath&)>& visit) {
  if (k < 0) throw std::invalid_argument("for_each_balanced_path: negative semilength");
  LabeledPath current;
  grow(current, k, k, 0, false, visit);
}

void for_each_dyck_path(int k, const std::function<void(const LabeledPath&)>& visit) {
  if (k < 0) throw std::invalid_argument("for_each_dyck_path: negative semilength");
  LabeledPath current;
  grow(current, k, k, 0, true, visit);
}

}  // namespace qrook
