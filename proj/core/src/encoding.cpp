#include "qrook/encoding.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include "json.hpp"

namespace qrook {

namespace {

using nlohmann::json;

std::string strip(std::string_view text) {
  std::string out;
  for (char c : text) {
    if (c != ' ' && c != '\t' && c != '\n' && c != '\r') out.push_back(c);
  }
  return out;
}

[[noreturn]] void fail(const std::string& what, std::string_view text) {
  throw std::invalid_argument(what + ": \"" + std::string(text) + "\"");
}

int parse_int(std::string_view token, const char* what) {
  int value = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  if (!token.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (token.empty() || ec != std::errc() || ptr != last) fail(std::string(what) + ": bad integer", token);
  return value;
}

std::vector<int> parse_int_list(std::string_view text, const char* what) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    out.push_back(parse_int(text.substr(start, comma - start), what));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string join(const std::vector<int>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

// "(a,b)(c)..." -> list of cycles.
std::vector<std::vector<int>> parse_cycles(const std::string& text, const char* what) {
  std::vector<std::vector<int>> cycles;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] != '(') fail(std::string(what) + ": expected '('", text);
    const std::size_t close = text.find(')', i);
    if (close == std::string::npos) fail(std::string(what) + ": unbalanced parentheses", text);
    cycles.push_back(parse_int_list(std::string_view(text).substr(i + 1, close - i - 1), what));
    if (cycles.back().empty() || cycles.back().size() > 2) fail(std::string(what) + ": cycles must have length 1 or 2", text);
    i = close + 1;
  }
  return cycles;
}

// "key=value;key=value" in the given key order.
std::vector<std::string> parse_fields(const std::string& text, const std::vector<std::string>& keys, const char* what) {
  std::vector<std::string> values;
  std::size_t start = 0;
  for (std::size_t i = 0; i < keys.size(); ++i) {
    const std::size_t end = i + 1 < keys.size() ? text.find(';', start) : text.size();
    if (end == std::string::npos) fail(std::string(what) + ": missing field " + keys[i], text);
    const std::string field = text.substr(start, end - start);
    const std::string prefix = keys[i] + "=";
    if (field.rfind(prefix, 0) != 0) fail(std::string(what) + ": expected " + prefix, text);
    values.push_back(field.substr(prefix.size()));
    start = end + 1;
  }
  return values;
}

}  // namespace

std::string format_involution(const SignedInvolution& involution) {
  std::string out;
  for (int p : involution.points()) {
    const int image = involution(p);
    if (image < p) continue;
    out += '(' + std::to_string(p);
    if (image != p) out += ',' + std::to_string(image);
    out += ')';
  }
  return out;
}

SignedInvolution parse_involution(std::string_view text) {
  const std::string clean = strip(text);
  const auto cycles = parse_cycles(clean, "involution");
  std::set<int> seen;
  for (const auto& cycle : cycles) {
    for (int p : cycle) {
      if (p == 0 || !seen.insert(p).second) fail("involution: repeated or zero point", text);
    }
  }
  const int s = static_cast<int>(std::count_if(seen.begin(), seen.end(), [](int p) { return p < 0; }));
  const int positives = static_cast<int>(seen.size()) - s;
  if (positives % 2 != 0) fail("involution: odd number of positive points", text);
  SignedInvolution out(s, positives / 2);
  for (int p : seen) {
    if (!out.contains(p)) fail("involution: points must be exactly {-s..-1} and {1..2n}", text);
  }
  for (const auto& cycle : cycles) {
    if (cycle.size() == 2) out.pair(cycle[0], cycle[1]);
  }
  return out;
}

std::string format_matching(const PerfectMatching& matching) {
  std::string out;
  for (const auto& [i, j] : matching.arcs()) out += '(' + std::to_string(i) + ',' + std::to_string(j) + ')';
  return out;
}

PerfectMatching parse_matching(std::string_view text) {
  const auto cycles = parse_cycles(strip(text), "matching");
  PerfectMatching out{std::vector<int>(cycles.size() * 2, 0)};
  const int m = out.size();
  for (const auto& cycle : cycles) {
    if (cycle.size() != 2) fail("matching: every cycle must be a pair", text);
    for (int p : cycle) {
      if (p < 1 || p > m || out.partner[static_cast<std::size_t>(p - 1)] != 0) {
        fail("matching: points must be exactly {1..2n}", text);
      }
    }
    out.partner[static_cast<std::size_t>(cycle[0] - 1)] = cycle[1];
    out.partner[static_cast<std::size_t>(cycle[1] - 1)] = cycle[0];
  }
  if (!out.is_valid()) fail("matching: not a perfect matching", text);
  return out;
}

std::string format_path(const LabeledPath& path) {
  std::string out;
  for (const Step& step : path) {
    if (step.up) {
      out += 'U';
    } else {
      out += 'D';
      if (step.label) out += '[' + std::to_string(*step.label) + ']';
    }
  }
  return out;
}

LabeledPath parse_path(std::string_view text) {
  const std::string clean = strip(text);
  LabeledPath out;
  std::size_t i = 0;
  while (i < clean.size()) {
    const char c = clean[i++];
    if (c == 'U') {
      out.push_back(Step::Up());
    } else if (c == 'D') {
      if (i < clean.size() && clean[i] == '[') {
        const std::size_t close = clean.find(']', i);
        if (close == std::string::npos) fail("path: unterminated label", text);
        const int label = parse_int(std::string_view(clean).substr(i + 1, close - i - 1), "path");
        if (label >= 0) fail("path: labels must be negative", text);
        out.push_back(Step::Down(label));
        i = close + 1;
      } else {
        out.push_back(Step::Down());
      }
    } else {
      fail("path: unexpected character", text);
    }
  }
  if (!has_valid_labels(out)) fail("path: labels must be distinct", text);
  return out;
}

std::string format_board(const YoungBoard& board) {
  return "s=" + std::to_string(board.s) + ";mu=" + join(board.mu);
}

YoungBoard parse_board(std::string_view text) {
  const auto fields = parse_fields(strip(text), {"s", "mu"}, "board");
  YoungBoard board{parse_int(fields[0], "board"), parse_int_list(fields[1], "board")};
  if (!board.is_valid()) fail("board: row lengths must satisfy s <= mu_1 <= ... <= mu_n <= s+n", text);
  return board;
}

std::string format_placement(const RookPlacement& placement) {
  return format_board(placement.board) + ";rooks=" + join(placement.rook_column);
}

RookPlacement parse_placement(std::string_view text) {
  const auto fields = parse_fields(strip(text), {"s", "mu", "rooks"}, "placement");
  RookPlacement placement{{parse_int(fields[0], "placement"), parse_int_list(fields[1], "placement")},
                          parse_int_list(fields[2], "placement")};
  if (!placement.board.is_valid()) fail("placement: invalid board", text);
  if (!placement.is_valid()) fail("placement: rooks must be a full non-attacking placement", text);
  return placement;
}

std::string format_subset(const Subset& subset) {
  return "n=" + std::to_string(subset.ground_n) + ";subset=" + join(subset.elements);
}

Subset parse_subset(std::string_view text) {
  const auto fields = parse_fields(strip(text), {"n", "subset"}, "subset");
  Subset out{parse_int(fields[0], "subset"), parse_int_list(fields[1], "subset")};
  std::set<int> seen;
  for (int i : out.elements) {
    if (i < 1 || i > out.ground_n || !seen.insert(i).second) fail("subset: elements must be distinct members of [n]", text);
  }
  return out;
}

std::string format_tree(const PlaneTree& tree) {
  if (!tree.is_valid()) throw std::invalid_argument("format_tree: invalid tree");
  std::string out;
  std::function<void(int)> emit = [&](int v) {
    out += '(';
    for (int c : tree.children[static_cast<std::size_t>(v)]) emit(c);
    out += ')';
  };
  emit(tree.root);
  return out;
}

PlaneTree parse_tree(std::string_view text) {
  const std::string clean = strip(text);
  PlaneTree tree;
  std::vector<int> open;
  for (std::size_t i = 0; i < clean.size(); ++i) {
    if (clean[i] == '(') {
      if (open.empty() && !tree.children.empty()) fail("tree: more than one root", text);
      const int v = tree.size();
      tree.children.emplace_back();
      if (!open.empty()) tree.children[static_cast<std::size_t>(open.back())].push_back(v);
      open.push_back(v);
    } else if (clean[i] == ')') {
      if (open.empty()) fail("tree: unbalanced parentheses", text);
      open.pop_back();
    } else {
      fail("tree: unexpected character", text);
    }
  }
  if (!open.empty() || tree.children.empty()) fail("tree: unbalanced parentheses", text);
  return tree;
}

std::string format_map(const TreeRootedMap& map) {
  nlohmann::ordered_json out = nlohmann::ordered_json::object();
  out["root"] = map.root_vertex;
  out["vertices"] = map.vertices;
  nlohmann::ordered_json rotation = nlohmann::ordered_json::object();
  for (const auto& [v, order] : map.rotation) {
    nlohmann::ordered_json list = nlohmann::ordered_json::array();
    for (int e : order) list.push_back(e + 1);
    rotation[std::to_string(v)] = list;
  }
  out["rotation"] = rotation;
  nlohmann::ordered_json pairs = nlohmann::ordered_json::array();
  nlohmann::ordered_json tree = nlohmann::ordered_json::array();
  for (int e = 0; e < map.half_edge_count(); ++e) {
    const int p = map.partner[static_cast<std::size_t>(e)];
    if (p < e) continue;
    pairs.push_back({e + 1, p + 1});
    if (map.in_tree[static_cast<std::size_t>(e)]) tree.push_back({e + 1, p + 1});
  }
  out["pairs"] = pairs;
  out["tree"] = tree;
  return out.dump();
}

TreeRootedMap parse_map(std::string_view text) {
  json in;
  try {
    in = json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("map: ") + e.what());
  }
  try {
    TreeRootedMap map;
    map.root_vertex = in.at("root").get<int>();
    map.vertices = in.at("vertices").get<std::vector<int>>();
    std::sort(map.vertices.begin(), map.vertices.end());
    const auto pairs = in.at("pairs").get<std::vector<std::pair<int, int>>>();
    const int h = static_cast<int>(pairs.size()) * 2;
    auto half = [&](int one_based) {
      if (one_based < 1 || one_based > h) throw std::invalid_argument("map: half-edge out of range");
      return one_based - 1;
    };
    map.partner.assign(static_cast<std::size_t>(h), -1);
    map.in_tree.assign(static_cast<std::size_t>(h), false);
    map.vertex_of.assign(static_cast<std::size_t>(h), 0);
    for (const auto& [a, b] : pairs) {
      const int x = half(a);
      const int y = half(b);
      if (map.partner[static_cast<std::size_t>(x)] != -1 || map.partner[static_cast<std::size_t>(y)] != -1 || x == y) {
        throw std::invalid_argument("map: every half-edge must appear in exactly one pair");
      }
      map.partner[static_cast<std::size_t>(x)] = y;
      map.partner[static_cast<std::size_t>(y)] = x;
    }
    for (const auto& [a, b] : in.at("tree").get<std::vector<std::pair<int, int>>>()) {
      const int x = half(a);
      const int y = half(b);
      if (map.partner[static_cast<std::size_t>(x)] != y) throw std::invalid_argument("map: tree edge is not a paired edge");
      map.in_tree[static_cast<std::size_t>(x)] = true;
      map.in_tree[static_cast<std::size_t>(y)] = true;
    }
    for (const auto& [key, list] : in.at("rotation").items()) {
      const int v = parse_int(key, "map");
      auto& order = map.rotation[v];
      for (int e : list.get<std::vector<int>>()) {
        order.push_back(half(e));
        map.vertex_of[static_cast<std::size_t>(half(e))] = v;
      }
    }
    for (int v : map.vertices) map.rotation[v];
    return map;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("map: ") + e.what());
  }
}

}  // namespace qrook
