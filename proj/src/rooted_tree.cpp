#include "wrt/rooted_tree.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <sstream>

namespace wrt {
namespace {

std::string where(std::size_t line) {
  return line == 0 ? std::string() : "line " + std::to_string(line) + ": ";
}

}  // namespace

std::string_view to_string(TreeErrorKind kind) {
  switch (kind) {
    case TreeErrorKind::kDuplicateVertex: return "DuplicateVertex";
    case TreeErrorKind::kMultipleRoots: return "MultipleRoots";
    case TreeErrorKind::kNoRoot: return "NoRoot";
    case TreeErrorKind::kCycle: return "Cycle";
    case TreeErrorKind::kNegativeWeight: return "NegativeWeight";
    case TreeErrorKind::kMalformedLine: return "MalformedLine";
  }
  return "Unknown";
}

TreeError::TreeError(TreeErrorKind kind, std::size_t line, const std::string& detail)
    : std::runtime_error(std::string(to_string(kind)) + ": " + where(line) + detail),
      kind_(kind),
      line_(line) {}

InvalidVertex::InvalidVertex(VertexId v)
    : std::out_of_range("invalid vertex id " + std::to_string(v)), vertex_(v) {}

RootedTree RootedTree::from_parents(std::vector<VertexId> parents, std::vector<Rational> weights) {
  return build(std::move(parents), std::move(weights), {}, 0);
}

RootedTree RootedTree::build(std::vector<VertexId> parents, std::vector<Rational> weights,
                             const std::vector<std::size_t>& lines, std::size_t header_line) {
  auto line_of = [&](VertexId v) { return lines.empty() ? std::size_t{0} : lines[v]; };
  const std::size_t n = parents.size();
  if (weights.size() != n) {
    throw TreeError(TreeErrorKind::kMalformedLine, header_line,
                    "weight count " + std::to_string(weights.size()) + " differs from vertex count " +
                        std::to_string(n));
  }
  if (n == 0) throw TreeError(TreeErrorKind::kNoRoot, header_line, "tree has no vertices");

  VertexId root = kNoVertex;
  std::vector<std::size_t> child_count(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) {
    const auto id = static_cast<VertexId>(v);
    if (weights[v].is_negative()) {
      throw TreeError(TreeErrorKind::kNegativeWeight, line_of(id),
                      "vertex " + std::to_string(v) + " has weight " + weights[v].to_string());
    }
    const VertexId p = parents[v];
    if (p == kNoVertex) {
      if (root != kNoVertex) {
        throw TreeError(TreeErrorKind::kMultipleRoots, line_of(id),
                        "vertices " + std::to_string(root) + " and " + std::to_string(v) + " both lack a parent");
      }
      root = id;
      continue;
    }
    if (p < 0 || static_cast<std::size_t>(p) >= n) {
      throw TreeError(TreeErrorKind::kMalformedLine, line_of(id),
                      "parent " + std::to_string(p) + " of vertex " + std::to_string(v) + " is out of range");
    }
    ++child_count[p + 1];
  }

  RootedTree tree;
  tree.root_ = root;
  tree.child_offset_.resize(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) tree.child_offset_[v + 1] = tree.child_offset_[v] + child_count[v + 1];
  tree.child_list_.resize(n - (root == kNoVertex ? 0 : 1));
  std::vector<std::size_t> fill(tree.child_offset_.begin(), tree.child_offset_.end() - 1);
  // Ascending v keeps every children list sorted.
  for (std::size_t v = 0; v < n; ++v) {
    if (parents[v] != kNoVertex) tree.child_list_[fill[parents[v]]++] = static_cast<VertexId>(v);
  }

  // Reachability from the root; anything unreached sits on or under a cycle.
  std::vector<char> reached(n, 0);
  std::size_t reached_count = 0;
  if (root != kNoVertex) {
    std::vector<VertexId> stack{root};
    reached[root] = 1;
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      ++reached_count;
      for (std::size_t i = tree.child_offset_[v]; i < tree.child_offset_[v + 1]; ++i) {
        VertexId c = tree.child_list_[i];
        if (!reached[c]) {
          reached[c] = 1;
          stack.push_back(c);
        }
      }
    }
  }
  if (reached_count != n) {
    VertexId start = 0;
    while (reached[start]) ++start;
    // Walk parent links until a vertex repeats; that vertex lies on a cycle.
    std::vector<char> seen(n, 0);
    VertexId v = start;
    while (!seen[v]) {
      seen[v] = 1;
      v = parents[v];
    }
    VertexId smallest = v;
    for (VertexId u = parents[v]; u != v; u = parents[u]) smallest = std::min(smallest, u);
    throw TreeError(TreeErrorKind::kCycle, line_of(smallest),
                    "vertex " + std::to_string(smallest) + " lies on a parent cycle");
  }

  tree.parent_ = std::move(parents);
  tree.weight_ = std::move(weights);
  for (const Rational& w : tree.weight_) tree.total_weight_ += w;
  return tree;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::optional<std::int64_t> parse_index(std::string_view s) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || value < 0) return std::nullopt;
  return value;
}

}  // namespace

RootedTree parse_tree(std::string_view text) {
  std::size_t line_no = 0;
  std::size_t header_line = 0;
  std::size_t n = 0;
  bool have_header = false;
  std::size_t seen_lines = 0;
  std::vector<VertexId> parents;
  std::vector<Rational> weights;
  std::vector<std::size_t> lines;
  std::vector<char> defined;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;

    if (!have_header) {
      auto count = parse_index(line);
      if (!count || *count > std::numeric_limits<VertexId>::max()) {
        throw TreeError(TreeErrorKind::kMalformedLine, line_no, "expected vertex count, got '" + std::string(line) + "'");
      }
      n = static_cast<std::size_t>(*count);
      header_line = line_no;
      have_header = true;
      parents.assign(n, kNoVertex);
      weights.assign(n, Rational());
      lines.assign(n, 0);
      defined.assign(n, 0);
      continue;
    }

    if (seen_lines == n) {
      throw TreeError(TreeErrorKind::kMalformedLine, line_no,
                      "more than the declared " + std::to_string(n) + " vertex lines");
    }
    auto fields = split_ws(line);
    if (fields.size() != 3) {
      throw TreeError(TreeErrorKind::kMalformedLine, line_no, "expected 'id parent weight', got '" + std::string(line) + "'");
    }
    auto id = parse_index(fields[0]);
    if (!id || static_cast<std::size_t>(*id) >= n) {
      throw TreeError(TreeErrorKind::kMalformedLine, line_no, "vertex id '" + std::string(fields[0]) + "' not in 0.." +
                                                                  std::to_string(n == 0 ? 0 : n - 1));
    }
    const auto v = static_cast<std::size_t>(*id);
    if (defined[v]) {
      throw TreeError(TreeErrorKind::kDuplicateVertex, line_no,
                      "vertex " + std::to_string(v) + " already defined on line " + std::to_string(lines[v]));
    }
    VertexId parent = kNoVertex;
    if (fields[1] != "-") {
      auto p = parse_index(fields[1]);
      if (!p || static_cast<std::size_t>(*p) >= n) {
        throw TreeError(TreeErrorKind::kMalformedLine, line_no, "parent '" + std::string(fields[1]) + "' not a vertex id");
      }
      parent = static_cast<VertexId>(*p);
    }
    Rational weight;
    try {
      weight = Rational::parse(fields[2]);
    } catch (const std::invalid_argument&) {
      throw TreeError(TreeErrorKind::kMalformedLine, line_no, "bad weight '" + std::string(fields[2]) + "'");
    }
    if (weight.is_negative()) {
      throw TreeError(TreeErrorKind::kNegativeWeight, line_no, "vertex " + std::to_string(v) + " has weight " +
                                                                   weight.to_string());
    }
    if (parent == kNoVertex) {
      for (std::size_t u = 0; u < n; ++u) {
        if (defined[u] && parents[u] == kNoVertex) {
          throw TreeError(TreeErrorKind::kMultipleRoots, line_no,
                          "root already given on line " + std::to_string(lines[u]));
        }
      }
    }
    defined[v] = 1;
    parents[v] = parent;
    weights[v] = std::move(weight);
    lines[v] = line_no;
    ++seen_lines;
  }

  if (!have_header) throw TreeError(TreeErrorKind::kMalformedLine, line_no, "missing vertex count");
  if (seen_lines != n) {
    throw TreeError(TreeErrorKind::kMalformedLine, line_no,
                    "declared " + std::to_string(n) + " vertices but found " + std::to_string(seen_lines));
  }
  return RootedTree::build(std::move(parents), std::move(weights), lines, header_line);
}

std::string to_text(const RootedTree& tree) {
  std::string out = std::to_string(tree.size());
  out += '\n';
  for (std::size_t v = 0; v < tree.size(); ++v) {
    const auto id = static_cast<VertexId>(v);
    out += std::to_string(v);
    out += ' ';
    const VertexId p = tree.parent(id);
    out += p == kNoVertex ? std::string("-") : std::to_string(p);
    out += ' ';
    out += tree.weight(id).to_string();
    out += '\n';
  }
  return out;
}

AncestorIndex::AncestorIndex(const RootedTree& tree)
    : entry_(tree.size()), exit_(tree.size()) {
  const std::size_t n = tree.size();
  order_.reserve(n);
  std::vector<VertexId> stack{tree.root()};
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    entry_[v] = order_.size();
    order_.push_back(v);
    auto kids = tree.children(v);
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(*it);
  }
  std::vector<std::size_t> size(n, 1);
  for (std::size_t i = n; i-- > 0;) {
    VertexId v = order_[i];
    exit_[v] = entry_[v] + size[v] - 1;
    if (VertexId p = tree.parent(v); p != kNoVertex) size[p] += size[v];
  }
}

bool is_related(const RootedTree& tree, const AncestorIndex& index, VertexId x, VertexId y) {
  if (!tree.contains(x)) throw InvalidVertex(x);
  if (!tree.contains(y)) throw InvalidVertex(y);
  return index.is_ancestor_or_self(x, y) || index.is_ancestor_or_self(y, x);
}

std::optional<std::pair<VertexId, VertexId>> find_related_pair(const RootedTree& tree,
                                                               const AncestorIndex& index,
                                                               std::span<const VertexId> a_set,
                                                               std::span<const VertexId> b_set) {
  struct Item {
    std::size_t entry;
    int side;
    VertexId v;
  };
  std::vector<Item> items;
  items.reserve(a_set.size() + b_set.size());
  for (VertexId v : a_set) {
    if (!tree.contains(v)) throw InvalidVertex(v);
    items.push_back({index.entry(v), 0, v});
  }
  for (VertexId v : b_set) {
    if (!tree.contains(v)) throw InvalidVertex(v);
    items.push_back({index.entry(v), 1, v});
  }
  std::sort(items.begin(), items.end(),
            [](const Item& l, const Item& r) { return l.entry != r.entry ? l.entry < r.entry : l.side < r.side; });

  // Sweep in preorder keeping the chain of open (ancestor) items.
  std::vector<Item> open;
  std::size_t open_count[2] = {0, 0};
  for (const Item& item : items) {
    while (!open.empty() && index.exit(open.back().v) < item.entry) {
      --open_count[open.back().side];
      open.pop_back();
    }
    const int other = 1 - item.side;
    if (open_count[other] > 0) {
      auto it = std::find_if(open.rbegin(), open.rend(), [&](const Item& o) { return o.side == other; });
      return item.side == 0 ? std::make_pair(item.v, it->v) : std::make_pair(it->v, item.v);
    }
    open.push_back(item);
    ++open_count[item.side];
  }
  return std::nullopt;
}

bool are_unrelated_sets(const RootedTree& tree, const AncestorIndex& index,
                        std::span<const VertexId> a_set, std::span<const VertexId> b_set) {
  return !find_related_pair(tree, index, a_set, b_set).has_value();
}

std::vector<VertexId> root_path(const RootedTree& tree, VertexId u) {
  if (!tree.contains(u)) throw InvalidVertex(u);
  std::vector<VertexId> path;
  for (VertexId v = u; v != kNoVertex; v = tree.parent(v)) path.push_back(v);
  std::reverse(path.begin(), path.end());
  return path;
}

Rational weight_of(const RootedTree& tree, std::span<const VertexId> vertices) {
  Rational sum;
  for (VertexId v : vertices) sum += tree.weight(v);
  return sum;
}

}  // namespace wrt
