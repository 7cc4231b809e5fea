#include "wrt/partition.hpp"

#include <algorithm>

namespace wrt {

std::string_view to_string(Color color) {
  switch (color) {
    case Color::kUncolored: return "uncolored";
    case Color::kRed: return "red";
    case Color::kBlue: return "blue";
    case Color::kGreen: return "green";
  }
  return "uncolored";
}

std::string_view to_string(Side side) {
  switch (side) {
    case Side::kNone: return "none";
    case Side::kA: return "a";
    case Side::kB: return "b";
  }
  return "none";
}

std::string_view to_string(TraceKind kind) {
  switch (kind) {
    case TraceKind::kBranchAssigned: return "branch_assigned";
    case TraceKind::kRootColored: return "root_colored";
    case TraceKind::kDescend: return "descend";
    case TraceKind::kLastRootAssigned: return "last_root_assigned";
    case TraceKind::kRecolored: return "recolored";
    case TraceKind::kAbsorbed: return "absorbed";
  }
  return "unknown";
}

SubtreeSummary::SubtreeSummary(const RootedTree& tree)
    : index(tree), weight(tree.weights().begin(), tree.weights().end()), min_id(tree.size()) {
  auto order = index.preorder();
  for (std::size_t v = 0; v < tree.size(); ++v) min_id[v] = static_cast<VertexId>(v);
  for (std::size_t i = order.size(); i-- > 1;) {
    const VertexId v = order[i];
    const VertexId p = tree.parent(v);
    weight[p] += weight[v];
    min_id[p] = std::min(min_id[p], min_id[v]);
  }
}

std::vector<Branch> branches_of(const RootedTree& tree, const SubtreeSummary& summary, VertexId v) {
  std::vector<Branch> out;
  auto kids = tree.children(v);
  out.reserve(kids.size());
  for (VertexId c : kids) out.push_back({c, summary.weight[c], summary.min_id[c]});
  std::sort(out.begin(), out.end(), [](const Branch& l, const Branch& r) {
    if (auto cmp = l.weight <=> r.weight; cmp != 0) return cmp < 0;
    return l.min_id < r.min_id;
  });
  return out;
}

std::vector<Branch> branches_of(const RootedTree& tree, VertexId v) {
  if (!tree.contains(v)) throw InvalidVertex(v);
  return branches_of(tree, SubtreeSummary(tree), v);
}

PartitionResult build_partition(const RootedTree& tree) { return build_partition(tree, SubtreeSummary(tree)); }

PartitionResult build_partition(const RootedTree& tree, const SubtreeSummary& summary) {
  const std::size_t n = tree.size();
  PartitionResult result;
  result.colors.assign(n, Color::kUncolored);
  std::vector<Side> side(n, Side::kNone);
  Rational& wa = result.weight_a;
  Rational& wb = result.weight_b;
  auto& trace = result.trace;
  auto log = [&](TraceKind kind, VertexId v, Side s, Color c) { trace.push_back({kind, v, s, c, wa, wb}); };

  // Spine descent.
  VertexId rho = tree.root();
  while (!tree.children(rho).empty()) {
    const std::vector<Branch> branches = branches_of(tree, summary, rho);
    bool any_a = false;
    bool any_b = false;
    for (std::size_t i = 0; i + 1 < branches.size(); ++i) {
      const Branch& branch = branches[i];
      const Side s = wa <= wb ? Side::kA : Side::kB;
      for (VertexId v : summary.index.subtree(branch.root)) side[v] = s;
      (s == Side::kA ? wa : wb) += branch.weight;
      (s == Side::kA ? any_a : any_b) = true;
      log(TraceKind::kBranchAssigned, branch.root, s, Color::kUncolored);
    }
    Color c = Color::kGreen;
    if (any_a && !any_b) c = Color::kRed;
    if (any_b && !any_a) c = Color::kBlue;
    result.colors[rho] = c;
    log(TraceKind::kRootColored, rho, Side::kNone, c);
    rho = branches.back().root;
    log(TraceKind::kDescend, rho, Side::kNone, Color::kUncolored);
  }

  // Last root.
  const VertexId r_star = rho;
  result.r_star = r_star;
  const Side last_side = wa <= wb ? Side::kA : Side::kB;
  const Color c = last_side == Side::kA ? Color::kRed : Color::kBlue;
  side[r_star] = last_side;
  (last_side == Side::kA ? wa : wb) += tree.weight(r_star);
  result.colors[r_star] = c;
  log(TraceKind::kLastRootAssigned, r_star, last_side, c);

  // Climb: green degree-2 spine vertices take the last root's colour.
  for (VertexId x = tree.parent(r_star);
       x != kNoVertex && (result.colors[x] == Color::kGreen || result.colors[x] == c); x = tree.parent(x)) {
    if (result.colors[x] == Color::kGreen && tree.degree(x) == 2) {
      result.colors[x] = c;
      log(TraceKind::kRecolored, x, Side::kNone, c);
    }
  }

  // Absorb the unassigned same-coloured spine vertices above the last root.
  for (VertexId u = r_star; tree.parent(u) != kNoVertex;) {
    const VertexId v = tree.parent(u);
    if (side[v] != Side::kNone || result.colors[v] != c) break;
    side[v] = last_side;
    (last_side == Side::kA ? wa : wb) += tree.weight(v);
    log(TraceKind::kAbsorbed, v, last_side, c);
    u = v;
  }

  for (VertexId v : root_path(tree, r_star)) {
    if (side[v] == Side::kNone) result.residual_path.push_back(v);
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (side[v] == Side::kA) result.a.push_back(static_cast<VertexId>(v));
    if (side[v] == Side::kB) result.b.push_back(static_cast<VertexId>(v));
  }
  return result;
}

ReplayedPartition replay_trace(const RootedTree& tree, const std::vector<TraceEvent>& trace) {
  const AncestorIndex index(tree);
  std::vector<Side> side(tree.size(), Side::kNone);
  ReplayedPartition out;
  out.colors.assign(tree.size(), Color::kUncolored);
  for (const TraceEvent& e : trace) {
    if (!tree.contains(e.vertex)) throw InvalidVertex(e.vertex);
    switch (e.kind) {
      case TraceKind::kBranchAssigned:
        for (VertexId v : index.subtree(e.vertex)) side[v] = e.side;
        break;
      case TraceKind::kRootColored:
      case TraceKind::kRecolored:
        out.colors[e.vertex] = e.color;
        break;
      case TraceKind::kLastRootAssigned:
      case TraceKind::kAbsorbed:
        side[e.vertex] = e.side;
        out.colors[e.vertex] = e.color;
        break;
      case TraceKind::kDescend:
        break;
    }
  }
  for (std::size_t v = 0; v < tree.size(); ++v) {
    if (side[v] == Side::kA) out.a.push_back(static_cast<VertexId>(v));
    if (side[v] == Side::kB) out.b.push_back(static_cast<VertexId>(v));
  }
  return out;
}

}  // namespace wrt
