#include <deque>

#include "hurwitz/enumerate.hpp"
#include "hurwitz/vieta.hpp"

namespace hurwitz {

std::vector<TreeNode> tree_expand(const GHEquation& eq, std::span<const Int> root,
                                  const TreeLimit& limit) {
  if (!is_fundamental(eq, root)) throw DomainError("tree root must be a fundamental solution");
  const Int root_height = height(root);
  if (limit.max_height && *limit.max_height < root_height) {
    throw ValidationError("height limit is below the root height " + root_height.get_str());
  }
  if (!limit.max_height && !limit.max_depth) {
    throw ValidationError("tree expansion needs a height or depth limit");
  }

  std::vector<TreeNode> nodes;
  nodes.push_back({Tuple(root.begin(), root.end()), std::nullopt, 0, 0, root_height});
  // Nodes are appended in BFS order, so the vector doubles as the queue.
  for (std::size_t at = 0; at < nodes.size(); ++at) {
    if (limit.max_depth && nodes[at].depth >= *limit.max_depth) continue;
    for (std::size_t i = 1; i <= eq.arity(); ++i) {
      if (i == nodes[at].edge) continue;
      Tuple child = apply_involution(eq, nodes[at].tuple, i);
      Int h = height(child);
      if (h <= nodes[at].height) continue;
      if (limit.max_height && h > *limit.max_height) continue;
      nodes.push_back({std::move(child), at, i, nodes[at].depth + 1, std::move(h)});
    }
  }
  return nodes;
}

}  // namespace hurwitz
