#ifndef SCHROCOUNT_TREE_HPP
#define SCHROCOUNT_TREE_HPP

// Rooted term trees, unrooted trees and small simple graphs, with the term
// grammar  V | E(tree) | M{tree,tree,...}  and optional :colour suffixes.

#include <string>
#include <utility>
#include <vector>

namespace schro {

// One node per vertex; children of the node are the subtrees hanging off
// it. Child order is stored but carries no semantics: every invariant must
// be independent of it.
struct RootedTree {
  std::vector<RootedTree> children;
  std::string colour;  // empty = unlabelled

  int vertex_count() const;
  bool operator==(const RootedTree&) const = default;
};

// Grammar: V | E(tree) | M{tree,tree+}, with an optional `:label` after V
// or ). A merge glues the roots of its components into one vertex, so
// M-of-M flattens structurally; at most one component may colour the
// merged root. Throws std::invalid_argument with a byte offset.
RootedTree parse_tree(const std::string& text);
std::string render_tree(const RootedTree& t);

struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // normalized i < j, sorted
  std::vector<std::string> colours;        // size n (labels may be empty)

  void add_edge(int i, int j);
  bool has_edge(int i, int j) const;
  std::vector<std::vector<int>> adjacency() const;
  std::vector<int> degrees() const;
  bool is_tree() const;
};

// Vertex 0 = root, remaining vertices numbered depth-first in child order.
Graph tree_to_graph(const RootedTree& t);

// Term tree of the tree graph g rooted at v; children ordered by vertex id.
RootedTree reroot(const Graph& g, int v);

// One representative per isomorphism class of trees on n vertices,
// 1 <= n <= 10.
std::vector<Graph> enumerate_trees(int n);

// Replace one edge by a path of `parts` edges through parts-1 fresh
// unlabelled vertices appended at the end of the vertex range.
Graph subdivide(const Graph& g, std::pair<int, int> edge, int parts);

// Edge-list text format: first line n, then one "i j" line per edge.
Graph parse_graph(const std::string& text);
std::string render_graph(const Graph& g);

// AHU-style canonical string for tree graphs (colours ignored); equal
// strings iff isomorphic. Test and dedup support.
std::string tree_canonical_form(const Graph& g);

// Common fixtures.
Graph petersen_graph();
Graph cycle_graph(int n);     // n >= 3
Graph complete_graph(int n);  // n >= 1
Graph star_graph(int n);      // n >= 1 vertices, centre 0

}  // namespace schro

#endif
