#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace plumb {

// Tree on vertices 0..vertex_count-1; edges unordered, stored with u < v.
struct Tree {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;
  std::optional<int> root;
};

struct Forest {
  std::vector<Tree> components;

  int vertex_count() const {
    int total = 0;
    for (const Tree& t : components) total += t.vertex_count;
    return total;
  }
};

// Throws plumb::error on anything that is not a tree: bad counts, self
// loops, duplicate edges, out-of-range indices, cycles, disconnectedness.
void validate_tree(const Tree& t);

std::vector<std::vector<int>> adjacency(const Tree& t);

bool is_path(const Tree& t);  // every degree <= 2

// 1 or 2 central vertices (midpoints of a longest path).
std::vector<int> tree_centers(const Tree& t);

// Parenthesized AHU code of t rooted at r; equal iff rooted-isomorphic.
std::string rooted_code(const Tree& t, int r);

// Center-rooted code: equal iff isomorphic as unrooted trees.
std::string canonical_code(const Tree& t);

// Relabeling of t with vertex 0 the primary center and children in code
// order (preorder); isomorphic trees map to the identical Tree value.
// The root mark is dropped.
Tree canonical_form(const Tree& t);

// Text format: line 1 vertex count, optional line "root k", then one line
// "u v" per edge with u < v.
Tree parse_tree(const std::string& text);
std::string format_tree(const Tree& t);

// One representative per isomorphism class, deterministic order.
std::vector<Tree> enumerate_free_trees(int n);

// Rooted trees with a degree-1 root, one per rooted isomorphism class;
// vertex 0 is the root.
std::vector<Tree> enumerate_planted_trees(int n);

// One representative per isomorphism class of forests with n vertices
// total, components ordered by non-increasing size.
std::vector<Forest> enumerate_forests(int n);

// One new vertex on every edge; original indices preserved, root kept.
Tree subdivide(const Tree& t);

// subdivide(t) minus the root and its single edge; the degree-1 root's
// subdivision vertex stays.  Result has 2*(vertex_count-1) vertices.
Tree slalom_transform(const Tree& t);

// Disjoint union plus one edge between base[at] and attachment[at2]
// (attachment indices shifted by base.vertex_count).  Keeps base's root.
Tree glue(const Tree& base, int at, const Tree& attachment, int at2);

// Star of paths: center 0, legs laid out consecutively.
Tree spider(const std::vector<int>& leg_lengths);

// --- subgraph helpers used by the decomposition ---

// Vertex sets of the connected components of t minus the given vertices.
std::vector<std::vector<int>> components_without(const Tree& t,
                                                 const std::vector<int>& removed);

// Subtree induced by the given (connected, ascending) vertex set; vertex i
// of the result is vertices[i].
Tree induced(const Tree& t, const std::vector<int>& vertices);

}  // namespace plumb
