#pragma once

#include <vector>

#include "plumb/tree.hpp"

namespace plumb {

// One application of the subtree-removal lemma.  Indices refer to the
// canonically relabeled component the step was applied to; `subtree`
// lists Γ₀'s vertices in that labeling.  case_id 0 marks a terminal
// component (a path or at most five vertices) kept for the residual.
struct DecompositionStep {
  int case_id = 0;          // 1..7, or 0 = terminal
  Tree component;           // the component this step was applied to
  std::vector<int> subtree; // Γ₀ as vertices of `component` (all of them
                            // for a terminal step)
  int v = -1;               // outermost degree->=3 vertex
  int v_prime = -1, v_second = -1, v_third = -1;
  int boundary = -1;        // w: Γ - Γ₀ attaches only through this vertex
  int k = 0;                // vertices strictly below v
  int n = 0;                // subtrees hanging off v
  int increment = 0;        // contribution to the bound: b1(Γ₀)-2, or the
                            // exact signature for a terminal step
};

struct Certificate {
  std::vector<DecompositionStep> steps;
  Forest residual;            // the terminal components
  int certified_lower_bound = 0;

  bool used_fallback = false;  // a non-path component > 5 vertices became
                               // terminal because no case applied soundly
};

// Decomposition certificate for the signature bound: repeatedly split off
// a subtree Γ₀ (>= 6 vertices) through a boundary vertex w with Γ₀ - w
// positive definite — each such step is worth b1(Γ₀) - 2 by eigenvalue
// interlacing — until only paths and components with <= 5 vertices remain;
// those contribute their exact signature.  Every step re-verifies its own
// soundness conditions (positive definiteness, boundary structure) with
// exact arithmetic, so certified_lower_bound <= σ(t) holds uncondition-
// ally.  Case selection follows the fixed order 1..7 on the outermost
// vertex of degree at least three.
Certificate lemma1_decompose(const Tree& t);

}  // namespace plumb
