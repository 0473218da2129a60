#pragma once

#include <string>
#include <vector>

#include "cayley/form.hpp"

namespace cayley {

/// Right cosets Hg of a subgroup H, with the Schreier diagram K -> Kh for h in S.
struct CosetDiagram {
  LatticePtr L;
  std::vector<Elem> H;                       // sorted
  std::vector<std::vector<Elem>> cosets;     // sorted members; ordered by representative
  std::vector<Elem> rep;                     // smallest member of each coset
  std::vector<int> coset_of;                 // site -> coset index
  std::vector<std::vector<int>> action;      // [coset][S-position] -> coset

  int size() const { return static_cast<int>(cosets.size()); }
  bool is_loop(int K, int pos) const { return action[K][pos] == K; }
  /// Number of arrows K -> K' (counting distinct h).
  int multiplicity(int K, int Kp) const;
  /// Coset containing H g
  int coset_containing(Elem g) const { return coset_of[g]; }
  std::string label(int K) const;
};

/// Throws if H is not a subgroup.
CosetDiagram build_coset_diagram(const LatticePtr& L, const std::vector<Elem>& H);

/// DOT with loops and parallel arrows kept.
std::string export_coset_dot(const CosetDiagram& D);

/// e^K = sum over g in K of e^g
Function coset_indicator(const CosetDiagram& D, int K);
/// Whether f is constant on every coset.
bool is_coset_function(const CosetDiagram& D, const Function& f, double tol = 1e-12);
/// d e^K from the restricted formula sum_h (e^{K h^-1} - e^K) theta^h.
Form coset_d_indicator(const CosetDiagram& D, int K);
/// theta^h e^K = e^{K h^-1} theta^h, as a form.
Form coset_theta_times_indicator(const CosetDiagram& D, int pos, int K);

struct ReductionRelation {
  enum class Kind { loop, multi_edge } kind;
  int coset;
  int h1, h2;   // S-positions; h2 = h1 for a loop
  Form rho;     // e^K theta^h or e^K (theta^{h1} - theta^{h2})
  double d_plus_delta = 0;   // size of d(rho) + Delta(rho) modulo the 2-form relations
  bool closed = false;       // d(rho) + Delta(rho) lies in the grade-2 ideal of the reduction relations
};

/// One relation per loop and per consecutive pair of parallel arrows, each checked for closure.
std::vector<ReductionRelation> reduction_relations(const CosetDiagram& D);

}  // namespace cayley
