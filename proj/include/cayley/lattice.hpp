#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "cayley/group.hpp"

namespace cayley {

/// A total map G -> G.
struct SiteMap {
  std::vector<Elem> map;

  Elem operator()(Elem g) const { return map[g]; }
  bool is_bijective() const;
  SiteMap inverse() const;  // throws unless bijective

  static SiteMap identity(const GroupTable& G);
  static SiteMap left_translation(const GroupTable& G, Elem g);   // x -> gx
  static SiteMap right_translation(const GroupTable& G, Elem g);  // x -> xg
};

struct Arrow {
  Elem from = 0;
  Elem to = 0;
  Elem h = 0;
  bool operator==(const Arrow&) const = default;
};

/// Orthonormal basis of the span of the 2-form relations embedded in words
/// of one grade. Words are indexed lexicographically in S-order, first letter
/// most significant. The span is the same at every site.
struct RelationSpace {
  int grade = 0;
  int dim = 0;
  int rank = 0;
  Eigen::MatrixXd basis;  // dim x rank
  Eigen::MatrixXcd cbasis;
};

struct LatticeOptions {
  double tol = 1e-9;
  int grade_cap = 4;
};

class GroupLattice {
 public:
  GroupLattice(GroupPtr G, std::vector<Elem> S, LatticeOptions opts);

  const GroupTable& group() const { return *G_; }
  const GroupPtr& group_ptr() const { return G_; }
  int order() const { return G_->order(); }
  /// |S|
  int n() const { return static_cast<int>(S_.size()); }
  const std::vector<Elem>& S() const { return S_; }
  Elem s(int pos) const { return S_[pos]; }
  /// Position of g in S, or -1.
  int pos(Elem g) const { return pos_[g]; }
  bool in_S(Elem g) const { return pos_[g] >= 0; }
  bool in_Se(Elem g) const { return g == 0 || pos_[g] >= 0; }
  Elem mul(Elem a, Elem b) const { return G_->mul(a, b); }
  Elem inv(Elem a) const { return G_->inv(a); }
  const std::string& label(Elem a) const { return G_->label(a); }

  const std::vector<Elem>& S0() const { return S0_; }
  const std::vector<Elem>& S1() const { return S1_; }
  const std::vector<Elem>& S2() const { return S2_; }
  /// Pairs of S-positions (i,j) with s_i s_j = g, lexicographic.
  const std::vector<std::pair<int, int>>& pairs_of(Elem g) const { return pairs_[g]; }
  int multiplicity(Elem g) const { return static_cast<int>(pairs_[g].size()); }

  double tol() const { return opts_.tol; }
  int grade_cap() const { return opts_.grade_cap; }
  const LatticeOptions& options() const { return opts_; }

  /// Product of the letters of every word of grade r.
  const std::vector<Elem>& word_products(int r) const;
  const RelationSpace& relations(int r) const;

  std::string element_list(const std::vector<Elem>& xs) const;

 private:
  GroupPtr G_;
  std::vector<Elem> S_;
  std::vector<int> pos_;
  std::vector<Elem> S0_, S1_, S2_;
  std::vector<std::vector<std::pair<int, int>>> pairs_;
  LatticeOptions opts_;

  mutable std::mutex cache_mutex_;
  mutable std::map<int, std::unique_ptr<std::vector<Elem>>> word_products_;
  mutable std::map<int, std::unique_ptr<RelationSpace>> relations_;
};

using LatticePtr = std::shared_ptr<const GroupLattice>;

/// Errors on identity in S, duplicates or out-of-range elements.
LatticePtr build_lattice(GroupPtr G, std::vector<Elem> S, LatticeOptions opts = {});
LatticePtr build_lattice(std::string_view group_spec, std::string_view S_list, LatticeOptions opts = {});

std::vector<std::vector<Elem>> connected_components(const GroupLattice& L);

struct Triangle {
  Elem h0, h1, h2;
};

struct QuadrangleClass {
  Elem g;
  std::vector<std::pair<Elem, Elem>> pairs;
};

struct Polygons {
  std::vector<std::pair<Elem, Elem>> biangles;  // unordered, first in S-order
  std::vector<Triangle> triangles;
  std::vector<QuadrangleClass> quadrangles;
};

Polygons enumerate_polygons(const GroupLattice& L);

/// Splits the pairs (h,h') with hh' = g into cycles. The pair (a,b) is
/// followed by (b, b^{-1}ab); a cycle h1..hr stands for (h1,h2),...,(hr,h1).
/// Throws on a lattice that is not bicovariant.
std::vector<std::vector<Elem>> enumerate_cycles(const GroupLattice& L, Elem g);

/// A pair (h,h') in S with ad(h)h' outside S, if any.
std::optional<std::pair<Elem, Elem>> bicovariance_violation(const GroupLattice& L);
bool is_bicovariant(const GroupLattice& L);
/// R_g is differentiable iff ad(g^{-1})S lies in S.
bool is_right_differentiable(const GroupLattice& L, Elem g);
/// S_e is a subgroup, i.e. every component carries the universal calculus.
bool is_universal(const GroupLattice& L);

struct DifferentiabilityReport {
  bool differentiable = true;
  std::optional<Arrow> witness;  // first violation in site/S order
  std::vector<Arrow> violations;
};

DifferentiabilityReport is_differentiable_map(const GroupLattice& L, const SiteMap& phi);

std::string export_dot(const GroupLattice& L);

}  // namespace cayley
