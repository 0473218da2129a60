#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace cayley {

/// Group elements are dense indices into a GroupTable. The identity is always 0.
using Elem = int;

struct GroupSpec {
  enum class Kind { cyclic, symmetric, alternating, product };
  Kind kind = Kind::cyclic;
  int n = 1;
  std::shared_ptr<const GroupSpec> left, right;

  static GroupSpec cyclic(int m);
  static GroupSpec symmetric(int n);
  static GroupSpec alternating(int n);
  static GroupSpec product(GroupSpec a, GroupSpec b);

  std::string str() const;
};

/// Grammar: Z(m), S(n), A(n), products with `x` (left-associative),
/// parentheses for grouping.
GroupSpec parse_group_spec(std::string_view text);

/// Order of the group a spec describes, saturating at UINT64_MAX.
std::uint64_t spec_order(const GroupSpec& spec);

class GroupTable {
 public:
  int order() const { return n_; }
  Elem identity() const { return 0; }
  Elem mul(Elem a, Elem b) const { return mul_[static_cast<size_t>(a) * n_ + b]; }
  Elem inv(Elem a) const { return inv_[a]; }
  const std::string& label(Elem a) const { return labels_[a]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const GroupSpec& spec() const { return spec_; }

  /// Element from a literal such as "(12)(34)", "3", "(1,0)" or "e".
  /// Non-canonical spellings ("(21)", "-1") are normalized first.
  Elem parse(std::string_view literal) const;

  friend std::shared_ptr<const GroupTable> build_group(const GroupSpec&, std::uint64_t);

 private:
  int n_ = 0;
  GroupSpec spec_;
  std::vector<Elem> mul_;
  std::vector<Elem> inv_;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, Elem> index_;
};

using GroupPtr = std::shared_ptr<const GroupTable>;

/// Composition reads left to right: for permutations, gh applies g first.
GroupPtr build_group(const GroupSpec& spec, std::uint64_t order_cap = 10000);
GroupPtr build_group(std::string_view spec_text, std::uint64_t order_cap = 10000);

/// ad(g)h = g h g^{-1}.
Elem conjugate(const GroupTable& G, Elem g, Elem h);

/// Sorted element list of the subgroup generated by gens.
std::vector<Elem> subgroup_closure(const GroupTable& G, const std::vector<Elem>& gens);

bool is_subgroup(const GroupTable& G, const std::vector<Elem>& H);

/// Splits "a,b,c" at top-level commas (commas inside parentheses belong to
/// tuple literals) and parses each piece.
std::vector<Elem> parse_elements(const GroupTable& G, std::string_view list);

std::vector<std::string> split_top_level(std::string_view list);

}  // namespace cayley
