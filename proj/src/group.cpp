#include "cayley/group.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>

namespace cayley {

GroupSpec GroupSpec::cyclic(int m) {
  if (m < 1) throw std::invalid_argument("Z(m) needs m >= 1");
  GroupSpec s;
  s.kind = Kind::cyclic;
  s.n = m;
  return s;
}

GroupSpec GroupSpec::symmetric(int n) {
  if (n < 1) throw std::invalid_argument("S(n) needs n >= 1");
  GroupSpec s;
  s.kind = Kind::symmetric;
  s.n = n;
  return s;
}

GroupSpec GroupSpec::alternating(int n) {
  if (n < 1) throw std::invalid_argument("A(n) needs n >= 1");
  GroupSpec s;
  s.kind = Kind::alternating;
  s.n = n;
  return s;
}

GroupSpec GroupSpec::product(GroupSpec a, GroupSpec b) {
  GroupSpec s;
  s.kind = Kind::product;
  s.n = 0;
  s.left = std::make_shared<const GroupSpec>(std::move(a));
  s.right = std::make_shared<const GroupSpec>(std::move(b));
  return s;
}

std::string GroupSpec::str() const {
  switch (kind) {
    case Kind::cyclic: return "Z(" + std::to_string(n) + ")";
    case Kind::symmetric: return "S(" + std::to_string(n) + ")";
    case Kind::alternating: return "A(" + std::to_string(n) + ")";
    case Kind::product: {
      std::string r = right->str();
      if (right->kind == Kind::product) r = "(" + r + ")";
      return left->str() + "x" + r;
    }
  }
  return {};
}

namespace {

std::string trim(std::string_view s) {
  size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

struct SpecParser {
  std::string s;
  size_t i = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("bad group spec '" + s + "': " + what);
  }
  void skip() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  GroupSpec expr() {
    GroupSpec g = factor();
    for (;;) {
      skip();
      if (i < s.size() && (s[i] == 'x' || s[i] == 'X')) {
        ++i;
        g = GroupSpec::product(std::move(g), factor());
      } else {
        return g;
      }
    }
  }
  GroupSpec factor() {
    skip();
    if (i >= s.size()) fail("unexpected end");
    if (s[i] == '(') {
      ++i;
      GroupSpec g = expr();
      skip();
      if (i >= s.size() || s[i] != ')') fail("missing ')'");
      ++i;
      return g;
    }
    char c = static_cast<char>(std::toupper(static_cast<unsigned char>(s[i])));
    ++i;
    skip();
    if (i >= s.size() || s[i] != '(') fail("expected '(' after constructor");
    ++i;
    skip();
    size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (start == i) fail("expected a number");
    int n = std::stoi(s.substr(start, i - start));
    skip();
    if (i >= s.size() || s[i] != ')') fail("missing ')'");
    ++i;
    switch (c) {
      case 'Z': return GroupSpec::cyclic(n);
      case 'S': return GroupSpec::symmetric(n);
      case 'A': return GroupSpec::alternating(n);
      default: fail(std::string("unknown constructor ") + c);
    }
  }
};

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
    return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

std::uint64_t factorial(int n) {
  std::uint64_t r = 1;
  for (int k = 2; k <= n; ++k) r = sat_mul(r, static_cast<std::uint64_t>(k));
  return r;
}

// Intermediate table used while building products bottom-up.
struct Raw {
  int n = 0;
  std::vector<Elem> mul;
  std::vector<Elem> inv;
  std::vector<std::string> labels;
  std::vector<std::vector<std::string>> parts;  // flattened tuple components
};

using Perm = std::vector<int>;

std::string cycle_label(const Perm& p) {
  std::string out;
  std::vector<bool> seen(p.size(), false);
  for (size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == static_cast<int>(i)) continue;
    out += '(';
    size_t j = i;
    do {
      seen[j] = true;
      out += static_cast<char>('1' + j);
      j = static_cast<size_t>(p[j]);
    } while (j != i);
    out += ')';
  }
  return out.empty() ? "e" : out;
}

bool is_even(const Perm& p) {
  std::vector<bool> seen(p.size(), false);
  int transpositions = 0;
  for (size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (size_t j = i; !seen[j]; j = static_cast<size_t>(p[j])) {
      seen[j] = true;
      ++len;
    }
    transpositions += len - 1;
  }
  return transpositions % 2 == 0;
}

Raw build_perm(int n, bool even_only) {
  if (n > 9) throw std::invalid_argument("permutation groups limited to n <= 9");
  std::vector<Perm> perms;
  Perm p(static_cast<size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  do {
    if (!even_only || is_even(p)) perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  std::map<Perm, Elem> index;
  for (size_t k = 0; k < perms.size(); ++k) index[perms[k]] = static_cast<Elem>(k);
  Raw r;
  r.n = static_cast<int>(perms.size());
  r.mul.resize(static_cast<size_t>(r.n) * r.n);
  r.inv.resize(static_cast<size_t>(r.n));
  Perm q(static_cast<size_t>(n));
  for (int a = 0; a < r.n; ++a) {
    for (int b = 0; b < r.n; ++b) {
      // apply a first, then b
      for (int x = 0; x < n; ++x) q[x] = perms[b][perms[a][x]];
      r.mul[static_cast<size_t>(a) * r.n + b] = index.at(q);
    }
    for (int x = 0; x < n; ++x) q[perms[a][x]] = x;
    r.inv[a] = index.at(q);
    r.labels.push_back(cycle_label(perms[a]));
    r.parts.push_back({r.labels.back()});
  }
  return r;
}

Raw build_raw(const GroupSpec& spec) {
  switch (spec.kind) {
    case GroupSpec::Kind::cyclic: {
      Raw r;
      r.n = spec.n;
      r.mul.resize(static_cast<size_t>(r.n) * r.n);
      for (int a = 0; a < r.n; ++a) {
        for (int b = 0; b < r.n; ++b) r.mul[static_cast<size_t>(a) * r.n + b] = (a + b) % r.n;
        r.inv.push_back((r.n - a) % r.n);
        r.labels.push_back(std::to_string(a));
        r.parts.push_back({r.labels.back()});
      }
      return r;
    }
    case GroupSpec::Kind::symmetric: return build_perm(spec.n, false);
    case GroupSpec::Kind::alternating: return build_perm(spec.n, true);
    case GroupSpec::Kind::product: {
      Raw A = build_raw(*spec.left);
      Raw B = build_raw(*spec.right);
      Raw r;
      r.n = A.n * B.n;
      r.mul.resize(static_cast<size_t>(r.n) * r.n);
      for (int a1 = 0; a1 < A.n; ++a1)
        for (int b1 = 0; b1 < B.n; ++b1) {
          int x = a1 * B.n + b1;
          for (int a2 = 0; a2 < A.n; ++a2)
            for (int b2 = 0; b2 < B.n; ++b2) {
              int y = a2 * B.n + b2;
              r.mul[static_cast<size_t>(x) * r.n + y] =
                  A.mul[static_cast<size_t>(a1) * A.n + a2] * B.n + B.mul[static_cast<size_t>(b1) * B.n + b2];
            }
          r.inv.push_back(A.inv[a1] * B.n + B.inv[b1]);
          std::vector<std::string> parts =
              spec.left->kind == GroupSpec::Kind::product ? A.parts[a1] : std::vector<std::string>{A.labels[a1]};
          parts.push_back(B.labels[b1]);
          std::string label = "(";
          for (size_t k = 0; k < parts.size(); ++k) label += (k ? "," : "") + parts[k];
          label += ")";
          r.labels.push_back(label);
          r.parts.push_back(parts);
        }
      return r;
    }
  }
  throw std::logic_error("unreachable");
}

void flatten(const GroupSpec& s, std::vector<const GroupSpec*>& out) {
  if (s.kind == GroupSpec::Kind::product) {
    flatten(*s.left, out);
    out.push_back(s.right.get());
  } else {
    out.push_back(&s);
  }
}

std::string canonical_literal(const GroupSpec& spec, std::string_view text) {
  std::string t = trim(text);
  switch (spec.kind) {
    case GroupSpec::Kind::cyclic: {
      if (t == "e") return "0";
      size_t used = 0;
      long long v = 0;
      try {
        v = std::stoll(t, &used);
      } catch (...) {
        used = 0;
      }
      if (used == 0 || used != t.size()) throw std::invalid_argument("bad residue '" + t + "'");
      long long m = spec.n;
      return std::to_string(((v % m) + m) % m);
    }
    case GroupSpec::Kind::symmetric:
    case GroupSpec::Kind::alternating: {
      Perm p(static_cast<size_t>(spec.n));
      std::iota(p.begin(), p.end(), 0);
      if (t == "e" || t == "()" || t.empty()) return "e";
      size_t i = 0;
      while (i < t.size()) {
        if (t[i] != '(') throw std::invalid_argument("bad cycle literal '" + t + "'");
        size_t close = t.find(')', i);
        if (close == std::string::npos) throw std::invalid_argument("bad cycle literal '" + t + "'");
        std::vector<int> pts;
        for (size_t k = i + 1; k < close; ++k) {
          char c = t[k];
          if (c == ' ' || c == ',') continue;
          if (c < '1' || c > '9' || c - '1' >= spec.n)
            throw std::invalid_argument("bad point in '" + t + "'");
          pts.push_back(c - '1');
        }
        std::vector<int> sorted = pts;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
          throw std::invalid_argument("repeated point in '" + t + "'");
        Perm c(static_cast<size_t>(spec.n));
        std::iota(c.begin(), c.end(), 0);
        for (size_t k = 0; k < pts.size(); ++k) c[pts[k]] = pts[(k + 1) % pts.size()];
        // written products compose left to right as well
        Perm q(p.size());
        for (size_t x = 0; x < p.size(); ++x) q[x] = c[p[x]];
        p = q;
        i = close + 1;
      }
      if (spec.kind == GroupSpec::Kind::alternating && !is_even(p))
        throw std::invalid_argument("odd permutation '" + t + "' is not in " + spec.str());
      return cycle_label(p);
    }
    case GroupSpec::Kind::product: {
      std::vector<const GroupSpec*> factors;
      flatten(spec, factors);
      if (t == "e") {
        std::string out = "(";
        for (size_t k = 0; k < factors.size(); ++k)
          out += (k ? "," : "") + canonical_literal(*factors[k], "e");
        return out + ")";
      }
      if (t.size() < 2 || t.front() != '(' || t.back() != ')')
        throw std::invalid_argument("bad tuple literal '" + t + "'");
      auto comps = split_top_level(std::string_view(t).substr(1, t.size() - 2));
      if (comps.size() != factors.size())
        throw std::invalid_argument("tuple '" + t + "' has wrong arity");
      std::string out = "(";
      for (size_t k = 0; k < factors.size(); ++k)
        out += (k ? "," : "") + canonical_literal(*factors[k], comps[k]);
      return out + ")";
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace

GroupSpec parse_group_spec(std::string_view text) {
  SpecParser p{trim(text), 0};
  if (p.s.empty()) p.fail("empty");
  GroupSpec g = p.expr();
  p.skip();
  if (p.i != p.s.size()) p.fail("trailing characters");
  return g;
}

std::uint64_t spec_order(const GroupSpec& spec) {
  switch (spec.kind) {
    case GroupSpec::Kind::cyclic: return static_cast<std::uint64_t>(spec.n);
    case GroupSpec::Kind::symmetric: return factorial(spec.n);
    case GroupSpec::Kind::alternating: return spec.n < 2 ? 1 : factorial(spec.n) / 2;
    case GroupSpec::Kind::product: return sat_mul(spec_order(*spec.left), spec_order(*spec.right));
  }
  return 0;
}

GroupPtr build_group(const GroupSpec& spec, std::uint64_t order_cap) {
  std::uint64_t order = spec_order(spec);
  if (order > order_cap)
    throw std::invalid_argument(spec.str() + " has order " + std::to_string(order) +
                                " above the cap " + std::to_string(order_cap));
  Raw raw = build_raw(spec);
  auto G = std::make_shared<GroupTable>();
  G->n_ = raw.n;
  G->spec_ = spec;
  G->mul_ = std::move(raw.mul);
  G->inv_ = std::move(raw.inv);
  G->labels_ = std::move(raw.labels);
  for (Elem a = 0; a < G->n_; ++a) G->index_[G->labels_[a]] = a;
  return G;
}

GroupPtr build_group(std::string_view spec_text, std::uint64_t order_cap) {
  return build_group(parse_group_spec(spec_text), order_cap);
}

Elem GroupTable::parse(std::string_view literal) const {
  std::string t = trim(literal);
  auto it = index_.find(t);
  if (it != index_.end()) return it->second;
  std::string canon = canonical_literal(spec_, t);
  it = index_.find(canon);
  if (it == index_.end()) throw std::invalid_argument("no element '" + t + "' in " + spec_.str());
  return it->second;
}

Elem conjugate(const GroupTable& G, Elem g, Elem h) { return G.mul(G.mul(g, h), G.inv(g)); }

std::vector<Elem> subgroup_closure(const GroupTable& G, const std::vector<Elem>& gens) {
  std::vector<bool> in(static_cast<size_t>(G.order()), false);
  std::vector<Elem> members{G.identity()};
  in[G.identity()] = true;
  // In a finite group closing under right multiplication by generators suffices.
  for (size_t k = 0; k < members.size(); ++k) {
    for (Elem s : gens) {
      Elem x = G.mul(members[k], s);
      if (!in[x]) {
        in[x] = true;
        members.push_back(x);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

bool is_subgroup(const GroupTable& G, const std::vector<Elem>& H) {
  if (H.empty()) return false;
  std::vector<bool> in(static_cast<size_t>(G.order()), false);
  for (Elem h : H) in[h] = true;
  if (!in[G.identity()]) return false;
  for (Elem a : H)
    for (Elem b : H)
      if (!in[G.mul(a, G.inv(b))]) return false;
  return true;
}

std::vector<std::string> split_top_level(std::string_view list) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : list) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!trim(cur).empty() || !out.empty()) out.push_back(trim(cur));
  return out;
}

std::vector<Elem> parse_elements(const GroupTable& G, std::string_view list) {
  std::vector<Elem> out;
  for (const auto& piece : split_top_level(list)) {
    if (piece.empty()) continue;
    out.push_back(G.parse(piece));
  }
  return out;
}

}  // namespace cayley
