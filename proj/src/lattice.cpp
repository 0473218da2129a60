#include "cayley/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cayley {

using cplx_t = std::complex<double>;

bool SiteMap::is_bijective() const {
  std::vector<bool> hit(map.size(), false);
  for (Elem y : map) {
    if (y < 0 || static_cast<size_t>(y) >= map.size() || hit[y]) return false;
    hit[y] = true;
  }
  return true;
}

SiteMap SiteMap::inverse() const {
  if (!is_bijective()) throw std::invalid_argument("site map is not invertible");
  SiteMap r{std::vector<Elem>(map.size())};
  for (size_t x = 0; x < map.size(); ++x) r.map[map[x]] = static_cast<Elem>(x);
  return r;
}

SiteMap SiteMap::identity(const GroupTable& G) {
  SiteMap r{std::vector<Elem>(static_cast<size_t>(G.order()))};
  std::iota(r.map.begin(), r.map.end(), 0);
  return r;
}

SiteMap SiteMap::left_translation(const GroupTable& G, Elem g) {
  SiteMap r{std::vector<Elem>(static_cast<size_t>(G.order()))};
  for (Elem x = 0; x < G.order(); ++x) r.map[x] = G.mul(g, x);
  return r;
}

SiteMap SiteMap::right_translation(const GroupTable& G, Elem g) {
  SiteMap r{std::vector<Elem>(static_cast<size_t>(G.order()))};
  for (Elem x = 0; x < G.order(); ++x) r.map[x] = G.mul(x, g);
  return r;
}

GroupLattice::GroupLattice(GroupPtr G, std::vector<Elem> S, LatticeOptions opts)
    : G_(std::move(G)), S_(std::move(S)), opts_(opts) {
  if (S_.empty()) throw std::invalid_argument("S must not be empty");
  const int N = G_->order();
  pos_.assign(static_cast<size_t>(N), -1);
  for (size_t i = 0; i < S_.size(); ++i) {
    Elem h = S_[i];
    if (h < 0 || h >= N) throw std::invalid_argument("S element out of range");
    if (h == G_->identity()) throw std::invalid_argument("S must not contain the identity");
    if (pos_[h] >= 0) throw std::invalid_argument("duplicate element " + G_->label(h) + " in S");
    pos_[h] = static_cast<int>(i);
  }
  pairs_.assign(static_cast<size_t>(N), {});
  for (int i = 0; i < n(); ++i)
    for (int j = 0; j < n(); ++j) pairs_[G_->mul(S_[i], S_[j])].emplace_back(i, j);
  for (Elem h : S_) {
    if (in_S(G_->inv(h))) S0_.push_back(h);
    if (!pairs_[h].empty()) S1_.push_back(h);
  }
  for (Elem g = 0; g < N; ++g)
    if (!pairs_[g].empty() && !in_Se(g)) S2_.push_back(g);
}

const std::vector<Elem>& GroupLattice::word_products(int r) const {
  std::lock_guard<std::mutex> lock(cache_mutex_);
  auto& slot = word_products_[r];
  if (!slot) {
    size_t words = 1;
    for (int k = 0; k < r; ++k) words *= static_cast<size_t>(n());
    auto v = std::make_unique<std::vector<Elem>>(words, 0);
    for (size_t w = 0; w < words; ++w) {
      // letters from the least significant end are the rightmost
      Elem p = 0;
      size_t rest = w;
      std::vector<int> letters(static_cast<size_t>(r));
      for (int k = r - 1; k >= 0; --k) {
        letters[k] = static_cast<int>(rest % n());
        rest /= n();
      }
      for (int k = 0; k < r; ++k) p = G_->mul(p, S_[letters[k]]);
      (*v)[w] = p;
    }
    slot = std::move(v);
  }
  return *slot;
}

const RelationSpace& GroupLattice::relations(int r) const {
  if (r > opts_.grade_cap)
    throw std::out_of_range("grade " + std::to_string(r) + " exceeds the grade cap " +
                            std::to_string(opts_.grade_cap));
  std::lock_guard<std::mutex> lock(cache_mutex_);
  auto& slot = relations_[r];
  if (slot) return *slot;
  auto rs = std::make_unique<RelationSpace>();
  rs->grade = r;
  long long dim = 1;
  for (int k = 0; k < r; ++k) dim *= n();
  rs->dim = static_cast<int>(dim);
  if (r < 2 || S2_.empty()) {
    rs->basis = Eigen::MatrixXd::Zero(rs->dim, 0);
    rs->cbasis = Eigen::MatrixXcd::Zero(rs->dim, 0);
    slot = std::move(rs);
    return *slot;
  }
  const long long nn = n();
  std::vector<Eigen::VectorXd> gens;
  for (int p = 0; p + 2 <= r; ++p) {
    long long pre = 1, post = 1;
    for (int k = 0; k < p; ++k) pre *= nn;
    for (int k = p + 2; k < r; ++k) post *= nn;
    for (Elem g : S2_) {
      for (long long u = 0; u < pre; ++u)
        for (long long v = 0; v < post; ++v) {
          Eigen::VectorXd vec = Eigen::VectorXd::Zero(rs->dim);
          for (auto [i, j] : pairs_[g]) vec((((u * nn) + i) * nn + j) * post + v) += 1.0;
          gens.push_back(std::move(vec));
        }
    }
  }
  Eigen::MatrixXd A(rs->dim, static_cast<Eigen::Index>(gens.size()));
  for (size_t c = 0; c < gens.size(); ++c) A.col(static_cast<Eigen::Index>(c)) = gens[c];
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(A);
  qr.setThreshold(1e-10);
  rs->rank = static_cast<int>(qr.rank());
  Eigen::MatrixXd Q = qr.householderQ();
  rs->basis = Q.leftCols(rs->rank);
  rs->cbasis = rs->basis.cast<cplx_t>();
  slot = std::move(rs);
  return *slot;
}

std::string GroupLattice::element_list(const std::vector<Elem>& xs) const {
  std::string out = "{";
  for (size_t k = 0; k < xs.size(); ++k) out += (k ? "," : "") + label(xs[k]);
  return out + "}";
}

LatticePtr build_lattice(GroupPtr G, std::vector<Elem> S, LatticeOptions opts) {
  return std::make_shared<const GroupLattice>(std::move(G), std::move(S), opts);
}

LatticePtr build_lattice(std::string_view group_spec, std::string_view S_list, LatticeOptions opts) {
  GroupPtr G = build_group(group_spec);
  auto S = parse_elements(*G, S_list);
  return build_lattice(std::move(G), std::move(S), opts);
}

std::vector<std::vector<Elem>> connected_components(const GroupLattice& L) {
  const int N = L.order();
  std::vector<int> parent(static_cast<size_t>(N));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (Elem g = 0; g < N; ++g)
    for (Elem h : L.S()) {
      int a = find(g), b = find(L.mul(g, h));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  std::map<int, std::vector<Elem>> groups;
  for (Elem g = 0; g < N; ++g) groups[find(g)].push_back(g);
  std::vector<std::vector<Elem>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  return out;
}

Polygons enumerate_polygons(const GroupLattice& L) {
  Polygons P;
  for (int i = 0; i < L.n(); ++i)
    for (int j = 0; j < L.n(); ++j) {
      Elem a = L.s(i), b = L.s(j);
      Elem p = L.mul(a, b);
      if (p == 0 && i <= j) P.biangles.emplace_back(a, b);
      if (L.in_S(p)) P.triangles.push_back({p, a, b});
    }
  for (Elem g : L.S2()) {
    QuadrangleClass q{g, {}};
    for (auto [i, j] : L.pairs_of(g)) q.pairs.emplace_back(L.s(i), L.s(j));
    P.quadrangles.push_back(std::move(q));
  }
  return P;
}

std::optional<std::pair<Elem, Elem>> bicovariance_violation(const GroupLattice& L) {
  for (Elem h : L.S())
    for (Elem k : L.S())
      if (!L.in_S(conjugate(L.group(), h, k))) return std::make_pair(h, k);
  return std::nullopt;
}

bool is_bicovariant(const GroupLattice& L) { return !bicovariance_violation(L).has_value(); }

bool is_right_differentiable(const GroupLattice& L, Elem g) {
  Elem gi = L.inv(g);
  for (Elem h : L.S())
    if (!L.in_S(conjugate(L.group(), gi, h))) return false;
  return true;
}

bool is_universal(const GroupLattice& L) {
  std::vector<Elem> Se{0};
  Se.insert(Se.end(), L.S().begin(), L.S().end());
  return is_subgroup(L.group(), Se);
}

std::vector<std::vector<Elem>> enumerate_cycles(const GroupLattice& L, Elem g) {
  if (auto bad = bicovariance_violation(L))
    throw std::invalid_argument("lattice is not bicovariant: ad(" + L.label(bad->first) + ")" +
                                L.label(bad->second) + " is not in S");
  const auto& pairs = L.pairs_of(g);
  std::vector<bool> used(pairs.size(), false);
  auto index_of = [&](int i, int j) {
    for (size_t k = 0; k < pairs.size(); ++k)
      if (pairs[k].first == i && pairs[k].second == j) return static_cast<int>(k);
    throw std::logic_error("cycle left its class");
  };
  std::vector<std::vector<Elem>> cycles;
  for (size_t start = 0; start < pairs.size(); ++start) {
    if (used[start]) continue;
    std::vector<Elem> cyc;
    int k = static_cast<int>(start);
    while (!used[k]) {
      used[k] = true;
      auto [i, j] = pairs[k];
      cyc.push_back(L.s(i));
      Elem b = L.s(j);
      Elem next = conjugate(L.group(), L.inv(b), L.s(i));
      k = index_of(j, L.pos(next));
    }
    cycles.push_back(std::move(cyc));
  }
  return cycles;
}

DifferentiabilityReport is_differentiable_map(const GroupLattice& L, const SiteMap& phi) {
  DifferentiabilityReport rep;
  for (Elem g = 0; g < L.order(); ++g)
    for (Elem h : L.S()) {
      Elem to = L.mul(g, h);
      if (!L.in_Se(L.mul(L.inv(phi(g)), phi(to)))) rep.violations.push_back({g, to, h});
    }
  rep.differentiable = rep.violations.empty();
  if (!rep.differentiable) rep.witness = rep.violations.front();
  return rep;
}

namespace {
std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}
}  // namespace

std::string export_dot(const GroupLattice& L) {
  std::ostringstream os;
  os << "digraph lattice {\n";
  for (Elem g = 0; g < L.order(); ++g) os << "  " << quoted(L.label(g)) << ";\n";
  for (Elem g = 0; g < L.order(); ++g)
    for (Elem h : L.S())
      os << "  " << quoted(L.label(g)) << " -> " << quoted(L.label(L.mul(g, h)))
         << " [label=" << quoted(L.label(h)) << "];\n";
  os << "}\n";
  return os.str();
}

}  // namespace cayley
