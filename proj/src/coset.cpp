#include "cayley/coset.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace cayley {

int CosetDiagram::multiplicity(int K, int Kp) const {
  return static_cast<int>(std::count(action[K].begin(), action[K].end(), Kp));
}

std::string CosetDiagram::label(int K) const {
  if (rep[K] == 0) return "H";
  return "H" + L->label(rep[K]);
}

CosetDiagram build_coset_diagram(const LatticePtr& L, const std::vector<Elem>& H) {
  const GroupTable& G = L->group();
  std::vector<Elem> sorted = H;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (!is_subgroup(G, sorted)) throw std::invalid_argument("H = " + L->element_list(sorted) + " is not a subgroup");
  CosetDiagram D;
  D.L = L;
  D.H = sorted;
  D.coset_of.assign(static_cast<size_t>(G.order()), -1);
  for (Elem g = 0; g < G.order(); ++g) {
    if (D.coset_of[g] >= 0) continue;
    std::vector<Elem> K;
    for (Elem k : sorted) K.push_back(G.mul(k, g));
    std::sort(K.begin(), K.end());
    int idx = static_cast<int>(D.cosets.size());
    for (Elem x : K) D.coset_of[x] = idx;
    D.rep.push_back(K.front());
    D.cosets.push_back(std::move(K));
  }
  for (int K = 0; K < D.size(); ++K) {
    std::vector<int> row;
    for (Elem h : L->S()) row.push_back(D.coset_of[G.mul(D.rep[K], h)]);
    D.action.push_back(std::move(row));
  }
  return D;
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

std::string export_coset_dot(const CosetDiagram& D) {
  std::ostringstream os;
  os << "digraph cosets {\n";
  for (int K = 0; K < D.size(); ++K) os << "  " << quoted(D.label(K)) << ";\n";
  for (int K = 0; K < D.size(); ++K)
    for (int p = 0; p < D.L->n(); ++p)
      os << "  " << quoted(D.label(K)) << " -> " << quoted(D.label(D.action[K][p]))
         << " [label=" << quoted(D.L->label(D.L->s(p))) << "];\n";
  os << "}\n";
  return os.str();
}

Function coset_indicator(const CosetDiagram& D, int K) {
  Function f = zero(D.L->group());
  for (Elem g : D.cosets[K]) f(g) = 1.0;
  return f;
}

bool is_coset_function(const CosetDiagram& D, const Function& f, double tol) {
  for (const auto& K : D.cosets)
    for (Elem g : K)
      if (std::abs(f(g) - f(K.front())) > tol) return false;
  return true;
}

Form coset_d_indicator(const CosetDiagram& D, int K) {
  const GroupLattice& L = *D.L;
  Form r(D.L, 1);
  Function eK = coset_indicator(D, K);
  for (int p = 0; p < L.n(); ++p) {
    // K h^{-1} is the coset K' with K' h = K
    Function back = zero(L.group());
    for (int Kp = 0; Kp < D.size(); ++Kp)
      if (D.action[Kp][p] == K) back += coset_indicator(D, Kp);
    r.set_coefficient(p, back - eK);
  }
  return r;
}

Form coset_theta_times_indicator(const CosetDiagram& D, int pos, int K) {
  Function back = zero(D.L->group());
  for (int Kp = 0; Kp < D.size(); ++Kp)
    if (D.action[Kp][pos] == K) back += coset_indicator(D, Kp);
  return back * theta(D.L, pos);
}

namespace {

// Largest per-site distance of target from the span of the generators plus the 2-form relations.
double ideal_residual(const Form& target, const std::vector<Form>& gens) {
  const GroupLattice& L = target.lattice();
  const RelationSpace& rs = L.relations(2);
  double worst = 0;
  for (Elem g = 0; g < L.order(); ++g) {
    Eigen::MatrixXcd A(target.words(), static_cast<Eigen::Index>(gens.size()) + rs.rank);
    for (size_t k = 0; k < gens.size(); ++k) A.col(static_cast<Eigen::Index>(k)) = gens[k].table().col(g);
    if (rs.rank > 0) A.rightCols(rs.rank) = rs.cbasis;
    Eigen::VectorXcd b = target.table().col(g);
    if (b.norm() == 0) continue;
    Eigen::VectorXcd x = A.completeOrthogonalDecomposition().solve(b);
    worst = std::max(worst, (A * x - b).norm());
  }
  return worst;
}

}  // namespace

std::vector<ReductionRelation> reduction_relations(const CosetDiagram& D) {
  const LatticePtr& Lp = D.L;
  const GroupLattice& L = *Lp;
  std::vector<ReductionRelation> out;
  for (int K = 0; K < D.size(); ++K) {
    Function eK = coset_indicator(D, K);
    std::map<int, std::vector<int>> by_target;
    for (int p = 0; p < L.n(); ++p) by_target[D.action[K][p]].push_back(p);
    for (auto& [target, ps] : by_target) {
      if (target == K)
        for (int p : ps) out.push_back({ReductionRelation::Kind::loop, K, p, p, eK * theta(Lp, p)});
      else
        for (size_t k = 1; k < ps.size(); ++k)
          out.push_back({ReductionRelation::Kind::multi_edge, K, ps[k - 1], ps[k],
                         eK * (theta(Lp, ps[k - 1]) - theta(Lp, ps[k]))});
    }
  }
  std::vector<Form> gens;
  for (const auto& r : out)
    for (int p = 0; p < L.n(); ++p) {
      gens.push_back(mul(theta(Lp, p), r.rho));
      gens.push_back(mul(r.rho, theta(Lp, p)));
    }
  for (auto& r : out) {
    Form s = d(r.rho) + Delta(r.rho);
    r.d_plus_delta = relation_residual(s, Form(Lp, 2));
    double scale = std::max(1.0, s.max_abs());
    r.closed = ideal_residual(s, gens) <= L.tol() * scale;
  }
  return out;
}

}  // namespace cayley
