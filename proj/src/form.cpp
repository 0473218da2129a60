#include "cayley/form.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "cayley/exact.hpp"

namespace cayley {

namespace {

long long power(int n, int r) {
  long long p = 1;
  for (int k = 0; k < r; ++k) p *= n;
  return p;
}

void same_lattice(const Form& a, const Form& b) {
  if (a.lattice_ptr() != b.lattice_ptr()) throw std::invalid_argument("forms live on different lattices");
}

void same_grade(const Form& a, const Form& b) {
  same_lattice(a, b);
  if (a.grade() != b.grade())
    throw std::invalid_argument("grade mismatch: " + std::to_string(a.grade()) + " vs " +
                                std::to_string(b.grade()));
}

}  // namespace

Form::Form(LatticePtr L, int grade) : L_(std::move(L)), grade_(grade) {
  if (grade < 0) throw std::invalid_argument("negative grade");
  words_ = power(L_->n(), grade);
  c_ = Eigen::VectorXcd::Zero(L_->order() * words_);
}

Eigen::Map<Eigen::MatrixXcd> Form::table() { return {c_.data(), words_, L_->order()}; }

Eigen::Map<const Eigen::MatrixXcd> Form::table() const { return {c_.data(), words_, L_->order()}; }

Function Form::coefficient(long long word) const { return table().row(word).transpose(); }

void Form::set_coefficient(long long word, const Function& f) { table().row(word) = f.transpose(); }

double Form::max_abs() const { return c_.size() ? c_.cwiseAbs().maxCoeff() : 0.0; }

Form& Form::operator+=(const Form& o) {
  same_grade(*this, o);
  c_ += o.c_;
  return *this;
}

Form& Form::operator-=(const Form& o) {
  same_grade(*this, o);
  c_ -= o.c_;
  return *this;
}

Form& Form::operator*=(cplx s) {
  c_ *= s;
  return *this;
}

Form operator+(Form a, const Form& b) { return a += b; }
Form operator-(Form a, const Form& b) { return a -= b; }
Form operator-(Form a) { return a *= -1.0; }
Form operator*(cplx s, Form a) { return a *= s; }

Form operator*(const Function& f, const Form& w) {
  Form r = w;
  auto t = r.table();
  for (Elem g = 0; g < w.lattice().order(); ++g) t.col(g) *= f(g);
  return r;
}

Form operator*(const Form& w, const Function& f) {
  Form r = w;
  auto t = r.table();
  const auto& prod = w.lattice().word_products(w.grade());
  for (Elem g = 0; g < w.lattice().order(); ++g)
    for (long long k = 0; k < w.words(); ++k) t(k, g) *= f(w.lattice().mul(g, prod[k]));
  return r;
}

Form mul(const Form& a, const Form& b) {
  same_lattice(a, b);
  const GroupLattice& L = a.lattice();
  Form r(a.lattice_ptr(), a.grade() + b.grade());
  const auto& prod = L.word_products(a.grade());
  const long long wb = b.words();
  for (Elem g = 0; g < L.order(); ++g)
    for (long long w = 0; w < a.words(); ++w) {
      cplx c = a.at(g, w);
      if (c == 0.0) continue;
      Elem g2 = L.mul(g, prod[w]);
      r.data().segment(g * r.words() + w * wb, wb) += c * b.data().segment(g2 * wb, wb);
    }
  return r;
}

Form operator*(const Form& a, const Form& b) { return mul(a, b); }

std::vector<int> word_letters(long long word, int grade, int n) {
  std::vector<int> out(static_cast<size_t>(grade));
  for (int k = grade - 1; k >= 0; --k) {
    out[k] = static_cast<int>(word % n);
    word /= n;
  }
  return out;
}

long long word_index(const std::vector<int>& letters, int n) {
  long long w = 0;
  for (int l : letters) w = w * n + l;
  return w;
}

Form function_form(const LatticePtr& L, const Function& f) {
  Form r(L, 0);
  r.data() = f;
  return r;
}

Form theta(const LatticePtr& L, int pos) { return monomial(L, {pos}); }

Form theta(const LatticePtr& L) {
  Form r(L, 1);
  r.table().setOnes();
  return r;
}

Form monomial(const LatticePtr& L, const std::vector<int>& letters) {
  Form r(L, static_cast<int>(letters.size()));
  r.table().row(word_index(letters, L->n())).setOnes();
  return r;
}

Form delta_e(const LatticePtr& L) {
  Form r(L, 2);
  for (Elem h : L->S0()) r.table().row(word_index({L->pos(h), L->pos(L->inv(h))}, L->n())).setOnes();
  return r;
}

Form graded_commutator(const Form& a, const Form& b) {
  double sign = (a.grade() * b.grade()) % 2 ? -1.0 : 1.0;
  return mul(a, b) - sign * mul(b, a);
}

Form Delta(const Form& w) {
  const GroupLattice& L = w.lattice();
  const int n = L.n(), r = w.grade();
  Form out(w.lattice_ptr(), r + 1);
  if (r == 0) return out;
  auto src = w.table();
  auto dst = out.table();
  for (long long word = 0; word < w.words(); ++word) {
    if (src.row(word).isZero(0)) continue;
    std::vector<int> letters = word_letters(word, r, n);
    for (int i = 0; i < r; ++i) {
      double sign = i % 2 ? -1.0 : 1.0;
      for (auto [a, b] : L.pairs_of(L.s(letters[i]))) {
        std::vector<int> nw(letters.begin(), letters.begin() + i);
        nw.push_back(a);
        nw.push_back(b);
        nw.insert(nw.end(), letters.begin() + i + 1, letters.end());
        dst.row(word_index(nw, n)) += sign * src.row(word);
      }
    }
  }
  return out;
}

Form d(const Form& w) {
  Form th = theta(w.lattice_ptr());
  return graded_commutator(th, w) - Delta(w);
}

double relation_residual(const Form& a, const Form& b) {
  same_grade(a, b);
  Form diff = a - b;
  if (diff.grade() < 2) return diff.max_abs();
  const RelationSpace& rs = diff.lattice().relations(diff.grade());
  auto t = diff.table();
  Eigen::MatrixXcd perp = t;
  if (rs.rank > 0) perp -= rs.cbasis * (rs.cbasis.adjoint() * t);
  return perp.colwise().norm().maxCoeff();
}

bool forms_equal(const Form& a, const Form& b, double tol) {
  if (tol < 0) tol = a.lattice().tol();
  double scale = std::max({1.0, a.max_abs(), b.max_abs()});
  return relation_residual(a, b) <= tol * scale;
}

bool is_zero_mod_relations(const Form& a, double tol) {
  return forms_equal(a, Form(a.lattice_ptr(), a.grade()), tol);
}

Form normal_form(const Form& w) {
  Form r = w;
  if (w.grade() < 2) return r;
  const RelationSpace& rs = w.lattice().relations(w.grade());
  if (rs.rank == 0) return r;
  auto t = r.table();
  Eigen::MatrixXcd proj = rs.cbasis * (rs.cbasis.adjoint() * t);
  t -= proj;
  return r;
}

TwoFormParts decompose_2form(const Form& psi) {
  if (psi.grade() != 2) throw std::invalid_argument("decompose_2form needs a 2-form");
  const GroupLattice& L = psi.lattice();
  const int n = L.n();
  TwoFormParts parts;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Elem g = L.mul(L.s(i), L.s(j));
      Function raw = psi.coefficient(i * n + j);
      if (g == 0) {
        parts.biangle.push_back({g, L.s(i), L.s(j), raw});
      } else if (L.in_S(g)) {
        parts.triangle.push_back({g, L.s(i), L.s(j), raw});
      }
    }
  for (Elem g : L.S2()) {
    const auto& cls = L.pairs_of(g);
    Function total = zero(L.group());
    for (auto [a, b] : cls) total += psi.coefficient(a * n + b);
    for (auto [a, b] : cls) {
      Function comp = static_cast<double>(cls.size()) * psi.coefficient(a * n + b) - total;
      parts.quadrangle.push_back({g, L.s(a), L.s(b), comp});
    }
  }
  return parts;
}

namespace {

void require_bicovariant(const GroupLattice& L) {
  if (!is_bicovariant(L)) throw std::invalid_argument("operation needs a bicovariant lattice");
}

Form braid(const Form& t, bool inverse) {
  if (t.grade() != 2) throw std::invalid_argument("braiding acts on grade 2");
  const GroupLattice& L = t.lattice();
  require_bicovariant(L);
  const int n = L.n();
  Form out(t.lattice_ptr(), 2);
  auto src = t.table();
  auto dst = out.table();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Elem a = L.s(i), b = L.s(j);
      long long target;
      if (!inverse) {
        target = L.pos(conjugate(L.group(), a, b)) * n + i;
      } else {
        target = j * n + L.pos(conjugate(L.group(), L.inv(b), a));
      }
      dst.row(target) += src.row(i * n + j);
    }
  return out;
}

}  // namespace

Form sigma(const Form& t) { return braid(t, false); }
Form sigma_inv(const Form& t) { return braid(t, true); }

Form antisymmetrize(const Form& t) { return 0.5 * (t - sigma(t)); }

Form wedge(const Form& a, const Form& b) {
  if (a.grade() != 1 || b.grade() != 1) throw std::invalid_argument("wedge is defined on 1-forms here");
  return antisymmetrize(mul(a, b));
}

std::optional<Function> solve_exact(const Form& alpha, double tol) {
  if (alpha.grade() != 1) throw std::invalid_argument("solve_exact needs a 1-form");
  const GroupLattice& L = alpha.lattice();
  if (tol < 0) tol = L.tol();
  const int N = L.order(), n = L.n();
  Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(N) * n, N);
  Eigen::VectorXcd rhs(static_cast<Eigen::Index>(N) * n);
  for (Elem g = 0; g < N; ++g)
    for (int i = 0; i < n; ++i) {
      Eigen::Index row = static_cast<Eigen::Index>(g) * n + i;
      M(row, L.mul(g, L.s(i))) += 1.0;
      M(row, g) -= 1.0;
      rhs(row) = alpha.at(g, i);
    }
  Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXcd> cod(M);
  Function f = cod.solve(rhs);
  double res = (M * f - rhs).cwiseAbs().maxCoeff();
  if (res > tol * std::max(1.0, alpha.max_abs())) return std::nullopt;
  for (const auto& comp : connected_components(L)) {
    cplx base = f(comp.front());
    for (Elem g : comp) f(g) -= base;
  }
  return f;
}

namespace {

// Integer coordinates of a 2-form in the quotient by the relations: plain
// coefficients off the quadrangle classes, differences to the first pair of
// the class inside one. The kernel of this map is exactly the relation span.
std::vector<long long> quotient_coordinates(const Form& w) {
  const GroupLattice& L = w.lattice();
  const int n = L.n();
  std::vector<long long> out;
  auto val = [&](Elem g, long long word) { return std::llround(w.at(g, word).real()); };
  for (Elem g = 0; g < L.order(); ++g) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (L.in_Se(L.mul(L.s(i), L.s(j)))) out.push_back(val(g, i * n + j));
    for (Elem k : L.S2()) {
      const auto& cls = L.pairs_of(k);
      long long first = val(g, cls[0].first * n + cls[0].second);
      for (size_t t = 1; t < cls.size(); ++t) out.push_back(val(g, cls[t].first * n + cls[t].second) - first);
    }
  }
  return out;
}

}  // namespace

int h1_dimension(const LatticePtr& L) {
  const int N = L->order(), n = L->n();
  std::vector<std::vector<long long>> d1_rows, d0_rows;
  for (Elem g = 0; g < N; ++g)
    for (int i = 0; i < n; ++i) {
      Form basis(L, 1);
      basis.at(g, i) = 1.0;
      d1_rows.push_back(quotient_coordinates(d(basis)));
    }
  for (Elem g = 0; g < N; ++g) {
    Form df = d(function_form(L, indicator(L->group(), g)));
    std::vector<long long> row;
    for (long long k = 0; k < df.data().size(); ++k) row.push_back(std::llround(df.data()(k).real()));
    d0_rows.push_back(std::move(row));
  }
  int closed = N * n - rational_rank(d1_rows);
  int exact = rational_rank(d0_rows);
  return closed - exact;
}

Form pullback_form(const SiteMap& phi, const Form& w) {
  const LatticePtr& Lp = w.lattice_ptr();
  const GroupLattice& L = *Lp;
  const GroupTable& G = L.group();
  if (w.grade() == 0) return function_form(Lp, compose(w.data(), phi.map));
  auto rep = is_differentiable_map(L, phi);
  if (!rep.differentiable)
    throw std::invalid_argument("map is not differentiable: arrow " + L.label(rep.witness->from) + " -> " +
                                L.label(rep.witness->to) + " is broken");
  const int N = L.order(), n = L.n();
  auto pulled_indicator = [&](Elem g) {
    Function f = zero(G);
    for (Elem x = 0; x < N; ++x)
      if (phi(x) == g) f(x) = 1.0;
    return f;
  };
  // phi^* theta^h as sparse rows: for every letter and site, the (letter, coeff) terms.
  std::vector<std::vector<std::vector<std::pair<int, cplx>>>> P(
      static_cast<size_t>(n), std::vector<std::vector<std::pair<int, cplx>>>(static_cast<size_t>(N)));
  for (int i = 0; i < n; ++i) {
    Form th(Lp, 1);
    for (Elem g = 0; g < N; ++g) {
      Function a = pulled_indicator(g);
      if (a.isZero(0)) continue;
      th += a * d(function_form(Lp, pulled_indicator(L.mul(g, L.s(i)))));
    }
    for (Elem x = 0; x < N; ++x)
      for (int k = 0; k < n; ++k)
        if (std::abs(th.at(x, k)) > 0.5 * L.tol()) P[i][x].emplace_back(k, th.at(x, k));
  }
  const int r = w.grade();
  Form out(Lp, r);
  std::vector<int> letters;
  std::function<void(int, Elem, cplx, long long, Elem)> walk = [&](int t, Elem site, cplx acc, long long outw,
                                                                   Elem x) {
    if (t == r) {
      out.at(x, outw) += acc;
      return;
    }
    for (auto [k, v] : P[letters[t]][site]) walk(t + 1, L.mul(site, L.s(k)), acc * v, outw * n + k, x);
  };
  for (Elem x = 0; x < N; ++x)
    for (long long word = 0; word < w.words(); ++word) {
      cplx c = w.at(phi(x), word);
      if (c == 0.0) continue;
      letters = word_letters(word, r, n);
      walk(0, x, c, 0, x);
    }
  return out;
}

Form right_pullback_form(Elem g, const Form& w) {
  return pullback_form(SiteMap::right_translation(w.lattice().group(), g), w);
}

}  // namespace cayley
