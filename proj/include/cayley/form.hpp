#pragma once

#include <optional>
#include <vector>

#include "cayley/function.hpp"
#include "cayley/lattice.hpp"

namespace cayley {

/// Sum of c(g,w) e^g theta^{w_1}...theta^{w_r} over sites g and words w in S^r.
/// Letters are S-positions; words are numbered lexicographically with the
/// first letter most significant. Coefficients are stored densely, site-major,
/// so the coefficient block of one site is contiguous.
class Form {
 public:
  Form() = default;
  Form(LatticePtr L, int grade);

  const LatticePtr& lattice_ptr() const { return L_; }
  const GroupLattice& lattice() const { return *L_; }
  int grade() const { return grade_; }
  long long words() const { return words_; }

  cplx& at(Elem site, long long word) { return c_(site * words_ + word); }
  cplx at(Elem site, long long word) const { return c_(site * words_ + word); }
  Eigen::VectorXcd& data() { return c_; }
  const Eigen::VectorXcd& data() const { return c_; }
  /// Columns are sites, rows are words.
  Eigen::Map<Eigen::MatrixXcd> table();
  Eigen::Map<const Eigen::MatrixXcd> table() const;

  /// The coefficient of one word as a function of the site.
  Function coefficient(long long word) const;
  void set_coefficient(long long word, const Function& f);

  double max_abs() const;

  Form& operator+=(const Form& o);
  Form& operator-=(const Form& o);
  Form& operator*=(cplx s);

 private:
  LatticePtr L_;
  int grade_ = 0;
  long long words_ = 1;
  Eigen::VectorXcd c_;
};

Form operator+(Form a, const Form& b);
Form operator-(Form a, const Form& b);
Form operator-(Form a);
Form operator*(cplx s, Form a);
/// Left multiplication by a function: site-wise scaling.
Form operator*(const Function& f, const Form& w);
/// Right multiplication moves f to the left: (e^g theta^w) f = f(g w_1...w_r) e^g theta^w.
Form operator*(const Form& w, const Function& f);
Form operator*(const Form& a, const Form& b);
Form mul(const Form& a, const Form& b);

std::vector<int> word_letters(long long word, int grade, int n);
long long word_index(const std::vector<int>& letters, int n);

Form function_form(const LatticePtr& L, const Function& f);
/// theta^{s_pos}
Form theta(const LatticePtr& L, int pos);
/// theta = sum_h theta^h
Form theta(const LatticePtr& L);
/// The left-invariant monomial theta^{w_1}...theta^{w_r}.
Form monomial(const LatticePtr& L, const std::vector<int>& letters);
/// sum over h in S0 of theta^h theta^{h^{-1}}
Form delta_e(const LatticePtr& L);

/// ab - (-1)^{|a||b|} ba
Form graded_commutator(const Form& a, const Form& b);

Form Delta(const Form& w);
/// dw = [theta, w] - Delta(w)
Form d(const Form& w);

/// Largest per-site norm of the component of a - b orthogonal to the relations.
double relation_residual(const Form& a, const Form& b);
/// Equality modulo the 2-form relation ideal. The residual is compared with
/// tol * max(1, |a|, |b|); tol < 0 uses the lattice tolerance.
bool forms_equal(const Form& a, const Form& b, double tol = -1);
bool is_zero_mod_relations(const Form& a, double tol = -1);
/// Orthogonal projection onto the complement of the relation span.
Form normal_form(const Form& w);

struct TwoFormParts {
  struct Entry {
    Elem g;   // the product h1 h2
    Elem h1, h2;
    Function value;
  };
  std::vector<Entry> biangle;     // raw coefficients, h1 h2 = e
  std::vector<Entry> triangle;    // raw coefficients, h1 h2 in S
  std::vector<Entry> quadrangle;  // quadrangle components |g| c - sum over the class
};

TwoFormParts decompose_2form(const Form& psi);

/// Braiding on the free tensor square: theta^a (x) theta^b -> theta^{ad(a)b} (x) theta^a.
/// Grade-2 forms are read as elements of Omega^1 (x) Omega^1 here.
Form sigma(const Form& t);
Form sigma_inv(const Form& t);
/// (1/2)(id - sigma)
Form antisymmetrize(const Form& t);
/// a wedge b = (1/2)(id - sigma)(a (x) b)
Form wedge(const Form& a, const Form& b);

/// Solves ell_h f = alpha_h for all h; f vanishes at the smallest element of
/// every component. Nothing if alpha is not exact.
std::optional<Function> solve_exact(const Form& alpha, double tol = -1);
/// dim(closed 1-forms) - dim(exact 1-forms), with exact rational ranks.
int h1_dimension(const LatticePtr& L);

/// phi^* on forms for a differentiable phi. theta^h pulls back to
/// sum_g phi^*(e^g) d phi^*(e^{gh}); higher grades follow multiplicatively.
Form pullback_form(const SiteMap& phi, const Form& w);
/// R^*_g on forms.
Form right_pullback_form(Elem g, const Form& w);

}  // namespace cayley
