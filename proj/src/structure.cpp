#include "obsalg/structure.hpp"

#include <algorithm>
#include <random>

#include "obsalg/errors.hpp"
#include "obsalg/roots.hpp"
#include "obsalg/spectrum.hpp"

namespace obsalg {

namespace {

constexpr int kMaxSeeds = 16;
constexpr int kRandomCandidates = 256;

Scalar trace(const Matrix& m) {
  Scalar t;
  for (std::size_t k = 0; k < m.rows(); ++k) t += m(k, k);
  return t;
}

std::size_t first_nonzero(const Vector& v) {
  std::size_t k = 0;
  while (k < v.size() && v[k].is_zero()) ++k;
  return k;
}

bool lex_less_vec(const Vector& a, const Vector& b) {
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] == b[k]) continue;
    return lex_less(a[k], b[k]);
  }
  return false;
}

std::vector<Vector> span_basis(const std::vector<Vector>& vs) {
  std::vector<Vector> out;
  for (auto idx : independent_subset(vs)) out.push_back(vs[idx]);
  return out;
}

/// u A u for an idempotent u.
std::vector<Vector> corner_basis(const AssocAlgebra& alg, const Vector& u) {
  std::vector<Vector> vs;
  for (std::size_t i = 0; i < alg.dim(); ++i) vs.push_back(alg.mul(alg.mul(u, unit_vector(alg.dim(), i)), u));
  return span_basis(vs);
}

/// Random integer combination with coefficients in [-3, 3].
Vector random_combination(const std::vector<Vector>& basis, std::size_t n, std::mt19937_64& rng) {
  Vector x = zero_vector(n);
  for (const auto& b : basis) {
    long c = static_cast<long>(rng() % 7) - 3;
    if (c != 0) x = x + Scalar(c) * b;
  }
  return x;
}

/// Splits an idempotent u whose corner is M_k(C), k >= 2, into primitive
/// orthogonal idempotents summing to u.
class CornerSplitter {
 public:
  CornerSplitter(const AssocAlgebra& alg, std::uint64_t seed) : alg_(alg), rng_(seed) {}

  std::vector<Vector> split(const Vector& u) {
    std::vector<Vector> basis = corner_basis(alg_, u);
    if (basis.size() <= 1) return {u};
    Vector w = zero_divisor(u, basis);
    // w is singular but not nilpotent in the corner: its minimal polynomial is
    // x^a g(x) with g(0) != 0 and deg g >= 1. Then t(w) g(w) is the Fitting
    // projector onto the generalized 0-eigenspace.
    Polynomial p = minimal_polynomial(alg_, w, u);
    std::size_t a = 0;
    while (p.coeffs()[a].is_zero()) ++a;
    std::vector<Scalar> xa(a + 1);
    xa[a] = Scalar(1);
    Polynomial g(std::vector<Scalar>(p.coeffs().begin() + static_cast<long>(a), p.coeffs().end()));
    Bezout bz = extended_gcd(Polynomial(xa), g);
    Vector e0 = alg_.evaluate(bz.t * g, w, u);
    Vector rest = u - e0;
    std::vector<Vector> out = split(rest);
    for (auto& f : split(e0)) out.push_back(std::move(f));
    return out;
  }

 private:
  // A singular, non-nilpotent element of the corner with unit u.
  Vector zero_divisor(const Vector& u, const std::vector<Vector>& basis) {
    auto try_candidate = [&](const Vector& x) -> std::optional<Vector> {
      if (is_zero(x)) return std::nullopt;
      Polynomial p = minimal_polynomial(alg_, x, u);
      if (p.degree() <= 1) return std::nullopt;
      std::optional<Vector> singular;
      if (p.coeffs()[0].is_zero()) {
        singular = x;
      } else if (auto roots = gaussian_rational_roots(p); !roots.empty()) {
        singular = x - roots.front() * u;
      } else {
        Polynomial sf = square_free_part(p);
        if (sf.degree() < p.degree()) singular = alg_.evaluate(sf, x, u);
      }
      if (!singular) return std::nullopt;
      Polynomial q = minimal_polynomial(alg_, *singular, u);
      bool nilpotent = true;
      for (int k = 0; k < q.degree(); ++k) nilpotent = nilpotent && q.coeffs()[static_cast<std::size_t>(k)].is_zero();
      if (!nilpotent) return singular;
      // y nilpotent and nonzero: some y b has nonzero trace, hence is not
      // nilpotent, and it stays singular.
      for (const auto& b : basis) {
        Vector z = alg_.mul(*singular, b);
        if (!trace(alg_.left_matrix(z)).is_zero()) return z;
      }
      return std::nullopt;
    };
    for (const auto& b : basis)
      if (auto z = try_candidate(b)) return *z;
    for (const auto& b : basis)
      for (const auto& c : basis)
        if (auto z = try_candidate(alg_.mul(b, c))) return *z;
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = i + 1; j < basis.size(); ++j) {
        if (auto z = try_candidate(basis[i] + basis[j])) return *z;
        if (auto z = try_candidate(basis[i] - basis[j])) return *z;
      }
    for (int attempt = 0; attempt < kRandomCandidates; ++attempt)
      if (auto z = try_candidate(random_combination(basis, alg_.dim(), rng_))) return *z;
    throw MaxRetriesExceeded({}, "no zero divisor with Gaussian-rational eigenvalues found in a simple block");
  }

  const AssocAlgebra& alg_;
  std::mt19937_64 rng_;
};

Scalar ratio(const Vector& num, const Vector& den) {
  std::size_t k = first_nonzero(den);
  if (k == den.size()) throw Singular("ratio against the zero vector");
  return num[k] / den[k];
}

WedderburnBlock build_block(const AssocAlgebra& alg, const Vector& f, std::size_t size, std::uint64_t seed) {
  const std::size_t n = alg.dim();
  WedderburnBlock blk;
  blk.size = size;
  blk.central_idempotent = f;
  std::vector<Vector> idem =
      size == 1 ? std::vector<Vector>{f} : CornerSplitter(alg, seed).split(f);
  if (idem.size() != size) throw NotSemisimple("idempotent splitting did not produce " + std::to_string(size) + " pieces");
  blk.units.assign(size * size, zero_vector(n));
  blk.units[0] = idem[0];
  std::vector<Vector> e1a(size), ea1(size);
  e1a[0] = ea1[0] = idem[0];
  for (std::size_t a = 1; a < size; ++a) {
    std::optional<Vector> up, down;
    for (std::size_t i = 0; i < n && (!up || !down); ++i) {
      Vector ei = unit_vector(n, i);
      if (!up) {
        Vector v = alg.mul(alg.mul(idem[0], ei), idem[a]);
        if (!is_zero(v)) up = v;
      }
      if (!down) {
        Vector v = alg.mul(alg.mul(idem[a], ei), idem[0]);
        if (!is_zero(v)) down = v;
      }
    }
    if (!up || !down) throw NotSemisimple("idempotents are not connected inside a simple block");
    Scalar c = ratio(alg.mul(*up, *down), idem[0]);
    e1a[a] = *up;
    ea1[a] = (Scalar(1) / c) * *down;
  }
  for (std::size_t a = 0; a < size; ++a)
    for (std::size_t b = 0; b < size; ++b)
      blk.units[a * size + b] = (a == 0) ? e1a[b] : (b == 0 ? ea1[a] : alg.mul(ea1[a], e1a[b]));
  return blk;
}

std::size_t isqrt_exact(std::size_t d) {
  std::size_t r = 0;
  while ((r + 1) * (r + 1) <= d) ++r;
  return r * r == d ? r : 0;
}

}  // namespace

std::vector<Vector> radical(const AssocAlgebra& alg) {
  const std::size_t n = alg.dim();
  std::vector<Scalar> t(n);
  for (std::size_t k = 0; k < n; ++k) t[k] = trace(alg.left_matrix(unit_vector(n, k)));
  // Row i of the system is T(e_i, .) with T(a, b) = tr(L_{ab}); a solves it iff a^T T = 0.
  Matrix tt(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Scalar s;
      for (const auto& [k, v] : alg.product().nonzeros(i, j)) s += v * t[k];
      tt(j, i) = s;
    }
  return nullspace(tt);
}

std::vector<Vector> center(const AssocAlgebra& alg) {
  const std::size_t n = alg.dim();
  Matrix m(n * n, n);
  for (std::size_t i = 0; i < n; ++i) {
    Vector ei = unit_vector(n, i);
    for (std::size_t j = 0; j < n; ++j) {
      // column j: e_j e_i - e_i e_j
      Vector d = alg.product().basis_product(j, i) - alg.product().basis_product(i, j);
      for (std::size_t k = 0; k < n; ++k) m(i * n + k, j) = d[k];
    }
  }
  return nullspace(m);
}

std::vector<Vector> hermitian_basis(const AssocAlgebra& alg) {
  if (!alg.star()) throw StarInconsistent("algebra '" + alg.label() + "' has no star structure");
  const std::size_t n = alg.dim();
  std::vector<Vector> cand, real_form;
  for (std::size_t k = 0; k < n; ++k) {
    Vector e = unit_vector(n, k), s = alg.star(e);
    cand.push_back(e + s);
    cand.push_back(Scalar::i() * (e - s));
  }
  // Independence over the reals: compare (Re, Im) coordinate vectors.
  for (const auto& v : cand) {
    Vector r(2 * n);
    for (std::size_t k = 0; k < n; ++k) {
      r[k] = Scalar(v[k].re());
      r[n + k] = Scalar(v[k].im());
    }
    real_form.push_back(std::move(r));
  }
  std::vector<Vector> out;
  for (auto idx : independent_subset(real_form)) out.push_back(cand[idx]);
  return out;
}

bool is_nilpotent(const AssocAlgebra& alg, const Vector& x) {
  Polynomial p = minimal_polynomial(alg, x);
  for (int k = 0; k < p.degree(); ++k)
    if (!p.coeffs()[static_cast<std::size_t>(k)].is_zero()) return false;
  return true;
}

std::vector<std::pair<std::size_t, std::size_t>> WedderburnResult::summary() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (const auto& b : blocks) {
    if (!out.empty() && out.back().first == b.size)
      ++out.back().second;
    else
      out.emplace_back(b.size, 1);
  }
  return out;
}

WedderburnResult wedderburn_decompose(const AssocAlgebra& alg, std::uint64_t seed) {
  if (!radical(alg).empty()) throw NotSemisimple("algebra '" + alg.label() + "' has a nonzero radical");
  const std::size_t n = alg.dim();
  WedderburnResult res;
  std::vector<Vector> z = center(alg);
  res.center_dim = z.size();

  std::vector<Vector> idempotents;
  if (z.size() == 1) {
    idempotents.push_back(alg.unit());
  } else {
    for (int attempt = 0; attempt < kMaxSeeds && idempotents.empty(); ++attempt) {
      std::uint64_t s = seed + static_cast<std::uint64_t>(attempt);
      res.seeds.push_back(s);
      std::mt19937_64 rng(s);
      Vector c = random_combination(z, n, rng);
      Polynomial p = minimal_polynomial(alg, c);
      if (static_cast<std::size_t>(p.degree()) < z.size()) continue;  // eigenvalue collision
      std::vector<Scalar> roots = gaussian_rational_roots(p);
      if (roots.size() != z.size()) continue;
      for (std::size_t r = 0; r < roots.size(); ++r) {
        Polynomial lag = Polynomial::constant(Scalar(1));
        for (std::size_t q = 0; q < roots.size(); ++q)
          if (q != r) lag = lag * ((Scalar(1) / (roots[r] - roots[q])) * Polynomial::linear(roots[q]));
        idempotents.push_back(alg.evaluate(lag, c));
      }
    }
    if (idempotents.empty())
      throw MaxRetriesExceeded(res.seeds, "central splitting failed for " + std::to_string(kMaxSeeds) + " seeds");
  }
  if (res.seeds.empty()) res.seeds.push_back(seed);

  for (const auto& f : idempotents) {
    std::vector<Vector> fa;
    for (std::size_t i = 0; i < n; ++i) fa.push_back(alg.mul(f, unit_vector(n, i)));
    std::size_t d = independent_subset(fa).size();
    std::size_t size = isqrt_exact(d);
    if (size == 0) throw NotSemisimple("simple block of non-square dimension " + std::to_string(d));
    res.blocks.push_back(build_block(alg, f, size, res.seeds.back()));
  }
  std::stable_sort(res.blocks.begin(), res.blocks.end(), [](const WedderburnBlock& a, const WedderburnBlock& b) {
    if (a.size != b.size) return a.size < b.size;
    std::size_t fa = first_nonzero(a.central_idempotent), fb = first_nonzero(b.central_idempotent);
    if (fa != fb) return fa < fb;
    return lex_less_vec(b.central_idempotent, a.central_idempotent);
  });
  std::vector<Vector> cols;
  for (const auto& b : res.blocks)
    for (const auto& u : b.units) cols.push_back(u);
  if (cols.size() != n) throw NotSemisimple("matrix units do not span the algebra");
  res.basis_change = Matrix::from_columns(cols, n);
  res.basis_change_inverse = inverse(res.basis_change);
  return res;
}

bool verify_matrix_units(const AssocAlgebra& alg, const WedderburnResult& w) {
  const std::size_t n = alg.dim();
  Vector sum = zero_vector(n);
  for (std::size_t p = 0; p < w.blocks.size(); ++p) {
    const auto& bp = w.blocks[p];
    for (std::size_t a = 0; a < bp.size; ++a) sum = sum + bp.unit(a, a);
    for (std::size_t q = 0; q < w.blocks.size(); ++q) {
      const auto& bq = w.blocks[q];
      for (std::size_t a = 0; a < bp.size; ++a)
        for (std::size_t b = 0; b < bp.size; ++b)
          for (std::size_t c = 0; c < bq.size; ++c)
            for (std::size_t d = 0; d < bq.size; ++d) {
              Vector prod = alg.mul(bp.unit(a, b), bq.unit(c, d));
              Vector want = (p == q && b == c) ? bp.unit(a, d) : zero_vector(n);
              if (prod != want) return false;
            }
    }
  }
  return sum == alg.unit();
}

std::vector<Matrix> to_block_matrices(const WedderburnResult& w, const Vector& x) {
  Vector c = w.basis_change_inverse * x;
  std::vector<Matrix> out;
  std::size_t off = 0;
  for (const auto& b : w.blocks) {
    Matrix m(b.size, b.size);
    for (std::size_t a = 0; a < b.size; ++a)
      for (std::size_t d = 0; d < b.size; ++d) m(a, d) = c[off + a * b.size + d];
    off += b.size * b.size;
    out.push_back(std::move(m));
  }
  return out;
}

Vector from_block_matrix(const WedderburnResult& w, std::size_t block, const Matrix& m) {
  const auto& b = w.blocks.at(block);
  Vector x = zero_vector(w.basis_change.rows());
  for (std::size_t a = 0; a < b.size; ++a)
    for (std::size_t d = 0; d < b.size; ++d)
      if (!m(a, d).is_zero()) x = x + m(a, d) * b.unit(a, d);
  return x;
}

std::string to_string(StarType t) {
  switch (t) {
    case StarType::Standard: return "Standard";
    case StarType::Indefinite: return "Indefinite";
    case StarType::V2: return "V2";
    case StarType::Swap: return "Swap";
  }
  return "?";
}

Matrix find_conjugator_H(std::size_t n, const std::function<Matrix(const Matrix&)>& sigma) {
  // Unknown h_{rm} at index r * n + m; equation (a, b, r, c):
  //   sum_m h_{rm} S_ab(m, c) - delta_{rb} h_{ac} = 0.
  Matrix sys(n * n * n * n, n * n);
  std::size_t row = 0;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      Matrix e(n, n);
      e(a, b) = Scalar(1);
      Matrix s = sigma(e);
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c, ++row) {
          for (std::size_t m = 0; m < n; ++m) sys(row, r * n + m) += s(m, c);
          if (r == b) sys(row, a * n + c) -= Scalar(1);
        }
    }
  std::vector<Vector> sols = nullspace(sys);
  if (sols.empty()) throw NoConjugator("no H satisfies H star(v) = v^dagger H");
  Matrix h(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) h(r, c) = sols.front()[r * n + c];
  Matrix herm = h + h.adjoint();
  if (herm.is_zero()) herm = Scalar::i() * (h - h.adjoint());
  // Sign: first nonzero diagonal entry positive, else first nonzero entry's
  // leading component positive.
  Scalar pivot;
  for (std::size_t k = 0; k < n && pivot.is_zero(); ++k) pivot = herm(k, k);
  for (std::size_t r = 0; r < n && pivot.is_zero(); ++r)
    for (std::size_t c = 0; c < n && pivot.is_zero(); ++c) pivot = herm(r, c);
  int sign = sgn(pivot.re()) != 0 ? sgn(pivot.re()) : sgn(pivot.im());
  Rational scale = 0;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) scale = std::max(scale, herm(r, c).max_component());
  Matrix out = Scalar(Rational(sign) / scale) * herm;
  try {
    inverse(out);
  } catch (const Singular&) {
    throw NoConjugator("the conjugation equation only has singular solutions");
  }
  return out;
}

namespace {

/// u u^dagger H for an isotropic u (u^dagger H u = 0), searched over small
/// Gaussian integers along pairs of opposite-sign directions of H.
std::optional<Matrix> isotropic_nilpotent(const Matrix& h) {
  CongruenceDiagonalization cd = congruence_diagonalize(h);
  const std::size_t n = h.rows();
  constexpr long kRange = 4;
  for (std::size_t p = 0; p < n; ++p) {
    if (sgn(cd.diagonal[p].re()) <= 0) continue;
    for (std::size_t q = 0; q < n; ++q) {
      if (sgn(cd.diagonal[q].re()) >= 0) continue;
      for (long yr = 0; yr <= kRange; ++yr)
        for (long yi = 0; yi <= kRange; ++yi) {
          if (yr == 0 && yi == 0) continue;
          Scalar y{Rational(yr), Rational(yi)};
          for (long xr = 0; xr <= kRange; ++xr)
            for (long xi = 0; xi <= kRange; ++xi) {
              Scalar x{Rational(xr), Rational(xi)};
              if (x.norm2() * cd.diagonal[p].re() + y.norm2() * cd.diagonal[q].re() != 0) continue;
              Vector up = zero_vector(n);
              up[p] = x;
              up[q] = y;
              Vector u = cd.transform.adjoint() * up;
              Matrix uu(n, n);
              for (std::size_t r = 0; r < n; ++r)
                for (std::size_t c = 0; c < n; ++c) uu(r, c) = u[r] * u[c].conj();
              return uu * h;
            }
        }
    }
  }
  return std::nullopt;
}

}  // namespace

std::vector<StarSummand> classify_star(const AssocAlgebra& alg, const WedderburnResult& w) {
  if (!alg.star()) throw StarInconsistent("algebra '" + alg.label() + "' has no star structure");
  const std::size_t nb = w.blocks.size();
  std::vector<std::size_t> perm(nb, nb);
  for (std::size_t k = 0; k < nb; ++k) {
    Vector img = alg.star(w.blocks[k].central_idempotent);
    for (std::size_t j = 0; j < nb; ++j)
      if (img == w.blocks[j].central_idempotent) perm[k] = j;
    if (perm[k] == nb) throw StarInconsistent("star does not map central idempotents to central idempotents");
  }
  std::vector<StarSummand> out;
  for (std::size_t k = 0; k < nb; ++k) {
    const auto& blk = w.blocks[k];
    const std::size_t n = blk.size;
    std::size_t j = perm[k];
    if (perm[j] != k) throw StarInconsistent("star permutes blocks with a cycle longer than 2");
    if (j < k) continue;  // reported with its partner
    StarSummand s;
    s.size = n;
    if (j != k) {
      s.blocks = {k, j};
      if (n == 1) {
        s.type = StarType::V2;
        s.witness = Scalar::i() * blk.central_idempotent - Scalar::i() * w.blocks[j].central_idempotent;
        s.note = "Hermitian elements have the form (a, conj(a)); i f_k - i f_j squares to -(f_k + f_j)";
      } else {
        s.type = StarType::Swap;
        const Vector& e12 = blk.unit(0, 1);
        s.witness = e12 + alg.star(e12);
        s.note = "E12 + star(E12) is a nonzero Hermitian nilpotent";
      }
      out.push_back(std::move(s));
      continue;
    }
    s.blocks = {k};
    auto sigma = [&](const Matrix& m) {
      Vector x = from_block_matrix(w, k, m);
      return to_block_matrices(w, alg.star(x))[k];
    };
    Matrix h = find_conjugator_H(n, sigma);
    Inertia in = hermitian_signature(h);
    s.conjugator = h;
    s.signature = in;
    if (in.positive == n) {
      s.type = StarType::Standard;
    } else {
      s.type = StarType::Indefinite;
      if (auto nil = isotropic_nilpotent(h)) {
        Vector x = from_block_matrix(w, k, *nil);
        if (!is_zero(x) && alg.star(x) == x && is_zero(alg.mul(x, x))) s.witness = x;
      }
      s.note = s.witness ? "u u^dagger H with u^dagger H u = 0 is a Hermitian nilpotent"
                         : "no isotropic vector with small Gaussian-integer coordinates; witness omitted";
    }
    out.push_back(std::move(s));
  }
  return out;
}

std::optional<Vector> find_nilpotent(const AssocAlgebra& alg, bool hermitian_only, std::uint64_t seed) {
  if (hermitian_only && !alg.star()) throw StarInconsistent("Hermitian search needs a star structure");
  std::vector<Vector> rad = radical(alg);
  if (!rad.empty()) {
    if (!hermitian_only) return rad.front();
    // The radical is star-invariant, so the Hermitian parts of its elements
    // stay inside it and are nilpotent.
    for (const auto& r : rad) {
      Vector s = alg.star(r);
      for (Vector h : {r + s, Scalar::i() * (r - s)})
        if (!is_zero(h)) return h;
    }
    return std::nullopt;
  }
  WedderburnResult w = wedderburn_decompose(alg, seed);
  if (!hermitian_only) {
    for (const auto& b : w.blocks)
      if (b.size > 1) return b.unit(0, 1);
    return std::nullopt;
  }
  for (const auto& s : classify_star(alg, w))
    if ((s.type == StarType::Indefinite || s.type == StarType::Swap) && s.witness) return s.witness;
  return std::nullopt;
}

StructureReport analyze_structure(const AssocAlgebra& alg, bool with_star, std::uint64_t seed) {
  StructureReport rep;
  rep.radical_basis = radical(alg);
  rep.semisimple = rep.radical_basis.empty();
  if (!rep.semisimple) return rep;
  rep.wedderburn = wedderburn_decompose(alg, seed);
  if (with_star && alg.star()) {
    rep.star_analyzed = true;
    rep.star_summands = classify_star(alg, *rep.wedderburn);
  }
  return rep;
}

}  // namespace obsalg
