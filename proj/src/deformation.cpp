#include "obsalg/deformation.hpp"

#include "obsalg/basis.hpp"
#include "obsalg/errors.hpp"
#include "obsalg/structure.hpp"

namespace obsalg {

bool Trilinear::is_zero() const {
  for (const auto& v : data)
    if (!v.is_zero()) return false;
  return true;
}

StructureTensor hochschild_d1(const AssocAlgebra& alg, const Matrix& phi) {
  const std::size_t n = alg.dim();
  if (phi.rows() != n || phi.cols() != n) throw DimensionMismatch("phi must be dim x dim");
  std::vector<Vector> img(n);
  for (std::size_t j = 0; j < n; ++j) img[j] = phi.column(j);
  TensorBuilder out(n);
  for (std::size_t a = 0; a < n; ++a) {
    Vector ea = unit_vector(n, a);
    for (std::size_t b = 0; b < n; ++b) {
      Vector v = alg.mul(ea, img[b]) - phi * alg.product().basis_product(a, b) + alg.mul(img[a], unit_vector(n, b));
      out.add(a, b, v);
    }
  }
  return std::move(out).build();
}

Trilinear hochschild_d2(const AssocAlgebra& alg, const StructureTensor& psi) {
  const std::size_t n = alg.dim();
  if (psi.dim() != n) throw DimensionMismatch("psi must be a dim^3 tensor");
  const auto& p = alg.product();
  Trilinear out(n);
  for (std::size_t a = 0; a < n; ++a) {
    Vector ea = unit_vector(n, a);
    for (std::size_t b = 0; b < n; ++b) {
      Vector ab = p.basis_product(a, b);
      Vector psi_ab = psi.basis_product(a, b);
      for (std::size_t c = 0; c < n; ++c) {
        Vector ec = unit_vector(n, c);
        Vector v = alg.mul(ea, psi.basis_product(b, c)) - psi.apply(ab, ec) + psi.apply(ea, p.basis_product(b, c)) -
                   alg.mul(psi_ab, ec);
        for (std::size_t k = 0; k < n; ++k) out(a, b, c, k) = v[k];
      }
    }
  }
  return out;
}

namespace {

/// Basis change putting the unit first: columns unit, then the standard
/// basis vectors except the first coordinate where the unit is nonzero.
Matrix unit_first_basis(const Vector& unit) {
  const std::size_t n = unit.size();
  std::size_t pivot = 0;
  while (unit[pivot].is_zero()) ++pivot;
  std::vector<Vector> cols{unit};
  for (std::size_t k = 0; k < n; ++k)
    if (k != pivot) cols.push_back(unit_vector(n, k));
  return Matrix::from_columns(cols, n);
}

}  // namespace

HochschildReport h2_dimension(const AssocAlgebra& alg) {
  const std::size_t n = alg.dim();
  if (n > 8) throw TooLarge("Hochschild computation is limited to dim <= 8 (got " + std::to_string(n) + ")");
  HochschildReport rep;
  const std::size_t m = n - 1;
  rep.dims = {n * m, n * m * m, n * m * m * m};
  if (n == 1) return rep;

  Matrix g = unit_first_basis(alg.unit());
  Matrix g_inv = inverse(g);
  AssocAlgebra a = change_basis(alg, g);

  // Flattening: C1 index (i-1) n + k, C2 ((i-1) m + (j-1)) n + k,
  // C3 (((i-1) m + (j-1)) m + (l-1)) n + k, with i, j, l >= 1.
  Matrix d1(rep.dims[1], rep.dims[0]);
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      Matrix phi(n, n);
      phi(k, i) = Scalar(1);
      StructureTensor img = hochschild_d1(a, phi);
      std::size_t col = (i - 1) * n + k;
      for (std::size_t x = 1; x < n; ++x)
        for (std::size_t y = 1; y < n; ++y)
          for (const auto& [kk, v] : img.nonzeros(x, y)) d1(((x - 1) * m + (y - 1)) * n + kk, col) = v;
    }
  Matrix d2(rep.dims[2], rep.dims[1]);
  std::vector<StructureTensor> c2_basis;
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        TensorBuilder b(n);
        b(i, j, k) = Scalar(1);
        StructureTensor psi = std::move(b).build();
        Trilinear img = hochschild_d2(a, psi);
        std::size_t col = ((i - 1) * m + (j - 1)) * n + k;
        for (std::size_t x = 1; x < n; ++x)
          for (std::size_t y = 1; y < n; ++y)
            for (std::size_t z = 1; z < n; ++z)
              for (std::size_t kk = 0; kk < n; ++kk) {
                const Scalar& v = img(x, y, z, kk);
                if (!v.is_zero()) d2((((x - 1) * m + (y - 1)) * m + (z - 1)) * n + kk, col) = v;
              }
        c2_basis.push_back(std::move(psi));
      }
  EchelonForm e1 = row_reduce(d1);
  rep.rank_d1 = e1.pivots.size();
  std::vector<Vector> cocycles = nullspace(d2);
  rep.rank_d2 = rep.dims[1] - cocycles.size();
  rep.h2_dim = cocycles.size() - rep.rank_d1;

  if (rep.h2_dim > 0) {
    // Coboundary columns first, then cocycles: the cocycles picked up by the
    // independent scan represent H^2.
    std::vector<Vector> pool;
    for (std::size_t c = 0; c < d1.cols(); ++c) pool.push_back(d1.column(c));
    std::size_t boundary = independent_subset(pool).size();
    std::vector<Vector> basis;
    for (auto idx : independent_subset(pool)) basis.push_back(pool[idx]);
    for (auto& z : cocycles) basis.push_back(z);
    for (auto idx : independent_subset(basis)) {
      if (idx < boundary) continue;
      const Vector& z = basis[idx];
      TensorBuilder b(n);
      for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = 1; j < n; ++j)
          for (std::size_t k = 0; k < n; ++k) b(i, j, k) = z[((i - 1) * m + (j - 1)) * n + k];
      rep.cocycle_basis.push_back(transform_tensor(std::move(b).build(), g_inv, g));
    }
  }
  return rep;
}

bool is_coboundary(const AssocAlgebra& alg, const StructureTensor& psi) {
  const std::size_t n = alg.dim();
  Matrix d1(n * n * n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      Matrix phi(n, n);
      phi(k, i) = Scalar(1);
      StructureTensor img = hochschild_d1(alg, phi);
      for (std::size_t idx = 0; idx < img.dense().size(); ++idx) d1(idx, i * n + k) = img.dense()[idx];
    }
  return solve(d1, psi.dense()).has_value();
}

PerturbationCheck check_star_perturbation(const Matrix& k, const Rational& t, double eps) {
  const std::size_t n = k.rows();
  if (!k.square()) throw DimensionMismatch("K must be square");
  if (rational_abs(t) * 2 * static_cast<long>(n) >= 1)
    throw NotPerturbative("|t| = " + to_string(rational_abs(t)) + " is not below 1/(2n) = 1/" + std::to_string(2 * n));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (k(r, c).norm2() > 1) throw NotPerturbative("perturbation entries must have modulus at most 1");
  PerturbationCheck out;
  out.h = Matrix::identity(n) + Scalar(t) * k;
  out.signature = hermitian_signature(out.h);
  CongruenceDiagonalization cd = congruence_diagonalize(out.h);
  out.ldl_diagonal = cd.diagonal;
  out.exact_positive = true;
  for (const auto& d : cd.diagonal) out.exact_positive = out.exact_positive && sgn(d.re()) > 0;
  // W = L^dagger from a float Cholesky, H = W^dagger W up to eps.
  Eigen::MatrixXcd hf = out.h.to_eigen();
  Eigen::LLT<Eigen::MatrixXcd> llt(hf);
  if (llt.info() == Eigen::Success) {
    Eigen::MatrixXcd l = llt.matrixL();
    out.cholesky_residual = (l * l.adjoint() - hf).cwiseAbs().maxCoeff();
  } else {
    out.cholesky_residual = std::numeric_limits<double>::infinity();
  }
  out.passed = out.signature.positive == n && out.exact_positive && out.cholesky_residual < eps;
  return out;
}

Matrix random_hermitian_perturbation(std::size_t n, std::mt19937_64& rng) {
  auto half_step = [&](std::uint64_t range) {
    // values (-range/2 .. range/2) / 2
    long v = static_cast<long>(rng() % (range + 1)) - static_cast<long>(range / 2);
    return Rational(v, 2);
  };
  Matrix k(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    k(r, r) = Scalar(half_step(4));
    for (std::size_t c = r + 1; c < n; ++c) {
      Scalar z(half_step(2), half_step(2));
      k(r, c) = z;
      k(c, r) = z.conj();
    }
  }
  return k;
}

StarRigidityResult star_rigidity_check(const AssocAlgebra& alg, const Rational& t, std::uint64_t seed,
                                       std::size_t samples, double eps) {
  StructureReport sr = analyze_structure(alg, true, seed);
  if (!sr.semisimple) throw NotSemisimple("star rigidity needs a semisimple algebra");
  if (!sr.star_analyzed) throw StarInconsistent("star rigidity needs a star structure");
  StarRigidityResult res;
  res.t = t;
  res.seed = seed;
  res.samples = samples;
  for (const auto& s : sr.star_summands) {
    if (s.type != StarType::Standard)
      throw StarInconsistent("summand of type " + to_string(s.type) + " is not a standard star");
    res.block_sizes.push_back(s.size);
  }
  std::mt19937_64 rng(seed);
  res.passed = true;
  for (std::size_t sample = 0; sample < samples; ++sample)
    for (std::size_t n : res.block_sizes) {
      PerturbationCheck c = check_star_perturbation(random_hermitian_perturbation(n, rng), t, eps);
      res.passed = res.passed && c.passed;
      res.checks.push_back(std::move(c));
    }
  return res;
}

}  // namespace obsalg
