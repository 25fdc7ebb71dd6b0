#include "symqe/resultant.hpp"

#include <stdexcept>
#include <utility>

namespace symqe {
namespace {

// Determinant of an integer matrix by Bareiss' fraction-free elimination.
// Overwrites z.
template <class Rows>
mpz_class bareiss(Rows& z, std::size_t size) {
  int sign = 1;
  mpz_class previous = 1;
  mpz_class tmp;
  for (std::size_t k = 0; k + 1 < size; ++k) {
    std::size_t pivot = k;
    while (pivot < size && z[pivot][k] == 0) ++pivot;
    if (pivot == size) return 0;
    if (pivot != k) {
      std::swap(z[pivot], z[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < size; ++i) {
      const bool zero_lead = z[i][k] == 0;
      for (std::size_t j = k + 1; j < size; ++j) {
        mpz_mul(z[i][j].get_mpz_t(), z[i][j].get_mpz_t(), z[k][k].get_mpz_t());
        if (!zero_lead) {
          mpz_mul(tmp.get_mpz_t(), z[i][k].get_mpz_t(), z[k][j].get_mpz_t());
          mpz_sub(z[i][j].get_mpz_t(), z[i][j].get_mpz_t(), tmp.get_mpz_t());
        }
        if (previous != 1) mpz_divexact(z[i][j].get_mpz_t(), z[i][j].get_mpz_t(), previous.get_mpz_t());
      }
    }
    previous = z[k][k];
  }
  mpz_class det = z[size - 1][size - 1];
  if (sign < 0) det = -det;
  return det;
}

// Scales each row by the lcm of its denominators; returns the product of
// the scales.
template <class Source, class Rows>
mpz_class clear_denominators(const Source& m, Rows& z, std::size_t size) {
  mpz_class scale = 1;
  for (std::size_t i = 0; i < size; ++i) {
    mpz_class row_lcm = 1;
    for (std::size_t j = 0; j < size; ++j) {
      if (m[i][j].get_den() != 1) mpz_lcm(row_lcm.get_mpz_t(), row_lcm.get_mpz_t(), m[i][j].get_den_mpz_t());
    }
    for (std::size_t j = 0; j < size; ++j) {
      z[i][j] = m[i][j].get_num();
      if (row_lcm != 1) z[i][j] *= row_lcm / m[i][j].get_den();
    }
    scale *= row_lcm;
  }
  return scale;
}

template <std::size_t N>
Rational fixed_determinant(const std::array<std::array<Rational, N>, N>& m) {
  std::array<std::array<mpz_class, N>, N> z;
  const mpz_class scale = clear_denominators(m, z, N);
  Rational det(bareiss(z, N), scale);
  det.canonicalize();
  return det;
}

}  // namespace

Rational determinant(Matrix m) {
  const std::size_t size = m.size();
  if (size == 0) return 1;
  for (const auto& row : m) {
    if (row.size() != size) throw std::invalid_argument("determinant: matrix is not square");
  }
  std::vector<std::vector<mpz_class>> z(size, std::vector<mpz_class>(size));
  const mpz_class scale = clear_denominators(m, z, size);
  Rational det(bareiss(z, size), scale);
  det.canonicalize();
  return det;
}

Rational resultant_quartic_quadratic(std::span<const Rational, 5> F, std::span<const Rational, 3> g) {
  const Rational z = 0;
  return fixed_determinant<6>({{
      {F[0], F[1], F[2], F[3], F[4], z},
      {z, F[0], F[1], F[2], F[3], F[4]},
      {g[0], g[1], g[2], z, z, z},
      {z, g[0], g[1], g[2], z, z},
      {z, z, g[0], g[1], g[2], z},
      {z, z, z, g[0], g[1], g[2]},
  }});
}

Rational resultant_quartic_quadratic(const Polynomial& quartic, const Polynomial& quadratic) {
  if (quartic.degree() > 4 || quadratic.degree() > 2) {
    throw std::invalid_argument("resultant_quartic_quadratic: degree too high");
  }
  const auto F = quartic_coefficients(quartic);
  const std::array<Rational, 3> g{quadratic.coeff(2), quadratic.coeff(1), quadratic.coeff(0)};
  return resultant_quartic_quadratic(F, g);
}

Rational det_k(std::span<const Rational, 5> F) {
  const Rational& A = F[0];
  const Rational& B = F[1];
  const Rational& C = F[2];
  const Rational& D = F[3];
  const Rational& E = F[4];
  const Rational z = 0;
  const Rational A4 = 4 * A;
  const Rational B3 = 3 * B;
  const Rational C2 = 2 * C;
  return fixed_determinant<7>({{
      {1, B, C, D, E, z, z},
      {z, A, B, C, D, E, z},
      {z, z, A, B, C, D, E},
      {4, B3, C2, D, z, z, z},
      {z, A4, B3, C2, D, z, z},
      {z, z, A4, B3, C2, D, z},
      {z, z, z, A4, B3, C2, D},
  }});
}

Rational det_k(const Polynomial& quartic) {
  if (quartic.degree() > 4) throw std::invalid_argument("det_k: degree too high");
  return det_k(quartic_coefficients(quartic));
}

bool sign_u_plus_v_sqrt(const Rational& u, const Rational& v, const Rational& delta) {
  if (delta < 0) throw std::domain_error("sign_u_plus_v_sqrt: delta must be nonnegative");
  if (u >= 0 && v >= 0) return true;
  const Rational rho = u * u - v * v * delta;
  return (rho >= 0 && u >= 0) || (rho <= 0 && v >= 0);
}

std::array<Rational, 5> quartic_coefficients(const Polynomial& p) {
  if (p.degree() > 4) throw std::invalid_argument("quartic_coefficients: degree exceeds 4");
  return {p.coeff(4), p.coeff(3), p.coeff(2), p.coeff(1), p.coeff(0)};
}

}  // namespace symqe
