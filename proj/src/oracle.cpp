#include "spincorr/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <tuple>
#include <utility>
#include <vector>

#include "spincorr/error.hpp"

namespace spincorr::oracle {

namespace {

constexpr real_x kPairFloor = 1e-14L;
constexpr real_x kOutcomeFloor = 1e-14L;

real_x xlog2x(real_x x) { return x > 0 ? x * std::log2(x) : real_x(0); }

// Entropy (bits) of an unnormalized 2x2 Hermitian block times its trace:
// q S(sigma / q) = -sum lambda log2 lambda + q log2 q.
real_x weighted_entropy2(const CMatrix2& s) {
  const real_x d0 = s(0, 0).real(), d1 = s(1, 1).real();
  const real_x q = d0 + d1;
  if (q < kOutcomeFloor) return 0;
  const real_x disc = std::sqrt((d0 - d1) * (d0 - d1) + 4 * std::norm(s(0, 1)));
  const real_x hi = std::clamp((q + disc) / 2, real_x(0), q);
  const real_x lo = std::clamp(q - hi, real_x(0), q);
  return -(xlog2x(hi) + xlog2x(lo)) + xlog2x(q);
}

CMatrix4 conjugate_by(const CMatrix4& v, const CMatrix4& op) { return v.adjoint() * op * v; }

std::array<real_x, 3> to_unit(const std::array<real_x, 3>& v) {
  const real_x n = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
  return {v[0] / n, v[1] / n, v[2] / n};
}

std::array<real_x, 3> cross(const std::array<real_x, 3>& a, const std::array<real_x, 3>& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

// The four 2x2 blocks rho_{(a,.),(a',.)}; measured conditional states are
// linear combinations of them.
struct Blocks {
  CMatrix2 b[2][2];
};

Blocks split_blocks(const DensityMatrix4& rho) {
  Blocks bl;
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t ap = 0; ap < 2; ++ap)
      for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) bl.b[a][ap](i, j) = rho(2 * a + i, 2 * ap + j);
  return bl;
}

real_x conditional_entropy(const Blocks& bl, const std::array<real_x, 3>& n) {
  real_x total = 0;
  for (int sign : {1, -1}) {
    // projector (I + s n.sigma)/2
    CMatrix2 proj;
    proj(0, 0) = (1 + sign * n[2]) / 2;
    proj(1, 1) = (1 - sign * n[2]) / 2;
    proj(0, 1) = real_x(sign) * cplx_x(n[0], -n[1]) / real_x(2);
    proj(1, 0) = real_x(sign) * cplx_x(n[0], n[1]) / real_x(2);
    CMatrix2 s;
    for (std::size_t a = 0; a < 2; ++a)
      for (std::size_t ap = 0; ap < 2; ++ap) s = s + proj(ap, a) * bl.b[a][ap];
    total += weighted_entropy2(s);
  }
  return total;
}

std::array<real_x, 3> spherical(real_x theta, real_x phi) {
  return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
}

real_x entropy2(const CMatrix2& s) { return weighted_entropy2(s); }

}  // namespace

EigenSystem4 eig4(const DensityMatrix4& rho) {
  const HermitianEigen4 e = hermitian_eigen(rho.matrix());
  if (e.values[3] < -kNegativeEigenvalueTol) throw ValidationError("density matrix has a negative eigenvalue");
  EigenSystem4 out;
  for (std::size_t k = 0; k < 4; ++k) out.values[k] = std::clamp(e.values[k], real_x(0), real_x(1));
  out.vectors = e.vectors;
  return out;
}

CMatrix4 sqrt_density(const DensityMatrix4& rho) {
  const EigenSystem4 e = eig4(rho);
  CMatrix4 scaled = e.vectors;
  for (std::size_t k = 0; k < 4; ++k) {
    const real_x s = std::sqrt(e.values[k]);
    for (std::size_t r = 0; r < 4; ++r) scaled(r, k) *= s;
  }
  return scaled * e.vectors.adjoint();
}

const std::array<CMatrix4, 3>& local_paulis_a() {
  static const std::array<CMatrix4, 3> ops = {kron(pauli::x(), pauli::identity()),
                                              kron(pauli::y(), pauli::identity()),
                                              kron(pauli::z(), pauli::identity())};
  return ops;
}

RMatrix3 w_matrix(const DensityMatrix4& rho) {
  const CMatrix4 s = sqrt_density(rho);
  const auto& sig = local_paulis_a();
  std::array<CMatrix4, 3> ssig;
  for (std::size_t mu = 0; mu < 3; ++mu) ssig[mu] = s * sig[mu];
  RMatrix3 w;
  for (std::size_t mu = 0; mu < 3; ++mu)
    for (std::size_t nu = mu; nu < 3; ++nu) {
      const real_x val = (ssig[mu] * ssig[nu]).trace().real();
      w(mu, nu) = val;
      w(nu, mu) = val;
    }
  return w;
}

RMatrix3 m_matrix(const DensityMatrix4& rho) {
  const EigenSystem4 e = eig4(rho);
  const auto& sig = local_paulis_a();
  std::array<CMatrix4, 3> h;
  for (std::size_t mu = 0; mu < 3; ++mu) h[mu] = conjugate_by(e.vectors, sig[mu]);
  RMatrix3 m;
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b) {
      const real_x sum = e.values[a] + e.values[b];
      if (sum <= kPairFloor) continue;
      const real_x weight = 2 * e.values[a] * e.values[b] / sum;
      for (std::size_t mu = 0; mu < 3; ++mu)
        for (std::size_t nu = 0; nu < 3; ++nu)
          m(mu, nu) += weight * (h[mu](a, b) * std::conj(h[nu](a, b))).real();
    }
  for (std::size_t mu = 0; mu < 3; ++mu)
    for (std::size_t nu = mu + 1; nu < 3; ++nu) m(mu, nu) = m(nu, mu) = (m(mu, nu) + m(nu, mu)) / 2;
  return m;
}

double lqu_bruteforce(const DensityMatrix4& rho) {
  return static_cast<double>(1 - symmetric_eigenvalues(w_matrix(rho))[0]);
}

double lqfi_bruteforce(const DensityMatrix4& rho) {
  return static_cast<double>(1 - symmetric_eigenvalues(m_matrix(rho))[0]);
}

double fisher_information(const DensityMatrix4& rho, const std::array<double, 3>& direction) {
  const EigenSystem4 e = eig4(rho);
  const auto& sig = local_paulis_a();
  const std::array<real_x, 3> n = to_unit({direction[0], direction[1], direction[2]});
  CMatrix4 op;
  for (std::size_t mu = 0; mu < 3; ++mu) op = op + cplx_x(n[mu]) * sig[mu];
  const CMatrix4 h = conjugate_by(e.vectors, op);
  real_x f = 0;
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b) {
      const real_x sum = e.values[a] + e.values[b];
      if (sum <= kPairFloor) continue;
      const real_x diff = e.values[a] - e.values[b];
      f += diff * diff / sum * std::norm(h(a, b));
    }
  return static_cast<double>(f / 2);
}

std::array<double, 3> MeasurementDirection::unit_vector() const {
  return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
}

CMatrix2 reduced_a(const DensityMatrix4& rho) {
  CMatrix2 r;
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t ap = 0; ap < 2; ++ap)
      for (std::size_t b = 0; b < 2; ++b) r(a, ap) += rho(2 * a + b, 2 * ap + b);
  return r;
}

CMatrix2 reduced_b(const DensityMatrix4& rho) {
  CMatrix2 r;
  for (std::size_t b = 0; b < 2; ++b)
    for (std::size_t bp = 0; bp < 2; ++bp)
      for (std::size_t a = 0; a < 2; ++a) r(b, bp) += rho(2 * a + b, 2 * a + bp);
  return r;
}

double entropy_bits(const DensityMatrix4& rho) {
  const EigenSystem4 e = eig4(rho);
  real_x s = 0;
  for (real_x p : e.values) s -= xlog2x(p);
  return static_cast<double>(s);
}

double measured_conditional_entropy(const DensityMatrix4& rho, const std::array<double, 3>& n) {
  return static_cast<double>(conditional_entropy(split_blocks(rho), to_unit({n[0], n[1], n[2]})));
}

DiscordResult discord_bruteforce(const DensityMatrix4& rho, const DiscordSearch& search) {
  if (search.n_theta < 2 || search.n_phi < 1 || search.refine_iters < 0)
    throw SpecError("discord search grid must have n_theta >= 2, n_phi >= 1");
  const Blocks bl = split_blocks(rho);
  const real_x pi = std::numbers::pi_v<real_x>;
  const real_x dtheta = pi / (search.n_theta - 1);
  const real_x dphi = 2 * pi / search.n_phi;

  struct Cell {
    real_x value;
    int i, j;
  };
  std::vector<Cell> cells;
  cells.reserve(static_cast<std::size_t>(search.n_theta) * search.n_phi);
  for (int i = 0; i < search.n_theta; ++i)
    for (int j = 0; j < search.n_phi; ++j)
      cells.push_back({conditional_entropy(bl, spherical(i * dtheta, j * dphi)), i, j});

  constexpr std::size_t kStarts = 4;
  const std::size_t n_starts = std::min(kStarts, cells.size());
  std::partial_sort(cells.begin(), cells.begin() + static_cast<std::ptrdiff_t>(n_starts), cells.end(),
                    [](const Cell& x, const Cell& y) {
                      return std::tie(x.value, x.i, x.j) < std::tie(y.value, y.i, y.j);
                    });

  real_x best = cells.front().value;
  std::array<real_x, 3> best_n = spherical(cells.front().i * dtheta, cells.front().j * dphi);

  // Pattern search on the sphere. Each level re-centres a geodesic chart on
  // the current point, walks along the four chart axes with step expansion,
  // then halves the base step. Near the branch boundary the landscape is
  // almost flat along a great circle, so long walks are needed.
  constexpr long kMaxEvals = 200000;
  for (std::size_t s = 0; s < n_starts; ++s) {
    std::array<real_x, 3> n = spherical(cells[s].i * dtheta, cells[s].j * dphi);
    real_x local = cells[s].value;
    real_x h = dtheta;
    long evals = 0;
    for (int level = 0; level < search.refine_iters && evals < kMaxEvals; ++level, h /= 2) {
      bool improved = true;
      while (improved && evals < kMaxEvals) {
        improved = false;
        const std::array<real_x, 3> seed =
            std::fabs(n[2]) < 0.9L ? std::array<real_x, 3>{0, 0, 1} : std::array<real_x, 3>{1, 0, 0};
        const std::array<real_x, 3> t1 = to_unit(cross(seed, n));
        const std::array<real_x, 3> t2 = cross(n, t1);
        const auto at = [&](real_x x, real_x y) {
          const real_x r = std::hypot(x, y);
          if (r == 0) return n;
          const real_x c = std::cos(r), k = std::sin(r) / r;
          return to_unit({c * n[0] + k * (x * t1[0] + y * t2[0]), c * n[1] + k * (x * t1[1] + y * t2[1]),
                          c * n[2] + k * (x * t1[2] + y * t2[2])});
        };
        for (const auto& [dx, dy] : {std::pair{1, 0}, std::pair{-1, 0}, std::pair{0, 1}, std::pair{0, -1}}) {
          real_x step = h, x = 0, y = 0;
          bool moved = false;
          while (evals < kMaxEvals && step < pi) {
            const real_x v = conditional_entropy(bl, at(x + dx * step, y + dy * step));
            ++evals;
            if (!(v < local)) break;
            local = v;
            x += dx * step;
            y += dy * step;
            step *= 2;
            moved = true;
          }
          if (moved) {
            n = at(x, y);
            improved = true;
            break;  // re-centre the chart
          }
        }
      }
    }
    if (local < best) {
      best = local;
      best_n = n;
    }
  }

  const real_x s_a = entropy2(reduced_a(rho));
  const real_x s_ab = static_cast<real_x>(entropy_bits(rho));

  DiscordResult r;
  r.conditional_entropy = static_cast<double>(best);
  r.value = static_cast<double>(s_a - s_ab + best);
  r.direction.theta = static_cast<double>(std::acos(std::clamp(best_n[2], real_x(-1), real_x(1))));
  real_x phi = std::atan2(best_n[1], best_n[0]);
  if (phi < 0) phi += 2 * pi;
  r.direction.phi = static_cast<double>(phi);
  return r;
}

const FixedTransforms& fixed_transforms() {
  static const FixedTransforms t = [] {
    FixedTransforms f;
    const real_x h = 1 / std::sqrt(real_x(2));
    f.r(0, 0) = h;
    f.r(0, 3) = h;
    f.r(1, 1) = h;
    f.r(1, 2) = h;
    f.r(2, 1) = h;
    f.r(2, 2) = -h;
    f.r(3, 0) = h;
    f.r(3, 3) = -h;
    f.o = kron(pauli::identity(), pauli::x());
    CMatrix2 had;
    had(0, 0) = h;
    had(0, 1) = h;
    had(1, 0) = h;
    had(1, 1) = -h;
    f.h2 = kron(had, had);
    return f;
  }();
  return t;
}

CMatrix2 random_unitary2(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const real_x two_pi = 2 * std::numbers::pi_v<real_x>;
  const real_x alpha = two_pi * unit(rng);
  const real_x psi = two_pi * unit(rng);
  const real_x zeta = two_pi * unit(rng);
  const real_x chi = std::asin(std::sqrt(static_cast<real_x>(unit(rng))));
  const cplx_x g = std::polar(real_x(1), alpha);
  CMatrix2 u;
  u(0, 0) = g * std::polar(std::cos(chi), psi);
  u(0, 1) = g * std::polar(std::sin(chi), zeta);
  u(1, 0) = -g * std::polar(std::sin(chi), -zeta);
  u(1, 1) = g * std::polar(std::cos(chi), -psi);
  return u;
}

CMatrix4 on_qubit_a(const CMatrix2& u) { return kron(u, pauli::identity()); }
CMatrix4 on_qubit_b(const CMatrix2& u) { return kron(pauli::identity(), u); }

}  // namespace spincorr::oracle
