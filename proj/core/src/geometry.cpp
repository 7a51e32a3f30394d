#include "casimir/geometry.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include <Eigen/Geometry>

#include "casimir/error.hpp"

namespace casimir {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

double checked_norm(const Vector3& r_vec) {
  const double r = r_vec.norm();
  if (!(r > 0.0) || !std::isfinite(r)) {
    throw DomainError("pairwise interaction: separation must be finite and nonzero");
  }
  return r;
}

// Pairwise kernels with the ensemble averages supplied: x is <q_a q_b> per
// unit beta and s_dc the averaged dc pair noise.
Vector3 force_kernel(double x, double kappa, const Vector3& r_vec) {
  const double r = checked_norm(r_vec);
  const double r2 = r * r;
  const double r4 = r2 * r2;
  const double beta = kappa / (r2 * r);
  // grad beta = -3 kappa r_vec / r^5.
  const Vector3 grad_beta = (-3.0 * kappa / (r4 * r)) * r_vec;
  return grad_beta * (x * beta);
}

Matrix3 spring_kernel(double x, double kappa, const Vector3& r_vec) {
  const double r = checked_norm(r_vec);
  const double r2 = r * r;
  const double r8 = r2 * r2 * r2 * r2;
  const Vector3 u = r_vec / r;
  return (3.0 * x * kappa * kappa / r8) * (Matrix3::Identity() - 8.0 * u * u.transpose());
}

Matrix3 noise_kernel(double s_dc, double kappa, const Vector3& r_vec) {
  const double r = checked_norm(r_vec);
  const double r2 = r * r;
  const double r8 = r2 * r2 * r2 * r2;
  const Vector3 u = r_vec / r;
  return (9.0 * kappa * kappa * s_dc / r8) * (u * u.transpose());
}

Matrix3 local_to_caller(const TipSampleGeometry& geom, const Matrix3& local) {
  const Matrix3 rot = frame_rotation(geom);
  return rot * local * rot.transpose();
}

Matrix3 axial_tensor(double nn, double tt) {
  Matrix3 m = Matrix3::Zero();
  m(0, 0) = tt;
  m(1, 1) = tt;
  m(2, 2) = nn;
  return m;
}

// Azimuthally averaged half-space sums seen by a tip point at unit height,
// in units of X kappa^2 (force, spring) and kappa^2 S_dc (noise). Order:
// force along n, spring nn, spring tt, noise nn, noise tt.
Values<5> half_space_kernel(double x, double s_dc, double kappa,
                            const QuadratureSettings& settings) {
  const double kappa2 = kappa * kappa;
  const double force_scale = x * kappa2;
  const double noise_scale = s_dc * kappa2;
  QuadratureSettings inner = settings;
  inner.rel_tol = settings.rel_tol * 0.1;
  auto row = [&](double zeta) {
    const std::array<double, 3> breaks = {0.5 * zeta, zeta, 4.0 * zeta};
    return integrate_adaptive_n<5>(
        [&](double s) {
          // Averaging over the azimuth of the sample atom keeps only the
          // axial vector component and the nn / tt tensor components.
          const Vector3 r_vec(s, 0.0, zeta);
          const Vector3 f = force_kernel(x, kappa, r_vec);
          const Matrix3 k = spring_kernel(x, kappa, r_vec);
          const Matrix3 n = noise_kernel(s_dc, kappa, r_vec);
          const double ring = 2.0 * kPi * s;
          return Values<5>{ring * f.z() / force_scale, ring * k(2, 2) / force_scale,
                           ring * 0.5 * (k(0, 0) + k(1, 1)) / force_scale,
                           ring * n(2, 2) / noise_scale,
                           ring * 0.5 * (n(0, 0) + n(1, 1)) / noise_scale};
        },
        0.0, kInf, inner, breaks);
  };
  const std::array<double, 3> breaks = {1.5, 3.0, 10.0};
  return integrate_adaptive_n<5>(row, 1.0, kInf, settings, breaks);
}

}  // namespace

TipSampleGeometry::TipSampleGeometry(double radius_in, double gap_in, Vector3 normal_in)
    : radius(radius_in), gap(gap_in), normal(normal_in) {
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw DomainError("TipSampleGeometry: radius must be finite and > 0");
  }
  if (!(gap > 0.0) || !std::isfinite(gap)) {
    throw DomainError("TipSampleGeometry: gap must be finite and > 0");
  }
  if (!(std::abs(normal.norm() - 1.0) <= 1e-12)) {
    throw DomainError("TipSampleGeometry: normal must be a unit vector");
  }
}

MaterialSpec::MaterialSpec(double rho_a_in, double rho_b_in, DipoleCoupling coupling_in,
                           SpectralDistribution dist_in)
    : rho_a(rho_a_in), rho_b(rho_b_in), coupling(coupling_in), dist(std::move(dist_in)) {
  if (!(rho_a > 0.0) || !std::isfinite(rho_a) || !(rho_b > 0.0) || !std::isfinite(rho_b)) {
    throw DomainError("MaterialSpec: densities must be finite and > 0");
  }
  if (!std::isfinite(coupling.kappa)) {
    throw DomainError("MaterialSpec: kappa must be finite");
  }
}

double MaterialSpec::cross_expectation_per_beta() const {
  return averaged_cross_expectation(dist, 1.0);
}

double MaterialSpec::pair_noise_dc() const { return averaged_pair_noise_dc(dist); }

double pairwise_energy(const MaterialSpec& material, const Vector3& r_vec) {
  const double r = checked_norm(r_vec);
  const double beta = material.coupling.kappa / (r * r * r);
  return -0.5 * material.cross_expectation_per_beta() * beta * beta;
}

Vector3 pairwise_force(const MaterialSpec& material, const Vector3& r_vec) {
  return force_kernel(material.cross_expectation_per_beta(), material.coupling.kappa, r_vec);
}

Matrix3 pairwise_spring(const MaterialSpec& material, const Vector3& r_vec) {
  return spring_kernel(material.cross_expectation_per_beta(), material.coupling.kappa, r_vec);
}

ForceNoiseTensor pairwise_noise(const MaterialSpec& material, const Vector3& r_vec) {
  return noise_kernel(material.pair_noise_dc(), material.coupling.kappa, r_vec);
}

double force_geometric_factor(double radius, double gap) {
  const double outer = 2.0 * radius + gap;
  return radius * radius * radius / (gap * gap * outer * outer);
}

double spring_geometric_factor(double radius, double gap) {
  const double outer = 2.0 * radius + gap;
  return radius * radius * radius * (radius + gap) /
         (gap * gap * gap * outer * outer * outer);
}

Matrix3 frame_rotation(const TipSampleGeometry& geom) {
  return Eigen::Quaterniond::FromTwoVectors(Vector3::UnitZ(), geom.normal)
      .toRotationMatrix();
}

Vector3 total_force(const TipSampleGeometry& geom, const MaterialSpec& material) {
  const double kappa2 = material.coupling.kappa * material.coupling.kappa;
  const double magnitude = kPi * kPi / 3.0 * material.cross_expectation_per_beta() *
                           kappa2 * material.rho_a * material.rho_b *
                           force_geometric_factor(geom.radius, geom.gap);
  return -magnitude * geom.normal;
}

Matrix3 total_spring(const TipSampleGeometry& geom, const MaterialSpec& material) {
  const double kappa2 = material.coupling.kappa * material.coupling.kappa;
  const double magnitude = 4.0 * kPi * kPi / 3.0 * material.cross_expectation_per_beta() *
                           kappa2 * material.rho_a * material.rho_b *
                           spring_geometric_factor(geom.radius, geom.gap);
  return -magnitude * (geom.normal * geom.normal.transpose());
}

ForceNoiseTensor total_noise(const TipSampleGeometry& geom, const MaterialSpec& material) {
  const double kappa2 = material.coupling.kappa * material.coupling.kappa;
  const double nn = 3.0 * kPi * kPi / 5.0 * material.pair_noise_dc() * kappa2 *
                    material.rho_a * material.rho_b *
                    spring_geometric_factor(geom.radius, geom.gap);
  const Matrix3 nnt = geom.normal * geom.normal.transpose();
  return nn * (nnt + (Matrix3::Identity() - nnt) / 24.0);
}

GeometryMcResult total_mc(const TipSampleGeometry& geom, const MaterialSpec& material,
                          const QuadratureSettings& settings) {
  settings.validate();
  if (settings.mc_samples < 100'000) {
    throw DomainError("total_mc: requires at least 1e5 Monte Carlo samples");
  }
  GeometryMcResult out;
  const double kappa2 = material.coupling.kappa * material.coupling.kappa;
  if (kappa2 == 0.0) return out;
  const double x = material.cross_expectation_per_beta();
  const double s_dc = material.pair_noise_dc();
  const Values<5> kernel = half_space_kernel(x, s_dc, material.coupling.kappa, settings);
  // Heights of 1 in the kernel are metres; rescale by the exact power of z.
  const auto estimate = integrate_mc_n<5>(
      [&kernel](std::span<const double> p) {
        const double z = p[2];
        const double z2 = z * z;
        const double inv4 = 1.0 / (z2 * z2);
        const double inv5 = inv4 / z;
        return Values<5>{kernel[0] * inv4, kernel[1] * inv5, kernel[2] * inv5,
                         kernel[3] * inv5, kernel[4] * inv5};
      },
      TipOverHalfSpace{geom.radius, geom.gap}, settings);

  const double rho = material.rho_a * material.rho_b;
  const double fscale = rho * x * kappa2;
  const double nscale = rho * s_dc * kappa2;
  const auto& v = estimate.estimate;
  const auto& e = estimate.std_error;

  out.force.value = frame_rotation(geom) * Vector3(0.0, 0.0, fscale * v[0]);
  out.force.std_error = Vector3(0.0, 0.0, fscale * e[0]);
  out.spring.value = local_to_caller(geom, axial_tensor(fscale * v[1], fscale * v[2]));
  out.spring.std_error = axial_tensor(fscale * e[1], fscale * e[2]);
  out.noise.value = local_to_caller(geom, axial_tensor(nscale * v[3], nscale * v[4]));
  out.noise.std_error = axial_tensor(nscale * e[3], nscale * e[4]);
  return out;
}

VectorEstimate total_force_mc(const TipSampleGeometry& geom, const MaterialSpec& material,
                              const QuadratureSettings& settings) {
  return total_mc(geom, material, settings).force;
}

TensorEstimate total_spring_mc(const TipSampleGeometry& geom, const MaterialSpec& material,
                               const QuadratureSettings& settings) {
  return total_mc(geom, material, settings).spring;
}

TensorEstimate total_noise_mc(const TipSampleGeometry& geom, const MaterialSpec& material,
                              const QuadratureSettings& settings) {
  return total_mc(geom, material, settings).noise;
}

}  // namespace casimir
