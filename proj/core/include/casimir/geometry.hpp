#pragma once

#include <filesystem>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "casimir/ensemble.hpp"
#include "casimir/montecarlo.hpp"

namespace casimir {

using Vector3 = Eigen::Vector3d;
using Matrix3 = Eigen::Matrix3d;
/// Symmetric positive semidefinite force-noise density, N^2 s per component.
using ForceNoiseTensor = Eigen::Matrix3d;

/// Dipole coupling beta_ab = kappa / |r|^3 (kappa in m^3/s).
struct DipoleCoupling {
  double kappa = 0.0;
};

/// Spherical tip of radius r whose lowest point sits a gap h above a
/// half-space sample with outward unit normal n.
struct TipSampleGeometry {
  double radius = 1.0;
  double gap = 1.0;
  Vector3 normal = Vector3::UnitZ();

  TipSampleGeometry() = default;
  /// Throws DomainError unless radius, gap > 0 and |normal| = 1 to 1e-12.
  TipSampleGeometry(double radius, double gap, Vector3 normal = Vector3::UnitZ());
};

struct MaterialSpec {
  double rho_a = 1.0;
  double rho_b = 1.0;
  DipoleCoupling coupling;
  SpectralDistribution dist = SpectralDistribution::debye(1.0);

  MaterialSpec() = default;
  /// Throws DomainError unless both densities are finite and > 0.
  MaterialSpec(double rho_a, double rho_b, DipoleCoupling coupling,
               SpectralDistribution dist);

  /// Averaged <q_a q_b> per unit coupling, J s / (rad/s).
  double cross_expectation_per_beta() const;
  /// Averaged dc pair-noise density, (J s)^2 s.
  double pair_noise_dc() const;
};

/// Pair energy -(X/2) beta^2 with X the averaged <q_a q_b> per unit beta.
/// r_vec points from the sample atom to the tip atom.
double pairwise_energy(const MaterialSpec& material, const Vector3& r_vec);
/// Force on the tip atom, (grad beta) <q_a q_b>: attractive, |r|^-7.
Vector3 pairwise_force(const MaterialSpec& material, const Vector3& r_vec);
/// -grad of pairwise_force, the Hessian of the pair energy.
Matrix3 pairwise_spring(const MaterialSpec& material, const Vector3& r_vec);
/// (grad beta)(grad beta)^T times the averaged dc pair noise.
ForceNoiseTensor pairwise_noise(const MaterialSpec& material, const Vector3& r_vec);

/// r^3 / (h^2 (2r + h)^2).
double force_geometric_factor(double radius, double gap);
/// r^3 (r + h) / (h^3 (2r + h)^3).
double spring_geometric_factor(double radius, double gap);

/// Rotation taking the local frame (normal along z) to the caller's frame.
Matrix3 frame_rotation(const TipSampleGeometry& geom);

/// Sphere-over-half-space totals in the caller's frame.
Vector3 total_force(const TipSampleGeometry& geom, const MaterialSpec& material);
Matrix3 total_spring(const TipSampleGeometry& geom, const MaterialSpec& material);
/// Closed form with eigenvalues (S_nn, S_nn/24, S_nn/24).
ForceNoiseTensor total_noise(const TipSampleGeometry& geom, const MaterialSpec& material);

struct VectorEstimate {
  Vector3 value = Vector3::Zero();
  Vector3 std_error = Vector3::Zero();
};

struct TensorEstimate {
  Matrix3 value = Matrix3::Zero();
  Matrix3 std_error = Matrix3::Zero();
};

struct GeometryMcResult {
  VectorEstimate force;
  TensorEstimate spring;
  TensorEstimate noise;
};

/// Monte Carlo over the tip volume. The half-space sum seen by one tip point
/// is evaluated once at a reference height by nested adaptive quadrature of
/// the pairwise tensors and rescaled by the exact power of the height.
/// Values are in the caller's frame; standard errors are reported in the
/// local frame with the normal along z. Requires settings.mc_samples >= 1e5.
GeometryMcResult total_mc(const TipSampleGeometry& geom, const MaterialSpec& material,
                          const QuadratureSettings& settings = {});
VectorEstimate total_force_mc(const TipSampleGeometry& geom, const MaterialSpec& material,
                              const QuadratureSettings& settings = {});
TensorEstimate total_spring_mc(const TipSampleGeometry& geom, const MaterialSpec& material,
                               const QuadratureSettings& settings = {});
TensorEstimate total_noise_mc(const TipSampleGeometry& geom, const MaterialSpec& material,
                              const QuadratureSettings& settings = {});

/// Cantilever mode shape phi(z) on [0, L], normalized to phi(L) = 1.
class ModeShape {
 public:
  static ModeShape linear(double length);
  /// Clamped-free Euler-Bernoulli eigenfunction of the given index (>= 1).
  static ModeShape euler_bernoulli(int mode_index, double length);
  /// Samples on a strictly increasing grid from z = 0 to z = L. Throws
  /// DomainError if |phi(0)| or |phi(L) - 1| exceeds 1e-6.
  static ModeShape tabulated(std::vector<double> z, std::vector<double> phi);
  /// Loads samples from CSV with header `z,phi`.
  static ModeShape from_csv(const std::filesystem::path& path);

  double length() const { return length_; }
  int mode_index() const { return mode_index_; }
  bool is_linear() const { return kind_ == Kind::kLinear; }
  bool is_tabulated() const { return kind_ == Kind::kTabulated; }

  /// Samples of a tabulated shape; empty otherwise.
  std::span<const double> samples_z() const { return z_; }
  std::span<const double> samples_phi() const { return phi_; }

  /// phi(z) and phi'(z).
  double value(double z) const;
  double slope(double z) const;

  /// Characteristic root of cos(x) cosh(x) = -1 for the given index.
  static double clamped_free_root(int mode_index);

 private:
  enum class Kind { kLinear, kEulerBernoulli, kTabulated };
  ModeShape() = default;

  Kind kind_ = Kind::kLinear;
  double length_ = 1.0;
  int mode_index_ = 0;
  double lambda_ = 0.0;
  double tip_value_ = 1.0;
  std::vector<double> z_;
  std::vector<double> phi_;
};

/// l with 1/l = integral of phi'(z)^2 over [0, L].
double mode_length(const ModeShape& shape, const QuadratureSettings& settings = {});

}  // namespace casimir
