#pragma once

// Stationary scattering by a Coulomb or Podolsky-screened point charge:
// potentials, the outgoing free Green's function, coupling bookkeeping, the
// closed-form one-dimensional wave functions and the reduced kernels that
// feed the Fredholm solvers.

#include <complex>
#include <span>
#include <variant>
#include <vector>

#include "fredholm/kernel.hpp"
#include "fredholm/quadrature.hpp"

namespace fredholm::scattering {

/// V(r) = Q^2 / (4 pi r). Throws SingularPoint for r <= 0.
double coulomb_potential(double r, double charge);

/// V(r) = Q^2 / (4 pi) (1 - e^{-r/a}) / r, with V(0) = Q^2 / (4 pi a) for a > 0.
/// a = 0 is the Coulomb potential. Throws SingularPoint when r = 0 and a = 0,
/// InvalidArgument for r < 0 or a < 0.
double podolsky_potential(double r, double charge, double a);

struct Coulomb {
  double charge = 1.0;
};

struct Podolsky {
  double charge = 1.0;
  double a = 0.0;  ///< screening length, >= 0
};

class PotentialSpec {
 public:
  static PotentialSpec coulomb(double charge);
  static PotentialSpec podolsky(double charge, double a);

  double operator()(double r) const;
  double charge() const;
  /// True when V is singular at r = 0 (Coulomb, or Podolsky with a = 0).
  bool singular_at_origin() const;
  const std::variant<Coulomb, Podolsky>& form() const { return form_; }

 private:
  explicit PotentialSpec(std::variant<Coulomb, Podolsky> form) : form_(form) {}
  std::variant<Coulomb, Podolsky> form_;
};

/// G(rho) = -e^{i k rho} / (4 pi rho), outgoing solution of (Laplacian + k^2) G = delta.
/// Throws SingularPoint for rho <= 0.
Complex greens_function(double rho, double k);

struct PhysicalParams {
  double mass = 2.0;
  double hbar = 1.0;
  double energy = 0.25;
  double charge = 1.0;
  double k = 1.0;        ///< sqrt(2 m E) / hbar
  double lambda = -1.0;  ///< -m Q^2 / (2 hbar^2)
};

/// Fills k and lambda. Throws InvalidArgument unless m, hbar, E > 0 and all inputs are finite.
PhysicalParams derive_params(double mass, double hbar, double energy, double charge);

/// psi(x) = e^{ix} + e^{6i} sin 4 / x * lambda / (1 + lambda [E1(i) - E1(5i)]).
/// Throws SingularPoint for x <= 0.
Complex psi_coulomb_closed(double x, double lambda);

/// psi(x) = e^{ix} + e^{2i-5a} (e^{4a} - e^{8i}) / (x (a - 2i))
///                 * lambda / (1 + lambda [E1(i-a) - E1(5i-a)]).
/// Equals psi_coulomb_closed at a = 0. Throws SingularPoint for x <= 0,
/// InvalidArgument for a < 0, DomainError once E1(i - a) overflows (a above ~700).
Complex psi_podolsky_closed(double x, double a, double lambda);

/// Marker: the closed forms are used directly and no kernel is built.
struct ClosedFormOnly {};
/// K(x,t) = e^{ik s} / s V(t), s = sqrt((x-t)^2 + epsilon^2).
struct RegularizedGreen {
  double epsilon = 0.05;
};
/// K(x,t) = g(x) h(t), g(x) = e^{ikx} / x, h(t) = e^{-ikt} V(t).
struct SeparableFarField {};

using ReducedKernelChoice = std::variant<ClosedFormOnly, RegularizedGreen, SeparableFarField>;

/// One-dimensional kernel on `interval` for the chosen family.
/// Throws InvalidArgument for ClosedFormOnly or epsilon <= 0, SingularPoint
/// when the interval reaches a point where the kernel is singular.
KernelSpec reduced_kernel(const PotentialSpec& potential, const PhysicalParams& params,
                          const Interval& interval, const ReducedKernelChoice& choice);

enum class WaveKind { coulomb, podolsky };

/// Closed-form psi on `grid` with the coupling params.lambda. Grid points are
/// evaluated concurrently; output order follows the grid.
SampledFunction sample_wavefunction(WaveKind which, const std::vector<double>& grid, double a,
                                    const PhysicalParams& params);

/// max |psi| - min |psi| over the samples.
double amplitude_range(const SampledFunction& psi);

}  // namespace fredholm::scattering
