#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace chaosfoundry {

using Vec3 = std::array<double, 3>;

// Lorenz flow with all three derivatives multiplied by time_scale, integrated
// with classical RK4 at step dt. With the defaults (time_scale=0.1, dt=1) the
// effective step is 0.1 model time units.
struct LorenzParams {
  double p1 = 10.0;
  double p2 = 28.0;
  double p3 = 8.0 / 3.0;
  double time_scale = 0.1;  // pure rescaling of time: (time_scale, dt) enters only as a product
  double dt = 1.0;
  std::size_t n_steps = 0;       // samples kept after the transient
  std::size_t n_transient = 1000;  // leading steps discarded so sampling starts on the attractor
  Vec3 initial_state{1.0, 1.0, 1.0};

  void validate() const;  // throws std::invalid_argument
};

struct Trajectory {
  std::vector<Vec3> samples;  // uniform sampling at dt, length n_steps

  std::vector<double> component(int axis) const;  // 0=x, 1=y, 2=z
};

// Post-transient Lorenz trajectory. Throws std::runtime_error naming the step
// index if the state leaves the finite range (divergence).
Trajectory integrate_lorenz(const LorenzParams& params);

// Default initial condition (1,1,1) plus a seeded uniform perturbation in
// [-0.1, 0.1]^3, for independent trials driven by the same system.
Vec3 perturbed_initial_state(std::uint64_t seed);

// Shift/scale to empirical mean 0 and population standard deviation 1.
// Throws on constant input (zero std) or length < 2.
std::vector<double> normalize_signal(std::span<const double> signal);

}  // namespace chaosfoundry
