#include "chaosfoundry/dynamics.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "chaosfoundry/rng.hpp"
#include "chaosfoundry/stats.hpp"

namespace chaosfoundry {

namespace {

Vec3 lorenz_rhs(const LorenzParams& p, const Vec3& s) {
  const double x = s[0], y = s[1], z = s[2];
  return {p.time_scale * (p.p1 * (y - x)),
          p.time_scale * (x * (p.p2 - z) - y),
          p.time_scale * (x * y - p.p3 * z)};
}

Vec3 axpy(const Vec3& a, double h, const Vec3& b) {
  return {a[0] + h * b[0], a[1] + h * b[1], a[2] + h * b[2]};
}

Vec3 rk4_step(const LorenzParams& p, const Vec3& s) {
  const double dt = p.dt;
  const Vec3 k1 = lorenz_rhs(p, s);
  const Vec3 k2 = lorenz_rhs(p, axpy(s, dt / 2.0, k1));
  const Vec3 k3 = lorenz_rhs(p, axpy(s, dt / 2.0, k2));
  const Vec3 k4 = lorenz_rhs(p, axpy(s, dt, k3));
  Vec3 out;
  for (int i = 0; i < 3; ++i)
    out[i] = s[i] + dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
  return out;
}

bool finite3(const Vec3& s) {
  return std::isfinite(s[0]) && std::isfinite(s[1]) && std::isfinite(s[2]);
}

}  // namespace

void LorenzParams::validate() const {
  if (dt <= 0.0) throw std::invalid_argument("lorenz: dt must be > 0");
  if (n_steps == 0) throw std::invalid_argument("lorenz: n_steps must be > 0");
  if (!(time_scale > 0.0)) throw std::invalid_argument("lorenz: time_scale must be > 0");
}

std::vector<double> Trajectory::component(int axis) const {
  if (axis < 0 || axis > 2) throw std::invalid_argument("trajectory: axis must be 0, 1 or 2");
  std::vector<double> out(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) out[i] = samples[i][axis];
  return out;
}

Trajectory integrate_lorenz(const LorenzParams& params) {
  params.validate();
  Vec3 state = params.initial_state;
  const std::size_t total = params.n_transient + params.n_steps;
  Trajectory traj;
  traj.samples.reserve(params.n_steps);
  for (std::size_t step = 1; step <= total; ++step) {
    state = rk4_step(params, state);
    if (!finite3(state))
      throw std::runtime_error("lorenz: trajectory diverged at step " + std::to_string(step));
    if (step > params.n_transient) traj.samples.push_back(state);
  }
  return traj;
}

Vec3 perturbed_initial_state(std::uint64_t seed) {
  auto rng = make_engine(seed);
  std::uniform_real_distribution<double> dist(-0.1, 0.1);
  Vec3 out{1.0, 1.0, 1.0};
  for (double& v : out) v += dist(rng);
  return out;
}

std::vector<double> normalize_signal(std::span<const double> signal) {
  if (signal.size() < 2) throw std::invalid_argument("normalize_signal: need at least 2 samples");
  const double m = mean(signal);
  const double sd = population_std(signal);
  if (sd == 0.0)
    throw std::runtime_error("normalize_signal: degenerate signal (zero standard deviation)");
  std::vector<double> out(signal.size());
  for (std::size_t i = 0; i < signal.size(); ++i) out[i] = (signal[i] - m) / sd;
  return out;
}

}  // namespace chaosfoundry
