#pragma once

#include <Eigen/Dense>
#include <cstdint>

#include "chaosfoundry/reservoir.hpp"

namespace chaosfoundry {

// Random projection with pairwise-orthonormal columns, used to mint new
// signals from reservoir states and reused verbatim by the receiver.
struct ProjectionMatrix {
  Eigen::MatrixXd psi;  // M x N_s, columns orthonormal
  std::uint64_t seed = 0;

  Eigen::Index node_count() const { return psi.rows(); }
  Eigen::Index signal_count() const { return psi.cols(); }
};

// N x N_s bank of synthesized signals, column j = signal j.
struct SignalBank {
  Eigen::MatrixXd theta;
  bool normalized = false;  // true: each column has mean 0, population std 1

  Eigen::Index length() const { return theta.rows(); }
  Eigen::Index signal_count() const { return theta.cols(); }
  std::span<const double> signal(Eigen::Index j) const {
    return {theta.col(j).data(), static_cast<std::size_t>(theta.rows())};
  }
};

// Draw an M x N_s matrix iid uniform[-1,1] and orthonormalize its columns
// left to right with modified Gram-Schmidt. A numerically dependent column
// (residual norm < 1e-12 after projection) is redrawn; throws after 10
// redraws. Requires 1 <= n_signals <= nodes.
ProjectionMatrix make_projection(int nodes, int n_signals, std::uint64_t seed);

// theta = states * psi (states must have no bias column and node count equal
// to psi's row count). With normalize, each column is centered and scaled to
// mean 0 / std 1; a zero-variance column throws.
SignalBank synthesize_bank(const StateMatrix& states, const ProjectionMatrix& projection,
                           bool normalize);

}  // namespace chaosfoundry
