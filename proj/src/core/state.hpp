#pragma once

#include <memory>

#include <Eigen/Dense>

#include "lattice.hpp"

namespace nhls {

// Site amplitudes in array order; lattice maps array index to site label.
struct StateVector {
  Eigen::VectorXcd amps;
  std::shared_ptr<const LatticeSpec> lattice;

  std::size_t size() const { return static_cast<std::size_t>(amps.size()); }
  // Sum of |psi_j|^2, accumulated left to right.
  double dirac_norm() const {
    double s = 0.0;
    for (Eigen::Index i = 0; i < amps.size(); ++i) s += std::norm(amps[i]);
    return s;
  }
  cd at(long label) const { return amps[static_cast<Eigen::Index>(lattice->index(label))]; }
};

inline StateVector make_state(Eigen::VectorXcd amps, const LatticeSpec& spec) {
  return {std::move(amps), std::make_shared<const LatticeSpec>(spec)};
}

}  // namespace nhls
