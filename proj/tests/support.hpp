#pragma once

#include <permorb/permorb.hpp>

#include <memory>

namespace testing_support {

using namespace permorb;

inline Lattice A1() { return Lattice(IntMatrix{{2}}, "A1"); }
inline Lattice A2() { return Lattice(IntMatrix{{2, 1}, {1, 2}}, "A2"); }

inline std::shared_ptr<const LatticeExtensions> extensions(const Lattice& K, int k) {
  return std::make_shared<const LatticeExtensions>(K, k);
}

inline std::vector<StateVector> basis_states(const FockSpace& space, const Rat& excitation) {
  std::vector<StateVector> out;
  for (const auto& m : space.basis_up_to(excitation)) {
    StateVector v(space.sector());
    v.add(m, Cyc(1));
    out.push_back(std::move(v));
  }
  return out;
}

// Direct sum of w^{-j} / (1 - w^{-j})^2, w = zeta_m.
inline Cyc naive_root_sum(int m) {
  Cyc s(0);
  for (int j = 1; j < m; ++j) {
    const Cyc w = Cyc::root(m, -j);
    const Cyc one_minus = Cyc(1) - w;
    s += w / (one_minus * one_minus);
  }
  return s;
}

}  // namespace testing_support
