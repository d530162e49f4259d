#pragma once

#include "permorb/report.hpp"
#include "permorb/vertexops.hpp"

#include <vector>

namespace permorb {

// F: V_L^T -> V_K. A twisted mode (b_j in slot 0)^T(n) goes to (1/k) b_j(kn)
// and the ground state with label mu goes to e^mu; F(1) = 1.
StateVector f_apply(const OrbifoldSpaces& s, const StateVector& v);
StateVector f_inverse_apply(const OrbifoldSpaces& s, const StateVector& v);

// F (alpha_1, ..., alpha_k)^T(n) F^{-1} = vector(mode) on V_K.
struct ModeImage {
  AmbVec vector;       // in K coordinates
  std::int64_t mode;   // kn
};
ModeImage general_mode_image(const OrbifoldSpaces& s, const std::vector<AmbVec>& alphas, const Rat& n);

// Y_nu(u, x) F(v) = F(Y^nu(u, x) v) at each listed mode, for every v.
Report intertwine_check(const OrbifoldSpaces& s, const StateVector& u, const std::vector<StateVector>& vs,
                        const std::vector<Rat>& modes);

}  // namespace permorb
