#pragma once

#include "permorb/coeffs.hpp"

#include <memory>
#include <vector>

namespace permorb {

// V_K, V_L and V_L^T sharing one set of lattice data.
struct OrbifoldSpaces {
  OrbifoldSpaces(const Lattice& K, int k);

  std::shared_ptr<const LatticeExtensions> ext;
  FockSpace VK;
  FockSpace VL;
  FockSpace VT;
};

// (1/D!) (d/dx)^D h(x) with h a field vector.
struct FieldFactor {
  AmbVec h;
  int deriv = 0;
};

// prefactor * x^shift * :prod_i fields_i  exp-factors(gamma) e_gamma x^gamma:
// with the exponentials of the gamma field. An empty or zero gamma gives a
// plain normal-ordered product of fields.
struct NormalOrderedOp {
  Cyc prefactor = Cyc(1);
  Rat shift = 0;
  std::vector<FieldFactor> fields;
  LatVec gamma;
};

// Coefficient of x^{-n-1} in op(x) v.
StateVector extract_mode(const FockSpace& space, const NormalOrderedOp& op, const Rat& n, const StateVector& v);

// Y(c * m, x) on an untwisted sector.
NormalOrderedOp untwisted_operator(const FockSpace& space, const FockMono& m, const Cyc& c);
// W(c * m, x) on V_L^T for a V_L monomial m.
NormalOrderedOp twisted_operator(const FockSpace& VT, const FockMono& m, const Cyc& c);

// u_n v for Y(u, x) = sum u_n x^{-n-1} on V_K or V_L.
StateVector untwisted_mode(const FockSpace& space, const StateVector& u, const Rat& n, const StateVector& v);

// Coefficient of x^{-n-1} in Y^nu(u, x) v = W(exp(Delta_x) u, x) v, u in V_L, v in V_L^T.
StateVector spacetime_twisted_mode(const OrbifoldSpaces& s, const StateVector& u, const Rat& n, const StateVector& v);

// Coefficient of x^{-n-1} in Y_nu(u, x) v on V_K, for u a sum of slot generators
// (states of V_L supported on a single tensor slot).
StateVector worldsheet_twisted_mode(const OrbifoldSpaces& s, const StateVector& u, const Rat& n, const StateVector& v);

}  // namespace permorb
