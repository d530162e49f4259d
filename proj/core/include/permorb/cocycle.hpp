#pragma once

#include "permorb/lattice.hpp"

#include <utility>
#include <vector>

namespace permorb {

// An element of a central extension of L by <eta0>: the pair (base, eta0^phase)
// relative to a fixed section.
struct CentralElem {
  LatVec base;
  long phase = 0;

  friend bool operator==(const CentralElem&, const CentralElem&) = default;
};

enum class SectionKind { Untwisted, Twisted };

// Bimultiplicative section cocycle eps(a, b) = sum a_i b_j table_ij, valued in
// exponents of eta0. The extension's group law is
// (a, s)(b, t) = (a + b, s + t + eps(a, b)).
class SectionCocycle {
 public:
  SectionCocycle(SectionKind kind, IntMatrix table, int modulus);

  SectionKind kind() const { return kind_; }
  const IntMatrix& table() const { return table_; }
  int modulus() const { return modulus_; }
  long eps(const LatVec& a, const LatVec& b) const;

 private:
  SectionKind kind_;
  IntMatrix table_;
  int modulus_;
};

// The data built on L = K^{(+)k} with the cyclic isometry nu: commutator maps,
// the untwisted and twisted extensions, the lift nu-hat, tau and sigma.
class LatticeExtensions {
 public:
  LatticeExtensions(Lattice K, int k);

  const Lattice& K() const { return K_; }
  const Lattice& L() const { return L_; }
  int k() const { return nu_.k(); }
  int d() const { return nu_.block_rank(); }
  const CyclicIsometry& nu() const { return nu_; }
  const RootsOfUnity& roots() const { return roots_; }
  const SectionCocycle& section(SectionKind kind) const {
    return kind == SectionKind::Untwisted ? untwisted_ : twisted_;
  }

  // Commutator maps as eta0 exponents, and as field elements.
  long c0_exponent(const LatVec& a, const LatVec& b) const;
  long c_exponent(const LatVec& a, const LatVec& b) const;
  Cyc commutator_C0(const LatVec& a, const LatVec& b) const;
  Cyc commutator_C(const LatVec& a, const LatVec& b) const;

  // Exponent of prod_{0<j<k/2} (-eta^j)^{<nu^{-j} a, b>}: the ratio between the
  // untwisted and twisted products under the set-theoretic identification.
  long identification_exponent(const LatVec& a, const LatVec& b) const;

  CentralElem mul(const CentralElem& a, const CentralElem& b, SectionKind kind) const;
  CentralElem inverse(const CentralElem& a, SectionKind kind) const;
  CentralElem commutator(const CentralElem& a, const CentralElem& b, SectionKind kind) const;
  CentralElem central(long s) const { return CentralElem{LatVec(L_.rank()), roots_.reduce_phase(s)}; }

  // The lift of nu: nu-hat (a, s) = (nu a, s + lift_phase(a)).
  CentralElem nu_hat(const CentralElem& a, SectionKind kind, long power = 1) const;
  long lift_phase(const LatVec& a, SectionKind kind) const;

  bool in_N(const LatVec& a) const;  // slot sum vanishes
  std::vector<LatVec> N_generators() const;
  std::vector<LatVec> M_generators() const;  // (1 - nu) of the basis

  // The character of N-hat (twisted extension); throws if the base is not in N.
  Cyc tau(const CentralElem& a) const;
  Cyc sigma(const LatVec& a) const;

  // Action of e_gamma (gamma in L, untwisted section identified with the
  // twisted one) on the induced-module basis vector labelled mu in K.
  // Returns the scalar and the new label.
  std::pair<Cyc, LatVec> induced_action(const LatVec& gamma, const LatVec& mu) const;

 private:
  Lattice K_;
  CyclicIsometry nu_;
  Lattice L_;
  RootsOfUnity roots_;
  SectionCocycle untwisted_;
  SectionCocycle twisted_;

  struct LiftData {
    IntMatrix B;                 // eps(nu a, nu b) - eps(a, b) on the basis
    std::vector<long> rho;       // homomorphism correction on the basis
  };
  LiftData lift_untwisted_;
  LiftData lift_twisted_;

  long phase_of_minus_eta_power(long j) const;
  LiftData build_lift(const SectionCocycle& s) const;
  const LiftData& lift(SectionKind kind) const {
    return kind == SectionKind::Untwisted ? lift_untwisted_ : lift_twisted_;
  }
  long quadratic_part(const LiftData& data, const LatVec& a) const;
};

}  // namespace permorb
