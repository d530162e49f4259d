#pragma once

#include "permorb/cocycle.hpp"

#include <compare>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace permorb {

enum class Sector { UntwistedK, UntwistedL, Twisted };

std::string to_string(Sector s);

// A basis Heisenberg mode. `index` selects the basis vector (lattice basis in the
// untwisted sectors, b_j placed in slot 0 and projected in the twisted sector);
// the mode number is num / den with den = 1 (untwisted) or k (twisted).
struct Mode {
  int index = 0;
  std::int64_t num = 0;

  friend auto operator<=>(const Mode&, const Mode&) = default;
  friend bool operator==(const Mode&, const Mode&) = default;
};

// A creation monomial (sorted multiset of negative modes) on a ground label.
// Twisted labels mu in K stand for (1/k)(mu, ..., mu) in P_0 L.
struct FockMono {
  std::vector<Mode> modes;
  LatVec label;

  friend auto operator<=>(const FockMono&, const FockMono&) = default;
  friend bool operator==(const FockMono&, const FockMono&) = default;

  std::int64_t energy_units() const;  // sum of -num
};

class StateVector {
 public:
  explicit StateVector(Sector sector) : sector_(sector) {}

  Sector sector() const { return sector_; }
  const std::map<FockMono, Cyc>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add(const FockMono& m, const Cyc& c);
  Cyc coefficient(const FockMono& m) const;
  std::int64_t max_energy_units() const;

  StateVector& operator+=(const StateVector& o);
  StateVector& operator-=(const StateVector& o);
  StateVector& operator*=(const Cyc& s);
  friend StateVector operator+(StateVector a, const StateVector& b) { return a += b; }
  friend StateVector operator-(StateVector a, const StateVector& b) { return a -= b; }
  friend StateVector operator*(const Cyc& s, StateVector a) { return a *= s; }
  friend bool operator==(const StateVector& a, const StateVector& b);
  friend bool operator!=(const StateVector& a, const StateVector& b) { return !(a == b); }

  std::string to_string() const;

 private:
  Sector sector_;
  std::map<FockMono, Cyc> terms_;
  void check(const StateVector& o) const;
};

// One of the three state spaces V_K, V_L = V_K^{(x)k} and V_L^T = S[nu] (x) U_T,
// with Heisenberg actions, gradings and the Virasoro operators.
class FockSpace {
 public:
  FockSpace(std::shared_ptr<const LatticeExtensions> ext, Sector sector);

  Sector sector() const { return sector_; }
  const LatticeExtensions& ext() const { return *ext_; }
  std::shared_ptr<const LatticeExtensions> ext_ptr() const { return ext_; }
  int k() const { return ext_->k(); }
  int d() const { return ext_->d(); }
  int mode_den() const { return sector_ == Sector::Twisted ? k() : 1; }
  int basis_size() const { return sector_ == Sector::UntwistedL ? k() * d() : d(); }
  // Rank of the vectors h used as fields: K for V_K, L otherwise.
  int field_rank() const { return sector_ == Sector::UntwistedK ? d() : k() * d(); }
  const Lattice& field_lattice() const { return sector_ == Sector::UntwistedK ? ext_->K() : ext_->L(); }
  const Lattice& label_lattice() const { return sector_ == Sector::UntwistedL ? ext_->L() : ext_->K(); }
  Rat mode_value(std::int64_t num) const { return rat(num, mode_den()); }

  StateVector zero() const { return StateVector(sector_); }
  StateVector vacuum() const;
  StateVector ground(const LatVec& label) const;
  StateVector monomial(std::vector<Mode> modes, const LatVec& label, const Cyc& coeff = Cyc(1)) const;

  // h(num/den) for a basis mode or a general field vector h.
  StateVector apply_mode(const Mode& m, const StateVector& v) const;
  StateVector apply_field(const AmbVec& h, std::int64_t num, const StateVector& v) const;

  // Building blocks for apply_field, reusable across many states.
  std::vector<Cyc> creation_coeffs(const AmbVec& h, std::int64_t num) const;      // num < 0
  std::vector<Cyc> annihilation_pairing(const AmbVec& h, std::int64_t num) const;  // num > 0
  Cyc zero_mode(const AmbVec& h, const LatVec& label) const;
  StateVector apply_creation(const std::vector<Cyc>& coeffs, std::int64_t num, const StateVector& v) const;
  StateVector apply_annihilation(const std::vector<Cyc>& pairing, std::int64_t num, const StateVector& v) const;
  StateVector apply_zero(const AmbVec& h, const StateVector& v) const;

  // e_gamma acting on the ground label (gamma in the field lattice).
  std::pair<Cyc, LatVec> group_act(const LatVec& gamma, const LatVec& label) const;

  AmbVec basis_vector(int i) const;  // b_i in the field lattice
  AmbVec dual_vector(int i) const;   // b_i^* in the field lattice

  Rat vacuum_weight() const;
  Rat weight(const FockMono& m) const;
  Rat weight(const StateVector& v) const;  // throws if not homogeneous

  // Monomials whose weight minus the vacuum weight is at most `excitation`.
  std::vector<FockMono> basis_up_to(const Rat& excitation) const;

  // Conformal vector (1/2) sum_i b_i(-1) b_i^*(-1) 1 (untwisted sectors).
  StateVector conformal_vector() const;

  // Virasoro L(j) from the quadratic normal-ordered sum (untwisted sectors).
  StateVector virasoro_L(long j, const StateVector& v) const;

  // L(0) of V_L^T from the basis/dual-basis double sum plus the vacuum shift.
  StateVector twisted_L0(const StateVector& v) const;

  // nu-hat^power on V_L.
  StateVector rotate(const StateVector& v, long power) const;

 private:
  std::shared_ptr<const LatticeExtensions> ext_;
  Sector sector_;
  void check(const StateVector& v) const;
};

// V_K state placed in tensor slot p of V_L (other slots vacuum), and back.
StateVector embed_slot(const FockSpace& VL, const StateVector& vK, int p);
// Returns the slot carrying the state, or -1 if it is the vacuum; throws if the
// monomial is spread over several slots.
int slot_of(const FockSpace& VL, const FockMono& m);
StateVector extract_slot(const FockSpace& VK, const FockSpace& VL, const FockMono& m, int p);

std::string mode_string(const FockSpace& space, const Mode& m);

}  // namespace permorb
