#include "permorb/fock.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace permorb {

std::string to_string(Sector s) {
  switch (s) {
    case Sector::UntwistedK: return "V_K";
    case Sector::UntwistedL: return "V_L";
    case Sector::Twisted: return "V_L^T";
  }
  return "?";
}

std::int64_t FockMono::energy_units() const {
  std::int64_t e = 0;
  for (const auto& m : modes) e -= m.num;
  return e;
}

void StateVector::check(const StateVector& o) const {
  if (o.sector_ != sector_)
    throw std::invalid_argument("sector mismatch: " + permorb::to_string(sector_) + " vs " + permorb::to_string(o.sector_));
}

void StateVector::add(const FockMono& m, const Cyc& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Cyc StateVector::coefficient(const FockMono& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Cyc(0) : it->second;
}

std::int64_t StateVector::max_energy_units() const {
  std::int64_t e = 0;
  for (const auto& [m, c] : terms_) e = std::max(e, m.energy_units());
  return e;
}

StateVector& StateVector::operator+=(const StateVector& o) {
  check(o);
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

StateVector& StateVector::operator-=(const StateVector& o) {
  check(o);
  for (const auto& [m, c] : o.terms_) add(m, -c);
  return *this;
}

StateVector& StateVector::operator*=(const Cyc& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

bool operator==(const StateVector& a, const StateVector& b) {
  if (a.sector_ != b.sector_ || a.terms_.size() != b.terms_.size()) return false;
  auto ib = b.terms_.begin();
  for (const auto& [m, c] : a.terms_) {
    if (!(m == ib->first) || c != ib->second) return false;
    ++ib;
  }
  return true;
}

std::string StateVector::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")";
    for (const auto& md : m.modes) os << " b" << md.index << "[" << md.num << "]";
    os << " e" << m.label.to_string();
  }
  return os.str();
}

FockSpace::FockSpace(std::shared_ptr<const LatticeExtensions> ext, Sector sector)
    : ext_(std::move(ext)), sector_(sector) {
  if (!ext_) throw std::invalid_argument("null lattice data");
}

void FockSpace::check(const StateVector& v) const {
  if (v.sector() != sector_)
    throw std::invalid_argument("sector mismatch: expected " + to_string(sector_) + ", got " + to_string(v.sector()));
}

StateVector FockSpace::vacuum() const { return ground(LatVec(label_lattice().rank())); }

StateVector FockSpace::ground(const LatVec& label) const { return monomial({}, label); }

StateVector FockSpace::monomial(std::vector<Mode> modes, const LatVec& label, const Cyc& coeff) const {
  if (static_cast<int>(label.rank()) != label_lattice().rank()) throw std::invalid_argument("label rank mismatch");
  for (const auto& m : modes) {
    if (m.num >= 0) throw std::invalid_argument("monomials hold creation modes only");
    if (m.index < 0 || m.index >= basis_size()) throw std::invalid_argument("mode index out of range");
  }
  std::sort(modes.begin(), modes.end());
  StateVector v(sector_);
  v.add(FockMono{std::move(modes), label}, coeff);
  return v;
}

AmbVec FockSpace::basis_vector(int i) const {
  AmbVec v(field_rank());
  v.c.at(i) = Cyc(1);
  return v;
}

AmbVec FockSpace::dual_vector(int i) const {
  const Lattice& F = field_lattice();
  AmbVec v(field_rank());
  const auto& inv = F.gram_inverse();
  for (int j = 0; j < field_rank(); ++j) v.c[j] = Cyc(inv[i][j]);
  return v;
}

namespace {

long mod(long a, long m) { return ((a % m) + m) % m; }

}  // namespace

std::vector<Cyc> FockSpace::creation_coeffs(const AmbVec& h, std::int64_t num) const {
  if (static_cast<int>(h.rank()) != field_rank()) throw std::invalid_argument("field rank mismatch");
  if (sector_ != Sector::Twisted) return h.c;
  const int dd = d();
  const long s = mod(num, k());
  std::vector<Cyc> c(dd, Cyc(0));
  const auto& roots = ext_->roots();
  for (int p = 0; p < k(); ++p) {
    Cyc ph = roots.eta(-s * p);
    for (int j = 0; j < dd; ++j)
      if (!h.c[p * dd + j].is_zero()) c[j] += ph * h.c[p * dd + j];
  }
  return c;
}

std::vector<Cyc> FockSpace::annihilation_pairing(const AmbVec& h, std::int64_t num) const {
  if (static_cast<int>(h.rank()) != field_rank()) throw std::invalid_argument("field rank mismatch");
  const Rat n = mode_value(num);
  const Lattice& F = field_lattice();
  if (sector_ != Sector::Twisted) {
    std::vector<Cyc> out(basis_size(), Cyc(0));
    for (int j = 0; j < basis_size(); ++j) {
      Cyc s;
      for (int i = 0; i < basis_size(); ++i)
        if (F.gram(i, j) != 0 && !h.c[i].is_zero()) s += h.c[i] * Cyc(Rat(static_cast<long>(F.gram(i, j))));
      out[j] = s * Cyc(n);
    }
    return out;
  }
  // <h, (b_j in slot 0)_{(-s)}> = (1/k) sum_q eta^{sq} <h_{slot -q}, b_j>
  const int dd = d();
  const long s = mod(num, k());
  const Lattice& K = ext_->K();
  const auto& roots = ext_->roots();
  std::vector<Cyc> out(dd, Cyc(0));
  for (int q = 0; q < k(); ++q) {
    const int slot = static_cast<int>(mod(-q, k()));
    Cyc ph = roots.eta(s * q);
    for (int j = 0; j < dd; ++j) {
      Cyc t;
      for (int i = 0; i < dd; ++i)
        if (K.gram(i, j) != 0 && !h.c[slot * dd + i].is_zero())
          t += h.c[slot * dd + i] * Cyc(Rat(static_cast<long>(K.gram(i, j))));
      if (!t.is_zero()) out[j] += ph * t;
    }
  }
  for (auto& x : out) x *= Cyc(n / k());
  return out;
}

Cyc FockSpace::zero_mode(const AmbVec& h, const LatVec& label) const {
  if (sector_ != Sector::Twisted) return field_lattice().inner(h, AmbVec(label));
  // <h_(0), (1/k)(mu, ..., mu)> = (1/k) sum_p <h_p, mu>
  const int dd = d();
  const Lattice& K = ext_->K();
  Cyc s;
  for (int p = 0; p < k(); ++p) {
    AmbVec hp(dd);
    for (int i = 0; i < dd; ++i) hp.c[i] = h.c[p * dd + i];
    s += K.inner(hp, AmbVec(label));
  }
  return s * Cyc(rat(1, k()));
}

StateVector FockSpace::apply_creation(const std::vector<Cyc>& coeffs, std::int64_t num, const StateVector& v) const {
  check(v);
  StateVector out(sector_);
  for (const auto& [m, c] : v.terms()) {
    for (int j = 0; j < static_cast<int>(coeffs.size()); ++j) {
      if (coeffs[j].is_zero()) continue;
      FockMono nm = m;
      Mode md{j, num};
      nm.modes.insert(std::upper_bound(nm.modes.begin(), nm.modes.end(), md), md);
      out.add(nm, c * coeffs[j]);
    }
  }
  return out;
}

StateVector FockSpace::apply_annihilation(const std::vector<Cyc>& pairing, std::int64_t num,
                                          const StateVector& v) const {
  check(v);
  StateVector out(sector_);
  for (const auto& [m, c] : v.terms()) {
    const auto& ms = m.modes;
    for (std::size_t t = 0; t < ms.size();) {
      std::size_t u = t;
      while (u < ms.size() && ms[u] == ms[t]) ++u;
      if (ms[t].num == -num && !pairing[ms[t].index].is_zero()) {
        FockMono nm = m;
        nm.modes.erase(nm.modes.begin() + static_cast<long>(t));
        out.add(nm, c * pairing[ms[t].index] * Cyc(static_cast<long>(u - t)));
      }
      t = u;
    }
  }
  return out;
}

StateVector FockSpace::apply_zero(const AmbVec& h, const StateVector& v) const {
  check(v);
  StateVector out(sector_);
  for (const auto& [m, c] : v.terms()) out.add(m, c * zero_mode(h, m.label));
  return out;
}

StateVector FockSpace::apply_field(const AmbVec& h, std::int64_t num, const StateVector& v) const {
  if (num < 0) return apply_creation(creation_coeffs(h, num), num, v);
  if (num > 0) return apply_annihilation(annihilation_pairing(h, num), num, v);
  return apply_zero(h, v);
}

StateVector FockSpace::apply_mode(const Mode& m, const StateVector& v) const {
  if (m.index < 0 || m.index >= basis_size()) throw std::invalid_argument("mode index out of range");
  if (sector_ == Sector::Twisted) {
    AmbVec h(field_rank());
    h.c[m.index] = Cyc(1);  // b_j in slot 0
    return apply_field(h, m.num, v);
  }
  return apply_field(basis_vector(m.index), m.num, v);
}

std::pair<Cyc, LatVec> FockSpace::group_act(const LatVec& gamma, const LatVec& label) const {
  const auto& e = *ext_;
  switch (sector_) {
    case Sector::UntwistedK: {
      const auto& nu = e.nu();
      long s = e.section(SectionKind::Untwisted).eps(nu.embed(gamma, 0), nu.embed(label, 0));
      return {e.roots().eta0(s), gamma + label};
    }
    case Sector::UntwistedL: {
      long s = e.section(SectionKind::Untwisted).eps(gamma, label);
      return {e.roots().eta0(s), gamma + label};
    }
    case Sector::Twisted:
      return e.induced_action(gamma, label);
  }
  throw std::logic_error("unknown sector");
}

Rat FockSpace::vacuum_weight() const {
  if (sector_ != Sector::Twisted) return 0;
  const long kk = k();
  return rat((kk * kk - 1) * d(), 24 * kk);
}

Rat FockSpace::weight(const FockMono& m) const {
  const Lattice& lab = label_lattice();
  Rat w = rat(m.energy_units(), mode_den());
  const long norm = lab.norm(m.label);
  w += sector_ == Sector::Twisted ? rat(norm, 2 * k()) : rat(norm, 2);
  return w + vacuum_weight();
}

Rat FockSpace::weight(const StateVector& v) const {
  check(v);
  if (v.is_zero()) throw std::invalid_argument("weight of the zero vector is undefined");
  Rat w = weight(v.terms().begin()->first);
  for (const auto& [m, c] : v.terms())
    if (weight(m) != w) throw std::invalid_argument("state is not homogeneous");
  return w;
}

std::vector<FockMono> FockSpace::basis_up_to(const Rat& excitation) const {
  std::vector<FockMono> out;
  if (excitation < 0) return out;
  const Lattice& lab = label_lattice();
  const Rat label_bound = sector_ == Sector::Twisted ? excitation * k() : excitation;
  const auto labels = enumerate_up_to_norm(lab, label_bound);
  const int den = mode_den();
  for (const auto& mu : labels) {
    const Rat lw = sector_ == Sector::Twisted ? rat(lab.norm(mu), 2 * k()) : rat(lab.norm(mu), 2);
    const Rat rest = excitation - lw;
    if (rest < 0) continue;
    const std::int64_t units = floor(rest * den).get_si();
    std::vector<Mode> cand;
    for (int i = 0; i < basis_size(); ++i)
      for (std::int64_t u = 1; u <= units; ++u) cand.push_back(Mode{i, -u});
    std::sort(cand.begin(), cand.end());
    std::vector<Mode> cur;
    std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t from, std::int64_t left) {
      out.push_back(FockMono{cur, mu});
      for (std::size_t c = from; c < cand.size(); ++c) {
        if (-cand[c].num > left) continue;
        cur.push_back(cand[c]);
        rec(c, left + cand[c].num);
        cur.pop_back();
      }
    };
    rec(0, units);
  }
  std::stable_sort(out.begin(), out.end(), [&](const FockMono& a, const FockMono& b) {
    Rat wa = weight(a), wb = weight(b);
    if (wa != wb) return wa < wb;
    return a < b;
  });
  return out;
}

StateVector FockSpace::conformal_vector() const {
  if (sector_ == Sector::Twisted) throw std::invalid_argument("conformal vector is defined on untwisted sectors");
  StateVector w(sector_);
  const auto& inv = field_lattice().gram_inverse();
  for (int i = 0; i < basis_size(); ++i)
    for (int j = 0; j < basis_size(); ++j)
      if (inv[i][j] != 0) w += monomial({Mode{i, -1}, Mode{j, -1}}, LatVec(label_lattice().rank()), Cyc(inv[i][j] / 2));
  return w;
}

StateVector FockSpace::virasoro_L(long j, const StateVector& v) const {
  if (sector_ == Sector::Twisted) throw std::invalid_argument("virasoro_L acts on untwisted sectors");
  check(v);
  StateVector out(sector_);
  if (v.is_zero()) return out;
  const long E = v.max_energy_units();
  const long lo = std::min(j, 0L) - E - 1, hi = std::max(j, 0L) + E + 1;
  for (int i = 0; i < basis_size(); ++i) {
    const AmbVec b = basis_vector(i), bs = dual_vector(i);
    for (long m = lo; m <= hi; ++m) {
      const long r = j - m;
      StateVector t = r >= 0 ? apply_field(b, m, apply_field(bs, r, v)) : apply_field(bs, r, apply_field(b, m, v));
      out += t;
    }
  }
  out *= Cyc(rat(1, 2));
  return out;
}

StateVector FockSpace::twisted_L0(const StateVector& v) const {
  if (sector_ != Sector::Twisted) throw std::invalid_argument("twisted_L0 acts on the twisted sector");
  check(v);
  StateVector out(sector_);
  const Lattice& L = ext_->L();
  const auto& inv = L.gram_inverse();
  const long E = v.max_energy_units();
  for (int a = 0; a < L.rank(); ++a) {
    AmbVec b(L.rank()), bs(L.rank());
    b.c[a] = Cyc(1);
    for (int j = 0; j < L.rank(); ++j) bs.c[j] = Cyc(inv[a][j]);
    for (long n = 1; n <= E; ++n) out += apply_field(b, -n, apply_field(bs, n, v));
    out += Cyc(rat(1, 2)) * apply_field(b, 0, apply_field(bs, 0, v));
  }
  out += Cyc(vacuum_weight()) * v;
  return out;
}

StateVector FockSpace::rotate(const StateVector& v, long power) const {
  if (sector_ != Sector::UntwistedL) throw std::invalid_argument("rotation acts on V_L");
  check(v);
  const int dd = d();
  StateVector out(sector_);
  for (const auto& [m, c] : v.terms()) {
    FockMono nm;
    for (const auto& md : m.modes) {
      const int p = md.index / dd, i = md.index % dd;
      nm.modes.push_back(Mode{static_cast<int>(mod(p - power, k())) * dd + i, md.num});
    }
    std::sort(nm.modes.begin(), nm.modes.end());
    CentralElem g = ext_->nu_hat(CentralElem{m.label, 0}, SectionKind::Untwisted, power);
    nm.label = g.base;
    out.add(nm, c * ext_->roots().eta0(g.phase));
  }
  return out;
}

StateVector embed_slot(const FockSpace& VL, const StateVector& vK, int p) {
  if (VL.sector() != Sector::UntwistedL || vK.sector() != Sector::UntwistedK)
    throw std::invalid_argument("embed_slot maps V_K into V_L");
  const int d = VL.d();
  p = static_cast<int>(mod(p, VL.k()));
  StateVector out(Sector::UntwistedL);
  for (const auto& [m, c] : vK.terms()) {
    FockMono nm;
    for (const auto& md : m.modes) nm.modes.push_back(Mode{p * d + md.index, md.num});
    std::sort(nm.modes.begin(), nm.modes.end());
    nm.label = VL.ext().nu().embed(m.label, p);
    out.add(nm, c);
  }
  return out;
}

int slot_of(const FockSpace& VL, const FockMono& m) {
  const int d = VL.d();
  int slot = -1;
  auto note = [&](int p) {
    if (slot == -1)
      slot = p;
    else if (slot != p)
      throw std::invalid_argument("state is not supported on a single tensor slot");
  };
  for (const auto& md : m.modes) note(md.index / d);
  for (int p = 0; p < VL.k(); ++p)
    if (!VL.ext().nu().slot(m.label, p).is_zero()) note(p);
  return slot;
}

StateVector extract_slot(const FockSpace& VK, const FockSpace& VL, const FockMono& m, int p) {
  const int d = VL.d();
  FockMono km;
  for (const auto& md : m.modes) {
    if (md.index / d != p) throw std::invalid_argument("mode outside the requested slot");
    km.modes.push_back(Mode{md.index % d, md.num});
  }
  km.label = VL.ext().nu().slot(m.label, p);
  StateVector out(Sector::UntwistedK);
  out.add(km, Cyc(1));
  (void)VK;
  return out;
}

std::string mode_string(const FockSpace& space, const Mode& m) {
  std::ostringstream os;
  const Rat n = space.mode_value(m.num);
  switch (space.sector()) {
    case Sector::UntwistedK: os << "b" << m.index + 1 << "(" << n.get_str() << ")"; break;
    case Sector::UntwistedL:
      os << "b" << m.index % space.d() + 1 << "^" << m.index / space.d() + 1 << "(" << n.get_str() << ")";
      break;
    case Sector::Twisted: os << "b" << m.index + 1 << "^T(" << n.get_str() << ")"; break;
  }
  return os.str();
}

}  // namespace permorb
