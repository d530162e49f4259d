#include "permorb/vertexops.hpp"

#include <functional>
#include <map>
#include <stdexcept>

namespace permorb {

OrbifoldSpaces::OrbifoldSpaces(const Lattice& K, int k)
    : ext(std::make_shared<const LatticeExtensions>(K, k)),
      VK(ext, Sector::UntwistedK),
      VL(ext, Sector::UntwistedL),
      VT(ext, Sector::Twisted) {}

namespace {

using Graded = std::map<Rat, StateVector>;

void add_to(Graded& g, const Rat& e, const StateVector& v) {
  if (v.is_zero()) return;
  auto [it, inserted] = g.try_emplace(e, v);
  if (!inserted) {
    it->second += v;
    if (it->second.is_zero()) g.erase(it);
  }
}

// Annihilation or zero part of (1/D!) d^D h(x): mode n >= 0 carries
// binom(-n-1, D) x^{-n-1-D}.
Graded apply_lower(const FockSpace& space, const FieldFactor& f, const Graded& in) {
  Graded out;
  const int den = space.mode_den();
  for (const auto& [e, w] : in) {
    const std::int64_t E = w.max_energy_units();
    for (std::int64_t num = 0; num <= E; ++num) {
      const Rat n = rat(num, den);
      const Rat coef = binom(-n - 1, f.deriv);
      if (coef == 0) continue;
      StateVector w2 = space.apply_field(f.h, num, w);
      if (w2.is_zero()) continue;
      w2 *= Cyc(coef);
      add_to(out, e - n - 1 - f.deriv, w2);
    }
  }
  return out;
}

// exp(-sum_{n>0} gamma(n) x^{-n} / n)
Graded apply_eplus(const FockSpace& space, const AmbVec& gamma, const Graded& in) {
  const int den = space.mode_den();
  Graded total = in, term = in;
  for (long i = 1; !term.empty(); ++i) {
    Graded next;
    for (const auto& [e, w] : term) {
      const std::int64_t E = w.max_energy_units();
      for (std::int64_t num = 1; num <= E; ++num) {
        StateVector w2 = space.apply_field(gamma, num, w);
        if (w2.is_zero()) continue;
        w2 *= Cyc(rat(-den, num) / i);
        add_to(next, e - rat(num, den), w2);
      }
    }
    for (const auto& [e, w] : next) add_to(total, e, w);
    term = std::move(next);
  }
  return total;
}

}  // namespace

StateVector extract_mode(const FockSpace& space, const NormalOrderedOp& op, const Rat& n, const StateVector& v) {
  if (v.sector() != space.sector()) throw std::invalid_argument("sector mismatch in mode extraction");
  const int den = space.mode_den();
  const Rat target = -n - 1 - op.shift;
  const std::size_t F = op.fields.size();
  const bool has_gamma = !op.gamma.c.empty() && !op.gamma.is_zero();
  const AmbVec gamma = has_gamma ? AmbVec(op.gamma) : AmbVec(space.field_rank());
  StateVector out(space.sector());
  if (v.is_zero()) return out;

  for (std::size_t mask = 0; mask < (std::size_t{1} << F); ++mask) {
    Graded right{{Rat(0), v}};
    std::vector<const FieldFactor*> upper;
    for (std::size_t f = 0; f < F; ++f) {
      if (mask & (std::size_t{1} << f))
        right = apply_lower(space, op.fields[f], right);
      else
        upper.push_back(&op.fields[f]);
      if (right.empty()) break;
    }
    if (right.empty()) continue;

    Graded grouped;
    if (has_gamma) {
      right = apply_eplus(space, gamma, right);
      for (const auto& [e, w] : right)
        for (const auto& [m, c] : w.terms()) {
          const Rat z = space.zero_mode(gamma, m.label).to_rational();
          auto [scalar, label] = space.group_act(op.gamma, m.label);
          StateVector t(space.sector());
          t.add(FockMono{m.modes, label}, c * scalar);
          add_to(grouped, e + z, t);
        }
    } else {
      grouped = std::move(right);
    }

    // Creation parts: a field at mode -u/den (u >= 1) contributes
    // binom(u/den - 1, D) x^{u/den - 1 - D}; E^- contributes x^{r/den}.
    Rat lower_sum = 0;
    for (const auto* f : upper) lower_sum += rat(1, den) - 1 - f->deriv;
    for (const auto& [e, w] : grouped) {
      const Rat rest = (target - e - lower_sum) * den;
      if (rest < 0 || !is_integer(rest)) continue;
      const long R = to_long(rest);
      std::vector<StateVector> eminus{w};
      for (long u = 1; u <= R; ++u) {
        StateVector s(space.sector());
        if (has_gamma) {
          for (long mu = 1; mu <= u; ++mu)
            if (!eminus[u - mu].is_zero()) s += space.apply_field(gamma, -mu, eminus[u - mu]);
          s *= Cyc(rat(den, u));
        }
        eminus.push_back(std::move(s));
      }
      for (long u = 0; u <= R; ++u) {
        if (eminus[u].is_zero()) continue;
        // distribute R - u extra units over the creation fields
        std::function<void(std::size_t, long, const StateVector&)> place = [&](std::size_t i, long left,
                                                                            const StateVector& s) {
          if (i == upper.size()) {
            if (left == 0) out += s;
            return;
          }
          const long lo = i + 1 == upper.size() ? left : 0;
          for (long extra = lo; extra <= left; ++extra) {
            const long units = 1 + extra;
            const Rat coef = binom(rat(units, den) - 1, upper[i]->deriv);
            if (coef == 0) continue;
            StateVector s2 = space.apply_field(upper[i]->h, -units, s);
            if (s2.is_zero()) continue;
            s2 *= Cyc(coef);
            place(i + 1, left - extra, s2);
          }
        };
        place(0, R - u, eminus[u]);
      }
    }
  }
  out *= op.prefactor;
  return out;
}

NormalOrderedOp untwisted_operator(const FockSpace& space, const FockMono& m, const Cyc& c) {
  if (space.sector() == Sector::Twisted) throw std::invalid_argument("untwisted operator on the twisted sector");
  NormalOrderedOp op;
  op.prefactor = c;
  for (const auto& md : m.modes)
    op.fields.push_back(FieldFactor{space.basis_vector(md.index), static_cast<int>(-md.num - 1)});
  op.gamma = m.label;
  return op;
}

NormalOrderedOp twisted_operator(const FockSpace& VT, const FockMono& m, const Cyc& c) {
  if (VT.sector() != Sector::Twisted) throw std::invalid_argument("W acts on the twisted sector");
  const auto& ext = VT.ext();
  const int n = ext.L().rank();
  NormalOrderedOp op;
  for (const auto& md : m.modes) {
    AmbVec h(n);
    h.c.at(md.index) = Cyc(1);
    op.fields.push_back(FieldFactor{std::move(h), static_cast<int>(-md.num - 1)});
  }
  op.gamma = m.label;
  const long norm = ext.L().norm(m.label);
  const LatVec S = ext.nu().slot_sum(m.label);
  op.prefactor = c * Cyc(pow(Rat(ext.k()), -norm / 2)) * ext.sigma(m.label);
  op.shift = rat(ext.K().norm(S), 2 * ext.k()) - rat(norm, 2);
  return op;
}

StateVector untwisted_mode(const FockSpace& space, const StateVector& u, const Rat& n, const StateVector& v) {
  if (space.sector() == Sector::Twisted || u.sector() != space.sector() || v.sector() != space.sector())
    throw std::invalid_argument("sector mismatch: untwisted_mode acts within V_K or V_L");
  if (!is_integer(n)) throw std::invalid_argument("non-allowed fractional mode " + n.get_str() + " in untwisted sector");
  StateVector out(space.sector());
  for (const auto& [m, c] : u.terms()) out += extract_mode(space, untwisted_operator(space, m, c), n, v);
  return out;
}

StateVector spacetime_twisted_mode(const OrbifoldSpaces& s, const StateVector& u, const Rat& n, const StateVector& v) {
  if (u.sector() != Sector::UntwistedL || v.sector() != Sector::Twisted)
    throw std::invalid_argument("sector mismatch: spacetime_twisted_mode takes u in V_L, v in V_L^T");
  if (!is_integer(n * s.ext->k())) throw std::invalid_argument("mode " + n.get_str() + " is not in (1/k)Z");
  StateVector out(Sector::Twisted);
  const XPolyOp x = exp_delta_apply(s.VL, u);
  for (const auto& [e, w] : x.terms())
    for (const auto& [m, c] : w.terms()) out += extract_mode(s.VT, twisted_operator(s.VT, m, c), n + e, v);
  return out;
}

StateVector worldsheet_twisted_mode(const OrbifoldSpaces& s, const StateVector& u, const Rat& n, const StateVector& v) {
  if (u.sector() != Sector::UntwistedL || v.sector() != Sector::UntwistedK)
    throw std::invalid_argument("sector mismatch: worldsheet_twisted_mode takes u in V_L, v in V_K");
  const long k = s.ext->k();
  const Rat kn = n * k;
  if (!is_integer(kn)) throw std::invalid_argument("mode " + n.get_str() + " is not in (1/k)Z");
  std::map<int, StateVector> by_slot;
  for (const auto& [m, c] : u.terms()) {
    const int p = std::max(slot_of(s.VL, m), 0);
    StateVector piece = extract_slot(s.VK, s.VL, m, p);
    piece *= c;
    auto it = by_slot.try_emplace(p, Sector::UntwistedK).first;
    it->second += piece;
  }
  StateVector out(Sector::UntwistedK);
  for (const auto& [p, sp] : by_slot) {
    // Y_K(E_f(t) sp, t) at t^{-k(n+1)}, then t -> eta^p t.
    StateVector slot_part(Sector::UntwistedK);
    const XPolyOp ef = ef_apply(s.VK, sp);
    for (const auto& [e, w] : ef.terms())
      slot_part += untwisted_mode(s.VK, w, e - 1 + k * (n + 1), v);
    slot_part *= s.ext->roots().eta(-p * to_long(kn));
    out += slot_part;
  }
  return out;
}

}  // namespace permorb
