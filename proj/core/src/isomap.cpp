#include "permorb/isomap.hpp"

#include <stdexcept>

namespace permorb {

namespace {

StateVector relabel(const StateVector& v, Sector target, const Rat& per_mode) {
  StateVector out(target);
  for (const auto& [m, c] : v.terms())
    out.add(m, c * Cyc(pow(per_mode, static_cast<long>(m.modes.size()))));
  return out;
}

std::string clip(const std::string& s) { return s.size() > 240 ? s.substr(0, 240) + "..." : s; }

}  // namespace

StateVector f_apply(const OrbifoldSpaces& s, const StateVector& v) {
  if (v.sector() != Sector::Twisted) throw std::invalid_argument("sector mismatch: F maps V_L^T to V_K");
  // Twisted mode numerators are already k n, which is the V_K mode number.
  return relabel(v, Sector::UntwistedK, rat(1, s.ext->k()));
}

StateVector f_inverse_apply(const OrbifoldSpaces& s, const StateVector& v) {
  if (v.sector() != Sector::UntwistedK) throw std::invalid_argument("sector mismatch: F^{-1} maps V_K to V_L^T");
  return relabel(v, Sector::Twisted, Rat(s.ext->k()));
}

ModeImage general_mode_image(const OrbifoldSpaces& s, const std::vector<AmbVec>& alphas, const Rat& n) {
  const int k = s.ext->k(), d = s.ext->d();
  if (static_cast<int>(alphas.size()) != k) throw std::invalid_argument("expected one vector per tensor slot");
  const Rat kn = n * k;
  if (!is_integer(kn)) throw std::invalid_argument("mode " + n.get_str() + " is not in (1/k)Z");
  const long N = to_long(kn);
  // (alpha in slot p)^T(n) = eta^{-p k n} (alpha in slot 0)^T(n)
  AmbVec h(d);
  for (int p = 0; p < k; ++p) {
    if (static_cast<int>(alphas[p].rank()) != d) throw std::invalid_argument("slot vector rank mismatch");
    h += s.ext->roots().eta(-p * N) * alphas[p];
  }
  h *= Cyc(rat(1, k));
  return ModeImage{h, N};
}

Report intertwine_check(const OrbifoldSpaces& s, const StateVector& u, const std::vector<StateVector>& vs,
                        const std::vector<Rat>& modes) {
  Report r{"intertwine", "Y_nu(u,x)F(v) = F(Y^nu(u,x)v)", true, ""};
  for (const auto& v : vs)
    for (const auto& n : modes) {
      const StateVector lhs = worldsheet_twisted_mode(s, u, n, f_apply(s, v));
      const StateVector rhs = f_apply(s, spacetime_twisted_mode(s, u, n, v));
      if (lhs != rhs) {
        r.pass = false;
        r.witness = clip("v=" + v.to_string() + " n=" + n.get_str() + " worldsheet=" + lhs.to_string() +
                         " spacetime=" + rhs.to_string());
        return r;
      }
    }
  return r;
}

}  // namespace permorb
