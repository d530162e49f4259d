#include "permorb/lattice.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace permorb {

bool LatVec::is_zero() const {
  return std::all_of(c.begin(), c.end(), [](std::int64_t x) { return x == 0; });
}

LatVec LatVec::unit(std::size_t rank, std::size_t i) {
  LatVec v(rank);
  v.c.at(i) = 1;
  return v;
}

LatVec& LatVec::operator+=(const LatVec& o) {
  if (o.c.size() != c.size()) throw std::invalid_argument("rank mismatch");
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.c[i];
  return *this;
}

LatVec& LatVec::operator-=(const LatVec& o) {
  if (o.c.size() != c.size()) throw std::invalid_argument("rank mismatch");
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= o.c[i];
  return *this;
}

LatVec LatVec::operator-() const {
  LatVec r(*this);
  for (auto& x : r.c) x = -x;
  return r;
}

std::string LatVec::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
  os << ")";
  return os.str();
}

AmbVec::AmbVec(const LatVec& v) {
  c.reserve(v.rank());
  for (auto x : v.c) c.emplace_back(Rat(x));
}

bool AmbVec::is_zero() const {
  return std::all_of(c.begin(), c.end(), [](const Cyc& x) { return x.is_zero(); });
}

AmbVec& AmbVec::operator+=(const AmbVec& o) {
  if (o.c.size() != c.size()) throw std::invalid_argument("rank mismatch");
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.c[i];
  return *this;
}

AmbVec& AmbVec::operator-=(const AmbVec& o) {
  if (o.c.size() != c.size()) throw std::invalid_argument("rank mismatch");
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= o.c[i];
  return *this;
}

AmbVec& AmbVec::operator*=(const Cyc& s) {
  for (auto& x : c) x *= s;
  return *this;
}

bool operator==(const AmbVec& a, const AmbVec& b) {
  if (a.c.size() != b.c.size()) return false;
  for (std::size_t i = 0; i < a.c.size(); ++i)
    if (a.c[i] != b.c[i]) return false;
  return true;
}

std::string AmbVec::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? ", " : "") + c[i].to_string();
  return s + ")";
}

namespace {

// Leading principal minors by fraction-free elimination.
std::vector<BigInt> leading_minors(const IntMatrix& g) {
  const std::size_t n = g.size();
  std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = Rat(static_cast<long>(g[i][j]));
  std::vector<BigInt> minors;
  Rat det(1);
  for (std::size_t i = 0; i < n; ++i) {
    // No pivoting: the minor of order i+1 is det * pivot when earlier pivots are nonzero.
    Rat piv = m[i][i];
    det *= piv;
    minors.push_back(det.get_num());
    if (piv == 0) {
      // Remaining minors need a direct computation.
      for (std::size_t r = i + 1; r < n; ++r) {
        std::vector<std::vector<Rat>> sub(r + 1, std::vector<Rat>(r + 1));
        for (std::size_t a = 0; a <= r; ++a)
          for (std::size_t b = 0; b <= r; ++b) sub[a][b] = Rat(static_cast<long>(g[a][b]));
        Rat d(1);
        for (std::size_t col = 0; col <= r; ++col) {
          std::size_t p = col;
          while (p <= r && sub[p][col] == 0) ++p;
          if (p > r) {
            d = 0;
            break;
          }
          if (p != col) {
            std::swap(sub[p], sub[col]);
            d = -d;
          }
          d *= sub[col][col];
          for (std::size_t a = col + 1; a <= r; ++a) {
            Rat f = sub[a][col] / sub[col][col];
            for (std::size_t b = col; b <= r; ++b) sub[a][b] -= f * sub[col][b];
          }
        }
        minors.push_back(d.get_num());
      }
      return minors;
    }
    for (std::size_t a = i + 1; a < n; ++a) {
      Rat f = m[a][i] / piv;
      for (std::size_t b = i; b < n; ++b) m[a][b] -= f * m[i][b];
    }
  }
  return minors;
}

std::vector<std::vector<Rat>> rational_inverse(const IntMatrix& g) {
  const std::size_t n = g.size();
  std::vector<std::vector<Rat>> m(n, std::vector<Rat>(2 * n, Rat(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = Rat(static_cast<long>(g[i][j]));
    m[i][n + i] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && m[p][col] == 0) ++p;
    if (p == n) throw std::domain_error("singular Gram matrix");
    std::swap(m[p], m[col]);
    Rat inv = Rat(1) / m[col][col];
    for (auto& x : m[col]) x *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      Rat f = m[r][col];
      for (std::size_t j = 0; j < 2 * n; ++j) m[r][j] -= f * m[col][j];
    }
  }
  std::vector<std::vector<Rat>> inv(n, std::vector<Rat>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = m[i][n + j];
  return inv;
}

}  // namespace

Lattice::Lattice(IntMatrix gram, std::string name) : name_(std::move(name)), gram_(std::move(gram)) {
  const std::size_t n = gram_.size();
  if (n == 0) throw std::invalid_argument("lattice rank must be positive");
  for (const auto& row : gram_)
    if (row.size() != n) throw std::invalid_argument("gram matrix is not square");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (gram_[i][j] != gram_[j][i]) throw std::invalid_argument("gram matrix is not symmetric");
  for (std::size_t i = 0; i < n; ++i)
    if (gram_[i][i] % 2 != 0) throw std::invalid_argument("lattice not even");
  auto minors = leading_minors(gram_);
  for (std::size_t i = 0; i < minors.size(); ++i)
    if (minors[i] <= 0)
      throw std::invalid_argument("lattice not positive definite (leading minor " + std::to_string(i + 1) +
                                  " = " + minors[i].get_str() + ")");
  gram_inv_ = rational_inverse(gram_);
}

BigInt Lattice::determinant() const { return leading_minors(gram_).back(); }

std::int64_t Lattice::inner(const LatVec& a, const LatVec& b) const {
  const int n = rank();
  if (static_cast<int>(a.rank()) != n || static_cast<int>(b.rank()) != n)
    throw std::invalid_argument("rank mismatch in inner product");
  std::int64_t s = 0;
  for (int i = 0; i < n; ++i) {
    if (a.c[i] == 0) continue;
    std::int64_t row = 0;
    for (int j = 0; j < n; ++j) row += gram_[i][j] * b.c[j];
    s += a.c[i] * row;
  }
  return s;
}

Cyc Lattice::inner(const AmbVec& a, const AmbVec& b) const {
  const int n = rank();
  if (static_cast<int>(a.rank()) != n || static_cast<int>(b.rank()) != n)
    throw std::invalid_argument("rank mismatch in inner product");
  Cyc s;
  for (int i = 0; i < n; ++i) {
    if (a.c[i].is_zero()) continue;
    Cyc row;
    for (int j = 0; j < n; ++j)
      if (gram_[i][j] != 0 && !b.c[j].is_zero()) row += b.c[j] * Cyc(Rat(static_cast<long>(gram_[i][j])));
    s += a.c[i] * row;
  }
  return s;
}

Rat Lattice::inner(const std::vector<Rat>& a, const std::vector<Rat>& b) const {
  const int n = rank();
  if (static_cast<int>(a.size()) != n || static_cast<int>(b.size()) != n)
    throw std::invalid_argument("rank mismatch in inner product");
  Rat s(0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) s += a[i] * Rat(static_cast<long>(gram_[i][j])) * b[j];
  return s;
}

Cyc inner(const Lattice& L, const AmbVec& a, const AmbVec& b) { return L.inner(a, b); }

Lattice direct_sum_power(const Lattice& K, int k) {
  if (k < 1) throw std::invalid_argument("direct sum power must be positive");
  const int d = K.rank();
  IntMatrix g(k * d, std::vector<std::int64_t>(k * d, 0));
  for (int p = 0; p < k; ++p)
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) g[p * d + i][p * d + j] = K.gram(i, j);
  std::string name = K.name().empty() ? "" : K.name() + "^" + std::to_string(k);
  return Lattice(std::move(g), std::move(name));
}

CyclicIsometry::CyclicIsometry(int k, int block_rank) : k_(k), d_(block_rank) {
  if (k < 1 || block_rank < 1) throw std::invalid_argument("invalid cyclic isometry");
}

namespace {
long mod(long a, long m) { return ((a % m) + m) % m; }
}  // namespace

LatVec CyclicIsometry::apply(const LatVec& v, long power) const {
  if (static_cast<int>(v.rank()) != rank()) throw std::invalid_argument("rank mismatch in nu");
  LatVec r(v.rank());
  for (int p = 0; p < k_; ++p) {
    int src = static_cast<int>(mod(p + power, k_));
    for (int i = 0; i < d_; ++i) r.c[p * d_ + i] = v.c[src * d_ + i];
  }
  return r;
}

AmbVec CyclicIsometry::apply(const AmbVec& v, long power) const {
  if (static_cast<int>(v.rank()) != rank()) throw std::invalid_argument("rank mismatch in nu");
  AmbVec r(v.rank());
  for (int p = 0; p < k_; ++p) {
    int src = static_cast<int>(mod(p + power, k_));
    for (int i = 0; i < d_; ++i) r.c[p * d_ + i] = v.c[src * d_ + i];
  }
  return r;
}

LatVec CyclicIsometry::slot(const LatVec& v, int p) const {
  LatVec r(d_);
  for (int i = 0; i < d_; ++i) r.c[i] = v.c.at(p * d_ + i);
  return r;
}

LatVec CyclicIsometry::embed(const LatVec& block, int p) const {
  if (static_cast<int>(block.rank()) != d_) throw std::invalid_argument("block rank mismatch");
  LatVec r(rank());
  p = static_cast<int>(mod(p, k_));
  for (int i = 0; i < d_; ++i) r.c[p * d_ + i] = block.c[i];
  return r;
}

LatVec CyclicIsometry::diagonal(const LatVec& block) const {
  if (static_cast<int>(block.rank()) != d_) throw std::invalid_argument("block rank mismatch");
  LatVec r(rank());
  for (int p = 0; p < k_; ++p)
    for (int i = 0; i < d_; ++i) r.c[p * d_ + i] = block.c[i];
  return r;
}

LatVec CyclicIsometry::slot_sum(const LatVec& v) const {
  LatVec r(d_);
  for (int p = 0; p < k_; ++p)
    for (int i = 0; i < d_; ++i) r.c[i] += v.c.at(p * d_ + i);
  return r;
}

AmbVec nu_apply(const CyclicIsometry& nu, const AmbVec& v, long power) { return nu.apply(v, power); }

AmbVec eigenprojection(const CyclicIsometry& nu, const RootsOfUnity& roots, const AmbVec& v, long n) {
  if (nu.k() != roots.k()) throw std::invalid_argument("cycle length mismatch");
  AmbVec acc(v.rank());
  for (int j = 0; j < nu.k(); ++j) acc += roots.eta(-n * j) * nu.apply(v, j);
  acc *= Cyc(rat(1, nu.k()));
  return acc;
}

namespace {

// Q(y) = sum_i D_i (y_i + sum_{j>i} U_ij y_j)^2 with U unit upper triangular.
struct Ldl {
  std::vector<Rat> D;
  std::vector<std::vector<Rat>> U;
};

Ldl ldl(const Lattice& L) {
  const int n = L.rank();
  Ldl f{std::vector<Rat>(n), std::vector<std::vector<Rat>>(n, std::vector<Rat>(n, Rat(0)))};
  for (int i = 0; i < n; ++i) {
    Rat d(static_cast<long>(L.gram(i, i)));
    for (int l = 0; l < i; ++l) d -= f.D[l] * f.U[l][i] * f.U[l][i];
    f.D[i] = d;
    f.U[i][i] = 1;
    for (int j = i + 1; j < n; ++j) {
      Rat s(static_cast<long>(L.gram(i, j)));
      for (int l = 0; l < i; ++l) s -= f.D[l] * f.U[l][i] * f.U[l][j];
      f.U[i][j] = s / d;
    }
  }
  return f;
}

}  // namespace

std::vector<LatVec> enumerate_shifted(const Lattice& L, const std::vector<Rat>& shift, const Rat& bound) {
  const int n = L.rank();
  if (static_cast<int>(shift.size()) != n) throw std::invalid_argument("shift rank mismatch");
  std::vector<LatVec> out;
  if (bound < 0) return out;
  const Ldl f = ldl(L);
  const Rat limit = 2 * bound;
  std::vector<Rat> y(n);  // y = x + shift
  LatVec x(n);

  std::function<void(int, const Rat&)> rec = [&](int i, const Rat& rem) {
    if (i < 0) {
      out.push_back(x);
      return;
    }
    Rat c(0);
    for (int j = i + 1; j < n; ++j) c += f.U[i][j] * y[j];
    const Rat t = shift[i] + c;
    const Rat R = rem / f.D[i];
    BigInt r0;
    BigInt fr = floor(R);
    if (fr < 0) fr = 0;
    mpz_sqrt(r0.get_mpz_t(), fr.get_mpz_t());
    const BigInt lo = floor(-t) - r0 - 1;
    const BigInt hi = ceil(-t) + r0 + 1;
    for (BigInt v = lo; v <= hi; ++v) {
      Rat s = Rat(v) + t;
      Rat used = f.D[i] * s * s;
      if (used > rem) continue;
      x.c[i] = v.get_si();
      y[i] = Rat(v) + shift[i];
      rec(i - 1, rem - used);
    }
  };
  rec(n - 1, limit);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<LatVec> enumerate_up_to_norm(const Lattice& L, const Rat& bound) {
  return enumerate_shifted(L, std::vector<Rat>(L.rank(), Rat(0)), bound);
}

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

IntMatrix identity(std::size_t n) {
  IntMatrix m(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& A0) {
  IntMatrix A = A0;
  const std::size_t m = A.size();
  const std::size_t n = m ? A[0].size() : 0;
  IntMatrix U = identity(m), V = identity(n);
  auto swap_rows = [&](std::size_t a, std::size_t b) {
    std::swap(A[a], A[b]);
    std::swap(U[a], U[b]);
  };
  auto swap_cols = [&](std::size_t a, std::size_t b) {
    for (auto& row : A) std::swap(row[a], row[b]);
    for (auto& row : V) std::swap(row[a], row[b]);
  };
  auto add_row = [&](std::size_t dst, std::size_t src, std::int64_t q) {  // row_dst += q row_src
    for (std::size_t j = 0; j < n; ++j) A[dst][j] += q * A[src][j];
    for (std::size_t j = 0; j < m; ++j) U[dst][j] += q * U[src][j];
  };
  auto add_col = [&](std::size_t dst, std::size_t src, std::int64_t q) {
    for (std::size_t i = 0; i < m; ++i) A[i][dst] += q * A[i][src];
    for (std::size_t i = 0; i < n; ++i) V[i][dst] += q * V[i][src];
  };

  std::vector<std::int64_t> diag;
  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    while (true) {
      std::size_t bi = m, bj = n;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (A[i][j] != 0 && (bi == m || std::llabs(A[i][j]) < std::llabs(A[bi][bj]))) {
            bi = i;
            bj = j;
          }
      if (bi == m) break;
      swap_rows(t, bi);
      swap_cols(t, bj);
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (A[i][t] == 0) continue;
        add_row(i, t, -floor_div(A[i][t], A[t][t]));
        if (A[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (A[t][j] == 0) continue;
        add_col(j, t, -floor_div(A[t][j], A[t][t]));
        if (A[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      bool divides = true;
      for (std::size_t i = t + 1; i < m && divides; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (A[i][j] % A[t][t] != 0) {
            add_row(t, i, 1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (A[t][t] < 0) {
      for (auto& x : A[t]) x = -x;
      for (auto& x : U[t]) x = -x;
    }
    diag.push_back(A[t][t]);
  }
  return SmithForm{std::move(U), std::move(V), std::move(diag)};
}

IntMatrix hermite_normal_form(IntMatrix rows) {
  if (rows.empty()) return rows;
  const std::size_t n = rows[0].size();
  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < rows.size(); ++col) {
    // Euclid on column entries below r.
    while (true) {
      std::size_t piv = rows.size();
      for (std::size_t i = r; i < rows.size(); ++i)
        if (rows[i][col] != 0 && (piv == rows.size() || std::llabs(rows[i][col]) < std::llabs(rows[piv][col])))
          piv = i;
      if (piv == rows.size()) break;
      std::swap(rows[r], rows[piv]);
      bool done = true;
      for (std::size_t i = r + 1; i < rows.size(); ++i) {
        if (rows[i][col] == 0) continue;
        std::int64_t q = floor_div(rows[i][col], rows[r][col]);
        for (std::size_t j = 0; j < n; ++j) rows[i][j] -= q * rows[r][j];
        if (rows[i][col] != 0) done = false;
      }
      if (done) break;
    }
    if (rows[r][col] == 0) continue;
    if (rows[r][col] < 0)
      for (auto& x : rows[r]) x = -x;
    for (std::size_t i = 0; i < r; ++i) {
      std::int64_t q = floor_div(rows[i][col], rows[r][col]);
      for (std::size_t j = 0; j < n; ++j) rows[i][j] -= q * rows[r][j];
    }
    ++r;
  }
  rows.resize(r);
  return rows;
}

std::vector<std::vector<Rat>> dual_coset_reps_rational(const Lattice& K) {
  const int n = K.rank();
  SmithForm s = smith_normal_form(K.gram());
  std::vector<std::vector<Rat>> reps;
  std::vector<std::int64_t> z(n, 0);
  while (true) {
    std::vector<Rat> x(n, Rat(0));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (z[j] != 0) x[i] += Rat(static_cast<long>(s.V[i][j])) * rat(z[j], s.diagonal[j]);
    for (auto& xi : x) xi -= Rat(floor(xi));
    reps.push_back(std::move(x));
    int pos = 0;
    while (pos < n) {
      if (++z[pos] < s.diagonal[pos]) break;
      z[pos] = 0;
      ++pos;
    }
    if (pos == n) break;
  }
  return reps;
}

std::vector<AmbVec> dual_coset_reps(const Lattice& K) {
  std::vector<AmbVec> out;
  for (const auto& x : dual_coset_reps_rational(K)) {
    AmbVec v(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) v.c[i] = Cyc(x[i]);
    out.push_back(std::move(v));
  }
  return out;
}

bool in_dual(const Lattice& K, const std::vector<Rat>& v) {
  const int n = K.rank();
  if (static_cast<int>(v.size()) != n) return false;
  for (int i = 0; i < n; ++i) {
    Rat s(0);
    for (int j = 0; j < n; ++j) s += Rat(static_cast<long>(K.gram(i, j))) * v[j];
    if (!is_integer(s)) return false;
  }
  return true;
}

}  // namespace permorb
