#include "liaison/hilbert.hpp"

#include <algorithm>
#include <array>
#include <cstdint>

namespace liaison {

namespace {

using Exp = std::array<std::uint16_t, kMaxSlots>;
using Numerator = std::map<Multidegree, long long>;

struct Context {
  int nvars;
  std::vector<int> coord;  // variable -> grading coordinate
  int rank;
};

bool divides(const Exp& a, const Exp& b, int n) {
  for (int i = 0; i < n; ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

int total(const Exp& a, int n) {
  int d = 0;
  for (int i = 0; i < n; ++i) d += a[i];
  return d;
}

Multidegree degree_of(const Exp& a, const Context& c) {
  Multidegree md(c.rank, 0);
  for (int v = 0; v < c.nvars; ++v) md[c.coord[v]] += a[v];
  return md;
}

void minimalize(std::vector<Exp>& g, int n) {
  std::sort(g.begin(), g.end(), [n](const Exp& a, const Exp& b) { return total(a, n) < total(b, n); });
  std::vector<Exp> out;
  for (const auto& e : g) {
    bool redundant = false;
    for (const auto& k : out) {
      if (divides(k, e, n)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) out.push_back(e);
  }
  g = std::move(out);
}

// (1 - t^d) * K
Numerator times_one_minus(const Numerator& k, const Multidegree& d) {
  Numerator out = k;
  for (const auto& [md, c] : k) {
    Multidegree s = md;
    for (std::size_t i = 0; i < s.size(); ++i) s[i] += d[i];
    out[s] -= c;
  }
  return out;
}

void add_shifted(Numerator& acc, const Numerator& k, const Multidegree& shift) {
  for (const auto& [md, c] : k) {
    Multidegree s = md;
    for (std::size_t i = 0; i < s.size(); ++i) s[i] += shift[i];
    acc[s] += c;
  }
}

// Pivot recursion N(M) = N(M + p) + t^deg(p) N(M : p).
Numerator numerator(std::vector<Exp> g, const Context& c) {
  const int n = c.nvars;
  minimalize(g, n);
  Numerator one{{Multidegree(c.rank, 0), 1}};
  if (g.empty()) return one;
  if (total(g.front(), n) == 0) return {};  // unit ideal

  std::vector<int> count(n, 0);
  for (const auto& e : g) {
    for (int v = 0; v < n; ++v) count[v] += e[v] > 0;
  }
  const int v = static_cast<int>(std::max_element(count.begin(), count.end()) - count.begin());
  if (count[v] <= 1) {
    // pairwise coprime
    Numerator k = one;
    for (const auto& e : g) k = times_one_minus(k, degree_of(e, c));
    return k;
  }

  std::vector<int> exps;
  int pure = 0;
  for (const auto& e : g) {
    if (e[v] == 0) continue;
    if (total(e, n) == e[v]) {
      pure = e[v];
    } else {
      exps.push_back(e[v]);
    }
  }
  std::sort(exps.begin(), exps.end());
  int piv = exps[exps.size() / 2];
  if (pure && piv >= pure) piv = exps.back();  // every non-pure exponent is below `pure`

  Exp p{};
  p[v] = static_cast<std::uint16_t>(piv);

  std::vector<Exp> sum{p};
  for (const auto& e : g) {
    if (!divides(p, e, n)) sum.push_back(e);
  }
  std::vector<Exp> colon;
  for (auto e : g) {
    e[v] = static_cast<std::uint16_t>(e[v] > piv ? e[v] - piv : 0);
    colon.push_back(e);
  }
  Numerator k = numerator(std::move(sum), c);
  add_shifted(k, numerator(std::move(colon), c), degree_of(p, c));
  std::erase_if(k, [](const auto& kv) { return kv.second == 0; });
  return k;
}

// C(x + k, k) extended polynomially to all integers x (k >= 0).
long long binom_poly(long long x, int k) {
  __int128 num = 1, den = 1;
  for (int i = 1; i <= k; ++i) {
    num *= (x + i);
    den *= i;
  }
  return static_cast<long long>(num / den);
}

// C(m, i) for integer m, as a polynomial in m.
long long binom_lower(long long m, int i) {
  __int128 num = 1, den = 1;
  for (int j = 0; j < i; ++j) {
    num *= (m - j);
    den *= (j + 1);
  }
  return static_cast<long long>(num / den);
}

}  // namespace

HilbertNumerator::HilbertNumerator(const Ring& ring, std::span<const Monomial> generators) {
  Context c{ring.nvars(), std::vector<int>(ring.nvars(), 0), ring.grading_rank()};
  per_coord_.assign(c.rank, 0);
  for (int v = 0; v < c.nvars; ++v) {
    const auto& d = ring.var_degree(v);
    int ones = 0;
    for (int r = 0; r < c.rank; ++r) {
      if (d[r] == 1) {
        ++ones;
        c.coord[v] = r;
      } else if (d[r] != 0) {
        ones = 99;
      }
    }
    if (ones != 1) throw Error(ErrorCode::kInvalidArgument, "Hilbert series needs a standard multigrading");
    ++per_coord_[c.coord[v]];
  }
  std::vector<Exp> g;
  for (const auto& m : generators) {
    Exp e{};
    auto ex = ring.exponents(m);
    for (int v = 0; v < c.nvars; ++v) e[v] = static_cast<std::uint16_t>(ex[v]);
    g.push_back(e);
  }
  k_ = numerator(std::move(g), c);
}

long long HilbertNumerator::function(const Multidegree& m) const {
  long long h = 0;
  for (const auto& [k, c] : k_) {
    long long term = c;
    for (std::size_t j = 0; j < m.size() && term; ++j) {
      const int x = m[j] - k[j];
      term = x < 0 ? 0 : term * binom_poly(x, per_coord_[j] - 1);
    }
    h += term;
  }
  return h;
}

long long HilbertNumerator::polynomial_value(const Multidegree& m) const {
  long long h = 0;
  for (const auto& [k, c] : k_) {
    long long term = c;
    for (std::size_t j = 0; j < m.size(); ++j) term *= binom_poly(m[j] - k[j], per_coord_[j] - 1);
    h += term;
  }
  return h;
}

Multidegree HilbertNumerator::threshold() const {
  Multidegree t(per_coord_.size(), 0);
  for (const auto& [k, c] : k_) {
    for (std::size_t j = 0; j < t.size(); ++j) t[j] = std::max(t[j], k[j] - per_coord_[j] + 1);
  }
  return t;
}

HilbertPolynomial HilbertNumerator::polynomial() const {
  // Mixed forward differences at the origin give the binomial-basis coefficients.
  const std::size_t r = per_coord_.size();
  std::size_t box = 1;
  for (int n : per_coord_) box *= static_cast<std::size_t>(n);
  std::vector<long long> values(box);
  auto unflatten = [&](std::size_t idx) {
    Multidegree m(r);
    for (std::size_t j = r; j-- > 0;) {
      m[j] = static_cast<int>(idx % per_coord_[j]);
      idx /= per_coord_[j];
    }
    return m;
  };
  for (std::size_t i = 0; i < box; ++i) values[i] = polynomial_value(unflatten(i));
  std::size_t stride = 1;
  for (std::size_t j = r; j-- > 0;) {
    const std::size_t n = static_cast<std::size_t>(per_coord_[j]);
    for (std::size_t pass = 1; pass < n; ++pass) {
      for (std::size_t i = box; i-- > 0;) {
        const std::size_t pos = (i / stride) % n;
        if (pos >= pass) values[i] -= values[i - stride];
      }
    }
    stride *= n;
  }
  return HilbertPolynomial(per_coord_, std::move(values));
}

long long HilbertPolynomial::operator()(const Multidegree& m) const {
  long long h = 0;
  for (std::size_t idx = 0; idx < coeffs_.size(); ++idx) {
    if (!coeffs_[idx]) continue;
    std::size_t rest = idx;
    long long term = coeffs_[idx];
    for (std::size_t j = extents_.size(); j-- > 0;) {
      const int i = static_cast<int>(rest % extents_[j]);
      rest /= extents_[j];
      term *= binom_lower(m[j], i);
    }
    h += term;
  }
  return h;
}

long long HilbertPolynomial::coefficient(const std::vector<int>& i) const {
  std::size_t idx = 0;
  for (std::size_t j = 0; j < extents_.size(); ++j) {
    if (i[j] >= extents_[j]) return 0;
    idx = idx * extents_[j] + i[j];
  }
  return coeffs_[idx];
}

int HilbertPolynomial::degree() const {
  int deg = -1;
  for (std::size_t idx = 0; idx < coeffs_.size(); ++idx) {
    if (!coeffs_[idx]) continue;
    std::size_t rest = idx;
    int d = 0;
    for (std::size_t j = extents_.size(); j-- > 0;) {
      d += static_cast<int>(rest % extents_[j]);
      rest /= extents_[j];
    }
    deg = std::max(deg, d);
  }
  return deg;
}

}  // namespace liaison
