#include "liaison/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace liaison {

void require_same_ring(const RingPtr& a, const RingPtr& b) {
  if (!same_ring(a, b)) throw Error(ErrorCode::kMixedRings, "operands live in different rings");
}

Polynomial Polynomial::constant(RingPtr ring, Coeff c) {
  Polynomial f(std::move(ring));
  c %= f.ring_->field().p();
  if (c != 0) f.terms_.push_back({f.ring_->one(), c});
  return f;
}

Polynomial Polynomial::monomial(RingPtr ring, const Monomial& m, Coeff c) {
  Polynomial f(std::move(ring));
  c %= f.ring_->field().p();
  if (c != 0) f.terms_.push_back({m, c});
  return f;
}

Polynomial Polynomial::variable(RingPtr ring, int var) {
  Monomial m = ring->variable(var);
  return monomial(std::move(ring), m, 1);
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  Polynomial f(std::move(ring));
  const Ring& R = *f.ring_;
  const PrimeField& F = R.field();
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) { return R.greater(a.mono, b.mono); });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (const auto& t : terms) {
    Coeff c = t.coeff % F.p();
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff = F.add(out.back().coeff, c);
      if (out.back().coeff == 0) out.pop_back();
    } else if (c != 0) {
      out.push_back({t.mono, c});
    }
  }
  f.terms_ = std::move(out);
  return f;
}

Polynomial Polynomial::from_sorted_terms(RingPtr ring, std::vector<Term> terms) {
  Polynomial f(std::move(ring));
  f.terms_ = std::move(terms);
  return f;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono == ring_->one());
}

namespace {

// a + sign*b, both canonical
std::vector<Term> merge_add(const Ring& R, const std::vector<Term>& a, const std::vector<Term>& b, bool negate_b) {
  const PrimeField& F = R.field();
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    int c = R.compare(a[i].mono, b[j].mono);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back({b[j].mono, negate_b ? F.neg(b[j].coeff) : b[j].coeff});
      ++j;
    } else {
      Coeff s = negate_b ? F.sub(a[i].coeff, b[j].coeff) : F.add(a[i].coeff, b[j].coeff);
      if (s != 0) out.push_back({a[i].mono, s});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back({b[j].mono, negate_b ? F.neg(b[j].coeff) : b[j].coeff});
  return out;
}

}  // namespace

Polynomial Polynomial::operator+(const Polynomial& o) const {
  require_same_ring(ring_, o.ring_);
  return from_sorted_terms(ring_, merge_add(*ring_, terms_, o.terms_, false));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  require_same_ring(ring_, o.ring_);
  return from_sorted_terms(ring_, merge_add(*ring_, terms_, o.terms_, true));
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& t : r.terms_) t.coeff = ring_->field().neg(t.coeff);
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  require_same_ring(ring_, o.ring_);
  if (is_zero() || o.is_zero()) return Polynomial(ring_);
  if (total_degree() + o.total_degree() > kMaxDegree) throw Error(ErrorCode::kOverflow, "product degree exceeds cap");
  if (terms_.size() == 1) return o.times(terms_[0].mono, terms_[0].coeff);
  if (o.terms_.size() == 1) return times(o.terms_[0].mono, o.terms_[0].coeff);
  const PrimeField& F = ring_->field();
  std::vector<Term> prod;
  prod.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_) {
    for (const auto& b : o.terms_) prod.push_back({Ring::mul(a.mono, b.mono), F.mul(a.coeff, b.coeff)});
  }
  return from_terms(ring_, std::move(prod));
}

Polynomial Polynomial::scaled(Coeff c) const {
  const PrimeField& F = ring_->field();
  c %= F.p();
  if (c == 0) return Polynomial(ring_);
  Polynomial r(*this);
  for (auto& t : r.terms_) t.coeff = F.mul(t.coeff, c);
  return r;
}

Polynomial Polynomial::times(const Monomial& m, Coeff c) const {
  const PrimeField& F = ring_->field();
  c %= F.p();
  if (c == 0 || is_zero()) return Polynomial(ring_);
  if (total_degree() + ring_->total_degree(m) > kMaxDegree) throw Error(ErrorCode::kOverflow, "product degree exceeds cap");
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({Ring::mul(t.mono, m), F.mul(t.coeff, c)});
  return r;
}

Polynomial Polynomial::pow(int e) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(ring_->field().inv(leading_coeff()));
}

std::optional<Multidegree> Polynomial::multidegree() const {
  if (is_zero()) return std::nullopt;
  Multidegree md = ring_->multidegree(terms_[0].mono);
  for (std::size_t i = 1; i < terms_.size(); ++i) {
    if (ring_->multidegree(terms_[i].mono) != md) {
      throw Error(ErrorCode::kHomogeneity, "terms of " + to_string() + " have different multidegrees");
    }
  }
  return md;
}

bool Polynomial::is_homogeneous() const {
  if (is_zero()) return true;
  Multidegree md = ring_->multidegree(terms_[0].mono);
  for (std::size_t i = 1; i < terms_.size(); ++i) {
    if (ring_->multidegree(terms_[i].mono) != md) return false;
  }
  return true;
}

int Polynomial::total_degree() const {
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, ring_->total_degree(t.mono));
  return d;
}

std::string Polynomial::to_string(Residues style) const {
  if (is_zero()) return "0";
  const Ring& R = *ring_;
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    std::int64_t c = style == Residues::kSymmetric ? R.field().symmetric(t.coeff) : std::int64_t{t.coeff};
    if (c < 0) {
      os << '-';
      c = -c;
    } else if (!first) {
      os << '+';
    }
    first = false;
    const bool is_one = t.mono == R.one();
    bool need_star = false;
    if (c != 1 || is_one) {
      os << c;
      need_star = true;
    }
    for (int v = 0; v < R.nvars(); ++v) {
      int e = R.exponent(t.mono, v);
      if (e == 0) continue;
      if (need_star) os << '*';
      os << R.var_name(v);
      if (e > 1) os << '^' << e;
      need_star = true;
    }
  }
  return os.str();
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (!same_ring(a.ring_, b.ring_) || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].coeff != b.terms_[i].coeff || !(a.terms_[i].mono == b.terms_[i].mono)) return false;
  }
  return true;
}

namespace {

class Parser {
 public:
  Parser(const RingPtr& ring, std::string_view text) : ring_(ring), text_(text) {}

  Polynomial parse() {
    std::vector<Term> terms;
    skip();
    if (pos_ >= text_.size()) fail("empty input");
    bool first = true;
    while (true) {
      skip();
      if (pos_ >= text_.size()) break;
      bool negative = false;
      if (text_[pos_] == '+' || text_[pos_] == '-') {
        negative = text_[pos_] == '-';
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      Term t = parse_term();
      if (negative) t.coeff = ring_->field().neg(t.coeff);
      terms.push_back(t);
    }
    return Polynomial::from_terms(ring_, std::move(terms));
  }

 private:
  Term parse_term() {
    const PrimeField& F = ring_->field();
    std::vector<int> exps(ring_->nvars(), 0);
    Coeff c = 1;
    while (true) {
      skip();
      if (pos_ >= text_.size()) fail("dangling operator");
      if (std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        c = F.mul(c, F.from_int(parse_int()));
      } else if (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_') {
        std::size_t start = pos_;
        // variable names are letters followed by digits (x0, y12, t)
        while (pos_ < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        std::string_view name = text_.substr(start, pos_ - start);
        auto v = ring_->var_index(name);
        if (!v) fail("unknown variable '" + std::string(name) + "'");
        int e = 1;
        skip();
        if (pos_ < text_.size() && text_[pos_] == '^') {
          ++pos_;
          skip();
          std::int64_t ee = parse_int();
          if (ee > kMaxDegree) throw Error(ErrorCode::kOverflow, "exponent too large");
          e = static_cast<int>(ee);
        }
        exps[*v] += e;
      } else {
        fail(std::string("unexpected character '") + text_[pos_] + "'");
      }
      skip();
      if (pos_ < text_.size() && text_[pos_] == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    return {ring_->monomial(exps), c};
  }

  std::int64_t parse_int() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, v);
    if (ec != std::errc() || ptr != text_.data() + pos_) fail("bad integer");
    return v;
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorCode::kParse, msg + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  const RingPtr& ring_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const RingPtr& ring, std::string_view text) { return Parser(ring, text).parse(); }

Polynomial map_by_names(const Polynomial& f, const RingPtr& target) {
  const Ring& S = *f.ring();
  std::vector<int> to(S.nvars(), -1);
  for (int v = 0; v < S.nvars(); ++v) {
    if (auto w = target->var_index(S.var_name(v))) to[v] = *w;
  }
  std::vector<Term> terms;
  terms.reserve(f.size());
  std::vector<int> e(target->nvars());
  for (const auto& t : f.terms()) {
    std::fill(e.begin(), e.end(), 0);
    for (int v = 0; v < S.nvars(); ++v) {
      int x = S.exponent(t.mono, v);
      if (x == 0) continue;
      if (to[v] < 0) throw Error(ErrorCode::kMixedRings, "variable " + S.var_name(v) + " missing in target ring");
      e[to[v]] = x;
    }
    terms.push_back({target->monomial(e), t.coeff});
  }
  if (target->field().p() != S.field().p()) throw Error(ErrorCode::kMixedRings, "field mismatch");
  return Polynomial::from_terms(target, std::move(terms));
}

Polynomial substitute(const Polynomial& f, const RingPtr& target, std::span<const Polynomial> images) {
  const Ring& S = *f.ring();
  if (static_cast<int>(images.size()) != S.nvars()) throw Error(ErrorCode::kInvalidArgument, "substitution arity");
  // cache powers of each image
  std::vector<std::vector<Polynomial>> powers(S.nvars());
  auto power = [&](int v, int e) -> const Polynomial& {
    auto& p = powers[v];
    if (p.empty()) p.push_back(Polynomial::constant(target, 1));
    while (static_cast<int>(p.size()) <= e) p.push_back(p.back() * images[v]);
    return p[e];
  };
  std::vector<Term> acc;
  for (const auto& t : f.terms()) {
    Polynomial term = Polynomial::constant(target, t.coeff);
    for (int v = 0; v < S.nvars() && !term.is_zero(); ++v) {
      int e = S.exponent(t.mono, v);
      if (e) term = term * power(v, e);
    }
    acc.insert(acc.end(), term.terms().begin(), term.terms().end());
  }
  return Polynomial::from_terms(target, std::move(acc));
}

Polynomial specialize_fiber(const Polynomial& f, Coeff l0, Coeff l1, const RingPtr& plane) {
  const Ring& S = *f.ring();
  if (S.ambient() != Ambient::kP1xP2) throw Error(ErrorCode::kInvalidArgument, "fiber specialization needs a P1xP2 form");
  const PrimeField& F = S.field();
  if (l0 % F.p() == 0 && l1 % F.p() == 0) throw Error(ErrorCode::kInvalidArgument, "(0:0) is not a point of P1");
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) {
    Coeff c = F.mul(t.coeff, F.mul(F.pow(l0, S.exponent(t.mono, 0)), F.pow(l1, S.exponent(t.mono, 1))));
    if (c == 0) continue;
    int e[3] = {S.exponent(t.mono, 2), S.exponent(t.mono, 3), S.exponent(t.mono, 4)};
    terms.push_back({plane->monomial(e), c});
  }
  return Polynomial::from_terms(plane, std::move(terms));
}

std::optional<Polynomial> divide_exact(const Polynomial& f, const Polynomial& g) {
  require_same_ring(f.ring(), g.ring());
  if (g.is_zero()) throw Error(ErrorCode::kDivisionByZero, "division by the zero polynomial");
  const Ring& R = *f.ring();
  const PrimeField& F = R.field();
  const Coeff lc_inv = F.inv(g.leading_coeff());
  Polynomial rem = f;
  std::vector<Term> quot;
  while (!rem.is_zero()) {
    const Term& lt = rem.leading();
    if (!Ring::divides(g.leading_monomial(), lt.mono)) return std::nullopt;
    Term q{Ring::div(lt.mono, g.leading_monomial()), F.mul(lt.coeff, lc_inv)};
    quot.push_back(q);
    rem = rem - g.times(q.mono, q.coeff);
  }
  return Polynomial::from_sorted_terms(f.ring(), std::move(quot));
}

Polynomial derivative(const Polynomial& f, int var) {
  const Ring& R = *f.ring();
  const PrimeField& F = R.field();
  std::vector<Term> terms;
  for (const auto& t : f.terms()) {
    int e = R.exponent(t.mono, var);
    if (e == 0) continue;
    Coeff c = F.mul(t.coeff, F.from_int(e));
    if (c == 0) continue;
    terms.push_back({Ring::div(t.mono, R.variable(var)), c});
  }
  return Polynomial::from_terms(f.ring(), std::move(terms));
}

Coeff evaluate(const Polynomial& f, std::span<const Coeff> point) {
  const Ring& R = *f.ring();
  const PrimeField& F = R.field();
  if (static_cast<int>(point.size()) != R.nvars()) throw Error(ErrorCode::kInvalidArgument, "point arity");
  Coeff acc = 0;
  for (const auto& t : f.terms()) {
    Coeff v = t.coeff;
    for (int i = 0; i < R.nvars() && v != 0; ++i) {
      int e = R.exponent(t.mono, i);
      if (e) v = F.mul(v, F.pow(point[i], e));
    }
    acc = F.add(acc, v);
  }
  return acc;
}

namespace {

void enumerate(const Ring& R, const std::vector<int>& vars, std::size_t idx, Multidegree& remaining,
               std::vector<int>& exps, std::vector<Monomial>& out) {
  if (idx == vars.size()) {
    for (int r : remaining) {
      if (r != 0) return;
    }
    out.push_back(R.monomial(exps));
    return;
  }
  const int v = vars[idx];
  const auto& d = R.var_degree(v);
  int max_e = kMaxDegree;
  for (std::size_t r = 0; r < d.size(); ++r) {
    if (d[r] > 0) max_e = std::min(max_e, remaining[r] / d[r]);
  }
  for (int e = max_e; e >= 0; --e) {
    for (std::size_t r = 0; r < d.size(); ++r) remaining[r] -= e * d[r];
    exps[v] = e;
    enumerate(R, vars, idx + 1, remaining, exps, out);
    for (std::size_t r = 0; r < d.size(); ++r) remaining[r] += e * d[r];
  }
  exps[v] = 0;
}

}  // namespace

std::vector<Monomial> monomials_of_multidegree(const Ring& R, const Multidegree& md) {
  if (static_cast<int>(md.size()) != R.grading_rank()) throw Error(ErrorCode::kInvalidArgument, "multidegree rank");
  std::vector<Monomial> out;
  for (int r : md) {
    if (r < 0) return out;
  }
  std::vector<int> vars;
  for (int v = 0; v < R.nvars(); ++v) {
    bool positive = false;
    for (int d : R.var_degree(v)) positive |= d > 0;
    if (positive) vars.push_back(v);
  }
  Multidegree rem = md;
  std::vector<int> exps(R.nvars(), 0);
  enumerate(R, vars, 0, rem, exps, out);
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) { return R.greater(a, b); });
  return out;
}

long long count_monomials(const Ring& R, const Multidegree& md) {
  // standard multigrading: every variable's degree is a unit vector
  std::vector<int> per_coord(R.grading_rank(), 0);
  bool standard = true;
  for (int v = 0; v < R.nvars() && standard; ++v) {
    const auto& d = R.var_degree(v);
    int ones = 0, where = -1;
    for (std::size_t r = 0; r < d.size(); ++r) {
      if (d[r] == 1) {
        ++ones;
        where = static_cast<int>(r);
      } else if (d[r] != 0) {
        standard = false;
      }
    }
    if (ones == 1) {
      ++per_coord[where];
    } else if (ones > 1) {
      standard = false;
    }
  }
  if (!standard) return static_cast<long long>(monomials_of_multidegree(R, md).size());
  long long n = 1;
  for (int r = 0; r < R.grading_rank(); ++r) {
    if (md[r] < 0) return 0;
    const int k = per_coord[r];
    if (k == 0) {
      if (md[r] != 0) return 0;
      continue;
    }
    // C(md + k - 1, k - 1)
    long long c = 1;
    for (int i = 1; i < k; ++i) c = c * (md[r] + i) / i;
    n *= c;
  }
  return n;
}

}  // namespace liaison
