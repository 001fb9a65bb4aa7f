#include "polydisc/multipoly.hpp"

#include <sstream>

#include "polydisc/errors.hpp"

namespace polydisc {

MultiPoly MultiPoly::constant(int nvars, const Rational& c) {
  MultiPoly p(nvars);
  p.add_term(Exponents(static_cast<std::size_t>(nvars), 0), c);
  return p;
}

MultiPoly MultiPoly::variable(int nvars, int i) {
  MultiPoly p(nvars);
  Exponents e(static_cast<std::size_t>(nvars), 0);
  e[i] = 1;
  p.add_term(e, 1);
  return p;
}

Rational MultiPoly::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(const Exponents& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int MultiPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int v : e) s += v;
    d = std::max(d, s);
  }
  return d;
}

bool MultiPoly::is_homogeneous() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int v : e) s += v;
    if (d >= 0 && s != d) return false;
    d = s;
  }
  return true;
}

bool MultiPoly::is_integral() const {
  for (const auto& [e, c] : terms_)
    if (c.get_den() != 1) return false;
  return true;
}

Rational MultiPoly::eval(const std::vector<Rational>& x) const {
  Rational s = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (int i = 0; i < nvars_; ++i)
      for (int k = 0; k < e[i]; ++k) t *= x[i];
    s += t;
  }
  return s;
}

Integer MultiPoly::eval(const std::vector<Integer>& x) const {
  Integer s = 0, t, p;
  for (const auto& [e, c] : terms_) {
    if (c.get_den() != 1) throw DomainError("MultiPoly::eval: non-integral coefficient");
    t = c.get_num();
    for (int i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      mpz_pow_ui(p.get_mpz_t(), x[i].get_mpz_t(), static_cast<unsigned long>(e[i]));
      t *= p;
    }
    s += t;
  }
  return s;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  if (nvars_ == 0 && terms_.empty()) nvars_ = o.nvars_;
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  if (nvars_ == 0 && terms_.empty()) nvars_ = o.nvars_;
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly r(std::max(a.nvars_, b.nvars_));
  MultiPoly::Exponents e(static_cast<std::size_t>(r.nvars_));
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (int i = 0; i < r.nvars_; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

std::string MultiPoly::to_string(const std::string& prefix, int first_index) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational a = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool constant = true;
    for (int v : e) constant = constant && v == 0;
    if (constant || a != 1) {
      out << a.get_str();
      if (!constant) out << "*";
    }
    bool sep = false;
    for (int i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      if (sep) out << "*";
      sep = true;
      out << prefix << (i + first_index);
      if (e[i] > 1) out << "^" << e[i];
    }
  }
  return out.str();
}

MultiPoly pow(const MultiPoly& p, unsigned k) {
  MultiPoly r = MultiPoly::constant(p.nvars(), 1), b = p;
  while (k) {
    if (k & 1U) r = r * b;
    k >>= 1U;
    if (k) b = b * b;
  }
  return r;
}

MultiPoly substitute_linear(const MultiPoly& F, const IntMatrix& U) {
  const int n = F.nvars();
  std::vector<MultiPoly> lin;
  for (int i = 0; i < n; ++i) {
    MultiPoly l(n);
    MultiPoly::Exponents e(static_cast<std::size_t>(n), 0);
    for (int j = 0; j < n; ++j) {
      e[j] = 1;
      l.add_term(e, Rational(U(i, j)));
      e[j] = 0;
    }
    lin.push_back(l);
  }
  // powers of each linear form, cached per variable
  std::vector<std::vector<MultiPoly>> pw(static_cast<std::size_t>(n));
  MultiPoly out(n);
  for (const auto& [e, c] : F.terms()) {
    MultiPoly t = MultiPoly::constant(n, c);
    for (int i = 0; i < n; ++i) {
      if (e[i] == 0) continue;
      auto& cache = pw[i];
      if (cache.empty()) cache.push_back(MultiPoly::constant(n, 1));
      while (static_cast<int>(cache.size()) <= e[i]) cache.push_back(cache.back() * lin[i]);
      t = t * cache[e[i]];
    }
    out += t;
  }
  return out;
}

bool sqrt_exact(const MultiPoly& p, MultiPoly* root) {
  const int n = p.nvars();
  if (p.is_zero()) {
    *root = MultiPoly(n);
    return true;
  }
  const auto& le = p.leading_exponents();
  MultiPoly::Exponents half(le.size());
  for (std::size_t i = 0; i < le.size(); ++i) {
    if (le[i] % 2) return false;
    half[i] = le[i] / 2;
  }
  Rational lc = p.leading_coefficient();
  if (lc < 0) return false;
  Integer num = lc.get_num(), den = lc.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return false;
  Integer sn, sd;
  mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
  MultiPoly s(n);
  Rational lead(sn, sd);
  lead.canonicalize();
  s.add_term(half, lead);
  Rational two_lead = 2 * lead;
  // each step fixes the current leading term of p - s^2
  int hd = 0;
  for (int v : half) hd += v;
  Integer limit = binomial(static_cast<unsigned>(hd + n - 1), static_cast<unsigned>(n > 0 ? n - 1 : 0)) + 1;
  for (Integer guard = 0; guard <= limit; ++guard) {
    MultiPoly r = p - s * s;
    if (r.is_zero()) {
      *root = s;
      return true;
    }
    const auto& re = r.leading_exponents();
    MultiPoly::Exponents q(re.size());
    for (std::size_t i = 0; i < re.size(); ++i) {
      q[i] = re[i] - half[i];
      if (q[i] < 0) return false;
    }
    if (q >= half) return false;
    s.add_term(q, r.leading_coefficient() / two_lead);
  }
  return false;
}

}  // namespace polydisc
