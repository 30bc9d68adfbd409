#include "planegerm/upoly.hpp"

#include <algorithm>
#include <sstream>

#include "planegerm/errors.hpp"

namespace planegerm {

UPoly::UPoly(const Rat& c) {
  if (sgn(c) != 0) c_.push_back(c);
}

UPoly::UPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly UPoly::monomial(const Rat& c, int k) {
  UPoly p;
  if (sgn(c) == 0) return p;
  p.c_.assign(k + 1, Rat(0));
  p.c_[k] = c;
  return p;
}

void UPoly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

Rat UPoly::eval(const Rat& t) const {
  Rat acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

UPoly UPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rat> d(c_.size() - 1);
  for (size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * static_cast<long>(k);
  return UPoly(std::move(d));
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  UPoly r = *this;
  Rat l = lead();
  for (auto& c : r.c_) c /= l;
  return r;
}

UPoly UPoly::operator-() const {
  UPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

UPoly& UPoly::operator+=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
  for (size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
  for (size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

UPoly& UPoly::operator*=(const Rat& s) {
  if (sgn(s) == 0) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= s;
  return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rat> r(a.c_.size() + b.c_.size() - 1, Rat(0));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (sgn(a.c_[i]) == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return UPoly(std::move(r));
}

std::string UPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rat& c = c_[k];
    if (sgn(c) == 0) continue;
    Rat a = abs(c);
    if (!first) os << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) os << "-";
    first = false;
    bool unit = (a == 1);
    if (!unit || k == 0) os << to_string(a);
    if (k > 0) {
      if (!unit) os << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw NotInvertible("polynomial division by zero");
  std::vector<Rat> r = a.coeffs();
  int db = b.degree();
  int da = a.degree();
  if (da < db) return {UPoly(), a};
  std::vector<Rat> q(da - db + 1, Rat(0));
  Rat lb = b.lead();
  for (int k = da; k >= db; --k) {
    if (sgn(r[k]) == 0) continue;
    Rat f = r[k] / lb;
    q[k - db] = f;
    for (int m = 0; m <= db; ++m) r[k - db + m] -= f * b.coeff(m);
  }
  r.resize(db);
  return {UPoly(std::move(q)), UPoly(std::move(r))};
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a, y = b;
  while (!y.is_zero()) {
    UPoly r = divmod(x, y).second;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

UPoly square_free(const UPoly& p) {
  if (p.degree() <= 0) return p.monic();
  UPoly g = gcd(p, p.derivative());
  return divmod(p, g).first.monic();
}

std::vector<UPoly> sturm_sequence(const UPoly& p) {
  std::vector<UPoly> s{p, p.derivative()};
  while (!s.back().is_zero()) {
    UPoly r = divmod(s[s.size() - 2], s.back()).second;
    if (r.is_zero()) break;
    s.push_back(-r);
  }
  if (s.back().is_zero()) s.pop_back();
  return s;
}

static int variations(const std::vector<UPoly>& s, const Rat& t) {
  int v = 0, last = 0;
  for (const auto& p : s) {
    int sg = p.sign_at(t);
    if (sg == 0) continue;
    if (last != 0 && sg != last) ++v;
    last = sg;
  }
  return v;
}

int count_roots(const std::vector<UPoly>& sturm, const Rat& lo, const Rat& hi) {
  return variations(sturm, lo) - variations(sturm, hi);
}

Rat root_bound(const UPoly& p) {
  Rat m = 0;
  for (int k = 0; k < p.degree(); ++k) {
    Rat r = abs(p.coeff(k) / p.lead());
    if (r > m) m = r;
  }
  return m + 1;
}

// Splits (lo, hi) at a point where p does not vanish.
static Rat split_point(const UPoly& p, const Rat& lo, const Rat& hi) {
  for (long den = 2;; ++den)
    for (long num = 1; num < den; ++num) {
      Rat m = lo + (hi - lo) * Rat(num, den);
      if (p.sign_at(m) != 0) return m;
    }
}

static std::vector<mpz_class> divisors(mpz_class n) {
  n = abs(n);
  std::vector<mpz_class> small, large;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

static std::vector<Rat> rational_roots(const UPoly& p) {
  std::vector<Rat> roots;
  mpz_class l = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  std::vector<mpz_class> z;
  for (const auto& c : p.coeffs()) z.push_back(mpz_class(c * l));
  size_t low = 0;
  while (low < z.size() && z[low] == 0) ++low;
  if (low > 0) roots.push_back(0);
  const mpz_class cap("1000000000000");
  if (abs(z[low]) > cap || abs(z.back()) > cap) return roots;
  for (const auto& a : divisors(z[low]))
    for (const auto& b : divisors(z.back()))
      for (int s : {-1, 1}) {
        Rat r(a * s, b);
        r.canonicalize();
        if (std::find(roots.begin(), roots.end(), r) == roots.end() && p.sign_at(r) == 0) roots.push_back(r);
      }
  return roots;
}

std::vector<RealRoot> isolate_real_roots(const UPoly& p0) {
  if (p0.is_zero()) throw ContractViolation("root isolation of the zero polynomial");
  UPoly p = square_free(p0);
  std::vector<RealRoot> out;
  for (const Rat& r : rational_roots(p)) {
    out.push_back({r, r});
    p = divmod(p, UPoly(std::vector<Rat>{-r, 1})).first;
  }
  if (p.degree() >= 1) {
    auto st = sturm_sequence(p);
    Rat b = root_bound(p);
    struct Item {
      Rat lo, hi;
      int n;
    };
    std::vector<Item> stack{{-b, b, count_roots(st, -b, b)}};
    while (!stack.empty()) {
      Item it = stack.back();
      stack.pop_back();
      if (it.n == 0) continue;
      if (it.n == 1) {
        RealRoot rr{it.lo, it.hi};
        // keep the interval clear of the rational roots found above
        for (;;) {
          bool clash = false;
          for (const auto& e : out)
            if (e.exact() && e.lo > rr.lo && e.lo < rr.hi) clash = true;
          if (!clash) break;
          Rat m = split_point(p, rr.lo, rr.hi);
          if (count_roots(st, rr.lo, m) == 1) rr.hi = m;
          else rr.lo = m;
        }
        out.push_back(rr);
        continue;
      }
      Rat m = split_point(p, it.lo, it.hi);
      int left = count_roots(st, it.lo, m);
      stack.push_back({it.lo, m, left});
      stack.push_back({m, it.hi, it.n - left});
    }
  }
  std::sort(out.begin(), out.end(), [](const RealRoot& a, const RealRoot& b) { return a.lo < b.lo; });
  return out;
}

RealRoot refine(const UPoly& p, RealRoot r, const Rat& width) {
  if (r.exact()) return r;
  int slo = p.sign_at(r.lo);
  while (r.hi - r.lo >= width) {
    Rat m = (r.lo + r.hi) / 2;
    int sm = p.sign_at(m);
    if (sm == 0) return {m, m};
    if (sm == slo) r.lo = m;
    else r.hi = m;
  }
  return r;
}

int sign_at_root(const UPoly& q, const UPoly& p, const RealRoot& r) {
  if (r.exact()) return q.sign_at(r.lo);
  if (q.is_zero()) return 0;
  UPoly g = gcd(p, q);
  if (g.degree() >= 1 && count_roots(sturm_sequence(g), r.lo, r.hi) > 0) return 0;
  UPoly qs = square_free(q);
  auto st = sturm_sequence(qs);
  RealRoot cur = r;
  Rat width = cur.hi - cur.lo;
  while (qs.degree() >= 1 && count_roots(st, cur.lo, cur.hi) > 0) {
    width /= 2;
    cur = refine(p, cur, width);
    if (cur.exact()) return q.sign_at(cur.lo);
  }
  return q.sign_at(cur.hi);
}

}  // namespace planegerm
