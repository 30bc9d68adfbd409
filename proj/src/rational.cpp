#include "planegerm/rational.hpp"

#include "planegerm/errors.hpp"

namespace planegerm {

std::string to_string(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rat parse_rat(const std::string& s) {
  std::string t;
  for (char c : s)
    if (c != ' ') t += c;
  if (t.empty()) throw ParseError("empty rational");
  if (t[0] == '+') t.erase(0, 1);
  auto slash = t.find('/');
  auto digits_ok = [](const std::string& d, bool allow_sign) {
    size_t k = (allow_sign && !d.empty() && d[0] == '-') ? 1 : 0;
    if (k == d.size()) return false;
    for (; k < d.size(); ++k)
      if (d[k] < '0' || d[k] > '9') return false;
    return true;
  };
  std::string num = t.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : t.substr(slash + 1);
  if (!digits_ok(num, true) || !digits_ok(den, false)) throw ParseError("malformed rational '" + s + "'");
  mpz_class n(num, 10), d(den, 10);
  if (d == 0) throw ParseError("zero denominator in '" + s + "'");
  Rat r(n, d);
  r.canonicalize();
  return r;
}

Rat rat_pow(const Rat& r, int e) {
  if (e < 0) {
    if (sgn(r) == 0) throw NotInvertible("0 to a negative power");
    Rat inv = 1 / r;
    return rat_pow(inv, -e);
  }
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), r.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(d.get_mpz_t(), r.get_den_mpz_t(), static_cast<unsigned long>(e));
  return Rat(n, d);
}

static std::optional<mpz_class> exact_root(const mpz_class& a, unsigned long k) {
  mpz_class r;
  if (mpz_root(r.get_mpz_t(), a.get_mpz_t(), k) == 0) return std::nullopt;
  return r;
}

std::optional<Rat> rational_sqrt(const Rat& r) {
  if (sgn(r) < 0) return std::nullopt;
  auto n = exact_root(r.get_num(), 2);
  auto d = exact_root(r.get_den(), 2);
  if (!n || !d) return std::nullopt;
  return Rat(*n, *d);
}

std::optional<Rat> rational_cbrt(const Rat& r) {
  mpz_class an = abs(r.get_num());
  auto n = exact_root(an, 3);
  auto d = exact_root(r.get_den(), 3);
  if (!n || !d) return std::nullopt;
  Rat out(*n, *d);
  if (sgn(r) < 0) out = -out;
  return out;
}

}  // namespace planegerm
