#include "grs/scalar.hpp"

#include <cctype>
#include <numeric>

namespace grs {

Scalar make_scalar(long num, long den) {
  if (den == 0) throw InvalidInput("zero denominator");
  Scalar x(num, den);
  x.canonicalize();
  return x;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  std::string_view s = text;
  bool neg = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  std::string_view num = s, den = "1";
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    num = s.substr(0, slash);
    den = s.substr(slash + 1);
  }
  if (!all_digits(num) || !all_digits(den))
    throw InvalidInput("malformed rational \"" + std::string(text) + "\"");
  mpz_class n(std::string(num), 10), d(std::string(den), 10);
  if (d == 0) throw InvalidInput("zero denominator in \"" + std::string(text) + "\"");
  Scalar x(neg ? mpz_class(-n) : n, d);
  x.canonicalize();
  return x;
}

std::string to_string(const Scalar& x) { return x.get_str(); }

long to_long(const Scalar& x) {
  if (!is_integer(x) || !x.get_num().fits_slong_p())
    throw std::domain_error("scalar " + to_string(x) + " is not a machine integer");
  return x.get_num().get_si();
}

Scalar floor_of(const Scalar& x) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return Scalar(q);
}

Scalar mod_into(const Scalar& x, const Scalar& m) {
  Scalar q = x / m;
  return x - m * floor_of(q);
}

Scalar abs_of(const Scalar& x) { return sgn(x) < 0 ? Scalar(-x) : x; }

Scalar rational_gcd(const Scalar& a, const Scalar& b) {
  if (is_zero(a)) return abs_of(b);
  if (is_zero(b)) return abs_of(a);
  // gcd(p/q, r/s) = gcd(ps, rq) / (qs)
  mpz_class g, l;
  mpz_class ps = abs(a.get_num()) * b.get_den();
  mpz_class rq = abs(b.get_num()) * a.get_den();
  mpz_gcd(g.get_mpz_t(), ps.get_mpz_t(), rq.get_mpz_t());
  Scalar out(g, a.get_den() * b.get_den());
  out.canonicalize();
  return out;
}

long gcd_long(long a, long b) { return std::gcd(a, b); }
long lcm_long(long a, long b) { return (a == 0 || b == 0) ? 0 : std::lcm(a, b); }

}  // namespace grs
