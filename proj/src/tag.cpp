#include "grs/tag.hpp"

#include <algorithm>
#include <array>
#include <regex>

namespace grs {

namespace {

[[noreturn]] void bad(const std::string& why) { throw InvalidInput(why); }

std::string base_name(const TypeTag& t) {
  auto num = [](int x) { return std::to_string(x); };
  switch (t.family) {
    case Family::A: return "A_" + num(t.n);
    case Family::B: return "B_" + num(t.n);
    case Family::C: return "C_" + num(t.n);
    case Family::D: return "D_" + num(t.n);
    case Family::E: return "E_" + num(t.n);
    case Family::F: return "F_" + num(t.n);
    case Family::G: return "G_" + num(t.n);
    case Family::B0: return "B(0," + num(t.n) + ")";
    case Family::ASuper: return "A(" + num(t.m) + "," + num(t.n) + ")";
    case Family::BSuper: return "B(" + num(t.m) + "," + num(t.n) + ")";
    case Family::CSuper: return "C(" + num(t.n) + ")";
    case Family::DSuper: return "D(" + num(t.m) + "," + num(t.n) + ")";
    case Family::D21:
      if (t.lambda && *t.lambda != 1) return "D(2,1;" + to_string(*t.lambda) + ")";
      return "D(2,1)";
    case Family::G3: return "G(3)";
    case Family::F4Super: return "F(4)";
    case Family::Cmn: return "C(" + num(t.m) + "," + num(t.n) + ")";
    case Family::BCmn: return "BC(" + num(t.m) + "," + num(t.n) + ")";
    case Family::ATilde: return "~A(" + num(t.n) + "," + num(t.n) + ")";
    case Family::Quotient: return "~A(" + num(t.n) + "," + num(t.n) + ")";
    case Family::Peculiar: return "C(1,1)";
  }
  return "?";
}

bool in_orbit_domain(const Scalar& l) { return !is_zero(l) && l != -1; }

}  // namespace

std::string to_string(const TypeTag& t) {
  if (t.family == Family::Quotient) return base_name(t) + "^(1)_" + to_string(t.q.value_or(0));
  if (t.family == Family::Peculiar) return "C(1,1)^" + to_string(t.q.value_or(0));
  std::string s = base_name(t);
  if (t.twist > 0) s += "^(" + std::to_string(t.twist) + ")";
  return s;
}

TypeTag parse_tag(std::string_view text) {
  std::string s(text);
  if (auto p = s.find("\u00C3"); p != std::string::npos) s.replace(p, 2, "~A");
  static const std::regex simple(R"(^([ABCDEFG])_(\d+)(?:\^\((\d)\))?$)");
  static const std::regex pair(R"(^(A|B|C|D|BC|~A)\((\d+),(\d+)\)(?:\^\((\d)\))?(?:_(-?\d+(?:/\d+)?))?$)");
  static const std::regex single(R"(^C\((\d+)\)(?:\^\((\d)\))?$)");
  static const std::regex d21(R"(^D\(2,1(?:;(-?\d+(?:/\d+)?))?\)(?:\^\((\d)\))?$)");
  static const std::regex exc(R"(^(G\(3\)|F\(4\))(?:\^\((\d)\))?$)");
  static const std::regex pec(R"(^C\(1,1\)\^(-?\d+(?:/\d+)?)$)");
  std::smatch mt;
  TypeTag t;
  auto twist_of = [](const std::ssub_match& g) { return g.matched ? std::stoi(g.str()) : 0; };
  try {
    if (std::regex_match(s, mt, simple)) {
      static const std::string letters = "ABCDEFG";
      t.family = static_cast<Family>(letters.find(mt[1].str()[0]));
      t.n = std::stoi(mt[2]);
      t.twist = twist_of(mt[3]);
    } else if (std::regex_match(s, mt, pec)) {
      t.family = Family::Peculiar;
      t.m = t.n = 1;
      t.q = parse_scalar(mt[1].str());
    } else if (std::regex_match(s, mt, pair)) {
      const std::string f = mt[1];
      t.m = std::stoi(mt[2]);
      t.n = std::stoi(mt[3]);
      t.twist = twist_of(mt[4]);
      if (mt[5].matched) {
        if (f != "~A" || t.twist != 1) bad("only ~A(n,n)^(1) takes a _q suffix: " + s);
        t.family = Family::Quotient;
        t.twist = 0;
        t.q = parse_scalar(mt[5].str());
      } else if (f == "A") t.family = Family::ASuper;
      else if (f == "B") t.family = t.m == 0 ? Family::B0 : Family::BSuper;
      else if (f == "C") t.family = Family::Cmn;
      else if (f == "D") t.family = Family::DSuper;
      else if (f == "BC") t.family = Family::BCmn;
      else t.family = Family::ATilde;
      if (t.family == Family::ATilde || t.family == Family::Quotient) {
        if (t.m != t.n) bad("~A needs equal parameters: " + s);
        if (t.family == Family::ATilde && t.twist == 1) bad("~A(n,n)^(1) has a 2-dimensional radical; use ~A(n,n)^(1)_q");
      }
    } else if (std::regex_match(s, mt, single)) {
      t.family = Family::CSuper;
      t.n = std::stoi(mt[1]);
      t.twist = twist_of(mt[2]);
    } else if (std::regex_match(s, mt, d21)) {
      t.family = Family::D21;
      t.lambda = mt[1].matched ? parse_scalar(mt[1].str()) : Scalar(1);
      t.twist = twist_of(mt[2]);
    } else if (std::regex_match(s, mt, exc)) {
      t.family = mt[1].str()[0] == 'G' ? Family::G3 : Family::F4Super;
      t.twist = twist_of(mt[2]);
    } else {
      bad("unrecognized tag \"" + s + "\"");
    }
  } catch (const std::out_of_range&) {
    bad("parameter out of range in \"" + s + "\"");
  }
  return t;
}

Scalar canonical_lambda(const Scalar& l) {
  if (!in_orbit_domain(l)) bad("D(2,1;lambda) requires lambda not in {0,-1}");
  std::array<Scalar, 6> orbit = {l, 1 / l, -1 - l, -1 / (1 + l), -l / (1 + l), -(1 + l) / l};
  return *std::max_element(orbit.begin(), orbit.end());
}

Scalar canonical_q(const Scalar& q) {
  Scalar r = mod_into(q, 1);
  Scalar s = 1 - r;
  return (is_zero(r) || r <= s) ? r : s;
}

bool quotient_iso(const Scalar& q1, const Scalar& q2) { return is_integer(q1 - q2) || is_integer(q1 + q2); }

namespace {

TypeTag finite_canonical(TypeTag t) {
  switch (t.family) {
    case Family::ASuper: case Family::BSuper: case Family::DSuper: case Family::Cmn: case Family::BCmn: break;
    case Family::ATilde: t.m = t.n; break;
    case Family::D21: case Family::G3: case Family::F4Super: t.m = t.n = 0; break;
    default: t.m = 0;
  }
  if (t.family != Family::D21) t.lambda.reset();
  t.q.reset();
  const int m = t.m, n = t.n;
  switch (t.family) {
    case Family::A: if (n < 1) bad("A_n needs n >= 1"); break;
    case Family::B: if (n < 2) bad("B_n needs n >= 2"); break;
    case Family::C:
      if (n < 2) bad("C_n needs n >= 2");
      if (n == 2) t.family = Family::B;
      break;
    case Family::D:
      if (n < 3) bad("D_n needs n >= 3");
      if (n == 3) t = {Family::A, 0, 3};
      break;
    case Family::E: if (n < 6 || n > 8) bad("E_n needs n in {6,7,8}"); break;
    case Family::F: if (n != 4) bad("only F_4 exists"); break;
    case Family::G: if (n != 2) bad("only G_2 exists"); break;
    case Family::B0: if (n < 1) bad("B(0,n) needs n >= 1"); t.m = 0; break;
    case Family::ASuper:
      if (m < 0 || n < 0 || m + n < 1) bad("A(m,n) needs m,n >= 0 and m+n >= 1");
      if (m == 1 && n == 1) return {Family::Cmn, 1, 1};
      if (m > n) std::swap(t.m, t.n);
      break;
    case Family::BSuper: if (m < 1 || n < 1) bad("B(m,n) needs m,n >= 1"); break;
    case Family::CSuper:
      if (n < 2) bad("C(n) needs n >= 2");
      if (n == 2) return {Family::ASuper, 0, 1};
      break;
    case Family::DSuper: if (m < 2 || n < 1) bad("D(m,n) needs m >= 2, n >= 1"); break;
    case Family::D21:
      t.lambda = canonical_lambda(t.lambda.value_or(1));
      if (*t.lambda == 1) {  // D(2,1;1) is D(2,1)
        t.family = Family::DSuper;
        t.m = 2;
        t.n = 1;
        t.lambda.reset();
      }
      break;
    case Family::G3: case Family::F4Super: break;
    case Family::Cmn: case Family::BCmn:
      if (m < 1 || n < 1) bad("C(m,n) and BC(m,n) need m,n >= 1");
      if (m > n) std::swap(t.m, t.n);
      break;
    case Family::ATilde:
      if (n < 1 || m != n) bad("~A(n,n) needs n >= 1");
      break;
    default: bad("not a finite tag");
  }
  return t;
}

}  // namespace

TypeTag canonical(const TypeTag& in) {
  TypeTag t = in;
  if (t.family == Family::Peculiar) {
    if (!t.q) bad("C(1,1)^q needs q");
    if (is_integer(*t.q)) bad("C(1,1)^q needs q not an integer");
    t.m = t.n = 1;
    t.q = canonical_q(*t.q);
    return t;
  }
  if (t.family == Family::Quotient) {
    if (!t.q) bad("~A(n,n)^(1)_q needs q");
    if (t.n < 1) bad("~A(n,n)^(1)_q needs n >= 1");
    t.m = t.n;
    t.twist = 0;
    if (t.n == 1) return canonical({Family::Peculiar, 1, 1, 0, std::nullopt, t.q});
    t.q = canonical_q(*t.q);
    return t;
  }
  if (t.twist == 0) return finite_canonical(t);

  const int m = t.m, n = t.n;
  switch (t.twist) {
    case 1: {
      if (t.family == Family::Cmn || t.family == Family::BCmn || t.family == Family::ATilde)
        bad(to_string(t) + " has no untwisted affinization");
      TypeTag b = finite_canonical(TypeTag{t.family, m, n, 0, t.lambda, std::nullopt});
      if (b.family == Family::Cmn) bad("A(1,1)^(1) is not an affine root system; use C(1,1)^q");
      if (b.family == Family::ASuper && b.m == b.n) return {Family::Quotient, b.n, b.n, 0, std::nullopt, Scalar(0)};
      b.twist = 1;
      return b;
    }
    case 2:
      switch (t.family) {
        case Family::A:
          if (n < 2) bad("A_n^(2) needs n >= 2");
          if (n == 3) return {Family::D, 0, 3, 2};
          return {Family::A, 0, n, 2};
        case Family::D:
          if (n < 3) bad("D_n^(2) needs n >= 3");
          return {Family::D, 0, n, 2};
        case Family::E:
          if (n != 6) bad("only E_6 has a twist of order 2");
          return t;
        case Family::CSuper:
          if (n < 2) bad("C(n)^(2) needs n >= 2");
          if (n == 2) return {Family::ASuper, 0, 1, 2};
          return {Family::CSuper, 0, n, 2};
        case Family::DSuper:
          if (m < 2 || n < 1) bad("D(m,n)^(2) needs m >= 2, n >= 1");
          return t;
        case Family::ASuper: {
          int a = m, b = n;
          if (a < 0 || b < 0 || a + b < 1) bad("A(m,n)^(2) needs m,n >= 0, m+n >= 1");
          if (a % 2 == 0 && b % 2 == 0) bad("A(2m,2n) twists with order 4, not 2");
          if (a % 2 == 1 && b % 2 == 1) {
            if (a == 1 && b == 1) bad("A(1,1)^(2) is not an affine root system");
            if (a > b) std::swap(a, b);
          } else if (a % 2 == 1) {
            std::swap(a, b);
          }
          return {Family::ASuper, a, b, 2};
        }
        default: bad(to_string(t) + " has no twist of order 2");
      }
    case 3:
      if (t.family == Family::D && n == 4) return t;
      bad("only D_4 has a twist of order 3");
    case 4: {
      if (t.family != Family::ASuper) bad("only A(2m,2n) twists with order 4");
      int a = m, b = n;
      if (a < 0 || b < 0 || a % 2 || b % 2 || a + b < 1) bad("A(m,n)^(4) needs m,n even and m+n >= 1");
      if (a > b) std::swap(a, b);
      return {Family::ASuper, a, b, 4};
    }
    default: bad("twist must be 1, 2, 3 or 4");
  }
}

bool is_valid(const TypeTag& t) {
  try {
    canonical(t);
    return true;
  } catch (const InvalidInput&) {
    return false;
  }
}

TypeTag base_of(const TypeTag& in) {
  TypeTag t = canonical(in);
  if (t.family == Family::Quotient) return {Family::ASuper, t.n, t.n};
  if (t.family == Family::Peculiar) return {Family::Cmn, 1, 1};
  if (t.twist == 0) bad(to_string(t) + " is not affine");
  if (t.twist == 1) {
    t.twist = 0;
    return t;
  }
  if (t.twist == 3) return {Family::G, 0, 2};
  const int m = t.m, n = t.n;
  switch (t.family) {
    case Family::A:
      if (n % 2 == 0) return {Family::B0, 0, n / 2};
      return finite_canonical({Family::C, 0, (n + 1) / 2});
    case Family::D: return {Family::B, 0, n - 1};
    case Family::E: return {Family::F, 0, 4};
    case Family::CSuper: return {Family::B0, 0, n - 1};
    case Family::DSuper: return {Family::BSuper, m - 1, n};
    case Family::ASuper:
      if (t.twist == 4) return m == 0 ? TypeTag{Family::B0, 0, n / 2} : TypeTag{Family::BCmn, m / 2, n / 2};
      if (m % 2 == 0) return m == 0 ? TypeTag{Family::B0, 0, (n + 1) / 2} : TypeTag{Family::BCmn, m / 2, (n + 1) / 2};
      return {Family::Cmn, (m + 1) / 2, (n + 1) / 2};
    default: break;
  }
  bad("no base for " + to_string(t));
}

}  // namespace grs
