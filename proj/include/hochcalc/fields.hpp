#pragma once

// Exact scalar domains: the rationals (GMP-backed) and finite fields GF(p^k).
// Every algorithm downstream is templated over one of the three concrete
// field classes; Field/FieldElement give a type-erased handle for parsing,
// printing and the CLI.

#include <gmpxx.h>

#include <cctype>
#include <cstdint>
#include <memory>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace hochcalc {

class FieldError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

// Polynomials over GF(p), ascending coefficients, no trailing zeros.
using Poly = std::vector<std::uint64_t>;

inline void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline Poly poly_mod(Poly a, const Poly& m, std::uint64_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const std::uint64_t lead_inv = powmod(m.back(), p - 2, p);
  while (a.size() >= m.size()) {
    const std::uint64_t c = mulmod(a.back(), lead_inv, p);
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i)
      a[shift + i] = (a[shift + i] + p - mulmod(c, m[i], p)) % p;
    trim(a);
  }
  return a;
}

inline Poly poly_mul(const Poly& a, const Poly& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + mulmod(a[i], b[j], p)) % p;
  trim(r);
  return r;
}

inline Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

inline Poly poly_powmod(Poly base, std::uint64_t e, const Poly& m, std::uint64_t p) {
  Poly r{1};
  base = poly_mod(base, m, p);
  while (e) {
    if (e & 1) r = poly_mod(poly_mul(r, base, p), m, p);
    base = poly_mod(poly_mul(base, base, p), m, p);
    e >>= 1;
  }
  return r;
}

// Ben-Or: f of degree k is irreducible iff gcd(x^{p^i} - x, f) = 1 for i <= k/2.
inline bool poly_irreducible(const Poly& f, std::uint64_t p) {
  const std::size_t k = f.size() - 1;
  if (k == 0) return false;
  if (k == 1) return true;
  Poly xp{0, 1};
  for (std::size_t i = 1; i <= k / 2; ++i) {
    xp = poly_powmod(xp, p, f, p);
    Poly h = xp;
    if (h.size() < 2) h.resize(2, 0);
    h[1] = (h[1] + p - 1) % p;
    trim(h);
    Poly g = poly_gcd(f, h, p);
    if (g.size() != 1) return false;
  }
  return true;
}

inline std::string poly_to_string(const std::vector<std::uint32_t>& c, char var) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    if (!first) os << '+';
    first = false;
    if (i == 0) {
      os << c[i];
      continue;
    }
    if (c[i] != 1) os << c[i] << '*';
    os << var;
    if (i > 1) os << '^' << i;
  }
  if (first) os << '0';
  return os.str();
}

}  // namespace detail

struct FieldSpec {
  enum class Kind { rationals, prime, extension };
  Kind kind = Kind::rationals;
  std::uint32_t p = 0;
  unsigned k = 1;
  // Ascending coefficients of the monic modulus, size k+1; extension fields only.
  std::vector<std::uint32_t> modulus;

  static FieldSpec rationals() { return {}; }
  static FieldSpec prime(std::uint32_t p) { return {Kind::prime, p, 1, {}}; }
  static FieldSpec extension(std::uint32_t p, unsigned k, std::vector<std::uint32_t> modulus = {});

  std::uint64_t characteristic() const { return kind == Kind::rationals ? 0 : p; }
  // Number of elements; 0 for the rationals.
  std::uint64_t order() const {
    if (kind == Kind::rationals) return 0;
    std::uint64_t q = 1;
    for (unsigned i = 0; i < k; ++i) q *= p;
    return q;
  }
  bool finite() const { return kind != Kind::rationals; }

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

inline std::vector<std::uint32_t> default_modulus(std::uint32_t p, unsigned k) {
  if (p == 2 && k == 2) return {1, 1, 1};
  if (p == 2 && k == 3) return {1, 1, 0, 1};
  if (p == 3 && k == 2) return {1, 0, 1};
  // Smallest monic irreducible, coefficients read as a base-p number.
  std::vector<std::uint32_t> c(k + 1, 0);
  c[k] = 1;
  for (;;) {
    detail::Poly f(c.begin(), c.end());
    if (c[0] != 0 && detail::poly_irreducible(f, p)) return c;
    std::size_t i = 0;
    while (i < k && ++c[i] == p) c[i++] = 0;
    if (i == k) throw FieldError("no irreducible polynomial found");
  }
}

inline void check_spec(const FieldSpec& s) {
  if (s.kind == FieldSpec::Kind::rationals) return;
  if (!detail::is_prime(s.p)) throw FieldError("characteristic " + std::to_string(s.p) + " is not prime");
  if (s.p >= (1u << 31)) throw FieldError("prime too large");
  if (s.kind == FieldSpec::Kind::prime) {
    if (s.k != 1) throw FieldError("prime field must have degree 1");
    return;
  }
  if (s.k < 2 || s.k > 8) throw FieldError("extension degree must lie in [2, 8]");
  if (s.order() >= (std::uint64_t{1} << 32)) throw FieldError("field too large (p^k must be below 2^32)");
  if (s.modulus.size() != s.k + 1 || s.modulus.back() != 1)
    throw FieldError("modulus must be monic of degree " + std::to_string(s.k));
  for (auto c : s.modulus)
    if (c >= s.p) throw FieldError("modulus coefficient out of range");
  detail::Poly f(s.modulus.begin(), s.modulus.end());
  if (!detail::poly_irreducible(f, s.p))
    throw FieldError("modulus " + detail::poly_to_string(s.modulus, 'x') + " is reducible over GF(" +
                     std::to_string(s.p) + ")");
}

inline FieldSpec FieldSpec::extension(std::uint32_t p, unsigned k, std::vector<std::uint32_t> modulus) {
  if (k == 1 && modulus.empty()) return prime(p);
  FieldSpec s{Kind::extension, p, k, std::move(modulus)};
  if (s.modulus.empty()) {
    if (!detail::is_prime(p)) throw FieldError("characteristic " + std::to_string(p) + " is not prime");
    if (k < 2 || k > 8) throw FieldError("extension degree must lie in [2, 8]");
    s.modulus = default_modulus(p, k);
  }
  return s;
}

inline std::string to_string(const FieldSpec& s) {
  switch (s.kind) {
    case FieldSpec::Kind::rationals: return "Q";
    case FieldSpec::Kind::prime: return "GF(" + std::to_string(s.p) + ")";
    case FieldSpec::Kind::extension:
      return "GF(" + std::to_string(s.p) + "^" + std::to_string(s.k) + "):" + detail::poly_to_string(s.modulus, 'x');
  }
  return "?";
}

namespace detail {

// Polynomial in one variable with integer coefficients, e.g. "x^3+x+1".
inline std::vector<std::uint32_t> parse_modulus(std::string_view text, std::uint32_t p, char var) {
  std::vector<std::uint64_t> c;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto number = [&]() -> std::uint64_t {
    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
      throw FieldError("bad modulus '" + std::string(text) + "'");
    std::uint64_t v = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) v = v * 10 + (text[i++] - '0');
    return v;
  };
  bool neg = false;
  skip();
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) neg = text[i++] == '-';
  for (;;) {
    skip();
    std::uint64_t coef = 1, deg = 0;
    bool want_var = true;
    if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      coef = number() % p;
      skip();
      want_var = i < text.size() && text[i] == '*';
      if (want_var) ++i;
      skip();
    }
    if (want_var) {
      if (i >= text.size() || text[i] != var) throw FieldError("bad modulus '" + std::string(text) + "'");
      ++i;
      deg = 1;
      skip();
      if (i < text.size() && text[i] == '^') {
        ++i;
        skip();
        deg = number();
      }
    }
    if (deg > 64) throw FieldError("modulus degree too large");
    if (c.size() <= deg) c.resize(deg + 1, 0);
    c[deg] = (c[deg] + (neg ? p - coef % p : coef)) % p;
    skip();
    if (i >= text.size()) break;
    if (text[i] != '+' && text[i] != '-') throw FieldError("bad modulus '" + std::string(text) + "'");
    neg = text[i++] == '-';
  }
  trim(c);
  return {c.begin(), c.end()};
}

}  // namespace detail

// Accepts "Q", "GF(p)", "GF(q)" for a prime power q, "GF(p^k)", each optionally
// followed by ":<modulus>" written in x (or g).
inline FieldSpec parse_field_spec(std::string_view text) {
  auto strip = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  text = strip(text);
  if (text == "Q" || text == "QQ" || text == "Rationals") return FieldSpec::rationals();
  std::string_view mod_text;
  if (auto colon = text.find(':'); colon != std::string_view::npos) {
    mod_text = strip(text.substr(colon + 1));
    text = strip(text.substr(0, colon));
  }
  if (text.size() < 5 || text.substr(0, 3) != "GF(" || text.back() != ')')
    throw FieldError("unrecognized field '" + std::string(text) + "'");
  std::string body(text.substr(3, text.size() - 4));
  std::uint64_t p = 0, k = 1;
  try {
    if (auto caret = body.find('^'); caret != std::string::npos) {
      p = std::stoull(body.substr(0, caret));
      k = std::stoull(body.substr(caret + 1));
    } else {
      std::uint64_t q = std::stoull(body);
      if (q < 2) throw FieldError("bad field order");
      p = q;
      for (std::uint64_t d = 2; d * d <= q; ++d)
        if (q % d == 0) {
          p = d;
          break;
        }
      k = 0;
      for (std::uint64_t r = q; r > 1; r /= p) {
        if (r % p != 0) throw FieldError("GF(" + body + "): order is not a prime power");
        ++k;
      }
    }
  } catch (const std::logic_error&) {
    throw FieldError("unrecognized field '" + std::string(text) + "'");
  }
  if (!detail::is_prime(p)) throw FieldError("characteristic " + std::to_string(p) + " is not prime");
  if (p >= (1u << 31)) throw FieldError("prime too large");
  if (k == 0 || k > 8) throw FieldError("extension degree must lie in [1, 8]");
  const auto p32 = static_cast<std::uint32_t>(p);
  const auto k32 = static_cast<unsigned>(k);
  if (mod_text.empty()) {
    FieldSpec s = k == 1 ? FieldSpec::prime(p32) : FieldSpec::extension(p32, k32);
    check_spec(s);
    return s;
  }
  const char var = mod_text.find('g') != std::string_view::npos ? 'g' : 'x';
  auto m = detail::parse_modulus(mod_text, p32, var);
  if (m.size() != k + 1) throw FieldError("modulus degree does not match k = " + std::to_string(k));
  if (m.back() != 1) throw FieldError("modulus must be monic");
  FieldSpec s{k == 1 ? FieldSpec::Kind::prime : FieldSpec::Kind::extension, p32, k32,
              k == 1 ? std::vector<std::uint32_t>{} : m};
  check_spec(s);
  return s;
}

class RationalField {
 public:
  using value_type = mpq_class;

  value_type zero() const { return value_type(0); }
  value_type one() const { return value_type(1); }
  value_type from_integer(const mpz_class& n) const { return value_type(n); }
  value_type from_int(long n) const { return value_type(n); }
  value_type generator() const { throw FieldError("the generator g exists only in extension fields"); }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type inv(const value_type& a) const {
    if (sgn(a) == 0) throw FieldError("division by zero");
    return 1 / a;
  }
  value_type div(const value_type& a, const value_type& b) const { return mul(a, inv(b)); }
  // a -= c*b, the hot path of elimination.
  void sub_mul(value_type& a, const value_type& c, const value_type& b) const { a -= c * b; }
  bool is_zero(const value_type& a) const { return sgn(a) == 0; }
  bool equal(const value_type& a, const value_type& b) const { return a == b; }
  std::uint64_t characteristic() const { return 0; }
  std::uint64_t order() const { return 0; }
  FieldSpec spec() const { return FieldSpec::rationals(); }
  std::string to_string(const value_type& a) const { return a.get_str(); }
  // Small nonzero-biased values for randomized trials.
  template <class Rng>
  value_type random(Rng& rng) const {
    std::uniform_int_distribution<long> d(-7, 7);
    return value_type(d(rng));
  }
};

class PrimeField {
 public:
  using value_type = std::uint32_t;

  explicit PrimeField(std::uint32_t p = 2) : p_(p) {
    if (!detail::is_prime(p)) throw FieldError("characteristic " + std::to_string(p) + " is not prime");
  }

  value_type zero() const { return 0; }
  value_type one() const { return 1 % p_; }
  value_type from_integer(const mpz_class& n) const {
    mpz_class r = n % p_;
    if (r < 0) r += p_;
    return static_cast<value_type>(r.get_ui());
  }
  value_type from_int(long n) const {
    long r = n % static_cast<long>(p_);
    return static_cast<value_type>(r < 0 ? r + p_ : r);
  }
  value_type generator() const { throw FieldError("the generator g exists only in extension fields"); }
  value_type add(value_type a, value_type b) const {
    std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<value_type>(s >= p_ ? s - p_ : s);
  }
  value_type sub(value_type a, value_type b) const { return a >= b ? a - b : a + (p_ - b); }
  value_type mul(value_type a, value_type b) const {
    return static_cast<value_type>(std::uint64_t{a} * b % p_);
  }
  value_type neg(value_type a) const { return a == 0 ? 0 : p_ - a; }
  value_type inv(value_type a) const {
    if (a == 0) throw FieldError("division by zero");
    return static_cast<value_type>(detail::powmod(a, p_ - 2, p_));
  }
  value_type div(value_type a, value_type b) const { return mul(a, inv(b)); }
  void sub_mul(value_type& a, value_type c, value_type b) const { a = sub(a, mul(c, b)); }
  bool is_zero(value_type a) const { return a == 0; }
  bool equal(value_type a, value_type b) const { return a == b; }
  std::uint64_t characteristic() const { return p_; }
  std::uint64_t order() const { return p_; }
  FieldSpec spec() const { return FieldSpec::prime(p_); }
  std::string to_string(value_type a) const { return std::to_string(a); }
  // Element number i of the field, for exhaustive enumeration.
  value_type element(std::uint64_t i) const { return static_cast<value_type>(i); }
  template <class Rng>
  value_type random(Rng& rng) const {
    return std::uniform_int_distribution<value_type>(0, p_ - 1)(rng);
  }

 private:
  std::uint32_t p_;
};

// GF(p^k); an element c_0 + c_1 g + ... + c_{k-1} g^{k-1} is stored as the
// integer sum c_i p^i. Small fields get full addition and multiplication tables.
class ExtensionField {
 public:
  using value_type = std::uint32_t;

  explicit ExtensionField(const FieldSpec& spec) : d_(std::make_shared<Data>()) {
    check_spec(spec);
    if (spec.kind != FieldSpec::Kind::extension) throw FieldError("not an extension field spec");
    d_->spec = spec;
    d_->p = spec.p;
    d_->k = spec.k;
    d_->q = static_cast<std::uint32_t>(spec.order());
    if (d_->q <= kTableLimit) {
      const std::size_t q = d_->q;
      d_->add_t.resize(q * q);
      d_->mul_t.resize(q * q);
      d_->inv_t.assign(q, 0);
      for (std::uint32_t a = 0; a < q; ++a)
        for (std::uint32_t b = 0; b < q; ++b) {
          d_->add_t[a * q + b] = slow_add(a, b);
          d_->mul_t[a * q + b] = slow_mul(a, b);
        }
      for (std::uint32_t a = 1; a < q; ++a)
        for (std::uint32_t b = 1; b < q; ++b)
          if (d_->mul_t[a * q + b] == 1) {
            d_->inv_t[a] = b;
            break;
          }
    }
  }

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_integer(const mpz_class& n) const {
    mpz_class r = n % d_->p;
    if (r < 0) r += d_->p;
    return static_cast<value_type>(r.get_ui());
  }
  value_type from_int(long n) const {
    long r = n % static_cast<long>(d_->p);
    return static_cast<value_type>(r < 0 ? r + d_->p : r);
  }
  value_type generator() const { return d_->p; }
  value_type add(value_type a, value_type b) const {
    return d_->add_t.empty() ? slow_add(a, b) : d_->add_t[std::size_t{a} * d_->q + b];
  }
  value_type neg(value_type a) const {
    auto c = digits(a);
    for (auto& x : c) x = x == 0 ? 0 : d_->p - x;
    return encode(c);
  }
  value_type sub(value_type a, value_type b) const { return add(a, neg(b)); }
  value_type mul(value_type a, value_type b) const {
    return d_->mul_t.empty() ? slow_mul(a, b) : d_->mul_t[std::size_t{a} * d_->q + b];
  }
  value_type inv(value_type a) const {
    if (a == 0) throw FieldError("division by zero");
    if (!d_->inv_t.empty()) return d_->inv_t[a];
    // a^(q-2)
    value_type r = 1, base = a;
    std::uint64_t e = d_->q - 2;
    while (e) {
      if (e & 1) r = mul(r, base);
      base = mul(base, base);
      e >>= 1;
    }
    return r;
  }
  value_type div(value_type a, value_type b) const { return mul(a, inv(b)); }
  void sub_mul(value_type& a, value_type c, value_type b) const { a = sub(a, mul(c, b)); }
  bool is_zero(value_type a) const { return a == 0; }
  bool equal(value_type a, value_type b) const { return a == b; }
  std::uint64_t characteristic() const { return d_->p; }
  std::uint64_t order() const { return d_->q; }
  const FieldSpec& spec() const { return d_->spec; }
  std::string to_string(value_type a) const {
    auto c = digits(a);
    return detail::poly_to_string(c, 'g');
  }
  value_type element(std::uint64_t i) const { return static_cast<value_type>(i); }
  template <class Rng>
  value_type random(Rng& rng) const {
    return std::uniform_int_distribution<value_type>(0, d_->q - 1)(rng);
  }

 private:
  static constexpr std::uint32_t kTableLimit = 1024;

  struct Data {
    FieldSpec spec;
    std::uint32_t p = 2, q = 4;
    unsigned k = 2;
    std::vector<std::uint32_t> add_t, mul_t, inv_t;
  };

  std::vector<std::uint32_t> digits(value_type a) const {
    std::vector<std::uint32_t> c(d_->k, 0);
    for (unsigned i = 0; i < d_->k; ++i) {
      c[i] = a % d_->p;
      a /= d_->p;
    }
    return c;
  }
  value_type encode(const std::vector<std::uint32_t>& c) const {
    value_type v = 0;
    for (unsigned i = d_->k; i-- > 0;) v = v * d_->p + c[i];
    return v;
  }
  value_type slow_add(value_type a, value_type b) const {
    auto x = digits(a), y = digits(b);
    for (unsigned i = 0; i < d_->k; ++i) x[i] = (x[i] + y[i]) % d_->p;
    return encode(x);
  }
  value_type slow_mul(value_type a, value_type b) const {
    auto x = digits(a), y = digits(b);
    detail::Poly px(x.begin(), x.end()), py(y.begin(), y.end());
    detail::Poly m(d_->spec.modulus.begin(), d_->spec.modulus.end());
    auto r = detail::poly_mod(detail::poly_mul(px, py, d_->p), m, d_->p);
    std::vector<std::uint32_t> c(d_->k, 0);
    for (std::size_t i = 0; i < r.size(); ++i) c[i] = static_cast<std::uint32_t>(r[i]);
    return encode(c);
  }

  std::shared_ptr<Data> d_;
};

namespace detail {

// Recursive-descent evaluator for scalar literals:
//   expr := ['+'|'-'] term (('+'|'-') term)*
//   term := factor ('*' factor)*
//   factor := integer ['/' integer] | 'g' ['^' integer] | '(' expr ')'
template <class F>
class ScalarParser {
 public:
  using V = typename F::value_type;
  ScalarParser(const F& f, std::string_view s) : f_(f), s_(s) {}

  V parse() {
    V v = expr();
    skip();
    if (i_ != s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw FieldError("bad scalar literal '" + std::string(s_) + "': " + msg);
  }
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool eat(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }
  mpz_class integer() {
    skip();
    std::size_t start = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (start == i_) fail("expected integer");
    return mpz_class(std::string(s_.substr(start, i_ - start)));
  }
  V expr() {
    bool neg = false;
    skip();
    if (eat('-'))
      neg = true;
    else
      eat('+');
    V v = term();
    if (neg) v = f_.neg(v);
    for (;;) {
      if (eat('+'))
        v = f_.add(v, term());
      else if (eat('-'))
        v = f_.sub(v, term());
      else
        return v;
    }
  }
  V term() {
    V v = factor();
    while (eat('*')) v = f_.mul(v, factor());
    return v;
  }
  V factor() {
    skip();
    if (eat('(')) {
      V v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (i_ < s_.size() && s_[i_] == 'g') {
      ++i_;
      V g = f_.generator();
      if (eat('^')) {
        mpz_class e = integer();
        V r = f_.one();
        for (mpz_class j = 0; j < e; ++j) r = f_.mul(r, g);
        return r;
      }
      return g;
    }
    V n = f_.from_integer(integer());
    if (eat('/')) {
      V d = f_.from_integer(integer());
      if (f_.is_zero(d)) fail("zero denominator");
      n = f_.div(n, d);
    }
    return n;
  }

  const F& f_;
  std::string_view s_;
  std::size_t i_ = 0;
};

}  // namespace detail

template <class F>
typename F::value_type parse_scalar(const F& f, std::string_view text) {
  return detail::ScalarParser<F>(f, text).parse();
}

using AnyField = std::variant<RationalField, PrimeField, ExtensionField>;

inline AnyField make_any_field(const FieldSpec& spec) {
  check_spec(spec);
  switch (spec.kind) {
    case FieldSpec::Kind::rationals: return RationalField{};
    case FieldSpec::Kind::prime: return PrimeField{spec.p};
    case FieldSpec::Kind::extension: return ExtensionField{spec};
  }
  throw FieldError("bad field kind");
}

class FieldElement;

// Shared, immutable arithmetic context.
class Field {
 public:
  explicit Field(const FieldSpec& spec) : f_(std::make_shared<const AnyField>(make_any_field(spec))), spec_(spec) {}

  const FieldSpec& spec() const { return spec_; }
  std::uint64_t characteristic() const { return spec_.characteristic(); }
  std::uint64_t order() const { return spec_.order(); }
  std::string describe() const { return hochcalc::to_string(spec_); }
  const AnyField& any() const { return *f_; }

  template <class Fn>
  decltype(auto) visit(Fn&& fn) const {
    return std::visit(std::forward<Fn>(fn), *f_);
  }

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement parse(std::string_view text) const;

  friend bool operator==(const Field& a, const Field& b) { return a.spec_ == b.spec_; }

 private:
  std::shared_ptr<const AnyField> f_;
  FieldSpec spec_;
};

inline Field field_make(const FieldSpec& spec) { return Field(spec); }

class FieldElement {
 public:
  using Value = std::variant<mpq_class, std::uint32_t>;

  FieldElement(Field field, Value v) : field_(std::move(field)), v_(std::move(v)) {}

  const Field& field() const { return field_; }
  const Value& value() const { return v_; }

  std::string to_string() const {
    return field_.visit([&](const auto& f) { return f.to_string(get(f)); });
  }
  bool is_zero() const {
    return field_.visit([&](const auto& f) { return f.is_zero(get(f)); });
  }

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    return a.binary(b, [](const auto& f, const auto& x, const auto& y) { return f.add(x, y); });
  }
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    return a.binary(b, [](const auto& f, const auto& x, const auto& y) { return f.sub(x, y); });
  }
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    return a.binary(b, [](const auto& f, const auto& x, const auto& y) { return f.mul(x, y); });
  }
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b) {
    return a.binary(b, [](const auto& f, const auto& x, const auto& y) { return f.div(x, y); });
  }
  FieldElement operator-() const {
    return FieldElement(field_, field_.visit([&](const auto& f) -> Value { return f.neg(get(f)); }));
  }
  FieldElement inverse() const {
    return FieldElement(field_, field_.visit([&](const auto& f) -> Value { return f.inv(get(f)); }));
  }
  FieldElement pow(std::uint64_t e) const {
    FieldElement r = field_.one(), b = *this;
    while (e) {
      if (e & 1) r = r * b;
      b = b * b;
      e >>= 1;
    }
    return r;
  }

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.field_ == b.field_ && a.v_ == b.v_;
  }

  template <class F>
  const typename F::value_type& get(const F&) const {
    return std::get<typename F::value_type>(v_);
  }

 private:
  template <class Op>
  FieldElement binary(const FieldElement& b, Op op) const {
    if (!(field_ == b.field_))
      throw FieldError("field mismatch: " + field_.describe() + " vs " + b.field_.describe());
    return FieldElement(field_, field_.visit([&](const auto& f) -> Value { return op(f, get(f), b.get(f)); }));
  }

  Field field_;
  Value v_;
};

inline FieldElement Field::zero() const {
  return FieldElement(*this, visit([](const auto& f) -> FieldElement::Value { return f.zero(); }));
}
inline FieldElement Field::one() const {
  return FieldElement(*this, visit([](const auto& f) -> FieldElement::Value { return f.one(); }));
}
inline FieldElement Field::parse(std::string_view text) const {
  return FieldElement(*this, visit([&](const auto& f) -> FieldElement::Value { return parse_scalar(f, text); }));
}

}  // namespace hochcalc
