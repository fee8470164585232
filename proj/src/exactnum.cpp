#include "ivp/exactnum.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ivp {

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

Rat make_rat(long num, long den) { return make_rat(Int(num), Int(den)); }

Rat parse_rat(const std::string& s) {
  std::string t;
  for (char c : s)
    if (!isspace(static_cast<unsigned char>(c))) t += c;
  if (t.empty()) throw std::invalid_argument("empty rational");
  Rat q;
  if (mpq_set_str(q.get_mpq_t(), t.c_str(), 10) != 0)
    throw std::invalid_argument("malformed rational: '" + s + "'");
  if (mpz_sgn(mpq_denref(q.get_mpq_t())) == 0)
    throw std::invalid_argument("zero denominator: '" + s + "'");
  q.canonicalize();
  return q;
}

std::string rat_to_string(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

bool is_prime(const Int& p) {
  return p >= 2 && mpz_probab_prime_p(p.get_mpz_t(), 40) != 0;
}

long val_p(const Int& n, const Int& p) {
  if (n == 0) throw std::domain_error("valuation of zero undefined");
  if (!is_prime(p)) throw std::invalid_argument(p.get_str() + " is not prime");
  Int rest;
  return static_cast<long>(
      mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

long val_p(const Rat& q, const Int& p) {
  if (q == 0) throw std::domain_error("valuation of zero undefined");
  return val_p(Int(q.get_num()), p) - val_p(Int(q.get_den()), p);
}

namespace {

Int pollard_rho(const Int& n) {
  // Brent's variant; n is odd, composite, and has no small factors.
  for (unsigned long c = 1;; ++c) {
    Int x(2), y(2), d(1);
    while (d == 1) {
      x = (x * x + c) % n;
      y = (y * y + c) % n;
      y = (y * y + c) % n;
      Int diff = x > y ? x - y : y - x;
      if (diff == 0) break;
      mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
    if (d != 1 && d != n) return d;
  }
}

void factor_into(Int n, std::vector<Int>& primes) {
  if (n == 1) return;
  if (is_prime(n)) {
    primes.push_back(n);
    return;
  }
  Int d = pollard_rho(n);
  factor_into(d, primes);
  factor_into(n / d, primes);
}

}  // namespace

std::vector<std::pair<Int, int>> factorize(Int n) {
  if (n < 1) throw std::invalid_argument("factorize expects n >= 1");
  std::vector<Int> primes;
  for (long d : {2L, 3L, 5L, 7L, 11L, 13L}) {
    while (n % d == 0) {
      primes.emplace_back(d);
      n /= d;
    }
  }
  for (Int d(17); d * d <= n && d < (1 << 20); d += 2) {
    while (n % d == 0) {
      primes.push_back(d);
      n /= d;
    }
  }
  if (n > 1) factor_into(n, primes);
  std::sort(primes.begin(), primes.end());
  std::vector<std::pair<Int, int>> out;
  for (const Int& p : primes) {
    if (!out.empty() && out.back().first == p)
      ++out.back().second;
    else
      out.push_back({p, 1});
  }
  return out;
}

OverringZ::OverringZ(Kind kind, std::vector<Int> primes)
    : kind_(kind), primes_(std::move(primes)) {
  std::sort(primes_.begin(), primes_.end());
  primes_.erase(std::unique(primes_.begin(), primes_.end()), primes_.end());
  for (const Int& p : primes_)
    if (!is_prime(p))
      throw std::invalid_argument("overring spec: " + p.get_str() +
                                  " is not prime");
}

OverringZ OverringZ::integers() { return {Kind::invert_finite, {}}; }
OverringZ OverringZ::rationals() { return {Kind::keep_finite, {}}; }
OverringZ OverringZ::invert(std::vector<Int> primes) {
  return {Kind::invert_finite, std::move(primes)};
}
OverringZ OverringZ::keep(std::vector<Int> primes) {
  return {Kind::keep_finite, std::move(primes)};
}

bool OverringZ::inverts(const Int& p) const {
  bool listed = std::binary_search(primes_.begin(), primes_.end(), p);
  return kind_ == Kind::invert_finite ? listed : !listed;
}

bool OverringZ::is_field() const {
  return kind_ == Kind::keep_finite && primes_.empty();
}

bool OverringZ::is_integers() const {
  return kind_ == Kind::invert_finite && primes_.empty();
}

std::string OverringZ::to_string() const {
  if (is_integers()) return "Z";
  if (is_field()) return "Q";
  std::ostringstream out;
  if (kind_ == Kind::keep_finite) {
    out << "Z_(";
    for (size_t i = 0; i < primes_.size(); ++i)
      out << (i ? "," : "") << primes_[i].get_str();
    out << ")";
  } else {
    out << "Z[";
    for (size_t i = 0; i < primes_.size(); ++i)
      out << (i ? "," : "") << "1/" << primes_[i].get_str();
    out << "]";
  }
  return out.str();
}

namespace {

std::vector<Int> split_ints(const std::string& body, const std::string& whole) {
  std::vector<Int> out;
  std::string cur;
  auto flush = [&] {
    if (cur.empty())
      throw std::invalid_argument("overring spec: empty entry in '" + whole +
                                  "'");
    out.emplace_back(cur);
    cur.clear();
  };
  for (char c : body) {
    if (c == ',') {
      flush();
    } else if (isdigit(static_cast<unsigned char>(c))) {
      cur += c;
    } else if (!isspace(static_cast<unsigned char>(c))) {
      throw std::invalid_argument(std::string("overring spec: bad char '") +
                                  c + "' in '" + whole + "'");
    }
  }
  flush();
  return out;
}

// Prime factors of n by trial division (overring entries are desk scale).
std::vector<Int> prime_factors(Int n, const std::string& whole) {
  if (n < 2)
    throw std::invalid_argument("overring spec: entry " + n.get_str() +
                                " in '" + whole + "' has no prime factor");
  std::vector<Int> out;
  for (Int d = 2; d * d <= n; ++d) {
    while (n % d == 0) {
      out.push_back(d);
      n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

OverringZ OverringZ::parse(const std::string& s) {
  std::string t;
  for (char c : s)
    if (!isspace(static_cast<unsigned char>(c))) t += c;
  if (t == "Z") return integers();
  if (t == "Q" || t == "K") return rationals();
  if (t.rfind("Z_(", 0) == 0 && t.back() == ')')
    return keep(split_ints(t.substr(3, t.size() - 4), s));
  if (t.rfind("Z[", 0) == 0 && t.back() == ']') {
    std::string body = t.substr(2, t.size() - 3);
    // entries look like 1/6; split on ',' then strip the leading "1/"
    std::vector<Int> primes;
    size_t pos = 0;
    while (pos <= body.size()) {
      size_t comma = body.find(',', pos);
      std::string entry = body.substr(
          pos, comma == std::string::npos ? std::string::npos : comma - pos);
      if (entry.rfind("1/", 0) != 0)
        throw std::invalid_argument("overring spec: expected '1/n' entry, got '" +
                                    entry + "' in '" + s + "'");
      for (Int p : prime_factors(Int(entry.substr(2)), s)) primes.push_back(p);
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    return invert(std::move(primes));
  }
  throw std::invalid_argument("malformed overring spec: '" + s + "'");
}

OverringZ OverringZ::intersection(const std::vector<OverringZ>& members) {
  if (members.empty())
    throw std::invalid_argument("intersection of empty family");
  // Non-inverted primes of the intersection = union over the members.
  bool any_cofinite = false;
  for (const OverringZ& t : members)
    if (t.kind() == Kind::invert_finite) any_cofinite = true;
  if (!any_cofinite) {
    std::vector<Int> keep_set;
    for (const OverringZ& t : members)
      keep_set.insert(keep_set.end(), t.primes().begin(), t.primes().end());
    return keep(std::move(keep_set));
  }
  // Cofinite result: a prime stays inverted only if every member inverts it.
  std::vector<Int> inverted;
  for (const OverringZ& t : members) {
    if (t.kind() != Kind::invert_finite) continue;
    for (const Int& p : t.primes()) {
      bool all = true;
      for (const OverringZ& u : members)
        if (!u.inverts(p)) all = false;
      if (all) inverted.push_back(p);
    }
  }
  return invert(std::move(inverted));
}

namespace {

// Strips inverted primes so that the generator is the canonical one.
Rat normalize_generator(const OverringZ& ambient, Rat g) {
  if (g <= 0) throw std::invalid_argument("ideal generator must be positive");
  if (ambient.is_field()) return Rat(1);
  Int num = g.get_num(), den = g.get_den();
  if (ambient.kind() == OverringZ::Kind::invert_finite) {
    Int rest;
    for (const Int& p : ambient.primes()) {
      mpz_remove(rest.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t());
      num = rest;
      mpz_remove(rest.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
      den = rest;
    }
    return make_rat(num, den);
  }
  Rat out(1);
  for (const Int& p : ambient.primes()) {
    long v = val_p(g, p);
    Int pw;
    mpz_pow_ui(pw.get_mpz_t(), p.get_mpz_t(),
               static_cast<unsigned long>(v < 0 ? -v : v));
    out *= v >= 0 ? Rat(pw) : make_rat(Int(1), pw);
  }
  return out;
}

void require_same_ambient(const FracIdeal& a, const FracIdeal& b) {
  if (!(a.ambient() == b.ambient()))
    throw std::invalid_argument("ideal ambient mismatch: " +
                                a.ambient().to_string() + " vs " +
                                b.ambient().to_string());
}

}  // namespace

FracIdeal::FracIdeal(OverringZ ambient, const Rat& generator)
    : ambient_(std::move(ambient)),
      gen_(normalize_generator(ambient_, generator)) {}

std::string FracIdeal::to_string() const {
  return "(" + rat_to_string(gen_) + ")@" + ambient_.to_string();
}

FracIdeal unit_ideal(const OverringZ& ambient) {
  return FracIdeal(ambient, Rat(1));
}

FracIdeal zmodule_generator(const std::vector<Rat>& gens,
                            const OverringZ& ambient) {
  Int lcm(1);
  bool any = false;
  for (const Rat& q : gens) {
    if (q == 0) continue;
    any = true;
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den().get_mpz_t());
  }
  if (!any) throw std::invalid_argument("zero module has no generator");
  Int g(0);
  for (const Rat& q : gens) {
    if (q == 0) continue;
    Int scaled = q.get_num() * (lcm / q.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), scaled.get_mpz_t());
  }
  return FracIdeal(ambient, make_rat(g, lcm));
}

FracIdeal ideal_mul(const FracIdeal& a, const FracIdeal& b) {
  require_same_ambient(a, b);
  return FracIdeal(a.ambient(), a.generator() * b.generator());
}

FracIdeal ideal_colon(const FracIdeal& a, const FracIdeal& b) {
  require_same_ambient(a, b);
  return FracIdeal(a.ambient(), a.generator() / b.generator());
}

bool ideal_eq(const FracIdeal& a, const FracIdeal& b) {
  return a.ambient() == b.ambient() && a.generator() == b.generator();
}

FracIdeal extend(const FracIdeal& i, const OverringZ& t) {
  if (!i.ambient().is_integers())
    throw std::invalid_argument("extend expects an ideal of Z");
  return FracIdeal(t, i.generator());
}

FracIdeal integral_part(const FracIdeal& i) {
  return FracIdeal(i.ambient(), Rat(i.generator().get_num()));
}

}  // namespace ivp
