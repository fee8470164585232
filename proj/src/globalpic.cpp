#include "ivp/globalpic.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ivp {

void LocalClassVector::set(long p, StepClass c) {
  if (c.prime() != p)
    throw std::invalid_argument("class prime does not match the slot");
  if (c.is_zero())
    entries_.erase(p);
  else
    entries_.insert_or_assign(p, std::move(c));
}

std::string LocalClassVector::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (const auto& [p, c] : entries_) {
    if (!first) out << ";";
    first = false;
    out << p << ":[";
    for (size_t i = 0; i < c.values().size(); ++i)
      out << (i ? "," : "") << c.values()[i];
    out << "]";
  }
  return out.str();
}

namespace {

long parse_long_token(const std::string& token, const char* what) {
  try {
    size_t used = 0;
    long value = std::stol(token, &used);
    if (used != token.size()) throw std::invalid_argument(token);
    return value;
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string(what) + ": bad integer '" + token +
                                "'");
  }
}

}  // namespace

LocalClassVector LocalClassVector::parse(const std::string& s) {
  LocalClassVector out;
  size_t pos = 0;
  while (pos < s.size()) {
    size_t end = s.find(';', pos);
    if (end == std::string::npos) end = s.size();
    std::string part = s.substr(pos, end - pos);
    size_t colon = part.find(':');
    size_t lo = part.find('['), hi = part.rfind(']');
    if (colon == std::string::npos || lo == std::string::npos ||
        hi == std::string::npos || hi < lo)
      throw std::invalid_argument("malformed class vector entry: '" + part +
                                  "'");
    long p = parse_long_token(part.substr(0, colon), "class vector");
    std::vector<long> values;
    std::string cur;
    for (char ch : part.substr(lo + 1, hi - lo - 1)) {
      if (ch == ',') {
        values.push_back(parse_long_token(cur, "class vector"));
        cur.clear();
      } else if (!isspace(static_cast<unsigned char>(ch))) {
        cur += ch;
      }
    }
    if (!cur.empty()) values.push_back(parse_long_token(cur, "class vector"));
    // level from the array size, which must be a power of p
    int level = 0;
    long size = 1;
    while (size < static_cast<long>(values.size())) {
      size *= p;
      ++level;
    }
    if (size != static_cast<long>(values.size()))
      throw std::invalid_argument("class vector entry needs p^n values: '" +
                                  part + "'");
    out.set(p, StepClass(p, level, std::move(values)));
    pos = end + 1;
  }
  return out;
}

namespace {

void require_global(const IntIdeal& i, const char* what) {
  if (i.prime())
    throw std::invalid_argument(std::string(what) +
                                " expects an ideal of Int(Z)");
}

bool function_vanishes(const std::vector<StepPiece>& pieces) {
  return pieces.size() == 1 && pieces[0].level == 0 && pieces[0].value == 0;
}

}  // namespace

std::vector<long> support(const IntIdeal& i, const PrecisionOptions& opt) {
  require_global(i, "support");
  std::vector<long> out;
  for (const auto& [p, mult] : factorize(i.const_gen())) {
    if (!p.fits_slong_p())
      throw std::invalid_argument("support prime too large: " + p.get_str());
    long pl = p.get_si();
    if (!function_vanishes(ideal_step_function(i.localized(pl), opt)))
      out.push_back(pl);
  }
  return out;
}

LocalClassVector pi_theta(const IntIdeal& i, const PrecisionOptions& opt) {
  LocalClassVector out;
  for (long p : support(i, opt))
    out.set(p, class_of_ideal(i.localized(p), opt));
  return out;
}

IntIdeal globalize(const LocalClassVector& v) {
  IntIdeal out = IntIdeal::unit();
  for (const auto& [p, c] : v.entries()) {
    IntIdeal local = realize_class(c);
    // the same generators, read as an ideal of Int(Z)
    IntIdeal global(std::nullopt, local.const_gen(), local.poly_gens());
    out = ideal_mul(out, global);
  }
  return out;
}

std::vector<Rat> qx_gcd(const std::vector<std::vector<Rat>>& polys) {
  auto trim = [](std::vector<Rat> v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
    return v;
  };
  auto make_monic = [](std::vector<Rat> v) {
    if (!v.empty() && v.back() != 1) {
      Rat lead = v.back();
      for (Rat& c : v) c /= lead;
    }
    return v;
  };
  std::vector<Rat> g;  // empty = gcd of nothing so far
  for (const std::vector<Rat>& raw : polys) {
    std::vector<Rat> b = make_monic(trim(raw));
    if (b.empty()) continue;
    if (g.empty()) {
      g = std::move(b);
      continue;
    }
    // Euclid; remainders kept monic to control coefficient growth
    std::vector<Rat> a = g;
    while (!b.empty()) {
      if (b.size() == 1) {
        a = {Rat(1)};
        break;
      }
      // a mod b
      std::vector<Rat> r = a;
      while (r.size() >= b.size()) {
        Rat q = r.back();  // b is monic
        size_t shift = r.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) r[shift + i] -= q * b[i];
        r = trim(std::move(r));
        if (r.empty()) break;
      }
      a = std::move(b);
      b = make_monic(std::move(r));
    }
    g = std::move(a);
    if (g.size() == 1) return {Rat(1)};
  }
  if (g.empty()) return {};
  return g;
}

PrincipalityCheck divisorially_principal(const IntIdeal& i,
                                         const PrecisionOptions& opt) {
  require_global(i, "divisorially_principal");
  // Route one: every extension class must vanish, in which case the local
  // valuation functions are constant and pin the candidate generator.
  Rat candidate(1);
  for (const auto& [p, mult] : factorize(i.const_gen())) {
    if (!p.fits_slong_p())
      throw std::invalid_argument("support prime too large: " + p.get_str());
    long pl = p.get_si();
    std::vector<StepPiece> pieces = ideal_step_function(i.localized(pl), opt);
    if (pieces.size() != 1) return {};  // nonconstant function: class nonzero
    for (long k = 0; k < pieces[0].value; ++k) candidate *= Rat(p);
  }
  // Q[X] content of the generators (the monic part of the gcd multiplies the
  // candidate in general).  The constant generator already forces content 1,
  // so factored generators need not be expanded for this step.
  std::vector<std::vector<Rat>> plain;
  plain.push_back({Rat(i.const_gen())});
  for (const GenPoly& g : i.poly_gens())
    if (!g.factored()) plain.push_back(from_binomial(g.binpoly()));
  std::vector<Rat> content = qx_gcd(plain);
  if (content.size() != 1) return {};

  // Route two: exact generator membership, I <= candidate * Int(Z).
  if (Rat(Rat(i.const_gen()) / candidate).get_den() != 1) return {};
  for (const GenPoly& g : i.poly_gens()) {
    if (const auto& w = g.factored()) {
      Rat scaled = w->scale / candidate;
      Int den = scaled.get_den();
      if (den == 1) continue;
      for (const auto& [q, mult] : factorize(den)) {
        if (!q.fits_slong_p() ||
            min_total_valuation(w->factors, q.get_si()) <
                static_cast<long>(mult))
          return {};
      }
    } else if (!is_int_valued(poly_scale(g.binpoly(), Rat(1) / candidate))) {
      return {};
    }
  }
  return {true, candidate};
}

LocalClassVector random_vector(Xorshift& rng, const std::vector<long>& primes,
                               int max_level, long max_value) {
  LocalClassVector out;
  for (long p : primes) {
    if (rng.below(2) == 0) continue;
    int n = static_cast<int>(rng.below(max_level + 1));
    long size = 1;
    for (int k = 0; k < n; ++k) size *= p;
    std::vector<long> values(size);
    for (long r = 0; r < size; ++r) values[r] = rng.range(0, max_value);
    out.set(p, StepClass(p, n, std::move(values)));
  }
  return out;
}

ExactnessReport exactness_report(const SampleSpec& spec) {
  ExactnessReport report;
  report.spec = spec;
  Xorshift rng(spec.seed);
  std::vector<long> primes = {2, 3};

  for (int k = 0; k < spec.count; ++k) {
    LocalClassVector v = random_vector(rng, primes, 2, 3);
    bool ok = pi_theta(globalize(v)) == v;
    ++(ok ? report.surjectivity_pass : report.surjectivity_fail);
    report.samples.push_back({"surjectivity", v.to_string(), ok});
  }

  int half = spec.count / 2;
  for (int k = 0; k < half; ++k) {
    LocalClassVector v = random_vector(rng, primes, 2, 3);
    LocalClassVector neg;
    for (const auto& [p, c] : v.entries()) neg.set(p, class_neg(c));
    IntIdeal trivial = ideal_mul(globalize(v), globalize(neg));
    bool ok = divisorially_principal(trivial).principal;
    ++(ok ? report.kernel_pass : report.kernel_fail);
    report.samples.push_back(
        {"kernel-trivial", v.to_string() + " * inverse", ok});
  }
  for (int k = 0; k < half; ++k) {
    LocalClassVector v;
    do {
      v = random_vector(rng, primes, 2, 3);
    } while (v.empty());
    bool ok = !divisorially_principal(globalize(v)).principal;
    ++(ok ? report.kernel_pass : report.kernel_fail);
    report.samples.push_back({"kernel-nontrivial", v.to_string(), ok});
  }
  return report;
}

}  // namespace ivp
