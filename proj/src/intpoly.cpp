#include "ivp/intpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace ivp {

namespace {

void trim(std::vector<Rat>& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

}  // namespace

BinPoly::BinPoly(std::vector<Rat> binomial_coeffs)
    : coeffs_(std::move(binomial_coeffs)) {
  trim(coeffs_);
}

BinPoly BinPoly::from_power(const std::vector<Rat>& power_coeffs) {
  return to_binomial(power_coeffs);
}

Rat evaluate_power(const std::vector<Rat>& power_coeffs, const Rat& a) {
  Rat acc(0);
  for (auto it = power_coeffs.rbegin(); it != power_coeffs.rend(); ++it)
    acc = acc * a + *it;
  return acc;
}

BinPoly to_binomial(const std::vector<Rat>& power_coeffs) {
  std::vector<Rat> power = power_coeffs;
  trim(power);
  if (power.empty()) return BinPoly();
  size_t n = power.size();
  std::vector<Rat> diffs(n);
  for (size_t i = 0; i < n; ++i)
    diffs[i] = evaluate_power(power, Rat(static_cast<long>(i)));
  std::vector<Rat> out(n);
  for (size_t k = 0; k < n; ++k) {
    out[k] = diffs[0];
    for (size_t i = 0; i + 1 < n - k; ++i) diffs[i] = diffs[i + 1] - diffs[i];
  }
  return BinPoly(std::move(out));
}

std::vector<Rat> from_binomial(const BinPoly& f) {
  std::vector<Rat> out;
  if (f.is_zero()) return out;
  out.assign(f.coeffs().size(), Rat(0));
  // falling factorial X(X-1)...(X-k+1), extended one factor per step
  std::vector<Rat> falling = {Rat(1)};
  Rat factorial(1);
  for (size_t k = 0; k < f.coeffs().size(); ++k) {
    if (k > 0) {
      factorial *= static_cast<long>(k);
      std::vector<Rat> next(falling.size() + 1, Rat(0));
      Rat shift(-static_cast<long>(k - 1));
      for (size_t i = 0; i < falling.size(); ++i) {
        next[i + 1] += falling[i];
        next[i] += falling[i] * shift;
      }
      falling = std::move(next);
    }
    Rat c = f.coeffs()[k] / factorial;
    for (size_t i = 0; i < falling.size(); ++i) out[i] += c * falling[i];
  }
  trim(out);
  return out;
}

Rat evaluate(const BinPoly& f, const Rat& a) {
  Rat acc(0), binom(1);
  for (size_t k = 0; k < f.coeffs().size(); ++k) {
    if (k > 0) binom *= (a - static_cast<long>(k - 1)) / static_cast<long>(k);
    acc += f.coeffs()[k] * binom;
  }
  return acc;
}

bool is_int_valued(const BinPoly& f) {
  for (const Rat& c : f.coeffs())
    if (c.get_den() != 1) return false;
  return true;
}

FracIdeal value_module(const BinPoly& f, const OverringZ& ambient) {
  if (f.is_zero())
    throw std::invalid_argument("value module of the zero polynomial");
  return zmodule_generator(f.coeffs(), ambient);
}

FracIdeal conductor(const BinPoly& f, const OverringZ& ambient) {
  return ideal_colon(unit_ideal(ambient), value_module(f, ambient));
}

Int fixed_divisor(const BinPoly& f) {
  if (f.is_zero())
    throw std::invalid_argument("fixed divisor of the zero polynomial");
  if (!is_int_valued(f)) throw std::invalid_argument("not integer-valued");
  Rat g = value_module(f, OverringZ::integers()).generator();
  return g.get_num();
}

BinPoly poly_add(const BinPoly& a, const BinPoly& b) {
  std::vector<Rat> out(std::max(a.coeffs().size(), b.coeffs().size()), Rat(0));
  for (size_t i = 0; i < a.coeffs().size(); ++i) out[i] += a.coeffs()[i];
  for (size_t i = 0; i < b.coeffs().size(); ++i) out[i] += b.coeffs()[i];
  return BinPoly(std::move(out));
}

BinPoly poly_mul(const BinPoly& a, const BinPoly& b) {
  if (a.is_zero() || b.is_zero()) return BinPoly();
  std::vector<Rat> pa = from_binomial(a), pb = from_binomial(b);
  std::vector<Rat> out(pa.size() + pb.size() - 1, Rat(0));
  for (size_t i = 0; i < pa.size(); ++i)
    for (size_t j = 0; j < pb.size(); ++j) out[i + j] += pa[i] * pb[j];
  return to_binomial(out);
}

BinPoly poly_scale(const BinPoly& a, const Rat& c) {
  if (c == 0) return BinPoly();
  std::vector<Rat> out = a.coeffs();
  for (Rat& x : out) x *= c;
  return BinPoly(std::move(out));
}

BinPoly parse_poly(const std::string& s) {
  size_t lo = s.find('['), hi = s.rfind(']');
  if (lo == std::string::npos || hi == std::string::npos || hi < lo)
    throw std::invalid_argument(
        "malformed polynomial (expected [c0, c1, ...]): '" + s + "'");
  std::string body = s.substr(lo + 1, hi - lo - 1);
  std::vector<Rat> power;
  std::string cur;
  bool saw_comma = false;
  auto flush = [&] {
    bool blank = true;
    for (char c : cur)
      if (!isspace(static_cast<unsigned char>(c))) blank = false;
    if (blank) {
      if (saw_comma)
        throw std::invalid_argument("malformed polynomial entry in '" + s + "'");
      return;
    }
    power.push_back(parse_rat(cur));
  };
  for (char c : body) {
    if (c == ',') {
      flush();
      saw_comma = true;
      cur.clear();
    } else {
      cur += c;
    }
  }
  flush();
  return to_binomial(power);
}

std::string poly_to_string(const BinPoly& f) {
  std::vector<Rat> power = from_binomial(f);
  std::ostringstream out;
  out << "[";
  if (power.empty()) out << "0";
  for (size_t i = 0; i < power.size(); ++i)
    out << (i ? ", " : "") << rat_to_string(power[i]);
  out << "]";
  return out.str();
}

}  // namespace ivp
