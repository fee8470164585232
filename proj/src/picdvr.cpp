#include "ivp/picdvr.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <sstream>

namespace ivp {

namespace {

constexpr long kInfVal = std::numeric_limits<long>::max() / 4;

long checked_pow(long p, int n, const char* what) {
  long out = 1;
  for (int i = 0; i < n; ++i) {
    if (out > std::numeric_limits<long>::max() / p / 4)
      throw std::invalid_argument(std::string(what) + ": p^n too large");
    out *= p;
  }
  return out;
}

void require_small_prime(long p) {
  if (p < 2 || !is_prime(Int(p)))
    throw std::invalid_argument("not a prime: " + std::to_string(p));
}

long val_of_long(long x, long p) {
  if (x < 0) x = -x;
  long v = 0;
  while (x % p == 0) {
    x /= p;
    ++v;
  }
  return v;
}

}  // namespace

StepClass::StepClass(long p) : p_(p), level_(0), values_{0} {
  require_small_prime(p);
}

StepClass::StepClass(long p, int level, std::vector<long> values)
    : p_(p), level_(level), values_(std::move(values)) {
  require_small_prime(p);
  if (level_ < 0) throw std::invalid_argument("negative level");
  long expected = checked_pow(p_, level_, "step class");
  if (static_cast<long>(values_.size()) != expected)
    throw std::invalid_argument("step class needs p^n values");
  long base = values_[0];
  if (base != 0)
    for (long& v : values_) v -= base;
  while (level_ > 0) {
    long half = expected / p_;
    bool factors = true;
    for (long r = 0; r < expected; ++r)
      if (values_[r] != values_[r % half]) factors = false;
    if (!factors) break;
    values_.resize(half);
    expected = half;
    --level_;
  }
}

std::string StepClass::to_string() const {
  std::ostringstream out;
  out << "p=" << p_ << " n=" << level_ << " [";
  for (size_t i = 0; i < values_.size(); ++i)
    out << (i ? "," : "") << values_[i];
  out << "]";
  return out.str();
}

StepClass step_canonical(long p, int level, std::vector<long> values) {
  return StepClass(p, level, std::move(values));
}

std::vector<long> refine(const StepClass& a, int n) {
  if (n < a.level())
    throw std::invalid_argument("refine target below the class level");
  long size = checked_pow(a.prime(), n, "refine");
  long base = checked_pow(a.prime(), a.level(), "refine");
  std::vector<long> out(size);
  for (long r = 0; r < size; ++r) out[r] = a.values()[r % base];
  return out;
}

StepClass class_add(const StepClass& a, const StepClass& b) {
  if (a.prime() != b.prime())
    throw std::invalid_argument("class_add: prime mismatch");
  int n = std::max(a.level(), b.level());
  std::vector<long> va = refine(a, n), vb = refine(b, n);
  for (size_t i = 0; i < va.size(); ++i) va[i] += vb[i];
  return StepClass(a.prime(), n, std::move(va));
}

StepClass class_neg(const StepClass& a) {
  std::vector<long> v = a.values();
  for (long& x : v) x = -x;
  return StepClass(a.prime(), a.level(), std::move(v));
}

StepClass ball_indicator(long p, long residue, int n) {
  long size = checked_pow(p, n, "ball indicator");
  if (residue < 0 || residue >= size)
    throw std::invalid_argument("ball residue out of range");
  std::vector<long> v(size, 0);
  v[residue] = 1;
  return StepClass(p, n, std::move(v));
}

BinPoly expand(const LinFactored& w) {
  std::vector<Rat> power = {w.scale};
  for (const auto& [root, mult] : w.factors) {
    for (int k = 0; k < mult; ++k) {
      std::vector<Rat> next(power.size() + 1, Rat(0));
      for (size_t i = 0; i < power.size(); ++i) {
        next[i + 1] += power[i];
        next[i] += power[i] * Rat(-root);
      }
      power = std::move(next);
    }
  }
  return to_binomial(power);
}

namespace {

std::vector<std::pair<long, int>> merge_factors(
    std::vector<std::pair<long, int>> factors) {
  std::map<long, int> merged;
  for (const auto& [root, mult] : factors) {
    if (mult < 1)
      throw std::invalid_argument("factor multiplicity must be >= 1");
    merged[root] += mult;
  }
  return {merged.begin(), merged.end()};
}

}  // namespace

GenPoly::GenPoly(BinPoly f) : plain_(std::move(f)) {
  if (plain_->is_zero())
    throw std::invalid_argument("zero polynomial is not a generator");
}

GenPoly::GenPoly(LinFactored w) {
  if (w.scale == 0)
    throw std::invalid_argument("zero polynomial is not a generator");
  w.factors = merge_factors(std::move(w.factors));
  factored_ = std::move(w);
}

BinPoly GenPoly::binpoly() const {
  return plain_ ? *plain_ : expand(*factored_);
}

bool operator==(const GenPoly& a, const GenPoly& b) {
  if (a.plain_ && b.plain_) return *a.plain_ == *b.plain_;
  if (a.factored_ && b.factored_)
    return a.factored_->scale == b.factored_->scale &&
           a.factored_->factors == b.factored_->factors;
  return false;
}

IntIdeal::IntIdeal(std::optional<long> p, Int const_gen,
                   std::vector<GenPoly> gens)
    : p_(p), m_(std::move(const_gen)), gens_(std::move(gens)) {
  if (p_) require_small_prime(*p_);
  if (m_ < 1)
    throw std::invalid_argument(
        "ideal must be unitary: constant generator >= 1");
  for (const GenPoly& g : gens_) {
    if (const auto& w = g.factored()) {
      // integer scale times integer monic factors is automatically
      // integer-valued; a rational scale needs the valuation bound
      Int den = w->scale.get_den();
      if (den != 1) {
        for (const auto& [q, mult] : factorize(den)) {
          if (!q.fits_slong_p() ||
              min_total_valuation(w->factors, q.get_si()) <
                  static_cast<long>(mult))
            throw std::invalid_argument("generator not integer-valued");
        }
      }
    } else if (!is_int_valued(g.binpoly())) {
      throw std::invalid_argument("generator not integer-valued");
    }
  }
}

IntIdeal IntIdeal::unit(std::optional<long> p) {
  return IntIdeal(p, Int(1), {});
}

IntIdeal IntIdeal::localized(long p) const { return IntIdeal(p, m_, gens_); }

std::string IntIdeal::to_string() const {
  std::string out = m_.get_str();
  for (size_t i = 0; i < gens_.size(); ++i)
    out += (i ? ", " : "; ") + poly_to_string(gens_[i].binpoly());
  return out;
}

namespace {

GenPoly gen_scale(const GenPoly& g, const Int& c) {
  if (const auto& w = g.factored())
    return GenPoly(LinFactored{w->scale * Rat(c), w->factors});
  return GenPoly(poly_scale(g.binpoly(), Rat(c)));
}

GenPoly gen_mul(const GenPoly& a, const GenPoly& b) {
  if (a.factored() && b.factored()) {
    LinFactored out;
    out.scale = a.factored()->scale * b.factored()->scale;
    out.factors = a.factored()->factors;
    out.factors.insert(out.factors.end(), b.factored()->factors.begin(),
                       b.factored()->factors.end());
    return GenPoly(std::move(out));
  }
  return GenPoly(poly_mul(a.binpoly(), b.binpoly()));
}

void push_unique(std::vector<GenPoly>& gens, GenPoly g) {
  for (const GenPoly& h : gens)
    if (h == g) return;
  gens.push_back(std::move(g));
}

}  // namespace

IntIdeal ideal_mul(const IntIdeal& a, const IntIdeal& b) {
  if (a.prime() != b.prime())
    throw std::invalid_argument("ideal_mul: ambient mismatch");
  std::vector<GenPoly> gens;
  for (const GenPoly& f : a.poly_gens())
    push_unique(gens, gen_scale(f, b.const_gen()));
  for (const GenPoly& g : b.poly_gens())
    push_unique(gens, gen_scale(g, a.const_gen()));
  for (const GenPoly& f : a.poly_gens())
    for (const GenPoly& g : b.poly_gens()) push_unique(gens, gen_mul(f, g));
  return IntIdeal(a.prime(), a.const_gen() * b.const_gen(), std::move(gens));
}

// ---------------------------------------------------------------------------
// Valuation engine.  The function a -> min(v_p(m), min_f v_p(f(a))) of a
// unitary ideal is a step function; each ball is either certified constant
// or split into its p children.  Certificates:
//   - linear-factored generators: v_p(f(x)) = v_p(scale) + sum mult*v_p(x-j),
//     exact on the ball when no root j is congruent to the center mod
//     p^level, otherwise bounded below by charging level to each congruent
//     root;
//   - plain generators: Taylor coefficients C_k of den*f at the center give
//     v_p(f(x)) = v_p(C_0) - v_p(den) exactly when v_p(C_0) undercuts every
//     v_p(C_k) + k*level, and min over those terms as a lower bound.
// A generator whose lower bound cannot undercut the certified minimum is
// discarded; the constant generator always certifies, which bounds the
// refinement for unitary ideals.

namespace {

struct GenCtx {
  bool witnessed = false;
  long v_scale = 0;
  std::vector<std::pair<long, int>> factors;
  std::vector<Int> power;  // den * f, power basis
  long v_den = 0;
};

struct EngineCtx {
  long p;
  Int P;
  long v_const;
  std::vector<GenCtx> gens;
  PrecisionOptions opt;
};

struct BallEval {
  bool exact;
  long value;  // exact value, or a lower bound
};

BallEval eval_gen(const EngineCtx& ctx, const GenCtx& g, long residue,
                  int level) {
  if (g.witnessed) {
    long fixed = g.v_scale;
    long wild = 0;
    for (const auto& [root, mult] : g.factors) {
      long diff = residue - root;
      if (diff == 0) {
        wild += mult;
        continue;
      }
      long v = val_of_long(diff, ctx.p);
      if (v >= level)
        wild += mult;
      else
        fixed += static_cast<long>(mult) * v;
    }
    if (wild == 0) return {true, fixed};
    return {false, fixed + wild * static_cast<long>(level)};
  }
  // Taylor shift of the integer polynomial to the ball center
  std::vector<Int> c = g.power;
  Int center(residue);
  for (size_t j = 0; j + 1 < c.size(); ++j)
    for (size_t i = c.size() - 1; i > j; --i) c[i - 1] += center * c[i];
  long v0 = c[0] == 0 ? kInfVal : val_p(c[0], ctx.P);
  long rest = kInfVal;
  for (size_t k = 1; k < c.size(); ++k) {
    if (c[k] == 0) continue;
    rest =
        std::min(rest, val_p(c[k], ctx.P) + static_cast<long>(k) * level);
  }
  if (v0 < rest) return {true, v0 - g.v_den};
  return {false, std::min(v0, rest) - g.v_den};
}

struct BallResult {
  std::optional<long> constant;
  std::vector<StepPiece> pieces;
};

BallResult eval_ball(const EngineCtx& ctx, long residue, int level) {
  long exact_min = ctx.v_const;
  long pending = kInfVal;
  for (const GenCtx& g : ctx.gens) {
    BallEval e = eval_gen(ctx, g, residue, level);
    if (e.exact)
      exact_min = std::min(exact_min, e.value);
    else
      pending = std::min(pending, e.value);
  }
  if (pending >= exact_min) return {exact_min, {}};
  if (level >= ctx.opt.max_level)
    throw precision_cap_error(
        "precision cap: valuation function did not stabilize by level " +
        std::to_string(ctx.opt.max_level));
  long stride = checked_pow(ctx.p, level, "valuation refinement");
  std::vector<BallResult> kids;
  kids.reserve(ctx.p);
  bool all_equal = true;
  for (long t = 0; t < ctx.p; ++t) {
    kids.push_back(eval_ball(ctx, residue + t * stride, level + 1));
    if (!kids.back().constant ||
        !(kids[0].constant && *kids[0].constant == *kids.back().constant))
      all_equal = false;
  }
  if (all_equal) return {*kids[0].constant, {}};
  BallResult out;
  for (long t = 0; t < ctx.p; ++t) {
    if (kids[t].constant) {
      out.pieces.push_back(
          StepPiece{residue + t * stride, level + 1, *kids[t].constant});
    } else {
      out.pieces.insert(out.pieces.end(), kids[t].pieces.begin(),
                        kids[t].pieces.end());
    }
  }
  return out;
}

EngineCtx build_engine(const IntIdeal& i, const PrecisionOptions& opt) {
  if (!i.prime())
    throw std::invalid_argument("valuation function needs a local ideal");
  EngineCtx ctx;
  ctx.p = *i.prime();
  ctx.P = Int(ctx.p);
  ctx.v_const = i.const_gen() == 1 ? 0 : val_p(i.const_gen(), ctx.P);
  ctx.opt = opt;
  for (const GenPoly& g : i.poly_gens()) {
    GenCtx gc;
    if (const auto& w = g.factored()) {
      gc.witnessed = true;
      gc.v_scale = val_p(w->scale, ctx.P);
      gc.factors = w->factors;
    } else {
      std::vector<Rat> power = from_binomial(g.binpoly());
      Int den(1);
      for (const Rat& q : power)
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den().get_mpz_t());
      for (const Rat& q : power)
        gc.power.push_back(Int(q.get_num() * (den / q.get_den())));
      gc.v_den = den == 1 ? 0 : val_p(den, ctx.P);
    }
    ctx.gens.push_back(std::move(gc));
  }
  return ctx;
}

std::vector<long> materialize(const std::vector<StepPiece>& pieces, long p,
                              int n, const PrecisionOptions& opt) {
  long size = checked_pow(p, n, "value function");
  if (size > opt.max_entries)
    throw precision_cap_error("precision cap: level " + std::to_string(n) +
                              " needs more than max_entries values");
  std::vector<long> out(size);
  for (const StepPiece& piece : pieces) {
    long stride = checked_pow(p, piece.level, "value function");
    for (long r = piece.residue; r < size; r += stride) out[r] = piece.value;
  }
  return out;
}

}  // namespace

std::vector<StepPiece> ideal_step_function(const IntIdeal& i,
                                           const PrecisionOptions& opt) {
  EngineCtx ctx = build_engine(i, opt);
  BallResult top = eval_ball(ctx, 0, 0);
  if (top.constant) return {StepPiece{0, 0, *top.constant}};
  return std::move(top.pieces);
}

std::vector<long> value_function(const IntIdeal& i, int n,
                                 const PrecisionOptions& opt) {
  std::vector<StepPiece> pieces = ideal_step_function(i, opt);
  for (const StepPiece& piece : pieces)
    if (piece.level > n)
      throw std::invalid_argument(
          "value function is not constant at level " + std::to_string(n) +
          " (stabilizes at level " + std::to_string(piece.level) + ")");
  return materialize(pieces, *i.prime(), n, opt);
}

StepClass class_of_ideal(const IntIdeal& i, const PrecisionOptions& opt) {
  std::vector<StepPiece> pieces = ideal_step_function(i, opt);
  int level = 0;
  for (const StepPiece& piece : pieces) level = std::max(level, piece.level);
  return StepClass(*i.prime(), level,
                   materialize(pieces, *i.prime(), level, opt));
}

long factorial_valuation(long n, long p) {
  long v = 0;
  for (long q = p; q <= n; q *= p) {
    v += n / q;
    if (q > n / p) break;  // the next q would overflow past n anyway
  }
  return v;
}

IntIdeal realize_class(const StepClass& sigma) {
  long p = sigma.prime();
  if (sigma.is_zero()) return IntIdeal::unit(p);
  int n = sigma.level();
  long pn = checked_pow(p, n, "realize_class");
  long top = *std::max_element(sigma.values().begin(), sigma.values().end());
  std::vector<long> beta(pn);
  long total = 0;
  for (long r = 0; r < pn; ++r) {
    beta[r] = top - sigma.values()[r];
    total += beta[r];
  }
  long e = factorial_valuation(pn - 1, p);
  Int P(p);
  Int m;
  mpz_pow_ui(m.get_mpz_t(), P.get_mpz_t(),
             static_cast<unsigned long>((e + 1) * total));
  std::vector<GenPoly> gens;
  for (long r = 0; r < pn; ++r) {
    if (beta[r] == 0) continue;
    LinFactored w;
    Int scale;
    mpz_pow_ui(scale.get_mpz_t(), P.get_mpz_t(),
               static_cast<unsigned long>((e + 1) * (total - beta[r])));
    w.scale = Rat(scale);
    for (long j = 0; j < pn; ++j)
      if (j != r) w.factors.push_back({j, static_cast<int>(beta[r])});
    gens.emplace_back(std::move(w));
  }
  return IntIdeal(p, std::move(m), std::move(gens));
}

long min_total_valuation(std::vector<std::pair<long, int>> factors, long p) {
  factors = merge_factors(std::move(factors));
  if (factors.empty()) return 0;
  std::map<long, std::vector<std::pair<long, int>>> groups;
  for (const auto& [root, mult] : factors) {
    long rem = ((root % p) + p) % p;
    groups[rem].push_back({(root - rem) / p, mult});
  }
  // a residue class free of roots gives total valuation 0
  if (static_cast<long>(groups.size()) < p) return 0;
  long best = kInfVal;
  for (auto& [rem, deeper] : groups) {
    long here = 0;
    for (const auto& [root, mult] : deeper) here += mult;
    best = std::min(best, here + min_total_valuation(std::move(deeper), p));
  }
  return best;
}

}  // namespace ivp
