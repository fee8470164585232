#include "ivp/spectra.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace ivp {

using detail::SetNode;

std::string path_to_string(const Path& p) {
  std::string out = "(";
  for (size_t i = 0; i < p.size(); ++i)
    out += (i ? " " : "") + std::to_string(p[i]);
  return out + ")";
}

namespace {

// ---- node helpers; d is the remaining depth below the node -------------

SetNode hom_node(const std::vector<char>& bits) {
  SetNode out;
  out.self = bits.empty() ? false : bits[0] != 0;
  if (!bits.empty()) out.dflt.assign(bits.begin() + 1, bits.end());
  return out;
}

bool hom_empty(const std::vector<char>& bits) {
  for (char b : bits)
    if (b) return false;
  return true;
}

void canonicalize(SetNode& n) {
  SetNode generic = hom_node(n.dflt);
  for (auto it = n.except.begin(); it != n.except.end();) {
    if (it->second == generic)
      it = n.except.erase(it);
    else
      ++it;
  }
}

SetNode node_full(int d) {
  SetNode out;
  out.self = true;
  out.dflt.assign(d, 1);
  return out;
}

SetNode node_empty(int d) {
  SetNode out;
  out.dflt.assign(d, 0);
  return out;
}

SetNode node_union(const SetNode& a, const SetNode& b, int d) {
  SetNode out;
  out.self = a.self || b.self;
  out.dflt.resize(d);
  for (int i = 0; i < d; ++i) out.dflt[i] = a.dflt[i] || b.dflt[i];
  for (const auto& [k, child] : a.except) {
    const SetNode* other = b.except.count(k) ? &b.except.at(k) : nullptr;
    out.except[k] = other ? node_union(child, *other, d - 1)
                          : node_union(child, hom_node(b.dflt), d - 1);
  }
  for (const auto& [k, child] : b.except) {
    if (a.except.count(k)) continue;
    out.except[k] = node_union(hom_node(a.dflt), child, d - 1);
  }
  canonicalize(out);
  return out;
}

SetNode node_intersect(const SetNode& a, const SetNode& b, int d) {
  SetNode out;
  out.self = a.self && b.self;
  out.dflt.resize(d);
  for (int i = 0; i < d; ++i) out.dflt[i] = a.dflt[i] && b.dflt[i];
  for (const auto& [k, child] : a.except) {
    const SetNode* other = b.except.count(k) ? &b.except.at(k) : nullptr;
    out.except[k] = other ? node_intersect(child, *other, d - 1)
                          : node_intersect(child, hom_node(b.dflt), d - 1);
  }
  for (const auto& [k, child] : b.except) {
    if (a.except.count(k)) continue;
    out.except[k] = node_intersect(hom_node(a.dflt), child, d - 1);
  }
  canonicalize(out);
  return out;
}

SetNode node_complement(const SetNode& a, int d) {
  SetNode out;
  out.self = !a.self;
  out.dflt.resize(d);
  for (int i = 0; i < d; ++i) out.dflt[i] = !a.dflt[i];
  for (const auto& [k, child] : a.except)
    out.except[k] = node_complement(child, d - 1);
  canonicalize(out);
  return out;
}

bool node_is_empty(const SetNode& n) {
  if (n.self || !hom_empty(n.dflt)) return false;
  for (const auto& [k, child] : n.except)
    if (!node_is_empty(child)) return false;
  return true;
}

bool node_contains(const SetNode& n, const Path& p, size_t at) {
  if (at == p.size()) return n.self;
  auto it = n.except.find(p[at]);
  if (it != n.except.end()) return node_contains(it->second, p, at + 1);
  return n.dflt[p.size() - at - 1] != 0;
}

// count saturating at 2 ("many"); infinite counts as many
long node_size_class(const SetNode& n) {
  long total = n.self ? 1 : 0;
  if (!hom_empty(n.dflt)) return 2;
  for (const auto& [k, child] : n.except) {
    total += node_size_class(child);
    if (total >= 2) return 2;
  }
  return total;
}

std::optional<long> node_finite_count(const SetNode& n) {
  if (!hom_empty(n.dflt)) return std::nullopt;
  long total = n.self ? 1 : 0;
  for (const auto& [k, child] : n.except) {
    auto sub = node_finite_count(child);
    if (!sub) return std::nullopt;
    total += *sub;
  }
  return total;
}

void node_collect(const SetNode& n, Path& prefix, std::vector<Path>& out) {
  if (n.self) out.push_back(prefix);
  for (const auto& [k, child] : n.except) {
    prefix.push_back(k);
    node_collect(child, prefix, out);
    prefix.pop_back();
  }
}

bool node_any_point(const SetNode& n, Path& prefix, Path& out) {
  if (n.self) {
    out = prefix;
    return true;
  }
  for (const auto& [k, child] : n.except) {
    prefix.push_back(k);
    if (node_any_point(child, prefix, out)) return true;
    prefix.pop_back();
  }
  for (size_t i = 0; i < n.dflt.size(); ++i) {
    if (!n.dflt[i]) continue;
    long fresh = 0;  // smallest non-exceptional child index
    while (n.except.count(fresh)) ++fresh;
    out = prefix;
    out.push_back(fresh);
    for (size_t j = 0; j < i; ++j) out.push_back(0);
    return true;
  }
  return false;
}

std::vector<char> hom_isolated(const std::vector<char>& bits) {
  // a node is isolated only when its whole subtree below is empty
  std::vector<char> out(bits.size());
  char below = 0;
  for (size_t i = bits.size(); i-- > 0;) {
    out[i] = bits[i] && !below;
    below = below || bits[i];
  }
  return out;
}

SetNode node_isolated(const SetNode& n, int d) {
  SetNode out;
  out.self = n.self && (d == 0 || hom_empty(n.dflt));
  out.dflt = hom_isolated(n.dflt);
  for (const auto& [k, child] : n.except)
    out.except[k] = node_isolated(child, d - 1);
  canonicalize(out);
  return out;
}

std::vector<char> hom_closure(const std::vector<char>& bits) {
  std::vector<char> out(bits.size());
  char below = 0;
  for (size_t i = bits.size(); i-- > 0;) {
    out[i] = bits[i] || below;
    below = out[i];
  }
  return out;
}

SetNode node_closure(const SetNode& n, int d) {
  SetNode out;
  out.self = n.self || (d > 0 && !hom_empty(n.dflt));
  out.dflt = hom_closure(n.dflt);
  for (const auto& [k, child] : n.except)
    out.except[k] = node_closure(child, d - 1);
  canonicalize(out);
  return out;
}

void check_same_space(const PointSet& a, const PointSet& b) {
  if (a.depth() != b.depth())
    throw std::invalid_argument("point sets live in different spaces");
}

void check_path(int depth, const Path& p) {
  if (static_cast<int>(p.size()) > depth)
    throw std::invalid_argument("path longer than the space depth");
  for (long k : p)
    if (k < 0) throw std::invalid_argument("negative child index");
}

}  // namespace

PointSet PointSet::empty_set(int depth) {
  if (depth < 0) throw std::invalid_argument("negative depth");
  return PointSet(depth, node_empty(depth));
}

PointSet PointSet::full_set(int depth) {
  if (depth < 0) throw std::invalid_argument("negative depth");
  return PointSet(depth, node_full(depth));
}

PointSet PointSet::point(int depth, const Path& p) {
  check_path(depth, p);
  SetNode node = node_empty(depth - static_cast<int>(p.size()));
  node.self = true;
  for (size_t i = p.size(); i-- > 0;) {
    SetNode parent = node_empty(depth - static_cast<int>(i));
    parent.except[p[i]] = std::move(node);
    node = std::move(parent);
  }
  return PointSet(depth, std::move(node));
}

PointSet PointSet::cone(int depth, const Path& p) {
  check_path(depth, p);
  SetNode node = node_full(depth - static_cast<int>(p.size()));
  for (size_t i = p.size(); i-- > 0;) {
    SetNode parent = node_empty(depth - static_cast<int>(i));
    parent.except[p[i]] = std::move(node);
    node = std::move(parent);
  }
  return PointSet(depth, std::move(node));
}

PointSet PointSet::level_set(int depth, int level) {
  if (level < 0 || level > depth)
    throw std::invalid_argument("level outside the space");
  SetNode node;
  node.self = level == 0;
  node.dflt.assign(depth, 0);
  if (level >= 1) node.dflt[level - 1] = 1;
  return PointSet(depth, std::move(node));
}

PointSet PointSet::complement() const {
  return PointSet(depth_, node_complement(root_, depth_));
}

PointSet set_union(const PointSet& a, const PointSet& b) {
  check_same_space(a, b);
  return PointSet(a.depth_, node_union(a.root_, b.root_, a.depth_));
}

PointSet set_intersect(const PointSet& a, const PointSet& b) {
  check_same_space(a, b);
  return PointSet(a.depth_, node_intersect(a.root_, b.root_, a.depth_));
}

PointSet set_difference(const PointSet& a, const PointSet& b) {
  return set_intersect(a, b.complement());
}

bool PointSet::is_empty() const { return node_is_empty(root_); }

bool PointSet::contains(const Path& p) const {
  check_path(depth_, p);
  return node_contains(root_, p, 0);
}

bool PointSet::subset_of(const PointSet& other) const {
  return set_difference(*this, other).is_empty();
}

bool operator==(const PointSet& a, const PointSet& b) {
  return a.depth_ == b.depth_ && a.root_ == b.root_;
}

std::optional<long> PointSet::finite_count() const {
  return node_finite_count(root_);
}

std::optional<std::vector<Path>> PointSet::finite_points() const {
  if (!finite_count()) return std::nullopt;
  std::vector<Path> out;
  Path prefix;
  node_collect(root_, prefix, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<Path> PointSet::any_point() const {
  Path prefix, out;
  if (node_any_point(root_, prefix, out)) return out;
  return std::nullopt;
}

std::optional<Path> PointSet::only_point() const {
  if (node_size_class(root_) != 1) return std::nullopt;
  return any_point();
}

PointSet PointSet::isolated() const {
  return PointSet(depth_, node_isolated(root_, depth_));
}

PointSet PointSet::cb_derivative() const {
  return set_difference(*this, isolated());
}

int PointSet::cb_rank() const {
  PointSet cur = *this;
  int rank = 0;
  while (!cur.is_empty()) {
    cur = cur.cb_derivative();
    ++rank;
    if (rank > depth_ + 1)
      throw std::logic_error("Cantor-Bendixson rank exceeded depth + 1");
  }
  return rank;
}

PointSet PointSet::closure_inverse() const {
  return PointSet(depth_, node_closure(root_, depth_));
}

std::string PointSet::to_string() const {
  if (is_empty()) return "{}";
  if (*this == full_set(depth_)) return "all";
  if (auto pts = finite_points()) {
    std::string out = "{";
    for (size_t i = 0; i < pts->size(); ++i)
      out += (i ? ", " : "") + path_to_string((*pts)[i]);
    return out + "}";
  }
  // union of whole levels?
  PointSet acc = empty_set(depth_);
  std::vector<int> levels;
  for (int l = 0; l <= depth_; ++l) {
    if (level_set(depth_, l).subset_of(*this)) {
      levels.push_back(l);
      acc = set_union(acc, level_set(depth_, l));
    }
  }
  if (acc == *this) {
    std::string out = "levels {";
    for (size_t i = 0; i < levels.size(); ++i)
      out += (i ? "," : "") + std::to_string(levels[i]);
    return out + "}";
  }
  if (auto pts = complement().finite_points()) {
    std::string out = "all minus {";
    for (size_t i = 0; i < pts->size(); ++i)
      out += (i ? ", " : "") + path_to_string((*pts)[i]);
    return out + "}";
  }
  std::ostringstream out;
  out << "mixed set";
  if (auto w = any_point()) out << " containing " << path_to_string(*w);
  return out.str();
}

// ---- models --------------------------------------------------------------

namespace {

void validate_meta(const DvrMeta& meta) {
  if (!is_prime(meta.residue_char))
    throw std::invalid_argument("residue_char must be prime");
  if (meta.residue_size) {
    // finite residue fields have prime-power order matching the character
    Int q = *meta.residue_size;
    if (q < 2) throw std::invalid_argument("residue_size must be >= 2");
    while (q % meta.residue_char == 0) q /= meta.residue_char;
    if (q != 1)
      throw std::invalid_argument(
          "residue_size must be a power of residue_char");
  }
}

PointSet rule_region(const AlmDedModel& model, const MetaRule& rule) {
  switch (rule.sel) {
    case MetaRule::Sel::level:
      return PointSet::level_set(model.depth, rule.level);
    case MetaRule::Sel::cone:
      return PointSet::cone(model.depth, rule.path);
    case MetaRule::Sel::point:
      return PointSet::point(model.depth, rule.path);
  }
  throw std::logic_error("unreachable");
}

DvrMeta apply_rule(DvrMeta meta, const MetaRule& rule) {
  if (rule.residue_char) meta.residue_char = *rule.residue_char;
  if (rule.sets_residue_size) meta.residue_size = rule.residue_size;
  if (rule.localization_ok) meta.localization_ok = rule.localization_ok;
  validate_meta(meta);
  return meta;
}

bool rule_matches(const MetaRule& rule, const Path& p) {
  switch (rule.sel) {
    case MetaRule::Sel::level:
      return static_cast<int>(p.size()) == rule.level;
    case MetaRule::Sel::cone:
      return p.size() >= rule.path.size() &&
             std::equal(rule.path.begin(), rule.path.end(), p.begin());
    case MetaRule::Sel::point:
      return p == rule.path;
  }
  return false;
}

}  // namespace

DvrMeta meta_at(const AlmDedModel& model, const Path& p) {
  check_path(model.depth, p);
  DvrMeta meta = model.base;
  for (const MetaRule& rule : model.rules)
    if (rule_matches(rule, p)) meta = apply_rule(meta, rule);
  validate_meta(meta);
  return meta;
}

std::vector<std::pair<PointSet, DvrMeta>> meta_partition(
    const AlmDedModel& model) {
  validate_meta(model.base);
  std::vector<std::pair<PointSet, DvrMeta>> regions = {
      {PointSet::full_set(model.depth), model.base}};
  for (const MetaRule& rule : model.rules) {
    PointSet sel = rule_region(model, rule);
    std::vector<std::pair<PointSet, DvrMeta>> next;
    for (const auto& [region, meta] : regions) {
      PointSet out = set_difference(region, sel);
      PointSet in = set_intersect(region, sel);
      if (!out.is_empty()) next.push_back({out, meta});
      if (!in.is_empty()) next.push_back({in, apply_rule(meta, rule)});
    }
    regions = std::move(next);
  }
  return regions;
}

bool int_trivial_point(const DvrMeta& meta) { return !meta.residue_size; }

PointSet int_trivial_set(const AlmDedModel& model) {
  PointSet out = PointSet::empty_set(model.depth);
  for (const auto& [region, meta] : meta_partition(model))
    if (int_trivial_point(meta)) out = set_union(out, region);
  return out;
}

std::string to_string(LocVerdict v) {
  switch (v) {
    case LocVerdict::yes: return "yes";
    case LocVerdict::no: return "no";
    case LocVerdict::unknown: return "unknown";
  }
  return "unknown";
}

LocVerdict localization_report(const AlmDedModel& model, const Path& p) {
  check_path(model.depth, p);
  PointSet full = PointSet::full_set(model.depth);
  if (full.isolated().contains(p)) return LocVerdict::yes;
  DvrMeta meta = meta_at(model, p);
  if (meta.residue_size) {
    // the Int-trivial members avoiding p: if they already intersect to the
    // whole ring, Int(D) is trivial while Int(D_p) is not
    PointSet family = set_difference(int_trivial_set(model),
                                     PointSet::point(model.depth, p));
    if (family.closure_inverse() == full) return LocVerdict::no;
  }
  return LocVerdict::unknown;
}

std::string to_string(FamilyClass c) {
  switch (c) {
    case FamilyClass::jaffard: return "Jaffard";
    case FamilyClass::weak_jaffard: return "WeakJaffard";
    case FamilyClass::pre_jaffard: return "PreJaffard";
  }
  return "PreJaffard";
}

DerivedSequenceResult derived_sequence(const AlmDedModel& model,
                                       int depth_cap) {
  if (model.depth > depth_cap)
    throw std::invalid_argument("model depth exceeds the configured cap");
  DerivedSequenceResult out;
  PointSet cur = PointSet::full_set(model.depth);
  int alpha = 0;
  while (true) {
    out.steps.push_back({alpha, cur, cur.complement()});
    if (cur.is_empty()) break;
    PointSet next = cur.cb_derivative();
    // loop invariant: the stages decrease, i.e. the T_alpha chain ascends
    if (!next.subset_of(cur))
      throw std::logic_error("derived sequence failed to decrease");
    cur = next;
    ++alpha;
    if (alpha > model.depth + 1)
      throw std::logic_error("derived sequence did not stabilize");
  }
  const PointSet& first = out.steps[1].njaff;  // the loop always runs once
  if (first.is_empty()) {
    out.classification = FamilyClass::jaffard;
  } else if (auto single = first.only_point()) {
    out.classification = FamilyClass::weak_jaffard;
    out.pointed_at = *single;
  } else {
    out.classification = FamilyClass::pre_jaffard;
  }
  out.sharp = true;  // the loop above ends only at the empty stage
  out.rank = static_cast<int>(out.steps.size()) - 1;
  return out;
}

PruferSplitReport prufer_split(const AlmDedModel& model) {
  PointSet x = int_trivial_set(model).complement();
  PointSet closure = x.closure_inverse();
  return PruferSplitReport{x, closure, closure.complement()};
}

DecompositionReport picpol_decomposition(const AlmDedModel& model) {
  DecompositionReport report{derived_sequence(model)};
  auto partition = meta_partition(model);
  for (size_t alpha = 0; alpha + 1 < report.derived.steps.size(); ++alpha) {
    PointSet removed = set_difference(report.derived.steps[alpha].njaff,
                                      report.derived.steps[alpha + 1].njaff);
    for (const auto& [region, meta] : partition) {
      for (int level = 0; level <= model.depth; ++level) {
        PointSet piece = set_intersect(
            set_intersect(removed, region),
            PointSet::level_set(model.depth, level));
        if (piece.is_empty()) continue;
        Path witness = *piece.any_point();
        LocVerdict verdict = localization_report(model, witness);
        bool flag_used = verdict == LocVerdict::unknown &&
                         meta.localization_ok == true;
        bool pass = verdict == LocVerdict::yes || flag_used;
        report.checks.push_back(
            {static_cast<int>(alpha), witness, verdict, flag_used, pass});
        if (!pass && !report.violation) {
          std::string reason =
              verdict == LocVerdict::no
                  ? "hypothesis violated: localization fails at "
                  : "hypothesis violated: localization unverified at ";
          report.violation = DecompositionViolation{
              static_cast<int>(alpha), witness,
              reason + path_to_string(witness)};
        }
      }
    }
  }
  if (report.violation || !report.derived.sharp) return report;
  for (const auto& [region, meta] : meta_partition(model)) {
    for (int level = 0; level <= model.depth; ++level) {
      PointSet piece =
          set_intersect(region, PointSet::level_set(model.depth, level));
      if (piece.is_empty()) continue;
      Summand s{piece, level, meta,
                int_trivial_point(meta) ? "0" : "C(completion, Z)/constants",
                true, piece.finite_count()};
      report.summands.push_back(std::move(s));
    }
  }
  return report;
}

AlmDedModel build_example_weakjaff() {
  AlmDedModel model;
  model.name = "example-weakjaff";
  model.depth = 1;
  model.base.residue_char = 2;
  model.base.residue_size = std::nullopt;  // leaves: infinite residue field
  MetaRule root;
  root.sel = MetaRule::Sel::level;
  root.level = 0;
  root.sets_residue_size = true;
  root.residue_size = Int(2);
  root.localization_ok = false;
  MetaRule leaves;
  leaves.sel = MetaRule::Sel::level;
  leaves.level = 1;
  leaves.localization_ok = true;
  model.rules = {root, leaves};
  return model;
}

AlmDedModel uniform_model(std::string name, int depth, DvrMeta base) {
  validate_meta(base);
  AlmDedModel model;
  model.name = std::move(name);
  model.depth = depth;
  model.base = std::move(base);
  return model;
}

// ---- JSON model files ------------------------------------------------------

namespace {

using nlohmann::json;

Int json_int(const json& j, const char* field) {
  if (j.is_number_integer()) return Int(j.get<long>());
  if (j.is_string()) return Int(j.get<std::string>());
  throw std::invalid_argument(std::string("model field '") + field +
                              "' must be an integer");
}

void parse_meta_fields(const json& j, MetaRule& rule) {
  if (j.contains("residue_char"))
    rule.residue_char = json_int(j["residue_char"], "residue_char");
  if (j.contains("residue_size")) {
    rule.sets_residue_size = true;
    if (j["residue_size"].is_string() &&
        j["residue_size"].get<std::string>() == "inf")
      rule.residue_size = std::nullopt;
    else
      rule.residue_size = json_int(j["residue_size"], "residue_size");
  }
  if (j.contains("localization_ok"))
    rule.localization_ok = j["localization_ok"].get<bool>();
}

}  // namespace

namespace {

AlmDedModel model_from_parsed(const json& j);

}  // namespace

AlmDedModel model_from_json_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("model is not valid JSON: ") +
                                e.what());
  }
  try {
    return model_from_parsed(j);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed model field: ") +
                                e.what());
  }
}

namespace {

AlmDedModel model_from_parsed(const json& j) {
  AlmDedModel model;
  model.name = j.value("name", "model");
  if (!j.contains("depth"))
    throw std::invalid_argument("model needs a 'depth' field");
  model.depth = j["depth"].get<int>();
  if (model.depth < 0) throw std::invalid_argument("model depth must be >= 0");
  if (j.contains("default")) {
    const json& d = j["default"];
    if (d.contains("residue_char"))
      model.base.residue_char = json_int(d["residue_char"], "residue_char");
    if (d.contains("residue_size")) {
      if (d["residue_size"].is_string() &&
          d["residue_size"].get<std::string>() == "inf")
        model.base.residue_size = std::nullopt;
      else
        model.base.residue_size = json_int(d["residue_size"], "residue_size");
    }
    if (d.contains("localization_ok"))
      model.base.localization_ok = d["localization_ok"].get<bool>();
  }
  validate_meta(model.base);
  for (const json& r : j.value("rules", json::array())) {
    MetaRule rule;
    int selectors = r.contains("level") + r.contains("cone") +
                    r.contains("point");
    if (selectors != 1)
      throw std::invalid_argument(
          "each rule needs exactly one of 'level', 'cone', 'point'");
    if (r.contains("level")) {
      rule.sel = MetaRule::Sel::level;
      rule.level = r["level"].get<int>();
      if (rule.level < 0 || rule.level > model.depth)
        throw std::invalid_argument("rule level outside the space");
    } else {
      rule.sel = r.contains("cone") ? MetaRule::Sel::cone
                                    : MetaRule::Sel::point;
      for (const json& k :
           r.contains("cone") ? r["cone"] : r["point"])
        rule.path.push_back(k.get<long>());
      if (static_cast<int>(rule.path.size()) > model.depth)
        throw std::invalid_argument("rule path longer than the space depth");
    }
    parse_meta_fields(r, rule);
    model.rules.push_back(std::move(rule));
  }
  meta_partition(model);  // validates every reachable metadata combination
  return model;
}

}  // namespace

std::string model_to_json_text(const AlmDedModel& model) {
  nlohmann::ordered_json j;
  j["name"] = model.name;
  j["depth"] = model.depth;
  nlohmann::ordered_json base;
  base["residue_char"] = model.base.residue_char.get_str();
  base["residue_size"] =
      model.base.residue_size ? nlohmann::ordered_json(model.base.residue_size->get_str())
                              : nlohmann::ordered_json("inf");
  if (model.base.localization_ok)
    base["localization_ok"] = *model.base.localization_ok;
  j["default"] = base;
  j["rules"] = nlohmann::ordered_json::array();
  for (const MetaRule& rule : model.rules) {
    nlohmann::ordered_json r;
    switch (rule.sel) {
      case MetaRule::Sel::level:
        r["level"] = rule.level;
        break;
      case MetaRule::Sel::cone:
        r["cone"] = rule.path;
        break;
      case MetaRule::Sel::point:
        r["point"] = rule.path;
        break;
    }
    if (rule.residue_char) r["residue_char"] = rule.residue_char->get_str();
    if (rule.sets_residue_size)
      r["residue_size"] = rule.residue_size
                              ? nlohmann::ordered_json(rule.residue_size->get_str())
                              : nlohmann::ordered_json("inf");
    if (rule.localization_ok) r["localization_ok"] = *rule.localization_ok;
    j["rules"].push_back(r);
  }
  return j.dump(2);
}

}  // namespace ivp
