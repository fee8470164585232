#ifndef IVP_SPECTRA_HPP
#define IVP_SPECTRA_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ivp/exactnum.hpp"

namespace ivp {

// A point of the model space: a sequence of child indices of length at most
// the space depth.  Points of maximal length are isolated; shorter points
// are limits of their infinitely many children.
using Path = std::vector<long>;

std::string path_to_string(const Path& p);  // "()", "(0)", "(1 2)"

namespace detail {
// Subtree descriptor: membership of the subtree root, a homogeneous bit
// pattern shared by every non-exceptional child subtree, and finitely many
// exceptional child subtrees.
struct SetNode {
  bool self = false;
  std::vector<char> dflt;
  std::map<long, SetNode> except;

  friend bool operator==(const SetNode& a, const SetNode& b) {
    return a.self == b.self && a.dflt == b.dflt && a.except == b.except;
  }
};
}  // namespace detail

// A subset of the depth-k space, closed under the boolean operations.
// Each node descriptor lists finitely many exceptional children and a
// homogeneous pattern shared by all the others, so membership, emptiness
// and equality stay decidable while cofinite horizontal behavior (the only
// kind the topology can see) is represented exactly.
class PointSet {
 public:
  static PointSet empty_set(int depth);
  static PointSet full_set(int depth);
  static PointSet point(int depth, const Path& p);
  static PointSet cone(int depth, const Path& p);  // descendants and self
  static PointSet level_set(int depth, int level);

  int depth() const { return depth_; }

  PointSet complement() const;
  friend PointSet set_union(const PointSet& a, const PointSet& b);
  friend PointSet set_intersect(const PointSet& a, const PointSet& b);
  friend PointSet set_difference(const PointSet& a, const PointSet& b);

  bool is_empty() const;
  bool contains(const Path& p) const;
  bool subset_of(const PointSet& other) const;
  friend bool operator==(const PointSet& a, const PointSet& b);

  // Exact point count when finite.
  std::optional<long> finite_count() const;
  std::optional<std::vector<Path>> finite_points() const;
  std::optional<Path> any_point() const;
  std::optional<Path> only_point() const;  // set when the count is exactly 1

  // Points of the set with a neighborhood meeting it only in themselves.
  PointSet isolated() const;
  PointSet cb_derivative() const;
  int cb_rank() const;
  // Smallest closed superset in the inverse topology.
  PointSet closure_inverse() const;

  std::string to_string() const;

 private:
  PointSet(int depth, detail::SetNode root)
      : depth_(depth), root_(std::move(root)) {}

  int depth_ = 0;
  detail::SetNode root_;
};

// Per-point DVR data.  residue_size empty means an infinite residue field.
struct DvrMeta {
  Int residue_char = 2;
  std::optional<Int> residue_size;
  std::optional<bool> localization_ok;
};

// Partial metadata override attached to a level, a cone, or a single point.
struct MetaRule {
  enum class Sel { level, cone, point };
  Sel sel = Sel::level;
  int level = 0;
  Path path;
  std::optional<Int> residue_char;
  bool sets_residue_size = false;
  std::optional<Int> residue_size;  // meaningful when sets_residue_size
  std::optional<bool> localization_ok;
};

struct AlmDedModel {
  std::string name;
  int depth = 0;
  DvrMeta base;
  std::vector<MetaRule> rules;
};

AlmDedModel model_from_json_text(const std::string& text);
std::string model_to_json_text(const AlmDedModel& model);

DvrMeta meta_at(const AlmDedModel& model, const Path& p);
// Disjoint cover of the space by regions of constant metadata, in a
// deterministic order.
std::vector<std::pair<PointSet, DvrMeta>> meta_partition(
    const AlmDedModel& model);

// Int(T_P) = T_P[X] exactly when the residue field is infinite (all model
// points are rank-one discrete).
bool int_trivial_point(const DvrMeta& meta);
PointSet int_trivial_set(const AlmDedModel& model);

enum class LocVerdict { yes, no, unknown };
std::string to_string(LocVerdict v);

// Whether Int(D) localizes at the point: yes for isolated points, no when
// the point carries a finite residue field and an Int-trivial complete
// subfamily avoids it, unknown otherwise.
LocVerdict localization_report(const AlmDedModel& model, const Path& p);

enum class FamilyClass { jaffard, weak_jaffard, pre_jaffard };
std::string to_string(FamilyClass c);

struct DerivedStep {
  int alpha;
  PointSet njaff;    // members not yet Jaffard over T_alpha
  PointSet removed;  // complement: the support already absorbed into T_alpha
};

struct DerivedSequenceResult {
  std::vector<DerivedStep> steps;  // alpha = 0 .. first empty stage
  FamilyClass classification = FamilyClass::pre_jaffard;
  std::optional<Path> pointed_at;  // set for weak Jaffard families
  bool sharp = false;
  int rank = 0;  // first alpha with empty stage, when sharp
};

DerivedSequenceResult derived_sequence(const AlmDedModel& model,
                                       int depth_cap = 6);

struct PruferSplitReport {
  PointSet x;          // points whose local integer-valued ring is nontrivial
  PointSet x_closure;  // inverse-topology closure; the support of T
  PointSet vanishing;  // complement: local class groups are zero there
};

PruferSplitReport prufer_split(const AlmDedModel& model);

struct HypothesisCheck {
  int stage = 0;
  Path witness;
  LocVerdict verdict = LocVerdict::unknown;
  bool flag_used = false;  // unknown verdict accepted via the model flag
  bool pass = false;
};

struct DecompositionViolation {
  int stage = 0;
  Path point;
  std::string message;
};

struct Summand {
  PointSet points;
  int level = 0;
  DvrMeta meta;
  std::string group;  // "C(completion, Z)/constants" or "0"
  bool free = true;
  std::optional<long> count;  // point count when finite
};

struct DecompositionReport {
  DerivedSequenceResult derived;
  std::vector<HypothesisCheck> checks;
  std::optional<DecompositionViolation> violation;
  std::vector<Summand> summands;  // filled only without violation
};

// Pointwise hypothesis check of the sharp decomposition: every member
// removed at every stage must localize (or carry an explicit flag); on
// success, one summand per point grouped by metadata region and level.
DecompositionReport picpol_decomposition(const AlmDedModel& model);

// The weak Jaffard family with one non-Jaffard member: infinitely many
// Int-trivial isolated points under a single finite-residue limit.
AlmDedModel build_example_weakjaff();

// Model with a single metadata everywhere.
AlmDedModel uniform_model(std::string name, int depth, DvrMeta base);

}  // namespace ivp

#endif
