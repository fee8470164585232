#include "ivp/spectra.hpp"

#include <stdexcept>

#include "doctest.h"
#include "ivp/rng.hpp"

using namespace ivp;

namespace {

PointSet random_set(Xorshift& rng, int depth) {
  // union of a few random cones, points and level sets, some complemented
  PointSet out = PointSet::empty_set(depth);
  int pieces = 1 + static_cast<int>(rng.below(4));
  for (int i = 0; i < pieces; ++i) {
    Path p;
    int len = static_cast<int>(rng.below(depth + 1));
    for (int k = 0; k < len; ++k) p.push_back(rng.range(0, 3));
    PointSet piece = PointSet::empty_set(depth);
    switch (rng.below(3)) {
      case 0: piece = PointSet::point(depth, p); break;
      case 1: piece = PointSet::cone(depth, p); break;
      default:
        piece = PointSet::level_set(depth, static_cast<int>(rng.below(depth + 1)));
    }
    if (rng.below(4) == 0) piece = piece.complement();
    out = set_union(out, piece);
  }
  return out;
}

AlmDedModel finite_residue_model(int depth, bool flags) {
  DvrMeta base;
  base.residue_char = 2;
  base.residue_size = Int(2);
  if (flags) base.localization_ok = true;
  return uniform_model("uniform", depth, base);
}

}  // namespace

TEST_CASE("point set basics") {
  PointSet full = PointSet::full_set(2);
  PointSet empty = PointSet::empty_set(2);
  CHECK(empty.is_empty());
  CHECK(!full.is_empty());
  CHECK(full.contains({}));
  CHECK(full.contains({4, 7}));
  CHECK(full.complement() == empty);
  CHECK(set_union(full, empty) == full);
  CHECK(set_intersect(full, empty) == empty);

  PointSet pt = PointSet::point(2, {1, 2});
  CHECK(pt.contains({1, 2}));
  CHECK(!pt.contains({1}));
  CHECK(pt.finite_count() == 1);
  CHECK(pt.only_point() == Path{1, 2});

  PointSet cone = PointSet::cone(2, {1});
  CHECK(cone.contains({1}));
  CHECK(cone.contains({1, 5}));
  CHECK(!cone.contains({}));
  CHECK(!cone.finite_count());

  PointSet leaves = PointSet::level_set(2, 2);
  CHECK(leaves.contains({0, 0}));
  CHECK(!leaves.contains({0}));
  CHECK(set_intersect(cone, leaves).contains({1, 3}));

  CHECK_THROWS_AS(PointSet::point(1, {0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(set_union(full, PointSet::full_set(1)),
                  std::invalid_argument);
}

TEST_CASE("finite points and witnesses") {
  PointSet s = set_union(PointSet::point(2, {0}), PointSet::point(2, {1, 2}));
  auto pts = s.finite_points();
  REQUIRE(pts);
  CHECK(*pts == std::vector<Path>{{0}, {1, 2}});
  CHECK(s.any_point());
  CHECK(!s.only_point());

  // generic witness avoids exceptional children
  PointSet t = set_difference(PointSet::level_set(2, 1),
                              PointSet::point(2, {0}));
  Path w = *t.any_point();
  CHECK(t.contains(w));
  CHECK(w != Path{0});
}

TEST_CASE("isolated points and the derivative") {
  // full depth-1 space: the leaves are isolated, the root is their limit
  PointSet full1 = PointSet::full_set(1);
  CHECK(full1.cb_derivative() == PointSet::point(1, {}));
  CHECK(full1.cb_derivative().cb_derivative().is_empty());
  CHECK(full1.cb_rank() == 2);

  // a finite set of leaves is discrete
  PointSet finite = set_union(PointSet::point(1, {0}), PointSet::point(1, {5}));
  CHECK(finite.cb_derivative().is_empty());
  CHECK(finite.cb_rank() == 1);

  CHECK(PointSet::full_set(2).cb_rank() == 3);
  CHECK(PointSet::empty_set(3).cb_rank() == 0);
}

TEST_CASE("closure in the inverse topology") {
  // finite sets are closed
  PointSet finite = set_union(PointSet::point(2, {0}), PointSet::point(2, {1, 2}));
  CHECK(finite.closure_inverse() == finite);

  // all leaves under a node pick up the node
  PointSet under = set_intersect(PointSet::cone(2, {1}), PointSet::level_set(2, 2));
  PointSet closed = under.closure_inverse();
  CHECK(closed.contains({1}));
  CHECK(closed == set_union(under, PointSet::point(2, {1})));

  // cofinitely many leaves under a node still pick up the node
  PointSet cofinite = set_difference(PointSet::level_set(1, 1),
                                     PointSet::point(1, {3}));
  CHECK(cofinite.closure_inverse().contains({}));
}

TEST_CASE("closure and derivative laws on random sets") {
  Xorshift rng(301);
  for (int trial = 0; trial < 200; ++trial) {
    PointSet s = random_set(rng, 3);
    PointSet t = random_set(rng, 3);
    PointSet closure = s.closure_inverse();
    CHECK(s.subset_of(closure));                    // extensive
    CHECK(closure.closure_inverse() == closure);    // idempotent
    CHECK(closure.subset_of(set_union(s, t).closure_inverse()));  // monotone
    PointSet der = s.cb_derivative();
    CHECK(der.subset_of(s));  // decreasing
    // monotone; a limit of s-points can absorb points isolated in s or t
    // alone, so only the containment direction holds for unions
    PointSet both = set_union(s, t).cb_derivative();
    CHECK(set_union(der, t.cb_derivative()).subset_of(both));
    CHECK(der.subset_of(set_union(s, t).cb_derivative()));
    if (trial == 0 || s.is_empty()) continue;
    CHECK(s.cb_rank() <= 4);
  }
}

TEST_CASE("point set descriptions") {
  CHECK(PointSet::empty_set(1).to_string() == "{}");
  CHECK(PointSet::full_set(1).to_string() == "all");
  CHECK(PointSet::point(1, {}).to_string() == "{()}");
  CHECK(PointSet::level_set(2, 1).to_string() == "levels {1}");
  CHECK(set_difference(PointSet::full_set(1), PointSet::point(1, {2}))
            .to_string() == "all minus {(2)}");
}

TEST_CASE("metadata rules and partition") {
  AlmDedModel model = build_example_weakjaff();
  DvrMeta root = meta_at(model, {});
  CHECK(root.residue_size == Int(2));
  CHECK(root.localization_ok == false);
  DvrMeta leaf = meta_at(model, {7});
  CHECK(!leaf.residue_size);
  CHECK(leaf.localization_ok == true);
  CHECK(int_trivial_point(leaf));
  CHECK(!int_trivial_point(root));
  DvrMeta nine;
  nine.residue_char = 3;
  nine.residue_size = Int(9);
  CHECK(!int_trivial_point(nine));

  auto partition = meta_partition(model);
  CHECK(partition.size() == 2);
  CHECK(int_trivial_set(model) == PointSet::level_set(1, 1));
}

TEST_CASE("metadata validation") {
  DvrMeta bad;
  bad.residue_char = 4;
  CHECK_THROWS_AS(uniform_model("bad", 1, bad), std::invalid_argument);
  DvrMeta mismatched;
  mismatched.residue_char = 2;
  mismatched.residue_size = Int(9);  // not a power of 2
  CHECK_THROWS_AS(uniform_model("bad", 1, mismatched), std::invalid_argument);
}

TEST_CASE("localization verdicts") {
  AlmDedModel model = build_example_weakjaff();
  CHECK(localization_report(model, {}) == LocVerdict::no);
  CHECK(localization_report(model, {0}) == LocVerdict::yes);
  CHECK(localization_report(model, {11}) == LocVerdict::yes);

  // all residue fields finite: neither rule fires at the root
  AlmDedModel uniform = finite_residue_model(1, false);
  CHECK(localization_report(uniform, {}) == LocVerdict::unknown);
  CHECK(localization_report(uniform, {0}) == LocVerdict::yes);
}

TEST_CASE("derived sequence of the pointed example") {
  DerivedSequenceResult r = derived_sequence(build_example_weakjaff());
  CHECK(r.classification == FamilyClass::weak_jaffard);
  CHECK(r.pointed_at == Path{});
  CHECK(r.sharp);
  CHECK(r.rank == 2);
  REQUIRE(r.steps.size() == 3);
  CHECK(r.steps[1].njaff == PointSet::point(1, {}));
  CHECK(r.steps[2].njaff.is_empty());
}

TEST_CASE("derived sequence classifications") {
  // a single point is a (finite, discrete) Jaffard family
  DerivedSequenceResult discrete =
      derived_sequence(finite_residue_model(0, false));
  CHECK(discrete.classification == FamilyClass::jaffard);
  CHECK(discrete.rank == 1);

  DerivedSequenceResult deep = derived_sequence(finite_residue_model(2, false));
  CHECK(deep.classification == FamilyClass::pre_jaffard);
  CHECK(deep.sharp);
  CHECK(deep.rank == 3);

  CHECK_THROWS_AS(derived_sequence(finite_residue_model(3, false), 2),
                  std::invalid_argument);
}

TEST_CASE("derived sequence is sharp in depth plus one steps") {
  for (int depth = 0; depth <= 3; ++depth) {
    DerivedSequenceResult r = derived_sequence(finite_residue_model(depth, false));
    CHECK(r.sharp);
    CHECK(r.rank == depth + 1);
    CHECK(static_cast<int>(r.steps.size()) == depth + 2);
    // weak Jaffard exactly when the first derivative is a singleton
    bool singleton = r.steps[1].njaff.only_point().has_value();
    CHECK((r.classification == FamilyClass::weak_jaffard) == singleton);
  }
}

TEST_CASE("prufer split") {
  AlmDedModel example = build_example_weakjaff();
  PruferSplitReport r = prufer_split(example);
  CHECK(r.x == PointSet::point(1, {}));
  CHECK(r.x_closure == PointSet::point(1, {}));
  CHECK(r.vanishing == PointSet::level_set(1, 1));

  // finite X among the leaves is already closed
  AlmDedModel spotty = build_example_weakjaff();
  MetaRule spot;
  spot.sel = MetaRule::Sel::point;
  spot.path = {4};
  spot.sets_residue_size = true;
  spot.residue_size = Int(2);
  spotty.rules.push_back(spot);
  PruferSplitReport s = prufer_split(spotty);
  CHECK(s.x == set_union(PointSet::point(1, {}), PointSet::point(1, {4})));
  CHECK(s.x_closure == s.x);

  // X = all leaves forces the root into the closure
  DvrMeta inf_base;
  inf_base.residue_char = 2;
  AlmDedModel leafy = uniform_model("leafy", 1, inf_base);
  MetaRule leaves;
  leaves.sel = MetaRule::Sel::level;
  leaves.level = 1;
  leaves.sets_residue_size = true;
  leaves.residue_size = Int(4);
  leafy.rules.push_back(leaves);
  PruferSplitReport t = prufer_split(leafy);
  CHECK(t.x == PointSet::level_set(1, 1));
  CHECK(t.x_closure == PointSet::full_set(1));
  CHECK(t.vanishing.is_empty());
}

TEST_CASE("decomposition refuses on the pointed example") {
  DecompositionReport r = picpol_decomposition(build_example_weakjaff());
  REQUIRE(r.violation);
  CHECK(r.violation->stage == 1);
  CHECK(r.violation->point == Path{});
  CHECK(r.violation->message ==
        "hypothesis violated: localization fails at ()");
  CHECK(r.summands.empty());
}

TEST_CASE("decomposition succeeds with flags everywhere") {
  for (int depth = 0; depth <= 3; ++depth) {
    DecompositionReport r = picpol_decomposition(finite_residue_model(depth, true));
    CHECK(!r.violation);
    CHECK(static_cast<int>(r.summands.size()) == depth + 1);
    PointSet covered = PointSet::empty_set(depth);
    for (const Summand& s : r.summands) {
      CHECK(s.group == "C(completion, Z)/constants");
      CHECK(s.free);
      CHECK(set_intersect(covered, s.points).is_empty());
      covered = set_union(covered, s.points);
    }
    CHECK(covered == PointSet::full_set(depth));
  }
}

TEST_CASE("decomposition refuses without flags") {
  DecompositionReport r = picpol_decomposition(finite_residue_model(1, false));
  REQUIRE(r.violation);
  CHECK(r.violation->stage == 1);
  CHECK(r.violation->message ==
        "hypothesis violated: localization unverified at ()");
}

TEST_CASE("a model flag cannot override a derived localization failure") {
  AlmDedModel model = build_example_weakjaff();
  // contradictory flag at the root; the derived verdict must still win
  for (MetaRule& rule : model.rules)
    if (rule.sel == MetaRule::Sel::level && rule.level == 0)
      rule.localization_ok = true;
  CHECK(localization_report(model, {}) == LocVerdict::no);
  DecompositionReport r = picpol_decomposition(model);
  REQUIRE(r.violation);
  CHECK(r.violation->point == Path{});
  CHECK(r.summands.empty());
}

TEST_CASE("decomposition marks infinite-residue summands as zero") {
  DvrMeta base;
  base.residue_char = 3;
  base.localization_ok = true;
  AlmDedModel model = uniform_model("mixed", 1, base);
  MetaRule leaves;
  leaves.sel = MetaRule::Sel::level;
  leaves.level = 1;
  leaves.sets_residue_size = true;
  leaves.residue_size = Int(3);
  model.rules.push_back(leaves);
  DecompositionReport r = picpol_decomposition(model);
  CHECK(!r.violation);
  REQUIRE(r.summands.size() == 2);
  for (const Summand& s : r.summands) {
    if (s.level == 0)
      CHECK(s.group == "0");
    else
      CHECK(s.group == "C(completion, Z)/constants");
  }
}

TEST_CASE("model JSON round trip") {
  AlmDedModel model = build_example_weakjaff();
  std::string text = model_to_json_text(model);
  AlmDedModel back = model_from_json_text(text);
  CHECK(back.depth == 1);
  CHECK(back.name == "example-weakjaff");
  CHECK(meta_at(back, {}).residue_size == Int(2));
  CHECK(meta_at(back, {3}).localization_ok == true);
  DerivedSequenceResult r = derived_sequence(back);
  CHECK(r.classification == FamilyClass::weak_jaffard);

  CHECK_THROWS_AS(model_from_json_text("{"), std::invalid_argument);
  CHECK_THROWS_AS(model_from_json_text("{\"name\": \"x\"}"),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      model_from_json_text("{\"depth\": 1, \"rules\": [{\"level\": 0, "
                           "\"cone\": [], \"residue_char\": 2}]}"),
      std::invalid_argument);
  CHECK_THROWS_AS(
      model_from_json_text("{\"depth\": 1, \"default\": {\"residue_char\": "
                           "2, \"residue_size\": 6}}"),
      std::invalid_argument);
}
