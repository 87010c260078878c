#include <doctest.h>

#include <future>
#include <map>
#include <thread>

#include "arq/radical.hpp"
#include "fixtures.hpp"

using namespace arq;

namespace {

std::vector<QuiverRep> all_modules(const ARQuiver& ar) {
  std::vector<QuiverRep> out;
  for (const auto& v : ar.vertices()) out.push_back(v.module);
  return out;
}

VertexId vid(std::size_t i) { return static_cast<VertexId>(i); }

std::size_t multiplicity(const ARQuiver& ar, VertexId x, VertexId y) {
  std::size_t m = 0;
  for (auto a : ar.out_arrows(x)) m += ar.arrow(a).target == y;
  return m;
}

ArMorphism arrow_between(const ARQuiver& ar, VertexId x, VertexId y, std::size_t which = 0) {
  for (auto a : ar.out_arrows(x))
    if (ar.arrow(a).target == y && which-- == 0) return ArMorphism::from_arrow(ar, a);
  throw std::runtime_error("no such arrow");
}

}  // namespace

TEST_CASE("radical layers over A_2") {
  auto q = fixtures::quiver("a2");
  auto ar = knit_ar_component(q, KnitDirection::from_projectives, 25);
  RadicalFiltration rf(ar);
  auto s2 = *ar.projective_vertex(1);
  auto p1 = *ar.projective_vertex(0);
  auto s1 = *ar.injective_vertex(0);
  CHECK(rf.rad(s2, p1, 0).space.dim() == 1);
  CHECK(rf.rad(s2, p1, 1).space.dim() == 1);
  CHECK(rf.rad(s2, p1, 2).space.dim() == 0);
  CHECK(rf.rad(s2, s1, 0).space.dim() == 0);
  CHECK(rf.rad(p1, p1, 1).space.dim() == 0);
  auto universe = all_modules(ar);
  auto u1 = rad_power(ar.module(s2), ar.module(p1), 1, universe);
  auto u2 = rad_power(ar.module(s2), ar.module(p1), 2, universe);
  CHECK(u1.space.dim() == 1);
  CHECK(u2.space.dim() == 0);
  CHECK_FALSE(u2.lower_bound);
  CHECK(rad_power(ar.module(s2), ar.module(p1), 0, universe).space.dim() == 1);
  CHECK(rad_power(ar.module(s2), ar.module(p1), 2, universe, false).lower_bound);
}

TEST_CASE("radical filtration agrees with composites through all indecomposables") {
  for (const char* name : {"a3", "a4", "d4"}) {
    CAPTURE(name);
    auto ar = knit_ar_component(fixtures::quiver(name), KnitDirection::from_projectives, 25);
    RadicalFiltration rf(ar);
    auto universe = all_modules(ar);
    const std::size_t xs = std::string(name) == "d4" ? 4 : ar.vertex_count();
    for (std::size_t x = 0; x < xs; ++x)
      for (std::size_t y = 0; y < ar.vertex_count(); ++y)
        for (std::size_t n = 0; n <= 4; ++n) {
          CAPTURE(x);
          CAPTURE(y);
          CAPTURE(n);
          auto r = rf.rad(vid(x), vid(y), n);
          CHECK(r.exact);
          auto u = rad_power(universe[x], universe[y], n, universe);
          CHECK(r.space == u.space);
        }
  }
}

TEST_CASE("the radical filtration vanishes in finite type") {
  auto ar = knit_ar_component(fixtures::quiver("d4"), KnitDirection::from_projectives, 25);
  RadicalFiltration rf(ar);
  auto universe = all_modules(ar);
  for (std::size_t x = 0; x < ar.vertex_count(); ++x) {
    auto d = rf.dims(vid(x), vid(x));
    CHECK(d.back() == 0);
    CHECK(d.size() <= 2);
    CHECK(rad_power(universe[x], universe[x], 6, universe).space.dim() == 0);
    for (std::size_t y = 0; y < ar.vertex_count(); ++y) CHECK(rf.rad(vid(x), vid(y), 8).space.dim() == 0);
  }
}

TEST_CASE("arrow multiplicity is dim rad / rad^2") {
  for (const char* name : {"a3", "a5", "d4"}) {
    CAPTURE(name);
    auto ar = knit_ar_component(fixtures::quiver(name), KnitDirection::from_projectives, 25);
    RadicalFiltration rf(ar);
    for (std::size_t x = 0; x < ar.vertex_count(); ++x)
      for (std::size_t y = 0; y < ar.vertex_count(); ++y) {
        auto r1 = rf.rad(vid(x), vid(y), 1).space.dim();
        auto r2 = rf.rad(vid(x), vid(y), 2).space.dim();
        CHECK(r1 - r2 == multiplicity(ar, vid(x), vid(y)));
      }
  }
  auto kr = knit_ar_component(fixtures::quiver("kronecker"), KnitDirection::from_projectives, 3);
  RadicalFiltration rk(kr);
  for (std::size_t x = 0; x < kr.vertex_count(); ++x)
    for (std::size_t y = 0; y < kr.vertex_count(); ++y) {
      auto r1 = rk.rad(vid(x), vid(y), 1);
      auto r2 = rk.rad(vid(x), vid(y), 2);
      CHECK(r2.exact);
      CHECK(r1.space.dim() - r2.space.dim() == multiplicity(kr, vid(x), vid(y)));
    }
}

TEST_CASE("knitted arrows and almost split maps are irreducible") {
  auto ar = knit_ar_component(fixtures::quiver("d4"), KnitDirection::from_projectives, 25);
  RadicalFiltration rf(ar);
  for (const auto& a : ar.arrows()) CHECK(is_irreducible(ArMorphism::from_arrow(ar, a.id), rf));
  for (std::size_t x = 0; x < ar.vertex_count(); ++x) {
    if (!ar.out_arrows(vid(x)).empty()) CHECK(is_irreducible(ArMorphism::out_map(ar, vid(x)), rf));
    if (!ar.in_arrows(vid(x)).empty()) CHECK(is_irreducible(ArMorphism::in_map(ar, vid(x)), rf));
  }
  // A composite of two arrows lies in rad^2.
  const auto& a = ar.arrows().front();
  auto b = ar.out_arrows(a.target).front();
  auto comp = compose(ArMorphism::from_arrow(ar, b), ArMorphism::from_arrow(ar, a.id));
  CHECK_FALSE(is_irreducible(comp, rf));
  CHECK(rf.depth(comp) == 2);
  CHECK(rf.depth(ArMorphism::from_arrow(ar, a.id)) == 1);
  CHECK_FALSE(rf.depth(ArMorphism::zero(ar, {a.source}, {a.target})));
}

TEST_CASE("a sum of independent irreducibles is irreducible") {
  auto ar = knit_ar_component(fixtures::quiver("kronecker"), KnitDirection::from_projectives, 2);
  RadicalFiltration rf(ar);
  auto p2 = *ar.projective_vertex(1);
  auto p1 = *ar.projective_vertex(0);
  auto f = arrow_between(ar, p2, p1, 0);
  auto g = arrow_between(ar, p2, p1, 1);
  CHECK(is_irreducible(f, rf));
  CHECK(is_irreducible(g, rf));
  CHECK(is_irreducible(f + g, rf));
  CHECK(is_irreducible(f + Rational(-3) * g, rf));
  CHECK_FALSE(is_irreducible(f + Rational(-1) * f, rf));
  ArMorphism both{{p2}, {p1, p1}, {{f.at(0, 0)}, {g.at(0, 0)}}};
  CHECK(is_irreducible(both, rf));
  ArMorphism twice{{p2}, {p1, p1}, {{f.at(0, 0)}, {(Rational(2) * f).at(0, 0)}}};
  CHECK_FALSE(is_irreducible(twice, rf));
}

TEST_CASE("sectional families are checked for independence and hooks") {
  // Linear A_3 1 -> 2 -> 3: P3 -> P2 -> P1, P2 -> S2 with tau S2 = P3.
  auto ar = knit_ar_component(fixtures::quiver("a3"), KnitDirection::from_projectives, 25);
  RadicalFiltration rf(ar);
  auto p3 = *ar.projective_vertex(2);
  auto p2 = *ar.projective_vertex(1);
  auto p1 = *ar.projective_vertex(0);
  auto s2 = *ar.tau_inverse(p3);
  SectionalFamily good{p3, {{arrow_between(ar, p3, p2), arrow_between(ar, p2, p1)}}};
  CHECK(check_sectional_family(good, rf).ok);
  SectionalFamily fork{p2, {{arrow_between(ar, p2, p1)}, {arrow_between(ar, p2, s2)}}};
  CHECK(check_sectional_family(fork, rf).ok);
  SectionalFamily hook{p3, {{arrow_between(ar, p3, p2), arrow_between(ar, p2, s2)}}};
  auto bad = check_sectional_family(hook, rf);
  CHECK_FALSE(bad.ok);
  CHECK(bad.condition == "hook");
  CHECK(bad.path == 0);
  CHECK(bad.step == 1);
  // The same arrow twice at one step.
  SectionalFamily cross{p3, {{arrow_between(ar, p3, p2), arrow_between(ar, p2, p1)}, {arrow_between(ar, p3, p2)}}};
  CHECK(check_sectional_family(cross, rf).condition == "independence");
  SectionalFamily cross_hook{p3, {{arrow_between(ar, p3, p2), arrow_between(ar, p2, p1)},
                                  {arrow_between(ar, p3, p2), arrow_between(ar, p2, s2)}}};
  CHECK_FALSE(check_sectional_family(cross_hook, rf).ok);
  SectionalFamily broken{p3, {{arrow_between(ar, p2, p1)}}};
  CHECK(check_sectional_family(broken, rf).condition == "composable");

  auto kr = knit_ar_component(fixtures::quiver("kronecker"), KnitDirection::from_projectives, 2);
  RadicalFiltration rk(kr);
  auto k2 = *kr.projective_vertex(1);
  auto k1 = *kr.projective_vertex(0);
  SectionalFamily pair{k2, {{arrow_between(kr, k2, k1, 0)}, {arrow_between(kr, k2, k1, 1)}}};
  CHECK(check_sectional_family(pair, rk).ok);
  SectionalFamily same{k2, {{arrow_between(kr, k2, k1, 0)}, {arrow_between(kr, k2, k1, 0)}}};
  auto dep = check_sectional_family(same, rk);
  CHECK_FALSE(dep.ok);
  CHECK(dep.condition == "independence");
}

TEST_CASE("truncated components give exact radicals on their complete side") {
  auto q = fixtures::quiver("atilde2");
  auto inj = knit_ar_component(q, KnitDirection::from_injectives, 4);
  RadicalFiltration rf(inj);
  for (std::size_t x = 0; x < inj.vertex_count(); ++x)
    for (std::size_t y = 0; y < inj.vertex_count(); ++y) CHECK(rf.rad(vid(x), vid(y), 3).exact);
}

TEST_CASE("concurrent readers see the same filtration") {
  auto ar = knit_ar_component(fixtures::quiver("d4"), KnitDirection::from_projectives, 25);
  RadicalFiltration serial(ar);
  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> expected;
  for (std::size_t x = 0; x < ar.vertex_count(); ++x)
    for (std::size_t y = 0; y < ar.vertex_count(); ++y) expected[{x, y}] = serial.dims(vid(x), vid(y));
  RadicalFiltration shared(ar);
  std::vector<std::future<bool>> jobs;
  for (std::size_t t = 0; t < 4; ++t)
    jobs.push_back(std::async(std::launch::async, [&, t] {
      bool same = true;
      for (std::size_t k = 0; k < ar.vertex_count(); ++k) {
        std::size_t x = (k + 3 * t) % ar.vertex_count();
        for (std::size_t y = 0; y < ar.vertex_count(); ++y)
          same = same && shared.dims(vid(x), vid(y)) == expected[{x, y}];
      }
      return same;
    }));
  for (auto& j : jobs) CHECK(j.get());
}
