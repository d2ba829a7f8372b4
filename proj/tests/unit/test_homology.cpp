#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "gridups/errors.hpp"
#include "gridups/homology.hpp"
#include "gridups/tcomplex.hpp"
#include "random_grids.hpp"
#include "synthetic.hpp"

using namespace gridups;

namespace {

TComplex two_generator(std::int64_t ga, std::int64_t gb, std::uint32_t q, MonomialPoly coeff) {
  TComplex c{RationalT(1, q), {}, {}};
  c.generators = {{0, ga}, {1, gb}};
  c.columns = {{{1, coeff}}, {}};
  return c;
}

std::size_t total(const std::map<std::int64_t, std::size_t>& dims) {
  std::size_t s = 0;
  for (const auto& [g, k] : dims) s += k;
  return s;
}

}  // namespace

TEST_CASE("unit cancellation") {
  TComplex u2 = build_t_complex(preset_unknot(2), RationalT(1, 2));
  CHECK(cancel_unit_pairs(u2).size() == 2);
  CHECK(cancel_unit_pairs(two_generator(0, -1, 1, MonomialPoly{0})).size() == 0);
}

TEST_CASE("unit cancellation leaves the fully blocked homology for generic t") {
  for (const GridDiagram& d : {preset_unknot(2), preset_unknot(3), preset_unknot(4),
                               stabilize(preset_unknot(3), 1, StabVariant::se)}) {
    std::size_t blocked = 0;
    for (const auto& [g, k] : fully_blocked_dims(d)) blocked += k;
    CHECK(cancel_unit_pairs(build_t_complex(d, RationalT(1, 2))).size() == blocked);
    CHECK(cancel_unit_pairs(build_t_complex(d, RationalT(2, 3))).size() == blocked);
  }
}

TEST_CASE("unknot(2) towers") {
  TowerDecomposition dec = decompose(build_t_complex(preset_unknot(2), RationalT(1, 2)), 2);
  CHECK(dec.free_towers == std::vector<std::int64_t>{-1, 0});
  CHECK(dec.torsion_towers.empty());
}

TEST_CASE("a single multiplication-by-u differential is one torsion tower") {
  // d(a) = u b with q = 1 forces b to sit at the grading of a.
  TComplex c = two_generator(0, 0, 1, MonomialPoly{1});
  REQUIRE(check_degree_homogeneity(c));
  DecomposeOptions opts;
  opts.truncation = 8;
  TowerDecomposition dec = decompose(c, 2, opts);
  CHECK(dec.rank() == 0);
  REQUIRE(dec.torsion_towers.size() == 1);
  CHECK(dec.torsion_towers[0].grading == 0);
  CHECK(dec.torsion_towers[0].length == 1);
}

TEST_CASE("non-homogeneous input is rejected") {
  CHECK_THROWS_AS(decompose(two_generator(0, -1, 1, MonomialPoly{1}), 2), DomainError);
}

TEST_CASE("trefoil rank") {
  TowerDecomposition dec = decompose(build_t_complex(preset_torus(2, 3), RationalT(1, 2)), 5);
  CHECK(dec.rank() == 16);
}

TEST_CASE("truncated homology of unknot(2)") {
  TComplex c = build_t_complex(preset_unknot(2), RationalT(1, 2));
  const std::map<std::int64_t, std::size_t> expected{{0, 1}, {-1, 2}, {-2, 2}, {-3, 1}};
  CHECK(truncated_dims_oracle(c, 3) == expected);
  CHECK(implied_truncated_dims(decompose(c, 2), 3) == expected);
}

TEST_CASE("truncated homology of a torsion pair") {
  TComplex c = two_generator(0, 0, 1, MonomialPoly{1});
  const std::map<std::int64_t, std::size_t> expected{{0, 1}, {-2, 1}};
  CHECK(truncated_dims_oracle(c, 3) == expected);
  CHECK(implied_truncated_dims(decompose(c, 2), 3) == expected);
}

TEST_CASE("oracle agrees with the decomposition on small presets") {
  for (const GridDiagram& d : {preset_unknot(2), preset_unknot(3), preset_unknot(4),
                               stabilize(preset_unknot(3), 2, StabVariant::nw)}) {
    for (RationalT t : {RationalT(1, 2), RationalT(1, 1)}) {
      TComplex c = build_t_complex(d, t);
      TowerDecomposition dec = decompose(c, d.size());
      for (std::uint32_t depth : {2u, 5u}) {
        auto oracle = truncated_dims_oracle(c, depth);
        auto implied = implied_truncated_dims(dec, depth);
        const std::int64_t horizon = truncation_horizon(dec, depth);
        for (auto it = oracle.upper_bound(horizon); it != oracle.end(); ++it) {
          CHECK(implied[it->first] == it->second);
        }
        for (auto it = implied.upper_bound(horizon); it != implied.end(); ++it) {
          CHECK(oracle[it->first] == it->second);
        }
      }
    }
  }
}

TEST_CASE("synthetic complexes decompose into their hidden towers") {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 300; ++trial) {
    oracle::SyntheticComplex s = oracle::random_complex(rng);
    CAPTURE(dump_json(s.complex));
    REQUIRE(check_boundary_squared(s.complex));
    REQUIRE(check_degree_homogeneity(s.complex));
    TowerDecomposition dec = decompose(s.complex, 4);
    CHECK(dec.same_towers(s.expected));
    const std::uint32_t depth = 1 + static_cast<std::uint32_t>(trial % 7);
    CHECK(truncated_dims_oracle(s.complex, depth) == implied_truncated_dims(dec, depth));
  }
}

TEST_CASE("decomposition ignores generator order") {
  std::mt19937_64 rng(7);
  TComplex c = build_t_complex(preset_torus(2, 3), RationalT(2, 3));
  TowerDecomposition base = decompose(c, 5);
  std::vector<std::uint32_t> perm(c.size());
  std::iota(perm.begin(), perm.end(), 0u);
  for (int trial = 0; trial < 5; ++trial) {
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::uint32_t> where(c.size());
    for (std::uint32_t i = 0; i < perm.size(); ++i) where[perm[i]] = i;
    TComplex shuffled{c.t, {}, {}};
    for (std::uint32_t old : perm) {
      shuffled.generators.push_back(c.generators[old]);
      auto& col = shuffled.columns.emplace_back();
      for (const ComplexEntry& e : c.columns[old]) col.push_back({where[e.target], e.coeff});
    }
    CHECK(decompose(shuffled, 5).same_towers(base));
    CHECK(to_json(decompose(shuffled, 5)) == to_json(base));
  }
}

TEST_CASE("fixed and automatic truncation agree") {
  TComplex c = build_t_complex(preset_torus(2, 3), RationalT(3, 4));
  DecomposeOptions fixed;
  fixed.truncation = 200;
  CHECK(decompose(c, 5, fixed).same_towers(decompose(c, 5)));
}

TEST_CASE("fully blocked homology") {
  auto u2 = fully_blocked_dims(preset_unknot(2));
  CHECK(u2.size() == 2);
  CHECK(u2[{0, Rational(0)}] == 1);
  CHECK(u2[{-1, Rational(-1)}] == 1);
  std::size_t u3 = 0;
  for (const auto& [g, k] : fully_blocked_dims(preset_unknot(3))) u3 += k;
  CHECK(u3 == 4);
  std::size_t tref = 0;
  for (const auto& [g, k] : fully_blocked_dims(preset_torus(2, 3))) tref += k;
  CHECK(tref == 48);
}

TEST_CASE("tensoring with the two-tower space") {
  TowerDecomposition dec;
  dec.t = RationalT(1, 2);
  dec.free_towers = {0};
  dec.torsion_towers = {{-3, 2}};
  TowerDecomposition w2 = tensor_with_w(dec, 2, -1);
  CHECK(w2.free_towers == std::vector<std::int64_t>{-2, -1, -1, 0});
  CHECK(w2.torsion_towers.size() == 4);
  CHECK(total(implied_truncated_dims(w2, 3)) == 4 * total(implied_truncated_dims(dec, 3)));
}

TEST_CASE("tower JSON layout") {
  TowerDecomposition dec = decompose(build_t_complex(preset_unknot(2), RationalT(1, 2)), 2);
  CHECK(to_json(dec).rfind(R"({"t":"1/2","rank":2,"free":[-1,0],"torsion":[])", 0) == 0);
}
