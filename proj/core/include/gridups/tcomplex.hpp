#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gridups/grid.hpp"
#include "gridups/monomial_poly.hpp"
#include "gridups/rational_t.hpp"
#include "gridups/states.hpp"

namespace gridups {

struct ComplexGenerator {
  std::uint32_t state;   // lexicographic state index
  std::int64_t grading;  // q*M_O - p*A
};

struct ComplexEntry {
  std::uint32_t target;
  MonomialPoly coeff;
};

/// Free complex over F2[u], u = U^{1/q}, with scaled integer gradings.
///
/// columns[x] lists the nonzero coefficients of the differential of
/// generator x, sorted by target. Multiplying by u lowers the scaled
/// grading by one and the differential lowers it by q.
struct TComplex {
  RationalT t{1, 1};
  std::vector<ComplexGenerator> generators;
  std::vector<std::vector<ComplexEntry>> columns;

  std::size_t size() const { return generators.size(); }
  std::size_t nonzero_entries() const;
};

// The t-modified grid complex: entry(y, x) is the mod-2 sum over empty
// rectangles r from x to y of u^{p|X n r| + (2q-p)|O n r|}.
// Throws DomainError for degenerate t or a multi-component diagram and
// GuardError when n! exceeds the guard.
TComplex build_t_complex(const GridDiagram& d, const RationalT& t, const StateGuard& guard = {});

struct Bigrading {
  int maslov;
  int alexander_x2;

  friend auto operator<=>(const Bigrading&, const Bigrading&) = default;
};

/// Complex over F2 counting only empty rectangles free of markings.
struct FullyBlockedComplex {
  std::vector<Bigrading> gradings;
  std::vector<std::vector<std::uint32_t>> columns;  // sorted targets

  std::size_t size() const { return gradings.size(); }
};

FullyBlockedComplex build_fully_blocked(const GridDiagram& d, const StateGuard& guard = {});

bool check_boundary_squared(const TComplex& c);
bool check_boundary_squared(const FullyBlockedComplex& c);

// Every exponent e of entry(y, x) satisfies g(y) - e = g(x) - q.
bool check_degree_homogeneity(const TComplex& c);

// Debug dump: {"t":..,"generators":[[state,g]..],"entries":[[x,y,[e..]]..]}.
std::string dump_json(const TComplex& c);

}  // namespace gridups
