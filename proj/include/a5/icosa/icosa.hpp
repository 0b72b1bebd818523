#pragma once

#include <map>
#include <optional>
#include <vector>

#include "a5/icosa/moebius.hpp"
#include "a5/polyring/rational_function.hpp"

namespace a5 {

using CycloFunction = RationalFunction<AlgebraicNumber>;
using QFunction = RationalFunction<Rational>;

/// Finite subgroup of PGL2(Q(zeta_60)), elements sorted by MoebiusMap::key.
class MoebiusGroup {
 public:
  MoebiusGroup() = default;
  explicit MoebiusGroup(std::vector<MoebiusMap> elements);

  const std::vector<MoebiusMap>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool contains(const MoebiusMap& m) const;
  /// Index of m in elements(), or -1.
  int index_of(const MoebiusMap& m) const;
  /// Order of each element keyed by order.
  std::map<int, int> order_profile() const;
  /// A small generating subset, chosen greedily in element order.
  std::vector<MoebiusMap> generators() const;

 private:
  std::vector<MoebiusMap> elements_;
};

/// Closure of the generators; InvalidArgument when it exceeds `limit` elements.
MoebiusGroup generate_group(const std::vector<MoebiusMap>& gens, std::size_t limit = 120);

/// [[omega, 1], [1, -omega]], of order 2.
MoebiusMap sigma1();
/// [[epsilon^2, 0], [0, 1]], of order 5.
MoebiusMap sigma2();
MoebiusGroup build_a5();

/// All elementary symmetric functions s_1..s_n of the group elements viewed in Q(zeta_60)(x).
std::vector<CycloFunction> symmetric_generators(const MoebiusGroup& g);
CycloFunction symmetric_generator(const MoebiusGroup& g, int i);

Poly<Rational> icosa_R();
Poly<Rational> icosa_S();
Poly<Rational> icosa_T();
/// z = -R^3 / S^5.
QFunction phi();

struct IdentityCheck {
  bool holds = false;
  int degree = 0;
};
/// T^2 = R^3 + 1728 S^5 coefficientwise; IdentityFailed names the first differing coefficient.
IdentityCheck verify_icosahedral_identity();

bool orbit_invariance_check(const MoebiusGroup& g, const CycloFunction& f);

/// M with s = M o f, found from the linear system s (c f + d) = a f + b.
std::optional<MoebiusMap> moebius_relation(const CycloFunction& s, const CycloFunction& f);

}  // namespace a5
