#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include <json.hpp>

#include "raney/lattice.hpp"

namespace raney {

enum class MapKind { monotone, sup_preserving, inf_preserving };

/// A map between finite lattices as a full value table. The kind fixes the
/// invariant checked on construction: monotone, sup-preserving (bottom and
/// binary joins), or inf-preserving (top and binary meets).
template <MapKind Kind>
class OrderMap {
 public:
  /// Throws precondition when the table has the wrong length, an
  /// out-of-range value, or violates the kind's invariant.
  OrderMap(LatticePtr source, LatticePtr target, Table table);

  /// For values produced by operations that guarantee the invariant.
  static OrderMap unchecked(LatticePtr source, LatticePtr target, Table table) {
    return OrderMap(std::move(source), std::move(target), std::move(table), Trusted{});
  }

  const Lattice& source() const noexcept { return *source_; }
  const Lattice& target() const noexcept { return *target_; }
  const LatticePtr& source_ptr() const noexcept { return source_; }
  const LatticePtr& target_ptr() const noexcept { return target_; }
  const Table& table() const noexcept { return table_; }
  Elem operator()(Elem x) const noexcept { return table_[x]; }

  OrderMap<MapKind::monotone> as_monotone() const {
    return OrderMap<MapKind::monotone>::unchecked(source_, target_, table_);
  }

  friend bool operator==(const OrderMap& a, const OrderMap& b) noexcept {
    return a.table_ == b.table_ && same_lattice(*a.source_, *b.source_) &&
           same_lattice(*a.target_, *b.target_);
  }

 private:
  struct Trusted {};
  OrderMap(LatticePtr source, LatticePtr target, Table table, Trusted)
      : source_(std::move(source)), target_(std::move(target)), table_(std::move(table)) {}

  LatticePtr source_;
  LatticePtr target_;
  Table table_;
};

using MonotoneMap = OrderMap<MapKind::monotone>;
using SupMap = OrderMap<MapKind::sup_preserving>;
using InfMap = OrderMap<MapKind::inf_preserving>;

extern template class OrderMap<MapKind::monotone>;
extern template class OrderMap<MapKind::sup_preserving>;
extern template class OrderMap<MapKind::inf_preserving>;

/// A pair of elements on which a preservation law fails. For the unit law
/// (bottom or top) both coordinates hold that unit.
struct PreservationFailure {
  Elem x;
  Elem y;
};

std::optional<PreservationFailure> monotonicity_failure(const Lattice& source, const Lattice& target,
                                                        std::span<const Elem> table);
std::optional<PreservationFailure> sup_preservation_failure(const Lattice& source,
                                                            const Lattice& target,
                                                            std::span<const Elem> table);
std::optional<PreservationFailure> inf_preservation_failure(const Lattice& source,
                                                            const Lattice& target,
                                                            std::span<const Elem> table);

bool is_sup_preserving(const MonotoneMap& m);
bool is_inf_preserving(const MonotoneMap& m);

/// Both sides of a claimed logical equivalence, evaluated independently.
struct Equivalence {
  bool lhs = false;
  bool rhs = false;
  bool holds() const noexcept { return lhs == rhs; }
};

// --- pointwise structure -----------------------------------------------------

template <MapKind A, MapKind B>
bool pointwise_leq(const OrderMap<A>& f, const OrderMap<B>& g) {
  const Lattice& y = f.target();
  for (std::size_t x = 0; x < f.table().size(); ++x) {
    if (!y.leq(f.table()[x], g.table()[x])) return false;
  }
  return true;
}

SupMap identity_map(const LatticePtr& lattice);
SupMap bottom_map(const LatticePtr& source, const LatticePtr& target);
/// The top of Q(X,Y): bottom to bottom, everything else to top.
SupMap top_map(const LatticePtr& source, const LatticePtr& target);
InfMap identity_inf_map(const LatticePtr& lattice);

/// Joins of sup-preserving maps are pointwise.
SupMap pointwise_join(const SupMap& f, const SupMap& g);
/// Meets of inf-preserving maps are pointwise.
InfMap pointwise_meet(const InfMap& f, const InfMap& g);
MonotoneMap pointwise_meet(const MonotoneMap& f, const MonotoneMap& g);

/// g after f. Throws precondition when f's target is not g's source.
template <MapKind G, MapKind F>
auto compose(const OrderMap<G>& g, const OrderMap<F>& f) {
  constexpr MapKind kind = G == F ? G : MapKind::monotone;
  if (!same_lattice(f.target(), g.source())) {
    throw Error(ErrorCode::precondition, "compose: lattices do not match");
  }
  Table t(f.table().size());
  for (std::size_t x = 0; x < t.size(); ++x) t[x] = g.table()[f.table()[x]];
  return OrderMap<kind>::unchecked(f.source_ptr(), g.target_ptr(), std::move(t));
}

// --- adjoints -------------------------------------------------------------------

/// rho f (y) = join { x : f(x) <= y }.
InfMap right_adjoint(const SupMap& f);
/// lambda g (y) = meet { x : y <= g(x) }.
SupMap left_adjoint(const InfMap& g);

// --- generator maps of Q(X,Y) and Q_inf(X,Y) --------------------------------------
// y lives in the target, x in the source.

SupMap c_map(const LatticePtr& source, const LatticePtr& target, Elem y);
SupMap a_map(const LatticePtr& source, const LatticePtr& target, Elem x);
SupMap tensor_over(const LatticePtr& source, const LatticePtr& target, Elem y, Elem x);
SupMap e_map(const LatticePtr& source, const LatticePtr& target, Elem y, Elem x);
InfMap gamma_map(const LatticePtr& source, const LatticePtr& target, Elem y);
InfMap alpha_map(const LatticePtr& source, const LatticePtr& target, Elem x);
InfMap tensor_under(const LatticePtr& source, const LatticePtr& target, Elem y, Elem x);

inline SupMap c_map(const LatticePtr& l, Elem y) { return c_map(l, l, y); }
inline SupMap a_map(const LatticePtr& l, Elem x) { return a_map(l, l, x); }
inline SupMap tensor_over(const LatticePtr& l, Elem y, Elem x) { return tensor_over(l, l, y, x); }
inline SupMap e_map(const LatticePtr& l, Elem y, Elem x) { return e_map(l, l, y, x); }
inline InfMap gamma_map(const LatticePtr& l, Elem y) { return gamma_map(l, l, y); }
inline InfMap alpha_map(const LatticePtr& l, Elem x) { return alpha_map(l, l, x); }
inline InfMap tensor_under(const LatticePtr& l, Elem y, Elem x) { return tensor_under(l, l, y, x); }

/// f(x) <= y against f <= y (tensor-over) x.
Equivalence characterization_check(const SupMap& f, Elem x, Elem y);

// --- sup interior and meets in Q(X,Y) --------------------------------------------

/// Greatest sup-preserving map pointwise below a monotone k: the greatest
/// fixpoint below k of T(h)(x) = meet { h(a) v h(b) : x <= a v b }, T(h)(bot) = bot.
SupMap sup_interior(const MonotoneMap& k);

/// Lattice meet in Q(X,Y); the top of Q(X,Y) for an empty family.
SupMap q_meet(const LatticePtr& source, const LatticePtr& target, std::span<const SupMap> maps);
SupMap q_meet(const SupMap& f, const SupMap& g);

// --- universal property ------------------------------------------------------------

/// Extension of a bimorphism psi(y, x) along inf-preserving g:
/// join over x of psi(g(x), x), folded with `join` from `bottom`.
template <class Value, class Psi, class Join>
Value extend_bimorphism(const InfMap& g, Psi&& psi, Value bottom, Join&& join) {
  Value acc = std::move(bottom);
  for (std::size_t x = 0; x < g.table().size(); ++x) {
    acc = join(acc, psi(g.table()[x], static_cast<Elem>(x)));
  }
  return acc;
}

/// The extension for Z a finite lattice.
Elem extend_bimorphism(const InfMap& g, const Lattice& z,
                       const std::function<Elem(Elem, Elem)>& psi);

// --- (epi, iso, mono) factorization ---------------------------------------------

struct Factorization {
  /// rho f . f, a closure operator on the source.
  MonotoneMap closure;
  /// f . rho f, an interior operator on the target.
  MonotoneMap interior;
  std::vector<Elem> source_fixpoints;
  std::vector<Elem> target_fixpoints;
  /// iso[i] is the image of source_fixpoints[i] in target_fixpoints.
  std::vector<Elem> iso;
  /// f(x) = iso(closure(x)) for all x, iso is an order isomorphism with
  /// inverse rho f, and the target fixpoints are exactly the image of f.
  bool verified = false;
};

Factorization factorize(const SupMap& f);

// --- serialization -------------------------------------------------------------------

/// { "source": hash, "target": hash, "table": [...] }.
template <MapKind Kind>
nlohmann::json map_to_json(const OrderMap<Kind>& m) {
  return nlohmann::json{{"source", m.source().hash_hex()},
                        {"target", m.target().hash_hex()},
                        {"table", m.table()}};
}

}  // namespace raney
