#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "raney/order_maps.hpp"

namespace raney {

inline constexpr std::size_t kDefaultMaxHomset = 100'000;

struct TableHash {
  std::size_t operator()(const Table& t) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (Elem e : t) {
      h ^= e;
      h *= 1099511628211ULL;
    }
    return h;
  }
};

/// Every sup-preserving endomap of a finite lattice, sorted by table.
class EndoHomset {
 public:
  /// Assigns values to the join-irreducibles (monotonically), extends by
  /// x -> join { v(j) : j <= x } and keeps the sup-preserving results.
  /// Throws CapExceeded carrying the partial count when more than `cap` maps exist.
  static EndoHomset enumerate(LatticePtr lattice, std::size_t cap = kDefaultMaxHomset);

  const Lattice& lattice() const noexcept { return *lattice_; }
  const LatticePtr& lattice_ptr() const noexcept { return lattice_; }
  std::size_t size() const noexcept { return maps_.size(); }
  const SupMap& operator[](std::size_t i) const { return maps_[i]; }
  const std::vector<SupMap>& maps() const noexcept { return maps_; }
  auto begin() const noexcept { return maps_.begin(); }
  auto end() const noexcept { return maps_.end(); }

  std::optional<std::size_t> index_of(const Table& table) const;
  /// Throws invariant_violated when the table is not in the homset.
  std::size_t index(const Table& table) const;
  std::size_t index(const SupMap& f) const { return index(f.table()); }

  std::size_t identity_index() const { return identity_; }
  std::size_t bottom_index() const { return bottom_; }
  std::size_t top_index() const { return top_; }

 private:
  EndoHomset() = default;

  LatticePtr lattice_;
  std::vector<SupMap> maps_;
  std::unordered_map<Table, std::size_t, TableHash> index_;
  std::size_t identity_ = 0;
  std::size_t bottom_ = 0;
  std::size_t top_ = 0;
};

/// Inf-preserving endomaps of L, read off the sup-preserving endomaps of
/// the dual lattice (same tables, reversed order).
std::vector<InfMap> enumerate_inf_maps(const LatticePtr& lattice, std::size_t cap = kDefaultMaxHomset);

// --- residuals ---------------------------------------------------------------------

/// g\h, the greatest f with g . f <= h, as the sup interior of rho(g) . h.
SupMap residual_left(const SupMap& g, const SupMap& h);
/// h/f, the greatest g with g . f <= h, as the Q-meet over x of h(x) (tensor-over) f(x).
SupMap residual_right(const SupMap& h, const SupMap& f);

// --- Raney transforms ------------------------------------------------------------

/// (v g)(x) = join { g(t) : x not<= t }.
SupMap raney_down(const InfMap& g);
/// (^ f)(x) = meet { f(t) : t not<= x }.
InfMap raney_up(const SupMap& f);

/// f* = lambda(^ f). Also computes v(rho f) and throws invariant_violated
/// if the two disagree.
SupMap star(const SupMap& f);

/// The six equivalent conditions relating f, x and y (x in the source, y in
/// the target):
///   [0] for all t, t <= x or y <= f(t)    [1] c_y . a_x <= f
///   [2] y (tensor-under) x <= ^f          [3] y <= ^f(x)
///   [4] f*(y) <= x                         [5] f* <= x (tensor-over) y
std::array<bool, 6> relation_dual_profile(const SupMap& f, Elem x, Elem y);

/// Left and right adjoints of c and a:
///   [0] c_y <= f  iff y <= ^f(bot)      [1] f <= c_y  iff f(top) <= y
///   [2] a_x <= f  iff f*(top) <= x      [3] f <= a_x  iff x <= rho f(bot)
std::array<Equivalence, 4> adjunction_formulas(const SupMap& f, Elem x, Elem y);

/// Closed forms for dividing an endomap f by the generators.
struct DivisionFormulas {
  SupMap right_by_e;        ///< f / (c_y . a_x) = ^f(x) (tensor-over) y
  SupMap left_by_e;         ///< (c_y . a_x) \ f = x (tensor-over) f*(y)
  SupMap right_by_tensor;   ///< f / (y (tensor-over) x)
  SupMap left_by_tensor;    ///< (y (tensor-over) x) \ f
};

DivisionFormulas division_formulas(const SupMap& f, Elem x, Elem y);

// --- tight maps --------------------------------------------------------------------

/// v(^ f), the greatest tight map below f.
SupMap tight_interior(const SupMap& f);
bool is_tight(const SupMap& f);

/// Indices (into the homset) of the tight maps.
struct TightSubset {
  std::vector<std::size_t> members;
  std::vector<char> flags;

  bool contains(std::size_t i) const { return flags[i] != 0; }
  std::size_t size() const noexcept { return members.size(); }
};

TightSubset enumerate_tight(const EndoHomset& homset);

/// A two-sided unit of the tight maps under composition, if any.
std::optional<SupMap> tight_has_unit(const EndoHomset& homset);
std::optional<SupMap> tight_has_unit(const EndoHomset& homset, const TightSubset& tight);

/// The first pair (f, g), scanning f then g over the homset, with
/// tight_interior(g . f) != tight_interior(g) . tight_interior(f).
std::optional<std::pair<SupMap, SupMap>> conucleus_gap(const EndoHomset& homset);

/// v(^ id) = id.
bool is_completely_distributive(const LatticePtr& lattice);

/// o = v(id), the canonical cyclic dualizing element when L is completely distributive.
SupMap canonical_dualizing(const LatticePtr& lattice);

// --- cyclic and dualizing elements ------------------------------------------------

/// f / g = g \ f for every g in the homset.
bool is_cyclic(const EndoHomset& homset, const SupMap& f);
/// f / (g \ f) = (f / g) \ f = g for every g in the homset.
bool is_dualizing(const EndoHomset& homset, const SupMap& f);
std::vector<std::size_t> find_cyclic(const EndoHomset& homset);
std::vector<std::size_t> find_dualizing(const EndoHomset& homset);
bool is_girard(const EndoHomset& homset);

/// star(f) for a dualizing f, checking that ^f and f* are mutually inverse.
/// Throws not_dualizing.
Table dualizing_to_automorphism(const EndoHomset& homset, const SupMap& f);

/// o / h for an automorphism h of a completely distributive L, checking that
/// the result is dualizing with star equal to h. Throws not_automorphism,
/// not_completely_distributive.
SupMap automorphism_to_dualizing(const EndoHomset& homset, const Table& automorphism);

/// Whether `table` is an order automorphism of the lattice.
bool is_lattice_automorphism(const Lattice& lattice, const Table& table);

}  // namespace raney
