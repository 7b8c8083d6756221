#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "raney/endo_quantale.hpp"

namespace raney {

// --- abstract finite quantales -----------------------------------------------------

/// A finite lattice with an associative multiplication that distributes over
/// binary joins and bottom in each argument.
class FiniteQuantale {
 public:
  /// Throws invariant_violated naming the first failing triple.
  static FiniteQuantale checked(LatticePtr carrier, std::vector<Elem> mult);

  const Lattice& carrier() const noexcept { return *carrier_; }
  const LatticePtr& carrier_ptr() const noexcept { return carrier_; }
  std::size_t size() const noexcept { return carrier_->size(); }
  Elem mul(Elem a, Elem b) const noexcept { return mult_[a * size() + b]; }
  const std::vector<Elem>& table() const noexcept { return mult_; }

 private:
  FiniteQuantale(LatticePtr carrier, std::vector<Elem> mult)
      : carrier_(std::move(carrier)), mult_(std::move(mult)) {}

  LatticePtr carrier_;
  std::vector<Elem> mult_;
};

/// Description of the first associativity or distributivity failure, if any.
std::optional<std::string> quantale_violation(const Lattice& carrier, const std::vector<Elem>& mult);

/// Bottom, atoms u, d, a, b, c, top, with the known multiplication where u is
/// the unit and d the only dualizing element.
FiniteQuantale m5_quantale();

struct Residuals {
  Elem left;   ///< x\y = join { z : x z <= y }
  Elem right;  ///< y/x = join { z : z x <= y }
};

Residuals q_residuals(const FiniteQuantale& q, Elem x, Elem y);
std::vector<Elem> q_cyclic(const FiniteQuantale& q);
std::vector<Elem> q_dualizing(const FiniteQuantale& q);
std::optional<Elem> q_unit(const FiniteQuantale& q);

/// { "carrier": lattice-file, "mult": [[...], ...] }.
nlohmann::json quantale_to_json(const FiniteQuantale& q);

// --- order structure of Q(L,L) -----------------------------------------------------------

/// Pointwise order of the homset, row-major over homset indices.
std::vector<char> homset_order(const EndoHomset& homset);

struct HomsetIrreducibles {
  std::vector<std::size_t> joins;  ///< J(Q), homset indices
  std::vector<std::size_t> meets;  ///< M(Q), homset indices
  std::size_t lattice_joins = 0;   ///< |J(L)|
  std::size_t lattice_meets = 0;   ///< |M(L)|
  /// M(Q) is exactly { m (tensor-over) j : m in M(L), j in J(L) }.
  bool meets_are_tensors = false;
  /// Every e_{j,m} lies in J(Q).
  bool elementary_join_irreducible = false;
  bool elementary_distinct = false;
  bool tensors_distinct = false;

  std::size_t product() const noexcept { return lattice_joins * lattice_meets; }
};

HomsetIrreducibles homset_irreducibles(const EndoHomset& homset);
HomsetIrreducibles homset_irreducibles(const EndoHomset& homset, const std::vector<char>& order);

enum class AutodualVerdict { autodual, not_autodual, inconclusive };

const char* to_string(AutodualVerdict verdict) noexcept;

struct AutodualReport {
  AutodualVerdict verdict = AutodualVerdict::inconclusive;
  std::string reason;
  /// An order-reversing bijection of Q as homset indices.
  std::optional<std::vector<std::size_t>> witness;
};

inline constexpr std::size_t kDefaultMaxAutodual = 2000;

/// Counts first, then f -> f\o when L is completely distributive, then an
/// exhaustive anti-automorphism search when |Q| <= cap.
AutodualReport autodual_report(const EndoHomset& homset, const HomsetIrreducibles& irreducibles,
                               std::size_t cap = kDefaultMaxAutodual,
                               std::size_t node_cap = 2'000'000);

/// Whether `perm` is a bijection of the homset reversing its order.
bool is_anti_automorphism(const std::vector<char>& order, const std::vector<std::size_t>& perm);

// --- weakening relations -------------------------------------------------------------

/// A poset with its downset lattice, shared so maps on it can be formed.
struct DownsetSpace {
  DownsetLattice rep;
  LatticePtr lattice;

  static DownsetSpace of(const Poset& poset);
  const Poset& poset() const noexcept { return rep.poset; }
};

/// Pairs (y, x) of poset elements, down-closed in P x P^op: (y, x) in R,
/// y' <= y and x <= x' give (y', x') in R.
class WeakeningRelation {
 public:
  /// Throws not_down_closed.
  WeakeningRelation(Poset poset, std::vector<char> pairs);

  const Poset& poset() const noexcept { return poset_; }
  bool contains(std::size_t y, std::size_t x) const noexcept { return pairs_[y * poset_.size() + x] != 0; }
  const std::vector<char>& matrix() const noexcept { return pairs_; }
  std::vector<std::pair<Elem, Elem>> pairs() const;

  friend bool operator==(const WeakeningRelation& a, const WeakeningRelation& b) noexcept {
    return a.poset_ == b.poset_ && a.pairs_ == b.pairs_;
  }

 private:
  Poset poset_;
  std::vector<char> pairs_;
};

/// (y, x) in R iff y in f(down x).
WeakeningRelation wk_from_supmap(const DownsetSpace& space, const SupMap& f);
/// D -> { y : (y, x) in R for some x in D }.
SupMap supmap_from_wk(const DownsetSpace& space, const WeakeningRelation& r);
/// (y, x) with (y, z) in first and (z, x) in second for some z; matches
/// composition first . second of the corresponding maps.
WeakeningRelation wk_compose(const WeakeningRelation& first, const WeakeningRelation& second);
/// { (y, x) : x not<= g(y) }. Throws not_automorphism.
WeakeningRelation wk_from_automorphism(const Poset& poset, const Table& g);
/// The automorphism D -> g[D] of the downset lattice.
Table induced_automorphism(const DownsetSpace& space, const Table& g);

/// { "poset": hash, "pairs": [[y, x], ...] }.
nlohmann::json weakening_to_json(const WeakeningRelation& r);

// --- natural arrows and abstract Raney ---------------------------------------------------

struct NaturalClassification {
  /// One representative seed (homset index) per distinct natural family.
  std::vector<std::size_t> natural_seeds;
  std::size_t distinct_families = 0;
  bool has_trivial = false;
  /// A natural family equal to e_{y,x}.
  bool has_raney = false;

  std::size_t count() const noexcept { return natural_seeds.size(); }
};

/// Families psi(y, x) = c_y . f0 . a_x over all seeds f0, tested against
/// psi(f(y), x) = f . psi(y, x) and psi(y, rho g(x)) = psi(y, x) . g.
NaturalClassification classify_natural(const EndoHomset& homset);

enum class FamilyKind {
  outer,  ///< psi(y, x) = F(y) . a_{g(x)}, F: L -> Q sup-preserving, g inf-preserving
  inner,  ///< psi(y, x) = c_{f(y)} . G(x), f sup-preserving, G: L^op -> Q sup-preserving
};

struct BimorphismFamily {
  FamilyKind kind = FamilyKind::outer;
  /// g for `outer`, f for `inner`.
  Table lattice_map;
  /// F for `outer`, G for `inner`, as homset indices per element.
  std::vector<std::size_t> homset_map;
};

/// The e family: F(y) = c_y, g = id.
BimorphismFamily elementary_family(const EndoHomset& homset);

struct AbstractRaneyResult {
  /// Each psi(y, x) has a chain as its image.
  bool chain_images = false;
  std::size_t max_image_size = 0;
  bool bimorphism = false;
  /// id = join over x of psi(h(x), x) for some inf-preserving h.
  bool id_in_image = false;
  bool completely_distributive = false;

  bool implication_holds() const noexcept {
    return !(chain_images && id_in_image) || completely_distributive;
  }
};

/// Throws malformed_family when the family does not have the required shape.
AbstractRaneyResult abstract_raney_check(const EndoHomset& homset, const BimorphismFamily& family);

}  // namespace raney
