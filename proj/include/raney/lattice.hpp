#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "raney/error.hpp"

namespace raney {

/// Elements of a finite lattice are dense indices 0..n-1.
using Elem = std::uint16_t;

/// A function between finite lattices stored as its full value table.
using Table = std::vector<Elem>;

inline constexpr std::size_t kDefaultMaxLattice = 64;
inline constexpr std::size_t kDefaultMaxDownsets = 4096;

/// A finite partial order given by its full relation matrix (row-major).
class Poset {
 public:
  Poset() = default;

  /// Validates reflexivity, antisymmetry and transitivity.
  Poset(std::size_t size, std::vector<char> leq, std::vector<std::string> names = {});

  /// Reflexive-transitive closure of `(lower, upper)` cover pairs.
  static Poset from_covers(std::size_t size,
                           std::span<const std::pair<Elem, Elem>> covers,
                           std::vector<std::string> names = {});

  /// No validation; the caller guarantees the partial-order axioms.
  static Poset trusted(std::size_t size, std::vector<char> leq,
                       std::vector<std::string> names = {});

  std::size_t size() const noexcept { return size_; }
  bool leq(std::size_t a, std::size_t b) const noexcept { return leq_[a * size_ + b] != 0; }
  bool less(std::size_t a, std::size_t b) const noexcept { return a != b && leq(a, b); }
  bool comparable(std::size_t a, std::size_t b) const noexcept { return leq(a, b) || leq(b, a); }

  const std::string& name(std::size_t x) const { return names_[x]; }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::vector<char>& matrix() const noexcept { return leq_; }

  Poset dual() const;

  /// Pairs (a, b) with a covered by b, in lexicographic order.
  std::vector<std::pair<Elem, Elem>> covers() const;

  /// FNV-1a over the size and the relation matrix; names do not participate.
  std::uint64_t hash() const noexcept;

  friend bool operator==(const Poset& a, const Poset& b) noexcept {
    return a.size_ == b.size_ && a.leq_ == b.leq_;
  }

 private:
  std::size_t size_ = 0;
  std::vector<char> leq_;
  std::vector<std::string> names_;
};

/// Members of a lattice, ascending by index.
struct ElementSet {
  std::vector<Elem> members;

  std::size_t size() const noexcept { return members.size(); }
  bool contains(Elem x) const;
  friend bool operator==(const ElementSet&, const ElementSet&) = default;
};

/// A finite (hence complete) lattice with precomputed join and meet tables.
/// Immutable after construction.
class Lattice {
 public:
  /// Throws not_a_lattice (with the first pair lacking a join or meet),
  /// no_bounded_element for the empty order, size_limit above `max_size`.
  static Lattice from_order(Poset order, std::size_t max_size = kDefaultMaxLattice);

  std::size_t size() const noexcept { return order_.size(); }
  bool leq(Elem a, Elem b) const noexcept { return order_.leq(a, b); }
  bool less(Elem a, Elem b) const noexcept { return order_.less(a, b); }
  Elem join(Elem a, Elem b) const noexcept { return join_[a * size() + b]; }
  Elem meet(Elem a, Elem b) const noexcept { return meet_[a * size() + b]; }
  Elem bottom() const noexcept { return bottom_; }
  Elem top() const noexcept { return top_; }

  Elem join_all(std::span<const Elem> xs) const noexcept;
  Elem meet_all(std::span<const Elem> xs) const noexcept;

  const Poset& order() const noexcept { return order_; }
  const std::string& name(Elem x) const { return order_.name(x); }
  std::optional<Elem> find(std::string_view name) const;

  const std::vector<Elem>& lower_covers(Elem x) const { return lower_[x]; }
  const std::vector<Elem>& upper_covers(Elem x) const { return upper_[x]; }

  std::uint64_t hash() const noexcept { return order_.hash(); }
  std::string hash_hex() const;

  /// Same order, new labels.
  Lattice relabeled(std::vector<std::string> names) const;

  friend bool operator==(const Lattice& a, const Lattice& b) noexcept {
    return a.order_ == b.order_;
  }

 private:
  friend Lattice dual(const Lattice& lattice);
  friend struct DownsetBuilder;

  Lattice() = default;
  void compute_covers();

  Poset order_;
  std::vector<Elem> join_;
  std::vector<Elem> meet_;
  Elem bottom_ = 0;
  Elem top_ = 0;
  std::vector<std::vector<Elem>> lower_;
  std::vector<std::vector<Elem>> upper_;
};

using LatticePtr = std::shared_ptr<const Lattice>;

inline LatticePtr share(Lattice lattice) {
  return std::make_shared<const Lattice>(std::move(lattice));
}

/// Pointer identity first, then order equality.
inline bool same_lattice(const Lattice& a, const Lattice& b) noexcept {
  return &a == &b || a == b;
}

Lattice make_chain(std::size_t n, std::size_t max_size = kDefaultMaxLattice);
Lattice make_boolean(std::size_t k, std::size_t max_size = kDefaultMaxLattice);
/// Bottom, `k` pairwise incomparable atoms, top. Five atoms are named u, d, a, b, c.
Lattice make_mk(std::size_t k, std::size_t max_size = kDefaultMaxLattice);
/// The pentagon: bottom < a < b < top, bottom < c < top.
Lattice make_n5();

Lattice dual(const Lattice& lattice);

/// The lattice of down-closed subsets of a poset, with the subset behind each element.
struct DownsetLattice {
  Poset poset;
  Lattice lattice;
  /// Bitmask (over poset elements) of each lattice element.
  std::vector<std::uint64_t> masks;
  /// Lattice element of the principal downset of each poset element.
  Table principal;

  std::optional<Elem> element_of(std::uint64_t mask) const;
};

DownsetLattice downset_representation(const Poset& poset,
                                      std::size_t max_downsets = kDefaultMaxDownsets);
Lattice downset_lattice(const Poset& poset, std::size_t max_downsets = kDefaultMaxDownsets);

ElementSet join_irreducibles(const Lattice& lattice);
ElementSet meet_irreducibles(const Lattice& lattice);

bool is_distributive(const Lattice& lattice);

/// Visits every order isomorphism from `from` onto `to` (onto the dual of
/// `to` when `reversed`). The visitor returns false to stop early. Candidate
/// images are pruned by up/down-set sizes and cover counts. Throws
/// CapExceeded once more than `node_cap` partial assignments were tried.
void for_each_order_isomorphism(const Poset& from, const Poset& to, bool reversed,
                                std::size_t node_cap,
                                const std::function<bool(const Table&)>& visit);

/// All automorphisms of the lattice (order automorphisms), identity first.
std::vector<Table> automorphisms(const Lattice& lattice, std::size_t node_cap = 10'000'000);

/// Order automorphisms of a poset.
std::vector<Table> poset_automorphisms(const Poset& poset, std::size_t node_cap = 10'000'000);

/// All partial orders on {0..n-1} (labelled), for small n.
std::vector<Poset> all_posets(std::size_t n);

}  // namespace raney
