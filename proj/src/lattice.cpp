#include "raney/lattice.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace raney {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::parse_error: return "ParseError";
    case ErrorCode::not_a_partial_order: return "NotAPartialOrder";
    case ErrorCode::not_a_lattice: return "NotALattice";
    case ErrorCode::no_bounded_element: return "NoBoundedElement";
    case ErrorCode::size_limit: return "SizeLimit";
    case ErrorCode::cap_exceeded: return "CapExceeded";
    case ErrorCode::precondition: return "PreconditionViolated";
    case ErrorCode::not_dualizing: return "NotDualizing";
    case ErrorCode::not_automorphism: return "NotAutomorphism";
    case ErrorCode::not_completely_distributive: return "NotCompletelyDistributive";
    case ErrorCode::not_down_closed: return "NotDownClosed";
    case ErrorCode::malformed_family: return "MalformedFamily";
    case ErrorCode::invariant_violated: return "InvariantViolated";
  }
  return "Unknown";
}

namespace {

std::vector<std::string> default_names(std::size_t n, std::vector<std::string> names) {
  if (names.empty()) {
    names.reserve(n);
    for (std::size_t i = 0; i < n; ++i) names.push_back(std::to_string(i));
  }
  if (names.size() != n) {
    throw Error(ErrorCode::precondition, "expected " + std::to_string(n) + " element names, got " +
                                             std::to_string(names.size()));
  }
  return names;
}

}  // namespace

// ---------------------------------------------------------------------------
// Poset

Poset Poset::trusted(std::size_t size, std::vector<char> leq, std::vector<std::string> names) {
  Poset p;
  p.size_ = size;
  p.leq_ = std::move(leq);
  p.names_ = default_names(size, std::move(names));
  return p;
}

Poset::Poset(std::size_t size, std::vector<char> relation, std::vector<std::string> names)
    : size_(size), leq_(std::move(relation)), names_(default_names(size, std::move(names))) {
  if (leq_.size() != size_ * size_) {
    throw Error(ErrorCode::precondition, "order matrix must be " + std::to_string(size_) + "x" +
                                             std::to_string(size_));
  }
  for (auto& v : leq_) v = v ? 1 : 0;
  for (std::size_t x = 0; x < size_; ++x) {
    if (!leq(x, x)) {
      throw Error(ErrorCode::not_a_partial_order, "relation is not reflexive at '" + names_[x] + "'");
    }
  }
  for (std::size_t a = 0; a < size_; ++a) {
    for (std::size_t b = a + 1; b < size_; ++b) {
      if (leq(a, b) && leq(b, a)) {
        throw Error(ErrorCode::not_a_partial_order,
                    "cycle between '" + names_[a] + "' and '" + names_[b] + "'");
      }
    }
  }
  for (std::size_t a = 0; a < size_; ++a) {
    for (std::size_t b = 0; b < size_; ++b) {
      if (!leq(a, b)) continue;
      for (std::size_t c = 0; c < size_; ++c) {
        if (leq(b, c) && !leq(a, c)) {
          throw Error(ErrorCode::not_a_partial_order, "relation is not transitive at '" +
                                                          names_[a] + "' <= '" + names_[b] +
                                                          "' <= '" + names_[c] + "'");
        }
      }
    }
  }
}

Poset Poset::from_covers(std::size_t size, std::span<const std::pair<Elem, Elem>> covers,
                         std::vector<std::string> names) {
  std::vector<char> leq(size * size, 0);
  for (std::size_t x = 0; x < size; ++x) leq[x * size + x] = 1;
  for (auto [lo, hi] : covers) {
    if (lo >= size || hi >= size) {
      throw Error(ErrorCode::precondition, "cover pair index out of range");
    }
    leq[lo * size + hi] = 1;
  }
  // Warshall closure.
  for (std::size_t k = 0; k < size; ++k) {
    for (std::size_t i = 0; i < size; ++i) {
      if (!leq[i * size + k]) continue;
      for (std::size_t j = 0; j < size; ++j) {
        if (leq[k * size + j]) leq[i * size + j] = 1;
      }
    }
  }
  return Poset(size, std::move(leq), std::move(names));
}

Poset Poset::dual() const {
  std::vector<char> t(size_ * size_);
  for (std::size_t a = 0; a < size_; ++a) {
    for (std::size_t b = 0; b < size_; ++b) t[b * size_ + a] = leq_[a * size_ + b];
  }
  return trusted(size_, std::move(t), names_);
}

std::vector<std::pair<Elem, Elem>> Poset::covers() const {
  std::vector<std::pair<Elem, Elem>> out;
  for (std::size_t a = 0; a < size_; ++a) {
    for (std::size_t b = 0; b < size_; ++b) {
      if (!less(a, b)) continue;
      bool cover = true;
      for (std::size_t c = 0; c < size_ && cover; ++c) {
        if (less(a, c) && less(c, b)) cover = false;
      }
      if (cover) out.emplace_back(static_cast<Elem>(a), static_cast<Elem>(b));
    }
  }
  return out;
}

std::uint64_t Poset::hash() const noexcept {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](unsigned char byte) {
    h ^= byte;
    h *= 1099511628211ULL;
  };
  for (int i = 0; i < 8; ++i) mix(static_cast<unsigned char>((size_ >> (8 * i)) & 0xff));
  for (char v : leq_) mix(static_cast<unsigned char>(v));
  return h;
}

bool ElementSet::contains(Elem x) const {
  return std::binary_search(members.begin(), members.end(), x);
}

// ---------------------------------------------------------------------------
// Lattice

Lattice Lattice::from_order(Poset order, std::size_t max_size) {
  const std::size_t n = order.size();
  if (n == 0) throw Error(ErrorCode::no_bounded_element, "empty order has no bottom or top");
  if (n > max_size) {
    throw Error(ErrorCode::size_limit, "lattice has " + std::to_string(n) +
                                           " elements, limit is " + std::to_string(max_size));
  }
  if (n > 0xffff) throw Error(ErrorCode::size_limit, "element index overflow");

  Lattice l;
  l.join_.assign(n * n, 0);
  l.meet_.assign(n * n, 0);
  std::vector<Elem> bounds;
  auto pair_message = [&](std::size_t a, std::size_t b, const char* what) {
    return "elements '" + order.name(a) + "' and '" + order.name(b) + "' have no " + what;
  };
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      bounds.clear();
      for (std::size_t u = 0; u < n; ++u) {
        if (order.leq(a, u) && order.leq(b, u)) bounds.push_back(static_cast<Elem>(u));
      }
      auto least = std::find_if(bounds.begin(), bounds.end(), [&](Elem u) {
        return std::all_of(bounds.begin(), bounds.end(), [&](Elem v) { return order.leq(u, v); });
      });
      if (least == bounds.end()) {
        throw Error(ErrorCode::not_a_lattice, pair_message(a, b, "least upper bound"));
      }
      l.join_[a * n + b] = l.join_[b * n + a] = *least;

      bounds.clear();
      for (std::size_t d = 0; d < n; ++d) {
        if (order.leq(d, a) && order.leq(d, b)) bounds.push_back(static_cast<Elem>(d));
      }
      auto greatest = std::find_if(bounds.begin(), bounds.end(), [&](Elem d) {
        return std::all_of(bounds.begin(), bounds.end(), [&](Elem v) { return order.leq(v, d); });
      });
      if (greatest == bounds.end()) {
        throw Error(ErrorCode::not_a_lattice, pair_message(a, b, "greatest lower bound"));
      }
      l.meet_[a * n + b] = l.meet_[b * n + a] = *greatest;
    }
  }
  // Binary joins exist, so the join of everything is the top; dually for bottom.
  Elem top = 0;
  Elem bottom = 0;
  for (std::size_t x = 0; x < n; ++x) {
    top = l.join_[top * n + x];
    bottom = l.meet_[bottom * n + x];
  }
  l.top_ = top;
  l.bottom_ = bottom;
  l.order_ = std::move(order);
  l.compute_covers();
  return l;
}

void Lattice::compute_covers() {
  const std::size_t n = size();
  lower_.assign(n, {});
  upper_.assign(n, {});
  for (auto [lo, hi] : order_.covers()) {
    lower_[hi].push_back(lo);
    upper_[lo].push_back(hi);
  }
}

Elem Lattice::join_all(std::span<const Elem> xs) const noexcept {
  Elem acc = bottom_;
  for (Elem x : xs) acc = join(acc, x);
  return acc;
}

Elem Lattice::meet_all(std::span<const Elem> xs) const noexcept {
  Elem acc = top_;
  for (Elem x : xs) acc = meet(acc, x);
  return acc;
}

std::optional<Elem> Lattice::find(std::string_view name) const {
  const auto& names = order_.names();
  auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) return std::nullopt;
  return static_cast<Elem>(it - names.begin());
}

std::string Lattice::hash_hex() const {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash()));
  return buf;
}

Lattice Lattice::relabeled(std::vector<std::string> names) const {
  Lattice l = *this;
  l.order_ = Poset::trusted(size(), order_.matrix(), std::move(names));
  return l;
}

Lattice dual(const Lattice& lattice) {
  Lattice d;
  d.order_ = lattice.order_.dual();
  d.join_ = lattice.meet_;
  d.meet_ = lattice.join_;
  d.bottom_ = lattice.top_;
  d.top_ = lattice.bottom_;
  d.lower_ = lattice.upper_;
  d.upper_ = lattice.lower_;
  return d;
}

// ---------------------------------------------------------------------------
// Generators

namespace {

Lattice from_predicate(std::size_t n, std::vector<std::string> names, std::size_t max_size,
                       const std::function<bool(std::size_t, std::size_t)>& leq) {
  if (n > max_size) {
    throw Error(ErrorCode::size_limit, "lattice has " + std::to_string(n) +
                                           " elements, limit is " + std::to_string(max_size));
  }
  std::vector<char> m(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) m[a * n + b] = leq(a, b) ? 1 : 0;
  }
  return Lattice::from_order(Poset(n, std::move(m), std::move(names)), max_size);
}

}  // namespace

Lattice make_chain(std::size_t n, std::size_t max_size) {
  if (n < 1) throw Error(ErrorCode::precondition, "chain needs at least one element");
  return from_predicate(n, {}, max_size, [](std::size_t a, std::size_t b) { return a <= b; });
}

Lattice make_boolean(std::size_t k, std::size_t max_size) {
  if (k >= 16 || (std::size_t{1} << k) > max_size) {
    throw Error(ErrorCode::size_limit, "boolean lattice with " + std::to_string(k) +
                                           " atoms exceeds limit " + std::to_string(max_size));
  }
  const std::size_t n = std::size_t{1} << k;
  std::vector<std::string> names;
  for (std::size_t s = 0; s < n; ++s) {
    std::string name = "{";
    for (std::size_t i = 0; i < k; ++i) {
      if (s >> i & 1) {
        if (name.size() > 1) name += ',';
        name += std::to_string(i);
      }
    }
    names.push_back(name + "}");
  }
  return from_predicate(n, std::move(names), max_size,
                        [](std::size_t a, std::size_t b) { return (a & ~b) == 0; });
}

Lattice make_mk(std::size_t k, std::size_t max_size) {
  const std::size_t n = k + 2;
  std::vector<std::string> names{"bot"};
  static const char* const five[] = {"u", "d", "a", "b", "c"};
  for (std::size_t i = 0; i < k; ++i) {
    names.push_back(k == 5 ? std::string(five[i]) : "a" + std::to_string(i + 1));
  }
  names.push_back("top");
  return from_predicate(n, std::move(names), max_size, [n](std::size_t a, std::size_t b) {
    return a == b || a == 0 || b == n - 1;
  });
}

Lattice make_n5() {
  // bot=0, a=1, b=2, c=3, top=4 with a < b.
  return from_predicate(5, {"bot", "a", "b", "c", "top"}, kDefaultMaxLattice,
                        [](std::size_t x, std::size_t y) {
                          return x == y || x == 0 || y == 4 || (x == 1 && y == 2);
                        });
}

// ---------------------------------------------------------------------------
// Downsets

std::optional<Elem> DownsetLattice::element_of(std::uint64_t mask) const {
  auto it = std::lower_bound(masks.begin(), masks.end(), mask, [](std::uint64_t a, std::uint64_t b) {
    const int pa = std::popcount(a);
    const int pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  if (it == masks.end() || *it != mask) return std::nullopt;
  return static_cast<Elem>(it - masks.begin());
}

struct DownsetBuilder {
  static DownsetLattice build(const Poset& poset, std::size_t max_downsets) {
    const std::size_t p = poset.size();
    if (p > 64) throw Error(ErrorCode::size_limit, "downset lattice needs a poset of at most 64 elements");
    if (max_downsets > 0xffff) max_downsets = 0xffff;

    std::vector<std::uint64_t> below(p, 0);  // strictly below
    for (std::size_t a = 0; a < p; ++a) {
      for (std::size_t b = 0; b < p; ++b) {
        if (poset.less(b, a)) below[a] |= std::uint64_t{1} << b;
      }
    }
    std::unordered_set<std::uint64_t> seen{0};
    std::vector<std::uint64_t> frontier{0};
    while (!frontier.empty()) {
      std::vector<std::uint64_t> next;
      for (std::uint64_t d : frontier) {
        for (std::size_t e = 0; e < p; ++e) {
          const std::uint64_t bit = std::uint64_t{1} << e;
          if ((d & bit) || (below[e] & ~d)) continue;
          if (seen.insert(d | bit).second) {
            if (seen.size() > max_downsets) {
              throw Error(ErrorCode::size_limit, "downset lattice exceeds " +
                                                     std::to_string(max_downsets) + " elements");
            }
            next.push_back(d | bit);
          }
        }
      }
      frontier = std::move(next);
    }

    struct {
      std::vector<std::uint64_t> masks;
      Table principal;
    } out;
    out.masks.assign(seen.begin(), seen.end());
    std::sort(out.masks.begin(), out.masks.end(), [](std::uint64_t a, std::uint64_t b) {
      const int pa = std::popcount(a);
      const int pb = std::popcount(b);
      return pa != pb ? pa < pb : a < b;
    });
    const std::size_t n = out.masks.size();
    std::unordered_map<std::uint64_t, Elem> index;
    index.reserve(n * 2);
    for (std::size_t i = 0; i < n; ++i) index.emplace(out.masks[i], static_cast<Elem>(i));

    std::vector<char> leq(n * n);
    std::vector<std::string> names(n);
    Lattice l;
    l.join_.resize(n * n);
    l.meet_.resize(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      const std::uint64_t a = out.masks[i];
      std::string name = "{";
      for (std::size_t e = 0; e < p; ++e) {
        if (a >> e & 1) {
          if (name.size() > 1) name += ',';
          name += poset.name(e);
        }
      }
      names[i] = name + "}";
      for (std::size_t j = 0; j < n; ++j) {
        const std::uint64_t b = out.masks[j];
        leq[i * n + j] = (a & ~b) == 0;
        l.join_[i * n + j] = index.at(a | b);
        l.meet_[i * n + j] = index.at(a & b);
      }
    }
    l.order_ = Poset::trusted(n, std::move(leq), std::move(names));
    l.bottom_ = 0;
    l.top_ = static_cast<Elem>(n - 1);
    l.lower_.assign(n, {});
    l.upper_.assign(n, {});
    for (std::size_t i = 0; i < n; ++i) {
      const std::uint64_t d = out.masks[i];
      for (std::size_t e = 0; e < p; ++e) {
        const std::uint64_t bit = std::uint64_t{1} << e;
        if ((d & bit) || (below[e] & ~d)) continue;
        const Elem up = index.at(d | bit);
        l.upper_[i].push_back(up);
        l.lower_[up].push_back(static_cast<Elem>(i));
      }
    }
    for (auto& v : l.lower_) std::sort(v.begin(), v.end());
    for (auto& v : l.upper_) std::sort(v.begin(), v.end());
    out.principal.resize(p);
    for (std::size_t e = 0; e < p; ++e) {
      out.principal[e] = index.at(below[e] | (std::uint64_t{1} << e));
    }
    return DownsetLattice{poset, std::move(l), std::move(out.masks), std::move(out.principal)};
  }
};

DownsetLattice downset_representation(const Poset& poset, std::size_t max_downsets) {
  return DownsetBuilder::build(poset, max_downsets);
}

Lattice downset_lattice(const Poset& poset, std::size_t max_downsets) {
  return DownsetBuilder::build(poset, max_downsets).lattice;
}

// ---------------------------------------------------------------------------
// Combinatorics

ElementSet join_irreducibles(const Lattice& lattice) {
  ElementSet out;
  for (std::size_t x = 0; x < lattice.size(); ++x) {
    const Elem e = static_cast<Elem>(x);
    if (e != lattice.bottom() && lattice.lower_covers(e).size() == 1) out.members.push_back(e);
  }
  return out;
}

ElementSet meet_irreducibles(const Lattice& lattice) {
  ElementSet out;
  for (std::size_t x = 0; x < lattice.size(); ++x) {
    const Elem e = static_cast<Elem>(x);
    if (e != lattice.top() && lattice.upper_covers(e).size() == 1) out.members.push_back(e);
  }
  return out;
}

bool is_distributive(const Lattice& l) {
  const std::size_t n = l.size();
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      for (Elem z = 0; z < n; ++z) {
        if (l.meet(x, l.join(y, z)) != l.join(l.meet(x, y), l.meet(x, z))) return false;
      }
    }
  }
  return true;
}

namespace {

struct OrderProfile {
  std::size_t down = 0;
  std::size_t up = 0;
  std::size_t lower_covers = 0;
  std::size_t upper_covers = 0;
  auto key() const { return std::tuple(down, up, lower_covers, upper_covers); }
};

std::vector<OrderProfile> profiles(const Poset& p) {
  const std::size_t n = p.size();
  const std::size_t words = (n + 63) / 64;
  std::vector<std::uint64_t> strictly_above(n * words, 0);
  std::vector<OrderProfile> out(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (!p.leq(a, b)) continue;
      ++out[a].up;
      ++out[b].down;
      if (a != b) strictly_above[a * words + b / 64] |= std::uint64_t{1} << (b % 64);
    }
  }
  // y is a lower cover of x iff nothing strictly above y lies strictly below x.
  for (std::size_t y = 0; y < n; ++y) {
    for (std::size_t x = 0; x < n; ++x) {
      if (!p.less(y, x)) continue;
      bool cover = true;
      for (std::size_t w = 0; w < words && cover; ++w) {
        std::uint64_t between = strictly_above[y * words + w];
        between &= ~(w == x / 64 ? std::uint64_t{1} << (x % 64) : 0);
        while (between) {
          const std::size_t z = w * 64 + static_cast<std::size_t>(std::countr_zero(between));
          between &= between - 1;
          if (p.less(z, x)) {
            cover = false;
            break;
          }
        }
      }
      if (cover) {
        ++out[x].lower_covers;
        ++out[y].upper_covers;
      }
    }
  }
  return out;
}

}  // namespace

void for_each_order_isomorphism(const Poset& from, const Poset& to, bool reversed,
                                std::size_t node_cap,
                                const std::function<bool(const Table&)>& visit) {
  const std::size_t n = from.size();
  if (to.size() != n) return;
  if (n == 0) {
    visit(Table{});
    return;
  }
  auto target_leq = [&](std::size_t a, std::size_t b) {
    return reversed ? to.leq(b, a) : to.leq(a, b);
  };
  const auto from_prof = profiles(from);
  auto to_prof = profiles(to);
  if (reversed) {
    for (auto& pr : to_prof) {
      std::swap(pr.down, pr.up);
      std::swap(pr.lower_covers, pr.upper_covers);
    }
  }
  std::map<decltype(from_prof[0].key()), std::vector<Elem>> buckets;
  for (std::size_t v = 0; v < n; ++v) buckets[to_prof[v].key()].push_back(static_cast<Elem>(v));

  std::vector<Elem> sequence(n);
  std::iota(sequence.begin(), sequence.end(), Elem{0});
  std::stable_sort(sequence.begin(), sequence.end(), [&](Elem a, Elem b) {
    return from_prof[a].down < from_prof[b].down;
  });
  std::vector<const std::vector<Elem>*> candidates(n, nullptr);
  for (std::size_t x = 0; x < n; ++x) {
    auto it = buckets.find(from_prof[x].key());
    if (it == buckets.end()) return;
    candidates[x] = &it->second;
  }

  Table image(n, 0);
  std::vector<char> used(n, 0);
  std::size_t nodes = 0;
  bool stop = false;

  std::function<void(std::size_t)> extend = [&](std::size_t depth) {
    if (stop) return;
    if (depth == n) {
      if (!visit(image)) stop = true;
      return;
    }
    const Elem x = sequence[depth];
    for (Elem v : *candidates[x]) {
      if (used[v]) continue;
      if (++nodes > node_cap) throw CapExceeded("order isomorphism search", node_cap, nodes - 1);
      bool ok = true;
      for (std::size_t i = 0; i < depth && ok; ++i) {
        const Elem z = sequence[i];
        if (from.leq(z, x) != target_leq(image[z], v) || from.leq(x, z) != target_leq(v, image[z])) {
          ok = false;
        }
      }
      if (!ok) continue;
      image[x] = v;
      used[v] = 1;
      extend(depth + 1);
      used[v] = 0;
      if (stop) return;
    }
  };
  extend(0);
}

std::vector<Table> automorphisms(const Lattice& lattice, std::size_t node_cap) {
  return poset_automorphisms(lattice.order(), node_cap);
}

std::vector<Table> poset_automorphisms(const Poset& poset, std::size_t node_cap) {
  std::vector<Table> out;
  for_each_order_isomorphism(poset, poset, false, node_cap, [&](const Table& t) {
    out.push_back(t);
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Poset> all_posets(std::size_t n) {
  if (n > 4) throw Error(ErrorCode::size_limit, "all_posets supports at most 4 elements");
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (a != b) slots.emplace_back(a, b);
    }
  }
  std::vector<Poset> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << slots.size()); ++bits) {
    std::vector<char> m(n * n, 0);
    for (std::size_t x = 0; x < n; ++x) m[x * n + x] = 1;
    for (std::size_t i = 0; i < slots.size(); ++i) {
      if (bits >> i & 1) m[slots[i].first * n + slots[i].second] = 1;
    }
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) {
      for (std::size_t b = 0; b < n && ok; ++b) {
        if (a != b && m[a * n + b] && m[b * n + a]) ok = false;
        for (std::size_t c = 0; c < n && ok; ++c) {
          if (m[a * n + b] && m[b * n + c] && !m[a * n + c]) ok = false;
        }
      }
    }
    if (ok) out.push_back(Poset::trusted(n, std::move(m)));
  }
  return out;
}

}  // namespace raney
