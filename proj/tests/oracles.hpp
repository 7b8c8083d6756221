#pragma once

// Brute-force reference computations. These only read the order relation of
// a lattice and never call into the production algorithms.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "raney/lattice.hpp"

namespace oracle {

using raney::Elem;
using raney::Lattice;
using raney::Table;

inline std::size_t rank(const Lattice& l, Elem x) {
  std::size_t r = 0;
  for (std::size_t y = 0; y < l.size(); ++y) r += l.leq(static_cast<Elem>(y), x);
  return r;
}

/// Least upper bound of a subset given as a bitmask, found by scanning all elements.
inline Elem sup_of(const Lattice& l, std::uint64_t mask) {
  const std::size_t n = l.size();
  for (std::size_t u = 0; u < n; ++u) {
    bool upper = true;
    for (std::size_t s = 0; s < n && upper; ++s) {
      if ((mask >> s & 1) && !l.leq(static_cast<Elem>(s), static_cast<Elem>(u))) upper = false;
    }
    if (!upper) continue;
    bool least = true;
    for (std::size_t v = 0; v < n && least; ++v) {
      bool upper_v = true;
      for (std::size_t s = 0; s < n && upper_v; ++s) {
        if ((mask >> s & 1) && !l.leq(static_cast<Elem>(s), static_cast<Elem>(v))) upper_v = false;
      }
      if (upper_v && !l.leq(static_cast<Elem>(u), static_cast<Elem>(v))) least = false;
    }
    if (least) return static_cast<Elem>(u);
  }
  throw std::logic_error("no supremum");
}

inline Elem inf_of(const Lattice& l, std::uint64_t mask) {
  const std::size_t n = l.size();
  for (std::size_t u = 0; u < n; ++u) {
    bool lower = true;
    for (std::size_t s = 0; s < n && lower; ++s) {
      if ((mask >> s & 1) && !l.leq(static_cast<Elem>(u), static_cast<Elem>(s))) lower = false;
    }
    if (!lower) continue;
    bool greatest = true;
    for (std::size_t v = 0; v < n && greatest; ++v) {
      bool lower_v = true;
      for (std::size_t s = 0; s < n && lower_v; ++s) {
        if ((mask >> s & 1) && !l.leq(static_cast<Elem>(v), static_cast<Elem>(s))) lower_v = false;
      }
      if (lower_v && !l.leq(static_cast<Elem>(v), static_cast<Elem>(u))) greatest = false;
    }
    if (greatest) return static_cast<Elem>(u);
  }
  throw std::logic_error("no infimum");
}

inline Elem join2(const Lattice& l, Elem a, Elem b) {
  return sup_of(l, (std::uint64_t{1} << a) | (std::uint64_t{1} << b));
}

inline Elem meet2(const Lattice& l, Elem a, Elem b) {
  return inf_of(l, (std::uint64_t{1} << a) | (std::uint64_t{1} << b));
}

/// sup (or inf) of every subset, indexed by bitmask.
inline std::vector<Elem> subset_sups(const Lattice& l) {
  std::vector<Elem> out(std::size_t{1} << l.size());
  for (std::uint64_t s = 0; s < out.size(); ++s) out[s] = sup_of(l, s);
  return out;
}

inline std::vector<Elem> subset_infs(const Lattice& l) {
  std::vector<Elem> out(std::size_t{1} << l.size());
  for (std::uint64_t s = 0; s < out.size(); ++s) out[s] = inf_of(l, s);
  return out;
}

/// f(bound S) = bound f[S] for every subset S, the empty one included.
inline bool preserves_all(const std::vector<Elem>& src_bound, const std::vector<Elem>& dst_bound,
                          const Table& f) {
  for (std::uint64_t s = 0; s < src_bound.size(); ++s) {
    std::uint64_t image = 0;
    for (std::size_t x = 0; x < f.size(); ++x) {
      if (s >> x & 1) image |= std::uint64_t{1} << f[x];
    }
    if (f[src_bound[s]] != dst_bound[image]) return false;
  }
  return true;
}

inline bool preserves_all_sups(const Lattice& src, const Lattice& dst, const Table& f) {
  return preserves_all(subset_sups(src), subset_sups(dst), f);
}

inline bool preserves_all_infs(const Lattice& src, const Lattice& dst, const Table& f) {
  return preserves_all(subset_infs(src), subset_infs(dst), f);
}

/// Every function src -> dst, as tables. Only for tiny lattices.
inline std::vector<Table> all_functions(std::size_t n, std::size_t m) {
  std::vector<Table> out;
  Table t(n, 0);
  while (true) {
    out.push_back(t);
    std::size_t i = 0;
    while (i < n && ++t[i] == m) t[i++] = 0;
    if (i == n) break;
  }
  return out;
}

inline bool is_monotone(const Lattice& src, const Lattice& dst, const Table& f) {
  for (std::size_t a = 0; a < src.size(); ++a) {
    for (std::size_t b = 0; b < src.size(); ++b) {
      if (src.leq(static_cast<Elem>(a), static_cast<Elem>(b)) && !dst.leq(f[a], f[b])) return false;
    }
  }
  return true;
}

/// Every monotone map, by backtracking over the elements in index order.
inline std::vector<Table> monotone_maps(const Lattice& src, const Lattice& dst) {
  const std::size_t n = src.size();
  std::vector<Table> out;
  Table t(n, 0);
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == n) {
      out.push_back(t);
      return;
    }
    for (std::size_t v = 0; v < dst.size(); ++v) {
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) {
        if (src.leq(static_cast<Elem>(j), static_cast<Elem>(i)) && !dst.leq(t[j], static_cast<Elem>(v))) ok = false;
        if (src.leq(static_cast<Elem>(i), static_cast<Elem>(j)) && !dst.leq(static_cast<Elem>(v), t[j])) ok = false;
      }
      if (!ok) continue;
      t[i] = static_cast<Elem>(v);
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  return out;
}

/// Sup-preserving maps as the monotone maps preserving every subset sup, sorted.
inline std::vector<Table> sup_maps(const Lattice& src, const Lattice& dst) {
  const auto a = subset_sups(src);
  const auto b = subset_sups(dst);
  std::vector<Table> out;
  for (auto& t : monotone_maps(src, dst)) {
    if (t[src.bottom()] == dst.bottom() && preserves_all(a, b, t)) out.push_back(std::move(t));
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<Table> inf_maps(const Lattice& src, const Lattice& dst) {
  const auto a = subset_infs(src);
  const auto b = subset_infs(dst);
  std::vector<Table> out;
  for (auto& t : monotone_maps(src, dst)) {
    if (t[src.top()] == dst.top() && preserves_all(a, b, t)) out.push_back(std::move(t));
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline bool table_leq(const Lattice& l, const Table& f, const Table& g) {
  for (std::size_t x = 0; x < f.size(); ++x) {
    if (!l.leq(f[x], g[x])) return false;
  }
  return true;
}

inline Table compose(const Table& g, const Table& f) {
  Table t(f.size());
  for (std::size_t x = 0; x < f.size(); ++x) t[x] = g[f[x]];
  return t;
}

/// The greatest element of `candidates` in the pointwise order, if one exists.
inline std::optional<Table> greatest(const Lattice& l, const std::vector<Table>& candidates) {
  for (const auto& c : candidates) {
    bool top = true;
    for (const auto& d : candidates) {
      if (!table_leq(l, d, c)) {
        top = false;
        break;
      }
    }
    if (top) return c;
  }
  return std::nullopt;
}

/// rho f(y): the greatest x with f(x) <= y, found by scanning.
inline Table right_adjoint(const Lattice& src, const Lattice& dst, const Table& f) {
  Table out(dst.size());
  for (std::size_t y = 0; y < dst.size(); ++y) {
    std::uint64_t below = 0;
    for (std::size_t x = 0; x < src.size(); ++x) {
      if (dst.leq(f[x], static_cast<Elem>(y))) below |= std::uint64_t{1} << x;
    }
    const Elem s = sup_of(src, below);
    if (!dst.leq(f[s], static_cast<Elem>(y))) throw std::logic_error("no right adjoint");
    out[y] = s;
  }
  return out;
}

/// g\h over an explicit homset: the greatest f with g . f <= h.
inline std::optional<Table> left_residual(const Lattice& l, const std::vector<Table>& homset,
                                          const Table& g, const Table& h) {
  std::vector<Table> c;
  for (const auto& f : homset) {
    if (table_leq(l, compose(g, f), h)) c.push_back(f);
  }
  return greatest(l, c);
}

/// h/f over an explicit homset: the greatest g with g . f <= h.
inline std::optional<Table> right_residual(const Lattice& l, const std::vector<Table>& homset,
                                           const Table& h, const Table& f) {
  std::vector<Table> c;
  for (const auto& g : homset) {
    if (table_leq(l, compose(g, f), h)) c.push_back(g);
  }
  return greatest(l, c);
}

/// The triple law a ^ (b v c) = (a ^ b) v (a ^ c), with brute joins and meets.
inline bool distributive(const Lattice& l) {
  const std::size_t n = l.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        const Elem A = static_cast<Elem>(a), B = static_cast<Elem>(b), C = static_cast<Elem>(c);
        if (meet2(l, A, join2(l, B, C)) != join2(l, meet2(l, A, B), meet2(l, A, C))) return false;
      }
    }
  }
  return true;
}

/// Elements with exactly one lower cover.
inline std::vector<Elem> join_irreducibles(const Lattice& l) {
  std::vector<Elem> out;
  for (std::size_t x = 0; x < l.size(); ++x) {
    std::size_t covers = 0;
    for (std::size_t y = 0; y < l.size(); ++y) {
      if (!l.less(static_cast<Elem>(y), static_cast<Elem>(x))) continue;
      bool cover = true;
      for (std::size_t z = 0; z < l.size() && cover; ++z) {
        if (l.less(static_cast<Elem>(y), static_cast<Elem>(z)) && l.less(static_cast<Elem>(z), static_cast<Elem>(x))) cover = false;
      }
      covers += cover;
    }
    if (covers == 1) out.push_back(static_cast<Elem>(x));
  }
  return out;
}

inline std::vector<Elem> meet_irreducibles(const Lattice& l) {
  std::vector<Elem> out;
  for (std::size_t x = 0; x < l.size(); ++x) {
    std::size_t covers = 0;
    for (std::size_t y = 0; y < l.size(); ++y) {
      if (!l.less(static_cast<Elem>(x), static_cast<Elem>(y))) continue;
      bool cover = true;
      for (std::size_t z = 0; z < l.size() && cover; ++z) {
        if (l.less(static_cast<Elem>(x), static_cast<Elem>(z)) && l.less(static_cast<Elem>(z), static_cast<Elem>(y))) cover = false;
      }
      covers += cover;
    }
    if (covers == 1) out.push_back(static_cast<Elem>(x));
  }
  return out;
}

/// Irreducibles of a finite lattice of sup-preserving maps, ordered pointwise.
/// f is join-irreducible iff f is not bottom and the pointwise join of the
/// maps strictly below f is not f. f is meet-irreducible iff f is not top and
/// the maps strictly above f have a least member.
struct MapIrreducibles {
  std::vector<std::size_t> joins;
  std::vector<std::size_t> meets;
};

inline MapIrreducibles map_irreducibles(const Lattice& l, const std::vector<Table>& maps) {
  const std::size_t q = maps.size();
  std::vector<std::size_t> weight(q, 0);
  std::vector<std::size_t> r(l.size());
  for (std::size_t x = 0; x < l.size(); ++x) r[x] = rank(l, static_cast<Elem>(x));
  for (std::size_t i = 0; i < q; ++i) {
    for (Elem v : maps[i]) weight[i] += r[v];
  }
  std::vector<Elem> jt(l.size() * l.size());
  for (std::size_t a = 0; a < l.size(); ++a) {
    for (std::size_t b = 0; b < l.size(); ++b) jt[a * l.size() + b] = join2(l, static_cast<Elem>(a), static_cast<Elem>(b));
  }
  const Elem bot = l.bottom();
  MapIrreducibles out;
  for (std::size_t i = 0; i < q; ++i) {
    Table acc(l.size(), bot);
    bool any_below = false;
    std::optional<std::size_t> least_above;
    std::vector<std::size_t> above;
    for (std::size_t j = 0; j < q; ++j) {
      if (i == j) continue;
      if (table_leq(l, maps[j], maps[i])) {
        any_below = true;
        for (std::size_t x = 0; x < l.size(); ++x) acc[x] = jt[acc[x] * l.size() + maps[j][x]];
      } else if (table_leq(l, maps[i], maps[j])) {
        above.push_back(j);
        if (!least_above || weight[j] < weight[*least_above]) least_above = j;
      }
    }
    const bool is_bottom = std::all_of(maps[i].begin(), maps[i].end(), [&](Elem v) { return v == bot; });
    if (!is_bottom && (!any_below || acc != maps[i])) out.joins.push_back(i);
    if (least_above) {
      bool least = true;
      for (std::size_t j : above) {
        if (!table_leq(l, maps[*least_above], maps[j])) {
          least = false;
          break;
        }
      }
      if (least) out.meets.push_back(i);
    }
  }
  return out;
}

inline std::size_t binomial(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// |Q(C,C)| for the chain with n elements.
inline std::size_t chain_homset_size(std::size_t n) { return binomial(2 * n - 2, n - 1); }

/// |Q(B,B)| for the Boolean lattice with k atoms: free assignment of atoms.
inline std::size_t boolean_homset_size(std::size_t k) { return std::size_t{1} << (k * k); }

}  // namespace oracle
