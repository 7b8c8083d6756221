#include "raney/endo_quantale.hpp"

#include <algorithm>
#include <numeric>

namespace raney {

// ---------------------------------------------------------------------------
// Enumeration

EndoHomset EndoHomset::enumerate(LatticePtr lattice, std::size_t cap) {
  const Lattice& l = *lattice;
  const std::size_t n = l.size();

  std::vector<Elem> joins = join_irreducibles(l).members;
  std::vector<std::size_t> down(n, 0);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) down[b] += l.leq(a, b);
  }
  std::stable_sort(joins.begin(), joins.end(), [&](Elem a, Elem b) { return down[a] < down[b]; });
  const std::size_t k = joins.size();

  // below[x]: positions p with joins[p] <= x.
  std::vector<std::vector<std::size_t>> below(n);
  for (Elem x = 0; x < n; ++x) {
    for (std::size_t p = 0; p < k; ++p) {
      if (l.leq(joins[p], x)) below[x].push_back(p);
    }
  }

  std::vector<Table> found;
  std::vector<Elem> value(k, 0);
  std::size_t leaves = 0;
  const std::size_t work_cap = cap * 200 + 1'000'000;
  Table table(n);

  auto visit_leaf = [&] {
    if (++leaves > work_cap) throw CapExceeded("homset enumeration work", work_cap, found.size());
    for (Elem x = 0; x < n; ++x) {
      Elem acc = l.bottom();
      for (std::size_t p : below[x]) acc = l.join(acc, value[p]);
      table[x] = acc;
    }
    if (!sup_preservation_failure(l, l, table)) {
      found.push_back(table);
      if (found.size() > cap) throw CapExceeded("homset enumeration", cap, found.size() - 1);
    }
  };

  auto assign = [&](auto& self, std::size_t depth) -> void {
    if (depth == k) {
      visit_leaf();
      return;
    }
    for (Elem v = 0; v < n; ++v) {
      bool monotone = true;
      for (std::size_t p = 0; p < depth && monotone; ++p) {
        if (l.leq(joins[p], joins[depth]) && !l.leq(value[p], v)) monotone = false;
      }
      if (!monotone) continue;
      value[depth] = v;
      self(self, depth + 1);
    }
  };
  assign(assign, 0);

  std::sort(found.begin(), found.end());
  EndoHomset out;
  out.lattice_ = std::move(lattice);
  out.maps_.reserve(found.size());
  out.index_.reserve(found.size() * 2);
  for (std::size_t i = 0; i < found.size(); ++i) {
    out.index_.emplace(found[i], i);
    out.maps_.push_back(SupMap::unchecked(out.lattice_, out.lattice_, std::move(found[i])));
  }
  out.identity_ = out.index(identity_map(out.lattice_).table());
  out.bottom_ = out.index(bottom_map(out.lattice_, out.lattice_).table());
  out.top_ = out.index(top_map(out.lattice_, out.lattice_).table());
  return out;
}

std::optional<std::size_t> EndoHomset::index_of(const Table& table) const {
  auto it = index_.find(table);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t EndoHomset::index(const Table& table) const {
  auto it = index_.find(table);
  if (it == index_.end()) throw Error(ErrorCode::invariant_violated, "map not in homset");
  return it->second;
}

std::vector<InfMap> enumerate_inf_maps(const LatticePtr& lattice, std::size_t cap) {
  const EndoHomset dual_homset = EndoHomset::enumerate(share(dual(*lattice)), cap);
  std::vector<InfMap> out;
  out.reserve(dual_homset.size());
  for (const SupMap& f : dual_homset) out.push_back(InfMap::unchecked(lattice, lattice, f.table()));
  return out;
}

// ---------------------------------------------------------------------------
// Residuals

SupMap residual_left(const SupMap& g, const SupMap& h) {
  if (!same_lattice(g.target(), h.target())) {
    throw Error(ErrorCode::precondition, "residual_left: g and h need a common target");
  }
  return sup_interior(compose(right_adjoint(g), h));
}

SupMap residual_right(const SupMap& h, const SupMap& f) {
  if (!same_lattice(h.source(), f.source())) {
    throw Error(ErrorCode::precondition, "residual_right: h and f need a common source");
  }
  const Lattice& y = f.target();
  const Lattice& z = h.target();
  // Pointwise meet over x of the tensors h(x) (over) f(x), evaluated at s in Y.
  Table t(y.size(), z.top());
  for (Elem x = 0; x < f.table().size(); ++x) {
    const Elem fx = f(x);
    const Elem hx = h(x);
    for (Elem s = 0; s < y.size(); ++s) {
      Elem v;
      if (!y.leq(s, fx)) {
        v = z.top();
      } else if (s == y.bottom()) {
        v = z.bottom();
      } else {
        v = hx;
      }
      t[s] = z.meet(t[s], v);
    }
  }
  return sup_interior(MonotoneMap::unchecked(f.target_ptr(), h.target_ptr(), std::move(t)));
}

// ---------------------------------------------------------------------------
// Raney transforms

SupMap raney_down(const InfMap& g) {
  const Lattice& x_lat = g.source();
  const Lattice& y_lat = g.target();
  Table out(x_lat.size());
  for (Elem x = 0; x < x_lat.size(); ++x) {
    Elem acc = y_lat.bottom();
    for (Elem t = 0; t < x_lat.size(); ++t) {
      if (!x_lat.leq(x, t)) acc = y_lat.join(acc, g(t));
    }
    out[x] = acc;
  }
  return SupMap::unchecked(g.source_ptr(), g.target_ptr(), std::move(out));
}

InfMap raney_up(const SupMap& f) {
  const Lattice& x_lat = f.source();
  const Lattice& y_lat = f.target();
  Table out(x_lat.size());
  for (Elem x = 0; x < x_lat.size(); ++x) {
    Elem acc = y_lat.top();
    for (Elem t = 0; t < x_lat.size(); ++t) {
      if (!x_lat.leq(t, x)) acc = y_lat.meet(acc, f(t));
    }
    out[x] = acc;
  }
  return InfMap::unchecked(f.source_ptr(), f.target_ptr(), std::move(out));
}

SupMap star(const SupMap& f) {
  SupMap via_left = left_adjoint(raney_up(f));
  const SupMap via_right = raney_down(right_adjoint(f));
  if (via_left.table() != via_right.table()) {
    throw Error(ErrorCode::invariant_violated, "star: lambda(^f) differs from v(rho f)");
  }
  return via_left;
}

std::array<bool, 6> relation_dual_profile(const SupMap& f, Elem x, Elem y) {
  const Lattice& src = f.source();
  const Lattice& dst = f.target();
  const InfMap up = raney_up(f);
  const SupMap s = star(f);

  bool all_t = true;
  for (Elem t = 0; t < src.size() && all_t; ++t) {
    all_t = src.leq(t, x) || dst.leq(y, f(t));
  }
  return {
      all_t,
      pointwise_leq(e_map(f.source_ptr(), f.target_ptr(), y, x), f),
      pointwise_leq(tensor_under(f.source_ptr(), f.target_ptr(), y, x), up),
      dst.leq(y, up(x)),
      src.leq(s(y), x),
      pointwise_leq(s, tensor_over(f.target_ptr(), f.source_ptr(), x, y)),
  };
}

std::array<Equivalence, 4> adjunction_formulas(const SupMap& f, Elem x, Elem y) {
  const Lattice& src = f.source();
  const Lattice& dst = f.target();
  const auto& sp = f.source_ptr();
  const auto& tp = f.target_ptr();
  const SupMap c = c_map(sp, tp, y);
  const SupMap a = a_map(sp, tp, x);
  return {
      Equivalence{pointwise_leq(c, f), dst.leq(y, raney_up(f)(src.bottom()))},
      Equivalence{pointwise_leq(f, c), dst.leq(f(src.top()), y)},
      Equivalence{pointwise_leq(a, f), src.leq(star(f)(dst.top()), x)},
      Equivalence{pointwise_leq(f, a), src.leq(x, right_adjoint(f)(dst.bottom()))},
  };
}

DivisionFormulas division_formulas(const SupMap& f, Elem x, Elem y) {
  if (!same_lattice(f.source(), f.target())) {
    throw Error(ErrorCode::precondition, "division_formulas needs an endomap");
  }
  const LatticePtr& l = f.source_ptr();
  const InfMap up = raney_up(f);
  const SupMap s = star(f);
  return {
      tensor_over(l, up(x), y),
      tensor_over(l, x, s(y)),
      q_meet(tensor_over(l, up(x), l->top()), tensor_over(l, up(l->bottom()), y)),
      q_meet(tensor_over(l, l->bottom(), s(y)), tensor_over(l, x, s(l->top()))),
  };
}

// ---------------------------------------------------------------------------
// Tight maps

SupMap tight_interior(const SupMap& f) { return raney_down(raney_up(f)); }

bool is_tight(const SupMap& f) { return tight_interior(f).table() == f.table(); }

TightSubset enumerate_tight(const EndoHomset& homset) {
  TightSubset out;
  out.flags.assign(homset.size(), 0);
  for (std::size_t i = 0; i < homset.size(); ++i) {
    if (is_tight(homset[i])) {
      out.flags[i] = 1;
      out.members.push_back(i);
    }
  }
  return out;
}

std::optional<SupMap> tight_has_unit(const EndoHomset& homset) {
  return tight_has_unit(homset, enumerate_tight(homset));
}

std::optional<SupMap> tight_has_unit(const EndoHomset& homset, const TightSubset& tight) {
  for (std::size_t u : tight.members) {
    const Table& ut = homset[u].table();
    bool unit = true;
    for (std::size_t f : tight.members) {
      const Table& ft = homset[f].table();
      for (std::size_t x = 0; x < ft.size() && unit; ++x) {
        unit = ut[ft[x]] == ft[x] && ft[ut[x]] == ft[x];
      }
      if (!unit) break;
    }
    if (unit) return homset[u];
  }
  return std::nullopt;
}

std::optional<std::pair<SupMap, SupMap>> conucleus_gap(const EndoHomset& homset) {
  std::vector<Table> interior;
  interior.reserve(homset.size());
  for (const SupMap& f : homset) interior.push_back(tight_interior(f).table());
  const std::size_t n = homset.lattice().size();
  Table gf(n);
  for (std::size_t fi = 0; fi < homset.size(); ++fi) {
    const Table& f = homset[fi].table();
    for (std::size_t gi = 0; gi < homset.size(); ++gi) {
      const Table& g = homset[gi].table();
      for (std::size_t x = 0; x < n; ++x) gf[x] = g[f[x]];
      const Table& lhs = interior[homset.index(gf)];
      const Table& ig = interior[gi];
      const Table& if_ = interior[fi];
      for (std::size_t x = 0; x < n; ++x) {
        if (lhs[x] != ig[if_[x]]) return std::pair{homset[fi], homset[gi]};
      }
    }
  }
  return std::nullopt;
}

bool is_completely_distributive(const LatticePtr& lattice) {
  const SupMap id = identity_map(lattice);
  return tight_interior(id).table() == id.table();
}

SupMap canonical_dualizing(const LatticePtr& lattice) {
  return raney_down(identity_inf_map(lattice));
}

// ---------------------------------------------------------------------------
// Cyclic and dualizing elements

namespace {

/// Identity first: it separates most non-dualizing candidates immediately.
std::vector<std::size_t> probe_order(const EndoHomset& homset) {
  std::vector<std::size_t> order(homset.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::swap(order[0], order[homset.identity_index()]);
  return order;
}

}  // namespace

bool is_cyclic(const EndoHomset& homset, const SupMap& f) {
  for (std::size_t gi : probe_order(homset)) {
    const SupMap& g = homset[gi];
    if (residual_right(f, g).table() != residual_left(g, f).table()) return false;
  }
  return true;
}

bool is_dualizing(const EndoHomset& homset, const SupMap& f) {
  for (std::size_t gi : probe_order(homset)) {
    const SupMap& g = homset[gi];
    if (residual_right(f, residual_left(g, f)).table() != g.table()) return false;
    if (residual_left(residual_right(f, g), f).table() != g.table()) return false;
  }
  return true;
}

std::vector<std::size_t> find_cyclic(const EndoHomset& homset) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < homset.size(); ++i) {
    if (is_cyclic(homset, homset[i])) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> find_dualizing(const EndoHomset& homset) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < homset.size(); ++i) {
    if (is_dualizing(homset, homset[i])) out.push_back(i);
  }
  return out;
}

bool is_girard(const EndoHomset& homset) {
  for (std::size_t i = 0; i < homset.size(); ++i) {
    if (is_dualizing(homset, homset[i]) && is_cyclic(homset, homset[i])) return true;
  }
  return false;
}

bool is_lattice_automorphism(const Lattice& lattice, const Table& table) {
  const std::size_t n = lattice.size();
  if (table.size() != n) return false;
  std::vector<char> hit(n, 0);
  for (Elem v : table) {
    if (v >= n || hit[v]) return false;
    hit[v] = 1;
  }
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      if (lattice.leq(a, b) != lattice.leq(table[a], table[b])) return false;
    }
  }
  return true;
}

Table dualizing_to_automorphism(const EndoHomset& homset, const SupMap& f) {
  if (!is_dualizing(homset, f)) throw Error(ErrorCode::not_dualizing, "map is not dualizing");
  const SupMap s = star(f);
  const InfMap up = raney_up(f);
  const Table id = identity_map(homset.lattice_ptr()).table();
  if (compose(up, s).table() != id || compose(s, up).table() != id) {
    throw Error(ErrorCode::invariant_violated, "^f and f* are not mutually inverse");
  }
  if (!is_lattice_automorphism(homset.lattice(), s.table())) {
    throw Error(ErrorCode::invariant_violated, "star of a dualizing map is not an automorphism");
  }
  return s.table();
}

SupMap automorphism_to_dualizing(const EndoHomset& homset, const Table& automorphism) {
  const LatticePtr& l = homset.lattice_ptr();
  if (!is_lattice_automorphism(*l, automorphism)) {
    throw Error(ErrorCode::not_automorphism, "table is not a lattice automorphism");
  }
  if (!is_completely_distributive(l)) {
    throw Error(ErrorCode::not_completely_distributive, "lattice is not completely distributive");
  }
  const SupMap h = SupMap::unchecked(l, l, automorphism);
  SupMap d = residual_right(canonical_dualizing(l), h);
  if (!is_dualizing(homset, d) || star(d).table() != automorphism) {
    throw Error(ErrorCode::invariant_violated, "o/h is not dualizing with star h");
  }
  return d;
}

}  // namespace raney
