#include "raney/order_maps.hpp"

#include <algorithm>
#include <string>

namespace raney {

namespace {

std::string failure_text(const Lattice& l, PreservationFailure w) {
  return "'" + l.name(w.x) + "', '" + l.name(w.y) + "'";
}

}  // namespace

template <MapKind Kind>
OrderMap<Kind>::OrderMap(LatticePtr source, LatticePtr target, Table table)
    : source_(std::move(source)), target_(std::move(target)), table_(std::move(table)) {
  if (!source_ || !target_) throw Error(ErrorCode::precondition, "map needs source and target");
  if (table_.size() != source_->size()) {
    throw Error(ErrorCode::precondition, "map table has " + std::to_string(table_.size()) +
                                             " entries, source has " +
                                             std::to_string(source_->size()) + " elements");
  }
  for (Elem v : table_) {
    if (v >= target_->size()) throw Error(ErrorCode::precondition, "map value out of range");
  }
  std::optional<PreservationFailure> bad;
  const char* what = "";
  if constexpr (Kind == MapKind::monotone) {
    bad = monotonicity_failure(*source_, *target_, table_);
    what = "not monotone at ";
  } else if constexpr (Kind == MapKind::sup_preserving) {
    bad = sup_preservation_failure(*source_, *target_, table_);
    what = "not sup-preserving at ";
  } else {
    bad = inf_preservation_failure(*source_, *target_, table_);
    what = "not inf-preserving at ";
  }
  if (bad) throw Error(ErrorCode::precondition, what + failure_text(*source_, *bad));
}

template class OrderMap<MapKind::monotone>;
template class OrderMap<MapKind::sup_preserving>;
template class OrderMap<MapKind::inf_preserving>;

std::optional<PreservationFailure> monotonicity_failure(const Lattice& source, const Lattice& target,
                                                        std::span<const Elem> table) {
  for (Elem a = 0; a < source.size(); ++a) {
    for (Elem b = 0; b < source.size(); ++b) {
      if (source.leq(a, b) && !target.leq(table[a], table[b])) return PreservationFailure{a, b};
    }
  }
  return std::nullopt;
}

std::optional<PreservationFailure> sup_preservation_failure(const Lattice& source,
                                                            const Lattice& target,
                                                            std::span<const Elem> table) {
  if (table[source.bottom()] != target.bottom()) {
    return PreservationFailure{source.bottom(), source.bottom()};
  }
  for (Elem a = 0; a < source.size(); ++a) {
    for (Elem b = a; b < source.size(); ++b) {
      if (table[source.join(a, b)] != target.join(table[a], table[b])) {
        return PreservationFailure{a, b};
      }
    }
  }
  return std::nullopt;
}

std::optional<PreservationFailure> inf_preservation_failure(const Lattice& source,
                                                            const Lattice& target,
                                                            std::span<const Elem> table) {
  if (table[source.top()] != target.top()) return PreservationFailure{source.top(), source.top()};
  for (Elem a = 0; a < source.size(); ++a) {
    for (Elem b = a; b < source.size(); ++b) {
      if (table[source.meet(a, b)] != target.meet(table[a], table[b])) {
        return PreservationFailure{a, b};
      }
    }
  }
  return std::nullopt;
}

bool is_sup_preserving(const MonotoneMap& m) {
  return !sup_preservation_failure(m.source(), m.target(), m.table());
}

bool is_inf_preserving(const MonotoneMap& m) {
  return !inf_preservation_failure(m.source(), m.target(), m.table());
}

// ---------------------------------------------------------------------------

SupMap identity_map(const LatticePtr& lattice) {
  Table t(lattice->size());
  for (std::size_t x = 0; x < t.size(); ++x) t[x] = static_cast<Elem>(x);
  return SupMap::unchecked(lattice, lattice, std::move(t));
}

InfMap identity_inf_map(const LatticePtr& lattice) {
  return InfMap::unchecked(lattice, lattice, identity_map(lattice).table());
}

SupMap bottom_map(const LatticePtr& source, const LatticePtr& target) {
  return SupMap::unchecked(source, target, Table(source->size(), target->bottom()));
}

SupMap top_map(const LatticePtr& source, const LatticePtr& target) {
  return c_map(source, target, target->top());
}

SupMap pointwise_join(const SupMap& f, const SupMap& g) {
  const Lattice& y = f.target();
  Table t(f.table().size());
  for (std::size_t x = 0; x < t.size(); ++x) t[x] = y.join(f(static_cast<Elem>(x)), g(static_cast<Elem>(x)));
  return SupMap::unchecked(f.source_ptr(), f.target_ptr(), std::move(t));
}

InfMap pointwise_meet(const InfMap& f, const InfMap& g) {
  const Lattice& y = f.target();
  Table t(f.table().size());
  for (std::size_t x = 0; x < t.size(); ++x) t[x] = y.meet(f(static_cast<Elem>(x)), g(static_cast<Elem>(x)));
  return InfMap::unchecked(f.source_ptr(), f.target_ptr(), std::move(t));
}

MonotoneMap pointwise_meet(const MonotoneMap& f, const MonotoneMap& g) {
  const Lattice& y = f.target();
  Table t(f.table().size());
  for (std::size_t x = 0; x < t.size(); ++x) t[x] = y.meet(f(static_cast<Elem>(x)), g(static_cast<Elem>(x)));
  return MonotoneMap::unchecked(f.source_ptr(), f.target_ptr(), std::move(t));
}

// ---------------------------------------------------------------------------

InfMap right_adjoint(const SupMap& f) {
  const Lattice& x_lat = f.source();
  const Lattice& y_lat = f.target();
  Table t(y_lat.size());
  for (Elem y = 0; y < y_lat.size(); ++y) {
    Elem acc = x_lat.bottom();
    for (Elem x = 0; x < x_lat.size(); ++x) {
      if (y_lat.leq(f(x), y)) acc = x_lat.join(acc, x);
    }
    t[y] = acc;
  }
  return InfMap::unchecked(f.target_ptr(), f.source_ptr(), std::move(t));
}

SupMap left_adjoint(const InfMap& g) {
  const Lattice& x_lat = g.source();
  const Lattice& y_lat = g.target();
  Table t(y_lat.size());
  for (Elem y = 0; y < y_lat.size(); ++y) {
    Elem acc = x_lat.top();
    for (Elem x = 0; x < x_lat.size(); ++x) {
      if (y_lat.leq(y, g(x))) acc = x_lat.meet(acc, x);
    }
    t[y] = acc;
  }
  return SupMap::unchecked(g.target_ptr(), g.source_ptr(), std::move(t));
}

// ---------------------------------------------------------------------------

SupMap c_map(const LatticePtr& source, const LatticePtr& target, Elem y) {
  Table t(source->size());
  for (Elem s = 0; s < t.size(); ++s) t[s] = s == source->bottom() ? target->bottom() : y;
  return SupMap::unchecked(source, target, std::move(t));
}

SupMap a_map(const LatticePtr& source, const LatticePtr& target, Elem x) {
  Table t(source->size());
  for (Elem s = 0; s < t.size(); ++s) t[s] = source->leq(s, x) ? target->bottom() : target->top();
  return SupMap::unchecked(source, target, std::move(t));
}

SupMap tensor_over(const LatticePtr& source, const LatticePtr& target, Elem y, Elem x) {
  Table t(source->size());
  for (Elem s = 0; s < t.size(); ++s) {
    if (!source->leq(s, x)) {
      t[s] = target->top();
    } else if (s == source->bottom()) {
      t[s] = target->bottom();
    } else {
      t[s] = y;
    }
  }
  return SupMap::unchecked(source, target, std::move(t));
}

SupMap e_map(const LatticePtr& source, const LatticePtr& target, Elem y, Elem x) {
  Table t(source->size());
  for (Elem s = 0; s < t.size(); ++s) t[s] = source->leq(s, x) ? target->bottom() : y;
  return SupMap::unchecked(source, target, std::move(t));
}

InfMap gamma_map(const LatticePtr& source, const LatticePtr& target, Elem y) {
  Table t(source->size());
  for (Elem s = 0; s < t.size(); ++s) t[s] = s == source->top() ? target->top() : y;
  return InfMap::unchecked(source, target, std::move(t));
}

InfMap alpha_map(const LatticePtr& source, const LatticePtr& target, Elem x) {
  Table t(source->size());
  for (Elem s = 0; s < t.size(); ++s) t[s] = source->leq(x, s) ? target->top() : target->bottom();
  return InfMap::unchecked(source, target, std::move(t));
}

InfMap tensor_under(const LatticePtr& source, const LatticePtr& target, Elem y, Elem x) {
  Table t(source->size());
  for (Elem s = 0; s < t.size(); ++s) {
    if (s == source->top()) {
      t[s] = target->top();
    } else if (source->leq(x, s)) {
      t[s] = y;
    } else {
      t[s] = target->bottom();
    }
  }
  return InfMap::unchecked(source, target, std::move(t));
}

Equivalence characterization_check(const SupMap& f, Elem x, Elem y) {
  return {f.target().leq(f(x), y),
          pointwise_leq(f, tensor_over(f.source_ptr(), f.target_ptr(), y, x))};
}

// ---------------------------------------------------------------------------

SupMap sup_interior(const MonotoneMap& k) {
  const Lattice& src = k.source();
  const Lattice& dst = k.target();
  const std::size_t n = src.size();
  // For each x, the pairs (a, b), a <= b by index, whose join lies above x.
  std::vector<std::vector<std::pair<Elem, Elem>>> covers_of(n);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = a; b < n; ++b) {
      const Elem j = src.join(a, b);
      for (Elem x = 0; x < n; ++x) {
        if (x != a && x != b && src.leq(x, j)) covers_of[x].emplace_back(a, b);
      }
    }
  }
  Table h = k.table();
  h[src.bottom()] = dst.bottom();
  for (bool changed = true; changed;) {
    changed = false;
    for (Elem x = 0; x < n; ++x) {
      if (x == src.bottom()) continue;
      Elem v = h[x];
      for (auto [a, b] : covers_of[x]) v = dst.meet(v, dst.join(h[a], h[b]));
      if (v != h[x]) {
        h[x] = v;
        changed = true;
      }
    }
  }
  return SupMap::unchecked(k.source_ptr(), k.target_ptr(), std::move(h));
}

SupMap q_meet(const LatticePtr& source, const LatticePtr& target, std::span<const SupMap> maps) {
  if (maps.empty()) return top_map(source, target);
  Table t(source->size(), target->top());
  for (const SupMap& m : maps) {
    for (std::size_t x = 0; x < t.size(); ++x) t[x] = target->meet(t[x], m.table()[x]);
  }
  return sup_interior(MonotoneMap::unchecked(source, target, std::move(t)));
}

SupMap q_meet(const SupMap& f, const SupMap& g) {
  return sup_interior(pointwise_meet(f.as_monotone(), g.as_monotone()));
}

Elem extend_bimorphism(const InfMap& g, const Lattice& z,
                       const std::function<Elem(Elem, Elem)>& psi) {
  return extend_bimorphism(g, psi, z.bottom(), [&z](Elem a, Elem b) { return z.join(a, b); });
}

// ---------------------------------------------------------------------------

Factorization factorize(const SupMap& f) {
  const InfMap rho = right_adjoint(f);
  Factorization out{compose(rho, f), compose(f, rho), {}, {}, {}, false};
  const Lattice& src = f.source();
  const Lattice& dst = f.target();
  for (Elem x = 0; x < src.size(); ++x) {
    if (out.closure(x) == x) out.source_fixpoints.push_back(x);
  }
  for (Elem y = 0; y < dst.size(); ++y) {
    if (out.interior(y) == y) out.target_fixpoints.push_back(y);
  }
  for (Elem x : out.source_fixpoints) out.iso.push_back(f(x));

  bool ok = out.source_fixpoints.size() == out.target_fixpoints.size();
  for (Elem x = 0; x < src.size() && ok; ++x) {
    ok = f(out.closure(x)) == f(x);
  }
  for (std::size_t i = 0; i < out.iso.size() && ok; ++i) {
    ok = rho(out.iso[i]) == out.source_fixpoints[i] &&
         std::binary_search(out.target_fixpoints.begin(), out.target_fixpoints.end(), out.iso[i]);
    for (std::size_t j = 0; j < out.iso.size() && ok; ++j) {
      ok = src.leq(out.source_fixpoints[i], out.source_fixpoints[j]) ==
           dst.leq(out.iso[i], out.iso[j]);
    }
  }
  if (ok) {
    std::vector<Elem> image(f.table());
    std::sort(image.begin(), image.end());
    image.erase(std::unique(image.begin(), image.end()), image.end());
    ok = image == out.target_fixpoints;
  }
  out.verified = ok;
  return out;
}

}  // namespace raney
