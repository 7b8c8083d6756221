#include "raney/structures.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "raney/lattice_io.hpp"

namespace raney {

using nlohmann::json;

// ---------------------------------------------------------------------------
// Abstract finite quantales

std::optional<std::string> quantale_violation(const Lattice& carrier, const std::vector<Elem>& mult) {
  const std::size_t n = carrier.size();
  auto mul = [&](Elem a, Elem b) { return mult[a * n + b]; };
  auto name = [&](Elem a) { return carrier.name(a); };
  const Elem bot = carrier.bottom();
  for (Elem x = 0; x < n; ++x) {
    if (mul(x, bot) != bot || mul(bot, x) != bot) {
      return "multiplication by bottom is not bottom at '" + name(x) + "'";
    }
    for (Elem y = 0; y < n; ++y) {
      for (Elem z = 0; z < n; ++z) {
        if (mul(mul(x, y), z) != mul(x, mul(y, z))) {
          return "not associative at (" + name(x) + ", " + name(y) + ", " + name(z) + ")";
        }
        if (mul(x, carrier.join(y, z)) != carrier.join(mul(x, y), mul(x, z))) {
          return "left multiplication by '" + name(x) + "' does not preserve " + name(y) + " v " + name(z);
        }
        if (mul(carrier.join(y, z), x) != carrier.join(mul(y, x), mul(z, x))) {
          return "right multiplication by '" + name(x) + "' does not preserve " + name(y) + " v " + name(z);
        }
      }
    }
  }
  return std::nullopt;
}

FiniteQuantale FiniteQuantale::checked(LatticePtr carrier, std::vector<Elem> mult) {
  const std::size_t n = carrier->size();
  if (mult.size() != n * n) {
    throw Error(ErrorCode::precondition, "multiplication table must be " + std::to_string(n) + "x" +
                                             std::to_string(n));
  }
  for (Elem v : mult) {
    if (v >= n) throw Error(ErrorCode::precondition, "multiplication value out of range");
  }
  if (auto bad = quantale_violation(*carrier, mult)) throw Error(ErrorCode::invariant_violated, *bad);
  return FiniteQuantale(std::move(carrier), std::move(mult));
}

FiniteQuantale m5_quantale() {
  // bot, u, d, a, b, c, top; row . column
  constexpr Elem B = 0, u = 1, d = 2, a = 3, b = 4, c = 5, T = 6;
  std::vector<Elem> mult = {
      B, B, B, B, B, B, B,
      B, u, d, a, b, c, T,
      B, d, T, T, T, T, T,
      B, a, T, T, T, d, T,
      B, b, T, d, T, T, T,
      B, c, T, T, d, T, T,
      B, T, T, T, T, T, T,
  };
  return FiniteQuantale::checked(share(make_mk(5)), std::move(mult));
}

Residuals q_residuals(const FiniteQuantale& q, Elem x, Elem y) {
  const Lattice& l = q.carrier();
  Residuals r{l.bottom(), l.bottom()};
  for (Elem z = 0; z < q.size(); ++z) {
    if (l.leq(q.mul(x, z), y)) r.left = l.join(r.left, z);
    if (l.leq(q.mul(z, x), y)) r.right = l.join(r.right, z);
  }
  return r;
}

std::vector<Elem> q_cyclic(const FiniteQuantale& q) {
  std::vector<Elem> out;
  for (Elem o = 0; o < q.size(); ++o) {
    bool cyclic = true;
    for (Elem x = 0; x < q.size() && cyclic; ++x) {
      // o/x against x\o
      cyclic = q_residuals(q, x, o).right == q_residuals(q, x, o).left;
    }
    if (cyclic) out.push_back(o);
  }
  return out;
}

std::vector<Elem> q_dualizing(const FiniteQuantale& q) {
  std::vector<Elem> out;
  for (Elem o = 0; o < q.size(); ++o) {
    bool dualizing = true;
    for (Elem x = 0; x < q.size() && dualizing; ++x) {
      const Residuals r = q_residuals(q, x, o);
      dualizing = q_residuals(q, r.left, o).right == x && q_residuals(q, r.right, o).left == x;
    }
    if (dualizing) out.push_back(o);
  }
  return out;
}

std::optional<Elem> q_unit(const FiniteQuantale& q) {
  for (Elem e = 0; e < q.size(); ++e) {
    bool unit = true;
    for (Elem x = 0; x < q.size() && unit; ++x) unit = q.mul(e, x) == x && q.mul(x, e) == x;
    if (unit) return e;
  }
  return std::nullopt;
}

json quantale_to_json(const FiniteQuantale& q) {
  json rows = json::array();
  for (Elem a = 0; a < q.size(); ++a) {
    json row = json::array();
    for (Elem b = 0; b < q.size(); ++b) row.push_back(q.mul(a, b));
    rows.push_back(std::move(row));
  }
  return json{{"carrier", lattice_to_json(q.carrier())}, {"mult", std::move(rows)}};
}

// ---------------------------------------------------------------------------
// Order structure of Q(L,L)

std::vector<char> homset_order(const EndoHomset& homset) {
  const std::size_t n = homset.size();
  std::vector<char> order(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) order[i * n + j] = pointwise_leq(homset[i], homset[j]);
  }
  return order;
}

HomsetIrreducibles homset_irreducibles(const EndoHomset& homset) {
  return homset_irreducibles(homset, homset_order(homset));
}

HomsetIrreducibles homset_irreducibles(const EndoHomset& homset, const std::vector<char>& order) {
  const Lattice& l = homset.lattice();
  const LatticePtr& lp = homset.lattice_ptr();
  const std::size_t n = homset.size();
  const std::size_t m = l.size();
  HomsetIrreducibles out;

  Table acc(m);
  for (std::size_t f = 0; f < n; ++f) {
    if (f != homset.bottom_index()) {
      std::fill(acc.begin(), acc.end(), l.bottom());
      for (std::size_t g = 0; g < n; ++g) {
        if (g == f || !order[g * n + f]) continue;
        for (std::size_t x = 0; x < m; ++x) acc[x] = l.join(acc[x], homset[g](x));
      }
      if (acc != homset[f].table()) out.joins.push_back(f);
    }
    if (f != homset.top_index()) {
      std::fill(acc.begin(), acc.end(), l.top());
      for (std::size_t g = 0; g < n; ++g) {
        if (g == f || !order[f * n + g]) continue;
        for (std::size_t x = 0; x < m; ++x) acc[x] = l.meet(acc[x], homset[g](x));
      }
      if (sup_interior(MonotoneMap::unchecked(lp, lp, acc)).table() != homset[f].table()) {
        out.meets.push_back(f);
      }
    }
  }

  const auto lj = join_irreducibles(l).members;
  const auto lm = meet_irreducibles(l).members;
  out.lattice_joins = lj.size();
  out.lattice_meets = lm.size();
  std::set<std::size_t> tensors;
  std::set<std::size_t> elementary;
  for (Elem mm : lm) {
    for (Elem j : lj) {
      tensors.insert(homset.index(tensor_over(lp, mm, j)));
      elementary.insert(homset.index(e_map(lp, j, mm)));
    }
  }
  out.tensors_distinct = tensors.size() == out.product();
  out.elementary_distinct = elementary.size() == out.product();
  out.meets_are_tensors = std::vector<std::size_t>(tensors.begin(), tensors.end()) == out.meets;
  out.elementary_join_irreducible = std::includes(out.joins.begin(), out.joins.end(),
                                                  elementary.begin(), elementary.end());
  return out;
}

const char* to_string(AutodualVerdict verdict) noexcept {
  switch (verdict) {
    case AutodualVerdict::autodual: return "autodual";
    case AutodualVerdict::not_autodual: return "not-autodual";
    case AutodualVerdict::inconclusive: return "inconclusive";
  }
  return "?";
}

bool is_anti_automorphism(const std::vector<char>& order, const std::vector<std::size_t>& perm) {
  const std::size_t n = perm.size();
  if (order.size() != n * n) return false;
  std::vector<char> hit(n, 0);
  for (std::size_t v : perm) {
    if (v >= n || hit[v]) return false;
    hit[v] = 1;
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (order[a * n + b] != order[perm[b] * n + perm[a]]) return false;
    }
  }
  return true;
}

AutodualReport autodual_report(const EndoHomset& homset, const HomsetIrreducibles& irreducibles,
                               std::size_t cap, std::size_t node_cap) {
  AutodualReport out;
  const std::size_t nj = irreducibles.joins.size();
  const std::size_t nm = irreducibles.meets.size();
  if (nj != nm) {
    out.verdict = AutodualVerdict::not_autodual;
    out.reason = "|J(Q)| = " + std::to_string(nj) + " differs from |M(Q)| = " + std::to_string(nm);
    return out;
  }
  const std::size_t n = homset.size();
  if (n > cap) {
    out.reason = "|Q| = " + std::to_string(n) + " exceeds cap " + std::to_string(cap);
    return out;
  }
  const std::vector<char> order = homset_order(homset);
  if (is_completely_distributive(homset.lattice_ptr())) {
    const SupMap o = canonical_dualizing(homset.lattice_ptr());
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = homset.index(residual_left(homset[i], o));
    if (is_anti_automorphism(order, perm)) {
      out.verdict = AutodualVerdict::autodual;
      out.reason = "f -> f\\o reverses the order of Q";
      out.witness = std::move(perm);
      return out;
    }
  }
  const Poset q = Poset::trusted(n, order);
  try {
    for_each_order_isomorphism(q, q, true, node_cap, [&](const Table& t) {
      out.witness = std::vector<std::size_t>(t.begin(), t.end());
      return false;
    });
  } catch (const CapExceeded& e) {
    out.reason = e.what();
    return out;
  }
  if (out.witness) {
    out.verdict = AutodualVerdict::autodual;
    out.reason = "anti-automorphism found by search";
  } else {
    out.verdict = AutodualVerdict::not_autodual;
    out.reason = "exhaustive search found no anti-automorphism";
  }
  return out;
}

// ---------------------------------------------------------------------------
// Weakening relations

DownsetSpace DownsetSpace::of(const Poset& poset) {
  DownsetLattice rep = downset_representation(poset);
  LatticePtr lattice = share(rep.lattice);
  return DownsetSpace{std::move(rep), std::move(lattice)};
}

WeakeningRelation::WeakeningRelation(Poset poset, std::vector<char> pairs)
    : poset_(std::move(poset)), pairs_(std::move(pairs)) {
  const std::size_t n = poset_.size();
  if (pairs_.size() != n * n) throw Error(ErrorCode::precondition, "relation matrix has the wrong size");
  for (auto& v : pairs_) v = v ? 1 : 0;
  for (std::size_t y = 0; y < n; ++y) {
    for (std::size_t x = 0; x < n; ++x) {
      if (!contains(y, x)) continue;
      for (std::size_t y2 = 0; y2 < n; ++y2) {
        if (!poset_.leq(y2, y)) continue;
        for (std::size_t x2 = 0; x2 < n; ++x2) {
          if (poset_.leq(x, x2) && !contains(y2, x2)) {
            throw Error(ErrorCode::not_down_closed,
                        "(" + poset_.name(y) + ", " + poset_.name(x) + ") is related but (" +
                            poset_.name(y2) + ", " + poset_.name(x2) + ") is not");
          }
        }
      }
    }
  }
}

std::vector<std::pair<Elem, Elem>> WeakeningRelation::pairs() const {
  std::vector<std::pair<Elem, Elem>> out;
  const std::size_t n = poset_.size();
  for (std::size_t y = 0; y < n; ++y) {
    for (std::size_t x = 0; x < n; ++x) {
      if (contains(y, x)) out.emplace_back(static_cast<Elem>(y), static_cast<Elem>(x));
    }
  }
  return out;
}

WeakeningRelation wk_from_supmap(const DownsetSpace& space, const SupMap& f) {
  if (!same_lattice(f.source(), *space.lattice) || !same_lattice(f.target(), *space.lattice)) {
    throw Error(ErrorCode::precondition, "map is not an endomap of the downset lattice");
  }
  const std::size_t n = space.poset().size();
  std::vector<char> pairs(n * n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    const std::uint64_t image = space.rep.masks[f(space.rep.principal[x])];
    for (std::size_t y = 0; y < n; ++y) pairs[y * n + x] = (image >> y & 1) != 0;
  }
  return WeakeningRelation(space.poset(), std::move(pairs));
}

SupMap supmap_from_wk(const DownsetSpace& space, const WeakeningRelation& r) {
  if (!(r.poset() == space.poset())) throw Error(ErrorCode::precondition, "relation lives on another poset");
  const std::size_t n = space.poset().size();
  Table t(space.rep.masks.size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    const std::uint64_t d = space.rep.masks[i];
    std::uint64_t image = 0;
    for (std::size_t x = 0; x < n; ++x) {
      if (!(d >> x & 1)) continue;
      for (std::size_t y = 0; y < n; ++y) {
        if (r.contains(y, x)) image |= std::uint64_t{1} << y;
      }
    }
    t[i] = *space.rep.element_of(image);
  }
  return SupMap(space.lattice, space.lattice, std::move(t));
}

WeakeningRelation wk_compose(const WeakeningRelation& first, const WeakeningRelation& second) {
  if (!(first.poset() == second.poset())) throw Error(ErrorCode::precondition, "relations live on different posets");
  const std::size_t n = first.poset().size();
  std::vector<char> pairs(n * n, 0);
  for (std::size_t y = 0; y < n; ++y) {
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t z = 0; z < n; ++z) {
        if (first.contains(y, z) && second.contains(z, x)) {
          pairs[y * n + x] = 1;
          break;
        }
      }
    }
  }
  return WeakeningRelation(first.poset(), std::move(pairs));
}

namespace {

bool is_poset_automorphism(const Poset& p, const Table& g) {
  const std::size_t n = p.size();
  if (g.size() != n) return false;
  std::vector<char> hit(n, 0);
  for (Elem v : g) {
    if (v >= n || hit[v]) return false;
    hit[v] = 1;
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (p.leq(a, b) != p.leq(g[a], g[b])) return false;
    }
  }
  return true;
}

}  // namespace

WeakeningRelation wk_from_automorphism(const Poset& poset, const Table& g) {
  if (!is_poset_automorphism(poset, g)) throw Error(ErrorCode::not_automorphism, "not a poset automorphism");
  const std::size_t n = poset.size();
  std::vector<char> pairs(n * n, 0);
  for (std::size_t y = 0; y < n; ++y) {
    for (std::size_t x = 0; x < n; ++x) pairs[y * n + x] = !poset.leq(x, g[y]);
  }
  return WeakeningRelation(poset, std::move(pairs));
}

Table induced_automorphism(const DownsetSpace& space, const Table& g) {
  if (!is_poset_automorphism(space.poset(), g)) {
    throw Error(ErrorCode::not_automorphism, "not a poset automorphism");
  }
  const std::size_t n = space.poset().size();
  Table out(space.rep.masks.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    std::uint64_t image = 0;
    for (std::size_t e = 0; e < n; ++e) {
      if (space.rep.masks[i] >> e & 1) image |= std::uint64_t{1} << g[e];
    }
    out[i] = *space.rep.element_of(image);
  }
  return out;
}

json weakening_to_json(const WeakeningRelation& r) {
  json pairs = json::array();
  for (auto [y, x] : r.pairs()) pairs.push_back({y, x});
  char hex[17];
  std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(r.poset().hash()));
  return json{{"poset", hex}, {"pairs", std::move(pairs)}};
}

// ---------------------------------------------------------------------------
// Natural arrows

NaturalClassification classify_natural(const EndoHomset& homset) {
  const Lattice& l = homset.lattice();
  const std::size_t m = l.size();
  // psi(y, x) occupies entries [(y * m + x) * m, ... + m).
  auto family_of = [&](const SupMap& f0) {
    std::vector<Elem> fam(m * m * m);
    for (Elem y = 0; y < m; ++y) {
      for (Elem x = 0; x < m; ++x) {
        for (Elem t = 0; t < m; ++t) {
          const Elem ax = l.leq(t, x) ? l.bottom() : l.top();
          const Elem v = f0(ax);
          fam[(y * m + x) * m + t] = v == l.bottom() ? l.bottom() : y;
        }
      }
    }
    return fam;
  };

  std::map<std::vector<Elem>, std::size_t> families;
  for (std::size_t i = 0; i < homset.size(); ++i) families.emplace(family_of(homset[i]), i);

  std::vector<Table> adjoints;
  adjoints.reserve(homset.size());
  for (const SupMap& g : homset) adjoints.push_back(right_adjoint(g).table());

  NaturalClassification out;
  out.distinct_families = families.size();
  for (const auto& [fam, seed] : families) {
    auto psi = [&](Elem y, Elem x, Elem t) { return fam[(y * m + x) * m + t]; };
    bool natural = true;
    for (std::size_t fi = 0; fi < homset.size() && natural; ++fi) {
      const Table& f = homset[fi].table();
      const Table& rg = adjoints[fi];
      for (Elem y = 0; y < m && natural; ++y) {
        for (Elem x = 0; x < m && natural; ++x) {
          for (Elem t = 0; t < m && natural; ++t) {
            natural = psi(f[y], x, t) == f[psi(y, x, t)] && psi(y, rg[x], t) == psi(y, x, f[t]);
          }
        }
      }
    }
    if (!natural) continue;
    out.natural_seeds.push_back(seed);
    bool trivial = true;
    bool raney = true;
    for (Elem y = 0; y < m; ++y) {
      for (Elem x = 0; x < m; ++x) {
        for (Elem t = 0; t < m; ++t) {
          const Elem v = psi(y, x, t);
          trivial = trivial && v == l.bottom();
          raney = raney && v == (l.leq(t, x) ? l.bottom() : y);
        }
      }
    }
    out.has_trivial = out.has_trivial || trivial;
    out.has_raney = out.has_raney || raney;
  }
  std::sort(out.natural_seeds.begin(), out.natural_seeds.end());
  return out;
}

// ---------------------------------------------------------------------------
// Abstract Raney

BimorphismFamily elementary_family(const EndoHomset& homset) {
  const LatticePtr& l = homset.lattice_ptr();
  BimorphismFamily fam;
  fam.kind = FamilyKind::outer;
  fam.lattice_map = identity_map(l).table();
  for (Elem y = 0; y < l->size(); ++y) fam.homset_map.push_back(homset.index(c_map(l, y)));
  return fam;
}

AbstractRaneyResult abstract_raney_check(const EndoHomset& homset, const BimorphismFamily& family) {
  const Lattice& l = homset.lattice();
  const LatticePtr& lp = homset.lattice_ptr();
  const std::size_t m = l.size();
  if (family.lattice_map.size() != m || family.homset_map.size() != m) {
    throw Error(ErrorCode::malformed_family, "family maps must have one entry per element");
  }
  for (Elem v : family.lattice_map) {
    if (v >= m) throw Error(ErrorCode::malformed_family, "lattice map value out of range");
  }
  for (std::size_t i : family.homset_map) {
    if (i >= homset.size()) throw Error(ErrorCode::malformed_family, "homset map index out of range");
  }
  auto q = [&](Elem e) -> const Table& { return homset[family.homset_map[e]].table(); };
  auto joined = [&](Elem a, Elem b) {
    Table t(m);
    for (Elem x = 0; x < m; ++x) t[x] = l.join(q(a)[x], q(b)[x]);
    return t;
  };
  const Table& bottom = homset[homset.bottom_index()].table();

  if (family.kind == FamilyKind::outer) {
    if (inf_preservation_failure(l, l, family.lattice_map)) {
      throw Error(ErrorCode::malformed_family, "g is not inf-preserving");
    }
    if (q(l.bottom()) != bottom) throw Error(ErrorCode::malformed_family, "F(bot) is not the bottom map");
    for (Elem a = 0; a < m; ++a) {
      for (Elem b = 0; b < m; ++b) {
        if (q(l.join(a, b)) != joined(a, b)) throw Error(ErrorCode::malformed_family, "F does not preserve joins");
      }
    }
  } else {
    if (sup_preservation_failure(l, l, family.lattice_map)) {
      throw Error(ErrorCode::malformed_family, "f is not sup-preserving");
    }
    if (q(l.top()) != bottom) throw Error(ErrorCode::malformed_family, "G(top) is not the bottom map");
    for (Elem a = 0; a < m; ++a) {
      for (Elem b = 0; b < m; ++b) {
        if (q(l.meet(a, b)) != joined(a, b)) {
          throw Error(ErrorCode::malformed_family, "G does not send meets to joins");
        }
      }
    }
  }

  std::vector<Table> psi(m * m, Table(m));
  for (Elem y = 0; y < m; ++y) {
    for (Elem x = 0; x < m; ++x) {
      Table& t = psi[y * m + x];
      for (Elem s = 0; s < m; ++s) {
        if (family.kind == FamilyKind::outer) {
          t[s] = q(y)[l.leq(s, family.lattice_map[x]) ? l.bottom() : l.top()];
        } else {
          const Elem v = q(x)[s];
          t[s] = v == l.bottom() ? l.bottom() : family.lattice_map[y];
        }
      }
    }
  }

  AbstractRaneyResult out;
  out.chain_images = true;
  for (const Table& t : psi) {
    std::set<Elem> image(t.begin(), t.end());
    out.max_image_size = std::max(out.max_image_size, image.size());
    for (Elem a : image) {
      for (Elem b : image) {
        if (!l.leq(a, b) && !l.leq(b, a)) out.chain_images = false;
      }
    }
  }

  auto join_tables = [&](const Table& a, const Table& b) {
    Table t(m);
    for (Elem x = 0; x < m; ++x) t[x] = l.join(a[x], b[x]);
    return t;
  };
  out.bimorphism = true;
  for (Elem x = 0; x < m && out.bimorphism; ++x) {
    if (psi[l.bottom() * m + x] != bottom) out.bimorphism = false;
    if (psi[x * m + l.top()] != bottom) out.bimorphism = false;
    for (Elem a = 0; a < m && out.bimorphism; ++a) {
      for (Elem b = 0; b < m && out.bimorphism; ++b) {
        if (psi[l.join(a, b) * m + x] != join_tables(psi[a * m + x], psi[b * m + x])) out.bimorphism = false;
        if (psi[x * m + l.meet(a, b)] != join_tables(psi[x * m + a], psi[x * m + b])) out.bimorphism = false;
      }
    }
  }

  const Table id = identity_map(lp).table();
  for (const InfMap& h : enumerate_inf_maps(lp)) {
    Table acc(m, l.bottom());
    for (Elem x = 0; x < m; ++x) acc = join_tables(acc, psi[h(x) * m + x]);
    if (acc == id) {
      out.id_in_image = true;
      break;
    }
  }
  out.completely_distributive = is_completely_distributive(lp);
  return out;
}

}  // namespace raney
