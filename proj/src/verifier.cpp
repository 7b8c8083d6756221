#include "raney/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <sstream>

namespace raney {

using nlohmann::json;

const char* to_string(CheckStatus status) noexcept {
  switch (status) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skipped: return "skipped";
  }
  return "?";
}

std::size_t Report::failed() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) {
    return c.status == CheckStatus::fail;
  }));
}

std::size_t Report::skipped() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) {
    return c.status == CheckStatus::skipped;
  }));
}

const std::vector<std::string>& lattice_check_ids() {
  static const std::vector<std::string> ids = {
      "lattice-axioms",       "dual-involution",       "distributive-iff-cd",
      "irreducibles-covers",  "downset-irreducibles",  "automorphism-group",
      "galois-law",           "lemma-tensors",         "canonical-meet",
      "inf-tensor-join",      "bimorphism-extension",  "sup-interior",
      "factorization",        "naturality",            "residual-adjunction",
      "residual-oracle",      "division-lemmas",       "prop-divisions",
      "transform-tensors",    "adjunction-formulas",   "relation-dual",
      "raney-adjunction",     "raney-adjoint-commute", "raney-theorem",
      "tight-bi-ideal",       "tight-unit",            "conucleus-gap",
      "dualizing-iff-cd",     "thm-bijection",         "dualizing-inverse",
      "dualizing-unit",       "girard",                "homset-irreducibles",
      "autodual",             "natural-arrows",        "abstract-raney",
      "weakening-relations",
  };
  return ids;
}

const std::vector<std::string>& m5_check_ids() {
  static const std::vector<std::string> ids = {
      "m5-table", "m5-unit", "m5-residuals", "m5-cyclic", "m5-dualizing", "m5-dualizing-unit",
  };
  return ids;
}

std::set<std::string> parse_check_list(const std::string& comma_list) {
  std::set<std::string> out;
  std::stringstream in(comma_list);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto first = item.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    item = item.substr(first, item.find_last_not_of(" \t") - first + 1);
    const auto& a = lattice_check_ids();
    const auto& b = m5_check_ids();
    if (std::find(a.begin(), a.end(), item) == a.end() && std::find(b.begin(), b.end(), item) == b.end()) {
      throw Error(ErrorCode::precondition, "unknown check id '" + item + "'");
    }
    out.insert(item);
  }
  return out;
}

std::vector<CorpusEntry> default_corpus() {
  std::vector<CorpusEntry> out;
  for (std::size_t n = 1; n <= 5; ++n) out.push_back({"chain(" + std::to_string(n) + ")", share(make_chain(n)), {}});
  for (std::size_t k = 1; k <= 3; ++k) {
    out.push_back({"boolean(" + std::to_string(k) + ")", share(make_boolean(k)), {}});
  }
  out.push_back({"M3", share(make_mk(3)), {}});
  out.push_back({"M5", share(make_mk(5)), {}});
  out.push_back({"N5", share(make_n5()), {}});

  using Covers = std::vector<std::pair<Elem, Elem>>;
  const std::vector<std::tuple<std::string, std::size_t, Covers>> posets = {
      {"P0", 0, {}},
      {"P1", 1, {}},
      {"P2-chain", 2, {{0, 1}}},
      {"P2-antichain", 2, {}},
      {"P3-antichain", 3, {}},
      {"P3-chain", 3, {{0, 1}, {1, 2}}},
      {"P3-V", 3, {{0, 1}, {0, 2}}},
      {"P3-Lambda", 3, {{0, 2}, {1, 2}}},
      {"P3-chain+point", 3, {{0, 1}}},
  };
  for (const auto& [name, size, covers] : posets) {
    Poset p = Poset::from_covers(size, covers);
    out.push_back({"downsets(" + name + ")", share(downset_lattice(p)), p});
  }
  return out;
}

namespace {

struct Failure {
  std::string message;
  json witness;
};

using Outcome = std::optional<Failure>;

struct Skip {
  std::string reason;
};

json tab(const Table& t) { return json(t); }

Table pointwise_join_tables(const Lattice& l, const Table& a, const Table& b) {
  Table t(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) t[x] = l.join(a[x], b[x]);
  return t;
}

bool tables_leq(const Lattice& l, const Table& a, const Table& b) {
  for (std::size_t x = 0; x < a.size(); ++x) {
    if (!l.leq(a[x], b[x])) return false;
  }
  return true;
}

/// Lazily computed data shared by the checks on one lattice.
class Context {
 public:
  Context(const CorpusEntry& entry, const Config& config) : entry_(entry), config_(config) {}

  const CorpusEntry& entry() const { return entry_; }
  const Config& config() const { return config_; }
  const Lattice& lat() const { return *entry_.lattice; }
  const LatticePtr& lp() const { return entry_.lattice; }

  bool enumerable() {
    load();
    return homset_.has_value();
  }

  const EndoHomset& homset() {
    load();
    if (!homset_) throw Skip{homset_error_};
    return *homset_;
  }

  std::size_t n() { return homset().size(); }

  void need_pairs() {
    if (n() > config_.pair_cap) {
      throw Skip{"|Q| = " + std::to_string(n()) + " exceeds pair cap " + std::to_string(config_.pair_cap)};
    }
  }

  void need_triples() {
    if (n() > config_.triple_cap) {
      throw Skip{"|Q| = " + std::to_string(n()) + " exceeds triple cap " + std::to_string(config_.triple_cap)};
    }
  }

  bool cd() {
    if (!cd_) cd_ = is_completely_distributive(lp());
    return *cd_;
  }

  bool distributive() {
    if (!distributive_) distributive_ = is_distributive(lat());
    return *distributive_;
  }

  const std::vector<Table>& automorphism_list() {
    if (!automorphisms_) automorphisms_ = automorphisms(lat());
    return *automorphisms_;
  }

  const std::vector<InfMap>& inf_maps() {
    if (!inf_maps_) inf_maps_ = enumerate_inf_maps(lp(), config_.max_homset);
    return *inf_maps_;
  }

  const std::vector<char>& order() {
    if (!order_) order_ = homset_order(homset());
    return *order_;
  }

  bool leq(std::size_t a, std::size_t b) { return order()[a * n() + b] != 0; }

  /// comp[g * n + f] is the index of g . f.
  const std::vector<std::size_t>& comp() {
    if (!comp_) {
      const EndoHomset& h = homset();
      const std::size_t q = h.size();
      std::vector<std::size_t> c(q * q);
      Table t(lat().size());
      for (std::size_t g = 0; g < q; ++g) {
        for (std::size_t f = 0; f < q; ++f) {
          for (std::size_t x = 0; x < t.size(); ++x) t[x] = h[g](h[f](x));
          c[g * q + f] = h.index(t);
        }
      }
      comp_ = std::move(c);
    }
    return *comp_;
  }

  /// left[g * n + h] = g\h, right[h * n + f] = h/f.
  const std::pair<std::vector<std::size_t>, std::vector<std::size_t>>& residual_tables() {
    if (!residuals_) {
      const EndoHomset& h = homset();
      const std::size_t q = h.size();
      std::vector<std::size_t> left(q * q), right(q * q);
      for (std::size_t a = 0; a < q; ++a) {
        for (std::size_t b = 0; b < q; ++b) {
          left[a * q + b] = h.index(residual_left(h[a], h[b]));
          right[a * q + b] = h.index(residual_right(h[a], h[b]));
        }
      }
      residuals_.emplace(std::move(left), std::move(right));
    }
    return *residuals_;
  }

  const TightSubset& tight() {
    if (!tight_) tight_ = enumerate_tight(homset());
    return *tight_;
  }

  const std::vector<std::size_t>& dualizing() {
    need_pairs();
    if (!dualizing_) dualizing_ = find_dualizing(homset());
    return *dualizing_;
  }

  const std::vector<std::size_t>& cyclic() {
    need_pairs();
    if (!cyclic_) cyclic_ = find_cyclic(homset());
    return *cyclic_;
  }

  const HomsetIrreducibles& irreducibles() {
    need_pairs();
    if (!irreducibles_) irreducibles_ = homset_irreducibles(homset(), order());
    return *irreducibles_;
  }

  const AutodualReport& autodual() {
    if (!autodual_) autodual_ = autodual_report(homset(), irreducibles(), config_.max_autodual);
    return *autodual_;
  }

 private:
  void load() {
    if (loaded_) return;
    loaded_ = true;
    try {
      homset_.emplace(EndoHomset::enumerate(lp(), config_.max_homset));
    } catch (const CapExceeded& e) {
      homset_error_ = e.what();
    }
  }

  const CorpusEntry& entry_;
  const Config& config_;
  bool loaded_ = false;
  std::optional<EndoHomset> homset_;
  std::string homset_error_;
  std::optional<bool> cd_;
  std::optional<bool> distributive_;
  std::optional<std::vector<Table>> automorphisms_;
  std::optional<std::vector<InfMap>> inf_maps_;
  std::optional<std::vector<char>> order_;
  std::optional<std::vector<std::size_t>> comp_;
  std::optional<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> residuals_;
  std::optional<TightSubset> tight_;
  std::optional<std::vector<std::size_t>> dualizing_;
  std::optional<std::vector<std::size_t>> cyclic_;
  std::optional<HomsetIrreducibles> irreducibles_;
  std::optional<AutodualReport> autodual_;
};

// ---------------------------------------------------------------------------
// lattice-core checks

Outcome check_lattice_axioms(Context& c) {
  const Lattice& l = c.lat();
  const Elem n = static_cast<Elem>(l.size());
  for (Elem a = 0; a < n; ++a) {
    if (!l.leq(l.bottom(), a) || !l.leq(a, l.top())) return Failure{"bounds", {{"x", a}}};
    if (l.join(a, a) != a || l.meet(a, a) != a) return Failure{"idempotence", {{"x", a}}};
    for (Elem b = 0; b < n; ++b) {
      const Elem j = l.join(a, b);
      const Elem m = l.meet(a, b);
      if (j != l.join(b, a) || m != l.meet(b, a)) return Failure{"commutativity", {{"x", a}, {"y", b}}};
      if (!l.leq(a, j) || !l.leq(b, j) || !l.leq(m, a) || !l.leq(m, b)) {
        return Failure{"join/meet not a bound", {{"x", a}, {"y", b}}};
      }
      if (l.join(a, m) != a || l.meet(a, j) != a) return Failure{"absorption", {{"x", a}, {"y", b}}};
      for (Elem z = 0; z < n; ++z) {
        if (l.leq(a, z) && l.leq(b, z) && !l.leq(j, z)) {
          return Failure{"join is not least", {{"x", a}, {"y", b}, {"z", z}}};
        }
        if (l.leq(z, a) && l.leq(z, b) && !l.leq(z, m)) {
          return Failure{"meet is not greatest", {{"x", a}, {"y", b}, {"z", z}}};
        }
        if (l.join(l.join(a, b), z) != l.join(a, l.join(b, z)) ||
            l.meet(l.meet(a, b), z) != l.meet(a, l.meet(b, z))) {
          return Failure{"associativity", {{"x", a}, {"y", b}, {"z", z}}};
        }
      }
    }
  }
  return std::nullopt;
}

Outcome check_dual_involution(Context& c) {
  const Lattice& l = c.lat();
  const Lattice d = dual(l);
  for (Elem a = 0; a < l.size(); ++a) {
    for (Elem b = 0; b < l.size(); ++b) {
      if (d.leq(a, b) != l.leq(b, a) || d.join(a, b) != l.meet(a, b)) {
        return Failure{"dual does not reverse the order", {{"x", a}, {"y", b}}};
      }
    }
  }
  if (!(dual(d) == l)) return Failure{"dual(dual(L)) differs from L", json::object()};
  return std::nullopt;
}

Outcome check_distributive_iff_cd(Context& c) {
  if (c.distributive() != c.cd()) {
    return Failure{"distributivity and v^id = id disagree",
                   {{"distributive", c.distributive()}, {"completely_distributive", c.cd()}}};
  }
  return std::nullopt;
}

Outcome check_irreducibles_covers(Context& c) {
  const Lattice& l = c.lat();
  std::vector<Elem> joins, meets;
  for (Elem x = 0; x < l.size(); ++x) {
    Elem below = l.bottom();
    Elem above = l.top();
    for (Elem y = 0; y < l.size(); ++y) {
      if (l.less(y, x)) below = l.join(below, y);
      if (l.less(x, y)) above = l.meet(above, y);
    }
    if (x != l.bottom() && below != x) joins.push_back(x);
    if (x != l.top() && above != x) meets.push_back(x);
  }
  if (join_irreducibles(l).members != joins) {
    return Failure{"J(L) by covers differs from the direct scan",
                   {{"covers", join_irreducibles(l).members}, {"scan", joins}}};
  }
  if (meet_irreducibles(l).members != meets) {
    return Failure{"M(L) by covers differs from the direct scan",
                   {{"covers", meet_irreducibles(l).members}, {"scan", meets}}};
  }
  return std::nullopt;
}

Outcome check_downset_irreducibles(Context& c) {
  if (!c.entry().poset) throw Skip{"not a downset lattice"};
  const DownsetLattice rep = downset_representation(*c.entry().poset);
  Table principal = rep.principal;
  std::sort(principal.begin(), principal.end());
  const auto joins = join_irreducibles(rep.lattice).members;
  if (joins != principal || joins.size() != rep.poset.size()) {
    return Failure{"join-irreducibles are not the principal downsets", {{"joins", joins}, {"principal", principal}}};
  }
  return std::nullopt;
}

Outcome check_automorphism_group(Context& c) {
  const Lattice& l = c.lat();
  const auto& autos = c.automorphism_list();
  const Table id = identity_map(c.lp()).table();
  if (autos.empty() || autos.front() != id) return Failure{"identity missing", json::object()};
  std::set<Table> group(autos.begin(), autos.end());
  for (const Table& g : autos) {
    if (!is_lattice_automorphism(l, g)) return Failure{"not an automorphism", {{"map", tab(g)}}};
    for (const Table& h : autos) {
      Table gh(g.size());
      for (std::size_t x = 0; x < g.size(); ++x) gh[x] = g[h[x]];
      if (!group.count(gh)) return Failure{"not closed under composition", {{"g", tab(g)}, {"h", tab(h)}}};
    }
  }
  if (l.size() <= 8) {
    Table perm = id;
    std::size_t brute = 0;
    do {
      brute += is_lattice_automorphism(l, perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (brute != autos.size()) {
      return Failure{"search and permutation scan disagree", {{"search", autos.size()}, {"scan", brute}}};
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// order-maps checks

Outcome check_galois_law(Context& c) {
  const Lattice& l = c.lat();
  for (const SupMap& f : c.homset()) {
    const InfMap r = right_adjoint(f);
    for (Elem x = 0; x < l.size(); ++x) {
      for (Elem y = 0; y < l.size(); ++y) {
        if (l.leq(f(x), y) != l.leq(x, r(y))) {
          return Failure{"f(x) <= y and x <= rho f(y) disagree", {{"f", tab(f.table())}, {"x", x}, {"y", y}}};
        }
      }
    }
    if (left_adjoint(r).table() != f.table()) return Failure{"lambda(rho f) != f", {{"f", tab(f.table())}}};
  }
  for (const InfMap& g : c.inf_maps()) {
    if (right_adjoint(left_adjoint(g)).table() != g.table()) {
      return Failure{"rho(lambda g) != g", {{"g", tab(g.table())}}};
    }
  }
  return std::nullopt;
}

Outcome check_lemma_tensors(Context& c) {
  const Lattice& l = c.lat();
  const LatticePtr& lp = c.lp();
  for (Elem y = 0; y < l.size(); ++y) {
    const SupMap cy = c_map(lp, y);
    const InfMap gy = gamma_map(lp, y);
    for (Elem x = 0; x < l.size(); ++x) {
      const SupMap ax = a_map(lp, x);
      const json w = {{"x", x}, {"y", y}};
      if (tensor_over(lp, y, x).table() != pointwise_join(cy, ax).table()) return Failure{"y (x) x != c_y v a_x", w};
      Table meet(l.size());
      for (Elem t = 0; t < l.size(); ++t) meet[t] = l.meet(cy(t), ax(t));
      const SupMap e = e_map(lp, y, x);
      if (e.table() != meet || e.table() != compose(cy, ax).table()) return Failure{"e_{y,x} != c_y ^ a_x", w};
      if (tensor_under(lp, y, x).table() != pointwise_meet(gy, alpha_map(lp, x)).table()) {
        return Failure{"inf tensor != gamma_y ^ alpha_x", w};
      }
      if (!c.homset().index_of(e.table())) return Failure{"e_{y,x} is not sup-preserving", w};
    }
    if (cy.table() != tensor_over(lp, y, l.top()).table()) return Failure{"c_y != y (x) top", {{"y", y}}};
    if (a_map(lp, y).table() != tensor_over(lp, l.bottom(), y).table()) {
      return Failure{"a_x != bot (x) x", {{"x", y}}};
    }
  }
  for (const SupMap& f : c.homset()) {
    for (Elem x = 0; x < l.size(); ++x) {
      for (Elem y = 0; y < l.size(); ++y) {
        if (!characterization_check(f, x, y).holds()) {
          return Failure{"f(x) <= y and f <= y (x) x disagree", {{"f", tab(f.table())}, {"x", x}, {"y", y}}};
        }
      }
    }
  }
  return std::nullopt;
}

Outcome check_canonical_meet(Context& c) {
  const LatticePtr& lp = c.lp();
  for (const SupMap& f : c.homset()) {
    std::vector<SupMap> parts;
    for (Elem x = 0; x < lp->size(); ++x) parts.push_back(tensor_over(lp, f(x), x));
    if (q_meet(lp, lp, parts).table() != f.table()) {
      return Failure{"Q-meet of f(x) (x) x differs from f", {{"f", tab(f.table())}}};
    }
  }
  return std::nullopt;
}

Outcome check_inf_tensor_join(Context& c) {
  const Lattice& l = c.lat();
  for (const InfMap& g : c.inf_maps()) {
    Table acc(l.size(), l.bottom());
    for (Elem x = 0; x < l.size(); ++x) acc = pointwise_join_tables(l, acc, tensor_under(c.lp(), g(x), x).table());
    if (acc != g.table()) return Failure{"join of g(x) inf-tensor x differs from g", {{"g", tab(g.table())}}};
  }
  return std::nullopt;
}

Outcome check_bimorphism_extension(Context& c) {
  const Lattice& l = c.lat();
  const LatticePtr& lp = c.lp();
  std::vector<Table> e(l.size() * l.size());
  for (Elem y = 0; y < l.size(); ++y) {
    for (Elem x = 0; x < l.size(); ++x) e[y * l.size() + x] = e_map(lp, y, x).table();
  }
  const Table bottom(l.size(), l.bottom());
  for (const InfMap& g : c.inf_maps()) {
    const Table down = raney_down(g).table();
    const Table ext = extend_bimorphism<Table>(
        g, [&](Elem y, Elem x) { return e[y * l.size() + x]; }, bottom,
        [&](const Table& a, const Table& b) { return pointwise_join_tables(l, a, b); });
    if (ext != down) return Failure{"extension of e along g differs from v g", {{"g", tab(g.table())}}};
    for (Elem t = 0; t < l.size(); ++t) {
      const Elem v = extend_bimorphism(g, l, [&](Elem y, Elem x) { return e[y * l.size() + x][t]; });
      if (v != down[t]) {
        return Failure{"pointwise extension differs from v g", {{"g", tab(g.table())}, {"t", t}}};
      }
    }
  }
  return std::nullopt;
}

std::vector<Table> monotone_maps(const Lattice& l, std::size_t cap) {
  std::vector<Table> out;
  Table t(l.size());
  std::function<void(std::size_t)> rec = [&](std::size_t x) {
    if (out.size() >= cap) return;
    if (x == l.size()) {
      if (!monotonicity_failure(l, l, t)) out.push_back(t);
      return;
    }
    for (Elem v = 0; v < l.size(); ++v) {
      bool ok = true;
      for (Elem z = 0; z < x && ok; ++z) {
        if (l.leq(z, static_cast<Elem>(x)) && !l.leq(t[z], v)) ok = false;
        if (l.leq(static_cast<Elem>(x), z) && !l.leq(v, t[z])) ok = false;
      }
      if (!ok) continue;
      t[x] = v;
      rec(x + 1);
    }
  };
  rec(0);
  return out;
}

Outcome check_sup_interior(Context& c) {
  const Lattice& l = c.lat();
  const LatticePtr& lp = c.lp();
  const EndoHomset& h = c.homset();
  std::vector<Table> ks;
  if (l.size() <= 5) {
    ks = monotone_maps(l, 100'000);
  } else {
    const std::size_t m = std::min<std::size_t>(h.size(), 60);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = i; j < m; ++j) ks.push_back(pointwise_meet(h[i].as_monotone(), h[j].as_monotone()).table());
    }
  }
  std::vector<Table> interiors;
  for (const Table& k : ks) {
    const SupMap s = sup_interior(MonotoneMap::unchecked(lp, lp, k));
    Table oracle(l.size(), l.bottom());
    for (const SupMap& f : h) {
      if (tables_leq(l, f.table(), k)) oracle = pointwise_join_tables(l, oracle, f.table());
    }
    const json w = {{"k", tab(k)}, {"interior", tab(s.table())}, {"oracle", tab(oracle)}};
    if (s.table() != oracle) return Failure{"differs from the greatest enumerated map below k", w};
    if (!tables_leq(l, s.table(), k)) return Failure{"not deflationary", w};
    if (sup_interior(s.as_monotone()).table() != s.table()) return Failure{"not idempotent", w};
    interiors.push_back(s.table());
  }
  const std::size_t m = std::min<std::size_t>(ks.size(), 300);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (tables_leq(l, ks[i], ks[j]) && !tables_leq(l, interiors[i], interiors[j])) {
        return Failure{"not monotone", {{"k1", tab(ks[i])}, {"k2", tab(ks[j])}}};
      }
    }
  }
  return std::nullopt;
}

Outcome check_factorization(Context& c) {
  for (const SupMap& f : c.homset()) {
    if (!factorize(f).verified) return Failure{"factorization does not recompose to f", {{"f", tab(f.table())}}};
  }
  return std::nullopt;
}

Outcome check_naturality(Context& c) {
  c.need_pairs();
  const Lattice& l = c.lat();
  const LatticePtr& lp = c.lp();
  const EndoHomset& h = c.homset();
  const std::size_t m = l.size();
  std::vector<Table> rho;
  for (const SupMap& g : h) rho.push_back(right_adjoint(g).table());
  for (std::size_t i = 0; i < h.size(); ++i) {
    const SupMap& f = h[i];
    for (Elem y = 0; y < m; ++y) {
      if (compose(f, c_map(lp, y)).table() != c_map(lp, f(y)).table()) {
        return Failure{"f . c_y != c_f(y)", {{"f", tab(f.table())}, {"y", y}}};
      }
      if (compose(a_map(lp, y), f).table() != a_map(lp, rho[i][y]).table()) {
        return Failure{"a_x . g != a_rho g(x)", {{"g", tab(f.table())}, {"x", y}}};
      }
    }
  }
  for (std::size_t fi = 0; fi < h.size(); ++fi) {
    const Table& f = h[fi].table();
    for (std::size_t gi = 0; gi < h.size(); ++gi) {
      const Table& g = h[gi].table();
      for (Elem y = 0; y < m; ++y) {
        for (Elem x = 0; x < m; ++x) {
          const Elem fy = f[y];
          const Elem rx = rho[gi][x];
          for (Elem t = 0; t < m; ++t) {
            const Elem lhs = f[l.leq(g[t], x) ? l.bottom() : y];
            const Elem rhs = l.leq(t, rx) ? l.bottom() : fy;
            if (lhs != rhs) {
              return Failure{"f . e_{y,x} . g != e_{f(y), rho g(x)}",
                             {{"f", tab(f)}, {"g", tab(g)}, {"x", x}, {"y", y}}};
            }
          }
        }
      }
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// endo-quantale checks

Outcome check_residual_adjunction(Context& c) {
  c.need_triples();
  const std::size_t n = c.n();
  const auto& comp = c.comp();
  const auto& [left, right] = c.residual_tables();
  const EndoHomset& hs = c.homset();
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t f = 0; f < n; ++f) {
      const std::size_t gf = comp[g * n + f];
      for (std::size_t h = 0; h < n; ++h) {
        const bool a = c.leq(gf, h);
        const bool b = c.leq(f, left[g * n + h]);
        const bool d = c.leq(g, right[h * n + f]);
        if (a != b || a != d) {
          return Failure{"g.f <= h, f <= g\\h, g <= h/f disagree",
                         {{"f", tab(hs[f].table())}, {"g", tab(hs[g].table())}, {"h", tab(hs[h].table())}}};
        }
      }
    }
  }
  return std::nullopt;
}

Outcome check_residual_oracle(Context& c) {
  c.need_triples();
  const std::size_t n = c.n();
  const auto& comp = c.comp();
  const auto& [left, right] = c.residual_tables();
  const EndoHomset& hs = c.homset();
  const Lattice& l = c.lat();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      // g = a, h = b: join of f with g.f <= h
      Table best(l.size(), l.bottom());
      for (std::size_t f = 0; f < n; ++f) {
        if (c.leq(comp[a * n + f], b)) best = pointwise_join_tables(l, best, hs[f].table());
      }
      if (best != hs[left[a * n + b]].table()) {
        return Failure{"g\\h differs from the brute-force maximum",
                       {{"g", tab(hs[a].table())}, {"h", tab(hs[b].table())}, {"oracle", tab(best)}}};
      }
      // h = a, f = b: join of g with g.f <= h
      std::fill(best.begin(), best.end(), l.bottom());
      for (std::size_t g = 0; g < n; ++g) {
        if (c.leq(comp[g * n + b], a)) best = pointwise_join_tables(l, best, hs[g].table());
      }
      if (best != hs[right[a * n + b]].table()) {
        return Failure{"h/f differs from the brute-force maximum",
                       {{"h", tab(hs[a].table())}, {"f", tab(hs[b].table())}, {"oracle", tab(best)}}};
      }
    }
  }
  return std::nullopt;
}

Outcome check_division_lemmas(Context& c) {
  const Lattice& l = c.lat();
  const LatticePtr& lp = c.lp();
  for (const SupMap& f : c.homset()) {
    const InfMap up = raney_up(f);
    const SupMap s = star(f);
    for (Elem v = 0; v < l.size(); ++v) {
      const json w = {{"f", tab(f.table())}, {"element", v}};
      if (residual_right(f, a_map(lp, v)).table() != c_map(lp, up(v)).table()) return Failure{"f/a_x != c_{^f(x)}", w};
      if (residual_left(c_map(lp, v), f).table() != a_map(lp, s(v)).table()) return Failure{"c_y\\f != a_{f*(y)}", w};
      if (residual_right(f, c_map(lp, v)).table() != tensor_over(lp, up(l.bottom()), v).table()) {
        return Failure{"f/c_y != ^f(bot) (x) y", w};
      }
      if (residual_left(a_map(lp, v), f).table() != tensor_over(lp, v, s(l.top())).table()) {
        return Failure{"a_x\\f != x (x) f*(top)", w};
      }
    }
  }
  return std::nullopt;
}

Outcome check_prop_divisions(Context& c) {
  const Lattice& l = c.lat();
  const LatticePtr& lp = c.lp();
  for (const SupMap& f : c.homset()) {
    for (Elem x = 0; x < l.size(); ++x) {
      for (Elem y = 0; y < l.size(); ++y) {
        const DivisionFormulas d = division_formulas(f, x, y);
        const SupMap e = e_map(lp, y, x);
        const SupMap t = tensor_over(lp, y, x);
        const json w = {{"f", tab(f.table())}, {"x", x}, {"y", y}};
        if (d.right_by_e.table() != residual_right(f, e).table()) return Failure{"f/e_{y,x}", w};
        if (d.left_by_e.table() != residual_left(e, f).table()) return Failure{"e_{y,x}\\f", w};
        if (d.right_by_tensor.table() != residual_right(f, t).table()) return Failure{"f/(y (x) x)", w};
        if (d.left_by_tensor.table() != residual_left(t, f).table()) return Failure{"(y (x) x)\\f", w};
      }
    }
  }
  return std::nullopt;
}

Outcome check_transform_tensors(Context& c) {
  const Lattice& l = c.lat();
  const LatticePtr& lp = c.lp();
  for (const SupMap& f : c.homset()) {
    const InfMap up = raney_up(f);
    const SupMap s = star(f);
    const bool right_applies = up(l.bottom()) == l.bottom();
    const bool left_applies = s(l.top()) == l.top();
    if (!right_applies && !left_applies) continue;
    for (Elem x = 0; x < l.size(); ++x) {
      for (Elem y = 0; y < l.size(); ++y) {
        const SupMap t = tensor_over(lp, y, x);
        const json w = {{"f", tab(f.table())}, {"x", x}, {"y", y}};
        if (right_applies &&
            residual_right(f, t).table() != compose(c_map(lp, up(x)), a_map(lp, y)).table()) {
          return Failure{"f/(y (x) x) != c_{^f(x)} . a_y", w};
        }
        if (left_applies && residual_left(t, f).table() != compose(c_map(lp, x), a_map(lp, s(y))).table()) {
          return Failure{"(y (x) x)\\f != c_x . a_{f*(y)}", w};
        }
      }
    }
  }
  return std::nullopt;
}

Outcome check_adjunction_formulas(Context& c) {
  const Lattice& l = c.lat();
  for (const SupMap& f : c.homset()) {
    for (Elem x = 0; x < l.size(); ++x) {
      for (Elem y = 0; y < l.size(); ++y) {
        const auto eqs = adjunction_formulas(f, x, y);
        for (std::size_t i = 0; i < eqs.size(); ++i) {
          if (!eqs[i].holds()) {
            return Failure{"equivalence " + std::to_string(i) + " fails",
                           {{"f", tab(f.table())}, {"x", x}, {"y", y}, {"index", i}}};
          }
        }
      }
    }
  }
  return std::nullopt;
}

Outcome check_relation_dual(Context& c) {
  const Lattice& l = c.lat();
  for (const SupMap& f : c.homset()) {
    for (Elem x = 0; x < l.size(); ++x) {
      for (Elem y = 0; y < l.size(); ++y) {
        const auto p = relation_dual_profile(f, x, y);
        if (std::any_of(p.begin(), p.end(), [&](bool b) { return b != p[0]; })) {
          return Failure{"the six conditions disagree", {{"f", tab(f.table())}, {"x", x}, {"y", y}, {"profile", p}}};
        }
      }
    }
  }
  return std::nullopt;
}

Outcome check_raney_adjunction(Context& c) {
  c.need_pairs();
  const Lattice& l = c.lat();
  std::vector<Table> ups;
  for (const SupMap& f : c.homset()) ups.push_back(raney_up(f).table());
  for (const InfMap& g : c.inf_maps()) {
    const Table down = raney_down(g).table();
    for (std::size_t i = 0; i < ups.size(); ++i) {
      const Table& f = c.homset()[i].table();
      if (tables_leq(l, down, f) != tables_leq(l, g.table(), ups[i])) {
        return Failure{"v g <= f and g <= ^f disagree", {{"f", tab(f)}, {"g", tab(g.table())}}};
      }
    }
  }
  return std::nullopt;
}

Outcome check_raney_adjoint_commute(Context& c) {
  for (const InfMap& g : c.inf_maps()) {
    if (right_adjoint(raney_down(g)).table() != raney_up(left_adjoint(g)).table()) {
      return Failure{"rho(v g) != ^(lambda g)", {{"g", tab(g.table())}}};
    }
  }
  for (const SupMap& f : c.homset()) {
    if (left_adjoint(raney_up(f)).table() != raney_down(right_adjoint(f)).table()) {
      return Failure{"lambda(^f) != v(rho f)", {{"f", tab(f.table())}}};
    }
  }
  return std::nullopt;
}

Outcome check_raney_theorem(Context& c) {
  const SupMap id = identity_map(c.lp());
  const bool fixed = raney_down(raney_up(id)).table() == id.table();
  if (fixed != c.distributive()) {
    return Failure{"v^id = id disagrees with distributivity", {{"v^id", tab(tight_interior(id).table())}}};
  }
  return std::nullopt;
}

Outcome check_tight_bi_ideal(Context& c) {
  c.need_pairs();
  const EndoHomset& h = c.homset();
  const TightSubset& t = c.tight();
  const std::size_t n = h.size();
  const auto& comp = c.comp();
  const Lattice& l = c.lat();
  for (std::size_t f = 0; f < n; ++f) {
    const SupMap in = tight_interior(h[f]);
    const std::size_t ii = h.index(in);
    if (!t.contains(ii) || !c.leq(ii, f) || tight_interior(in).table() != in.table()) {
      return Failure{"v^ is not an interior onto the tight maps", {{"f", tab(h[f].table())}}};
    }
  }
  for (std::size_t ti : t.members) {
    for (std::size_t f = 0; f < n; ++f) {
      if (!t.contains(comp[f * n + ti]) || !t.contains(comp[ti * n + f])) {
        return Failure{"tight maps are not a bi-ideal", {{"tight", tab(h[ti].table())}, {"f", tab(h[f].table())}}};
      }
    }
    for (std::size_t tj : t.members) {
      if (!t.contains(h.index(pointwise_join_tables(l, h[ti].table(), h[tj].table())))) {
        return Failure{"tight maps are not closed under joins",
                       {{"t1", tab(h[ti].table())}, {"t2", tab(h[tj].table())}}};
      }
    }
  }
  std::set<std::size_t> image;
  for (const InfMap& g : c.inf_maps()) image.insert(h.index(raney_down(g)));
  const bool surjective = image.size() == n;
  if (surjective != is_tight(identity_map(c.lp()))) {
    return Failure{"v is onto Q exactly when id is tight fails", {{"image_size", image.size()}, {"homset_size", n}}};
  }
  return std::nullopt;
}

Outcome check_tight_unit(Context& c) {
  c.need_pairs();
  const auto unit = tight_has_unit(c.homset(), c.tight());
  if (unit.has_value() != c.cd()) {
    return Failure{"tight maps have a unit iff L is CD fails",
                   {{"unit", unit ? tab(unit->table()) : json(nullptr)}, {"cd", c.cd()}}};
  }
  if (unit && unit->table() != identity_map(c.lp()).table()) {
    return Failure{"unit of the tight maps is not id", {{"unit", tab(unit->table())}}};
  }
  if (c.distributive() && c.tight().size() != c.n()) {
    return Failure{"distributive L with non-tight maps", {{"tight", c.tight().size()}, {"homset", c.n()}}};
  }
  return std::nullopt;
}

Outcome check_conucleus_gap(Context& c) {
  c.need_pairs();
  const auto gap = conucleus_gap(c.homset());
  if (gap.has_value() == c.cd()) {
    json w = {{"cd", c.cd()}};
    if (gap) w["pair"] = {tab(gap->first.table()), tab(gap->second.table())};
    return Failure{"conucleus gap exists iff L is not CD fails", w};
  }
  return std::nullopt;
}

Outcome check_dualizing_iff_cd(Context& c) {
  const auto& d = c.dualizing();
  if (!d.empty() && !c.cd()) return Failure{"dualizing element on a non-CD lattice", {{"f", tab(c.homset()[d[0]].table())}}};
  if (d.empty() && c.cd()) return Failure{"no dualizing element on a CD lattice", json::object()};
  for (std::size_t i : d) {
    try {
      dualizing_to_automorphism(c.homset(), c.homset()[i]);
    } catch (const Error& e) {
      return Failure{e.what(), {{"f", tab(c.homset()[i].table())}}};
    }
  }
  return std::nullopt;
}

Outcome check_thm_bijection(Context& c) {
  const auto& d = c.dualizing();
  const EndoHomset& h = c.homset();
  if (!c.cd()) {
    if (!d.empty()) return Failure{"dualizing elements on a non-CD lattice", {{"count", d.size()}}};
    return std::nullopt;
  }
  const auto& autos = c.automorphism_list();
  if (d.size() != autos.size()) {
    return Failure{"dualizing count differs from automorphism count", {{"dualizing", d.size()}, {"automorphisms", autos.size()}}};
  }
  std::set<Table> stars;
  for (std::size_t i : d) {
    const Table s = dualizing_to_automorphism(h, h[i]);
    stars.insert(s);
    if (automorphism_to_dualizing(h, s).table() != h[i].table()) {
      return Failure{"o/star(f) != f", {{"f", tab(h[i].table())}}};
    }
  }
  if (stars != std::set<Table>(autos.begin(), autos.end())) {
    return Failure{"star does not map dualizing elements onto automorphisms", json::object()};
  }
  for (const Table& a : autos) {
    const SupMap f = automorphism_to_dualizing(h, a);
    if (!std::binary_search(d.begin(), d.end(), h.index(f)) || star(f).table() != a) {
      return Failure{"o/h is not a dualizing preimage of h", {{"h", tab(a)}}};
    }
  }
  return std::nullopt;
}

Outcome check_dualizing_inverse(Context& c) {
  if (!c.cd()) return std::nullopt;
  const auto& d = c.dualizing();
  const EndoHomset& h = c.homset();
  for (std::size_t i = 0; i < h.size(); ++i) {
    const Table s = star(h[i]).table();
    Table inv(s.size(), 0);
    std::vector<char> hit(s.size(), 0);
    bool bijective = true;
    for (std::size_t x = 0; x < s.size(); ++x) {
      if (hit[s[x]]) bijective = false;
      hit[s[x]] = 1;
      inv[s[x]] = static_cast<Elem>(x);
    }
    bool invertible = false;
    if (bijective) {
      if (auto j = h.index_of(inv)) {
        const Table id = identity_map(c.lp()).table();
        invertible = compose(h[*j], star(h[i])).table() == id && compose(star(h[i]), h[*j]).table() == id;
      }
    }
    if (invertible != std::binary_search(d.begin(), d.end(), i)) {
      return Failure{"f dualizing iff f* invertible fails", {{"f", tab(h[i].table())}, {"invertible", invertible}}};
    }
  }
  return std::nullopt;
}

Outcome check_dualizing_unit(Context& c) {
  const EndoHomset& h = c.homset();
  for (std::size_t i : c.dualizing()) {
    if (residual_left(h[i], h[i]).table() != h[h.identity_index()].table()) {
      return Failure{"f\\f is not the unit for dualizing f", {{"f", tab(h[i].table())}}};
    }
  }
  return std::nullopt;
}

Outcome check_girard(Context& c) {
  const EndoHomset& h = c.homset();
  const auto& d = c.dualizing();
  const auto& cyc = c.cyclic();
  bool girard = false;
  for (std::size_t i : d) girard = girard || std::binary_search(cyc.begin(), cyc.end(), i);
  if (girard != c.cd()) return Failure{"Girard iff CD fails", {{"girard", girard}, {"cd", c.cd()}}};
  if (girard != is_girard(h)) return Failure{"is_girard disagrees with the searches", json::object()};
  if (!std::binary_search(cyc.begin(), cyc.end(), h.top_index())) {
    return Failure{"top of Q is not cyclic", json::object()};
  }
  if (c.cd()) {
    const std::size_t o = h.index(canonical_dualizing(c.lp()));
    if (!std::binary_search(cyc.begin(), cyc.end(), o) || !std::binary_search(d.begin(), d.end(), o)) {
      return Failure{"o = v id is not cyclic and dualizing", {{"o", tab(h[o].table())}}};
    }
  } else if (cyc.size() != 1) {
    json extra = json::array();
    for (std::size_t i : cyc) {
      if (i != h.top_index()) extra.push_back(tab(h[i].table()));
    }
    return Failure{"non-CD lattice with a cyclic element other than top", {{"cyclic", extra}}};
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// structures checks

Outcome check_homset_irreducibles(Context& c) {
  const HomsetIrreducibles& r = c.irreducibles();
  const json w = {{"J(Q)", r.joins.size()},       {"M(Q)", r.meets.size()},
                  {"J(L)", r.lattice_joins},       {"M(L)", r.lattice_meets}};
  if (!r.meets_are_tensors) return Failure{"M(Q) is not the set of m (x) j", w};
  if (!r.elementary_join_irreducible) return Failure{"some e_{j,m} is not join-irreducible", w};
  if (!r.elementary_distinct || !r.tensors_distinct) return Failure{"generators not pairwise distinct", w};
  if (c.distributive()) {
    if (r.joins.size() != r.product() || r.meets.size() != r.product()) {
      return Failure{"|J(Q)| or |M(Q)| differs from |J(L)||M(L)| on a distributive lattice", w};
    }
  } else if (r.joins.size() <= r.product()) {
    return Failure{"|J(Q)| not above |J(L)||M(L)| on a non-distributive lattice", w};
  }
  return std::nullopt;
}

Outcome check_autodual(Context& c) {
  const AutodualReport& a = c.autodual();
  if (a.verdict == AutodualVerdict::inconclusive) throw Skip{a.reason};
  if (a.verdict == AutodualVerdict::autodual) {
    if (!a.witness || !is_anti_automorphism(c.order(), *a.witness)) {
      return Failure{"autodual witness does not reverse the order", json::object()};
    }
    if (!c.distributive()) return Failure{"Q autodual on a non-distributive lattice", {{"reason", a.reason}}};
  }
  return std::nullopt;
}

Outcome check_natural_arrows(Context& c) {
  c.need_pairs();
  const NaturalClassification nc = classify_natural(c.homset());
  const std::size_t expected = c.lat().size() == 1 ? 1 : 2;
  if (nc.count() != expected || !nc.has_trivial || !nc.has_raney) {
    return Failure{"natural arrows are not exactly the trivial one and e",
                   {{"count", nc.count()}, {"trivial", nc.has_trivial}, {"raney", nc.has_raney}}};
  }
  return std::nullopt;
}

Outcome check_abstract_raney(Context& c) {
  const EndoHomset& h = c.homset();
  const LatticePtr& lp = c.lp();
  BimorphismFamily inner;
  inner.kind = FamilyKind::inner;
  inner.lattice_map = identity_map(lp).table();
  for (Elem x = 0; x < lp->size(); ++x) inner.homset_map.push_back(h.index(a_map(lp, x)));
  const std::pair<const char*, BimorphismFamily> families[] = {{"outer", elementary_family(h)}, {"inner", inner}};
  for (const auto& [name, fam] : families) {
    const AbstractRaneyResult r = abstract_raney_check(h, fam);
    const json w = {{"family", name},           {"chain_images", r.chain_images}, {"bimorphism", r.bimorphism},
                    {"id_in_image", r.id_in_image}, {"cd", r.completely_distributive}};
    if (!r.chain_images || r.max_image_size > 2) return Failure{"psi(y,x) is not two-valued", w};
    if (!r.bimorphism) return Failure{"psi is not a bimorphism", w};
    if (!r.implication_holds()) return Failure{"id in the image of the extension on a non-CD lattice", w};
    if (r.id_in_image != r.completely_distributive) return Failure{"id in image differs from CD for e", w};
  }
  return std::nullopt;
}

Outcome check_weakening_relations(Context& c) {
  if (!c.entry().poset) throw Skip{"not a downset lattice"};
  const Poset& p = *c.entry().poset;
  const DownsetSpace space = DownsetSpace::of(p);
  const EndoHomset h = EndoHomset::enumerate(space.lattice, c.config().max_homset);
  const std::size_t n = p.size();

  std::vector<WeakeningRelation> rels;
  std::set<std::vector<char>> seen;
  for (const SupMap& f : h) {
    WeakeningRelation r = wk_from_supmap(space, f);
    if (supmap_from_wk(space, r).table() != f.table()) return Failure{"relation does not translate back", {{"f", tab(f.table())}}};
    seen.insert(r.matrix());
    rels.push_back(std::move(r));
  }
  if (seen.size() != h.size()) return Failure{"translation is not injective", json::object()};
  // every down-closed relation arises
  std::size_t down_closed = 0;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (n * n)); ++bits) {
    std::vector<char> m(n * n);
    for (std::size_t i = 0; i < n * n; ++i) m[i] = bits >> i & 1;
    try {
      WeakeningRelation r(p, m);
      ++down_closed;
      if (!seen.count(r.matrix())) return Failure{"down-closed relation without a map", weakening_to_json(r)};
    } catch (const Error& e) {
      if (e.code() != ErrorCode::not_down_closed) throw;
    }
  }
  if (down_closed != h.size()) return Failure{"counts differ", {{"relations", down_closed}, {"maps", h.size()}}};

  auto subset = [&](const WeakeningRelation& a, const WeakeningRelation& b) {
    for (std::size_t i = 0; i < n * n; ++i) {
      if (a.matrix()[i] && !b.matrix()[i]) return false;
    }
    return true;
  };
  for (std::size_t i = 0; i < h.size(); ++i) {
    for (std::size_t j = 0; j < h.size(); ++j) {
      if (pointwise_leq(h[i], h[j]) != subset(rels[i], rels[j])) {
        return Failure{"translation is not an order isomorphism", {{"f", tab(h[i].table())}, {"g", tab(h[j].table())}}};
      }
      const std::size_t gf = h.index(compose(h[i], h[j]));
      if (!(rels[gf] == wk_compose(rels[i], rels[j]))) {
        return Failure{"R_{g.f} != R_g ; R_f", {{"g", tab(h[i].table())}, {"f", tab(h[j].table())}}};
      }
    }
  }

  const LatticePtr& d = space.lattice;
  const auto expect = [&](const SupMap& f, auto pred, const char* what) -> Outcome {
    const WeakeningRelation r = wk_from_supmap(space, f);
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t x = 0; x < n; ++x) {
        if (r.contains(y, x) != pred(y, x)) return Failure{what, weakening_to_json(r)};
      }
    }
    return std::nullopt;
  };
  if (auto o = expect(identity_map(d), [&](std::size_t y, std::size_t x) { return p.leq(y, x); }, "R_id != <=")) return o;
  if (auto o = expect(bottom_map(d, d), [](std::size_t, std::size_t) { return false; }, "R_bot is not empty")) return o;
  if (auto o = expect(canonical_dualizing(d), [&](std::size_t y, std::size_t x) { return !p.leq(x, y); },
                      "R_o != { (y,x) : x not<= y }")) {
    return o;
  }

  for (const Table& g : poset_automorphisms(p)) {
    const SupMap f = supmap_from_wk(space, wk_from_automorphism(p, g));
    if (!is_dualizing(h, f)) return Failure{"relation of an automorphism is not dualizing", {{"g", tab(g)}}};
    if (star(f).table() != induced_automorphism(space, g)) {
      return Failure{"star differs from the induced automorphism", {{"g", tab(g)}}};
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------

using CheckFn = Outcome (*)(Context&);

const std::vector<std::pair<std::string, CheckFn>>& lattice_checks() {
  static const std::vector<std::pair<std::string, CheckFn>> checks = {
      {"lattice-axioms", check_lattice_axioms},
      {"dual-involution", check_dual_involution},
      {"distributive-iff-cd", check_distributive_iff_cd},
      {"irreducibles-covers", check_irreducibles_covers},
      {"downset-irreducibles", check_downset_irreducibles},
      {"automorphism-group", check_automorphism_group},
      {"galois-law", check_galois_law},
      {"lemma-tensors", check_lemma_tensors},
      {"canonical-meet", check_canonical_meet},
      {"inf-tensor-join", check_inf_tensor_join},
      {"bimorphism-extension", check_bimorphism_extension},
      {"sup-interior", check_sup_interior},
      {"factorization", check_factorization},
      {"naturality", check_naturality},
      {"residual-adjunction", check_residual_adjunction},
      {"residual-oracle", check_residual_oracle},
      {"division-lemmas", check_division_lemmas},
      {"prop-divisions", check_prop_divisions},
      {"transform-tensors", check_transform_tensors},
      {"adjunction-formulas", check_adjunction_formulas},
      {"relation-dual", check_relation_dual},
      {"raney-adjunction", check_raney_adjunction},
      {"raney-adjoint-commute", check_raney_adjoint_commute},
      {"raney-theorem", check_raney_theorem},
      {"tight-bi-ideal", check_tight_bi_ideal},
      {"tight-unit", check_tight_unit},
      {"conucleus-gap", check_conucleus_gap},
      {"dualizing-iff-cd", check_dualizing_iff_cd},
      {"thm-bijection", check_thm_bijection},
      {"dualizing-inverse", check_dualizing_inverse},
      {"dualizing-unit", check_dualizing_unit},
      {"girard", check_girard},
      {"homset-irreducibles", check_homset_irreducibles},
      {"autodual", check_autodual},
      {"natural-arrows", check_natural_arrows},
      {"abstract-raney", check_abstract_raney},
      {"weakening-relations", check_weakening_relations},
  };
  return checks;
}

template <class Fn>
CheckResult timed(const std::string& id, Fn&& fn) {
  CheckResult r;
  r.id = id;
  const auto start = std::chrono::steady_clock::now();
  try {
    if (Outcome o = fn()) {
      r.status = CheckStatus::fail;
      r.reason = o->message;
      r.witness = std::move(o->witness);
    }
  } catch (const Skip& s) {
    r.status = CheckStatus::skipped;
    r.reason = s.reason;
  } catch (const CapExceeded& e) {
    r.status = CheckStatus::skipped;
    r.reason = e.what();
  } catch (const Error& e) {
    r.status = CheckStatus::fail;
    r.reason = std::string(to_string(e.code())) + ": " + e.what();
    r.witness = json::object();
  }
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

bool selected(const Config& config, const std::string& id) {
  return config.checks.empty() || config.checks.count(id) > 0;
}

Summary summarize(Context& c) {
  Summary s;
  s.is_cd = c.cd();
  s.is_distributive = c.distributive();
  s.automorphism_count = c.automorphism_list().size();
  if (!c.enumerable()) return s;
  s.homset_size = c.n();
  try {
    const auto& d = c.dualizing();
    const auto& cyc = c.cyclic();
    s.dualizing_count = d.size();
    s.cyclic_count = cyc.size();
    bool girard = false;
    for (std::size_t i : d) girard = girard || std::binary_search(cyc.begin(), cyc.end(), i);
    s.is_girard = girard;
    s.tight_unital = tight_has_unit(c.homset(), c.tight()).has_value();
    s.autodual_verdict = to_string(c.autodual().verdict);
  } catch (const Skip&) {
  }
  return s;
}

void describe(Report& r, const CorpusEntry& entry) {
  r.name = entry.name;
  r.size = entry.lattice->size();
  r.hash = entry.lattice->hash_hex();
}

}  // namespace

Summary summarize(const CorpusEntry& entry, const Config& config) {
  Context c(entry, config);
  return summarize(c);
}

Report analyze(const CorpusEntry& entry, const Config& config) {
  Context c(entry, config);
  Report r;
  describe(r, entry);
  r.summary = summarize(c);
  return r;
}

Report run_suite(const CorpusEntry& entry, const Config& config) {
  Context c(entry, config);
  Report r;
  describe(r, entry);
  for (const auto& [id, fn] : lattice_checks()) {
    if (!selected(config, id)) continue;
    r.checks.push_back(timed(id, [&, f = fn] { return f(c); }));
  }
  r.summary = summarize(c);
  return r;
}

Report run_m5_suite(const Config& config) {
  Report r;
  r.name = "M5-quantale";
  r.size = 7;
  r.hash = make_mk(5).hash_hex();

  std::optional<FiniteQuantale> q;
  auto need = [&]() -> const FiniteQuantale& {
    if (!q) q = m5_quantale();
    return *q;
  };
  auto name = [&](Elem e) { return need().carrier().name(e); };
  auto elem = [&](const char* s) { return *need().carrier().find(s); };
  auto names = [&](const std::vector<Elem>& xs) {
    std::vector<std::string> out;
    for (Elem e : xs) out.push_back(name(e));
    return out;
  };

  const std::vector<std::pair<std::string, std::function<Outcome()>>> checks = {
      {"m5-table",
       [&]() -> Outcome {
         const FiniteQuantale& m = need();
         if (auto bad = quantale_violation(m.carrier(), m.table())) return Failure{*bad, json::object()};
         if (m.mul(elem("a"), elem("c")) != elem("d") || m.mul(elem("d"), elem("d")) != m.carrier().top()) {
           return Failure{"table entries differ", quantale_to_json(m)};
         }
         return std::nullopt;
       }},
      {"m5-unit",
       [&]() -> Outcome {
         const auto u = q_unit(need());
         if (!u || *u != elem("u")) return Failure{"u is not the two-sided unit", {{"unit", u ? name(*u) : "none"}}};
         return std::nullopt;
       }},
      {"m5-residuals",
       [&]() -> Outcome {
         const FiniteQuantale& m = need();
         const Lattice& l = m.carrier();
         for (Elem x = 0; x < m.size(); ++x) {
           for (Elem y = 0; y < m.size(); ++y) {
             const Residuals res = q_residuals(m, x, y);
             for (Elem z = 0; z < m.size(); ++z) {
               if (l.leq(m.mul(x, z), y) != l.leq(z, res.left) || l.leq(m.mul(z, x), y) != l.leq(z, res.right)) {
                 return Failure{"residual adjunction fails", {{"x", name(x)}, {"y", name(y)}, {"z", name(z)}}};
               }
             }
           }
         }
         return std::nullopt;
       }},
      {"m5-cyclic",
       [&]() -> Outcome {
         const auto cyc = q_cyclic(need());
         std::vector<Elem> expected;
         for (Elem e = 0; e < need().size(); ++e) {
           if (e != elem("d")) expected.push_back(e);
         }
         if (cyc != expected) return Failure{"cyclic elements are not all but d", {{"cyclic", names(cyc)}}};
         return std::nullopt;
       }},
      {"m5-dualizing",
       [&]() -> Outcome {
         const auto d = q_dualizing(need());
         if (d != std::vector<Elem>{elem("d")}) return Failure{"dualizing elements are not {d}", {{"dualizing", names(d)}}};
         return std::nullopt;
       }},
      {"m5-dualizing-unit",
       [&]() -> Outcome {
         const auto u = q_unit(need());
         for (Elem o : q_dualizing(need())) {
           const Elem r = q_residuals(need(), o, o).left;
           if (!u || r != *u) return Failure{"0\\0 is not the unit", {{"0", name(o)}, {"0\\0", name(r)}}};
         }
         return std::nullopt;
       }},
  };
  for (const auto& [id, fn] : checks) {
    if (!selected(config, id)) continue;
    r.checks.push_back(timed(id, fn));
  }
  return r;
}

// ---------------------------------------------------------------------------
// Output

namespace {

template <class T>
json opt(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

json summary_json(const Summary& s) {
  return json{{"is_CD", s.is_cd},
              {"is_distributive", s.is_distributive},
              {"is_girard", opt(s.is_girard)},
              {"homset_size", opt(s.homset_size)},
              {"dualizing_count", opt(s.dualizing_count)},
              {"cyclic_count", opt(s.cyclic_count)},
              {"automorphism_count", s.automorphism_count},
              {"tight_unital", opt(s.tight_unital)},
              {"autodual_verdict", s.autodual_verdict}};
}

std::string flag(const json& v) {
  if (v.is_null()) return "n/a";
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

}  // namespace

json report_to_json(const Report& report, bool timing) {
  json checks = json::array();
  for (const CheckResult& c : report.checks) {
    json j = {{"check_id", c.id}, {"status", to_string(c.status)}};
    if (!c.reason.empty()) j["reason"] = c.reason;
    if (c.witness) j["witness"] = *c.witness;
    if (timing) j["elapsed_ms"] = c.elapsed_ms;
    checks.push_back(std::move(j));
  }
  json out = {{"lattice", {{"name", report.name}, {"size", report.size}, {"hash", report.hash}}},
              {"checks", std::move(checks)},
              {"failed", report.failed()},
              {"skipped", report.skipped()}};
  if (report.summary) out["summary"] = summary_json(*report.summary);
  return out;
}

std::string report_to_text(const Report& report, bool timing) {
  std::ostringstream out;
  out << report.name << " (size " << report.size << ", hash " << report.hash << ")\n";
  if (report.summary) {
    const json summary = summary_json(*report.summary);
    out << " ";
    for (const auto& [k, v] : summary.items()) out << " " << k << "=" << flag(v);
    out << "\n";
  }
  for (const CheckResult& c : report.checks) {
    out << "  [" << to_string(c.status) << "] " << c.id;
    if (!c.reason.empty()) out << ": " << c.reason;
    if (timing) {
      char buf[32];
      std::snprintf(buf, sizeof buf, " (%.1f ms)", c.elapsed_ms);
      out << buf;
    }
    out << "\n";
    if (c.status == CheckStatus::fail && c.witness) out << "      witness: " << c.witness->dump() << "\n";
  }
  if (!report.checks.empty()) {
    out << "  " << report.checks.size() << " checks, " << report.failed() << " failed, " << report.skipped()
        << " skipped\n";
  }
  return out.str();
}

json reports_to_json(const std::vector<Report>& reports, bool timing) {
  json list = json::array();
  std::size_t failed = 0;
  std::size_t skipped = 0;
  for (const Report& r : reports) {
    list.push_back(report_to_json(r, timing));
    failed += r.failed();
    skipped += r.skipped();
  }
  return json{{"reports", std::move(list)}, {"failed", failed}, {"skipped", skipped}};
}

std::string reports_to_text(const std::vector<Report>& reports, bool timing) {
  std::string out;
  std::size_t failed = 0;
  std::size_t skipped = 0;
  for (const Report& r : reports) {
    out += report_to_text(r, timing);
    failed += r.failed();
    skipped += r.skipped();
  }
  out += std::to_string(reports.size()) + " lattices, " + std::to_string(failed) + " failed, " +
         std::to_string(skipped) + " skipped\n";
  return out;
}

}  // namespace raney
