// One PASS/FAIL line per acceptance criterion. argv[1] is the path of the CLI.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "raney/structures.hpp"
#include "raney/verifier.hpp"

using namespace raney;

namespace {

struct Outcome {
  bool ok = true;
  std::string failure;
  std::ostringstream detail;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) failure = what;
    ok = ok && cond;
  }
  std::string line() const { return ok ? detail.str() : failure; }
};

struct Lab {
  std::string name;
  LatticePtr lattice;
  std::optional<Poset> poset;
  bool cd = false;
};

std::vector<Lab> corpus() {
  std::vector<Lab> out;
  for (const auto& e : default_corpus()) out.push_back({e.name, e.lattice, e.poset, oracle::distributive(*e.lattice)});
  return out;
}

bool is_non_cd_named(const std::string& n) { return n == "M3" || n == "M5" || n == "N5"; }

std::vector<Table> tables(const EndoHomset& h) {
  std::vector<Table> out;
  for (const auto& f : h) out.push_back(f.table());
  return out;
}

// --- criteria ---------------------------------------------------------------------

void c1(Outcome& o) {
  const FiniteQuantale q = m5_quantale();
  const Lattice& l = q.carrier();
  const Elem u = *l.find("u"), d = *l.find("d");
  std::size_t triples = 0;
  for (Elem x = 0; x < 7; ++x) {
    for (Elem y = 0; y < 7; ++y) {
      for (Elem z = 0; z < 7; ++z) {
        ++triples;
        o.expect(q.mul(q.mul(x, y), z) == q.mul(x, q.mul(y, z)), "associativity fails");
        o.expect(q.mul(x, oracle::join2(l, y, z)) == oracle::join2(l, q.mul(x, y), q.mul(x, z)), "left distributivity fails");
        o.expect(q.mul(oracle::join2(l, y, z), x) == oracle::join2(l, q.mul(y, x), q.mul(z, x)), "right distributivity fails");
      }
    }
    o.expect(q.mul(u, x) == x && q.mul(x, u) == x, "u is not a two-sided unit");
    o.expect(q.mul(x, l.bottom()) == l.bottom() && q.mul(l.bottom(), x) == l.bottom(), "bottom not absorbing");
  }
  o.expect(triples == 343, "triple count");
  o.expect(q_dualizing(q) == std::vector<Elem>{d}, "dualizing set is not {d}");
  std::vector<Elem> non_cyclic;
  const auto cyc = q_cyclic(q);
  for (Elem x = 0; x < 7; ++x) {
    if (std::find(cyc.begin(), cyc.end(), x) == cyc.end()) non_cyclic.push_back(x);
  }
  o.expect(non_cyclic == std::vector<Elem>{d}, "non-cyclic set is not {d}");
  o.detail << "dualizing={d} non-cyclic={d} unit=u triples=" << triples;
}

void c2(Outcome& o) {
  std::size_t cd = 0, non_cd = 0;
  for (const auto& lab : corpus()) {
    const EndoHomset h = EndoHomset::enumerate(lab.lattice);
    if (is_non_cd_named(lab.name)) {
      ++non_cd;
      o.expect(!lab.cd, lab.name + " reported distributive");
      o.expect(find_dualizing(h).empty(), lab.name + ": dualizing element found");
      o.expect(find_cyclic(h) == std::vector<std::size_t>{h.top_index()}, lab.name + ": cyclic set is not {top}");
      o.expect(!is_girard(h), lab.name + ": Girard");
    } else {
      ++cd;
      o.expect(lab.cd, lab.name + " not distributive");
      const SupMap om = canonical_dualizing(lab.lattice);
      o.expect(is_girard(h), lab.name + ": not Girard");
      o.expect(is_cyclic(h, om), lab.name + ": o not cyclic");
      o.expect(is_dualizing(h, om), lab.name + ": o not dualizing");
    }
  }
  o.detail << cd << " CD lattices Girard with o cyclic+dualizing; " << non_cd << " non-CD without dualizing";
}

void c3(Outcome& o) {
  std::size_t checked = 0;
  for (const auto& lab : corpus()) {
    if (!lab.cd) continue;
    const EndoHomset h = EndoHomset::enumerate(lab.lattice);
    const auto dual = find_dualizing(h);
    const auto autos = automorphisms(*lab.lattice);
    o.expect(dual.size() == autos.size(), lab.name + ": |dualizing| != |Aut|");
    std::vector<Table> images;
    for (std::size_t i : dual) {
      const Table a = dualizing_to_automorphism(h, h[i]);
      o.expect(std::find(autos.begin(), autos.end(), a) != autos.end(), lab.name + ": star(f) not an automorphism");
      o.expect(automorphism_to_dualizing(h, a) == h[i], lab.name + ": o/star(f) != f");
      images.push_back(a);
    }
    std::sort(images.begin(), images.end());
    o.expect(std::adjacent_find(images.begin(), images.end()) == images.end(), lab.name + ": star not injective");
    for (const Table& a : autos) {
      const SupMap f = automorphism_to_dualizing(h, a);
      o.expect(std::find(dual.begin(), dual.end(), h.index(f)) != dual.end(), lab.name + ": o/h not dualizing");
      o.expect(dualizing_to_automorphism(h, f) == a, lab.name + ": star(o/h) != h");
    }
    if (lab.name == "boolean(2)") o.expect(dual.size() == 2, "boolean(2) does not have exactly 2 dualizing elements");
    ++checked;
  }
  o.detail << checked << " CD lattices; boolean(2) has 2 dualizing elements";
}

void c4(Outcome& o) {
  for (const auto& lab : corpus()) {
    const EndoHomset h = EndoHomset::enumerate(lab.lattice);
    const bool unit = tight_has_unit(h).has_value();
    const bool gap = conucleus_gap(h).has_value();
    o.expect(unit == lab.cd, lab.name + ": tight unit iff CD fails");
    o.expect(gap == !lab.cd, lab.name + ": conucleus gap iff non-CD fails");
  }
  o.detail << "unit exactly on CD members, gap exactly on M3/M5/N5";
}

/// r is the greatest element of { f : pred(f) } in the homset.
template <class Pred>
bool is_greatest(const Lattice& l, const std::vector<Table>& all, const Table& r, Pred pred) {
  if (!pred(r)) return false;
  for (const auto& f : all) {
    if (pred(f) && !oracle::table_leq(l, f, r)) return false;
  }
  return true;
}

void c5(Outcome& o) {
  std::size_t lattices = 0, pairs = 0;
  for (const auto& lab : corpus()) {
    const EndoHomset h = EndoHomset::enumerate(lab.lattice);
    if (h.size() > 512) continue;
    const Lattice& l = *lab.lattice;
    const auto all = tables(h);
    for (const auto& g : h) {
      for (const auto& k : h) {
        ++pairs;
        const Table left = residual_left(g, k).table();
        const Table right = residual_right(k, g).table();
        o.expect(is_greatest(l, all, left, [&](const Table& f) { return oracle::table_leq(l, oracle::compose(g.table(), f), k.table()); }),
                 lab.name + ": g\\h is not the brute maximum");
        o.expect(is_greatest(l, all, right, [&](const Table& f) { return oracle::table_leq(l, oracle::compose(f, g.table()), k.table()); }),
                 lab.name + ": h/f is not the brute maximum");
      }
    }
    for (const auto& f : h) {
      for (Elem x = 0; x < l.size(); ++x) {
        for (Elem y = 0; y < l.size(); ++y) {
          const DivisionFormulas d = division_formulas(f, x, y);
          const SupMap e = e_map(lab.lattice, y, x);
          const SupMap t = tensor_over(lab.lattice, y, x);
          o.expect(d.right_by_e == residual_right(f, e) && d.left_by_e == residual_left(e, f) &&
                       d.right_by_tensor == residual_right(f, t) && d.left_by_tensor == residual_left(t, f),
                   lab.name + ": division formula mismatch");
        }
      }
    }
    ++lattices;
  }
  o.detail << lattices << " lattices with |Q|<=512, " << pairs << " residual pairs";
}

void c6(Outcome& o) {
  std::size_t pairs = 0;
  for (const auto& lab : corpus()) {
    const EndoHomset h = EndoHomset::enumerate(lab.lattice);
    const auto infs = enumerate_inf_maps(lab.lattice);
    std::vector<SupMap> downs;
    for (const auto& g : infs) downs.push_back(raney_down(g));
    for (const auto& f : h) {
      const InfMap up = raney_up(f);
      for (std::size_t i = 0; i < infs.size(); ++i) {
        ++pairs;
        if (pointwise_leq(downs[i], f) != pointwise_leq(infs[i], up)) {
          o.expect(false, lab.name + ": Raney adjunction fails");
        }
      }
      o.expect(left_adjoint(up) == raney_down(right_adjoint(f)), lab.name + ": lambda(^f) != v(rho f)");
    }
    for (std::size_t i = 0; i < infs.size(); ++i) {
      o.expect(right_adjoint(downs[i]) == raney_up(left_adjoint(infs[i])), lab.name + ": rho(vg) != ^(lambda g)");
    }
    const bool raney = tight_interior(identity_map(lab.lattice)) == identity_map(lab.lattice);
    o.expect(raney == lab.cd, lab.name + ": Raney identity disagrees with distributivity");
    o.expect(is_distributive(*lab.lattice) == lab.cd, lab.name + ": is_distributive disagrees with the triple law");
  }
  o.detail << pairs << " (f,g) pairs";
}

void c7(Outcome& o) {
  std::size_t n = 0;
  for (const auto& lab : corpus()) {
    const EndoHomset h = EndoHomset::enumerate(lab.lattice);
    if (h.size() > 2000) continue;
    ++n;
    const auto order = homset_order(h);
    const auto irr = homset_irreducibles(h, order);
    const auto brute = oracle::map_irreducibles(*lab.lattice, tables(h));
    o.expect(irr.joins == brute.joins && irr.meets == brute.meets, lab.name + ": irreducibles disagree with the brute scan");

    // M(Q) equals the set of m (tensor-over) j, computed here from the brute irreducibles of L.
    std::vector<std::size_t> tensors;
    for (Elem m : oracle::meet_irreducibles(*lab.lattice)) {
      for (Elem j : oracle::join_irreducibles(*lab.lattice)) tensors.push_back(h.index(tensor_over(lab.lattice, m, j)));
    }
    std::vector<std::size_t> sorted = tensors;
    std::sort(sorted.begin(), sorted.end());
    o.expect(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(), lab.name + ": tensors not distinct");
    o.expect(sorted == brute.meets, lab.name + ": M(Q) != {m (x) j}");
    for (Elem j : oracle::join_irreducibles(*lab.lattice)) {
      for (Elem m : oracle::meet_irreducibles(*lab.lattice)) {
        const std::size_t e = h.index(e_map(lab.lattice, j, m));
        o.expect(std::binary_search(brute.joins.begin(), brute.joins.end(), e), lab.name + ": e_{j,m} not join-irreducible");
      }
    }
    o.expect(irr.meets_are_tensors && irr.elementary_join_irreducible, lab.name + ": library flags disagree");
    const std::size_t product = irr.product();
    if (lab.cd) {
      o.expect(brute.joins.size() == product, lab.name + ": |J(Q)| != |J(L)||M(L)|");
    }
    if (lab.name == "M5" || lab.name == "N5") {
      o.expect(brute.joins.size() > product, lab.name + ": inequality not strict");
      o.expect(autodual_report(h, irr).verdict == AutodualVerdict::not_autodual, lab.name + ": not reported not-autodual");
    }
  }
  o.detail << n << " lattices with |Q|<=2000";
}

bool down_closed(const Poset& p, const std::vector<char>& r) {
  const std::size_t n = p.size();
  for (std::size_t y = 0; y < n; ++y) {
    for (std::size_t x = 0; x < n; ++x) {
      if (!r[y * n + x]) continue;
      for (std::size_t y2 = 0; y2 < n; ++y2) {
        for (std::size_t x2 = 0; x2 < n; ++x2) {
          if (p.leq(y2, y) && p.leq(x, x2) && !r[y2 * n + x2]) return false;
        }
      }
    }
  }
  return true;
}

void c8(Outcome& o) {
  std::size_t posets = 0, autos_checked = 0;
  for (std::size_t n = 0; n <= 3; ++n) {
    for (const Poset& p : all_posets(n)) {
      ++posets;
      const DownsetSpace s = DownsetSpace::of(p);
      const EndoHomset h = EndoHomset::enumerate(s.lattice);
      std::size_t relations = 0;
      for (std::uint64_t m = 0; m < (std::uint64_t{1} << (n * n)); ++m) {
        std::vector<char> r(n * n);
        for (std::size_t i = 0; i < n * n; ++i) r[i] = m >> i & 1;
        if (!down_closed(p, r)) continue;
        ++relations;
        const WeakeningRelation w(p, r);
        o.expect(wk_from_supmap(s, supmap_from_wk(s, w)) == w, "relation round trip fails");
      }
      o.expect(relations == h.size(), "relation count differs from |Q|");
      for (const auto& f : h) o.expect(supmap_from_wk(s, wk_from_supmap(s, f)) == f, "map round trip fails");

      const auto ro = wk_from_supmap(s, canonical_dualizing(s.lattice));
      for (std::size_t y = 0; y < n; ++y) {
        for (std::size_t x = 0; x < n; ++x) o.expect(ro.contains(y, x) == !p.leq(x, y), "R_o mismatch");
      }
      for (const Table& g : poset_automorphisms(p)) {
        ++autos_checked;
        const SupMap f = supmap_from_wk(s, wk_from_automorphism(p, g));
        o.expect(is_dualizing(h, f), "automorphism relation not dualizing");
        o.expect(star(f).table() == induced_automorphism(s, g), "star differs from the induced automorphism");
      }
    }
  }
  o.detail << posets << " labelled posets, " << autos_checked << " automorphisms";
}

void c9(Outcome& o) {
  const std::vector<std::pair<std::string, Lattice>> cases{
      {"chain(2)", make_chain(2)}, {"chain(3)", make_chain(3)}, {"boolean(2)", make_boolean(2)}, {"M3", make_mk(3)}};
  for (const auto& [name, l] : cases) {
    const auto r = classify_natural(EndoHomset::enumerate(share(l)));
    o.expect(r.count() == 2, name + ": natural arrow count is " + std::to_string(r.count()));
    o.expect(r.has_trivial && r.has_raney, name + ": missing the trivial or the Raney arrow");
  }
  o.detail << "2 natural arrows on chain(2), chain(3), boolean(2), M3";
}

std::string run_command(const std::string& cmd, int& status) {
  std::string out;
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  if (!pipe) {
    status = -1;
    return out;
  }
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe.get())) > 0) out.append(buf.data(), n);
  status = pclose(pipe.release());
  return out;
}

void c10(Outcome& o, const std::string& cli) {
  const std::string cmd = "'" + cli + "' verify --corpus --format json";
  int s1 = 0, s2 = 0;
  const std::string a = run_command(cmd, s1);
  const std::string b = run_command(cmd, s2);
  o.expect(s1 == 0 && s2 == 0, "CLI exited with a nonzero status");
  o.expect(!a.empty(), "empty output");
  o.expect(a == b, "outputs differ");
  o.detail << "two runs, " << a.size() << " bytes each, identical=" << (a == b ? "yes" : "no");
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <path-to-cli>\n";
    return 2;
  }
  const std::string cli = argv[1];
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"1 M5 quantale reproduction", c1},
      {"2 Girard iff CD on corpus", c2},
      {"3 dualizing/automorphism bijection", c3},
      {"4 tight quantale unitality", c4},
      {"5 residual oracle equivalence", c5},
      {"6 Raney identities", c6},
      {"7 irreducible counting", c7},
      {"8 weakening relations", c8},
      {"9 naturality classification", c9},
      {"10 determinism", [&](Outcome& o) { c10(o, cli); }},
  };
  int failures = 0;
  for (const auto& [name, fn] : criteria) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      fn(o);
    } catch (const std::exception& e) {
      o.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s criterion %s (%.2f s): %s\n", o.ok ? "PASS" : "FAIL", name.c_str(), secs, o.line().c_str());
    std::fflush(stdout);
    failures += !o.ok;
  }
  return failures == 0 ? 0 : 1;
}
