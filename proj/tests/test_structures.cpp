#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "raney/structures.hpp"

using namespace raney;

namespace {

constexpr Elem B = 0, u = 1, d = 2, a = 3, b = 4, c = 5, T = 6;

std::vector<char> brute_compose(std::size_t n, const std::vector<char>& first, const std::vector<char>& second) {
  std::vector<char> out(n * n, 0);
  for (std::size_t y = 0; y < n; ++y) {
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t z = 0; z < n; ++z) {
        if (first[y * n + z] && second[z * n + x]) out[y * n + x] = 1;
      }
    }
  }
  return out;
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

}  // namespace

TEST_CASE("M5 quantale table") {
  const FiniteQuantale q = m5_quantale();
  CHECK(q.size() == 7);
  for (Elem x = 0; x < 7; ++x) {
    CHECK(q.mul(u, x) == x);
    CHECK(q.mul(x, u) == x);
  }
  CHECK(q.mul(a, c) == d);
  CHECK(q.mul(d, d) == T);
  CHECK(q.mul(b, a) == d);
  CHECK(q.mul(c, b) == d);
  CHECK(q_unit(q) == u);
  CHECK_FALSE(quantale_violation(q.carrier(), q.table()));
  CHECK(q.carrier() == make_mk(5));
}

TEST_CASE("M5 quantale axioms by direct triple scan") {
  const FiniteQuantale q = m5_quantale();
  const Lattice& l = q.carrier();
  std::size_t triples = 0;
  for (Elem x = 0; x < 7; ++x) {
    for (Elem y = 0; y < 7; ++y) {
      for (Elem z = 0; z < 7; ++z) {
        ++triples;
        CHECK(q.mul(q.mul(x, y), z) == q.mul(x, q.mul(y, z)));
        CHECK(q.mul(x, oracle::join2(l, y, z)) == oracle::join2(l, q.mul(x, y), q.mul(x, z)));
        CHECK(q.mul(oracle::join2(l, y, z), x) == oracle::join2(l, q.mul(y, x), q.mul(z, x)));
      }
    }
  }
  CHECK(triples == 343);
}

TEST_CASE("broken tables are rejected") {
  auto mult = m5_quantale().table();
  mult[3 * 7 + 5] = c;  // a . c
  CHECK(quantale_violation(make_mk(5), mult).has_value());
  CHECK_THROWS_AS(FiniteQuantale::checked(share(make_mk(5)), mult), Error);
  CHECK_THROWS_AS(FiniteQuantale::checked(share(make_mk(5)), std::vector<Elem>(10, 0)), Error);
}

TEST_CASE("M5 residuals") {
  const FiniteQuantale q = m5_quantale();
  for (Elem y = 0; y < 7; ++y) CHECK(q_residuals(q, u, y).left == y);
  CHECK(q_residuals(q, d, d).left == u);
  CHECK(q_residuals(q, T, T).left == T);
  const Lattice& l = q.carrier();
  for (Elem x = 0; x < 7; ++x) {
    for (Elem y = 0; y < 7; ++y) {
      const Residuals r = q_residuals(q, x, y);
      for (Elem z = 0; z < 7; ++z) {
        CHECK(l.leq(q.mul(x, z), y) == l.leq(z, r.left));
        CHECK(l.leq(q.mul(z, x), y) == l.leq(z, r.right));
      }
    }
  }
}

TEST_CASE("M5 cyclic and dualizing elements") {
  const FiniteQuantale q = m5_quantale();
  CHECK(q_cyclic(q) == std::vector<Elem>{B, u, a, b, c, T});
  CHECK(q_dualizing(q) == std::vector<Elem>{d});
  CHECK(q_residuals(q, d, d).left == *q_unit(q));
}

TEST_CASE("quantale serialization") {
  const auto j = quantale_to_json(m5_quantale());
  CHECK(j.at("mult").size() == 7);
  CHECK(j.at("mult")[3][5] == d);
  CHECK(j.contains("carrier"));
}

TEST_CASE("homset irreducibles") {
  {
    const EndoHomset h = EndoHomset::enumerate(share(make_chain(2)));
    const auto irr = homset_irreducibles(h);
    CHECK(irr.joins == std::vector<std::size_t>{h.identity_index()});
    CHECK(irr.meets == std::vector<std::size_t>{h.bottom_index()});
  }
  {
    const EndoHomset h = EndoHomset::enumerate(share(make_boolean(2)));
    const auto irr = homset_irreducibles(h);
    CHECK(irr.meets.size() == 4);
    CHECK(irr.product() == 4);
    CHECK(irr.joins.size() == 4);
  }
  {
    const EndoHomset h = EndoHomset::enumerate(share(make_mk(5)));
    const auto irr = homset_irreducibles(h);
    CHECK(irr.product() == 25);
    CHECK(irr.joins.size() == 745);
    CHECK(irr.meets.size() == 25);
    CHECK(irr.meets_are_tensors);
    CHECK(irr.elementary_join_irreducible);
  }
  for (const Lattice& raw : {make_chain(3), make_chain(4), make_boolean(2), make_mk(3), make_n5(), make_mk(5)}) {
    const LatticePtr l = share(raw);
    const EndoHomset h = EndoHomset::enumerate(l);
    const auto irr = homset_irreducibles(h);
    std::vector<Table> maps;
    for (const auto& f : h) maps.push_back(f.table());
    const auto brute = oracle::map_irreducibles(*l, maps);
    CHECK(irr.joins == brute.joins);
    CHECK(irr.meets == brute.meets);
    CHECK(irr.meets_are_tensors);
    CHECK(irr.elementary_join_irreducible);
    CHECK(irr.elementary_distinct);
    CHECK(irr.tensors_distinct);
    if (oracle::distributive(raw)) {
      CHECK(irr.joins.size() == irr.product());
    } else {
      CHECK(irr.joins.size() > irr.product());
    }
  }
}

TEST_CASE("autoduality") {
  {
    const EndoHomset h = EndoHomset::enumerate(share(make_chain(2)));
    const auto r = autodual_report(h, homset_irreducibles(h));
    CHECK(r.verdict == AutodualVerdict::autodual);
  }
  {
    const EndoHomset h = EndoHomset::enumerate(share(make_mk(5)));
    const auto r = autodual_report(h, homset_irreducibles(h));
    CHECK(r.verdict == AutodualVerdict::not_autodual);
    CHECK_FALSE(r.reason.empty());
  }
  for (const Lattice& raw : {make_boolean(2), make_chain(4), make_boolean(3)}) {
    const EndoHomset h = EndoHomset::enumerate(share(raw));
    const auto r = autodual_report(h, homset_irreducibles(h));
    CHECK(r.verdict == AutodualVerdict::autodual);
    REQUIRE(r.witness);
    CHECK(is_anti_automorphism(homset_order(h), *r.witness));
  }
  for (const Lattice& raw : {make_mk(3), make_n5()}) {
    const EndoHomset h = EndoHomset::enumerate(share(raw));
    CHECK(autodual_report(h, homset_irreducibles(h)).verdict == AutodualVerdict::not_autodual);
  }
  CHECK(std::string(to_string(AutodualVerdict::inconclusive)) == "inconclusive");
}

TEST_CASE("weakening relations of identity, o and bottom") {
  const std::vector<std::pair<Elem, Elem>> cov{{0, 1}, {0, 2}};
  const Poset v = Poset::from_covers(3, cov);
  const DownsetSpace s = DownsetSpace::of(v);
  const auto rid = wk_from_supmap(s, identity_map(s.lattice));
  const auto ro = wk_from_supmap(s, canonical_dualizing(s.lattice));
  const auto rb = wk_from_supmap(s, bottom_map(s.lattice, s.lattice));
  for (Elem y = 0; y < 3; ++y) {
    for (Elem x = 0; x < 3; ++x) {
      CHECK(rid.contains(y, x) == v.leq(y, x));
      CHECK(ro.contains(y, x) == !v.leq(x, y));
      CHECK_FALSE(rb.contains(y, x));
    }
  }
  CHECK(wk_from_automorphism(v, Table{0, 1, 2}) == ro);
  CHECK_THROWS_AS(WeakeningRelation(v, std::vector<char>{0, 0, 0, 1, 0, 0, 0, 0, 0}), Error);
  CHECK_THROWS_AS(wk_from_automorphism(v, Table{1, 0, 2}), Error);
}

TEST_CASE("weakening relations are a bijection with the homset, composition included") {
  for (std::size_t n = 0; n <= 3; ++n) {
    for (const Poset& p : all_posets(n)) {
      const DownsetSpace s = DownsetSpace::of(p);
      const EndoHomset h = EndoHomset::enumerate(s.lattice);
      std::size_t closed = 0;
      for (std::uint64_t m = 0; m < (std::uint64_t{1} << (n * n)); ++m) {
        std::vector<char> r(n * n);
        for (std::size_t i = 0; i < n * n; ++i) r[i] = m >> i & 1;
        if (!down_closed(p, r)) continue;
        ++closed;
        const WeakeningRelation w(p, r);
        CHECK(wk_from_supmap(s, supmap_from_wk(s, w)) == w);
      }
      CHECK(closed == h.size());
      for (const auto& f : h) CHECK(supmap_from_wk(s, wk_from_supmap(s, f)) == f);
      for (std::size_t i = 0; i < h.size(); i += 7) {
        for (std::size_t j = 0; j < h.size(); j += 5) {
          const auto wf = wk_from_supmap(s, h[i]);
          const auto wg = wk_from_supmap(s, h[j]);
          const auto composed = wk_compose(wf, wg);
          CHECK(composed.matrix() == brute_compose(n, wf.matrix(), wg.matrix()));
          CHECK(composed == wk_from_supmap(s, compose(h[i], h[j])));
          CHECK(pointwise_leq(h[i], h[j]) ==
                std::equal(wf.matrix().begin(), wf.matrix().end(), wg.matrix().begin(),
                           [](char x, char y) { return !x || y; }));
        }
      }
    }
  }
}

TEST_CASE("weakening relations from automorphisms are dualizing") {
  const Poset antichain = Poset::from_covers(2, std::vector<std::pair<Elem, Elem>>{});
  const DownsetSpace s = DownsetSpace::of(antichain);
  const EndoHomset h = EndoHomset::enumerate(s.lattice);
  CHECK(h.size() == 16);
  const Table swap{1, 0};
  const auto w = wk_from_automorphism(antichain, swap);
  for (Elem y = 0; y < 2; ++y) {
    for (Elem x = 0; x < 2; ++x) CHECK(w.contains(y, x) == !antichain.leq(x, swap[y]));
  }
  const SupMap f = supmap_from_wk(s, w);
  CHECK(is_dualizing(h, f));
  CHECK(star(f).table() == induced_automorphism(s, swap));

  const std::vector<std::pair<Elem, Elem>> cov{{0, 1}, {1, 2}};
  const Poset chain = Poset::from_covers(3, cov);
  CHECK(poset_automorphisms(chain).size() == 1);
  const DownsetSpace sc = DownsetSpace::of(chain);
  CHECK(find_dualizing(EndoHomset::enumerate(sc.lattice)).size() == 1);
}

TEST_CASE("weakening serialization") {
  const Poset p = Poset::from_covers(2, std::vector<std::pair<Elem, Elem>>{{0, 1}});
  const DownsetSpace s = DownsetSpace::of(p);
  const auto j = weakening_to_json(wk_from_supmap(s, identity_map(s.lattice)));
  CHECK(j.at("pairs") == nlohmann::json::parse("[[0,0],[0,1],[1,1]]"));
}

TEST_CASE("natural arrows") {
  for (const Lattice& raw : {make_chain(2), make_chain(3), make_boolean(2), make_mk(3), make_mk(5)}) {
    const EndoHomset h = EndoHomset::enumerate(share(raw));
    const auto r = classify_natural(h);
    CHECK(r.count() == 2);
    CHECK(r.has_trivial);
    CHECK(r.has_raney);
  }
  const auto one = classify_natural(EndoHomset::enumerate(share(make_chain(1))));
  CHECK(one.count() == 1);
  CHECK(one.has_trivial);
}

TEST_CASE("abstract Raney check") {
  for (const Lattice& raw : {make_chain(3), make_boolean(2), make_boolean(3)}) {
    const EndoHomset h = EndoHomset::enumerate(share(raw));
    const auto r = abstract_raney_check(h, elementary_family(h));
    CHECK(r.chain_images);
    CHECK(r.max_image_size <= 2);
    CHECK(r.bimorphism);
    CHECK(r.id_in_image);
    CHECK(r.completely_distributive);
    CHECK(r.implication_holds());
  }
  const EndoHomset m5 = EndoHomset::enumerate(share(make_mk(5)));
  const auto r = abstract_raney_check(m5, elementary_family(m5));
  CHECK(r.chain_images);
  CHECK_FALSE(r.id_in_image);
  CHECK_FALSE(r.completely_distributive);
  CHECK(r.implication_holds());

  BimorphismFamily bad = elementary_family(m5);
  bad.homset_map.pop_back();
  CHECK_THROWS_AS(abstract_raney_check(m5, bad), Error);
}
