#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>
#include <vector>

#include "fixtures.hpp"
#include "msplit/matroid.hpp"

using namespace msplit;

namespace {

std::vector<std::string> circuit_strings(const Matroid& m) {
  std::vector<std::string> out;
  for (const auto& c : m.circuits()) out.push_back(m.set_to_string(c.members));
  return out;
}

std::set<std::uint32_t> circuit_masks(const Matroid& m) {
  std::set<std::uint32_t> out;
  for (const auto& c : m.circuits()) out.insert(c.members.bits());
  return out;
}

}  // namespace

TEST_CASE("construction validates loops, coloops, labels") {
  const PrimeModulus p2(2);
  CHECK_THROWS_AS(Matroid::from_matrix(p2, FieldMatrix::from_rows(p2, {{1, 0}, {0, 0}}), {"a", "b"}),
                  LoopPresent);
  // A free element is a coloop.
  CHECK_THROWS_AS(
      Matroid::from_matrix(p2, FieldMatrix::from_rows(p2, {{1, 1, 0}, {0, 0, 1}}), {"a", "b", "c"}),
      ColoopPresent);
  CHECK_THROWS_AS(
      Matroid::from_matrix(p2, FieldMatrix::from_rows(p2, {{1, 1, 0}, {0, 1, 1}}), {"a", "a", "b"}),
      LabelCollision);
  CHECK_THROWS_AS(Matroid::from_matrix(p2, FieldMatrix::from_rows(p2, {{1, 1}}), {"a"}),
                  DimensionMismatch);
  // The same coloopy matrix is fine as a derived matroid.
  CHECK_NOTHROW(Matroid::derived(p2, FieldMatrix::from_rows(p2, {{1, 1, 0}, {0, 0, 1}}),
                                 {"a", "b", "c"}));
}

TEST_CASE("fixtures construct and have the expected shape") {
  CHECK(fx("F1").rank() == 2);
  CHECK(fx("F2").rank() == 3);
  CHECK(fx("F3").rank() == 4);
  CHECK(fx("F4").rank() == 2);
  CHECK(fx("F5").rank() == 1);
}

TEST_CASE("rank and independence") {
  const Matroid f1 = fx("F1");
  CHECK(f1.rank_of(f1.subset_from_labels({"a", "b", "c"})) == 2);
  CHECK(f1.rank_of(GroundSubset::empty(f1.size())) == 0);
  CHECK(f1.is_independent(f1.subset_from_labels({"a", "b"})));
  CHECK_FALSE(f1.is_independent(f1.subset_from_labels({"a", "b", "c"})));

  const Matroid f2 = fx("F2");
  CHECK(f2.rank_of(f2.subset_from_labels({"e1", "e2", "e4"})) == 2);

  const Matroid f5 = fx("F5");
  CHECK(f5.is_independent(f5.subset_from_labels({"a"})));

  CHECK_THROWS_AS(f1.rank_of(GroundSubset::empty(6)), ForeignSubset);
}

TEST_CASE("circuit enumeration matches the fixtures") {
  CHECK(circuit_strings(fx("F1")) ==
        std::vector<std::string>{"{a,b,c}", "{a,b,d}", "{a,c,d}", "{b,c,d}"});
  CHECK(circuit_strings(fx("F2")) ==
        std::vector<std::string>{"{e1,e2,e4}", "{e1,e3,e6}", "{e2,e3,e5}", "{e4,e5,e6}",
                                 "{e1,e2,e5,e6}", "{e1,e3,e4,e5}", "{e2,e3,e4,e6}"});
  CHECK(circuit_strings(fx("F3")) == std::vector<std::string>{"{a,b,c}", "{d,e,f}"});
}

TEST_CASE("circuit coefficients are normalized") {
  const Matroid f1 = fx("F1");
  CHECK(f1.circuit_coefficients(f1.subset_from_labels({"a", "b", "c"})).entries() ==
        std::vector<int>{1, 1, 2});
  CHECK(f1.circuit_coefficients(f1.subset_from_labels({"a", "c", "d"})).entries() ==
        std::vector<int>{1, 1, 1});
  const Matroid f4 = fx("F4");
  CHECK(f4.circuit_coefficients(f4.subset_from_labels({"a", "b", "c"})).entries() ==
        std::vector<int>{1, 1, 2});
  CHECK_THROWS_AS(f1.circuit_coefficients(f1.subset_from_labels({"a", "b"})), NotACircuit);
}

TEST_CASE("basis enumeration") {
  CHECK(fx("F1").bases().size() == 6);  // every pair
  const Matroid f4 = fx("F4");
  std::vector<std::string> f4_bases;
  for (const auto& b : f4.bases()) f4_bases.push_back(f4.set_to_string(b.members));
  CHECK(f4_bases == std::vector<std::string>{"{a,b}", "{a,c}", "{b,c}"});
  CHECK(fx("F5").bases().size() == 5);  // rank 1, five singletons
}

TEST_CASE("duality") {
  const Matroid f1 = fx("F1");
  const Matroid d1 = f1.dual();
  CHECK(d1.rank() == 2);
  CHECK(d1.circuits().size() == 4);  // self-dual shape
  CHECK(fx("F4").dual().rank() == 1);
  CHECK(fx("F2").dual().rank() == 3);
  // Dual of dual has the original circuit family.
  for (const char* name : {"F1", "F2", "F3", "F4", "F5"})
    CHECK(circuit_masks(fx(name)) == circuit_masks(fx(name).dual().dual()));
}

TEST_CASE("cocircuits") {
  const Matroid f1 = fx("F1");
  CHECK(f1.is_cocircuit(f1.subset_from_labels({"b", "c", "d"})));
  CHECK_FALSE(f1.is_cocircuit(f1.subset_from_labels({"c", "d"})));
  const Matroid f2 = fx("F2");
  CHECK(f2.is_cocircuit(f2.subset_from_labels({"e1", "e4", "e6"})));  // vertex star
}

TEST_CASE("girth") {
  CHECK(fx("F1").girth() == 3);
  CHECK(fx("F2").girth() == 3);
  CHECK(fx("F5").girth() == 2);
}

TEST_CASE("connectivity separations") {
  CHECK_FALSE(fx("F1").connectivity_separation(1).has_value());
  const Matroid f3 = fx("F3");
  const auto sep = f3.connectivity_separation(1);
  REQUIRE(sep.has_value());
  CHECK(f3.rank_of(sep->first) + f3.rank_of(sep->second) - f3.rank() <= 0);
  CHECK(fx("F2").connectivity_separation(3).has_value());
}

TEST_CASE("n-connectivity") {
  CHECK(fx("F2").is_n_connected(3));
  CHECK_FALSE(fx("F2").is_n_connected(4));
  CHECK_FALSE(fx("F3").is_n_connected(2));
  CHECK(fx("F1").is_connected());
  CHECK(fx("F5").is_connected());
}

TEST_CASE("vertical connectivity") {
  CHECK(fx("F2").is_vertically_n_connected(3));
  CHECK(fx("F2").is_vertically_n_connected(4));
  CHECK_FALSE(fx("F3").is_vertically_n_connected(2));
}

TEST_CASE("connectivity agrees with the common-circuit characterization") {
  for (const char* name : {"F1", "F2", "F3", "F4", "F5"}) {
    const Matroid m = fx(name);
    bool all_pairs = true;
    for (int i = 0; i < m.size() && all_pairs; ++i) {
      for (int j = i + 1; j < m.size(); ++j) {
        bool common = false;
        for (const auto& c : m.circuits()) {
          if (c.members.contains(i) && c.members.contains(j)) {
            common = true;
            break;
          }
        }
        if (!common) {
          all_pairs = false;
          break;
        }
      }
    }
    CHECK(m.is_connected() == all_pairs);
  }
}

TEST_CASE("circuit decompositions") {
  const Matroid f3 = fx("F3");
  const auto deco = f3.eulerian_decomposition();
  REQUIRE(deco.has_value());
  REQUIRE(deco->size() == 2);
  CHECK(f3.set_to_string(deco->at(0).members) == "{a,b,c}");
  CHECK(f3.set_to_string(deco->at(1).members) == "{d,e,f}");

  const Matroid f4 = fx("F4");
  const auto deco4 = f4.eulerian_decomposition();
  REQUIRE(deco4.has_value());
  CHECK(deco4->size() == 1);

  CHECK_FALSE(fx("F2").eulerian_decomposition().has_value());

  // Any decomposition is a partition into circuits.
  for (const auto& parts : f3.all_eulerian_decompositions()) {
    std::uint32_t seen = 0;
    for (const auto& c : parts) {
      CHECK((seen & c.members.bits()) == 0);
      seen |= c.members.bits();
    }
    CHECK(seen == GroundSubset::full(f3.size()).bits());
  }
}

TEST_CASE("circuit axioms hold on the fixtures") {
  for (const char* name : {"F1", "F2", "F3", "F4", "F5"}) {
    const Matroid m = fx(name);
    const auto cs = m.circuits();
    for (std::size_t i = 0; i < cs.size(); ++i) {
      for (std::size_t j = 0; j < cs.size(); ++j) {
        if (i == j) continue;
        CHECK_FALSE(cs[i].members.subset_of(cs[j].members));  // antichain
      }
    }
    // Elimination: distinct circuits meeting in e leave a circuit when e is removed.
    for (std::size_t i = 0; i < cs.size(); ++i) {
      for (std::size_t j = i + 1; j < cs.size(); ++j) {
        const GroundSubset common = cs[i].members.intersect(cs[j].members);
        for (int e : common.indices()) {
          const GroundSubset hull = cs[i].members.unite(cs[j].members).without(e);
          bool contains_circuit = false;
          for (const auto& c : cs) {
            if (c.members.subset_of(hull)) {
              contains_circuit = true;
              break;
            }
          }
          CHECK(contains_circuit);
        }
      }
    }
  }
}

TEST_CASE("basis exchange holds on the fixtures") {
  for (const char* name : {"F1", "F2", "F3", "F4", "F5"}) {
    const Matroid m = fx(name);
    const auto bs = m.bases();
    std::set<std::uint32_t> basis_masks;
    for (const auto& b : bs) basis_masks.insert(b.members.bits());
    for (const auto& b1 : bs) {
      for (const auto& b2 : bs) {
        for (int x : b1.members.minus(b2.members).indices()) {
          bool exchanged = false;
          for (int y : b2.members.minus(b1.members).indices()) {
            if (basis_masks.count(b1.members.without(x).with(y).bits())) {
              exchanged = true;
              break;
            }
          }
          CHECK(exchanged);
        }
      }
    }
  }
}

TEST_CASE("rank is monotone and submodular on the fixtures") {
  for (const char* name : {"F1", "F4", "F5"}) {
    const Matroid m = fx(name);
    const int n = m.size();
    for (std::uint32_t a = 0; a < (1u << n); ++a) {
      for (std::uint32_t b = 0; b < (1u << n); ++b) {
        const GroundSubset sa(a, n), sb(b, n);
        const int ra = m.rank_of(sa), rb = m.rank_of(sb);
        if (sa.subset_of(sb)) CHECK(ra <= rb);
        CHECK(m.rank_of(sa.unite(sb)) + m.rank_of(sa.intersect(sb)) <= ra + rb);
      }
    }
  }
}
