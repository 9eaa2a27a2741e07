#include <set>

#include "doctest.h"
#include "lscat/canonical.hpp"
#include "lscat/census.hpp"
#include "lscat/cohomology.hpp"
#include "lscat/graph.hpp"
#include "lscat/homotopy.hpp"
#include "lscat/io.hpp"

using namespace lscat;

TEST_CASE("connected graph enumeration matches the classical counts") {
  const std::size_t expected[] = {1, 1, 2, 6, 21, 112};
  for (int n = 1; n <= 6; ++n) {
    std::vector<SimpleGraph> all = enumerate_connected(n);
    CHECK(all.size() == expected[n - 1]);
    std::set<std::string> certs;
    for (const SimpleGraph& g : all) {
      CHECK(g.order() == n);
      CHECK(g.is_connected());
      certs.insert(canonical_certificate(g));
    }
    CHECK(certs.size() == all.size());  // pairwise non-isomorphic
  }
}

TEST_CASE("census cells group by chi, Betti and cup") {
  CensusReport rep = census({5, HomotopyBudget{3, 400000}, 0});
  CHECK(rep.order == 5);
  CHECK(rep.iso_count == 21);
  for (const CensusCell& cell : rep.cells) {
    for (std::size_t id : cell.class_ids) {
      const SimpleGraph& g = rep.classes[id].representative;
      CHECK(euler_characteristic(g) == cell.chi);
      std::vector<int> b = betti_numbers(g);
      while (!b.empty() && b.back() == 0) b.pop_back();
      CHECK(b == cell.betti);
      CupResult cup = cup_length(g);
      REQUIRE(cup.tight());
      CHECK(cup.lower == cell.cup);
    }
  }
}

TEST_CASE("homotopy census of tiny orders") {
  // up to 3 vertices everything connected is contractible
  for (int n = 1; n <= 3; ++n) {
    CensusReport rep = census({n, HomotopyBudget{3, 400000}, 0});
    CHECK(rep.fully_resolved);
    CHECK(rep.homotopy_count == 1);
  }
  // order 4 adds the circle
  CensusReport four = census({4, HomotopyBudget{3, 400000}, 0});
  CHECK(four.fully_resolved);
  CHECK(four.homotopy_count == 2);
  // order 5 adds the wedge of two circles (K_{2,3})
  CensusReport five = census({5, HomotopyBudget{3, 400000}, 0});
  CHECK(five.fully_resolved);
  CHECK(five.homotopy_count == 3);
}

TEST_CASE("class representatives are cores with merged members") {
  CensusReport rep = census({5, HomotopyBudget{3, 400000}, 0});
  std::size_t members = 0;
  for (const CensusClass& cls : rep.classes) {
    members += cls.member_count;
    CHECK(removable_vertices(cls.representative).empty());
    CHECK(parse_graph6(cls.representative_g6).order() == cls.representative.order());
  }
  CHECK(members == rep.iso_count);
  CHECK(rep.classes.size() < rep.iso_count);  // collapsing happened
}

TEST_CASE("census json carries the headline numbers") {
  CensusReport rep = census({4, HomotopyBudget{3, 400000}, 0});
  std::string js = census_to_json(rep);
  CHECK(js.find("\"order\": 4") != std::string::npos);
  CHECK(js.find("\"iso_count\": 6") != std::string::npos);
  CHECK(js.find("\"homotopy_count\": 2") != std::string::npos);
}

TEST_CASE("threaded and serial enumeration agree") {
  std::vector<SimpleGraph> serial = enumerate_connected(5, 1);
  std::vector<SimpleGraph> parallel = enumerate_connected(5, 4);
  REQUIRE(serial.size() == parallel.size());
  std::set<std::string> a, b;
  for (const SimpleGraph& g : serial) a.insert(canonical_certificate(g));
  for (const SimpleGraph& g : parallel) b.insert(canonical_certificate(g));
  CHECK(a == b);
}
