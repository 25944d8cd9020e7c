#include "doctest.h"

#include <algorithm>

#include "csw/align.hpp"
#include "csw/errors.hpp"
#include "csw/rng.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace csw;
using namespace cswtest;

TEST_CASE("pharaoh parsing and formatting") {
  AlignmentSet a = AlignmentSet::parse_pharaoh("2-3 0-0 1-1");
  CHECK(a.size() == 3);
  CHECK(a.to_pharaoh() == "0-0 1-1 2-3");  // canonical sorted form
  CHECK(a.contains({2, 3}));
  CHECK_FALSE(a.contains({3, 2}));

  CHECK(AlignmentSet::parse_pharaoh("").empty());
  CHECK_THROWS_AS(AlignmentSet::parse_pharaoh("1_2"), FormatError);
  CHECK_THROWS_AS(AlignmentSet::parse_pharaoh("1-"), FormatError);
  CHECK_THROWS_AS(AlignmentSet::parse_pharaoh("-1"), FormatError);
  CHECK_THROWS_AS(AlignmentSet::parse_pharaoh("a-b"), FormatError);
}

TEST_CASE("union is commutative, associative, idempotent, with identity") {
  AlignmentSet a = AlignmentSet::parse_pharaoh("0-0", "a");
  AlignmentSet b = AlignmentSet::parse_pharaoh("1-1", "b");
  CHECK(set_union(a, b).links() == AlignmentSet::parse_pharaoh("0-0 1-1").links());
  CHECK(set_union(a, b).label() == "a+b");
  CHECK(set_union(a, a).links() == a.links());
  CHECK(set_union(AlignmentSet{}, a).links() == a.links());

  Rng rng(21);
  for (int round = 0; round < 100; ++round) {
    auto random_set = [&rng]() {
      std::vector<Link> links;
      int n = static_cast<int>(rng.below(6));
      for (int i = 0; i < n; ++i)
        links.push_back({static_cast<int>(rng.below(5)), static_cast<int>(rng.below(5))});
      return AlignmentSet(std::move(links), "");
    };
    AlignmentSet x = random_set(), y = random_set(), z = random_set();
    CHECK(set_union(x, y).links() == set_union(y, x).links());
    CHECK(set_union(set_union(x, y), z).links() == set_union(x, set_union(y, z)).links());
    CHECK(set_union(x, x).links() == x.links());
  }
}

TEST_CASE("monotone 1:1 alignment of length 3 yields all six segment pairs") {
  AlignmentSet a = AlignmentSet::parse_pharaoh("0-0 1-1 2-2");
  std::vector<SegmentPair> segments = extract_segments(a, 3, 3, 3);
  CHECK(segments.size() == 6);
  for (const SegmentPair& seg : segments) {
    CHECK(seg.src == seg.tgt);
    CHECK(is_consistent(a, seg));
  }
}

TEST_CASE("unaligned sentence yields no segments") {
  CHECK(extract_segments(AlignmentSet{}, 4, 4, 7).empty());
}

TEST_CASE("golden sentence segments") {
  BiSentence s = golden();
  std::vector<SegmentPair> segments = extract_segments(s);

  auto has = [&](SegmentPair p) {
    return std::find(segments.begin(), segments.end(), p) != segments.end();
  };
  CHECK(has({{3, 5}, {4, 6}}));  // اكل ايطالي <-> Italian food
  CHECK(has({{1, 2}, {1, 3}}));  // عايز <-> want to
  CHECK(has({{2, 3}, {3, 4}}));  // اجرب <-> try
  CHECK(has({{3, 4}, {5, 6}}));  // اكل <-> food (consistent on its own)
  CHECK(has({{4, 5}, {4, 5}}));  // ايطالي <-> Italian (consistent, not order-safe)
  CHECK_FALSE(has({{1, 2}, {1, 2}}));  // عايز <-> want leaks the "to" link

  for (const SegmentPair& seg : segments) CHECK(is_consistent(s.alignment, seg));
  CHECK(std::is_sorted(segments.begin(), segments.end()));
}

TEST_CASE("order preservation on the golden sentence") {
  BiSentence s = golden();
  CHECK(order_preserving(s, {{2, 3}, {3, 4}}));        // try: switch allowed
  CHECK_FALSE(order_preserving(s, {{4, 5}, {4, 5}}));  // lone adjective crosses
  CHECK_FALSE(order_preserving(s, {{3, 4}, {5, 6}}));  // lone noun crosses
  CHECK(order_preserving(s, {{3, 5}, {4, 6}}));        // full noun phrase is safe
  CHECK(order_preserving(s, {{0, 6}, {0, 7}}));        // whole sentence, vacuous
}

TEST_CASE("segment extraction matches exhaustive enumeration") {
  Rng rng(31);
  for (int round = 0; round < 300; ++round) {
    BiSentence s = random_sentence(rng, 6);
    int max_len = static_cast<int>(rng.below(6)) + 1;
    std::vector<SegmentPair> got = extract_segments(s, max_len);
    std::vector<SegmentPair> expected =
        oracle_segments(s.alignment.links(), static_cast<int>(s.src.size()),
                        static_cast<int>(s.tgt.size()), max_len);
    REQUIRE(got == expected);
    for (const SegmentPair& seg : got)
      CHECK(order_preserving(s, seg) == oracle_order_preserving(s.alignment.links(), seg));
  }
}
