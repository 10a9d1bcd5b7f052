#include <algorithm>
#include <map>

#include "brauer/error.hpp"
#include "brauer/partition.hpp"
#include "doctest.h"

using namespace brauer;

TEST_CASE("partition canonical form") {
  CHECK(Partition({3, 1, 0, 0}) == Partition({3, 1}));
  CHECK(Partition({}).empty());
  CHECK(Partition({2, 2, 1}).degree() == 5);
  CHECK_THROWS_AS(Partition({1, 2}), Error);
  CHECK_THROWS_AS(Partition({2, -1}), Error);
}

TEST_CASE("transpose") {
  CHECK(transpose(Partition{1}) == Partition{1});
  CHECK(transpose(Partition{3, 1}) == Partition({2, 1, 1}));
  CHECK(transpose(Partition({5, 2, 1, 1, 1})) == Partition({5, 2, 1, 1, 1}));
  CHECK(transpose(Partition{}) == Partition{});
  for (const Partition& p : partitions_up_to(20)) REQUIRE(transpose(transpose(p)) == p);
}

TEST_CASE("skew boxes and contents") {
  SkewBoxes s = skew(Partition{2, 2}, Partition{});
  CHECK(s.contents == std::vector<int>{-1, 0, 0, 1});
  CHECK(s.boxes.size() == 4);
  CHECK(skew(Partition{3, 1}, Partition{3, 1}).boxes.empty());
  CHECK(skew(Partition{1, 1}, Partition{}).contents == std::vector<int>{-1, 0});
  // row-major order, 1-indexed
  s = skew(Partition{3, 2}, Partition{1});
  REQUIRE(s.boxes.size() == 4);
  CHECK(s.boxes[0] == Box{1, 2});
  CHECK(s.boxes[3] == Box{2, 2});
  CHECK_THROWS_AS(skew(Partition{2}, Partition{1, 1}), Error);
  try {
    skew(Partition{1}, Partition{2});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotSubpartition);
  }
}

TEST_CASE("balanced pairs") {
  CHECK(is_balanced_pair(Partition{}, Partition{2, 2}, 1));
  CHECK(is_balanced_pair(Partition{3, 1}, Partition{3, 1}, -4));
  CHECK_FALSE(is_balanced_pair(Partition{}, Partition{1, 1}, 2));
  CHECK(is_balanced(Partition{}, Partition{2, 2}, 1));
  CHECK(is_balanced(Partition{2, 2}, Partition{3, 2, 1}, 1));
  CHECK(is_balanced(Partition{4, 2}, Partition{4, 2}, 3));
  CHECK_FALSE(is_balanced(Partition{}, Partition{1}, 1));
  CHECK_THROWS_AS(is_balanced(Partition{}, Partition{2, 2}, 0), Error);
}

TEST_CASE("balanced pairs: content pairing is necessary") {
  // A pairing of contents summing to 1-delta must exist; count by hand.
  for (long delta : {1L, 2L, 3L, -1L, -2L}) {
    for (const Partition& l : partitions_up_to(7)) {
      const SkewBoxes s = skew(l, Partition{});
      std::map<long, int> count;
      for (int c : s.contents) ++count[c];
      bool pairable = true;
      for (auto [c, k] : count) {
        const long partner = 1 - delta - c;
        if (partner == c) pairable = pairable && k % 2 == 0;
        else pairable = pairable && count.count(partner) && count[partner] == k;
      }
      if (is_balanced_pair(Partition{}, l, delta)) CHECK(pairable);
    }
  }
}

TEST_CASE("addable and removable boxes") {
  CHECK(removable(Partition{}).empty());
  CHECK(addable(Partition{1}) == std::vector<Partition>{Partition{2}, Partition{1, 1}});
  CHECK(removable(Partition{2, 2}) == std::vector<Partition>{Partition{2, 1}});
  CHECK(addable(Partition{}) == std::vector<Partition>{Partition{1}});
  for (const Partition& p : partitions_up_to(12)) {
    REQUIRE(addable(p).size() == removable(p).size() + 1);
  }
}

TEST_CASE("partition counts and order") {
  CHECK(partitions_of(0).size() == 1);
  CHECK(partitions_of(10).size() == 42);
  CHECK(partitions_up_to(4).size() == 1 + 1 + 2 + 3 + 5);
  const auto six = partitions_of(6);
  CHECK(std::is_sorted(six.begin(), six.end(), label_less));
  CHECK(label_less(Partition{4, 2, 1, 1}, Partition{3, 3, 2}));
  CHECK(label_less(Partition{5, 1, 1, 1}, Partition{4, 3, 2, 1}));
  CHECK_FALSE(label_less(Partition{2}, Partition{2}));
}

TEST_CASE("standard tableaux counts") {
  CHECK(count_standard_tableaux(Partition{}) == 1);
  CHECK(count_standard_tableaux(Partition{2, 2}) == 2);
  CHECK(count_standard_tableaux(Partition{3, 2, 1}) == 16);
  CHECK(count_standard_tableaux(Partition{3, 3, 3}) == 42);
  // sum of squares is n!
  long long total = 0;
  for (const Partition& p : partitions_of(7)) total += count_standard_tableaux(p) * count_standard_tableaux(p);
  CHECK(total == 5040);
}

TEST_CASE("labels and parsing") {
  CHECK(to_string(Partition{}) == "0");
  CHECK(to_string(Partition{5, 2, 1, 1, 1}) == "5,2,1,1,1");
  CHECK(compact_label(Partition{5, 2, 1, 1, 1}) == "521^3");
  CHECK(compact_label(Partition{4, 4, 4, 4}) == "4^4");
  CHECK(compact_label(Partition{6, 4, 2, 2, 1, 1}) == "642211");
  CHECK(compact_label(Partition{12, 1}) == "12,1");
  CHECK(parse_partition("0") == Partition{});
  CHECK(parse_partition("521^3") == Partition({5, 2, 1, 1, 1}));
  CHECK(parse_partition("5,2,1^3") == Partition({5, 2, 1, 1, 1}));
  CHECK(parse_partition("64221^2") == Partition({6, 4, 2, 2, 1, 1}));
  CHECK(parse_partition("4^4") == Partition({4, 4, 4, 4}));
  CHECK(parse_partition("12,1") == Partition({12, 1}));
  CHECK_THROWS_AS(parse_partition("1,2"), Error);
  CHECK_THROWS_AS(parse_partition("x"), Error);
  CHECK(parse_partition("").empty());
  CHECK(compact_label(Partition({2, 2, 2, 1})) == "2,2,2,1");
  CHECK(compact_label(Partition({5, 2, 1, 1, 1})) == "521^3");
  for (const Partition& p : partitions_up_to(9)) {
    REQUIRE(parse_partition(to_string(p)) == p);
    REQUIRE(parse_partition(compact_label(p)) == p);
  }
}
