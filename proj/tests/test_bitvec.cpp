#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gsd/bitvec.hpp"
#include "gsd/rng.hpp"

using gsd::BitVec;

TEST_CASE("basic bit access and round trips") {
  BitVec v(70);
  CHECK(v.size() == 70);
  CHECK(v.none());
  v.set(0, true);
  v.set(69, true);
  v.flip(33);
  CHECK(v.get(0));
  CHECK(v.get(33));
  CHECK(v.get(69));
  CHECK(v.popcount() == 3);
  CHECK(BitVec::from_string(v.to_string()) == v);
}

TEST_CASE("from_string rejects junk") {
  CHECK_THROWS_AS(BitVec::from_string("01x1"), std::invalid_argument);
}

TEST_CASE("xor_with and equality") {
  BitVec a = BitVec::from_string("0101");
  BitVec b = BitVec::from_string("0011");
  a.xor_with(b);
  CHECK(a == BitVec::from_string("0110"));
  CHECK_THROWS_AS(a.xor_with(BitVec(5)), std::invalid_argument);
}

TEST_CASE("lex_less orders by first differing coordinate") {
  CHECK(gsd::lex_less(BitVec::from_string("0011"), BitVec::from_string("0101")));
  CHECK(!gsd::lex_less(BitVec::from_string("0101"), BitVec::from_string("0011")));
  CHECK(!gsd::lex_less(BitVec::from_string("0101"), BitVec::from_string("0101")));
  // differing beyond one word
  BitVec x(130), y(130);
  y.set(129, true);
  CHECK(gsd::lex_less(x, y));
  CHECK(!gsd::lex_less(y, x));
}

TEST_CASE("gf2_rank on known matrices") {
  std::vector<BitVec> rows;
  rows.push_back(BitVec::from_string("1111"));
  rows.push_back(BitVec::from_string("0101"));
  rows.push_back(BitVec::from_string("0011"));
  CHECK(gsd::gf2_rank(rows) == 3);
  rows.push_back(BitVec::from_string("1001"));  // sum of the first three
  CHECK(gsd::gf2_rank(rows) == 3);
  CHECK(gsd::gf2_rank({BitVec(8)}) == 0);
}

TEST_CASE("hash spreads and respects equality") {
  gsd::BitVecHash hash;
  gsd::Rng rng(7);
  BitVec a(200), b(200);
  for (int i = 0; i < 50; ++i) {
    const std::size_t idx = rng.next_u64() % 200;
    a.set(idx, true);
    b.set(idx, true);
  }
  CHECK(hash(a) == hash(b));
  b.flip(3);
  CHECK(hash(a) != hash(b));  // not guaranteed in general, but a healthy mixer
}
