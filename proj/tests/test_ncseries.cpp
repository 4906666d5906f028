#include <doctest.h>

#include <random>
#include <sstream>

#include "monobar/error.hpp"
#include "monobar/ncseries.hpp"
#include "oracles.hpp"

using namespace monobar;

namespace {

RelationSet rels(const Alphabet& a, std::vector<const char*> ws) {
  std::vector<Word> out;
  for (const char* w : ws) out.push_back(Word::parse(a, w));
  return reduce_antichain(out);
}

std::string dump(const NCSeries& s, const Alphabet& a) {
  std::ostringstream out;
  write_series(out, s, a);
  return out.str();
}

} // namespace

TEST_CASE("hilbert series examples") {
  const Alphabet x = Alphabet::from_chars("x");
  CHECK(dump(hilbert_truncated(x, RelationSet{}, 3), x) == "1\t1\nx\t1\nxx\t1\nxxx\t1\n");
  CHECK(dump(hilbert_truncated(x, rels(x, {"xx"}), 3), x) == "1\t1\nx\t1\n");
  const Alphabet ab = Alphabet::from_chars("ab");
  const NCSeries h = hilbert_truncated(ab, rels(ab, {"ab"}), 2);
  CHECK(h.term_count() == 6);
  CHECK(h.coeff(Word::parse(ab, "ab")) == 0);
  CHECK(h.coeff(Word::parse(ab, "ba")) == 1);
  CHECK_THROWS_AS(hilbert_truncated(ab, RelationSet{}, 30, 1000), CapacityError);
}

TEST_CASE("series storage") {
  NCSeries s(2, 2);
  s.set(Word{0, 1}, 5);
  CHECK(s.coeff(Word{0, 1}) == 5);
  s.set(Word{0, 1}, 0);
  CHECK(s.term_count() == 0);
  CHECK_THROWS_AS(s.set(Word{0, 0, 0}, 1), InputError);
  CHECK_THROWS_AS(s.set(Word{2}, 1), InputError);
}

TEST_CASE("inversion examples") {
  const Alphabet x = Alphabet::from_chars("x");
  const NCSeries inv = invert_series(hilbert_truncated(x, rels(x, {"xx"}), 5));
  CHECK(dump(inv, x) == "1\t1\nx\t-1\nxx\t1\nxxx\t-1\nxxxx\t1\nxxxxx\t-1\n");
  CHECK(dump(invert_series(hilbert_truncated(x, RelationSet{}, 4)), x) == "1\t1\nx\t-1\n");
  const Alphabet xy = Alphabet::from_chars("xy");
  CHECK(dump(invert_series(hilbert_truncated(xy, RelationSet{}, 3)), xy) == "1\t1\nx\t-1\ny\t-1\n");

  NCSeries bad(1, 2);
  bad.set(Word{}, 2);
  CHECK_THROWS_AS(invert_series(bad), InputError);
}

TEST_CASE("inverse times series is one") {
  const Alphabet a = Alphabet::from_chars("xyz");
  const NCSeries h = hilbert_truncated(a, rels(a, {"xy", "zzx", "yy"}), 6);
  const NCSeries inv = invert_series(h);
  // (h * inv)(w) = sum over splittings, zero except at the empty word
  for (const auto& [w, c] : h.terms()) {
    (void)c;
    BigInt sum = 0;
    for (std::size_t i = 0; i <= w.size(); ++i) {
      const Word u(std::vector<Letter>(w.letters.begin(), w.letters.begin() + i));
      const Word v(std::vector<Letter>(w.letters.begin() + i, w.letters.end()));
      sum += h.coeff(u) * inv.coeff(v);
    }
    CHECK(sum == (w.empty() ? 1 : 0));
  }
}

TEST_CASE("euler crosscheck examples") {
  const Alphabet a = Alphabet::from_chars("xy");
  const auto e1 = euler_crosscheck(Word::parse(a, "xy"), rels(a, {"xy"}));
  CHECK(e1.coeff == 1);
  CHECK(e1.alternating_sum == 1);
  const auto e2 = euler_crosscheck(Word::parse(a, "xy"), rels(a, {"yy"}));
  CHECK(e2.coeff == 0);
  CHECK(e2.alternating_sum == 0);
  const auto e3 = euler_crosscheck(Word::parse(a, "xxxx"), rels(a, {"xxx"}));
  CHECK(e3.coeff == -1);
  CHECK(e3.alternating_sum == -1);
}

TEST_CASE("inverse coefficients agree with the block oracles") {
  std::mt19937_64 rng(23);
  const Alphabet abc = Alphabet::from_chars("abc");
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t k = 1 + rng() % 3;
    std::vector<std::string> rs(1 + rng() % 3);
    std::vector<Word> ws;
    for (auto& r : rs) {
      r.assign(2 + rng() % 3, 'a');
      for (auto& ch : r) ch = char('a' + rng() % k);
      ws.push_back(Word::parse(abc, r));
    }
    const RelationSet R = reduce_antichain(ws);
    const Alphabet alpha = Alphabet::from_chars(std::string("abc").substr(0, k));
    const NCSeries inv = invert_series(hilbert_truncated(alpha, R, 7));
    for (int j = 0; j < 30; ++j) {
      std::string w(1 + rng() % 7, 'a');
      for (auto& ch : w) ch = char('a' + rng() % k);
      const Word W = Word::parse(abc, w);
      const long long expect = oracle::inverse_coefficient_dp(w, rs);
      CHECK(expect == oracle::inverse_coefficient_right(w, rs));
      CHECK(inv.coeff(W) == expect);
      CHECK(inverse_coefficient(hilbert_truncated(alpha, R, w.size()), W) == expect);
      CHECK(euler_crosscheck(W, R).coeff == expect);
    }
  }
}
