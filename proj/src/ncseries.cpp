#include "monobar/ncseries.hpp"

#include <string>
#include <vector>

#include "monobar/error.hpp"

namespace monobar {

BigInt NCSeries::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void NCSeries::set(const Word& w, BigInt c) {
  if (w.size() > truncation_)
    throw InputError("word of length " + std::to_string(w.size()) + " beyond truncation " +
                     std::to_string(truncation_));
  for (Letter l : w.letters)
    if (l >= alphabet_size_) throw InputError("series word uses a letter outside the alphabet");
  if (c == 0)
    terms_.erase(w);
  else
    terms_[w] = std::move(c);
}

NCSeries hilbert_truncated(const Alphabet& alphabet, const RelationSet& relations, std::size_t N,
                           std::size_t work_limit) {
  NCSeries series(alphabet.size(), N);
  const AhoCorasick& matcher = relations.matcher();
  std::size_t visited = 0;
  Word w;

  auto extend = [&](auto& self, AhoCorasick::State state) -> void {
    if (++visited > work_limit)
      throw CapacityError("Hilbert series enumeration exceeds " + std::to_string(work_limit) +
                          " words");
    series.set(w, 1);
    if (w.size() == N) return;
    for (Letter l = 0; l < alphabet.size(); ++l) {
      const auto next = matcher.step(state, l);
      if (matcher.accepting(next)) continue;
      w.letters.push_back(l);
      self(self, next);
      w.letters.pop_back();
    }
  };
  extend(extend, AhoCorasick::kRoot);
  return series;
}

NCSeries invert_series(const NCSeries& s, std::size_t work_limit) {
  if (s.coeff(Word{}) != 1) throw InputError("series constant term is not 1; cannot invert");
  const std::size_t k = s.alphabet_size();
  const std::size_t N = s.truncation();

  // dense per-length tables indexed by the base-k code of the word
  std::vector<std::size_t> count(N + 1, 1);
  std::size_t total = 1;
  for (std::size_t L = 1; L <= N; ++L) {
    if (k != 0 && count[L - 1] > work_limit / k)
      throw CapacityError("series inversion exceeds the work limit");
    count[L] = count[L - 1] * k;
    total += count[L];
    if (total > work_limit) throw CapacityError("series inversion exceeds the work limit");
  }

  std::vector<std::vector<BigInt>> given(N + 1), inverse(N + 1);
  for (std::size_t L = 0; L <= N; ++L) {
    given[L].assign(count[L], 0);
    inverse[L].assign(count[L], 0);
  }
  for (const auto& [w, c] : s.terms()) {
    std::size_t code = 0;
    for (Letter l : w.letters) code = code * k + l;
    given[w.size()][code] = c;
  }

  inverse[0][0] = 1;
  for (std::size_t L = 1; L <= N; ++L) {
    for (std::size_t code = 0; code < count[L]; ++code) {
      BigInt acc = 0;
      // prefix u of length i has code / k^{L-i}, suffix v has code % k^{L-i}
      std::size_t suffix_modulus = count[L];
      for (std::size_t i = 1; i <= L; ++i) {
        suffix_modulus /= k;
        const BigInt& su = given[i][code / suffix_modulus];
        if (su == 0) continue;
        const BigInt& sv = inverse[L - i][code % suffix_modulus];
        if (sv != 0) acc += su * sv;
      }
      inverse[L][code] = -acc;
    }
  }

  NCSeries out(k, N);
  for (std::size_t L = 0; L <= N; ++L) {
    for (std::size_t code = 0; code < count[L]; ++code) {
      if (inverse[L][code] == 0) continue;
      Word w;
      w.letters.resize(L);
      std::size_t c = code;
      for (std::size_t i = L; i-- > 0;) {
        w.letters[i] = static_cast<Letter>(c % k);
        c /= k;
      }
      out.set(w, std::move(inverse[L][code]));
    }
  }
  return out;
}

BigInt inverse_coefficient(const NCSeries& s, const Word& w) {
  if (s.coeff(Word{}) != 1) throw InputError("series constant term is not 1; cannot invert");
  if (w.size() > s.truncation()) throw InputError("word beyond the series truncation");
  const std::size_t n = w.size();
  // suffix_inverse[i] = S(w[i..n))
  std::vector<BigInt> suffix_inverse(n + 1, 0);
  suffix_inverse[n] = 1;
  for (std::size_t start = n; start-- > 0;) {
    BigInt acc = 0;
    Word u;
    for (std::size_t cut = start + 1; cut <= n; ++cut) {
      u.letters.push_back(w[cut - 1]);
      const BigInt su = s.coeff(u);
      if (su != 0) acc += su * suffix_inverse[cut];
    }
    suffix_inverse[start] = -acc;
  }
  return suffix_inverse[0];
}

EulerCrosscheck euler_crosscheck(const Word& w, const RelationSet& relations,
                                 std::size_t max_basis) {
  std::size_t alphabet_size = 0;
  for (Letter l : w.letters) alphabet_size = std::max<std::size_t>(alphabet_size, l + 1);
  NCSeries factors(alphabet_size, w.size());
  factors.set(Word{}, 1);
  for (std::size_t i = 0; i < w.size(); ++i) {
    Word u;
    for (std::size_t j = i; j < w.size(); ++j) {
      u.letters.push_back(w[j]);
      if (!is_zero_word(u, relations)) factors.set(u, 1);
    }
  }

  EulerCrosscheck result{inverse_coefficient(factors, w), 0};
  const GradedComplex bar = bar_subcomplex(w, relations, max_basis);
  // degree g sits at bar index n - g
  for (std::size_t g = 0; g < bar.degree_count(); ++g) {
    const std::size_t k = w.size() - g;
    result.alternating_sum += (k % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(bar.dim(g));
  }
  return result;
}

void write_series(std::ostream& out, const NCSeries& s, const Alphabet& alphabet) {
  for (const auto& [w, c] : s.terms())
    out << (w.empty() ? std::string("1") : w.render(alphabet)) << '\t' << c << '\n';
}

} // namespace monobar
