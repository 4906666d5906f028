#include "monobar/recurrence.hpp"

#include <string>

namespace monobar {

LetterCombo LetterCombo::monomial(const std::string& word) {
  LetterCombo c;
  c.add(word, 1);
  return c;
}

LetterCombo LetterCombo::power(char letter, std::size_t exponent) {
  return monomial(std::string(exponent, letter));
}

void LetterCombo::add(const std::string& word, const BigInt& coeff) {
  if (coeff < 0) throw InputError("letter combinations carry nonnegative coefficients");
  if (coeff == 0) return;
  for (char ch : word)
    if (ch != 'x' && ch != 'y' && ch != 'z')
      throw InputError(std::string("letter '") + ch + "' is not one of x, y, z");
  if (!terms_.empty() && word.size() != length_)
    throw InputError("combination mixes word lengths " + std::to_string(length_) + " and " +
                     std::to_string(word.size()));
  length_ = word.size();
  terms_[word] += coeff;
}

BigInt LetterCombo::coeff(const std::string& word) const {
  auto it = terms_.find(word);
  return it == terms_.end() ? BigInt(0) : it->second;
}

RewriteTable RewriteTable::standard() { return with_xz('z'); }

RewriteTable RewriteTable::with_xz(char letter) {
  RewriteTable t;
  t.images_ = {{"xx", "yz"}, {"xy", "z"}, {"yx", "z"}, {"yz", "z"}, {"zy", "z"},
               {"yy", ""},   {"zz", "x"}};
  const std::string image = letter == '0' ? std::string() : std::string(1, letter);
  t.images_["xz"] = image;
  t.images_["zx"] = image;
  return t;
}

LetterCombo rewrite_step(const LetterCombo& c, const RewriteTable& table, RewriteLog* log) {
  if (c.word_length() % 2 != 0 || (!c.empty() && c.word_length() == 0))
    throw InputError("rewriting needs words of even positive length");
  LetterCombo out;
  for (const auto& [word, coeff] : c.terms()) {
    std::map<std::string, BigInt> partial{{"", coeff}};
    for (std::size_t i = 0; i < word.size(); i += 2) {
      const std::string pair = word.substr(i, 2);
      if (log && RewriteTable::is_assumed(pair)) log->consulted_assumed = true;
      const std::string& image = table.image(pair);
      std::map<std::string, BigInt> next;
      for (const auto& [prefix, value] : partial)
        for (char letter : image) next[prefix + letter] += value;
      partial.swap(next);
      if (partial.empty()) break;
    }
    for (const auto& [w, value] : partial) out.add(w, value);
  }
  return out;
}

std::array<BigInt, 6> coeff_vector(const LetterCombo& c) {
  if (!c.empty() && c.word_length() != 2)
    throw InputError("coefficient vector needs words of length 2");
  auto mirror = [&](const char* u, const char* v) {
    const BigInt cu = c.coeff(u), cv = c.coeff(v);
    if (cu != cv)
      throw SymmetryError(std::string("coefficient of ") + u + " (" + cu.str() + ") differs from " +
                          v + " (" + cv.str() + ")");
    return cu;
  };
  return {c.coeff("xx"), c.coeff("yy"), c.coeff("zz"),
          mirror("xy", "yx"), mirror("xz", "zx"), mirror("yz", "zy")};
}

RecurrenceState recurrence_step(const RecurrenceState& s) {
  const BigInt a2q = s.a + 2 * s.q;
  const BigInt apr = s.a + 2 * s.p + 2 * s.r;
  RecurrenceState next;
  next.n = s.n + 1;
  next.a = s.c * s.c;
  next.b = a2q * a2q;
  next.c = apr * apr;
  next.p = s.c * (s.a + s.q);
  next.q = s.c * apr;
  next.r = a2q * apr;
  return next;
}

RecurrenceState recurrence_state(std::size_t n) {
  if (n == 0) throw InputError("recurrence index starts at 1");
  RecurrenceState s = RecurrenceState::initial();
  while (s.n < n) s = recurrence_step(s);
  return s;
}

BigInt recurrence_dims(std::size_t n) {
  const RecurrenceState s = recurrence_state(n);
  return s.a + s.c + 2 * s.p + 2 * s.r;
}

std::array<BigInt, 6> rewritten_power_vector(std::size_t n, const RewriteTable& table,
                                             RewriteLog* log) {
  if (n == 0 || n > 6) throw InputError("rewrite depth must be between 1 and 6");
  LetterCombo c = LetterCombo::power('x', std::size_t{1} << (n + 1));
  for (std::size_t i = 0; i < n; ++i) c = rewrite_step(c, table, log);
  return coeff_vector(c);
}

} // namespace monobar
