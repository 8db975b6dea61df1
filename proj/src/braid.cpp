#include "preproj/braid.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>

#include "preproj/errors.hpp"

namespace preproj {

bool BraidWord::is_positive() const {
  return std::all_of(letters.begin(), letters.end(), [](int l) { return l > 0; });
}

BraidGroup::BraidGroup(const FoldedWeylGroup& folded) : fg_(&folded) {
  const std::size_t d = folded.longest();
  tau_.resize(folded.order());
  for (std::size_t s = 0; s < folded.order(); ++s) tau_[s] = multiply(multiply(d, s), d);
  delta_word_ = folded.reduced_word(d);
}

BraidWord BraidGroup::parse(std::string_view text) const {
  BraidWord word;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\n' ||
                                 text[pos] == ','))
      ++pos;
    if (pos == text.size()) break;
    std::size_t end = pos;
    while (end < text.size() && text[end] != ' ' && text[end] != '\t' && text[end] != '\n' &&
           text[end] != ',')
      ++end;
    auto token = text.substr(pos, end - pos);
    if (token.front() == '+') token.remove_prefix(1);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size() || token.empty()) {
      throw ValidationError("malformed braid letter '" + std::string(text.substr(pos, end - pos)) +
                            "'");
    }
    word.letters.push_back(value);
    pos = end;
  }
  validate(word);
  return word;
}

void BraidGroup::validate(const BraidWord& word) const {
  for (int l : word.letters) {
    if (l == 0 || std::abs(l) > rank()) {
      throw ValidationError("braid letter " + std::to_string(l) + " outside 1.." +
                            std::to_string(rank()));
    }
  }
}

std::size_t BraidGroup::multiply(std::size_t u, std::size_t v) const {
  for (int j : fg_->reduced_word(v)) u = fg_->right(j, u);
  return u;
}

bool BraidGroup::left_descent(std::size_t v, int j) const {
  return fg_->length(fg_->left(j, v)) < fg_->length(v);
}

bool BraidGroup::right_descent(std::size_t u, int j) const {
  return fg_->length(fg_->right(j, u)) < fg_->length(u);
}

void BraidGroup::normalize(GarsideNF& nf) const {
  auto& s = nf.simples;
  const std::size_t e = fg_->identity();
  for (bool changed = true; changed;) {
    changed = false;
    std::erase(s, e);
    for (std::size_t k = 0; k + 1 < s.size(); ++k) {
      // Move every left divisor of s[k+1] that s[k] can absorb.
      for (bool moved = true; moved;) {
        moved = false;
        for (int j = 1; j <= rank(); ++j) {
          if (left_descent(s[k + 1], j) && !right_descent(s[k], j)) {
            s[k] = fg_->right(j, s[k]);
            s[k + 1] = fg_->left(j, s[k + 1]);
            moved = changed = true;
          }
        }
      }
    }
  }
  std::erase(s, e);
  const auto lead = std::find_if(s.begin(), s.end(), [&](std::size_t x) { return x != delta(); });
  nf.delta_power += static_cast<int>(lead - s.begin());
  s.erase(s.begin(), lead);
}

GarsideNF BraidGroup::normal_form(const BraidWord& word) const {
  validate(word);
  GarsideNF nf;
  const std::size_t e = fg_->identity();
  for (int l : word.letters) {
    if (l > 0) {
      nf.simples.push_back(fg_->left(l, e));
    } else {
      // a_i^{-1} = x_i Delta^{-1} with t_i x_i = Delta; move Delta^{-1} to the front.
      nf.simples.push_back(fg_->left(-l, delta()));
      for (auto& s : nf.simples) s = tau_[s];
      --nf.delta_power;
    }
  }
  normalize(nf);
  return nf;
}

bool BraidGroup::words_equal(const BraidWord& a, const BraidWord& b) const {
  return normal_form(a) == normal_form(b);
}

std::pair<BraidWord, BraidWord> BraidGroup::split_positive(const BraidWord& a) const {
  validate(a);
  if (a.is_positive()) return {BraidWord{}, a};
  const auto nf = normal_form(a);
  BraidWord b, c;
  if (nf.delta_power < 0) {
    for (int k = 0; k < -nf.delta_power; ++k)
      b.letters.insert(b.letters.end(), delta_word_.begin(), delta_word_.end());
  } else {
    for (int k = 0; k < nf.delta_power; ++k)
      c.letters.insert(c.letters.end(), delta_word_.begin(), delta_word_.end());
  }
  for (std::size_t s : nf.simples) {
    const auto w = fg_->reduced_word(s);
    c.letters.insert(c.letters.end(), w.begin(), w.end());
  }
  return {b, c};
}

BraidWord BraidGroup::recombine(const BraidWord& b, const BraidWord& c) {
  BraidWord out;
  for (auto it = b.letters.rbegin(); it != b.letters.rend(); ++it) out.letters.push_back(-*it);
  out.letters.insert(out.letters.end(), c.letters.begin(), c.letters.end());
  return out;
}

BraidWord BraidGroup::to_word(const GarsideNF& nf) const {
  BraidWord out;
  for (int k = 0; k < std::abs(nf.delta_power); ++k) {
    if (nf.delta_power > 0) {
      out.letters.insert(out.letters.end(), delta_word_.begin(), delta_word_.end());
    } else {
      for (auto it = delta_word_.rbegin(); it != delta_word_.rend(); ++it) out.letters.push_back(-*it);
    }
  }
  for (std::size_t s : nf.simples) {
    const auto w = fg_->reduced_word(s);
    out.letters.insert(out.letters.end(), w.begin(), w.end());
  }
  return out;
}

std::string BraidGroup::render(const GarsideNF& nf) const {
  std::string out = "Δ^" + std::to_string(nf.delta_power) + " · ";
  if (nf.simples.empty()) return out + "(empty)";
  for (std::size_t s : nf.simples) {
    out += "[";
    for (int j : fg_->reduced_word(s)) out += "t" + std::to_string(j);
    out += "]";
  }
  return out;
}

std::size_t BraidGroup::project_to_weyl(const BraidWord& word) const {
  validate(word);
  std::size_t k = fg_->identity();
  for (int l : word.letters) k = fg_->right(std::abs(l), k);
  return fg_->ambient(k);
}

MuResult mu_of_braid(const TiltingAction& action, const BraidWord& word) {
  const int r = action.folded().rank();
  for (int l : word.letters) {
    if (l == 0 || std::abs(l) > r) throw ValidationError("braid letter " + std::to_string(l) + " out of range");
  }
  const auto& group = action.group();
  MuResult res{TwoTermSilting(group, group.identity()), true, std::nullopt, {}};
  for (std::size_t step = 0; step < word.letters.size(); ++step) {
    const int l = word.letters[step];
    auto [next, dir] = action.tilting_mutate(res.shadow, std::abs(l));
    const bool stays = (l > 0) == (dir == Direction::Left);
    if (!stays && res.two_term) {
      res.two_term = false;
      res.exit_step = step;
      res.note = "left the two-term window at letter " + std::to_string(step + 1) +
                 "; result is the W^iota shadow only";
    }
    res.shadow = next;
  }
  return res;
}

}  // namespace preproj
