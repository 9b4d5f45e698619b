#include "fvblab/words.hpp"

#include <sstream>
#include <stdexcept>

namespace fvblab {

std::string word_str(const Word& w) {
  if (w.empty())
    return "e";
  std::string out;
  for (const Gen& g : w) {
    if (!out.empty())
      out += " ";
    out += g.str();
  }
  return out;
}

Word parse_word(const std::string& text) {
  Word w;
  std::stringstream ss(text);
  std::string tok;
  while (ss >> tok) {
    if (tok == "e")
      continue;
    if (tok.size() < 2 || (tok[0] != 's' && tok[0] != 'r'))
      throw std::invalid_argument("bad word letter '" + tok + "'");
    int idx = std::stoi(tok.substr(1));
    if (idx < 1)
      throw std::invalid_argument("bad generator index in '" + tok + "'");
    w.push_back(Gen{tok[0] == 's' ? GenKind::sigma : GenKind::rho, idx});
  }
  return w;
}

Word reduce_word(const Word& w) {
  Word out;
  for (const Gen& g : w) {
    if (!out.empty() && out.back() == g)
      out.pop_back();
    else
      out.push_back(g);
  }
  return out;
}

std::vector<Word> fvb2_enumerate(int max_len) {
  std::vector<Word> out;
  for (int len = 1; len <= max_len; ++len) {
    for (GenKind first : {GenKind::sigma, GenKind::rho}) {
      Word w;
      GenKind k = first;
      for (int i = 0; i < len; ++i) {
        w.push_back(Gen{k, 1});
        k = k == GenKind::sigma ? GenKind::rho : GenKind::sigma;
      }
      out.push_back(std::move(w));
    }
  }
  return out;
}

const char* fvb2_shape_name(Fvb2Shape s) {
  switch (s) {
    case Fvb2Shape::sr_power: return "(s r)^k";
    case Fvb2Shape::rs_power: return "(r s)^k";
    case Fvb2Shape::s_rs_power: return "s (r s)^k";
    case Fvb2Shape::rs_power_r: return "(r s)^k r";
  }
  return "?";
}

Fvb2Class classify_fvb2_shape(const Word& w) {
  if (w.empty())
    throw std::invalid_argument("cannot classify the empty word");
  for (const Gen& g : w)
    if (g.index != 1)
      throw std::invalid_argument("word is not over the 2-strand alphabet: " +
                                  word_str(w));
  for (size_t i = 1; i < w.size(); ++i)
    if (w[i].kind == w[i - 1].kind)
      throw std::invalid_argument("word is not reduced: " + word_str(w));
  bool starts_s = w.front().kind == GenKind::sigma;
  bool ends_s = w.back().kind == GenKind::sigma;
  int len = int(w.size());
  if (starts_s && !ends_s)
    return {Fvb2Shape::sr_power, len / 2};
  if (!starts_s && ends_s)
    return {Fvb2Shape::rs_power, len / 2};
  if (starts_s && ends_s)
    return {Fvb2Shape::s_rs_power, (len - 1) / 2};
  return {Fvb2Shape::rs_power_r, (len - 1) / 2};
}

}  // namespace fvblab
