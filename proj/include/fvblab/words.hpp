#ifndef FVBLAB_WORDS_HPP_
#define FVBLAB_WORDS_HPP_

#include <string>
#include <vector>

namespace fvblab {

enum class GenKind { sigma, rho };

struct Gen {
  GenKind kind;
  int index;  // 1-based strand index

  bool operator==(const Gen& o) const { return kind == o.kind && index == o.index; }
  bool operator!=(const Gen& o) const { return !(*this == o); }
  bool operator<(const Gen& o) const {
    if (kind != o.kind)
      return kind == GenKind::sigma;
    return index < o.index;
  }
  std::string str() const {
    return (kind == GenKind::sigma ? "s" : "r") + std::to_string(index);
  }
};

inline Gen sg(int i) { return Gen{GenKind::sigma, i}; }
inline Gen rg(int i) { return Gen{GenKind::rho, i}; }

// Only positive letters are stored: every generator used here is either an
// involution or appears in relations written without inverses.
using Word = std::vector<Gen>;

std::string word_str(const Word& w);
Word parse_word(const std::string& text);

// full free reduction by cancelling equal adjacent letters (involutivity)
Word reduce_word(const Word& w);

// all reduced nonempty words of the 2-strand group with sigma_1, rho_1
// involutive, by length then alphabet; exactly two per length
std::vector<Word> fvb2_enumerate(int max_len);

// The four alternating-word templates in the 2-strand group, named by shape:
//   sr_power    (s r)^k
//   rs_power    (r s)^k
//   s_rs_power  s (r s)^k
//   rs_power_r  (r s)^k r
enum class Fvb2Shape { sr_power, rs_power, s_rs_power, rs_power_r };

const char* fvb2_shape_name(Fvb2Shape s);

struct Fvb2Class {
  Fvb2Shape shape;
  int power;  // the k in the template; 0 for the bare one-letter words
};

Fvb2Class classify_fvb2_shape(const Word& w);

}  // namespace fvblab

#endif
