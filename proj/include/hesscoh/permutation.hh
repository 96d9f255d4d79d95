#ifndef HESSCOH_PERMUTATION_HH
#define HESSCOH_PERMUTATION_HH

#include <string>
#include <vector>

namespace hesscoh {

// Element of S_n in one-line notation: word[i-1] = w(i), values 1..n.
// Immutable value type.
class Permutation {
 public:
  explicit Permutation(int n);                    // identity
  explicit Permutation(std::vector<int> word);    // validates bijection

  int n() const { return static_cast<int>(word_.size()); }
  int operator()(int i) const { return word_[i - 1]; }  // 1-based
  const std::vector<int>& word() const { return word_; }

  static Permutation simple(int i, int n);  // s_i swaps i, i+1

  Permutation inverse() const;
  bool is_identity() const;
  int length() const;  // inversion count

  // lexicographically smallest reduced word (greedy smallest left descent)
  std::vector<int> reduced_word() const;

  bool operator==(const Permutation& o) const { return word_ == o.word_; }
  bool operator!=(const Permutation& o) const { return word_ != o.word_; }
  bool operator<(const Permutation& o) const { return word_ < o.word_; }

  // "3214" for n <= 9, comma-separated otherwise
  std::string str() const;
  static Permutation parse(const std::string& s);

 private:
  std::vector<int> word_;
};

// (u o v)(i) = u(v(i))
Permutation compose(const Permutation& u, const Permutation& v);

Permutation from_reduced_word(const std::vector<int>& b, int n);

// true iff b is a reduced word (product has length |b|)
bool is_reduced_word(const std::vector<int>& b, int n);

// subword criterion against the canonical reduced word of w
bool bruhat_leq(const Permutation& v, const Permutation& w);

// O(n^2) sorted-prefix (tableau) criterion; used as a cross-check oracle
bool bruhat_leq_tableau(const Permutation& v, const Permutation& w);

// all strictly increasing 1-based index tuples (i_1<...<i_l) such that
// s_{b_{i_1}} ... s_{b_{i_l}} is a reduced word for v
std::vector<std::vector<int>> reduced_subword_occurrences(
    const Permutation& v, const std::vector<int>& b);

// all of S_n in lexicographic one-line order
std::vector<Permutation> symmetric_group(int n);

// number of reduced words of w
long count_reduced_words(const Permutation& w);

}  // namespace hesscoh

#endif
