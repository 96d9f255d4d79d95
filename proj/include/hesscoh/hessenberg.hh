#ifndef HESSCOH_HESSENBERG_HH
#define HESSCOH_HESSENBERG_HH

#include <string>
#include <vector>

#include "hesscoh/permutation.hh"

namespace hesscoh {

// Nondecreasing h:[n]->[n] with h(i) >= i and h(n) = n.
class HessenbergFunction {
 public:
  explicit HessenbergFunction(std::vector<int> values);  // validates

  int n() const { return static_cast<int>(values_.size()); }
  int operator()(int i) const { return values_[i - 1]; }  // 1-based
  const std::vector<int>& values() const { return values_; }

  // h(i) >= i+1 for all i < n
  bool is_indecomposable() const;

  bool operator==(const HessenbergFunction& o) const { return values_ == o.values_; }
  std::string str() const;  // "3,3,4,4"
  static HessenbergFunction parse(const std::string& s);

  static HessenbergFunction peterson(int n);  // (2,3,...,n,n)
  static HessenbergFunction full(int n);      // (n,...,n)
  static HessenbergFunction minimal(int n);   // (1,2,...,n)

 private:
  std::vector<int> values_;
};

// h'(j) <= h(j) for all j
bool h_leq(const HessenbergFunction& hp, const HessenbergFunction& h);

// boxes (i,j), i >= j, present iff i <= h(j).  Corner box: (h(j), j) with
// h(j-1) < h(j) (and h(j) > j so removal keeps validity).
std::vector<std::pair<int, int>> corner_boxes(const HessenbergFunction& h);
HessenbergFunction remove_box(const HessenbergFunction& h, int i, int j);
HessenbergFunction add_box(const HessenbergFunction& h, int i, int j);

// fixed points of the circle action: {w : w^{-1}(w(i)-1) <= h(i) for all i},
// with w^{-1}(0) = 0; lexicographic one-line order
std::vector<Permutation> fixed_points(const HessenbergFunction& h);

// unique minimal h with w a fixed point
HessenbergFunction minimal_hessenberg(const Permutation& w);

// all Hessenberg functions for n (Catalan(n) of them), lex order on values
std::vector<HessenbergFunction> all_hessenberg_functions(int n);

// --- subsets A of [n-1] for the Peterson variety ---------------------------

struct SubsetA {
  std::vector<int> elems;  // sorted ascending, values in [n-1]
  // maximal consecutive strings [a,b]
  std::vector<std::pair<int, int>> strings() const;
  bool contains(int i) const;
  // head/tail of the maximal consecutive string containing i (i must be in A)
  int head(int i) const;  // largest element of that string
  int tail(int i) const;  // smallest element of that string
  std::string str() const;  // "1,3,4" or "{}" for empty
};

// v_A = s_{i_1}...s_{i_k}, A ascending
Permutation subset_to_vA(const SubsetA& A, int n);
// w_A: block reversal along each maximal string [a,b] (positions a..b+1),
// the longest element of the parabolic generated by {s_i : i in A}
Permutation subset_to_wA(const SubsetA& A, int n);

// all subsets of [n-1] ordered by (cardinality, lex); index 0 is the empty set
std::vector<SubsetA> all_subsets(int n);

// pairs (A, w_A) in the same order as all_subsets
std::vector<std::pair<SubsetA, Permutation>> peterson_fixed_points(int n);

}  // namespace hesscoh

#endif
