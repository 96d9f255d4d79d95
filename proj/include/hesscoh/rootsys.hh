#ifndef HESSCOH_ROOTSYS_HH
#define HESSCOH_ROOTSYS_HH

#include <map>
#include <string>
#include <vector>

namespace hesscoh {

// Cartan matrix a[i][j] = <alpha_i, alpha_j> (0-based), with the simple-root
// numbering of the standard labelled diagrams:
//   A_n, B_n, C_n: chain 1-2-...-n; B_n has the double bond (n-1,n) with
//   alpha_n short (a[n-2][n-1] = -2), C_n with alpha_{n-1} short
//   (a[n-1][n-2] = -2);
//   D_n: chain 1..n-2 with both n-1 and n attached to n-2;
//   E_n: chain 1-3-4-5-...-n with 2 attached to 4;
//   F_4: 1-2=3-4 with alpha_3, alpha_4 short (a[1][2] = -2);
//   G_2: triple bond with alpha_1 short (a[1][0] = -3).
struct CartanDatum {
  char type = 0;
  int rank = 0;
  std::vector<std::vector<int>> a;

  bool adjacent(int i, int j) const { return i != j && a[i][j] != 0; }
  std::string name() const { return std::string(1, type) + std::to_string(rank); }
};

CartanDatum build_cartan(char type, int rank);
CartanDatum parse_cartan(const std::string& s);  // "A3", "G2", ...

// Weyl group element: integer matrix of the action on simple-root
// coordinates, column j = coordinates of w(alpha_j).  Row-major, rank x rank.
struct WeylElement {
  std::vector<int> mat;
  int rank = 0;

  int at(int r, int c) const { return mat[r * rank + c]; }
  bool operator==(const WeylElement& o) const { return mat == o.mat; }
  bool operator<(const WeylElement& o) const { return mat < o.mat; }
};

WeylElement weyl_identity(int rank);
WeylElement weyl_simple(const CartanDatum& d, int i);  // s_{i+1}, 0-based i
WeylElement weyl_mult(const WeylElement& u, const WeylElement& v);  // u then... u*v acts as u(v(x))
// image of a simple-root-coordinate vector
std::vector<int> weyl_apply(const WeylElement& w, const std::vector<int>& coords);

// Full enumeration of W with lengths and canonical (lex-smallest) reduced
// words.  Elements are ordered by (length, reduced word lex).
class WeylGroup {
 public:
  WeylGroup(CartanDatum datum, std::size_t budget = 2000);

  const CartanDatum& datum() const { return datum_; }
  int rank() const { return datum_.rank; }
  int size() const { return static_cast<int>(elements_.size()); }

  const WeylElement& element(int idx) const { return elements_[idx]; }
  int length(int idx) const { return lengths_[idx]; }
  const std::vector<int>& word(int idx) const { return words_[idx]; }  // 1-based letters

  int index_of(const WeylElement& w) const;  // -1 if absent
  int identity() const { return 0; }
  int simple(int i) const { return simple_idx_[i - 1]; }  // 1-based i

  int mult(int u, int v) const;
  int inverse(int u) const;
  int from_word(const std::vector<int>& b) const;  // 1-based letters

  // unique longest element of the parabolic subgroup W_K, K 1-based indices
  int longest_parabolic(const std::vector<int>& K) const;

  long count_reduced_words(int idx) const;

 private:
  CartanDatum datum_;
  std::vector<WeylElement> elements_;
  std::vector<int> lengths_;
  std::vector<std::vector<int>> words_;
  std::vector<int> simple_idx_;
  std::map<WeylElement, int> index_;
};

// Maximal Dynkin-connected pieces of K (1-based indices), ordered by their
// smallest element; each piece sorted ascending.
std::vector<std::vector<int>> connected_components(const CartanDatum& d,
                                                   const std::vector<int>& K);

// Type classification of the induced diagram on a connected K, together with
// the re-indexing: result.second[r] is the 1-based node of K playing the role
// of simple root r+1 in the standard diagram of result.first.  Among all
// valid re-indexings the lexicographically smallest is returned, with type
// letters tried in the order A,B,C,D,E,F,G.
std::pair<CartanDatum, std::vector<int>> classify_connected(
    const CartanDatum& d, const std::vector<int>& K);

// v_K of the Peterson Schubert calculus: product over components, each
// component's simple reflections taken in the order of its standard-diagram
// re-indexing.  Returns the element index in W.
int v_K(const WeylGroup& W, const std::vector<int>& K);

// allows overriding the per-component ordering (used to test independence of
// the ordering choice); ordering maps component nodes to a visit sequence
int v_K_with_order(const WeylGroup& W, const std::vector<std::vector<int>>& orderings);

}  // namespace hesscoh

#endif
