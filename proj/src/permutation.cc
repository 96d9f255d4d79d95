#include "hesscoh/permutation.hh"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hesscoh {

Permutation::Permutation(int n) : word_(n) {
  if (n < 1) throw std::invalid_argument("permutation size must be positive");
  std::iota(word_.begin(), word_.end(), 1);
}

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  const int n = static_cast<int>(word_.size());
  if (n < 1) throw std::invalid_argument("permutation size must be positive");
  std::vector<char> seen(n + 1, 0);
  for (int v : word_) {
    if (v < 1 || v > n || seen[v])
      throw std::invalid_argument("one-line word is not a bijection of {1..n}");
    seen[v] = 1;
  }
}

Permutation Permutation::simple(int i, int n) {
  if (i < 1 || i >= n) throw std::out_of_range("simple reflection index out of range");
  Permutation p(n);
  std::swap(p.word_[i - 1], p.word_[i]);
  return p;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(word_.size());
  for (int i = 1; i <= n(); ++i) inv[word_[i - 1] - 1] = i;
  return Permutation(std::move(inv));
}

bool Permutation::is_identity() const {
  for (int i = 1; i <= n(); ++i)
    if (word_[i - 1] != i) return false;
  return true;
}

int Permutation::length() const {
  int inv = 0;
  for (int i = 0; i < n(); ++i)
    for (int j = i + 1; j < n(); ++j)
      if (word_[i] > word_[j]) ++inv;
  return inv;
}

Permutation compose(const Permutation& u, const Permutation& v) {
  if (u.n() != v.n()) throw std::invalid_argument("compose: size mismatch");
  std::vector<int> w(u.n());
  for (int i = 1; i <= u.n(); ++i) w[i - 1] = u(v(i));
  return Permutation(std::move(w));
}

// i is a left descent of w iff i appears to the right of i+1 in the word,
// i.e. w^{-1}(i) > w^{-1}(i+1); then l(s_i w) = l(w) - 1.
static int smallest_left_descent(const std::vector<int>& word) {
  const int n = static_cast<int>(word.size());
  std::vector<int> pos(n + 1);
  for (int i = 0; i < n; ++i) pos[word[i]] = i;
  for (int i = 1; i < n; ++i)
    if (pos[i] > pos[i + 1]) return i;
  return 0;
}

// apply s_i on the left: swap the values i and i+1 wherever they occur
static void left_mult_simple(std::vector<int>& word, int i) {
  for (int& v : word) {
    if (v == i) v = i + 1;
    else if (v == i + 1) v = i;
  }
}

std::vector<int> Permutation::reduced_word() const {
  std::vector<int> out;
  std::vector<int> w = word_;
  for (int i = smallest_left_descent(w); i != 0; i = smallest_left_descent(w)) {
    out.push_back(i);
    left_mult_simple(w, i);
  }
  return out;
}

Permutation from_reduced_word(const std::vector<int>& b, int n) {
  Permutation p(n);
  for (int i : b) p = compose(p, Permutation::simple(i, n));
  return p;
}

bool is_reduced_word(const std::vector<int>& b, int n) {
  return from_reduced_word(b, n).length() == static_cast<int>(b.size());
}

namespace {

struct OccurrenceSearch {
  const std::vector<int>& b;
  std::vector<std::vector<int>>* out;  // null: existence query only
  bool found = false;
  std::vector<int> chosen;

  // rem = (prefix so far)^{-1} v; take letter b[pos] iff it is a left
  // descent of rem, which keeps the chosen subword reduced toward v
  bool dfs(size_t pos, std::vector<int>& rem, int rem_len) {
    if (rem_len == 0) {
      found = true;
      if (out) out->push_back(chosen);
      return true;
    }
    if (pos >= b.size() || static_cast<int>(b.size() - pos) < rem_len) return false;
    const int i = b[pos];
    // positions of i and i+1 in rem
    int pi = -1, pj = -1;
    for (int k = 0; k < static_cast<int>(rem.size()); ++k) {
      if (rem[k] == i) pi = k;
      else if (rem[k] == i + 1) pj = k;
    }
    if (pi > pj) {  // take
      left_mult_simple(rem, i);
      chosen.push_back(static_cast<int>(pos) + 1);
      if (dfs(pos + 1, rem, rem_len - 1) && !out) return true;
      chosen.pop_back();
      left_mult_simple(rem, i);
    }
    if (dfs(pos + 1, rem, rem_len) && !out) return true;
    return found;
  }
};

}  // namespace

std::vector<std::vector<int>> reduced_subword_occurrences(
    const Permutation& v, const std::vector<int>& b) {
  std::vector<std::vector<int>> out;
  OccurrenceSearch s{b, &out};
  std::vector<int> rem = v.word();
  s.dfs(0, rem, v.length());
  return out;
}

bool bruhat_leq(const Permutation& v, const Permutation& w) {
  if (v.n() != w.n()) throw std::invalid_argument("bruhat_leq: size mismatch");
  if (v.length() > w.length()) return false;
  std::vector<int> b = w.reduced_word();
  OccurrenceSearch s{b, nullptr};
  std::vector<int> rem = v.word();
  s.dfs(0, rem, v.length());
  return s.found;
}

bool bruhat_leq_tableau(const Permutation& v, const Permutation& w) {
  if (v.n() != w.n()) throw std::invalid_argument("bruhat_leq: size mismatch");
  const int n = v.n();
  std::vector<int> pv, pw;
  for (int j = 1; j <= n; ++j) {
    pv.push_back(v(j));
    pw.push_back(w(j));
    std::vector<int> sv = pv, sw = pw;
    std::sort(sv.begin(), sv.end());
    std::sort(sw.begin(), sw.end());
    for (int k = 0; k < j; ++k)
      if (sv[k] > sw[k]) return false;
  }
  return true;
}

std::vector<Permutation> symmetric_group(int n) {
  std::vector<Permutation> out;
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  do {
    out.push_back(Permutation(w));
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

long count_reduced_words(const Permutation& w) {
  static thread_local std::map<std::vector<int>, long> memo;
  if (w.is_identity()) return 1;
  auto it = memo.find(w.word());
  if (it != memo.end()) return it->second;
  long total = 0;
  std::vector<int> pos(w.n() + 1);
  for (int i = 0; i < w.n(); ++i) pos[w.word()[i]] = i;
  for (int i = 1; i < w.n(); ++i) {
    if (pos[i] > pos[i + 1]) {
      std::vector<int> u = w.word();
      left_mult_simple(u, i);
      total += count_reduced_words(Permutation(std::move(u)));
    }
  }
  memo.emplace(w.word(), total);
  return total;
}

std::string Permutation::str() const {
  std::ostringstream os;
  if (n() <= 9) {
    for (int v : word_) os << v;
  } else {
    for (int i = 0; i < n(); ++i) os << (i ? "," : "") << word_[i];
  }
  return os.str();
}

Permutation Permutation::parse(const std::string& s) {
  std::vector<int> w;
  if (s.find(',') != std::string::npos) {
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, ',')) w.push_back(std::stoi(tok));
  } else {
    for (char c : s) {
      if (c < '1' || c > '9')
        throw std::invalid_argument("invalid permutation string: " + s);
      w.push_back(c - '0');
    }
  }
  return Permutation(std::move(w));
}

}  // namespace hesscoh
