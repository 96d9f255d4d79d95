#include "hesscoh/rootsys.hh"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace hesscoh {

CartanDatum build_cartan(char type, int rank) {
  CartanDatum d;
  d.type = type;
  d.rank = rank;
  if (rank < 1) throw std::invalid_argument("rank must be positive");
  d.a.assign(rank, std::vector<int>(rank, 0));
  for (int i = 0; i < rank; ++i) d.a[i][i] = 2;
  auto bond = [&](int i, int j) { d.a[i][j] = -1; d.a[j][i] = -1; };
  switch (type) {
    case 'A':
      for (int i = 0; i + 1 < rank; ++i) bond(i, i + 1);
      break;
    case 'B':
      if (rank < 2) throw std::invalid_argument("B requires rank >= 2");
      for (int i = 0; i + 1 < rank; ++i) bond(i, i + 1);
      d.a[rank - 2][rank - 1] = -2;  // alpha_n short
      break;
    case 'C':
      if (rank < 2) throw std::invalid_argument("C requires rank >= 2");
      for (int i = 0; i + 1 < rank; ++i) bond(i, i + 1);
      d.a[rank - 1][rank - 2] = -2;  // alpha_{n-1} short
      break;
    case 'D':
      if (rank < 4) throw std::invalid_argument("D requires rank >= 4");
      for (int i = 0; i + 2 < rank; ++i) bond(i, i + 1);
      bond(rank - 3, rank - 1);
      break;
    case 'E': {
      if (rank < 6 || rank > 8) throw std::invalid_argument("E requires rank 6..8");
      // chain 1-3-4-5-...-n, branch 2-4 (1-based), 0-based below
      bond(0, 2);
      for (int i = 2; i + 1 < rank; ++i) bond(i, i + 1);
      bond(1, 3);
      break;
    }
    case 'F':
      if (rank != 4) throw std::invalid_argument("F requires rank 4");
      bond(0, 1);
      bond(1, 2);
      bond(2, 3);
      d.a[1][2] = -2;  // alpha_3, alpha_4 short
      break;
    case 'G':
      if (rank != 2) throw std::invalid_argument("G requires rank 2");
      d.a[0][1] = -1;
      d.a[1][0] = -3;  // alpha_1 short
      break;
    default:
      throw std::invalid_argument(std::string("unknown Cartan type: ") + type);
  }
  return d;
}

CartanDatum parse_cartan(const std::string& s) {
  if (s.size() < 2) throw std::invalid_argument("Cartan type syntax: e.g. A3, B2, F4");
  char type = s[0];
  int rank = std::stoi(s.substr(1));
  return build_cartan(type, rank);
}

WeylElement weyl_identity(int rank) {
  WeylElement w;
  w.rank = rank;
  w.mat.assign(rank * rank, 0);
  for (int i = 0; i < rank; ++i) w.mat[i * rank + i] = 1;
  return w;
}

WeylElement weyl_simple(const CartanDatum& d, int i) {
  // s_i(alpha_c) = alpha_c - a[c][i] * alpha_i
  WeylElement w = weyl_identity(d.rank);
  for (int c = 0; c < d.rank; ++c) w.mat[i * d.rank + c] -= d.a[c][i];
  return w;
}

WeylElement weyl_mult(const WeylElement& u, const WeylElement& v) {
  const int n = u.rank;
  WeylElement w;
  w.rank = n;
  w.mat.assign(n * n, 0);
  for (int r = 0; r < n; ++r)
    for (int k = 0; k < n; ++k) {
      const int urk = u.mat[r * n + k];
      if (urk == 0) continue;
      for (int c = 0; c < n; ++c) w.mat[r * n + c] += urk * v.mat[k * n + c];
    }
  return w;
}

std::vector<int> weyl_apply(const WeylElement& w, const std::vector<int>& coords) {
  std::vector<int> out(w.rank, 0);
  for (int r = 0; r < w.rank; ++r)
    for (int c = 0; c < w.rank; ++c) out[r] += w.at(r, c) * coords[c];
  return out;
}

WeylGroup::WeylGroup(CartanDatum datum, std::size_t budget) : datum_(std::move(datum)) {
  const int n = datum_.rank;
  std::vector<WeylElement> gens;
  for (int i = 0; i < n; ++i) gens.push_back(weyl_simple(datum_, i));

  // BFS closure; BFS depth is the Coxeter length
  std::map<WeylElement, int> seen;
  std::vector<WeylElement> elems;
  std::vector<int> lens;
  std::deque<int> queue;
  elems.push_back(weyl_identity(n));
  lens.push_back(0);
  seen.emplace(elems[0], 0);
  queue.push_back(0);
  while (!queue.empty()) {
    int cur = queue.front();
    queue.pop_front();
    for (int i = 0; i < n; ++i) {
      WeylElement next = weyl_mult(elems[cur], gens[i]);
      if (seen.count(next)) continue;
      if (elems.size() >= budget)
        throw std::runtime_error("Weyl group enumeration budget exceeded");
      seen.emplace(next, static_cast<int>(elems.size()));
      elems.push_back(std::move(next));
      lens.push_back(lens[cur] + 1);
      queue.push_back(static_cast<int>(elems.size()) - 1);
    }
  }

  // canonical lex-smallest reduced words, in increasing length order:
  // pick the smallest left descent and recurse
  std::vector<int> order(elems.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return lens[a] < lens[b]; });
  std::vector<std::vector<int>> word_of(elems.size());
  for (int idx : order) {
    if (lens[idx] == 0) continue;
    for (int i = 0; i < n; ++i) {
      WeylElement rest = weyl_mult(gens[i], elems[idx]);
      int ridx = seen.at(rest);
      if (lens[ridx] == lens[idx] - 1) {
        word_of[idx].reserve(lens[idx]);
        word_of[idx].push_back(i + 1);
        word_of[idx].insert(word_of[idx].end(), word_of[ridx].begin(), word_of[ridx].end());
        break;
      }
    }
  }

  // final ordering: by (length, word lex)
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (lens[a] != lens[b]) return lens[a] < lens[b];
    return word_of[a] < word_of[b];
  });
  for (int idx : order) {
    index_.emplace(elems[idx], static_cast<int>(elements_.size()));
    elements_.push_back(elems[idx]);
    lengths_.push_back(lens[idx]);
    words_.push_back(word_of[idx]);
  }
  simple_idx_.resize(n);
  for (int i = 0; i < n; ++i) simple_idx_[i] = index_.at(gens[i]);
}

int WeylGroup::index_of(const WeylElement& w) const {
  auto it = index_.find(w);
  return it == index_.end() ? -1 : it->second;
}

int WeylGroup::mult(int u, int v) const {
  return index_.at(weyl_mult(elements_[u], elements_[v]));
}

int WeylGroup::inverse(int u) const {
  std::vector<int> b = words_[u];
  std::reverse(b.begin(), b.end());
  return from_word(b);
}

int WeylGroup::from_word(const std::vector<int>& b) const {
  int cur = identity();
  for (int i : b) cur = mult(cur, simple(i));
  return cur;
}

int WeylGroup::longest_parabolic(const std::vector<int>& K) const {
  std::vector<int> closure{identity()};
  std::map<int, char> seen{{identity(), 1}};
  for (size_t head = 0; head < closure.size(); ++head) {
    for (int i : K) {
      int nxt = mult(closure[head], simple(i));
      if (!seen.count(nxt)) {
        seen.emplace(nxt, 1);
        closure.push_back(nxt);
      }
    }
  }
  int best = identity();
  for (int idx : closure)
    if (length(idx) > length(best)) best = idx;
  return best;
}

long WeylGroup::count_reduced_words(int idx) const {
  std::vector<long> memo(size(), -1);
  memo[identity()] = 1;
  // iterative by increasing length: elements_ are already length-sorted
  for (int e = 0; e < size(); ++e) {
    if (memo[e] >= 0) continue;
    long total = 0;
    for (int i = 1; i <= rank(); ++i) {
      int rest = mult(simple(i), e);
      if (length(rest) == length(e) - 1) total += memo[rest];
    }
    memo[e] = total;
  }
  return memo[idx];
}

std::vector<std::vector<int>> connected_components(const CartanDatum& d,
                                                   const std::vector<int>& K) {
  std::vector<int> nodes = K;
  std::sort(nodes.begin(), nodes.end());
  std::vector<char> used(nodes.size(), 0);
  std::vector<std::vector<int>> comps;
  for (size_t s = 0; s < nodes.size(); ++s) {
    if (used[s]) continue;
    std::vector<int> comp{nodes[s]};
    used[s] = 1;
    for (size_t head = 0; head < comp.size(); ++head) {
      for (size_t j = 0; j < nodes.size(); ++j) {
        if (used[j]) continue;
        if (d.adjacent(comp[head] - 1, nodes[j] - 1)) {
          used[j] = 1;
          comp.push_back(nodes[j]);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  std::sort(comps.begin(), comps.end(),
            [](const auto& a, const auto& b) { return a[0] < b[0]; });
  return comps;
}

std::pair<CartanDatum, std::vector<int>> classify_connected(
    const CartanDatum& d, const std::vector<int>& K) {
  const int k = static_cast<int>(K.size());
  const std::string type_order = "ABCDEFG";
  for (char type : type_order) {
    CartanDatum std_d;
    try {
      std_d = build_cartan(type, k);
    } catch (const std::invalid_argument&) {
      continue;
    }
    // find the lex-smallest role assignment sigma: role r -> node sigma[r]
    std::vector<int> sigma(K.begin(), K.end());
    std::sort(sigma.begin(), sigma.end());
    std::vector<int> best;
    do {
      bool ok = true;
      for (int i = 0; i < k && ok; ++i)
        for (int j = 0; j < k && ok; ++j)
          if (d.a[sigma[i] - 1][sigma[j] - 1] != std_d.a[i][j]) ok = false;
      if (ok) {
        best = sigma;
        break;  // permutations visited in lex order, first hit is smallest
      }
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    if (!best.empty()) return {std_d, best};
  }
  throw std::runtime_error("connected subdiagram matches no finite type");
}

int v_K(const WeylGroup& W, const std::vector<int>& K) {
  int cur = W.identity();
  for (const auto& comp : connected_components(W.datum(), K)) {
    auto [cd, sigma] = classify_connected(W.datum(), comp);
    for (int node : sigma) cur = W.mult(cur, W.simple(node));
  }
  return cur;
}

int v_K_with_order(const WeylGroup& W, const std::vector<std::vector<int>>& orderings) {
  int cur = W.identity();
  for (const auto& seq : orderings)
    for (int node : seq) cur = W.mult(cur, W.simple(node));
  return cur;
}

}  // namespace hesscoh
