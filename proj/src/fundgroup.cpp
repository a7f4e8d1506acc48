#include "pqs/fundgroup.hpp"

#include <algorithm>
#include <deque>
#include <future>
#include <numeric>
#include <set>

namespace pqs {

Word free_reduce(Word w) {
  Word out;
  for (int letter : w) {
    if (letter == 0) fail_validation("word letters must be nonzero");
    if (!out.empty() && out.back() == -letter)
      out.pop_back();
    else
      out.push_back(letter);
  }
  return out;
}

Word cyclic_reduce(Word w) {
  w = free_reduce(std::move(w));
  std::size_t lo = 0, hi = w.size();
  while (hi - lo >= 2 && w[lo] == -w[hi - 1]) {
    ++lo;
    --hi;
  }
  return Word(w.begin() + lo, w.begin() + hi);
}

std::string word_string(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += '.';
    out += (w[i] > 0 ? "a" : "A") + std::to_string(std::abs(w[i]));
  }
  return out;
}

namespace {

Word inverse_word(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (int& letter : out) letter = -letter;
  return out;
}

Word rotate_left(Word w, int k) {
  if (!w.empty()) std::rotate(w.begin(), w.begin() + (k % (int)w.size()), w.end());
  return w;
}

bool cyclically_equal(const Word& a, const Word& b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (rotate_left(a, (int)k) == b) return true;
  return false;
}

// Lexicographically minimal rotation of w or of w^-1; canonical key for
// relator deduplication.
Word canonical_cyclic(const Word& w) {
  Word best = w;
  for (const Word& base : {w, inverse_word(w)})
    for (std::size_t k = 0; k < base.size(); ++k)
      best = std::min(best, rotate_left(base, (int)k));
  return best;
}

int column(int letter) { return letter > 0 ? 2 * (letter - 1) : 2 * (-letter - 1) + 1; }
int inverse_column(int col) { return col ^ 1; }

// Mutable enumeration state for the HLT strategy with coincidence handling.
struct Enumerator {
  int ncols;
  int cap;
  std::vector<std::vector<int>> table;  // -1 = undefined
  std::vector<int> parent;              // union-find over cosets
  std::deque<int> queue;
  bool overflow = false;

  explicit Enumerator(int generator_count, int coset_cap)
      : ncols(2 * generator_count), cap(coset_cap) {
    table.push_back(std::vector<int>(ncols, -1));
    parent.push_back(0);
  }

  int rep(int k) {
    while (parent[k] != k) {
      parent[k] = parent[parent[k]];
      k = parent[k];
    }
    return k;
  }

  int define(int a, int col) {
    if ((int)table.size() >= cap) {
      overflow = true;
      return -1;
    }
    int b = (int)table.size();
    table.push_back(std::vector<int>(ncols, -1));
    parent.push_back(b);
    table[a][col] = b;
    table[b][inverse_column(col)] = a;
    return b;
  }

  void merge(int k, int l) {
    k = rep(k);
    l = rep(l);
    if (k == l) return;
    int lo = std::min(k, l), hi = std::max(k, l);
    parent[hi] = lo;
    queue.push_back(hi);
  }

  void coincidence(int a, int b) {
    merge(a, b);
    while (!queue.empty()) {
      int y = queue.front();
      queue.pop_front();
      for (int col = 0; col < ncols; ++col) {
        int d = table[y][col];
        if (d < 0) continue;
        table[d][inverse_column(col)] = -1;
        int mu = rep(y), nu = rep(d);
        if (table[mu][col] >= 0)
          merge(nu, table[mu][col]);
        else if (table[nu][inverse_column(col)] >= 0)
          merge(mu, table[nu][inverse_column(col)]);
        else {
          table[mu][col] = nu;
          table[nu][inverse_column(col)] = mu;
        }
      }
    }
  }

  void scan_and_fill(int a, const Word& w) {
    const int len = (int)w.size();
    while (true) {
      int f = a, i = 0;
      while (i < len && table[f][column(w[i])] >= 0) f = table[f][column(w[i])], ++i;
      if (i == len) {
        if (f != a) coincidence(f, a);
        return;
      }
      int b = a, j = len - 1;
      while (j >= i && table[b][inverse_column(column(w[j]))] >= 0)
        b = table[b][inverse_column(column(w[j]))], --j;
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (j == i) {
        table[f][column(w[i])] = b;
        table[b][inverse_column(column(w[i]))] = f;
        return;
      }
      if (define(f, column(w[i])) < 0) return;  // overflow
    }
  }
};

}  // namespace

CosetTable todd_coxeter(const Presentation& pres, const std::vector<Word>& subgroup_words,
                        int coset_cap) {
  if (pres.generator_count < 1) fail_validation("presentation needs at least one generator");
  if (coset_cap < 1) fail_validation("coset cap must be at least 1");
  for (const Word& r : pres.relators)
    if (free_reduce(r) != r) fail_validation("relators must be freely reduced");

  Enumerator en(pres.generator_count, coset_cap);
  for (const Word& w : subgroup_words) {
    en.scan_and_fill(0, w);
    if (en.overflow) return {};
  }
  for (int a = 0; a < (int)en.table.size(); ++a) {
    if (en.rep(a) != a) continue;
    for (const Word& w : pres.relators) {
      en.scan_and_fill(a, w);
      if (en.overflow) return {};
      if (en.rep(a) != a) break;
    }
    if (en.rep(a) != a) continue;
    for (int col = 0; col < en.ncols; ++col)
      if (en.table[a][col] < 0 && en.define(a, col) < 0) return {};
  }

  // Compress live cosets and sanity-check the resulting action.
  std::vector<int> live_index(en.table.size(), -1);
  CosetTable out;
  for (int a = 0; a < (int)en.table.size(); ++a)
    if (en.rep(a) == a) live_index[a] = out.index++;
  out.table.assign(out.index, std::vector<int>(en.ncols, -1));
  for (int a = 0; a < (int)en.table.size(); ++a) {
    if (live_index[a] < 0) continue;
    for (int col = 0; col < en.ncols; ++col) {
      int d = en.table[a][col];
      if (d < 0) fail_inconsistency("coset table incomplete after enumeration");
      out.table[live_index[a]][col] = live_index[en.rep(d)];
    }
  }
  for (int a = 0; a < out.index; ++a)
    for (const Word& w : pres.relators) {
      int c = a;
      for (int letter : w) c = out.table[c][column(letter)];
      if (c != a) fail_inconsistency("relator does not act trivially on coset table");
    }
  out.completed = true;
  return out;
}

int evaluate_word(const FiniteGroup& g, const std::vector<int>& assignment, const Word& w) {
  int p = g.identity();
  for (int letter : w) {
    if (letter == 0 || std::abs(letter) > (int)assignment.size())
      fail_validation("word letter out of range");
    int e = assignment[std::abs(letter) - 1];
    p = g.mul(p, letter > 0 ? e : g.inv(e));
  }
  return p;
}

VerifyOutcome verify_presentation(const Presentation& pres, const FiniteGroup& g,
                                  const std::vector<int>& images, int coset_cap) {
  if ((int)images.size() != pres.generator_count)
    fail_validation("image count must match presentation generator count");
  for (const Word& r : pres.relators)
    if (evaluate_word(g, images, r) != g.identity()) return VerifyOutcome::no;
  if (subgroup_generated(g, images).order() != g.order()) return VerifyOutcome::no;
  CosetTable ct = todd_coxeter(pres, {}, coset_cap);
  if (!ct.completed) return VerifyOutcome::inconclusive;
  return ct.index == g.order() ? VerifyOutcome::yes : VerifyOutcome::no;
}

namespace {

std::optional<std::vector<Condition2Entry>> condition2_search(
    const SphericalSystem& sys, const std::vector<int>& assignment,
    const std::vector<int>& h_order) {
  const FiniteGroup& g = *sys.group;
  std::vector<Condition2Entry> out;
  for (int gi : sys.elements) {
    bool found = false;
    for (int h : h_order) {
      for (int j = 0; j < (int)assignment.size() && !found; ++j) {
        int p = h;
        const int ord = g.element_order(assignment[j]);
        for (int l = 1; l <= ord && !found; ++l) {
          p = g.mul(p, assignment[j]);  // p = h a_j^l
          if (g.mul(p, g.inv(h)) == gi) {
            out.push_back({j, l, h});
            found = true;
          }
        }
      }
      if (found) break;
    }
    if (!found) return std::nullopt;
  }
  return out;
}

}  // namespace

std::optional<std::vector<Condition2Entry>> find_condition2_data(
    const SphericalSystem& sys, const std::vector<int>& assignment) {
  if (assignment.empty()) fail_validation("assignment must be nonempty");
  for (int a : assignment)
    if (std::find(sys.elements.begin(), sys.elements.end(), a) == sys.elements.end())
      fail_validation("assignment must pick elements of the system");
  std::vector<int> order(sys.group->order());
  std::iota(order.begin(), order.end(), 0);
  return condition2_search(sys, assignment, order);
}

std::optional<ShapeCertificate> shape_a_certificate(const Word& w) {
  if (w.empty() || cyclic_reduce(w) != w) return std::nullopt;
  const int len = (int)w.size();

  // Pure power a_i^e.
  if (std::all_of(w.begin(), w.end(), [&](int l) { return l == w[0]; })) {
    ShapeCertificate c;
    c.shape = RelatorShape::power;
    c.gen_i = std::abs(w[0]) - 1;
    c.e1 = w[0] > 0 ? len : -len;
    return c;
  }

  for (int rot = 0; rot < len; ++rot) {
    Word r = rotate_left(w, rot);
    int run = 1;
    while (run < len && r[run] == r[0]) ++run;
    for (int t = 1; t <= run; ++t) {
      // r = a_i^(sign*t) v; need v = u a_j^e2 u^-1 literally.
      int front = t, back = len - 1;
      Word u;
      while (front < back && r[front] == -r[back]) {
        u.push_back(r[front]);
        ++front;
        --back;
      }
      if (front > back) continue;
      bool uniform = true;
      for (int k = front + 1; k <= back; ++k)
        if (r[k] != r[front]) uniform = false;
      if (!uniform) continue;
      ShapeCertificate c;
      c.shape = RelatorShape::conjugation;
      c.rotation = rot;
      c.gen_i = std::abs(r[0]) - 1;
      c.e1 = r[0] > 0 ? t : -t;
      c.gen_j = std::abs(r[front]) - 1;
      c.e2 = r[front] > 0 ? (back - front + 1) : -(back - front + 1);
      c.conjugator = u;
      return c;
    }
  }
  return std::nullopt;
}

namespace {

Word rebuild_shape_a(const ShapeCertificate& c) {
  Word w;
  int li = c.e1 > 0 ? c.gen_i + 1 : -(c.gen_i + 1);
  for (long long k = 0; k < std::abs(c.e1); ++k) w.push_back(li);
  w.insert(w.end(), c.conjugator.begin(), c.conjugator.end());
  int lj = c.e2 > 0 ? c.gen_j + 1 : -(c.gen_j + 1);
  for (long long k = 0; k < std::abs(c.e2); ++k) w.push_back(lj);
  Word ui = inverse_word(c.conjugator);
  w.insert(w.end(), ui.begin(), ui.end());
  return free_reduce(w);
}

// Shortest words over the assignment for every group element (BFS order is
// the deterministic preference order for condition-2 conjugators).
struct WordTable {
  std::vector<Word> word_of;
  std::vector<int> bfs_order;
};

WordTable shortest_words(const FiniteGroup& g, const std::vector<int>& assignment) {
  WordTable wt;
  wt.word_of.assign(g.order(), Word{});
  std::vector<char> seen(g.order(), 0);
  std::deque<int> q{g.identity()};
  seen[g.identity()] = 1;
  while (!q.empty()) {
    int e = q.front();
    q.pop_front();
    wt.bfs_order.push_back(e);
    for (int j = 0; j < (int)assignment.size(); ++j)
      for (int sign : {+1, -1}) {
        int n = g.mul(e, sign > 0 ? assignment[j] : g.inv(assignment[j]));
        if (seen[n]) continue;
        seen[n] = 1;
        wt.word_of[n] = wt.word_of[e];
        wt.word_of[n].push_back(sign * (j + 1));
        q.push_back(n);
      }
  }
  return wt;
}

Word product_relator(const std::vector<Condition2Entry>& cond2,
                     const std::vector<Word>& conj_words) {
  Word w;
  for (std::size_t i = 0; i < cond2.size(); ++i) {
    w.insert(w.end(), conj_words[i].begin(), conj_words[i].end());
    for (int k = 0; k < cond2[i].exponent; ++k) w.push_back(cond2[i].generator + 1);
    Word ui = inverse_word(conj_words[i]);
    w.insert(w.end(), ui.begin(), ui.end());
  }
  return free_reduce(w);
}

// All shape-(a) identity words up to the length bound, deduplicated up to
// rotation and inversion, ordered by (length, lex).
std::vector<Word> shape_a_relators(const FiniteGroup& g, const std::vector<int>& assignment,
                                   int max_len, long long node_cap) {
  std::set<Word> found;
  const int s = (int)assignment.size();
  Word word;
  long long nodes = 0;
  auto dfs = [&](auto&& self, int product) -> void {
    for (int j = 1; j <= s; ++j)
      for (int letter : {j, -j}) {
        if (!word.empty() && word.back() == -letter) continue;
        if (++nodes > node_cap) fail_resource("relator search node cap exceeded");
        int e = assignment[j - 1];
        int np = g.mul(product, letter > 0 ? e : g.inv(e));
        word.push_back(letter);
        if (np == g.identity()) {
          if (word.front() != -word.back() && shape_a_certificate(word))
            found.insert(canonical_cyclic(word));
          // extensions are consequences of shorter relators; prune
        } else if ((int)word.size() < max_len) {
          self(self, np);
        }
        word.pop_back();
      }
  };
  dfs(dfs, g.identity());
  std::vector<Word> out(found.begin(), found.end());
  std::sort(out.begin(), out.end(), [](const Word& a, const Word& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

std::optional<GoodPresentationWitness> try_assignment(const SphericalSystem& sys,
                                                      const std::vector<int>& assignment,
                                                      const Pi1Options& opts) {
  const FiniteGroup& g = *sys.group;
  if (subgroup_generated(g, assignment).order() != g.order()) return std::nullopt;

  WordTable wt = shortest_words(g, assignment);
  auto cond2 = condition2_search(sys, assignment, wt.bfs_order);
  if (!cond2) return std::nullopt;

  int max_ord = 0;
  for (int a : assignment) max_ord = std::max(max_ord, g.element_order(a));
  int max_len = std::min(opts.max_word_length, std::max(4, max_ord));

  Presentation pres;
  pres.generator_count = (int)assignment.size();
  pres.relators = shape_a_relators(g, assignment, max_len, opts.node_cap);

  std::vector<ShapeCertificate> shapes;
  for (const Word& r : pres.relators) {
    auto c = shape_a_certificate(r);
    if (!c) fail_inconsistency("collected relator lost its shape certificate");
    shapes.push_back(*c);
  }

  std::vector<Word> conj_words;
  bool conjugators_in_bound = true;
  for (const auto& e : *cond2) {
    conj_words.push_back(wt.word_of[e.conjugator]);
    conjugators_in_bound =
        conjugators_in_bound && (int)conj_words.back().size() <= opts.conjugator_word_bound;
  }
  if (conjugators_in_bound) {
    Word b = product_relator(*cond2, conj_words);
    bool duplicate = b.empty();
    for (const Word& r : pres.relators)
      duplicate = duplicate || canonical_cyclic(r) == canonical_cyclic(b);
    if (!duplicate) {
      pres.relators.push_back(b);
      ShapeCertificate c;
      c.shape = RelatorShape::product;
      shapes.push_back(c);
    }
  }
  if (pres.relators.empty()) return std::nullopt;

  if (verify_presentation(pres, g, assignment, opts.coset_cap) != VerifyOutcome::yes)
    return std::nullopt;

  GoodPresentationWitness w;
  w.assignment = assignment;
  w.presentation = std::move(pres);
  w.condition2 = std::move(*cond2);
  w.conjugator_words = std::move(conj_words);
  w.shapes = std::move(shapes);
  return w;
}

}  // namespace

Pi1Result pi1_trivial_certificate(const SphericalSystem& sys, const Pi1Options& opts) {
  if (opts.max_generators < 1) fail_validation("max_generators must be at least 1");

  std::vector<int> distinct;
  for (int e : sys.elements)
    if (std::find(distinct.begin(), distinct.end(), e) == distinct.end())
      distinct.push_back(e);

  // Candidate assignments: subsets of the distinct system elements, smallest
  // first, in lexicographic position order. Sizes 1 and 2 cover the cyclic,
  // dihedral and Coxeter seed families.
  std::vector<std::vector<int>> candidates;
  const int n = (int)distinct.size();
  for (int size = 1; size <= std::min(opts.max_generators, n); ++size) {
    std::vector<int> idx(size);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      std::vector<int> a(size);
      for (int k = 0; k < size; ++k) a[k] = distinct[idx[k]];
      candidates.push_back(std::move(a));
      int k = size - 1;
      while (k >= 0 && idx[k] == n - size + k) --k;
      if (k < 0) break;
      ++idx[k];
      for (int m = k + 1; m < size; ++m) idx[m] = idx[m - 1] + 1;
    }
  }

  auto run = [&](const std::vector<int>& a) { return try_assignment(sys, a, opts); };

  if (opts.threads <= 1) {
    for (const auto& a : candidates)
      if (auto w = run(a)) return {Pi1Result::Status::verified, std::move(w), "witness found"};
  } else {
    // Block-synchronous sweep: lowest candidate index wins, independent of
    // scheduling.
    for (std::size_t base = 0; base < candidates.size(); base += opts.threads) {
      std::vector<std::future<std::optional<GoodPresentationWitness>>> futs;
      for (std::size_t i = base; i < std::min(base + opts.threads, candidates.size()); ++i)
        futs.push_back(std::async(std::launch::async, run, std::cref(candidates[i])));
      for (auto& f : futs)
        if (auto w = f.get()) return {Pi1Result::Status::verified, std::move(w), "witness found"};
    }
  }
  return {Pi1Result::Status::inconclusive, std::nullopt,
          "no good presentation found within the search bounds"};
}

bool verify_witness(const SphericalSystem& sys, const GoodPresentationWitness& w,
                    int coset_cap) {
  const FiniteGroup& g = *sys.group;
  const std::size_t r = sys.elements.size();
  if (w.assignment.empty() || w.condition2.size() != r || w.conjugator_words.size() != r ||
      w.shapes.size() != w.presentation.relators.size() ||
      (int)w.assignment.size() != w.presentation.generator_count)
    return false;
  for (int a : w.assignment)  // condition (1)
    if (std::find(sys.elements.begin(), sys.elements.end(), a) == sys.elements.end())
      return false;
  for (std::size_t i = 0; i < r; ++i) {  // condition (2)
    const Condition2Entry& e = w.condition2[i];
    if (e.generator < 0 || e.generator >= (int)w.assignment.size() || e.exponent < 1)
      return false;
    if (evaluate_word(g, w.assignment, w.conjugator_words[i]) != e.conjugator) return false;
    int p = g.mul(e.conjugator, g.power(w.assignment[e.generator], e.exponent));
    if (g.mul(p, g.inv(e.conjugator)) != sys.elements[i]) return false;
  }
  for (std::size_t k = 0; k < w.presentation.relators.size(); ++k) {  // condition (3)
    const Word& rel = w.presentation.relators[k];
    if (rel.empty() || free_reduce(rel) != rel) return false;
    if (evaluate_word(g, w.assignment, rel) != g.identity()) return false;
    const ShapeCertificate& c = w.shapes[k];
    if (c.shape == RelatorShape::product) {
      if (!cyclically_equal(rel, product_relator(w.condition2, w.conjugator_words)))
        return false;
    } else {
      if (rebuild_shape_a(c) != rotate_left(rel, c.rotation)) return false;
    }
  }
  return verify_presentation(w.presentation, g, w.assignment, coset_cap) == VerifyOutcome::yes;
}

}  // namespace pqs
