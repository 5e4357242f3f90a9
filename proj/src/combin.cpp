#include "sqz/combin.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

namespace sqz {

Permutation::Permutation(int n) : line_(n) {
  std::iota(line_.begin(), line_.end(), 1);
}

Permutation::Permutation(std::vector<int> one_line) : line_(std::move(one_line)) {
  std::vector<bool> seen(line_.size(), false);
  for (int v : line_) {
    if (v < 1 || v > int(line_.size()) || seen[v - 1])
      throw SizeMismatch("not a permutation");
    seen[v - 1] = true;
  }
}

Permutation Permutation::simple(int n, int i) {
  if (i < 1 || i >= n) throw SizeMismatch("simple reflection index out of range");
  Permutation p(n);
  std::swap(p.line_[i - 1], p.line_[i]);
  return p;
}

Permutation Permutation::operator*(const Permutation& o) const {
  if (size() != o.size()) throw SizeMismatch("permutation sizes differ");
  std::vector<int> r(size());
  for (int x = 1; x <= size(); ++x) r[x - 1] = apply(o.apply(x));
  return Permutation(std::move(r));
}

Permutation Permutation::inverse() const {
  std::vector<int> r(size());
  for (int x = 1; x <= size(); ++x) r[line_[x - 1] - 1] = x;
  return Permutation(std::move(r));
}

bool Permutation::is_identity() const {
  for (int x = 1; x <= size(); ++x)
    if (apply(x) != x) return false;
  return true;
}

int Permutation::length() const {
  int inv = 0;
  for (int i = 0; i < size(); ++i)
    for (int j = i + 1; j < size(); ++j)
      if (line_[i] > line_[j]) ++inv;
  return inv;
}

std::vector<int> Permutation::descents() const {
  std::vector<int> d;
  for (int i = 1; i < size(); ++i)
    if (line_[i - 1] > line_[i]) d.push_back(i);
  return d;
}

std::string Permutation::to_string() const {
  std::ostringstream os;
  for (int i = 0; i < size(); ++i) {
    if (i) os << ",";
    os << line_[i];
  }
  return os.str();
}

Permutation Permutation::parse(const std::string& text, int n) {
  std::vector<int> line;
  std::string cur;
  for (char c : text) {
    if (std::isdigit(static_cast<unsigned char>(c))) {
      cur += c;
    } else if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      if (!cur.empty()) {
        line.push_back(std::stoi(cur));
        cur.clear();
      }
    } else {
      throw ParseError("bad character in permutation");
    }
  }
  if (!cur.empty()) line.push_back(std::stoi(cur));
  if (line.empty()) throw ParseError("empty permutation");
  if (n > 0 && int(line.size()) != n) throw SizeMismatch("permutation size mismatch");
  return Permutation(std::move(line));
}

Permutation word_to_permutation(const ReducedWord& word, int n) {
  Permutation p(n);
  // first letter outermost: apply letters right to left
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    p = Permutation::simple(n, *it) * p;
  return p;
}

std::string word_to_string(const ReducedWord& word) {
  std::ostringstream os;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) os << ",";
    os << word[i];
  }
  return os.str();
}

ReducedWord parse_word(const std::string& text) {
  ReducedWord w;
  std::string cur;
  auto flush = [&] {
    if (!cur.empty()) {
      w.push_back(std::stoi(cur));
      cur.clear();
    }
  };
  for (char c : text) {
    if (std::isdigit(static_cast<unsigned char>(c))) cur += c;
    else if (c == ',' || std::isspace(static_cast<unsigned char>(c))) flush();
    else throw ParseError("bad character in word");
  }
  flush();
  return w;
}

ReducedWord reduced_word(const Permutation& pi) {
  Permutation p = pi;
  std::vector<int> peeled;
  while (true) {
    auto d = p.descents();
    if (d.empty()) break;
    int i = d.front();
    // p = (p s_i) s_i, so the peeled letter is applied first
    std::vector<int> line = p.one_line();
    std::swap(line[i - 1], line[i]);
    p = Permutation(std::move(line));
    peeled.push_back(i);
  }
  return ReducedWord(peeled.rbegin(), peeled.rend());
}

namespace {

void collect_words(const Permutation& pi,
                   std::map<std::vector<int>, std::vector<ReducedWord>>& memo,
                   std::size_t cap) {
  if (memo.count(pi.one_line())) return;
  std::vector<ReducedWord> out;
  if (pi.is_identity()) {
    out.push_back({});
  } else {
    for (int i : pi.descents()) {
      std::vector<int> line = pi.one_line();
      std::swap(line[i - 1], line[i]);
      Permutation shorter(std::move(line));
      collect_words(shorter, memo, cap);
      for (const ReducedWord& w : memo[shorter.one_line()]) {
        ReducedWord ext = w;
        ext.push_back(i);
        out.push_back(std::move(ext));
        if (out.size() >= cap) break;
      }
      if (out.size() >= cap) break;
    }
  }
  memo[pi.one_line()] = std::move(out);
}

}  // namespace

std::vector<ReducedWord> all_reduced_words(const Permutation& pi, std::size_t cap) {
  std::map<std::vector<int>, std::vector<ReducedWord>> memo;
  collect_words(pi, memo, cap);
  std::vector<ReducedWord> out = memo[pi.one_line()];
  std::sort(out.begin(), out.end());
  if (out.size() > cap) out.resize(cap);
  return out;
}

Involution::Involution(int n, std::vector<std::pair<int, int>> pairs)
    : n_(n), pairs_(std::move(pairs)) {
  std::vector<bool> seen(n_ + 1, false);
  for (auto& [i, j] : pairs_) {
    if (i > j) std::swap(i, j);
    if (i < 1 || j > n_ || i == j) throw SizeMismatch("bad transposition");
    if (seen[i] || seen[j]) throw SizeMismatch("transpositions not disjoint");
    seen[i] = seen[j] = true;
  }
  std::sort(pairs_.begin(), pairs_.end());
  if (2 * rank() > n_) throw RankTooLarge("too many transpositions");
}

std::vector<int> Involution::fixed_points() const {
  std::vector<bool> moved(n_ + 1, false);
  for (auto& [i, j] : pairs_) moved[i] = moved[j] = true;
  std::vector<int> fp;
  for (int k = 1; k <= n_; ++k)
    if (!moved[k]) fp.push_back(k);
  return fp;
}

Permutation Involution::as_permutation() const {
  std::vector<int> line(n_);
  std::iota(line.begin(), line.end(), 1);
  for (auto& [i, j] : pairs_) {
    line[i - 1] = j;
    line[j - 1] = i;
  }
  return Permutation(std::move(line));
}

std::string Involution::to_string() const {
  if (pairs_.empty()) return "id";
  std::ostringstream os;
  for (auto& [i, j] : pairs_) os << "(" << i << "," << j << ")";
  return os.str();
}

Involution Involution::parse(const std::string& text, int n) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s == "id" || s.empty()) return Involution::identity(n);
  std::vector<std::pair<int, int>> pairs;
  std::size_t pos = 0;
  while (pos < s.size()) {
    if (s[pos] != '(') throw ParseError("expected '(' in involution");
    std::size_t close = s.find(')', pos);
    if (close == std::string::npos) throw ParseError("expected ')' in involution");
    std::string body = s.substr(pos + 1, close - pos - 1);
    std::size_t comma = body.find(',');
    if (comma == std::string::npos) throw ParseError("expected ',' in transposition");
    int i = std::stoi(body.substr(0, comma));
    int j = std::stoi(body.substr(comma + 1));
    pairs.emplace_back(i, j);
    pos = close + 1;
  }
  return Involution(n, std::move(pairs));
}

UpperMatrix::UpperMatrix(int n, std::vector<std::pair<int, int>> entries)
    : n_(n), entries_(std::move(entries)) {
  for (auto& [i, j] : entries_) {
    if (i < 1 || j > n_ || i >= j)
      throw NotUpperTriangular("entry not strictly upper-triangular");
  }
  std::sort(entries_.begin(), entries_.end());
  entries_.erase(std::unique(entries_.begin(), entries_.end()), entries_.end());
}

Involution UpperMatrix::to_involution() const {
  std::vector<bool> seen(n_ + 1, false);
  for (auto& [i, j] : entries_) {
    if (seen[i] || seen[j]) throw SizeMismatch("matrix is not a partial matching");
    seen[i] = seen[j] = true;
  }
  // square-zero: no entry (i,j) may compose with an entry (j,k)
  std::vector<bool> is_row(n_ + 1, false);
  for (auto& [i, j] : entries_) {
    (void)j;
    is_row[i] = true;
  }
  for (auto& [i, j] : entries_) {
    (void)i;
    if (is_row[j]) throw SizeMismatch("matrix does not square to zero");
  }
  return Involution(n_, entries_);
}

std::string UpperMatrix::to_string() const {
  std::ostringstream os;
  for (int i = 1; i <= n_; ++i) {
    for (int j = 1; j <= n_; ++j) {
      bool one = std::binary_search(entries_.begin(), entries_.end(), std::make_pair(i, j));
      os << (one ? '1' : '.');
    }
    os << '\n';
  }
  return os.str();
}

UpperMatrix n_matrix(const Involution& w) {
  return UpperMatrix(w.n(), w.pairs());
}

int orbit_dim(const Involution& w) {
  int m = w.rank();
  int n = w.n();
  const auto& p = w.pairs();
  int dim = m * n;
  for (auto& [i, j] : p) dim += i - j;
  for (int k = 1; k < m; ++k) {
    int rk = 0;
    for (int l = 0; l < k; ++l) {
      if (p[l].second < p[k].second) ++rk;
      if (p[l].second < p[k].first) ++rk;
    }
    dim -= rk;
  }
  return dim;
}

int orbit_dim_arcs(const Involution& w) {
  int m = w.rank();
  int n = w.n();
  const auto& p = w.pairs();
  int crossings = 0;
  for (int k = 0; k < m; ++k)
    for (int l = k + 1; l < m; ++l) {
      // p sorted by first endpoint: arcs cross iff i_k < i_l < j_k < j_l
      if (p[k].first < p[l].first && p[l].first < p[k].second &&
          p[k].second < p[l].second)
        ++crossings;
    }
  int covered = 0;
  for (int f : w.fixed_points())
    for (auto& [i, j] : p)
      if (i < f && f < j) ++covered;
  return m * (n - m) - crossings - covered;
}

Permutation pi_w(const Involution& w) {
  std::vector<int> line;
  line.reserve(w.n());
  for (auto& [i, j] : w.pairs()) {
    (void)j;
    line.push_back(i);
  }
  for (int f : w.fixed_points()) line.push_back(f);
  for (auto& [i, j] : w.pairs()) {
    (void)i;
    line.push_back(j);
  }
  return Permutation(std::move(line));
}

int length(const Permutation& pi) { return pi.length(); }

UpperMatrix conjugate(const Permutation& sigma, const UpperMatrix& m) {
  if (sigma.size() != m.n()) throw SizeMismatch("permutation/matrix size mismatch");
  std::vector<std::pair<int, int>> entries;
  entries.reserve(m.entries().size());
  for (auto& [i, j] : m.entries()) {
    int a = sigma.apply(i), b = sigma.apply(j);
    if (a >= b)
      throw NotUpperTriangular("conjugation leaves the strictly upper triangle");
    entries.emplace_back(a, b);
  }
  return UpperMatrix(m.n(), std::move(entries));
}

Involution minimal_involution(int n, int m) {
  if (2 * m > n) throw RankTooLarge("rank too large for the ambient size");
  std::vector<std::pair<int, int>> pairs;
  for (int k = 1; k <= m; ++k) pairs.emplace_back(k, n - m + k);
  return Involution(n, std::move(pairs));
}

std::vector<Permutation> minimal_conjugators(const Involution& w) {
  int n = w.n();
  int m = w.rank();
  UpperMatrix target = n_matrix(w);
  UpperMatrix start = n_matrix(minimal_involution(n, m));
  int want = length(pi_w(w));
  std::vector<Permutation> out;
  std::vector<int> line(n);
  std::iota(line.begin(), line.end(), 1);
  do {
    Permutation sigma(line);
    if (sigma.length() != want) continue;
    bool ok = true;
    try {
      if (!(conjugate(sigma, start) == target)) ok = false;
    } catch (const NotUpperTriangular&) {
      ok = false;
    }
    if (ok) out.push_back(sigma);
  } while (std::next_permutation(line.begin(), line.end()));
  return out;
}

namespace {

void build_involutions(int n, int next, std::vector<bool>& used,
                       std::vector<std::pair<int, int>>& pairs,
                       std::vector<Involution>& out) {
  while (next <= n && used[next]) ++next;
  if (next > n) {
    out.emplace_back(n, pairs);
    return;
  }
  used[next] = true;
  // next stays fixed
  build_involutions(n, next + 1, used, pairs, out);
  // or pairs with any larger unused point
  for (int j = next + 1; j <= n; ++j) {
    if (used[j]) continue;
    used[j] = true;
    pairs.emplace_back(next, j);
    build_involutions(n, next + 1, used, pairs, out);
    pairs.pop_back();
    used[j] = false;
  }
  used[next] = false;
}

}  // namespace

std::vector<Involution> enumerate_involutions(int n) {
  std::vector<Involution> out;
  std::vector<bool> used(n + 1, false);
  std::vector<std::pair<int, int>> pairs;
  build_involutions(n, 1, used, pairs, out);
  std::sort(out.begin(), out.end(), [](const Involution& a, const Involution& b) {
    if (a.rank() != b.rank()) return a.rank() < b.rank();
    return a.pairs() < b.pairs();
  });
  return out;
}

long long involution_count(int n) {
  if (n <= 1) return 1;
  long long a = 1, b = 1;  // I(0), I(1)
  for (int k = 2; k <= n; ++k) {
    long long c = b + (k - 1) * a;
    a = b;
    b = c;
  }
  return b;
}

Permutation block_flag_permutation(const Involution& w, int n_block) {
  if (w.n() != 2 * n_block)
    throw NotBlockSupported("involution does not live in S_{2n}");
  if (w.rank() != n_block)
    throw NotBlockSupported("involution is not of full block rank");
  std::vector<int> line(n_block, 0);
  for (auto& [i, j] : w.pairs()) {
    if (i > n_block || j <= n_block)
      throw NotBlockSupported("matrix not supported in the upper-right block");
    // row n_block+1-r of the reversed block, column j-n_block
    line[n_block - i] = j - n_block;
  }
  return Permutation(std::move(line));
}

std::string arc_string(const Involution& w) {
  std::string s(w.n(), '.');
  char label = 'a';
  for (auto& [i, j] : w.pairs()) {
    s[i - 1] = label;
    s[j - 1] = label;
    ++label;
  }
  return s;
}

}  // namespace sqz
