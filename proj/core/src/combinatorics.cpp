#include "rookrep/combinatorics.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace rookrep {

int size(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0); }

int size(const Multipartition& m) {
  int total = 0;
  for (const auto& p : m) total += size(p);
  return total;
}

bool is_partition(const Partition& p) {
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (p[k] < 1) return false;
    if (k > 0 && p[k] > p[k - 1]) return false;
  }
  return true;
}

int content(const Box& b) { return b.col - b.row; }

int residue(const Box& b, int p) {
  return p == 0 ? content(b) : static_cast<int>(mod_floor(content(b), p));
}

namespace {

void partitions_rec(int remaining, int max_part, Partition& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    cur.push_back(part);
    partitions_rec(remaining - part, part, cur, out);
    cur.pop_back();
  }
}

void multi_rec(int r, int remaining, Multipartition& cur, std::vector<Multipartition>& out) {
  if (static_cast<int>(cur.size()) == r - 1) {
    for (const auto& p : partitions_of(remaining)) {
      cur.push_back(p);
      out.push_back(cur);
      cur.pop_back();
    }
    return;
  }
  for (int k = 0; k <= remaining; ++k) {
    for (const auto& p : partitions_of(k)) {
      cur.push_back(p);
      multi_rec(r, remaining - k, cur, out);
      cur.pop_back();
    }
  }
}

}  // namespace

std::vector<Partition> partitions_of(int k) {
  if (k < 0) throw std::invalid_argument("partitions_of: negative size");
  std::vector<Partition> out;
  Partition cur;
  partitions_rec(k, k, cur, out);
  return out;
}

std::vector<Multipartition> multipartitions_of(int r, int k) {
  if (r < 1) throw std::invalid_argument("multipartitions_of: r must be positive");
  std::vector<Multipartition> out;
  Multipartition cur;
  multi_rec(r, k, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<int, Multipartition>> multipartitions_up_to(int r, int n) {
  std::vector<std::pair<int, Multipartition>> out;
  for (int level = 0; level <= n; ++level) {
    for (auto& m : multipartitions_of(r, level)) out.emplace_back(level, std::move(m));
  }
  return out;
}

CornerSets removable_addable(const Partition& lambda, std::optional<int> residue_filter, int p) {
  CornerSets out;
  const int len = static_cast<int>(lambda.size());
  auto part = [&](int row) { return row >= 1 && row <= len ? lambda[static_cast<std::size_t>(row - 1)] : 0; };
  auto keep = [&](const Box& b) { return !residue_filter || residue(b, p) == *residue_filter; };
  for (int row = len + 1; row >= 1; --row) {
    if (row <= len && (row == len || part(row + 1) < part(row))) {
      Box b{0, row, part(row)};
      if (keep(b)) out.removable.push_back(b);
    }
    if (row == 1 || part(row - 1) > part(row)) {
      Box b{0, row, part(row) + 1};
      if (keep(b)) out.addable.push_back(b);
    }
  }
  return out;
}

bool is_p_regular(const Partition& lambda, int p) {
  if (p < 2) throw std::invalid_argument("is_p_regular: p must be at least 2");
  std::size_t run = 0;
  for (std::size_t k = 0; k < lambda.size(); ++k) {
    run = (k > 0 && lambda[k] == lambda[k - 1]) ? run + 1 : 1;
    if (run >= static_cast<std::size_t>(p)) return false;
  }
  return true;
}

Signature signature(const Partition& lambda, int i, int p) {
  const auto corners = removable_addable(lambda, i, p);
  Signature sig;
  // Merge by decreasing row; in a shared row the removable cell lies further left.
  std::size_t a = 0;
  std::size_t r = 0;
  while (a < corners.addable.size() || r < corners.removable.size()) {
    const bool take_removable =
        r < corners.removable.size() &&
        (a == corners.addable.size() || corners.removable[r].row >= corners.addable[a].row);
    if (take_removable) {
      sig.raw.push_back('-');
      sig.rim.push_back(corners.removable[r++]);
    } else {
      sig.raw.push_back('+');
      sig.rim.push_back(corners.addable[a++]);
    }
  }
  std::vector<std::size_t> stack;
  for (std::size_t k = 0; k < sig.raw.size(); ++k) {
    if (sig.raw[k] == '+' && !stack.empty() && sig.raw[stack.back()] == '-') {
      stack.pop_back();
    } else {
      stack.push_back(k);
    }
  }
  for (auto k : stack) {
    sig.reduced.push_back(sig.raw[k]);
    (sig.raw[k] == '-' ? sig.normal : sig.conormal).push_back(sig.rim[k]);
  }
  return sig;
}

Partition add_box(Partition lambda, const Box& b) {
  const auto row = static_cast<std::size_t>(b.row);
  if (row == lambda.size() + 1) {
    lambda.push_back(1);
  } else if (row >= 1 && row <= lambda.size()) {
    ++lambda[row - 1];
  } else {
    throw std::invalid_argument("add_box: row out of range");
  }
  if (lambda[row - 1] != b.col || !is_partition(lambda)) {
    throw std::invalid_argument("add_box: box is not addable");
  }
  return lambda;
}

Partition remove_box(Partition lambda, const Box& b) {
  const auto row = static_cast<std::size_t>(b.row);
  if (row < 1 || row > lambda.size() || lambda[row - 1] != b.col) {
    throw std::invalid_argument("remove_box: box is not removable");
  }
  --lambda[row - 1];
  if (lambda[row - 1] == 0) lambda.pop_back();
  if (!is_partition(lambda)) throw std::invalid_argument("remove_box: box is not removable");
  return lambda;
}

// ---------------------------------------------------------------------------
// MultiTableau

Multipartition MultiTableau::shape() const {
  Multipartition out(static_cast<std::size_t>(r_));
  for (const auto& c : cells_) {
    if (!c) continue;
    auto& part = out[static_cast<std::size_t>(c->component)];
    if (part.size() < static_cast<std::size_t>(c->row)) part.resize(static_cast<std::size_t>(c->row), 0);
    ++part[static_cast<std::size_t>(c->row - 1)];
  }
  return out;
}

std::vector<int> MultiTableau::entries() const {
  std::vector<int> out;
  for (int b = 1; b <= n_; ++b) {
    if (contains(b)) out.push_back(b);
  }
  return out;
}

MultiTableau MultiTableau::standardized() const {
  const auto present = entries();
  MultiTableau out(static_cast<int>(present.size()), r_);
  for (std::size_t k = 0; k < present.size(); ++k) out.place(static_cast<int>(k) + 1, cell(present[k]));
  return out;
}

bool MultiTableau::is_valid() const {
  std::map<Box, int> at;
  for (int b = 1; b <= n_; ++b) {
    const auto& c = cell(b);
    if (!c) continue;
    if (c->component < 0 || c->component >= r_ || c->row < 1 || c->col < 1) return false;
    if (!at.emplace(*c, b).second) return false;
  }
  for (const auto& [box, b] : at) {
    if (box.col > 1) {
      auto left = at.find(Box{box.component, box.row, box.col - 1});
      if (left == at.end() || left->second > b) return false;
    }
    if (box.row > 1) {
      auto up = at.find(Box{box.component, box.row - 1, box.col});
      if (up == at.end() || up->second > b) return false;
    }
  }
  return true;
}

std::vector<std::vector<std::vector<int>>> MultiTableau::as_arrays() const {
  const auto sh = shape();
  std::vector<std::vector<std::vector<int>>> out(static_cast<std::size_t>(r_));
  for (std::size_t c = 0; c < sh.size(); ++c) {
    for (int len : sh[c]) out[c].emplace_back(static_cast<std::size_t>(len), 0);
  }
  for (int b = 1; b <= n_; ++b) {
    const auto& c = cell(b);
    if (c) {
      out[static_cast<std::size_t>(c->component)][static_cast<std::size_t>(c->row - 1)]
         [static_cast<std::size_t>(c->col - 1)] = b;
    }
  }
  return out;
}

std::string MultiTableau::to_string() const {
  std::ostringstream os;
  const auto arrays = as_arrays();
  os << "(";
  for (std::size_t c = 0; c < arrays.size(); ++c) {
    if (c > 0) os << " | ";
    if (arrays[c].empty()) os << "-";
    for (std::size_t row = 0; row < arrays[c].size(); ++row) {
      if (row > 0) os << "/";
      for (std::size_t col = 0; col < arrays[c][row].size(); ++col) {
        if (col > 0) os << " ";
        os << arrays[c][row][col];
      }
    }
  }
  os << ")";
  return os.str();
}

bool operator<(const MultiTableau& a, const MultiTableau& b) {
  if (a.n_ != b.n_) return a.n_ < b.n_;
  auto key = [](const std::optional<Box>& c) {
    return c ? std::array<int, 3>{c->component + 1, c->row, c->col} : std::array<int, 3>{0, 0, 0};
  };
  for (std::size_t k = 0; k < a.cells_.size(); ++k) {
    const auto ka = key(a.cells_[k]);
    const auto kb = key(b.cells_[k]);
    if (ka != kb) return ka < kb;
  }
  return false;
}

namespace {

struct FillState {
  const Multipartition* target;
  Multipartition partial;
  int remaining_cells;
};

void fill_rec(int b, int n, FillState& st, MultiTableau& cur, std::vector<MultiTableau>& out) {
  if (b > n) {
    if (st.remaining_cells == 0) out.push_back(cur);
    return;
  }
  if (n - b + 1 > st.remaining_cells) {
    cur.place(b, std::nullopt);
    fill_rec(b + 1, n, st, cur, out);
  }
  if (st.remaining_cells == 0) return;
  const auto& target = *st.target;
  for (std::size_t c = 0; c < target.size(); ++c) {
    auto& part = st.partial[c];
    const auto& goal = target[c];
    for (std::size_t row = 0; row <= part.size() && row < goal.size(); ++row) {
      const int have = row < part.size() ? part[row] : 0;
      if (have >= goal[row]) continue;
      if (row > 0 && part[row - 1] <= have) continue;
      if (row == part.size()) part.push_back(0);
      ++part[row];
      --st.remaining_cells;
      cur.place(b, Box{static_cast<int>(c), static_cast<int>(row) + 1, have + 1});
      fill_rec(b + 1, n, st, cur, out);
      ++st.remaining_cells;
      --part[row];
      if (part[row] == 0) part.pop_back();
    }
  }
  cur.place(b, std::nullopt);
}

}  // namespace

std::vector<MultiTableau> enumerate_tableaux(const Multipartition& lambda, int n) {
  for (const auto& p : lambda) {
    if (!is_partition(p)) throw std::invalid_argument("enumerate_tableaux: not a partition");
  }
  const int total = size(lambda);
  if (total > n) throw std::invalid_argument("enumerate_tableaux: |lambda| exceeds n");
  if (lambda.empty()) throw std::invalid_argument("enumerate_tableaux: need at least one component");
  FillState st{&lambda, Multipartition(lambda.size()), total};
  MultiTableau cur(n, static_cast<int>(lambda.size()));
  std::vector<MultiTableau> out;
  fill_rec(1, n, st, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

long count_standard_tableaux(const Partition& lambda) {
  return static_cast<long>(enumerate_tableaux(Multipartition{lambda}, size(lambda)).size());
}

TableauStats tableau_stats(const MultiTableau& L, int b) {
  TableauStats st;
  st.sign = CycElem(L.r());
  if (b < 1 || b > L.n()) throw std::out_of_range("tableau_stats: entry out of range");
  const auto& c = L.cell(b);
  if (!c) return st;
  st.present = true;
  st.component = c->component;
  st.content = content(*c);
  st.sign = cyc_root_power(L.r(), c->component);
  return st;
}

std::optional<MultiTableau> swap_tableau(const MultiTableau& L, int i) {
  if (i < 1 || i >= L.n()) throw std::out_of_range("swap_tableau: index out of range");
  MultiTableau out = L;
  out.place(i, L.cell(i + 1));
  out.place(i + 1, L.cell(i));
  if (!out.is_valid()) return std::nullopt;
  return out;
}

Rational swap_coefficient(const MultiTableau& L, int i) {
  const auto& a = L.cell(i);
  const auto& b = L.cell(i + 1);
  if (!a || !b || a->component != b->component) {
    throw std::invalid_argument("swap_coefficient: entries not in a common component");
  }
  return Rational(1) / Rational(content(*b) - content(*a));
}

}  // namespace rookrep
