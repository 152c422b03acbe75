#ifndef ROOKREP_COMBINATORICS_HPP
#define ROOKREP_COMBINATORICS_HPP

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "rookrep/exactnum.hpp"

namespace rookrep {

/// Weakly decreasing positive parts; empty is the empty partition.
using Partition = std::vector<int>;
/// One partition per colour, length r.
using Multipartition = std::vector<Partition>;

int size(const Partition& p);
int size(const Multipartition& m);
bool is_partition(const Partition& p);

/// Cell of a (multi)partition diagram. row and col are 1-based, component 0-based.
struct Box {
  int component = 0;
  int row = 1;
  int col = 1;
  auto operator<=>(const Box&) const = default;
};

int content(const Box& b);
/// content mod p, or the plain content when p == 0 (characteristic zero).
int residue(const Box& b, int p);

/// All partitions of k, in lexicographically decreasing order.
std::vector<Partition> partitions_of(int k);
/// All multipartitions of total size k with r components, sorted.
std::vector<Multipartition> multipartitions_of(int r, int k);
/// (level, multipartition) for levels 0..n, level first, then lexicographic.
std::vector<std::pair<int, Multipartition>> multipartitions_up_to(int r, int n);

struct CornerSets {
  std::vector<Box> removable;
  std::vector<Box> addable;
};

/// Outer corners and addable cells of lambda, in strictly decreasing row order.
/// When residue_filter is set only cells of that residue (mod p, p = 0 for Z) are kept.
CornerSets removable_addable(const Partition& lambda, std::optional<int> residue_filter = {},
                             int p = 0);

bool is_p_regular(const Partition& lambda, int p);

struct Signature {
  std::string raw;      // '+' addable, '-' removable, bottom-left to top-right
  std::string reduced;  // after cancelling every "-+"
  std::vector<Box> rim;  // boxes of raw, same order
  std::vector<Box> normal;    // surviving '-' boxes, rim order
  std::vector<Box> conormal;  // surviving '+' boxes, rim order
};

Signature signature(const Partition& lambda, int i, int p);

Partition add_box(Partition lambda, const Box& b);
Partition remove_box(Partition lambda, const Box& b);

/// A filling of a multipartition by a subset of {1..n}, rows and columns increasing.
class MultiTableau {
public:
  MultiTableau(int n, int r) : n_(n), r_(r), cells_(static_cast<std::size_t>(n)) {}

  int n() const { return n_; }
  int r() const { return r_; }
  /// Position of entry b (1-based), if present.
  const std::optional<Box>& cell(int b) const { return cells_.at(static_cast<std::size_t>(b - 1)); }
  void place(int b, std::optional<Box> box) { cells_.at(static_cast<std::size_t>(b - 1)) = box; }
  bool contains(int b) const { return cell(b).has_value(); }

  Multipartition shape() const;
  /// Entries present, increasing.
  std::vector<int> entries() const;
  /// Relabels the present entries 1..k preserving order.
  MultiTableau standardized() const;
  bool is_valid() const;
  /// Per component, rows of entries with 0 for cells not holding an entry.
  std::vector<std::vector<std::vector<int>>> as_arrays() const;
  std::string to_string() const;

  friend bool operator==(const MultiTableau& a, const MultiTableau& b) {
    return a.n_ == b.n_ && a.r_ == b.r_ && a.cells_ == b.cells_;
  }
  /// Sorts by the sequence of (component+1, row, col) of 1..n, absent entries as (0,0,0).
  friend bool operator<(const MultiTableau& a, const MultiTableau& b);

private:
  int n_;
  int r_;
  std::vector<std::optional<Box>> cells_;
};

/// Every filling of lambda by a |lambda|-subset of {1..n}, sorted.
std::vector<MultiTableau> enumerate_tableaux(const Multipartition& lambda, int n);

/// Number of standard Young tableaux of a partition, by brute-force filling.
long count_standard_tableaux(const Partition& lambda);

struct TableauStats {
  bool present = false;
  int component = 0;  // 0-based
  int content = 0;
  CycElem sign{1};    // xi^component, or 0 when absent
};

TableauStats tableau_stats(const MultiTableau& L, int b);

/// s_i L (entries i and i+1 exchanged), or nullopt when that filling is not increasing.
std::optional<MultiTableau> swap_tableau(const MultiTableau& L, int i);
/// 1/(ct(L(i+1)) - ct(L(i))); throws unless i and i+1 sit in the same component.
Rational swap_coefficient(const MultiTableau& L, int i);

}  // namespace rookrep

#endif  // ROOKREP_COMBINATORICS_HPP
