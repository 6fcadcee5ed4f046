#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "rangemode/types.hpp"
#include "rangemode/work_counters.hpp"

namespace rangemode {

inline constexpr int kMaxGridDims = 8;

// 1-based coordinate tuple; entries past the array's dimension count are 1.
using Coord = std::array<Index, kMaxGridDims>;

inline Coord make_coord(std::initializer_list<Index> xs) {
  Coord c;
  c.fill(1);
  int l = 0;
  for (Index x : xs) c[l++] = x;
  return c;
}

// d-rectangle [lo : hi], per-coordinate 1-based inclusive, lo <= hi.
struct GridRange {
  Coord lo;
  Coord hi;
};

// Rank-reduced d-dimensional array stored row-major, d in [1, 8].
class GridArray {
 public:
  GridArray(std::span<const Token> row_major, std::span<const Index> dims);

  int dim_count() const { return static_cast<int>(dims_.size()); }
  Index extent(int axis) const { return dims_[axis]; }
  std::uint64_t total_size() const { return ranks_.size(); }
  Rank distinct_count() const { return static_cast<Rank>(distinct_.size()); }

  std::uint64_t offset_of(const Coord& c) const {
    std::uint64_t off = 0;
    for (int l = 0; l < dim_count(); ++l)
      off += static_cast<std::uint64_t>(c[l] - 1) * strides_[l];
    return off;
  }
  Rank rank_at(const Coord& c) const { return ranks_[offset_of(c)]; }
  Token value_at(const Coord& c) const { return token_for(rank_at(c)); }
  Token token_for(Rank r) const { return distinct_[r - 1]; }
  std::span<const Rank> ranks() const { return ranks_; }

  // 1-based row-major linear index, used as the grid witness encoding.
  std::uint64_t linear_index(const Coord& c) const { return offset_of(c) + 1; }
  Coord coord_of(std::uint64_t linear) const;

  bool valid(const GridRange& r) const {
    for (int l = 0; l < dim_count(); ++l)
      if (r.lo[l] < 1 || r.lo[l] > r.hi[l] || r.hi[l] > dims_[l]) return false;
    return true;
  }

 private:
  std::vector<Index> dims_;
  std::vector<std::uint64_t> strides_;
  std::vector<Rank> ranks_;
  std::vector<Token> distinct_;
};

// Prefix frequency tables on a d-dimensional lattice: at every lattice
// point t the snapshot C_t[x] counts rank x inside B[1:p(t)], where p maps
// lattice coordinates to boundary positions (multiples of the cell width,
// ragged at the extent). A frequency table for any lattice-aligned
// rectangle follows from its 2^d corners by inclusion-exclusion; a query
// adds one count per index of the enclosing shell around the largest
// aligned rectangle inside the range.
class FrequencyGrid {
 public:
  // Auto configuration: cell width along axis l is ceil(n_l * (k/n)^(1/d))
  // clamped to [1, n_l], keeping total snapshot storage linear.
  explicit FrequencyGrid(const GridArray& ga);
  // Explicit per-axis cell counts, each in [1, n_l] (BadGridError otherwise).
  // Counts are normalized to the effective value ceil(n_l / width).
  FrequencyGrid(const GridArray& ga, std::span<const Index> cell_counts);

  Index cell_count(int axis) const { return counts_[axis]; }
  Index cell_width(int axis) const { return widths_[axis]; }
  // Boundary position q*width clipped to the extent.
  Index boundary(int axis, Index q) const {
    std::uint64_t p = static_cast<std::uint64_t>(q) * widths_[axis];
    return static_cast<Index>(std::min<std::uint64_t>(p, ga_extent(axis)));
  }

  // Exact frequency table of a lattice-aligned rectangle; lo-1 and hi must
  // sit on boundaries per axis, and hi = lo-1 denotes an empty rectangle.
  std::vector<std::uint32_t> span_table(const GridRange& aligned,
                                        WorkCounters* wc = nullptr) const;

  // Largest lattice-aligned rectangle inside r, as lattice cell brackets;
  // false when r contains no full cell.
  bool aligned_span(const GridRange& r, Coord& qa, Coord& qb) const;

  ModeAnswer query(const GridRange& r, Workspace& ws,
                   WorkCounters* wc = nullptr) const;

  std::uint64_t snapshot_cells() const { return cells_.size(); }

 private:
  void build();
  void span_table_into(const Coord& qa, const Coord& qb, std::uint32_t* out,
                       WorkCounters* wc) const;
  std::uint64_t lattice_offset(const Coord& t) const;
  Index ga_extent(int axis) const;

  const GridArray* ga_;
  std::vector<Index> widths_;
  std::vector<Index> counts_;
  std::vector<std::uint64_t> lattice_strides_;
  std::vector<std::uint32_t> cells_;  // (g_1+1)x...x(g_d+1) tables of size k
};

// Counting method over a d-rectangle: tally every index of the range into
// the caller's workspace, then a second sweep reads each rank once and
// restores zero. Work proportional to the range cardinality.
ModeAnswer counting_query(const GridArray& ga, Workspace& ws,
                          const GridRange& r, WorkCounters* wc = nullptr);

}  // namespace rangemode
