#include "rangemode/grid.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <type_traits>

#include "rangemode/errors.hpp"

namespace rangemode {

namespace {

// Row-major odometer over [lo, hi]; no calls if the box is empty. A bool
// returning visitor stops the walk when it yields true.
template <typename Fn>
void iterate_box(const Coord& lo, const Coord& hi, int d, Fn&& fn) {
  for (int l = 0; l < d; ++l)
    if (lo[l] > hi[l]) return;
  Coord cur = lo;
  while (true) {
    if constexpr (std::is_void_v<std::invoke_result_t<Fn&, const Coord&>>) {
      fn(cur);
    } else {
      if (fn(cur)) return;
    }
    int l = d - 1;
    for (; l >= 0; --l) {
      if (cur[l] < hi[l]) {
        ++cur[l];
        break;
      }
      cur[l] = lo[l];
    }
    if (l < 0) break;
  }
}

}  // namespace

GridArray::GridArray(std::span<const Token> row_major,
                     std::span<const Index> dims) {
  if (dims.empty() || dims.size() > kMaxGridDims) {
    throw BadGridError("dimension count must lie in [1, " +
                       std::to_string(kMaxGridDims) + "], got " +
                       std::to_string(dims.size()));
  }
  dims_.assign(dims.begin(), dims.end());
  std::uint64_t total = 1;
  for (Index e : dims_) {
    if (e < 1) throw BadGridError("grid extents must be positive");
    if (total > UINT64_MAX / e) throw BadGridError("extent product overflows");
    total *= e;
  }
  if (total != row_major.size()) {
    throw DimensionMismatchError(
        "element count " + std::to_string(row_major.size()) +
        " does not match extent product " + std::to_string(total));
  }

  strides_.assign(dims_.size(), 1);
  for (int l = static_cast<int>(dims_.size()) - 2; l >= 0; --l)
    strides_[l] = strides_[l + 1] * dims_[l + 1];

  distinct_.assign(row_major.begin(), row_major.end());
  std::sort(distinct_.begin(), distinct_.end());
  distinct_.erase(std::unique(distinct_.begin(), distinct_.end()),
                  distinct_.end());
  ranks_.resize(row_major.size());
  for (std::size_t i = 0; i < ranks_.size(); ++i) {
    auto it =
        std::lower_bound(distinct_.begin(), distinct_.end(), row_major[i]);
    ranks_[i] = static_cast<Rank>(it - distinct_.begin()) + 1;
  }
}

Coord GridArray::coord_of(std::uint64_t linear) const {
  std::uint64_t off = linear - 1;
  Coord c;
  c.fill(1);
  for (int l = 0; l < dim_count(); ++l) {
    c[l] = static_cast<Index>(off / strides_[l]) + 1;
    off %= strides_[l];
  }
  return c;
}

FrequencyGrid::FrequencyGrid(const GridArray& ga) : ga_(&ga) {
  const int d = ga.dim_count();
  const double ratio = static_cast<double>(ga.distinct_count()) /
                       static_cast<double>(ga.total_size());
  const double scale = std::pow(ratio, 1.0 / d);
  widths_.resize(d);
  counts_.resize(d);
  for (int l = 0; l < d; ++l) {
    auto w = static_cast<Index>(std::ceil(ga.extent(l) * scale));
    w = std::clamp<Index>(w, 1, ga.extent(l));
    counts_[l] = (ga.extent(l) + w - 1) / w;
    widths_[l] = (ga.extent(l) + counts_[l] - 1) / counts_[l];
  }
  build();
}

FrequencyGrid::FrequencyGrid(const GridArray& ga,
                             std::span<const Index> cell_counts)
    : ga_(&ga) {
  const int d = ga.dim_count();
  if (static_cast<int>(cell_counts.size()) != d) {
    throw BadGridError("expected " + std::to_string(d) +
                       " cell counts, got " +
                       std::to_string(cell_counts.size()));
  }
  widths_.resize(d);
  counts_.resize(d);
  for (int l = 0; l < d; ++l) {
    Index g = cell_counts[l];
    if (g < 1 || g > ga.extent(l)) {
      throw BadGridError("cell count along axis " + std::to_string(l) +
                         " must lie in [1, " + std::to_string(ga.extent(l)) +
                         "], got " + std::to_string(g));
    }
    widths_[l] = (ga.extent(l) + g - 1) / g;
    counts_[l] = (ga.extent(l) + widths_[l] - 1) / widths_[l];
  }
  build();
}

Index FrequencyGrid::ga_extent(int axis) const { return ga_->extent(axis); }

std::uint64_t FrequencyGrid::lattice_offset(const Coord& t) const {
  std::uint64_t off = 0;
  for (int l = 0; l < ga_->dim_count(); ++l)
    off += static_cast<std::uint64_t>(t[l]) * lattice_strides_[l];
  return off;
}

void FrequencyGrid::build() {
  const int d = ga_->dim_count();
  const Rank k = ga_->distinct_count();

  lattice_strides_.assign(d, 1);
  for (int l = d - 2; l >= 0; --l)
    lattice_strides_[l] = lattice_strides_[l + 1] * (counts_[l + 1] + 1);
  const std::uint64_t points = lattice_strides_[0] * (counts_[0] + 1);
  cells_.assign(points * k, 0);

  // Bin every element into its owning lattice cell, then turn the bins into
  // prefix tables by accumulating along one axis at a time.
  Coord lo, hi;
  lo.fill(1);
  hi.fill(1);
  for (int l = 0; l < d; ++l) hi[l] = ga_->extent(l);
  iterate_box(lo, hi, d, [&](const Coord& c) {
    Coord cell;
    cell.fill(0);
    for (int l = 0; l < d; ++l) cell[l] = (c[l] + widths_[l] - 1) / widths_[l];
    cells_[lattice_offset(cell) * k + ga_->rank_at(c) - 1]++;
  });

  Coord zero, top;
  zero.fill(0);
  top.fill(0);
  for (int l = 0; l < d; ++l) top[l] = counts_[l];
  for (int axis = 0; axis < d; ++axis) {
    iterate_box(zero, top, d, [&](const Coord& t) {
      if (t[axis] == 0) return;
      Coord prev = t;
      --prev[axis];
      std::uint32_t* dst = cells_.data() + lattice_offset(t) * k;
      const std::uint32_t* src = cells_.data() + lattice_offset(prev) * k;
      for (Rank a = 0; a < k; ++a) dst[a] += src[a];
    });
  }
}

void FrequencyGrid::span_table_into(const Coord& qa, const Coord& qb,
                                    std::uint32_t* out,
                                    WorkCounters* wc) const {
  const int d = ga_->dim_count();
  const Rank k = ga_->distinct_count();
  for (Rank a = 0; a < k; ++a) out[a] = 0;
  for (unsigned mask = 0; mask < (1u << d); ++mask) {
    Coord corner;
    corner.fill(0);
    int ones = 0;
    for (int l = 0; l < d; ++l) {
      bool high = (mask >> l) & 1u;
      corner[l] = high ? qb[l] : qa[l];
      ones += high;
    }
    const std::uint32_t* snap = cells_.data() + lattice_offset(corner) * k;
    const bool positive = ((d - ones) % 2) == 0;
    touch_cells(wc, k);
    if (positive) {
      for (Rank a = 0; a < k; ++a) out[a] += snap[a];
    } else {
      for (Rank a = 0; a < k; ++a) out[a] -= snap[a];
    }
  }
}

std::vector<std::uint32_t> FrequencyGrid::span_table(const GridRange& aligned,
                                                     WorkCounters* wc) const {
  const int d = ga_->dim_count();
  Coord qa, qb;
  qa.fill(0);
  qb.fill(0);
  for (int l = 0; l < d; ++l) {
    const Index w = widths_[l];
    qa[l] = (aligned.lo[l] - 1 + w - 1) / w;
    qb[l] = (aligned.hi[l] + w - 1) / w;
    // corners must sit on lattice boundaries; hi = lo-1 marks empty
    assert(boundary(l, qa[l]) == aligned.lo[l] - 1);
    assert(aligned.hi[l] + 1 == aligned.lo[l] ||
           boundary(l, qb[l]) == aligned.hi[l]);
  }
  std::vector<std::uint32_t> out(ga_->distinct_count());
  span_table_into(qa, qb, out.data(), wc);
  return out;
}

bool FrequencyGrid::aligned_span(const GridRange& r, Coord& qa,
                                 Coord& qb) const {
  const int d = ga_->dim_count();
  qa.fill(0);
  qb.fill(0);
  bool nonempty = true;
  for (int l = 0; l < d; ++l) {
    const Index w = widths_[l];
    qa[l] = (r.lo[l] - 1 + w - 1) / w;  // first boundary >= lo-1
    qb[l] = r.hi[l] == ga_->extent(l) ? counts_[l] : r.hi[l] / w;
    if (qa[l] >= qb[l]) nonempty = false;
  }
  return nonempty;
}

ModeAnswer FrequencyGrid::query(const GridRange& r, Workspace& ws,
                                WorkCounters* wc) const {
  assert(ga_->valid(r));
  const int d = ga_->dim_count();
  const Rank k = ga_->distinct_count();

  Coord qa, qb;
  if (!aligned_span(r, qa, qb)) return counting_query(*ga_, ws, r, wc);

  ws.ensure(k);
  std::uint32_t* table = ws.data();
  span_table_into(qa, qb, table, wc);

  // Enclosing shell: peel two slabs per axis so every index outside the
  // aligned rectangle is visited exactly once.
  Coord alo, ahi;
  alo.fill(1);
  ahi.fill(1);
  for (int l = 0; l < d; ++l) {
    alo[l] = boundary(l, qa[l]) + 1;
    ahi[l] = boundary(l, qb[l]);
  }
  auto bump = [&](const Coord& c) {
    touch_cells(wc);
    ++table[ga_->rank_at(c) - 1];
  };
  for (int axis = 0; axis < d; ++axis) {
    Coord lo = r.lo, hi = r.hi;
    for (int l = 0; l < axis; ++l) {
      lo[l] = alo[l];
      hi[l] = ahi[l];
    }
    hi[axis] = alo[axis] - 1;
    iterate_box(lo, hi, d, bump);
    lo[axis] = ahi[axis] + 1;
    hi[axis] = r.hi[axis];
    iterate_box(lo, hi, d, bump);
  }

  Rank best_rank = 1;
  std::uint32_t best_f = 0;
  for (Rank a = 0; a < k; ++a) {
    touch_cells(wc);
    if (table[a] > best_f) {
      best_f = table[a];
      best_rank = a + 1;
    }
    table[a] = 0;
  }

  std::uint64_t witness = 0;
  iterate_box(r.lo, r.hi, d, [&](const Coord& c) -> bool {
    if (ga_->rank_at(c) != best_rank) return false;
    witness = ga_->linear_index(c);
    return true;
  });
  return ModeAnswer{ga_->token_for(best_rank), best_f, witness};
}

ModeAnswer counting_query(const GridArray& ga, Workspace& ws,
                          const GridRange& r, WorkCounters* wc) {
  assert(ga.valid(r));
  const int d = ga.dim_count();
  ws.ensure(ga.distinct_count());
  std::uint32_t* tally = ws.data();

  iterate_box(r.lo, r.hi, d, [&](const Coord& c) {
    touch_cells(wc);
    ++tally[ga.rank_at(c) - 1];
  });

  Rank best_rank = 0;
  std::uint32_t best_f = 0;
  std::uint64_t witness = 0;
  iterate_box(r.lo, r.hi, d, [&](const Coord& c) {
    touch_cells(wc);
    Rank a = ga.rank_at(c);
    std::uint32_t f = tally[a - 1];
    tally[a - 1] = 0;
    if (f > best_f) {
      best_f = f;
      best_rank = a;
      witness = ga.linear_index(c);
    }
  });
  return ModeAnswer{ga.token_for(best_rank), best_f, witness};
}

}  // namespace rangemode
