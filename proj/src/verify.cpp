#include "rangemode/verify.hpp"

#include <functional>
#include <sstream>

#include "rangemode/counting.hpp"

namespace rangemode {

namespace {

std::string describe_range(QueryRange r) {
  return "(" + std::to_string(r.lo) + ", " + std::to_string(r.hi) + ")";
}

std::string describe_range(const GridArray& ga, const GridRange& r) {
  std::ostringstream ss;
  ss << "(";
  for (int l = 0; l < ga.dim_count(); ++l)
    ss << (l ? "," : "") << r.lo[l];
  ss << ")..(";
  for (int l = 0; l < ga.dim_count(); ++l)
    ss << (l ? "," : "") << r.hi[l];
  ss << ")";
  return ss.str();
}

// Empty string when the answer checks out against the oracle's frequency.
std::string check_flat_answer(const RankedArray& ra, const OccurrenceIndex& oi,
                              QueryRange r, const ModeAnswer& got,
                              std::uint32_t oracle_freq, const char* name) {
  std::ostringstream bad;
  if (got.frequency != oracle_freq) {
    bad << name << " range " << describe_range(r) << ": frequency "
        << got.frequency << " != oracle " << oracle_freq;
    return bad.str();
  }
  const auto w = static_cast<Index>(got.witness);
  if (w < r.lo || w > r.hi || ra.value_at(w) != got.element) {
    bad << name << " range " << describe_range(r) << ": witness " << w
        << " does not hold element " << got.element;
    return bad.str();
  }
  const Rank a = ra.rank_at(w);
  if (oi.occurrences_in(a, r.lo, r.hi) != got.frequency) {
    bad << name << " range " << describe_range(r) << ": element "
        << got.element << " has multiplicity "
        << oi.occurrences_in(a, r.lo, r.hi) << ", reported " << got.frequency;
    return bad.str();
  }
  return {};
}

}  // namespace

VerifyReport verify_flat(const RankedArray& ra, const OccurrenceIndex& oi,
                         const SparseModeTable& smt,
                         const SparseFrequencyTable& sft,
                         const LowFrequencyStructure& lfs,
                         std::span<const QueryRange> ranges) {
  VerifyReport report;
  Workspace oracle_ws, ws;
  for (const QueryRange& r : ranges) {
    ++report.ranges_checked;
    const ModeAnswer truth = oracle_mode(ra, r, oracle_ws);

    const struct {
      const char* name;
      ModeAnswer answer;
    } results[] = {
        {"sparse-mode", smt.query(r, ws)},
        {"sparse-freq", sft.query(r, ws)},
        {"low-freq", lfs.query(r, ws)},
        {"counting", counting_query(ra, ws, r)},
    };
    for (const auto& res : results) {
      std::string bad =
          check_flat_answer(ra, oi, r, res.answer, truth.frequency, res.name);
      if (!bad.empty()) {
        report.pass = false;
        report.counterexample = bad;
        return report;
      }
    }
  }
  return report;
}

VerifyReport verify_grid(const GridArray& ga, const FrequencyGrid& fg,
                         std::span<const GridRange> ranges) {
  VerifyReport report;
  Workspace ws, ws2;
  for (const GridRange& r : ranges) {
    ++report.ranges_checked;
    const ModeAnswer truth = counting_query(ga, ws2, r);
    const ModeAnswer got = fg.query(r, ws);

    std::ostringstream bad;
    if (got.frequency != truth.frequency) {
      bad << "grid range " << describe_range(ga, r) << ": frequency "
          << got.frequency << " != counting " << truth.frequency;
    } else {
      const Coord c = ga.coord_of(got.witness);
      bool inside = got.witness >= 1 && got.witness <= ga.total_size();
      for (int l = 0; inside && l < ga.dim_count(); ++l)
        inside = c[l] >= r.lo[l] && c[l] <= r.hi[l];
      if (!inside || ga.value_at(c) != got.element) {
        bad << "grid range " << describe_range(ga, r) << ": witness "
            << got.witness << " does not hold element " << got.element;
      }
    }
    if (!bad.str().empty()) {
      report.pass = false;
      report.counterexample = bad.str();
      return report;
    }
  }
  return report;
}

std::vector<QueryRange> all_ranges(Index n) {
  std::vector<QueryRange> out;
  out.reserve(static_cast<std::size_t>(n) * (n + 1) / 2);
  for (Index i = 1; i <= n; ++i)
    for (Index j = i; j <= n; ++j) out.push_back({i, j});
  return out;
}

std::uint64_t count_grid_ranges(const GridArray& ga) {
  std::uint64_t total = 1;
  for (int l = 0; l < ga.dim_count(); ++l) {
    const std::uint64_t e = ga.extent(l);
    const std::uint64_t per_axis = e * (e + 1) / 2;
    if (total > UINT64_MAX / per_axis) return UINT64_MAX;  // saturate
    total *= per_axis;
  }
  return total;
}

std::vector<GridRange> all_grid_ranges(const GridArray& ga) {
  const int d = ga.dim_count();
  std::vector<GridRange> out;
  out.reserve(count_grid_ranges(ga));

  GridRange r;
  r.lo.fill(1);
  r.hi.fill(1);
  std::function<void(int)> rec = [&](int l) {
    if (l == d) {
      out.push_back(r);
      return;
    }
    for (Index lo = 1; lo <= ga.extent(l); ++lo) {
      for (Index hi = lo; hi <= ga.extent(l); ++hi) {
        r.lo[l] = lo;
        r.hi[l] = hi;
        rec(l + 1);
      }
    }
  };
  rec(0);
  return out;
}

}  // namespace rangemode
