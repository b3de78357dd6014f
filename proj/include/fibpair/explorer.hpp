#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fibpair/bigint.hpp"
#include "fibpair/solver.hpp"

namespace fibpair {

/// One row of a Gamma(F_n^i, F_{n+1}^j) table.
struct ScanRecord {
  FibIndex n;
  unsigned long i;
  unsigned long j;
  BigInt a;
  BigInt b;
  BigInt x;
  BigInt y;
  Gamma gamma;

  friend bool operator==(const ScanRecord&, const ScanRecord&) = default;
};

/// True when a x + b y + (gamma - 1) = (a - 1)(b - 1) / 2 with x, y >= 0.
bool satisfies_equation(const ScanRecord& record);

/// Calls `sink` once per n in [n_from, n_to], in order. Only the current
/// (F_n, F_{n+1}) pair is held, so memory does not grow with the range.
/// Requires 2 <= n_from <= n_to and i, j >= 1.
void scan_each(unsigned long i, unsigned long j, FibIndex n_from, FibIndex n_to,
               const std::function<void(const ScanRecord&)>& sink);

std::vector<ScanRecord> scan(unsigned long i, unsigned long j, FibIndex n_from, FibIndex n_to);

enum class PeriodStatus { found, none_found };

struct PeriodReport {
  PeriodStatus status;
  FibIndex offset;  // index where the periodic tail starts
  std::size_t period;
  std::vector<Gamma> pattern;
  FibIndex verified_upto;  // index of the last value examined

  friend bool operator==(const PeriodReport&, const PeriodReport&) = default;
};

inline constexpr std::size_t kMinPeriodSequence = 9;
inline constexpr std::size_t kMinRepetitions = 3;

/// Smallest (offset, period), compared lexicographically, such that the tail
/// from offset is exactly periodic and holds at least three full periods.
/// `gammas[0]` belongs to index `first_index`; `offset_hint` forbids offsets
/// before it. Sequences shorter than 9 are rejected.
PeriodReport detect_period(std::span<const Gamma> gammas, FibIndex first_index,
                           std::optional<FibIndex> offset_hint = std::nullopt);

struct Difference {
  FibIndex n;
  BigInt value;  // y_{n+1} - x_n

  friend bool operator==(const Difference&, const Difference&) = default;
};

/// Cross-differences y_{n+1} - x_n over consecutive records.
/// Records must share (i, j) and have consecutive n.
std::vector<Difference> difference_probe(std::span<const ScanRecord> records);

enum class TableFormat { csv, json };

/// Streaming writer for the `n,a,b,x,y,gamma` schema. Every row is
/// re-substituted into its equation before it is written.
class TableWriter {
 public:
  TableWriter(std::ostream& out, TableFormat format);
  TableWriter(const TableWriter&) = delete;
  TableWriter& operator=(const TableWriter&) = delete;
  ~TableWriter();

  void write(const ScanRecord& record);
  /// Closes the JSON array. Called by the destructor if needed.
  void finish();

 private:
  std::ostream& out_;
  TableFormat format_;
  std::size_t rows_ = 0;
  bool finished_ = false;
};

void emit_table(std::span<const ScanRecord> records, TableFormat format, std::ostream& out);
std::string emit_table(std::span<const ScanRecord> records, TableFormat format);

}  // namespace fibpair
