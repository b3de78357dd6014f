#include "fibpair/explorer.hpp"

#include <ostream>
#include <sstream>

#include "fibpair/error.hpp"
#include "fibpair/fibonacci.hpp"

namespace fibpair {

bool satisfies_equation(const ScanRecord& r) {
  if (r.x < 0 || r.y < 0) {
    return false;
  }
  const BigInt doubled = (r.a - 1) * (r.b - 1);
  return 2 * (r.a * r.x + r.b * r.y + (to_int(r.gamma) - 1)) == doubled;
}

void scan_each(unsigned long i, unsigned long j, FibIndex n_from, FibIndex n_to,
               const std::function<void(const ScanRecord&)>& sink) {
  if (i < 1 || j < 1) {
    throw DomainError("scan exponents must be >= 1");
  }
  if (n_from < 2 || n_from > n_to) {
    throw DomainError("scan requires 2 <= from <= to");
  }
  auto [cur, next] = fib_pair(n_from);
  for (FibIndex n = n_from;; ++n) {
    CoprimePair pair(pow(cur, i), pow(next, j));
    PairSolution s = solve_pair(pair);
    sink(ScanRecord{n, i, j, pair.a(), pair.b(), std::move(s.x), std::move(s.y), s.gamma});
    if (n == n_to) {
      break;
    }
    cur += next;
    std::swap(cur, next);
  }
}

std::vector<ScanRecord> scan(unsigned long i, unsigned long j, FibIndex n_from, FibIndex n_to) {
  std::vector<ScanRecord> records;
  if (n_to >= n_from) {
    records.reserve(n_to - n_from + 1);
  }
  scan_each(i, j, n_from, n_to, [&](const ScanRecord& r) { records.push_back(r); });
  return records;
}

PeriodReport detect_period(std::span<const Gamma> gammas, FibIndex first_index,
                           std::optional<FibIndex> offset_hint) {
  const std::size_t len = gammas.size();
  if (len < kMinPeriodSequence) {
    throw DomainError("detect_period needs at least " + std::to_string(kMinPeriodSequence) +
                      " values, got " + std::to_string(len));
  }
  const FibIndex last_index = first_index + len - 1;
  std::size_t start = 0;
  if (offset_hint && *offset_hint > first_index) {
    start = static_cast<std::size_t>(*offset_hint - first_index);
  }

  for (std::size_t offset = start; offset < len; ++offset) {
    const std::size_t tail = len - offset;
    for (std::size_t period = 1; period * kMinRepetitions <= tail; ++period) {
      bool periodic = true;
      for (std::size_t t = offset; t + period < len; ++t) {
        if (gammas[t] != gammas[t + period]) {
          periodic = false;
          break;
        }
      }
      if (periodic) {
        std::vector<Gamma> pattern(gammas.begin() + static_cast<std::ptrdiff_t>(offset),
                                   gammas.begin() + static_cast<std::ptrdiff_t>(offset + period));
        return {PeriodStatus::found, first_index + offset, period, std::move(pattern),
                last_index};
      }
    }
  }
  return {PeriodStatus::none_found, first_index, 0, {}, last_index};
}

std::vector<Difference> difference_probe(std::span<const ScanRecord> records) {
  std::vector<Difference> out;
  for (std::size_t k = 1; k < records.size(); ++k) {
    const ScanRecord& prev = records[k - 1];
    const ScanRecord& cur = records[k];
    if (cur.n != prev.n + 1 || cur.i != prev.i || cur.j != prev.j) {
      throw DomainError("difference_probe needs contiguous records of one (i, j) family; break at n=" +
                        std::to_string(cur.n));
    }
    out.push_back({prev.n, cur.y - prev.x});
  }
  return out;
}

TableWriter::TableWriter(std::ostream& out, TableFormat format) : out_(out), format_(format) {
  if (format_ == TableFormat::csv) {
    out_ << "n,a,b,x,y,gamma\n";
  } else {
    out_ << '[';
  }
}

TableWriter::~TableWriter() {
  if (!finished_) {
    finish();
  }
}

void TableWriter::write(const ScanRecord& r) {
  if (!satisfies_equation(r)) {
    throw ContradictionError("record n=" + std::to_string(r.n) +
                             " does not satisfy its defining equation");
  }
  if (format_ == TableFormat::csv) {
    out_ << r.n << ',' << r.a << ',' << r.b << ',' << r.x << ',' << r.y << ','
         << to_int(r.gamma) << '\n';
  } else {
    out_ << (rows_ == 0 ? "\n" : ",\n") << "{\"n\":" << r.n << ",\"a\":" << r.a
         << ",\"b\":" << r.b << ",\"x\":" << r.x << ",\"y\":" << r.y
         << ",\"gamma\":" << to_int(r.gamma) << '}';
  }
  ++rows_;
}

void TableWriter::finish() {
  if (finished_) {
    return;
  }
  finished_ = true;
  if (format_ == TableFormat::json) {
    out_ << (rows_ == 0 ? "]\n" : "\n]\n");
  }
  out_.flush();
}

void emit_table(std::span<const ScanRecord> records, TableFormat format, std::ostream& out) {
  TableWriter writer(out, format);
  for (const ScanRecord& r : records) {
    writer.write(r);
  }
  writer.finish();
}

std::string emit_table(std::span<const ScanRecord> records, TableFormat format) {
  std::ostringstream out;
  emit_table(records, format, out);
  return out.str();
}

}  // namespace fibpair
