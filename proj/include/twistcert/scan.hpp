#pragma once

// Batch sweep over (k, l, r) producing deterministic CSV rows.

#include "twistcert/io.hpp"

#include <algorithm>
#include <atomic>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

namespace twistcert {

struct ScanOptions {
  int k_min = 0, k_max = 0;
  int l_min = 0, l_max = 0;
  long r_max = 2;
  long precision = kDefaultPrecisionBits;
  unsigned workers = 1;
};

struct ScanRow {
  int k = 0, l = 0;  // as requested
  long p = 0, m_schubert = 0;
  long r = 0;
  std::optional<double> threshold;
  std::optional<long> r_min;
  Verdict verdict = Verdict::inconclusive;
  std::optional<double> y;
  double max_residual = 0;
  long precision_bits = 0;
  std::string note;
};

inline const char* kScanHeader = "k,l,p,m_schubert,r,threshold,r_min,verdict,y,max_residual,precision_bits,note";

inline std::string to_csv(const ScanRow& row) {
  std::string out = std::to_string(row.k) + "," + std::to_string(row.l) + "," + std::to_string(row.p) + "," +
                    std::to_string(row.m_schubert) + "," + std::to_string(row.r) + ",";
  out += (row.threshold ? format_double(*row.threshold) : "") + ",";
  out += (row.r_min ? std::to_string(*row.r_min) : "") + ",";
  out += std::string(to_string(row.verdict)) + ",";
  out += (row.y ? format_double(*row.y) : "") + ",";
  out += format_double(row.max_residual) + "," + std::to_string(row.precision_bits) + "," + row.note;
  return out;
}

/// Valid knots in the requested ranges; odd*odd pairs and unknots are skipped.
inline std::vector<std::pair<int, int>> scan_knots(const ScanOptions& opt) {
  std::vector<std::pair<int, int>> out;
  for (int k = opt.k_min; k <= opt.k_max; ++k) {
    for (int l = opt.l_min; l <= opt.l_max; ++l) {
      if ((k % 2 != 0 && l % 2 != 0) || normalize(k, l).is_trivial()) continue;
      out.emplace_back(k, l);
    }
  }
  return out;
}

inline ScanRow scan_row(int k, int l, long r, long precision) {
  const DoubleTwistKnot K = normalize(k, l);
  const TwoBridgeForm sf = schubert_form(K);
  const ThresholdReport th = threshold(K);
  const Certificate cert = certify(K, r, precision);
  ScanRow row;
  row.k = k;
  row.l = l;
  row.p = sf.p;
  row.m_schubert = sf.q;
  row.r = r;
  row.threshold = th.threshold;
  row.r_min = th.r_min;
  row.verdict = cert.verdict;
  row.y = cert.y;
  row.max_residual = cert.max_residual();
  row.precision_bits = cert.precision_bits;
  if (cert.known_non_orderable) row.note = "known_non_orderable";
  return row;
}

/// Rows ordered by (k, l, r) regardless of worker scheduling.
inline std::vector<ScanRow> run_scan(const ScanOptions& opt) {
  struct Job {
    int k, l;
    long r;
  };
  std::vector<Job> jobs;
  for (auto [k, l] : scan_knots(opt))
    for (long r = 2; r <= opt.r_max; ++r) jobs.push_back({k, l, r});
  std::vector<ScanRow> rows(jobs.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) rows[i] = scan_row(jobs[i].k, jobs[i].l, jobs[i].r, opt.precision);
    mpfr_free_cache();
  };
  const unsigned workers = std::max(1u, std::min<unsigned>(opt.workers, static_cast<unsigned>(jobs.size())));
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  return rows;
}

inline void write_scan_csv(std::ostream& os, const std::vector<ScanRow>& rows) {
  os << kScanHeader << "\n";
  for (const auto& row : rows) os << to_csv(row) << "\n";
}

}  // namespace twistcert
