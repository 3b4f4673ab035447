#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "zetahess/exactalg.hpp"

namespace zetahess::cli {

/// Bad flag values; mapped to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Format { Text, Json, Csv };
Format parse_format(const std::string& name);

struct CaseKey {
  std::string op;
  int n = 0;
  int p = 0;
  int trial = 0;
  std::uint64_t seed = 0;
  auto operator<=>(const CaseKey&) const = default;
};

enum class Status { Pass, Fail, Reported };
std::string to_string(Status s);

struct ReportRow {
  CaseKey key;
  std::string check;
  Status status = Status::Fail;
  std::string lhs;
  std::string rhs;
  std::string residual;
};

/// Pass iff lhs - rhs vanishes.
ReportRow equality_row(CaseKey key, std::string check, const SPoly& lhs, const SPoly& rhs);
/// Nonzero residuals become `Reported` instead of `Fail`.
ReportRow reported_row(CaseKey key, std::string check, const SPoly& lhs, const SPoly& rhs);

struct VerificationReport {
  std::string command;
  std::uint64_t seed = 0;
  std::vector<ReportRow> rows;

  std::size_t count(Status s) const;
  int exit_code() const { return count(Status::Fail) == 0 ? 0 : 1; }
  /// Stable sort by CaseKey, keeping check order within a case.
  void sort();
};

std::string render(const VerificationReport& report, Format format);

}  // namespace zetahess::cli
