#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "zetahess/geomanalysis.hpp"
#include "zetahess/symbolengine.hpp"
#include "zetahess_cli/report.hpp"

namespace zetahess::cli {

struct VerifyOptions {
  std::vector<OperatorKind> operators{OperatorKind::Bochner, OperatorKind::DeRham};
  int n_min = 2;
  int n_max = 6;
  int trials = 5;
  bool general_h = true;
};

/// direct = grouped = theorem1 for every (op, n, p, trial).
VerificationReport verify_theorem1(const VerifyOptions& opt, std::uint64_t seed, int jobs);

/// Subset-sum identities, gauge kernel, torsion sums and the projector
/// inequality survey.
VerificationReport identities(int n_max, std::uint64_t seed, int jobs);

/// Agreeing and total counts of brute force vs closed form over every factor
/// pattern of length <= 4 and every coincidence pattern of the fixed indices.
struct PatternSweep {
  std::size_t agreeing = 0;
  std::size_t total = 0;
};
PatternSweep sweep_patterns(int n, int p);

std::string ftable(OperatorKind op, int n, Format format);

ScanOperator parse_scan_operator(const std::string& name);
std::string classify(ScanOperator op, int n, int p, const Rational& s, int k, Format format);

/// Text/JSON rendering of the corollary scan and whether it matches the
/// expected conclusions.
struct ScanOutput {
  std::string text;
  bool matches = false;
};
ScanOutput scan(int n_max, Format format);

}  // namespace zetahess::cli
