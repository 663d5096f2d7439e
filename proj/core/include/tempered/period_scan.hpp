#pragma once

#include "tempered/exact_rational.hpp"
#include "tempered/golden_number.hpp"
#include "tempered/polynomial.hpp"

#include <string>
#include <vector>

namespace tempered {

// Closure defect of the granularity-2 fractal mold generated by {1, 1 + p}.
struct ScanPoint {
  ExactRational p;
  ExactRational defect;       // max distance from an in-range pairwise sum to the nearest element
  ExactRational min_spacing;  // smallest consecutive spacing of the generated prefix
  bool survives = false;      // 2 * defect < min_spacing
};

struct CertificateCheck {
  std::string claim;
  bool holds = false;
};

struct PeriodScanResult {
  ExactRational grid_step;
  std::size_t prefix = 0;
  std::size_t generated_elements = 0;
  std::vector<ScanPoint> points;
  std::vector<ExactRational> survivors;
  // Survivors split by the nearer exactly closed case: grid points next to
  // the excluded bisectional p = 1/2 approximate a closed mold too.
  std::vector<ExactRational> bisectional_survivors;
  std::vector<ExactRational> golden_survivors;
  std::vector<CertificateCheck> certificate;

  bool certified() const;
};

// Closure defect for one cut proportion p in (0, 1).
ScanPoint scan_period_point(const ExactRational& p, std::size_t prefix);

// Scans p over the grid step, 2 step, ... in (0, 1) minus {1/2} and verifies
// exactly the algebraic certificate singling out p = tau.
PeriodScanResult period_uniqueness_scan(const ExactRational& grid_step, std::size_t prefix,
                                        unsigned threads = 1);

// The exact part only: candidate equations from the symbolic third period,
// their factorizations, and the admissible roots in (1/2, 1).
std::vector<CertificateCheck> golden_period_certificate();

}  // namespace tempered
