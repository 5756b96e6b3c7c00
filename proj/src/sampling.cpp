#include "jumpdet/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "jumpdet/errors.hpp"

namespace jumpdet {

namespace {

// Extremum of e on [a, b] (max when `maximize`), by golden-section search.
double golden_extremum(const Expression& e, double a, double b, bool maximize) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  const auto score = [&](double x) { return maximize ? e.evaluate(x) : -e.evaluate(x); };
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = score(c);
  double fd = score(d);
  for (int it = 0; it < 200 && (b - a) > 1e-14 * std::max(1.0, std::fabs(a) + std::fabs(b)); ++it) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = score(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = score(d);
    }
  }
  return 0.5 * (a + b);
}

}  // namespace

SampleSequence sample_for_variation(const PiecewiseFunction& f, std::size_t density) {
  if (density < 2) throw ArgumentError("sampling density must be >= 2");
  const Interval dom = f.domain();
  const auto& bps = f.breakpoints();
  std::vector<double> out;

  for (std::size_t p = 0; p < f.pieces().size(); ++p) {
    const Interval iv = f.piece_interval(p);
    const Expression& e = f.pieces()[p];
    // Grid points strictly inside this piece.
    std::vector<double> xs;
    const double h = dom.length() / static_cast<double>(density);
    for (std::size_t i = 0; i <= density; ++i) {
      const double x = i == density ? dom.hi : dom.lo + h * static_cast<double>(i);
      if (x > iv.lo && x < iv.hi) xs.push_back(x);
    }
    // Extrema between consecutive scan points (including the piece ends).
    std::vector<double> scan{iv.lo};
    scan.insert(scan.end(), xs.begin(), xs.end());
    scan.push_back(iv.hi);
    std::vector<double> vals(scan.size());
    vals.front() = e.limit(iv.lo, +1);
    vals.back() = e.limit(iv.hi, -1);
    for (std::size_t i = 1; i + 1 < scan.size(); ++i) vals[i] = e.evaluate(scan[i]);
    std::vector<double> extra;
    for (std::size_t i = 1; i + 1 < scan.size(); ++i) {
      const double dl = vals[i] - vals[i - 1];
      const double dr = vals[i + 1] - vals[i];
      if (dl > 0 && dr < 0) extra.push_back(golden_extremum(e, scan[i - 1], scan[i + 1], true));
      if (dl < 0 && dr > 0) extra.push_back(golden_extremum(e, scan[i - 1], scan[i + 1], false));
    }
    std::vector<double> interior = xs;
    for (double x : extra) {
      if (x > iv.lo && x < iv.hi) interior.push_back(x);
    }
    std::sort(interior.begin(), interior.end());
    interior.erase(std::unique(interior.begin(), interior.end()), interior.end());

    // Left end: the domain end or the right limit at the breakpoint.
    out.push_back(vals.front());
    for (double x : interior) out.push_back(e.evaluate(x));
    out.push_back(vals.back());
  }
  (void)bps;
  return SampleSequence(std::move(out));
}

}  // namespace jumpdet
