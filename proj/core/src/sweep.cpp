#include "diskres/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <future>

#include "diskres/billiard.hpp"
#include "diskres/errors.hpp"

namespace diskres::sweep {
namespace {

// Fresh solve from the billiard seed; a rank mismatch falls back to
// enumerating the family.
cavity::Resonance solve_fresh(const ModeIndex& mode, double n) {
  try {
    return cavity::find_resonance(mode, n);
  } catch (const WrongBranchError&) {
    return cavity::resonance_by_rank(mode, n);
  } catch (const ConvergenceError&) {
    return cavity::resonance_by_rank(mode, n);
  }
}

struct BranchPoint {
  double n = 0.0;
  std::optional<cavity::Resonance> res;
  std::string error;
};

std::vector<BranchPoint> trace_branch(int m, int ell, const std::vector<double>& ns) {
  const ModeIndex mode{m, ell};
  std::vector<BranchPoint> out;
  out.reserve(ns.size());
  // Converged roots at the previous two grid points (history counts how
  // many are valid).
  Complex prev;
  Complex prev2;
  int history = 0;
  for (std::size_t i = 0; i < ns.size(); ++i) {
    const double n = ns[i];
    BranchPoint pt{n, std::nullopt, {}};
    try {
      if (history == 0) {
        pt.res = solve_fresh(mode, n);
      } else {
        cavity::FindOptions opts;
        opts.guess = history >= 2 ? 2.0 * prev - prev2 : prev;
        opts.verify_rank = (i % 10 == 0) || i + 1 == ns.size();
        try {
          pt.res = cavity::find_resonance(mode, n, opts);
        } catch (const WrongBranchError& e) {
          pt.error = std::string("branch-loss: ") + e.what();
          pt.res = solve_fresh(mode, n);
        }
      }
    } catch (const Error& e) {
      pt.error = e.what();
      pt.res.reset();
    }
    if (pt.res && pt.error.empty()) {
      prev2 = prev;
      prev = pt.res->kR;
      history = std::min(history + 1, 2);
    } else {
      history = 0;
    }
    out.push_back(std::move(pt));
  }
  return out;
}

std::vector<SweepRow> rows_from_branch(int m, int ell, const std::vector<BranchPoint>& pts) {
  std::vector<SweepRow> rows;
  rows.reserve(pts.size());
  for (const auto& pt : pts) {
    if (pt.res) {
      auto row = make_row(*pt.res);
      row.error = pt.error;
      rows.push_back(std::move(row));
    } else {
      rows.push_back(failed_row({m, ell}, pt.n, pt.error));
    }
  }
  return rows;
}

// Resonance at an off-grid n, seeded by interpolating two branch roots.
cavity::Resonance solve_between(int m, int ell, double n, const BranchPoint& a,
                                const BranchPoint& b) {
  const double t = (n - a.n) / (b.n - a.n);
  cavity::FindOptions opts;
  opts.guess = a.res->kR + t * (b.res->kR - a.res->kR);
  opts.verify_rank = false;
  return cavity::find_resonance({m, ell}, n, opts);
}

double lamb_at(int m, int ell, double n, const BranchPoint& a, const BranchPoint& b) {
  return analysis::lamb_shift(solve_between(m, ell, n, a, b)).L;
}

}  // namespace

SweepRow make_row(const cavity::Resonance& res) {
  SweepRow row;
  row.m = res.mode.m;
  row.ell = res.mode.ell;
  row.n = res.n;
  const auto lamb = analysis::lamb_shift(res);
  row.closed_kR = lamb.closed_kR;
  row.open_kR_re = res.kR.real();
  row.open_kR_im = res.kR.imag();
  row.L = lamb.L;
  const auto width = analysis::decay_width_and_q(res);
  row.gamma = width.gamma;
  row.q = width.q;
  const auto barrier = analysis::classify_resonance(res);
  row.k_T = barrier.k_T;
  row.k_B = barrier.k_B;
  row.cls = barrier.cls;
  return row;
}

SweepRow failed_row(const ModeIndex& mode, double n, std::string error) {
  SweepRow row;
  row.m = mode.m;
  row.ell = mode.ell;
  row.n = n;
  const double nan = std::nan("");
  row.closed_kR = row.open_kR_re = row.open_kR_im = row.L = row.gamma = row.q = nan;
  row.k_T = double(mode.m);
  row.k_B = n > 0 ? double(mode.m) / n : nan;
  row.error = error.empty() ? "unknown failure" : std::move(error);
  return row;
}

void NRange::validate() const {
  if (!(lo > 1.0) || !(hi >= lo)) throw InvalidArgument("n range needs 1 < lo <= hi");
  if (!(step > 0.0)) throw InvalidArgument("n step must be positive");
}

std::vector<double> NRange::values() const {
  validate();
  const long count = std::lround(std::floor((hi - lo) / step + 1e-9)) + 1;
  std::vector<double> ns;
  ns.reserve(std::size_t(count));
  for (long i = 0; i < count; ++i) ns.push_back(lo + double(i) * step);
  return ns;
}

std::vector<SweepRow> run_sweep_m(int ell, int m_lo, int m_hi, double n) {
  if (m_lo < 0 || m_hi < m_lo || m_hi > 60) throw InvalidArgument("m range must satisfy 0 <= lo <= hi <= 60");
  if (ell < 1) throw InvalidArgument("ell must be >= 1");
  if (!(n > 1.0)) throw InvalidArgument("sweep needs n > 1");
  std::vector<std::future<SweepRow>> jobs;
  for (int m = m_lo; m <= m_hi; ++m) {
    jobs.push_back(std::async(std::launch::async, [m, ell, n] {
      try {
        return make_row(solve_fresh({m, ell}, n));
      } catch (const Error& e) {
        return failed_row({m, ell}, n, e.what());
      }
    }));
  }
  std::vector<SweepRow> rows;
  for (auto& j : jobs) rows.push_back(j.get());
  return rows;
}

std::vector<SweepRow> run_sweep_n(int m, const std::vector<int>& ells, const NRange& range) {
  if (m < 0 || m > 60) throw InvalidArgument("m must be in [0, 60]");
  if (ells.empty()) throw InvalidArgument("at least one ell is required");
  range.validate();
  if (range.step > kMaxThresholdStep) throw InvalidArgument("n step must be <= 0.05");
  const auto ns = range.values();
  std::vector<std::future<std::vector<SweepRow>>> jobs;
  for (int ell : ells) {
    if (ell < 1) throw InvalidArgument("ell must be >= 1");
    jobs.push_back(std::async(std::launch::async, [m, ell, &ns] {
      return rows_from_branch(m, ell, trace_branch(m, ell, ns));
    }));
  }
  std::vector<SweepRow> rows;
  for (auto& j : jobs) {
    auto part = j.get();
    rows.insert(rows.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return rows;
}

ThresholdResult find_threshold(int m, int ell, const NRange& range) {
  range.validate();
  if (range.step > kMaxThresholdStep) throw InvalidArgument("n step must be <= 0.05");
  const auto ns = range.values();
  if (ns.size() < 4) throw InvalidArgument("threshold search needs at least 4 sweep points");
  const auto branch = trace_branch(m, ell, ns);
  for (const auto& pt : branch) {
    if (!pt.res) throw ConvergenceError("branch failed at n=" + std::to_string(pt.n) + ": " + pt.error);
  }
  std::vector<double> lamb(branch.size());
  for (std::size_t i = 0; i < branch.size(); ++i) lamb[i] = analysis::lamb_shift(*branch[i].res).L;

  // Centered differences D_i ~ dL/dn at interior grid points.
  std::optional<std::size_t> turn;
  for (std::size_t i = 1; i + 2 < branch.size(); ++i) {
    const double d0 = lamb[i + 1] - lamb[i - 1];
    const double d1 = lamb[i + 2] - lamb[i];
    if (d0 > 0 && d1 <= 0) {
      turn = i;
      break;
    }
  }
  if (!turn) {
    throw NoThresholdError("dL/dn does not change from positive to negative for m=" +
                           std::to_string(m) + ", ell=" + std::to_string(ell));
  }

  const double h = range.step;
  const std::size_t i = *turn;
  auto slope = [&](double n) {
    // Bracketing branch points for seeding n - h and n + h.
    auto seg = [&](double x) {
      std::size_t k = std::min<std::size_t>(branch.size() - 2,
                                            std::size_t(std::max(0.0, std::floor((x - ns[0]) / h))));
      return k;
    };
    const std::size_t kl = seg(n - h);
    const std::size_t kr = seg(n + h);
    return lamb_at(m, ell, n + h, branch[kr], branch[kr + 1]) -
           lamb_at(m, ell, n - h, branch[kl], branch[kl + 1]);
  };
  double a = ns[i];
  double b = ns[i + 1];
  while (b - a > 0.002) {
    const double mid = 0.5 * (a + b);
    if (slope(mid) > 0) {
      a = mid;
    } else {
      b = mid;
    }
  }
  ThresholdResult result{m, ell, 0.5 * (a + b), std::nullopt};

  for (std::size_t k = 0; k + 1 < branch.size(); ++k) {
    const double f0 = branch[k].res->kR.real() - m;
    const double f1 = branch[k + 1].res->kR.real() - m;
    if ((f0 < 0) != (f1 < 0)) {
      double lo = branch[k].n;
      double hi = branch[k + 1].n;
      while (hi - lo > 1e-5) {
        const double mid = 0.5 * (lo + hi);
        const double f = solve_between(m, ell, mid, branch[k], branch[k + 1]).kR.real() - m;
        if ((f < 0) == (f0 < 0)) {
          lo = mid;
        } else {
          hi = mid;
        }
      }
      result.n_cross = 0.5 * (lo + hi);
      break;
    }
  }
  return result;
}

int error_count(const std::vector<SweepRow>& rows) {
  return int(std::count_if(rows.begin(), rows.end(), [](const SweepRow& r) { return !r.ok(); }));
}

}  // namespace diskres::sweep
