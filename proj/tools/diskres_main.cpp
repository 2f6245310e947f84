// diskres: command-line front end for the dielectric disk resonance toolkit.
//
// Exit status: 0 on success, 1 when any output row carries an error,
// 2 for usage errors, 3 when a computation aborts.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "diskres/analysis.hpp"
#include "diskres/billiard.hpp"
#include "diskres/cavity.hpp"
#include "diskres/diagnostics.hpp"
#include "diskres/errors.hpp"
#include "diskres/fieldgrid.hpp"
#include "diskres/husimi.hpp"
#include "diskres/sweep.hpp"
#include "diskres/table_io.hpp"

namespace {

using diskres::io::Cell;
using diskres::io::Table;

std::vector<double> split_numbers(const std::string& text, std::size_t expected,
                                  const char* what) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ':')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(part, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != part.size()) {
      throw CLI::ValidationError(what, "cannot parse '" + part + "'");
    }
    out.push_back(v);
  }
  if (out.size() != expected) throw CLI::ValidationError(what, "expected " + std::to_string(expected) + " fields");
  return out;
}

struct Output {
  std::string path;
  std::string format = "csv";

  void add_to(CLI::App* app, bool tabular = true) {
    app->add_option("--out", path, "Output file (stdout when omitted)");
    if (tabular) {
      app->add_option("--format", format, "Table format")->check(CLI::IsMember({"csv", "json"}));
    }
  }

  void emit(const std::string& bytes) const {
    if (path.empty()) {
      std::fwrite(bytes.data(), 1, bytes.size(), stdout);
    } else {
      diskres::io::write_file_atomic(path, bytes);
    }
  }

  void emit(const Table& table) const {
    emit(format == "json" ? diskres::io::emit_json(table) : diskres::io::emit_csv(table));
  }
};

int table_status(const Table& t) {
  auto it = std::find(t.columns.begin(), t.columns.end(), "error");
  if (it == t.columns.end()) return 0;
  const auto col = std::size_t(it - t.columns.begin());
  for (const auto& row : t.rows) {
    if (!std::get<std::string>(row[col]).empty()) return 1;
  }
  return 0;
}

struct ModeArgs {
  int m = 2;
  int ell = 1;
  double n = 3.3;

  void add_to(CLI::App* app) {
    app->add_option("--m", m, "Angular quantum number")->check(CLI::Range(0, 60));
    app->add_option("--ell", ell, "Radial quantum number")->check(CLI::Range(1, 40));
    app->add_option("--n", n, "Refractive index");
  }
  diskres::ModeIndex mode() const { return {m, ell}; }
};

diskres::fieldgrid::GridSpec parse_grid(const std::string& text) {
  if (text.empty()) return {};
  const auto v = split_numbers(text, 2, "--grid");
  diskres::fieldgrid::GridSpec spec{v[0], int(v[1])};
  if (double(spec.samples_per_axis) != v[1]) throw CLI::ValidationError("--grid", "N must be an integer");
  return spec;
}

diskres::sweep::NRange parse_n_range(const std::string& text) {
  diskres::sweep::NRange r;
  if (text.empty()) return r;
  const auto v = split_numbers(text, 3, "--n-range");
  r.lo = v[0];
  r.hi = v[1];
  r.step = v[2];
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Resonances of a circular dielectric microcavity"};
  app.require_subcommand(1);
  int status = 0;

  // modes
  ModeArgs modes_args;
  bool want_closed = false;
  bool want_open = false;
  Output modes_out;
  auto* modes = app.add_subcommand("modes", "Closed billiard eigenvalue and/or open resonance");
  modes_args.add_to(modes);
  modes->add_flag("--closed", want_closed, "Report the closed billiard eigenvalue");
  modes->add_flag("--open", want_open, "Report the open-cavity resonance");
  modes_out.add_to(modes);
  modes->callback([&] {
    if (!want_closed && !want_open) want_closed = want_open = true;
    Table t{{"m", "ell", "n", "kind", "kR_re", "kR_im", "residual", "error"}, {}};
    const long long m = modes_args.m;
    const long long ell = modes_args.ell;
    const double nan = std::nan("");
    if (want_closed) {
      try {
        const auto ev = diskres::billiard::billiard_eigenvalue(modes_args.mode(), modes_args.n);
        t.rows.push_back({m, ell, modes_args.n, std::string("closed"), ev.kR, 0.0, 0.0, std::string()});
      } catch (const diskres::Error& e) {
        t.rows.push_back({m, ell, modes_args.n, std::string("closed"), nan, nan, nan, std::string(e.what())});
      }
    }
    if (want_open) {
      try {
        const auto r = diskres::cavity::find_resonance(modes_args.mode(), modes_args.n);
        t.rows.push_back({m, ell, modes_args.n, std::string("open"), r.kR.real(), r.kR.imag(), r.residual, std::string()});
      } catch (const diskres::Error& e) {
        t.rows.push_back({m, ell, modes_args.n, std::string("open"), nan, nan, nan, std::string(e.what())});
      }
    }
    modes_out.emit(t);
    status = table_status(t);
  });

  // lamb
  ModeArgs lamb_args;
  Output lamb_out;
  auto* lamb = app.add_subcommand("lamb", "Lamb shift, width and barrier class of one mode");
  lamb_args.add_to(lamb);
  lamb_out.add_to(lamb);
  lamb->callback([&] {
    std::vector<diskres::sweep::SweepRow> rows;
    try {
      rows.push_back(diskres::sweep::make_row(diskres::cavity::find_resonance(lamb_args.mode(), lamb_args.n)));
    } catch (const diskres::Error& e) {
      rows.push_back(diskres::sweep::failed_row(lamb_args.mode(), lamb_args.n, e.what()));
    }
    const auto t = diskres::io::to_table(rows);
    lamb_out.emit(t);
    status = table_status(t);
  });

  // classify
  ModeArgs cls_args;
  Output cls_out;
  auto* classify = app.add_subcommand("classify", "Effective-potential classification of one mode");
  cls_args.add_to(classify);
  cls_out.add_to(classify);
  classify->callback([&] {
    Table t{{"m", "ell", "n", "open_kR_re", "k_T", "k_B", "v_bottom", "class", "error"}, {}};
    const double nan = std::nan("");
    try {
      const auto res = diskres::cavity::find_resonance(cls_args.mode(), cls_args.n);
      const auto b = diskres::analysis::classify_resonance(res);
      t.rows.push_back({(long long)cls_args.m, (long long)cls_args.ell, cls_args.n, res.kR.real(), b.k_T,
                        b.k_B, b.v_bottom, std::string(diskres::analysis::to_string(b.cls)), std::string()});
    } catch (const diskres::Error& e) {
      t.rows.push_back({(long long)cls_args.m, (long long)cls_args.ell, cls_args.n, nan, nan, nan, nan,
                        std::string(), std::string(e.what())});
    }
    cls_out.emit(t);
    status = table_status(t);
  });

  // sweep-m
  int sm_ell = 1;
  double sm_n = 3.3;
  std::string sm_range = "2:10";
  Output sm_out;
  auto* sweep_m = app.add_subcommand("sweep-m", "One resonance per m at fixed ell and n");
  sweep_m->add_option("--ell", sm_ell, "Radial quantum number")->check(CLI::Range(1, 40));
  sweep_m->add_option("--n", sm_n, "Refractive index");
  sweep_m->add_option("--m-range", sm_range, "LO:HI (inclusive)");
  sm_out.add_to(sweep_m);
  sweep_m->callback([&] {
    const auto v = split_numbers(sm_range, 2, "--m-range");
    const auto rows = diskres::sweep::run_sweep_m(sm_ell, int(v[0]), int(v[1]), sm_n);
    const auto t = diskres::io::to_table(rows);
    sm_out.emit(t);
    status = table_status(t);
  });

  // sweep-n
  int sn_m = 4;
  std::vector<int> sn_ells{1};
  std::string sn_range;
  Output sn_out;
  auto* sweep_n = app.add_subcommand("sweep-n", "Continuation along n for fixed m and a set of ell");
  sweep_n->add_option("--m", sn_m, "Angular quantum number")->check(CLI::Range(0, 60));
  sweep_n->add_option("--ell", sn_ells, "Radial quantum numbers (repeat or comma separated)")
      ->delimiter(',')
      ->check(CLI::Range(1, 40));
  sweep_n->add_option("--n-range", sn_range, "LO:HI:STEP (default 3.3:6.0:0.02)");
  sn_out.add_to(sweep_n);
  sweep_n->callback([&] {
    const auto rows = diskres::sweep::run_sweep_n(sn_m, sn_ells, parse_n_range(sn_range));
    const auto t = diskres::io::to_table(rows);
    sn_out.emit(t);
    status = table_status(t);
  });

  // threshold
  int th_m = 4;
  std::vector<int> th_ells{3, 4, 5};
  std::string th_range;
  Output th_out;
  auto* threshold = app.add_subcommand("threshold", "n where dL/dn turns from positive to negative");
  threshold->add_option("--m", th_m, "Angular quantum number")->check(CLI::Range(0, 60));
  threshold->add_option("--ell", th_ells, "Radial quantum numbers (repeat or comma separated)")
      ->delimiter(',')
      ->check(CLI::Range(1, 40));
  threshold->add_option("--n-range", th_range, "LO:HI:STEP (default 3.3:6.0:0.02)");
  th_out.add_to(threshold);
  threshold->callback([&] {
    const auto range = parse_n_range(th_range);
    Table t{{"m", "ell", "T", "n_cross", "error"}, {}};
    const double nan = std::nan("");
    for (int ell : th_ells) {
      try {
        const auto r = diskres::sweep::find_threshold(th_m, ell, range);
        t.rows.push_back({(long long)th_m, (long long)ell, r.T, r.n_cross.value_or(nan), std::string()});
      } catch (const diskres::InvalidArgument&) {
        throw;
      } catch (const diskres::Error& e) {
        t.rows.push_back({(long long)th_m, (long long)ell, nan, nan, std::string(e.what())});
      }
    }
    th_out.emit(t);
    status = table_status(t);
  });

  // field
  ModeArgs field_args;
  std::string field_kind = "full";
  std::string field_grid;
  int field_depth = 8;
  std::string field_format = "pgm";
  std::string field_path;
  auto* field = app.add_subcommand("field", "Intensity image of a mode");
  field_args.add_to(field);
  field->add_option("--kind", field_kind, "closed, interior, tail or full")
      ->check(CLI::IsMember({"closed", "interior", "tail", "full"}));
  field->add_option("--grid", field_grid, "HW:N window half width and samples per axis (default 1.5:512)");
  field->add_option("--depth", field_depth, "PGM bits per sample")->check(CLI::IsMember({8, 16}));
  field->add_option("--format", field_format, "pgm or csv")->check(CLI::IsMember({"pgm", "csv"}));
  field->add_option("--out", field_path, "Output file")->required();
  field->callback([&] {
    const auto spec = parse_grid(field_grid);
    diskres::fieldgrid::FieldGrid grid;
    if (field_kind == "closed") {
      grid = diskres::billiard::normal_mode_field(field_args.mode(), field_args.n, spec);
    } else {
      using diskres::fieldgrid::RadialKind;
      const auto res = diskres::cavity::find_resonance(field_args.mode(), field_args.n);
      const RadialKind kind = field_kind == "interior" ? RadialKind::interior_j
                              : field_kind == "tail"   ? RadialKind::tail_h
                                                       : RadialKind::full;
      grid = diskres::fieldgrid::sample_radial_mode(kind, field_args.mode(), field_args.n, res.kR, spec);
    }
    const std::string bytes = field_format == "pgm" ? diskres::fieldgrid::write_pgm(grid, field_depth)
                                                    : diskres::fieldgrid::write_csv_matrix(grid);
    diskres::io::write_file_atomic(field_path, bytes);
  });

  // husimi
  ModeArgs hus_args;
  int hus_ns = 256;
  int hus_np = 256;
  int hus_samples = 0;
  std::string hus_path;
  auto* husimi = app.add_subcommand("husimi", "Boundary Husimi map (CSV matrix plus JSON sidecar)");
  hus_args.add_to(husimi);
  husimi->add_option("--ns", hus_ns, "Arc-length samples")->check(CLI::PositiveNumber);
  husimi->add_option("--np", hus_np, "Momentum samples")->check(CLI::Range(2, 1 << 20));
  husimi->add_option("--samples", hus_samples, "Boundary trace samples (default: 4 * ns, at least the minimum)");
  husimi->add_option("--out", hus_path, "Output CSV; the sidecar is written to OUT.json")->required();
  husimi->callback([&] {
    const auto res = diskres::cavity::find_resonance(hus_args.mode(), hus_args.n);
    const int need = diskres::husimi::min_boundary_samples(res.n, res.kR.real());
    const int samples = hus_samples > 0 ? hus_samples : std::max(4 * hus_ns, need);
    const auto psi = diskres::husimi::boundary_trace(res, samples);
    const auto map = diskres::husimi::boundary_husimi(psi, res.n, res.kR.real(), {hus_ns, hus_np});
    nlohmann::ordered_json side;
    side["m"] = res.mode.m;
    side["ell"] = res.mode.ell;
    side["n"] = res.n;
    side["kR_re"] = res.kR.real();
    side["kR_im"] = res.kR.imag();
    side["p_crit"] = map.p_crit;
    side["ridge_p"] = diskres::husimi::ridge_momentum(map);
    side["ns"] = map.ns();
    side["np"] = map.np();
    side["s_range"] = {0.0, map.s_grid.back()};
    side["p_range_top_to_bottom"] = {1.0, -1.0};
    side["boundary_samples"] = samples;
    diskres::io::write_file_atomic(hus_path, diskres::husimi::write_csv_matrix(map));
    diskres::io::write_file_atomic(hus_path + ".json", side.dump(2) + "\n");
  });

  // specfun-check (diagnostic, not listed in help)
  Output sf_out;
  auto* sf = app.add_subcommand("specfun-check", "Special-function identity residuals");
  sf->group("");
  sf_out.add_to(sf, false);
  sf->callback([&] { sf_out.emit(diskres::diagnostics::residuals_csv(diskres::diagnostics::specfun_residuals())); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const diskres::GridError& e) {
    std::cerr << "diskres: " << e.what() << "\n";
    return 2;
  } catch (const diskres::InvalidArgument& e) {
    std::cerr << "diskres: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "diskres: " << e.what() << "\n";
    return 3;
  }
  return status;
}
