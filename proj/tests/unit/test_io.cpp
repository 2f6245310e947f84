#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "diskres/errors.hpp"
#include "diskres/sweep.hpp"
#include "diskres/table_io.hpp"

using namespace diskres;
using namespace diskres::io;

namespace {

const char* kHeader = "m,ell,n,closed_kR,open_kR_re,open_kR_im,L,gamma,q,k_T,k_B,class,error\n";

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_SUITE("io") {
  TEST_CASE("empty table is the header line") { CHECK(emit_csv(to_table({})) == kHeader); }

  TEST_CASE("number formatting and column order") {
    Table t{{"a", "b", "c", "d"}, {{Cell(3LL), Cell(0.1), Cell(std::nan("")), Cell(std::string("x,y\nz"))}}};
    CHECK(emit_csv(t) == "a,b,c,d\n3,1.000000000000e-01,nan,x;y z\n");
    const auto j = nlohmann::json::parse(emit_json(t));
    CHECK(j.size() == 1);
    CHECK(j[0]["a"] == 3);
    CHECK(j[0]["c"].is_null());
    CHECK(j[0]["d"] == "x,y\nz");
  }

  TEST_CASE("sweep rows round-trip at emitted precision") {
    const auto rows = sweep::run_sweep_m(1, 2, 6, 3.3);
    const auto table = to_table(rows);
    const auto csv = emit_csv(table);
    CHECK(csv.rfind(kHeader, 0) == 0);
    CHECK(csv.find('\r') == std::string::npos);
    const auto back = parse_csv(csv);
    CHECK(back.columns == table.columns);
    REQUIRE(back.rows.size() == rows.size());
    CHECK(emit_csv(back) == csv);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      CHECK(std::get<long long>(back.rows[i][0]) == rows[i].m);
      const double re = std::get<double>(back.rows[i][4]);
      CHECK(std::abs(re - rows[i].open_kR_re) <= 5e-13 * rows[i].open_kR_re);
      CHECK(std::get<std::string>(back.rows[i][11]) == "below_barrier");
    }
    const auto j = nlohmann::json::parse(emit_json(table));
    REQUIRE(j.size() == rows.size());
    std::vector<std::string> keys;
    for (auto it = j[0].begin(); it != j[0].end(); ++it) keys.push_back(it.key());
    CHECK(keys.size() == table.columns.size());
    CHECK(j[0]["open_kR_re"].get<double>() == rows[0].open_kR_re);
  }

  TEST_CASE("emission re-validates rows") {
    auto row = sweep::make_row(cavity::find_resonance({3, 1}, 3.3));
    CHECK_NOTHROW(validate_row(row));
    auto bad = row;
    bad.cls = analysis::BarrierClass::above_barrier;
    CHECK_THROWS_AS(to_table({bad}), InvalidArgument);
    bad = row;
    bad.L += 0.01;
    CHECK_THROWS_AS(validate_row(bad), InvalidArgument);
    bad = row;
    bad.open_kR_im = 0.01;
    CHECK_THROWS_AS(validate_row(bad), InvalidArgument);
    bad = row;
    bad.k_B = 1.0;
    CHECK_THROWS_AS(validate_row(bad), InvalidArgument);
  }

  TEST_CASE("failed rows carry their message") {
    const auto row = sweep::failed_row({4, 2}, 3.5, "solver, failed\nbadly");
    CHECK_NOTHROW(validate_row(row));
    const auto csv = emit_csv(to_table({row}));
    CHECK(csv.find("4,2,3.500000000000e+00,nan,nan,nan,nan,nan,nan,4.000000000000e+00") != std::string::npos);
    CHECK(csv.find("solver; failed badly\n") != std::string::npos);
    CHECK(sweep::error_count({row}) == 1);
  }

  TEST_CASE("sweep argument checks") {
    CHECK_THROWS_AS(sweep::run_sweep_m(1, 2, 61, 3.3), InvalidArgument);
    CHECK_THROWS_AS(sweep::run_sweep_m(1, 5, 4, 3.3), InvalidArgument);
    CHECK_THROWS_AS(sweep::run_sweep_m(1, 2, 4, 1.0), InvalidArgument);
    CHECK_THROWS_AS(sweep::run_sweep_n(4, {1}, {3.3, 6.0, 0.06}), InvalidArgument);
    CHECK_THROWS_AS(sweep::run_sweep_n(4, {}, {}), InvalidArgument);
    CHECK_THROWS_AS(sweep::NRange({0.9, 2.0, 0.01}).values(), InvalidArgument);
    CHECK_THROWS_AS(sweep::NRange({3.0, 2.0, 0.01}).values(), InvalidArgument);
    CHECK_THROWS_AS(sweep::NRange({2.0, 3.0, 0.0}).values(), InvalidArgument);
    const auto ns = sweep::NRange{3.3, 6.0, 0.02}.values();
    CHECK(ns.size() == 136);
    CHECK(ns.back() == doctest::Approx(6.0));
  }

  TEST_CASE("sweep-m rows are ordered and deterministic") {
    const auto a = emit_csv(to_table(sweep::run_sweep_m(1, 0, 12, 2.4)));
    const auto b = emit_csv(to_table(sweep::run_sweep_m(1, 0, 12, 2.4)));
    CHECK(a == b);
    const auto t = parse_csv(a);
    for (std::size_t i = 0; i < t.rows.size(); ++i) CHECK(std::get<long long>(t.rows[i][0]) == (long long)i);
  }

  TEST_CASE("atomic file write") {
    const auto dir = std::filesystem::temp_directory_path() / "diskres_io_test";
    std::filesystem::create_directories(dir);
    const auto path = dir / "out.csv";
    write_file_atomic(path.string(), "first\n");
    write_file_atomic(path.string(), "second\n");
    CHECK(slurp(path) == "second\n");
    CHECK_FALSE(std::filesystem::exists(dir / "out.csv.tmp"));
    CHECK_THROWS_AS(write_file_atomic((dir / "missing" / "x.csv").string(), "x"), Error);
    std::filesystem::remove_all(dir);
  }

  TEST_CASE("CSV parsing rejects ragged rows") { CHECK_THROWS_AS(parse_csv("a,b\n1\n"), InvalidArgument); }
}
