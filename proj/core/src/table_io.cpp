#include "diskres/table_io.hpp"

#include <cerrno>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "diskres/errors.hpp"

namespace diskres::io {
namespace {

std::string sanitize(std::string s) {
  for (char& c : s) {
    if (c == ',') c = ';';
    if (c == '\n' || c == '\r') c = ' ';
  }
  return s;
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12e", v);
  return buf;
}

Cell parse_cell(const std::string& s) {
  if (s == "nan") return std::nan("");
  long long i = 0;
  auto [pi, ei] = std::from_chars(s.data(), s.data() + s.size(), i);
  if (ei == std::errc() && pi == s.data() + s.size() && !s.empty()) return i;
  double d = 0.0;
  auto [pd, ed] = std::from_chars(s.data(), s.data() + s.size(), d);
  if (ed == std::errc() && pd == s.data() + s.size() && !s.empty()) return d;
  return s;
}

}  // namespace

const std::vector<std::string>& sweep_columns() {
  static const std::vector<std::string> cols = {
      "m", "ell", "n", "closed_kR", "open_kR_re", "open_kR_im", "L",
      "gamma", "q", "k_T", "k_B", "class", "error"};
  return cols;
}

void validate_row(const sweep::SweepRow& row) {
  if (!row.ok()) return;
  auto fail = [&](const std::string& what) {
    throw InvalidArgument("row (m=" + std::to_string(row.m) + ", ell=" + std::to_string(row.ell) +
                          ", n=" + format_double(row.n) + "): " + what);
  };
  if (!(row.n > 1.0)) fail("n must exceed 1");
  for (double v : {row.closed_kR, row.open_kR_re, row.open_kR_im, row.L, row.gamma, row.q}) {
    if (!std::isfinite(v)) fail("non-finite value");
  }
  if (!(row.open_kR_re > 0.0)) fail("Re kR must be positive");
  if (!(row.open_kR_im < 0.0)) fail("Im kR must be negative");
  if (std::abs(row.gamma + 2.0 * row.open_kR_im) > 1e-12 * std::max(1.0, row.gamma)) fail("gamma != -2 Im kR");
  if (std::abs(row.L - (row.closed_kR - row.open_kR_re)) > 1e-12 * std::max(1.0, row.closed_kR)) {
    fail("L != closed_kR - Re kR");
  }
  if (row.k_T != double(row.m)) fail("k_T != m");
  if (std::abs(row.k_B - row.m / row.n) > 1e-12 * std::max(1.0, row.k_T)) fail("k_B != m/n");
  using analysis::BarrierClass;
  const double re = row.open_kR_re;
  const bool consistent =
      (row.cls == BarrierClass::above_barrier && (re >= row.k_T || row.m == 0)) ||
      (row.cls == BarrierClass::below_barrier && re > row.k_B && re < row.k_T) ||
      (row.cls == BarrierClass::sub_bottom && re <= row.k_B);
  if (!consistent) fail("class inconsistent with k_B/k_T bounds");
}

Table to_table(const std::vector<sweep::SweepRow>& rows) {
  Table t{sweep_columns(), {}};
  t.rows.reserve(rows.size());
  for (const auto& r : rows) {
    validate_row(r);
    t.rows.push_back({(long long)r.m, (long long)r.ell, r.n, r.closed_kR, r.open_kR_re,
                      r.open_kR_im, r.L, r.gamma, r.q, r.k_T, r.k_B,
                      std::string(r.ok() ? analysis::to_string(r.cls) : ""), r.error});
  }
  return t;
}

std::string emit_csv(const Table& table) {
  std::string out;
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    if (c) out.push_back(',');
    out += table.columns[c];
  }
  out.push_back('\n');
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out.push_back(',');
      const Cell& cell = row[c];
      if (auto* i = std::get_if<long long>(&cell)) {
        out += std::to_string(*i);
      } else if (auto* d = std::get_if<double>(&cell)) {
        out += format_double(*d);
      } else {
        out += sanitize(std::get<std::string>(cell));
      }
    }
    out.push_back('\n');
  }
  return out;
}

std::string emit_json(const Table& table) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t c = 0; c < row.size() && c < table.columns.size(); ++c) {
      const Cell& cell = row[c];
      if (auto* i = std::get_if<long long>(&cell)) {
        obj[table.columns[c]] = *i;
      } else if (auto* d = std::get_if<double>(&cell)) {
        obj[table.columns[c]] = std::isfinite(*d) ? nlohmann::ordered_json(*d) : nlohmann::ordered_json();
      } else {
        obj[table.columns[c]] = std::get<std::string>(cell);
      }
    }
    arr.push_back(std::move(obj));
  }
  return arr.dump(2) + "\n";
}

Table parse_csv(const std::string& text) {
  Table t;
  std::istringstream in(text);
  std::string line;
  auto split = [](const std::string& l) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : l) {
      if (ch == ',') {
        parts.push_back(cur);
        cur.clear();
      } else {
        cur.push_back(ch);
      }
    }
    parts.push_back(cur);
    return parts;
  };
  if (!std::getline(in, line)) return t;
  t.columns = split(line);
  while (std::getline(in, line)) {
    auto parts = split(line);
    if (parts.size() != t.columns.size()) throw InvalidArgument("CSV row width does not match header");
    std::vector<Cell> row;
    row.reserve(parts.size());
    for (auto& p : parts) row.push_back(parse_cell(p));
    t.rows.push_back(std::move(row));
  }
  return t;
}

void write_file_atomic(const std::string& path, const std::string& bytes) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot open " + tmp.string() + " for writing");
    out.write(bytes.data(), std::streamsize(bytes.size()));
    out.flush();
    if (!out) throw Error("write failed for " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp);
    throw Error("rename to " + path + " failed: " + ec.message());
  }
}

}  // namespace diskres::io
