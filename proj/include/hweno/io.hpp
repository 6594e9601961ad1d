#pragma once

#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hweno/field.hpp"
#include "hweno/grid.hpp"
#include "hweno/indicator.hpp"

namespace hweno {

// ---------------------------------------------------------------------------
// small text helpers; all writers go through the atomic temp-file + rename
// ---------------------------------------------------------------------------

inline std::string fmt_g17(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline void atomic_write(const std::string& path, const std::string& body) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw std::runtime_error("cannot open for write: " + tmp);
    os << body;
    if (!os) throw std::runtime_error("write failed: " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw std::runtime_error("rename failed: " + path);
}

// parsed 1D solution snapshot (also the in-memory type compare works on)
struct Solution1 {
  int n_cells = 0, n_vars = 0;
  double x_lo = 0, x_hi = 0, time = 0;
  std::vector<double> ubar;  // [var * n_cells + i]
  std::vector<double> vbar;
  std::vector<int> flag;
  double u(int m, int i) const { return ubar[m * n_cells + i]; }
};

inline std::string solution1_to_text(const Grid1& g, const MomentField1& f,
                                     const TroubleMap1& tm, double time,
                                     const std::string& problem) {
  std::ostringstream os;
  os << "# 1d moment solution\n";
  os << "# problem " << problem << "\n";
  os << "n_cells " << g.n_cells << "\n";
  os << "x_lo " << fmt_g17(g.x_lo) << "\n";
  os << "x_hi " << fmt_g17(g.x_hi) << "\n";
  os << "n_vars " << f.n_vars << "\n";
  os << "time " << fmt_g17(time) << "\n";
  os << "# columns: x_center ubar[0..n_vars) vbar[0..n_vars) flag\n";
  for (int i = 0; i < g.n_cells; ++i) {
    os << fmt_g17(g.center(i));
    for (int m = 0; m < f.n_vars; ++m) os << ' ' << fmt_g17(f.ubar(m, i));
    for (int m = 0; m < f.n_vars; ++m) os << ' ' << fmt_g17(f.vbar(m, i));
    os << ' ' << (tm.troubled(i) ? 1 : 0) << "\n";
  }
  return os.str();
}

inline void write_solution1(const std::string& path, const Grid1& g,
                            const MomentField1& f, const TroubleMap1& tm,
                            double time, const std::string& problem) {
  atomic_write(path, solution1_to_text(g, f, tm, time, problem));
}

inline Solution1 read_solution1(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open: " + path);
  Solution1 s;
  std::string line;
  // header
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string key;
    ls >> key;
    if (key == "n_cells") ls >> s.n_cells;
    else if (key == "x_lo") ls >> s.x_lo;
    else if (key == "x_hi") ls >> s.x_hi;
    else if (key == "n_vars") ls >> s.n_vars;
    else if (key == "time") {
      ls >> s.time;
      break;
    }
  }
  if (s.n_cells <= 0 || s.n_vars <= 0)
    throw std::runtime_error("malformed solution header: " + path);
  s.ubar.assign(static_cast<std::size_t>(s.n_vars) * s.n_cells, 0.0);
  s.vbar.assign(s.ubar.size(), 0.0);
  s.flag.assign(s.n_cells, 0);
  int i = 0;
  while (std::getline(is, line) && i < s.n_cells) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    double x;
    ls >> x;
    for (int m = 0; m < s.n_vars; ++m) ls >> s.ubar[m * s.n_cells + i];
    for (int m = 0; m < s.n_vars; ++m) ls >> s.vbar[m * s.n_cells + i];
    ls >> s.flag[i];
    ++i;
  }
  if (i != s.n_cells)
    throw std::runtime_error("truncated solution file: " + path);
  return s;
}

inline void write_solution2(const std::string& path, const Grid2& g,
                            const MomentField2& f, const TroubleMap2& tm,
                            const std::vector<std::uint8_t>* fluid,
                            double time, const std::string& problem) {
  std::ostringstream os;
  os << "# 2d structured cell-average solution (row-major, x fastest)\n";
  os << "# problem " << problem << "\n";
  os << "nx " << g.nx << "\n";
  os << "ny " << g.ny << "\n";
  os << "x_lo " << fmt_g17(g.x_lo) << "\n";
  os << "x_hi " << fmt_g17(g.x_hi) << "\n";
  os << "y_lo " << fmt_g17(g.y_lo) << "\n";
  os << "y_hi " << fmt_g17(g.y_hi) << "\n";
  os << "n_vars " << f.n_vars << "\n";
  os << "time " << fmt_g17(time) << "\n";
  os << "# columns: x_center y_center ubar[0..n_vars) flag solid\n";
  for (int j = 0; j < g.ny; ++j)
    for (int i = 0; i < g.nx; ++i) {
      os << fmt_g17(g.xc(i)) << ' ' << fmt_g17(g.yc(j));
      for (int m = 0; m < f.n_vars; ++m) os << ' ' << fmt_g17(f.ubar(m, i, j));
      const bool solid = fluid && !(*fluid)[tm.at(i, j)];
      os << ' ' << (tm.troubled(i, j) ? 1 : 0) << ' ' << (solid ? 1 : 0)
         << "\n";
    }
  atomic_write(path, os.str());
}

inline void write_flag_history(
    const std::string& path,
    const std::vector<std::pair<double, double>>& hist) {
  std::ostringstream os;
  os << "# step time flagged_fraction\n";
  for (std::size_t s = 0; s < hist.size(); ++s)
    os << s << ' ' << fmt_g17(hist[s].first) << ' '
       << fmt_g17(hist[s].second) << "\n";
  atomic_write(path, os.str());
}

inline void write_contour_levels(const std::string& path, double lo,
                                 double hi, int count) {
  std::ostringstream os;
  os << "# equally spaced contour levels\n";
  for (int k = 0; k < count; ++k)
    os << fmt_g17(lo + (hi - lo) * k / (count - 1)) << "\n";
  atomic_write(path, os.str());
}

// plain key = value configuration, # starts a comment
inline std::map<std::string, std::string> parse_config_file(
    const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open config: " + path);
  std::map<std::string, std::string> kv;
  std::string line;
  while (std::getline(is, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    const std::string val = trim(line.substr(eq + 1));
    if (!key.empty()) kv[key] = val;
  }
  return kv;
}

}  // namespace hweno
