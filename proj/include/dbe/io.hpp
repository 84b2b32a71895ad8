#pragma once

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "dbe/certificate.hpp"
#include "dbe/graph.hpp"
#include "dbe/twins.hpp"

namespace dbe {

namespace detail {

// Splits into physical lines and enforces the trailing newline every text
// format of this project requires.
inline std::vector<std::string> read_lines(std::istream& in, const std::string& source) {
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  if (text.empty()) throw parse_error(source, 1, "empty input");
  if (text.back() != '\n')
    throw parse_error(source, 1, "missing trailing newline");
  std::vector<std::string> lines;
  std::string cur;
  for (char ch : text) {
    if (ch == '\n') {
      lines.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  return lines;
}

inline bool parse_ints(const std::string& s, std::vector<long long>& out) {
  out.clear();
  std::istringstream iss(s);
  long long x;
  while (iss >> x) out.push_back(x);
  if (!iss.eof()) return false;  // trailing garbage
  return !out.empty();
}

}  // namespace detail

/// Graph text format: `n m` on the first line, then m lines `u v` with
/// 0 <= u < v < n. Lines starting with `#` are ignored.
inline graph read_graph(std::istream& in, const std::string& source = "<input>") {
  const auto lines = detail::read_lines(in, source);
  graph g;
  long long want_edges = -1, got_edges = 0;
  std::vector<long long> nums;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const int line_no = static_cast<int>(i) + 1;
    const std::string& s = lines[i];
    if (!s.empty() && s[0] == '#') continue;
    if (want_edges < 0) {
      if (!detail::parse_ints(s, nums) || nums.size() != 2)
        throw parse_error(source, line_no, "expected header `n m`");
      if (nums[0] < 0 || nums[1] < 0)
        throw parse_error(source, line_no, "negative count in header");
      g = graph(static_cast<int>(nums[0]));
      want_edges = nums[1];
      continue;
    }
    if (got_edges == want_edges)
      throw parse_error(source, line_no, "unexpected line after last edge");
    if (!detail::parse_ints(s, nums) || nums.size() != 2)
      throw parse_error(source, line_no, "expected edge `u v`");
    const long long u = nums[0], v = nums[1];
    if (u < 0 || v < 0 || u >= g.n() || v >= g.n())
      throw parse_error(source, line_no, "edge endpoint out of range");
    if (u >= v)
      throw parse_error(source, line_no, "edge must satisfy u < v");
    try {
      g.add_edge(static_cast<vertex>(u), static_cast<vertex>(v));
    } catch (const duplicate_edge&) {
      throw parse_error(source, line_no, "duplicate edge");
    }
    ++got_edges;
  }
  if (want_edges < 0) throw parse_error(source, 1, "missing header `n m`");
  if (got_edges != want_edges)
    throw parse_error(source, static_cast<int>(lines.size()),
                      "expected " + std::to_string(want_edges) + " edges, got " +
                          std::to_string(got_edges));
  return g;
}

inline void write_graph(const graph& g, std::ostream& out) {
  out << g.n() << ' ' << g.m() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

/// Split trace format: `base n m`, the base edges, one `split v` per step,
/// then `seed s`.
inline void write_trace(const split_trace& t, std::ostream& out) {
  out << "base " << t.base.n() << ' ' << t.base.m() << '\n';
  for (const auto& [u, v] : t.base.edges()) out << u << ' ' << v << '\n';
  for (vertex v : t.steps) out << "split " << v << '\n';
  out << "seed " << t.seed << '\n';
}

inline split_trace read_trace(std::istream& in, const std::string& source = "<input>") {
  const auto lines = detail::read_lines(in, source);
  split_trace t;
  std::vector<long long> nums;
  std::size_t i = 0;
  {
    std::istringstream iss(lines[i]);
    std::string tag;
    long long n = -1, m = -1;
    if (!(iss >> tag >> n >> m) || tag != "base" || n < 0 || m < 0)
      throw parse_error(source, 1, "expected header `base n m`");
    t.base = graph(static_cast<int>(n));
    ++i;
    for (long long e = 0; e < m; ++e, ++i) {
      if (i >= lines.size())
        throw parse_error(source, static_cast<int>(lines.size()), "missing base edges");
      if (!detail::parse_ints(lines[i], nums) || nums.size() != 2)
        throw parse_error(source, static_cast<int>(i) + 1, "expected edge `u v`");
      t.base.add_edge(static_cast<vertex>(nums[0]), static_cast<vertex>(nums[1]));
    }
  }
  bool have_seed = false;
  for (; i < lines.size(); ++i) {
    std::istringstream iss(lines[i]);
    std::string tag;
    if (!(iss >> tag))
      throw parse_error(source, static_cast<int>(i) + 1, "unexpected blank line");
    if (tag == "split") {
      long long v;
      if (have_seed || !(iss >> v))
        throw parse_error(source, static_cast<int>(i) + 1, "bad `split v` line");
      t.steps.push_back(static_cast<vertex>(v));
    } else if (tag == "seed") {
      unsigned long long s;
      if (have_seed || !(iss >> s))
        throw parse_error(source, static_cast<int>(i) + 1, "bad `seed s` line");
      t.seed = s;
      have_seed = true;
    } else {
      throw parse_error(source, static_cast<int>(i) + 1, "unknown directive `" + tag + "`");
    }
  }
  if (!have_seed)
    throw parse_error(source, static_cast<int>(lines.size()), "missing `seed s` line");
  return t;
}

/// Certificate format: header `certificate <kind> n=<n> count=<c>`, then one
/// member set per line as ascending space-separated vertex ids.
inline void write_certificate(const certificate& c, std::ostream& out) {
  out << "certificate " << to_string(c.kind) << " n=" << c.n
      << " count=" << c.claimed_count << '\n';
  for (const auto& members : c.lines) {
    for (std::size_t i = 0; i < members.size(); ++i)
      out << (i ? " " : "") << members[i];
    out << '\n';
  }
}

inline certificate read_certificate(std::istream& in,
                                    const std::string& source = "<input>") {
  const auto lines = detail::read_lines(in, source);
  certificate c;
  {
    std::istringstream iss(lines[0]);
    std::string tag, kind_word, n_field, count_field;
    if (!(iss >> tag >> kind_word >> n_field >> count_field) || tag != "certificate" ||
        n_field.rfind("n=", 0) != 0 || count_field.rfind("count=", 0) != 0)
      throw parse_error(source, 1, "expected `certificate <kind> n=<n> count=<c>`");
    const auto kind = certificate_kind_from(kind_word);
    if (!kind) throw parse_error(source, 1, "unknown certificate kind `" + kind_word + "`");
    c.kind = *kind;
    try {
      c.n = std::stoi(n_field.substr(2));
      c.claimed_count = std::stoll(count_field.substr(6));
    } catch (const std::exception&) {
      throw parse_error(source, 1, "bad number in header");
    }
  }
  std::vector<long long> nums;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (!detail::parse_ints(lines[i], nums))
      throw parse_error(source, static_cast<int>(i) + 1, "expected a member set");
    c.lines.emplace_back(nums.begin(), nums.end());
  }
  return c;
}

// File wrappers.

inline graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open " + path);
  return read_graph(in, path);
}

inline void write_graph_file(const graph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw io_error("cannot write " + path);
  write_graph(g, out);
}

inline split_trace read_trace_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open " + path);
  return read_trace(in, path);
}

inline void write_trace_file(const split_trace& t, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw io_error("cannot write " + path);
  write_trace(t, out);
}

inline certificate read_certificate_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open " + path);
  return read_certificate(in, path);
}

inline void write_certificate_file(const certificate& c, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw io_error("cannot write " + path);
  write_certificate(c, out);
}

}  // namespace dbe
