#pragma once

#include <stdexcept>
#include <string>

namespace dbe {

// Base class for everything thrown by this library.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct vertex_out_of_range : error {
  explicit vertex_out_of_range(int v)
      : error("vertex out of range: " + std::to_string(v)) {}
};

struct self_loop : error {
  explicit self_loop(int v)
      : error("self-loop at vertex " + std::to_string(v)) {}
};

struct duplicate_edge : error {
  duplicate_edge(int u, int v)
      : error("duplicate edge (" + std::to_string(u) + ", " +
              std::to_string(v) + ")") {}
};

struct equal_endpoints : error {
  explicit equal_endpoints(int v)
      : error("line endpoints must differ, got vertex " + std::to_string(v) +
              " twice") {}
};

struct too_small : error {
  using error::error;
};

struct bad_parameter : error {
  using error::error;
};

// A (n, p, k) triple outside the legal range of the line lower bound.
struct illegal_triple : error {
  using error::error;
};

struct below_n0 : error {
  using error::error;
};

struct same_blob : error {
  using error::error;
};

struct invalid_partition : error {
  using error::error;
};

struct not_in_class : error {
  using error::error;
};

// Text-format errors; message carries the 1-based line number.
struct parse_error : error {
  parse_error(const std::string& source, int line_no, const std::string& what)
      : error(source + ":" + std::to_string(line_no) + ": " + what),
        line(line_no) {}
  int line;
};

struct io_error : error {
  using error::error;
};

}  // namespace dbe
