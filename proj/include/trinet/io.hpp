// File formats:
//   .lsq  line 1: n; n rows of n integers; optional trailing "identity <e>"
//   .bg3  line 1: "p q r"; line 2: three 0/1 half-edge flags;
//         then "D <pair> <i> <j>" balanced digons (pair in {12,23,13}) and
//         "T <a> <b> <c>" balanced triangles
//   .trn  line 1: n; n blocks (one per x) of n lines (one per m) of n
//         integers, entry b being t(x,m,b)
//   .pln  line 1: "N_points N_lines"; one line per line's point indices
// Parse failures throw ParseError with line diagnostics.

#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

#include "trinet/algebra.hpp"
#include "trinet/biased.hpp"
#include "trinet/plane.hpp"
#include "trinet/ternary.hpp"

namespace trinet {

struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_number, const std::string& what)
      : std::runtime_error("line " + std::to_string(line_number) + ": " + what),
        line(line_number) {}
};

struct LatinSquareFile {
  Quasigroup quasigroup;
  std::optional<int> identity;
};

LatinSquareFile read_lsq(std::istream& in);
void write_lsq(std::ostream& out, const Quasigroup& q, std::optional<int> identity = {});

BiasedGraph3 read_bg3(std::istream& in);
void write_bg3(std::ostream& out, const BiasedGraph3& g);

TernaryRing read_trn(std::istream& in);
void write_trn(std::ostream& out, const TernaryRing& ring);

// Reads the incidence lists and checks the plane axioms.
Plane read_pln(std::istream& in);
void write_pln(std::ostream& out, const Plane& plane);

LatinSquareFile read_lsq_file(const std::string& path);
BiasedGraph3 read_bg3_file(const std::string& path);
TernaryRing read_trn_file(const std::string& path);
Plane read_pln_file(const std::string& path);

}  // namespace trinet
