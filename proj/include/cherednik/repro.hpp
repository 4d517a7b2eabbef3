#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "cherednik/homspaces.hpp"
#include "cherednik/singular_constructors.hpp"

namespace cherednik {

/// Directory holding the bundled golden files (configured at build time).
std::filesystem::path data_dir();

/// True iff a = lambda * b for some nonzero rational lambda (both nonzero).
bool same_up_to_scalar(const ModElem& a, const ModElem& b);

/// Exchanges the v_T1 and v_T2 labels of every term (identity for Row/Col).
ModElem swap_slot_labels(const ModElem& e);

/// True iff `expected` is a scalar multiple of the image of some domain
/// generator under h, optionally after exchanging the slot labels.
bool matches_generator(const HomMap& h, const ModElem& expected, bool allow_slot_swap);

struct Example35Golden {
  ParamsPtr params;
  Label label;
  CaseTag tag;
  std::vector<Rational> s, a, b;
  ModElem polynomial;
};

Example35Golden load_example35(const std::filesystem::path& path);

struct Example35Report {
  RecSystem system;
  ModElem polynomial;
  bool s_ok = false, a_ok = false, b_ok = false, polynomial_ok = false, singular = false;
  bool ok() const { return s_ok && a_ok && b_ok && polynomial_ok && singular; }
};

Example35Report check_example35(const Example35Golden& g);

struct GoldenRow {
  int row = 0;
  Label from;
  Label to;
  int degree = 0;
  /// The expected generator image.
  ModElem image;
  /// The polynomial as printed, when it differs from `image`.
  std::optional<ModElem> printed;
  std::string note;
};

struct Example36Golden {
  ParamsPtr params;
  std::vector<GoldenRow> rows;
};

Example36Golden load_example36(const std::filesystem::path& path);

struct RowCheck {
  int row = 0;
  bool found = false;
  bool degree_ok = false;
  /// Against the golden image.
  bool image_ok = false;
  /// Against the printed polynomial (same as image_ok when none is recorded).
  bool printed_ok = false;
  bool singular = false;
  std::optional<HomMap> map;
};

struct Example36Report {
  std::size_t edge_count = 0;
  std::vector<RowCheck> rows;
  /// Fired single-condition edges matching no golden row.
  std::vector<DiagramEdge> extra_edges;
  bool ok() const;
};

Example36Report check_example36(const Example36Golden& g);

}  // namespace cherednik
