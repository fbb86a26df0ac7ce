#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include <json.hpp>

#include "qlift/bitmatrix.hpp"
#include "qlift/cover.hpp"
#include "qlift/intmatrix.hpp"
#include "qlift/presentation.hpp"

namespace qlift {

enum class MatrixFormat { alist, dense, dense_int };

/// ".alist" -> alist, ".zmat"/".int" -> dense_int, anything else -> dense.
MatrixFormat format_from_path(const std::filesystem::path& path);
MatrixFormat format_from_name(const std::string& name);
std::string to_string(MatrixFormat f);

// Parse errors carry "source:line: message" and ErrorKind::parse.

/// Sparse LDPC interchange: "cols rows", "max-col-deg max-row-deg", column
/// degrees, row degrees, then 1-based column and row lists (zero padding ignored).
BitMatrix parse_alist(std::istream& in, const std::string& source = "<input>");
void write_alist(std::ostream& out, const BitMatrix& m);

/// "rows cols" header, then row-major 0/1 entries.
BitMatrix parse_dense(std::istream& in, const std::string& source = "<input>");
void write_dense(std::ostream& out, const BitMatrix& m);

/// "rows cols" header, then row-major signed integers.
IntMatrix parse_int_matrix(std::istream& in, const std::string& source = "<input>");
void write_int_matrix(std::ostream& out, const IntMatrix& m);

BitMatrix read_bit_matrix(const std::filesystem::path& path, std::optional<MatrixFormat> format = std::nullopt);
IntMatrix read_int_matrix(const std::filesystem::path& path);
void write_bit_matrix(const std::filesystem::path& path, const BitMatrix& m, MatrixFormat format);
void write_int_matrix(const std::filesystem::path& path, const IntMatrix& m);

constexpr int schema_version = 1;

nlohmann::json presentation_to_json(const LiftPresentation& p);
/// Inverse of presentation_to_json; the forest is rebuilt from the tree flags.
LiftPresentation presentation_from_json(const nlohmann::json& j);

/// {"degree": t, "edges": [{"from", "to", "parallel", "perm"}]}, listing
/// non-identity edges only.
nlohmann::json voltages_to_json(const LiftPresentation& p, const VoltageAssignment& v);
/// Omitted edges default to the identity; assignments with non-identity tree
/// edges are gauge-normalized.
VoltageAssignment voltages_from_json(const nlohmann::json& j, const LiftPresentation& p);

nlohmann::json read_json(const std::filesystem::path& path);

struct MatrixRef {
  std::filesystem::path path;
  MatrixFormat format = MatrixFormat::dense;
};

/// JSON manifest. Matrix entries are a path string or {"path", "format"};
/// relative paths resolve against the manifest's directory. "presentation" is
/// "cone", "cellular" or a path to a presentation JSON file.
struct CodeManifest {
  MatrixRef hx;
  std::optional<MatrixRef> hz;
  std::optional<std::filesystem::path> hx_lift;
  std::optional<std::filesystem::path> hz_lift;
  std::optional<std::string> presentation;
  std::optional<std::filesystem::path> voltages;
};

CodeManifest parse_manifest(const std::filesystem::path& path);

}  // namespace qlift
