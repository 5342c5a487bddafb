#ifndef HOMAREA_IO_HPP
#define HOMAREA_IO_HPP

#include "homarea/homotopy.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace homarea {

enum class CurveKind { paths, cycles };

/// Text format, one field per line (point lists may continue on later lines):
///
///     kind: paths            # or cycles
///     P: [0, 0] [4, 0]
///     Q: [0, 0] [2, 2] [4, 0]
///     sphere_area: 100       # optional
///
/// Coordinates are integers, decimals ("-2.5", "1e-3") or fractions ("1/3").
struct CurveFile {
    CurveKind kind = CurveKind::paths;
    Polyline p;
    Polyline q;
    std::optional<Rational> sphere_area;
};

/// Throws ParseError with a 1-based line and column.
CurveFile parse_curve_file(std::string_view text);
/// Throws InputError when the file cannot be read.
CurveFile read_curve_file(const std::string &path);
std::string serialize_curve_file(const CurveFile &file);

/// Deterministic SVG of both curves over their cells, coloured and labelled by
/// the winding number of P - Q, with anchors as circles.
std::string render_svg(const CurveFile &file, const std::vector<Point> &anchors);

/// Command-line entry point; returns the process exit code
/// (0 ok, 1 check mismatch, 2 input error, 3 internal error).
int run_command(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace homarea

#endif
