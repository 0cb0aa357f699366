#pragma once

#include <string>
#include <vector>

#include "pelastica/curve.hpp"
#include "pelastica/verify.hpp"

namespace pelastica::io {

// Shortest round-trip decimal form; locale-independent.
std::string format_double(double v);

// Write via temp file + rename so readers never observe partial output.
void write_file_atomic(const std::string& path, const std::string& content);

std::string trace_csv(const Trace& tr);
std::string trace_json(const Trace& tr);

// Disk-model rendering: Poincare disk for H^2 (pole marker at the center),
// once-punctured disk for H^2_1 (puncture marker); unit disk inscribed in a
// fixed 1000x1000 viewport, boundary circle drawn.
std::string trace_svg(const Trace& tr);
std::string family_svg(const std::vector<FamilyEntry>& family, SpaceForm space);

std::string roots_json(const ElasticaParams& params, const RootData& roots, double a_star_value);
std::string closure_json(const ClosureResult& res, SpaceForm space, double p);
std::string closure_csv(const ClosureResult& res, SpaceForm space, double p);
std::string circle_json(double p, SpaceForm space, const CircleData& c);

struct ScanRow {
    double a = 0.0;
    double lambda = 0.0;
    double energy_m1 = 0.0;
    bool decreasing = true;
};
std::string scan_csv(const std::vector<ScanRow>& rows);
std::string scan_json(const std::vector<ScanRow>& rows, double p, SpaceForm space);

std::string family_csv(const std::vector<FamilyEntry>& family);
std::string family_json(const std::vector<FamilyEntry>& family, SpaceForm space, int n, int m);

std::string reports_json(const std::vector<VerificationReport>& reports);
std::string reports_table(const std::vector<VerificationReport>& reports);

}  // namespace pelastica::io
