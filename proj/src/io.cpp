#include "pelastica/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace pelastica::io {

namespace {

using nlohmann::json;

const char* space_name(SpaceForm space) { return space.epsilon == 0 ? "h2" : "h12"; }

json sample_json(const CurveSample& cs) {
    return json{{"s", cs.s},
                {"kappa", cs.kappa},
                {"kappa_prime", cs.kappa_prime},
                {"theta", cs.theta},
                {"gamma", {cs.gamma.x, cs.gamma.y, cs.gamma.z}}};
}

std::string svg_coord(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

void svg_header(std::ostringstream& os) {
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"1000\" height=\"1000\" "
          "viewBox=\"0 0 1000 1000\">\n"
       << "<rect width=\"1000\" height=\"1000\" fill=\"white\"/>\n"
       << "<circle cx=\"500\" cy=\"500\" r=\"499\" fill=\"none\" stroke=\"#d02020\" "
          "stroke-width=\"1.5\"/>\n";
}

void svg_marker(std::ostringstream& os, SpaceForm space) {
    if (space.epsilon == 0) {
        // the pole (0,0,1) maps to the disk center
        os << "<circle cx=\"500\" cy=\"500\" r=\"4\" fill=\"#d02020\"/>\n";
    } else {
        // the puncture of the once-punctured disk
        os << "<circle cx=\"500\" cy=\"500\" r=\"4\" fill=\"none\" stroke=\"#d02020\" "
              "stroke-width=\"1.5\"/>\n";
    }
}

void svg_curve(std::ostringstream& os, const Trace& tr, const char* color) {
    os << "<path fill=\"none\" stroke=\"" << color << "\" stroke-width=\"2\" d=\"";
    bool first = true;
    for (const auto& cs : tr.samples) {
        const auto [X, Y] = tr.params.space.epsilon == 0 ? poincare_project(cs.gamma)
                                                         : punctured_project(cs.gamma);
        os << (first ? 'M' : 'L') << svg_coord(500.0 + 499.0 * X) << ' '
           << svg_coord(500.0 - 499.0 * Y);
        first = false;
    }
    os << "\"/>\n";
}

}  // namespace

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

void write_file_atomic(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("write_file_atomic: cannot open " + tmp);
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!out) throw std::runtime_error("write_file_atomic: write failed for " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        throw std::runtime_error("write_file_atomic: rename to " + path + " failed");
    }
}

std::string trace_csv(const Trace& tr) {
    std::ostringstream os;
    os << "s,kappa,kappa_prime,theta,x,y,z\n";
    for (const auto& cs : tr.samples) {
        os << format_double(cs.s) << ',' << format_double(cs.kappa) << ','
           << format_double(cs.kappa_prime) << ',' << format_double(cs.theta) << ','
           << format_double(cs.gamma.x) << ',' << format_double(cs.gamma.y) << ','
           << format_double(cs.gamma.z) << '\n';
    }
    return os.str();
}

std::string trace_json(const Trace& tr) {
    json j;
    j["space"] = space_name(tr.params.space);
    j["p"] = tr.params.p;
    j["a"] = tr.params.a;
    j["roots"] = {{"beta", tr.roots.beta}, {"alpha", tr.roots.alpha},
                  {"kappa_c", tr.roots.kappa_c}};
    j["period_rho"] = tr.period_rho;
    j["lambda"] = tr.lambda;
    j["m"] = tr.m;
    j["samples"] = json::array();
    for (const auto& cs : tr.samples) j["samples"].push_back(sample_json(cs));
    return j.dump(2) + "\n";
}

std::string trace_svg(const Trace& tr) {
    std::ostringstream os;
    svg_header(os);
    svg_marker(os, tr.params.space);
    svg_curve(os, tr, "#1040c0");
    os << "</svg>\n";
    return os.str();
}

std::string family_svg(const std::vector<FamilyEntry>& family, SpaceForm space) {
    static const char* colors[] = {"#1040c0", "#108040", "#c08010", "#8010c0",
                                   "#c01040", "#10a0a0"};
    std::ostringstream os;
    svg_header(os);
    svg_marker(os, space);
    int ci = 0;
    for (const auto& entry : family) {
        if (entry.curve) svg_curve(os, *entry.curve, colors[ci % 6]);
        ++ci;
    }
    os << "</svg>\n";
    return os.str();
}

std::string roots_json(const ElasticaParams& params, const RootData& roots, double a_star_value) {
    json j;
    j["space"] = space_name(params.space);
    j["p"] = params.p;
    j["a"] = params.a;
    j["a_star"] = a_star_value;
    j["beta"] = roots.beta;
    j["alpha"] = roots.alpha;
    j["kappa_c"] = roots.kappa_c;
    return j.dump(2) + "\n";
}

std::string closure_json(const ClosureResult& res, SpaceForm space, double p) {
    json j;
    j["space"] = space_name(space);
    j["p"] = p;
    j["n"] = res.n;
    j["m"] = res.m;
    j["q"] = res.q;
    j["a_q"] = res.a_q;
    j["lambda_at_aq"] = res.lambda_at_aq;
    j["closure_defect"] = res.closure_defect;
    j["monotone_bracket"] = res.monotone_bracket;
    return j.dump(2) + "\n";
}

std::string closure_csv(const ClosureResult& res, SpaceForm space, double p) {
    std::ostringstream os;
    os << "space,p,n,m,q,a_q,lambda_at_aq,closure_defect\n";
    os << space_name(space) << ',' << format_double(p) << ',' << res.n << ',' << res.m << ','
       << format_double(res.q) << ',' << format_double(res.a_q) << ','
       << format_double(res.lambda_at_aq) << ',' << format_double(res.closure_defect) << '\n';
    return os.str();
}

std::string circle_json(double p, SpaceForm space, const CircleData& c) {
    json j;
    j["space"] = space_name(space);
    j["p"] = p;
    j["kappa"] = c.kappa;
    j["radius_L3"] = c.radius_L3;
    j["height_z"] = c.height_z;
    return j.dump(2) + "\n";
}

std::string scan_csv(const std::vector<ScanRow>& rows) {
    std::ostringstream os;
    os << "a,lambda,energy_m1,decreasing\n";
    for (const auto& r : rows) {
        os << format_double(r.a) << ',' << format_double(r.lambda) << ','
           << format_double(r.energy_m1) << ',' << (r.decreasing ? 1 : 0) << '\n';
    }
    return os.str();
}

std::string scan_json(const std::vector<ScanRow>& rows, double p, SpaceForm space) {
    json j;
    j["space"] = space_name(space);
    j["p"] = p;
    j["rows"] = json::array();
    for (const auto& r : rows) {
        j["rows"].push_back({{"a", r.a},
                             {"lambda", r.lambda},
                             {"energy_m1", r.energy_m1},
                             {"decreasing", r.decreasing}});
    }
    return j.dump(2) + "\n";
}

std::string family_csv(const std::vector<FamilyEntry>& family) {
    std::ostringstream os;
    os << "p,s,kappa,kappa_prime,theta,x,y,z\n";
    for (const auto& entry : family) {
        if (!entry.curve) continue;
        for (const auto& cs : entry.curve->samples) {
            os << format_double(entry.p) << ',' << format_double(cs.s) << ','
               << format_double(cs.kappa) << ',' << format_double(cs.kappa_prime) << ','
               << format_double(cs.theta) << ',' << format_double(cs.gamma.x) << ','
               << format_double(cs.gamma.y) << ',' << format_double(cs.gamma.z) << '\n';
        }
    }
    return os.str();
}

std::string family_json(const std::vector<FamilyEntry>& family, SpaceForm space, int n, int m) {
    json j;
    j["space"] = space_name(space);
    j["n"] = n;
    j["m"] = m;
    j["members"] = json::array();
    for (const auto& entry : family) {
        json e;
        e["p"] = entry.p;
        if (!entry.error.empty()) {
            e["error"] = entry.error;
        } else if (entry.closure && entry.curve) {
            e["a_q"] = entry.closure->a_q;
            e["lambda_at_aq"] = entry.closure->lambda_at_aq;
            e["closure_defect"] = entry.closure->closure_defect;
            double ext = 0.0, disk_ext = 0.0;
            for (const auto& cs : entry.curve->samples) {
                ext = std::max(ext, std::hypot(cs.gamma.x, cs.gamma.y));
                const auto [X, Y] = space.epsilon == 0 ? poincare_project(cs.gamma)
                                                       : punctured_project(cs.gamma);
                disk_ext = std::max(disk_ext, std::hypot(X, Y));
            }
            e["planar_extent"] = ext;
            e["disk_extent"] = disk_ext;
        }
        j["members"].push_back(e);
    }
    return j.dump(2) + "\n";
}

std::string reports_json(const std::vector<VerificationReport>& reports) {
    json j = json::array();
    for (const auto& r : reports) {
        json e;
        e["check"] = r.check_name;
        e["max_residual"] = r.max_residual;
        e["threshold"] = r.threshold;
        e["passed"] = r.passed;
        e["metadata"] = r.metadata;
        j.push_back(e);
    }
    return j.dump(2) + "\n";
}

std::string reports_table(const std::vector<VerificationReport>& reports) {
    std::ostringstream os;
    for (const auto& r : reports) {
        char line[160];
        std::snprintf(line, sizeof line, "%-24s %-6s  max_residual=%.3e  threshold=%.3e\n",
                      r.check_name.c_str(), r.passed ? "PASS" : "FAIL", r.max_residual,
                      r.threshold);
        os << line;
        auto it = r.metadata.find("constant_variant");
        if (it != r.metadata.end()) {
            os << "    cross variant: " << it->second;
            auto ot = r.metadata.find("orientation");
            if (ot != r.metadata.end()) os << " (" << ot->second << " orientation)";
            os << '\n';
        }
    }
    return os.str();
}

}  // namespace pelastica::io
