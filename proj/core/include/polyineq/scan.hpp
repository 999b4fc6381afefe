#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "polyineq/body.hpp"
#include "polyineq/config.hpp"

namespace polyineq {

enum class ScanKind {
    alpha_map,       // interior lattice: alpha + chord-ratio cross-check
    ellipse_map,     // interior lattice: worst-direction ellipse constant
    conjecture,      // oracle Bernstein factor vs the 2n/(w sqrt(1 - alpha^2)) factor
    squarecompare,   // simplex only: w E(x) sqrt(1 - alpha^2) vs sqrt(3 + sqrt 5)
    hypothesis,      // simplex d = 2 only: |D_y+ V * E - 1| over a direction fan
    oracle_compare   // oracle vs ellipse/ridge/layer bound family at probe points
};

// One record; fields not produced by the scan kind stay disengaged and
// serialize as empty CSV cells. Ratio fields are recomputable from the raw
// fields of the same row.
struct ScanRow {
    std::optional<double> x1, x2, y1, y2;
    std::optional<double> alpha, gamma, tau_y, w_min;
    std::optional<double> E_xy, E_x, ridge;
    std::optional<double> bound_ellipse, bound_krry, bound_conj;
    std::optional<double> oracle_bern, ratio_conj, gap_hyp;
    bool flagged = false;      // conjecture/hypothesis finding
    std::string error;         // per-row numeric failure, scan continues
};

struct ScanMetadata {
    std::string kind;
    std::string body;           // description string
    std::string body_json;      // schema document, lets plots rebuild the outline
    std::string config_json;
    std::uint64_t config_hash = 0;
    std::uint64_t seed = 0;
    std::string timestamp;      // left empty by run_scan to keep reports deterministic
    int degree = 0;             // n used by oracle-backed kinds, 0 otherwise
    int findings = 0;           // flagged rows (conjecture/hypothesis)
    int violations = 0;         // proven-inequality rows below the -1e-9 slack
};

struct ScanReport {
    ScanMetadata metadata;
    std::vector<ScanRow> rows;
};

ScanReport run_scan(ScanKind kind, const ConvexBody& K, const Config& cfg = {});

enum class ReportFormat { csv, json };

void write_report(const ScanReport& r, ReportFormat format, const std::string& path);
std::string report_to_string(const ScanReport& r, ReportFormat format);

// JSON round-trip (CSV is write-only).
ScanReport read_report_json(const std::string& path);

extern const char* const kCsvHeader;
const char* scan_kind_name(ScanKind kind);
ScanKind scan_kind_from_name(const std::string& name);

}  // namespace polyineq
